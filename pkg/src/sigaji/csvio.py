"""Per-table CSV import/export with all-or-nothing semantics.

Export writes the table's persistence field names as the header and rows
in ascending key order, amounts as bare integers.  Import parses and
validates every row (diagnostics carry 1-based line numbers, the header
being line 1), then rebuilds the whole store with the table replaced; the
caller only sees a new store if every check passed, so a bad row can
never leave partial state.  Auto-increment counters are bumped past the
largest imported id and never decrease.
"""

from __future__ import annotations

import csv
import io

from . import schema
from .domain import SlipGaji, require_money, validate_width
from .errors import PayrollError, ValidationError
from .store import Store, validate_slip_fields, verify_slip_totals


def export_table(store: Store, table: str) -> bytes:
    spec = schema.TABLES.get(table)
    if spec is None:
        raise ValidationError(f"unknown table {table!r}")
    doc = store.to_document()
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(spec.field_names())
    for row in doc[table]:
        writer.writerow([row[name] for name in spec.field_names()])
    return buffer.getvalue().encode("utf-8")


def _parse_cell(field: schema.FieldSpec, text: str, where: str) -> object:
    if field.kind in ("auto_id", "ref", "money", "count"):
        if not text.isdigit():
            raise ValidationError(f"{where}: {field.name} must be a bare integer, got {text!r}")
        return int(text)
    return text


def _check_row(store: Store, spec: schema.TableSpec, row: dict,
               seen: dict, where: str) -> None:
    """Row-level integrity with line context.

    References out of the imported table point at tables the import does
    not touch, so they are checked against the current store; references
    into the imported table are caught by the final whole-store gate.
    """
    key = row[spec.pk]
    if key in seen["keys"]:
        raise ValidationError(f"{where}: duplicate {spec.pk} {key!r}")
    seen["keys"].add(key)
    if spec.name in schema.MASTER_TABLES:
        if key < 1:
            raise ValidationError(f"{where}: {spec.pk} must be >= 1")
        name_field = spec.fields[1]
        nama = validate_width(row[name_field.name], name_field.width,
                              f"{spec.name}.{name_field.name}")
        if nama in seen["names"]:
            raise ValidationError(f"{where}: duplicate {name_field.name} {nama!r}")
        seen["names"].add(nama)
        require_money(row[spec.fields[2].name], spec.fields[2].name)
    elif spec.name == "dosen":
        validate_width(row["nii"], 10, "dosen.nii")
        validate_width(row["nama_dosen"], 25, "dosen.nama_dosen")
        for field in spec.fields:
            if field.kind == "ref" and row[field.name] not in getattr(store, field.ref):
                raise ValidationError(
                    f"{where}: dosen.{field.name} references missing "
                    f"{field.ref} id {row[field.name]}"
                )
    else:  # gaji
        if key < 1:
            raise ValidationError(f"{where}: {spec.pk} must be >= 1")
        slip = SlipGaji(**row)
        validate_slip_fields(slip)
        if slip.nii not in store.dosen:
            raise ValidationError(
                f"{where}: gaji.nii references missing dosen {slip.nii!r}"
            )
        pair = (slip.nii, slip.periode)
        if pair in seen["periods"]:
            raise ValidationError(
                f"{where}: duplicate slip for nii {slip.nii} periode {slip.periode}"
            )
        seen["periods"].add(pair)
        verify_slip_totals(slip, store.paper_compat)


def import_table(store: Store, table: str, data: bytes) -> Store:
    """Return a new store with ``table`` replaced by the CSV content.

    The input store is never modified; any invalid row or any resulting
    invariant violation aborts with a diagnostic.
    """
    spec = schema.TABLES.get(table)
    if spec is None:
        raise ValidationError(f"unknown table {table!r}")
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ValidationError(f"CSV is not valid UTF-8: {exc}") from exc

    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValidationError("CSV is empty (header line required)") from None
    if set(header) != set(spec.field_names()):
        raise ValidationError(
            f"line 1: header must hold exactly the fields "
            f"{list(spec.field_names())}, got {header}"
        )
    by_name = {name: header.index(name) for name in spec.field_names()}

    rows: list[dict] = []
    seen: dict = {"keys": set(), "names": set(), "periods": set()}
    for line_no, cells in enumerate(reader, start=2):
        if not cells:
            continue  # trailing blank line
        where = f"line {line_no}"
        if len(cells) != len(header):
            raise ValidationError(f"{where}: expected {len(header)} cells, got {len(cells)}")
        row = {
            field.name: _parse_cell(field, cells[by_name[field.name]], where)
            for field in spec.fields
        }
        try:
            _check_row(store, spec, row, seen, where)
        except ValidationError as exc:
            if exc.message.startswith(where):
                raise
            raise ValidationError(f"{where}: {exc.message}") from exc
        rows.append(row)

    doc = store.to_document()
    doc[table] = sorted(rows, key=lambda row: row[spec.pk])
    if spec.counter is not None:
        max_id = max((row[spec.pk] for row in rows), default=0)
        doc["counters"][spec.counter] = max(doc["counters"][spec.counter], max_id + 1)
    try:
        return Store.from_document(doc, store.paper_compat)
    except PayrollError as exc:
        raise ValidationError(f"import aborted: {exc.message}") from exc
