"""In-memory relational store for the seven payroll tables.

Holds the five master tables, the lecturer table and the slip table with
auto-increment counters, primary-key uniqueness and referential integrity
checked on every mutation.  Persists to a single canonical JSON document;
loading re-validates every invariant and never yields a partially valid
store.

Mutating methods validate everything before touching state, so a failed
call leaves the store exactly as it was.  The store itself is not
synchronized; callers that share one instance across threads must honor a
single-writer / multiple-reader contract (the HTTP service serializes all
handlers on one lock, the CLI takes an exclusive file lock).
"""

from __future__ import annotations

import dataclasses
import json
import os
import tempfile
from typing import Iterable

from . import schema
from .domain import (
    MONEY_MAX,
    Dosen,
    Golongan,
    Jfa,
    Jkhs,
    Jstr,
    Pendidikan,
    SlipGaji,
    canonical_periode,
    money_sum,
    require_count,
    require_money,
    validate_width,
)
from .errors import (
    ConflictError,
    NotFoundError,
    ReferentialConflictError,
    ValidationError,
)

MASTER_CLASSES = {
    "golongan": Golongan,
    "jfa": Jfa,
    "jstr": Jstr,
    "jkhs": Jkhs,
    "pendidikan": Pendidikan,
}

# dosen field that references each master table, derived from the manifest
DOSEN_REF_FIELDS = {f.ref: f.name for f in schema.DOSEN.fields if f.kind == "ref"}


def verify_slip_totals(slip: SlipGaji, paper_compat: bool = False) -> None:
    """Check the stored payroll identity by re-adding the snapshot fields.

    gross = gapok + tunj_fa + tunj_str + tunj_khs + hon_mgjr; the stored
    gaji_bersih must equal gross minus the three deductions (or, under
    paper-compat mode, gross itself).  Deductions may never exceed gross
    in either mode.
    """
    gross = money_sum(
        [slip.gapok, slip.tunj_fa, slip.tunj_str, slip.tunj_khs, slip.hon_mgjr],
        "gaji_kotor",
    )
    deductions = money_sum([slip.pot_kop, slip.arisan, slip.pot_lain], "potongan")
    if deductions > gross:
        raise ValidationError(
            f"slip deductions {deductions} exceed gross {gross} for nii {slip.nii}"
        )
    expected = gross if paper_compat else gross - deductions
    if slip.gaji_bersih != expected:
        raise ValidationError(
            f"slip gaji_bersih {slip.gaji_bersih} does not satisfy the payroll "
            f"identity (expected {expected}) for nii {slip.nii}"
        )


def validate_slip_fields(slip: SlipGaji) -> None:
    validate_width(slip.nii, 10, "gaji.nii")
    validate_width(slip.nama_dosen, 25, "gaji.nama_dosen")
    validate_width(slip.periode, 15, "gaji.periode")
    if canonical_periode(slip.periode) != slip.periode:
        raise ValidationError(f"gaji.periode not canonical: {slip.periode!r}")
    require_count(slip.sks_mgjr, "gaji.sks_mgjr")
    for field in ("gapok", "tunj_fa", "tunj_str", "tunj_khs", "hon_mgjr",
                  "pajak", "pot_kop", "arisan", "pot_lain", "gaji_bersih"):
        require_money(getattr(slip, field), f"gaji.{field}")


class Store:
    """The seven relations plus auto-increment counters."""

    def __init__(self, paper_compat: bool = False):
        self.paper_compat = paper_compat
        self.golongan: dict[int, Golongan] = {}
        self.jfa: dict[int, Jfa] = {}
        self.jstr: dict[int, Jstr] = {}
        self.jkhs: dict[int, Jkhs] = {}
        self.pendidikan: dict[int, Pendidikan] = {}
        self.dosen: dict[str, Dosen] = {}
        self.gaji: dict[int, SlipGaji] = {}
        self.counters: dict[str, int] = {key: 1 for key in schema.COUNTER_KEYS}

    # -- master tables ---------------------------------------------------

    def _master_spec(self, table: str) -> schema.TableSpec:
        spec = schema.MASTER_TABLES.get(table)
        if spec is None:
            raise ValidationError(f"unknown master table: {table!r}")
        return spec

    def _master_rows(self, table: str) -> dict:
        return getattr(self, table)

    def _check_master_nama(self, table: str, nama: str, exclude_id: int | None = None) -> None:
        spec = self._master_spec(table)
        name_field = spec.fields[1]
        validate_width(nama, name_field.width, f"{table}.{name_field.name}")
        for row_id, row in self._master_rows(table).items():
            if row_id != exclude_id and getattr(row, name_field.name) == nama:
                raise ValidationError(
                    f"{table}.{name_field.name} {nama!r} already used by id {row_id}"
                )

    def insert_master(self, table: str, nama: str, tarif: int) -> int:
        spec = self._master_spec(table)
        self._check_master_nama(table, nama)
        require_money(tarif, f"{table}.{spec.fields[2].name}")
        new_id = self.counters[spec.counter]
        self.counters[spec.counter] = new_id + 1
        self._master_rows(table)[new_id] = MASTER_CLASSES[table](new_id, nama, tarif)
        return new_id

    def update_master(self, table: str, row_id: int, nama: str, tarif: int) -> None:
        spec = self._master_spec(table)
        rows = self._master_rows(table)
        if row_id not in rows:
            raise NotFoundError(f"{table} id {row_id} not found")
        self._check_master_nama(table, nama, exclude_id=row_id)
        require_money(tarif, f"{table}.{spec.fields[2].name}")
        rows[row_id] = MASTER_CLASSES[table](row_id, nama, tarif)

    def delete_master(self, table: str, row_id: int) -> None:
        self._master_spec(table)
        rows = self._master_rows(table)
        if row_id not in rows:
            raise NotFoundError(f"{table} id {row_id} not found")
        ref_field = DOSEN_REF_FIELDS[table]
        blocking = sorted(
            nii for nii, d in self.dosen.items() if getattr(d, ref_field) == row_id
        )
        if blocking:
            raise ReferentialConflictError(
                f"{table} id {row_id} is referenced by dosen: {', '.join(blocking)}",
                details=blocking,
            )
        del rows[row_id]

    def get_master(self, table: str, row_id: int):
        self._master_spec(table)
        row = self._master_rows(table).get(row_id)
        if row is None:
            raise NotFoundError(f"{table} id {row_id} not found")
        return row

    def list_master(self, table: str) -> list:
        self._master_spec(table)
        rows = self._master_rows(table)
        return [rows[key] for key in sorted(rows)]

    # -- dosen -------------------------------------------------------------

    def upsert_dosen(self, dosen: Dosen) -> None:
        validate_width(dosen.nii, 10, "dosen.nii")
        validate_width(dosen.nama_dosen, 25, "dosen.nama_dosen")
        for table, field in DOSEN_REF_FIELDS.items():
            ref_id = getattr(dosen, field)
            if isinstance(ref_id, bool) or not isinstance(ref_id, int):
                raise ValidationError(f"dosen.{field} must be an integer id")
            if ref_id not in self._master_rows(table):
                raise ReferentialConflictError(
                    f"dosen.{field} references missing {table} id {ref_id}",
                    details=[f"{table}:{ref_id}"],
                )
        self.dosen[dosen.nii] = dosen

    def delete_dosen(self, nii: str) -> None:
        if nii not in self.dosen:
            raise NotFoundError(f"dosen nii {nii!r} not found")
        blocking = sorted(
            str(no) for no, slip in self.gaji.items() if slip.nii == nii
        )
        if blocking:
            raise ReferentialConflictError(
                f"dosen nii {nii} is referenced by slips: {', '.join(blocking)}",
                details=blocking,
            )
        del self.dosen[nii]

    def get_dosen(self, nii: str) -> Dosen:
        row = self.dosen.get(nii)
        if row is None:
            raise NotFoundError(f"dosen nii {nii!r} not found")
        return row

    def list_dosen(self) -> list[Dosen]:
        return [self.dosen[key] for key in sorted(self.dosen)]

    # -- gaji ----------------------------------------------------------------

    def insert_slip(self, slip: SlipGaji) -> int:
        """Store a computed slip; the no_slip on the argument is ignored
        and a fresh id is issued."""
        validate_slip_fields(slip)
        if slip.nii not in self.dosen:
            raise ReferentialConflictError(
                f"gaji.nii references missing dosen {slip.nii!r}",
                details=[f"dosen:{slip.nii}"],
            )
        for existing in self.gaji.values():
            if existing.nii == slip.nii and existing.periode == slip.periode:
                raise ConflictError(
                    f"slip for nii {slip.nii} periode {slip.periode} already "
                    f"exists (no_slip {existing.no_slip})"
                )
        verify_slip_totals(slip, self.paper_compat)
        no_slip = self.counters["slip"]
        self.counters["slip"] = no_slip + 1
        self.gaji[no_slip] = dataclasses.replace(slip, no_slip=no_slip)
        return no_slip

    def delete_slip(self, no_slip: int) -> None:
        """Remove a slip (nothing references slips, so always allowed)."""
        if no_slip not in self.gaji:
            raise NotFoundError(f"slip no_slip {no_slip} not found")
        del self.gaji[no_slip]

    def get_slip(self, no_slip: int) -> SlipGaji:
        slip = self.gaji.get(no_slip)
        if slip is None:
            raise NotFoundError(f"slip no_slip {no_slip} not found")
        return slip

    def list_slips(self, periode: str | None = None) -> list[SlipGaji]:
        slips = [self.gaji[key] for key in sorted(self.gaji)]
        if periode is not None:
            slips = [s for s in slips if s.periode == periode]
        return slips

    # -- whole-store validation ---------------------------------------------

    def validate(self) -> None:
        """Re-check every invariant; raises on the first violation."""
        for key in schema.COUNTER_KEYS:
            counter = self.counters.get(key)
            if isinstance(counter, bool) or not isinstance(counter, int) or counter < 1:
                raise ValidationError(f"counter {key!r} must be an integer >= 1")
        for table, spec in schema.MASTER_TABLES.items():
            rows = self._master_rows(table)
            seen_names: dict[str, int] = {}
            for row_id, row in rows.items():
                if row_id < 1 or getattr(row, spec.pk) != row_id:
                    raise ValidationError(f"{table} id {row_id} is inconsistent")
                nama = getattr(row, spec.fields[1].name)
                validate_width(nama, spec.fields[1].width, f"{table}.{spec.fields[1].name}")
                if nama in seen_names:
                    raise ValidationError(
                        f"{table} name {nama!r} duplicated (ids "
                        f"{seen_names[nama]} and {row_id})"
                    )
                seen_names[nama] = row_id
                require_money(getattr(row, spec.fields[2].name),
                              f"{table}.{spec.fields[2].name}")
            if rows and self.counters[spec.counter] <= max(rows):
                raise ValidationError(
                    f"counter {spec.counter!r} must exceed the largest issued "
                    f"{table} id {max(rows)}"
                )
        for nii, dosen in self.dosen.items():
            if dosen.nii != nii:
                raise ValidationError(f"dosen key {nii!r} does not match row nii")
            validate_width(dosen.nii, 10, "dosen.nii")
            validate_width(dosen.nama_dosen, 25, "dosen.nama_dosen")
            for table, field in DOSEN_REF_FIELDS.items():
                ref_id = getattr(dosen, field)
                if isinstance(ref_id, bool) or not isinstance(ref_id, int):
                    raise ValidationError(f"dosen.{field} must be an integer id")
                if ref_id not in self._master_rows(table):
                    raise ValidationError(
                        f"dosen {nii} field {field} references missing "
                        f"{table} id {ref_id}"
                    )
        seen_periods: dict[tuple[str, str], int] = {}
        for no_slip, slip in self.gaji.items():
            if no_slip < 1 or slip.no_slip != no_slip:
                raise ValidationError(f"gaji no_slip {no_slip} is inconsistent")
            validate_slip_fields(slip)
            if slip.nii not in self.dosen:
                raise ValidationError(
                    f"gaji no_slip {no_slip} references missing dosen {slip.nii!r}"
                )
            pair = (slip.nii, slip.periode)
            if pair in seen_periods:
                raise ValidationError(
                    f"duplicate slip for nii {slip.nii} periode {slip.periode} "
                    f"(no_slip {seen_periods[pair]} and {no_slip})"
                )
            seen_periods[pair] = no_slip
            verify_slip_totals(slip, self.paper_compat)
        if self.gaji and self.counters["slip"] <= max(self.gaji):
            raise ValidationError(
                f"counter 'slip' must exceed the largest issued no_slip {max(self.gaji)}"
            )

    # -- persistence -------------------------------------------------------

    def to_document(self) -> dict:
        """Serialize to the canonical document structure (JSON-ready)."""
        doc: dict = {
            "schema_version": schema.SCHEMA_VERSION,
            "counters": {key: self.counters[key] for key in schema.COUNTER_KEYS},
        }
        for table in schema.MASTER_TABLES:
            spec = schema.TABLES[table]
            rows = self._master_rows(table)
            doc[table] = [
                {f.name: getattr(rows[key], f.name) for f in spec.fields}
                for key in sorted(rows)
            ]
        doc["dosen"] = [
            {f.name: getattr(self.dosen[key], f.name) for f in schema.DOSEN.fields}
            for key in sorted(self.dosen)
        ]
        doc["gaji"] = [
            {f.name: getattr(self.gaji[key], f.name) for f in schema.GAJI.fields}
            for key in sorted(self.gaji)
        ]
        return doc

    @classmethod
    def from_document(cls, doc: object, paper_compat: bool = False) -> "Store":
        """Build and fully validate a store from a parsed document.

        Raises ValidationError on any malformation or invariant violation;
        never returns a partially valid store.
        """
        if not isinstance(doc, dict):
            raise ValidationError("document must be a JSON object")
        expected_keys = {"schema_version", "counters", *schema.TABLES}
        unknown = set(doc) - expected_keys
        if unknown:
            raise ValidationError(f"unknown document keys: {sorted(unknown)}")
        missing = expected_keys - set(doc)
        if missing:
            raise ValidationError(f"missing document keys: {sorted(missing)}")
        if doc["schema_version"] != schema.SCHEMA_VERSION:
            raise ValidationError(
                f"unsupported schema_version {doc['schema_version']!r} "
                f"(expected {schema.SCHEMA_VERSION})"
            )
        counters = doc["counters"]
        if not isinstance(counters, dict) or set(counters) != set(schema.COUNTER_KEYS):
            raise ValidationError(
                f"counters must hold exactly the keys {list(schema.COUNTER_KEYS)}"
            )

        store = cls(paper_compat=paper_compat)
        store.counters = {key: counters[key] for key in schema.COUNTER_KEYS}

        def rows_of(table: str) -> Iterable[dict]:
            rows = doc[table]
            if not isinstance(rows, list):
                raise ValidationError(f"{table} must be an array")
            for row in rows:
                if not isinstance(row, dict):
                    raise ValidationError(f"{table} rows must be objects")
                spec = schema.TABLES[table]
                if set(row) != set(spec.field_names()):
                    raise ValidationError(
                        f"{table} row must hold exactly the fields "
                        f"{list(spec.field_names())}, got {sorted(row)}"
                    )
                yield row

        for table in schema.MASTER_TABLES:
            target = store._master_rows(table)
            for row in rows_of(table):
                try:
                    record = MASTER_CLASSES[table](**row)
                except TypeError as exc:
                    raise ValidationError(f"bad {table} row: {exc}") from exc
                row_id = row[schema.TABLES[table].pk]
                if isinstance(row_id, bool) or not isinstance(row_id, int):
                    raise ValidationError(f"{table} id must be an integer")
                if row_id in target:
                    raise ValidationError(f"duplicate {table} id {row_id}")
                target[row_id] = record
        for row in rows_of("dosen"):
            if not isinstance(row["nii"], str):
                raise ValidationError("dosen.nii must be text")
            if row["nii"] in store.dosen:
                raise ValidationError(f"duplicate dosen nii {row['nii']!r}")
            store.dosen[row["nii"]] = Dosen(**row)
        for row in rows_of("gaji"):
            no_slip = row["no_slip"]
            if isinstance(no_slip, bool) or not isinstance(no_slip, int):
                raise ValidationError("gaji.no_slip must be an integer")
            if no_slip in store.gaji:
                raise ValidationError(f"duplicate gaji no_slip {no_slip}")
            store.gaji[no_slip] = SlipGaji(**row)

        store.validate()
        return store

    def copy(self) -> "Store":
        return Store.from_document(self.to_document(), self.paper_compat)


def dumps(store: Store) -> str:
    """Canonical UTF-8 JSON text of the store document."""
    return json.dumps(store.to_document(), ensure_ascii=False, indent=2) + "\n"


def loads(text: str, paper_compat: bool = False) -> Store:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"store document is not valid JSON: {exc}") from exc
    return Store.from_document(doc, paper_compat)


def save_store(store: Store, path: str | os.PathLike) -> None:
    """Write the document atomically (temp file + rename)."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".store-", suffix=".json", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(dumps(store))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_store(path: str | os.PathLike, paper_compat: bool = False) -> Store:
    with open(path, "r", encoding="utf-8") as handle:
        return loads(handle.read(), paper_compat)
