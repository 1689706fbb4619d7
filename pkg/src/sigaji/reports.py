"""The five reports: slip, two period recaps, lecturer list, master list.

Every report is a grid (columns, typed kinds, rows, optional totals row).
The text renderer lays the grid out in fixed-width columns with amounts in
"Rp" notation; the CSV emitter writes amounts as bare integers so exports
feed spreadsheets without currency parsing.  Row order is deterministic
(ascending key), so identical stores produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .domain import format_money
from .errors import NotFoundError, ValidationError
from .store import Store

REPORT_NAMES = ("slip_gaji", "rekap_periode", "rekap_honor", "daftar_dosen", "daftar_master")

# column kinds: "text" renders as-is; "money" renders Rp-formatted in text
# output and as a bare integer in CSV; "count" is a plain integer.
SUMMABLE = ("money", "count")


@dataclass(frozen=True)
class Report:
    name: str
    title: str
    columns: tuple[str, ...]
    kinds: tuple[str, ...]
    rows: tuple[tuple, ...]
    totals: tuple | None = None


def _totals_row(columns: tuple[str, ...], kinds: tuple[str, ...],
                rows: tuple[tuple, ...], label: str = "TOTAL") -> tuple:
    cells: list = []
    for i, kind in enumerate(kinds):
        if kind in SUMMABLE:
            cells.append(sum(row[i] for row in rows))
        else:
            cells.append(label if i == 0 else "")
    return tuple(cells)


def slip_gaji(store: Store, no_slip: int) -> Report:
    """Single-slip document: period, lecturer, earnings, deductions, net."""
    slip = store.get_slip(no_slip)
    columns = ("no_slip", "periode", "nii", "nama_dosen", "gapok", "tunj_fa",
               "tunj_str", "tunj_khs", "sks_mgjr", "hon_mgjr", "pajak",
               "pot_kop", "arisan", "pot_lain", "gaji_bersih")
    kinds = ("count", "text", "text", "text", "money", "money", "money",
             "money", "count", "money", "money", "money", "money", "money",
             "money")
    row = tuple(getattr(slip, name) for name in columns)
    return Report(
        name="slip_gaji",
        title=f"Slip Gaji No. {slip.no_slip}",
        columns=columns,
        kinds=kinds,
        rows=(row,),
    )


def rekap_periode(store: Store, periode: str) -> Report:
    """One row per slip in the period: gross components, deductions, net."""
    columns = ("nii", "nama_dosen", "gapok", "tunj_fa", "tunj_str", "tunj_khs",
               "hon_mgjr", "pot_kop", "arisan", "pot_lain", "gaji_bersih")
    kinds = ("text", "text", "money", "money", "money", "money", "money",
             "money", "money", "money", "money")
    slips = sorted(store.list_slips(periode), key=lambda s: s.nii)
    rows = tuple(
        tuple(getattr(slip, name) for name in columns) for slip in slips
    )
    return Report(
        name="rekap_periode",
        title=f"Rekap Gaji Periode {periode}",
        columns=columns,
        kinds=kinds,
        rows=rows,
        totals=_totals_row(columns, kinds, rows),
    )


def rekap_honor(store: Store, periode: str) -> Report:
    """Per-lecturer teaching load, honorarium and tax for the period."""
    columns = ("nii", "nama_dosen", "sks_mgjr", "hon_mgjr", "pajak")
    kinds = ("text", "text", "count", "money", "money")
    slips = sorted(store.list_slips(periode), key=lambda s: s.nii)
    rows = tuple(
        tuple(getattr(slip, name) for name in columns) for slip in slips
    )
    return Report(
        name="rekap_honor",
        title=f"Rekap Honor Mengajar Periode {periode}",
        columns=columns,
        kinds=kinds,
        rows=rows,
        totals=_totals_row(columns, kinds, rows),
    )


def daftar_dosen(store: Store) -> Report:
    """All lecturers with their five references resolved to display names."""
    columns = ("nii", "nama_dosen", "nama_gol", "nama_jfa", "nama_jstr",
               "nama_jkhs", "nama_pend")
    kinds = ("text",) * 7
    rows = []
    for dosen in store.list_dosen():
        rows.append((
            dosen.nii,
            dosen.nama_dosen,
            store.get_master("golongan", dosen.golongan).nama_gol,
            store.get_master("jfa", dosen.jab_fa).nama_jfa,
            store.get_master("jstr", dosen.jab_str).nama_jstr,
            store.get_master("jkhs", dosen.jab_khs).nama_jkhs,
            store.get_master("pendidikan", dosen.pendidikan).nama_pend,
        ))
    return Report(
        name="daftar_dosen",
        title="Daftar Dosen",
        columns=columns,
        kinds=kinds,
        rows=tuple(rows),
    )


_MASTER_SECTIONS = (
    ("golongan", "Golongan", "nama_gol", "gapok"),
    ("jfa", "Jabatan Fungsional Akademik", "nama_jfa", "tunj_fa"),
    ("jstr", "Jabatan Struktural", "nama_jstr", "tunj_str"),
    ("jkhs", "Jabatan Khusus", "nama_jkhs", "tunj_khs"),
    ("pendidikan", "Pendidikan", "nama_pend", "tarif_mgjr"),
)


_MASTER_ID_FIELDS = {
    "golongan": "gol_id",
    "jfa": "jfa_id",
    "jstr": "jstr_id",
    "jkhs": "jkhs_id",
    "pendidikan": "pend_id",
}


def daftar_master(store: Store) -> Report:
    """The five master tables concatenated, each ordered by id."""
    columns = ("tabel", "id", "nama", "tarif")
    kinds = ("text", "count", "text", "money")
    rows = []
    for table, heading, name_field, tarif_field in _MASTER_SECTIONS:
        for row in store.list_master(table):
            rows.append((
                heading,
                getattr(row, _MASTER_ID_FIELDS[table]),
                getattr(row, name_field),
                getattr(row, tarif_field),
            ))
    return Report(
        name="daftar_master",
        title="Daftar Tabel Master",
        columns=columns,
        kinds=kinds,
        rows=tuple(rows),
    )


def _render_cell(value, kind: str) -> str:
    # totals-row label cells in text columns arrive as strings already
    if isinstance(value, str):
        return value
    if kind == "money":
        return format_money(value)
    return str(value)


def render_text(report: Report) -> str:
    """Fixed-width text layout; single-row field/value layout for the slip."""
    if report.name == "slip_gaji":
        return _render_slip_text(report)
    if report.name == "daftar_master":
        return _render_master_text(report)
    all_rows = list(report.rows)
    if report.totals is not None:
        all_rows.append(report.totals)
    rendered = [
        [_render_cell(cell, kind) for cell, kind in zip(row, report.kinds)]
        for row in all_rows
    ]
    widths = [len(col) for col in report.columns]
    for row in rendered:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def fmt(cells: list[str]) -> str:
        parts = [
            cell.rjust(widths[i]) if report.kinds[i] in SUMMABLE else cell.ljust(widths[i])
            for i, cell in enumerate(cells)
        ]
        return "  ".join(parts).rstrip()

    rule = "  ".join("-" * w for w in widths)
    lines = [report.title, "=" * len(report.title)]
    lines.append(fmt(list(report.columns)))
    lines.append(rule)
    body_count = len(report.rows)
    lines.extend(fmt(row) for row in rendered[:body_count])
    if report.totals is not None:
        lines.append(rule)
        lines.append(fmt(rendered[-1]))
    lines.append(f"({body_count} baris)")
    return "\n".join(lines) + "\n"


_SLIP_LABELS = {
    "no_slip": "No Slip",
    "periode": "Periode",
    "nii": "NII",
    "nama_dosen": "Nama Dosen",
    "gapok": "Gaji Pokok",
    "tunj_fa": "Tunjangan Fung. Akademik",
    "tunj_str": "Tunjangan Struktural",
    "tunj_khs": "Tunjangan Khusus",
    "sks_mgjr": "Sks Mengajar",
    "hon_mgjr": "Honor Mengajar",
    "pajak": "Pajak",
    "pot_kop": "Potongan Koperasi",
    "arisan": "Arisan",
    "pot_lain": "Potongan Lainnya",
    "gaji_bersih": "Gaji Bersih",
}


def _render_slip_text(report: Report) -> str:
    row = report.rows[0]
    labels = [_SLIP_LABELS[col] for col in report.columns]
    width = max(len(label) for label in labels)
    lines = [report.title, "=" * len(report.title)]
    for label, cell, kind in zip(labels, row, report.kinds):
        lines.append(f"{label.ljust(width)} : {_render_cell(cell, kind)}")
    return "\n".join(lines) + "\n"


def _render_master_text(report: Report) -> str:
    """One heading per master table (all five, even when empty)."""
    lines = [report.title, "=" * len(report.title)]
    by_section: dict[str, list] = {heading: [] for _, heading, _, _ in _MASTER_SECTIONS}
    for row in report.rows:
        by_section[row[0]].append(row)
    for _, heading, _, _ in _MASTER_SECTIONS:
        rows = by_section[heading]
        lines.append("")
        lines.append(f"[{heading}]")
        id_width = max([2] + [len(str(row[1])) for row in rows])
        nama_width = max([4] + [len(row[2]) for row in rows])
        for row in rows:
            lines.append(
                f"{str(row[1]).rjust(id_width)}  {row[2].ljust(nama_width)}  "
                f"{format_money(row[3])}".rstrip()
            )
        lines.append(f"({len(rows)} baris)")
    return "\n".join(lines) + "\n"


def to_csv(report: Report) -> bytes:
    """RFC-4180-style CSV: header, rows, totals last; amounts as integers."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow(row)
    if report.totals is not None:
        writer.writerow(report.totals)
    return buffer.getvalue().encode("utf-8")


def build(store: Store, name: str, periode: str | None = None,
          no_slip: int | None = None) -> Report:
    """Dispatch a report by name, checking its required parameter."""
    if name == "slip_gaji":
        if no_slip is None:
            raise ValidationError("report slip_gaji requires no_slip")
        return slip_gaji(store, no_slip)
    if name == "rekap_periode":
        if periode is None:
            raise ValidationError("report rekap_periode requires periode")
        return rekap_periode(store, periode)
    if name == "rekap_honor":
        if periode is None:
            raise ValidationError("report rekap_honor requires periode")
        return rekap_honor(store, periode)
    if name == "daftar_dosen":
        return daftar_dosen(store)
    if name == "daftar_master":
        return daftar_master(store)
    raise NotFoundError(f"unknown report {name!r} (available: {', '.join(REPORT_NAMES)})")
