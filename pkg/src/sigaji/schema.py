"""Machine-readable schema manifest for the seven tables.

The manifest is the single source of truth for field names, key kinds,
width limits and foreign-key targets.  The store, the CSV import/export
and the schema-conformance tests all walk this structure instead of
hard-coding per-table knowledge.

``legacy`` maps each field back to the column name used by the original
desktop system's table designs (see README for the full mapping table).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

# Field kinds:
#   auto_id  - auto-increment integer primary key
#   text     - alpha field with a width limit (characters)
#   money    - non-negative integer rupiah
#   count    - non-negative integer (SKS units)
#   periode  - canonical "YYYY-MM" text
#   ref      - integer foreign key into a master table
#   ref_nii  - text foreign key into the dosen table


@dataclass(frozen=True)
class FieldSpec:
    name: str
    kind: str
    width: int | None = None
    ref: str | None = None
    legacy: str | None = None


@dataclass(frozen=True)
class TableSpec:
    name: str
    pk: str
    pk_kind: str  # "auto_id" or "text"
    fields: tuple[FieldSpec, ...]
    counter: str | None = None  # counter key for auto_id tables

    def field_names(self) -> tuple[str, ...]:
        return tuple(f.name for f in self.fields)

    def legacy_map(self) -> dict[str, str]:
        return {f.legacy: f.name for f in self.fields if f.legacy}


def _master(name: str, counter: str, id_field: str, name_field: str,
            tarif_field: str, name_width: int,
            legacy: tuple[str, str, str]) -> TableSpec:
    return TableSpec(
        name=name,
        pk=id_field,
        pk_kind="auto_id",
        counter=counter,
        fields=(
            FieldSpec(id_field, "auto_id", legacy=legacy[0]),
            FieldSpec(name_field, "text", width=name_width, legacy=legacy[1]),
            FieldSpec(tarif_field, "money", legacy=legacy[2]),
        ),
    )


GOLONGAN = _master("golongan", "gol", "gol_id", "nama_gol", "gapok", 25,
                   ("#Gol", "NamaGol", "Gapok"))
JFA = _master("jfa", "jfa", "jfa_id", "nama_jfa", "tunj_fa", 30,
              ("#JFA", "NamaJFA", "TunjFA"))
JSTR = _master("jstr", "jstr", "jstr_id", "nama_jstr", "tunj_str", 30,
               ("#JStr", "NamaJStr", "TunjStr"))
JKHS = _master("jkhs", "jkhs", "jkhs_id", "nama_jkhs", "tunj_khs", 30,
               ("#JKhs", "NamaJKhs", "TunjKhs"))
PENDIDIKAN = _master("pendidikan", "pend", "pend_id", "nama_pend", "tarif_mgjr", 30,
                     ("#Pend", "NamaPend", "TarifMgjr"))

DOSEN = TableSpec(
    name="dosen",
    pk="nii",
    pk_kind="text",
    fields=(
        FieldSpec("nii", "text", width=10, legacy="#NII"),
        FieldSpec("nama_dosen", "text", width=25, legacy="NamaDosen"),
        FieldSpec("golongan", "ref", ref="golongan", legacy="Golongan"),
        FieldSpec("jab_fa", "ref", ref="jfa", legacy="JabFA"),
        FieldSpec("jab_str", "ref", ref="jstr", legacy="JabStr"),
        FieldSpec("jab_khs", "ref", ref="jkhs", legacy="JabKhs"),
        FieldSpec("pendidikan", "ref", ref="pendidikan", legacy="Pendidikan"),
    ),
)

GAJI = TableSpec(
    name="gaji",
    pk="no_slip",
    pk_kind="auto_id",
    counter="slip",
    fields=(
        FieldSpec("no_slip", "auto_id", legacy="#NoSlipGaji"),
        FieldSpec("periode", "periode", width=15, legacy="Periode"),
        FieldSpec("nii", "ref_nii", width=10, ref="dosen", legacy="NII"),
        FieldSpec("nama_dosen", "text", width=25, legacy="NamaDosen"),
        FieldSpec("gapok", "money", legacy="Gapok"),
        FieldSpec("tunj_fa", "money", legacy="TunjFA"),
        FieldSpec("tunj_str", "money", legacy="TunjStr"),
        FieldSpec("tunj_khs", "money", legacy="TunjKhs"),
        FieldSpec("sks_mgjr", "count", legacy="SksMgjr"),
        FieldSpec("hon_mgjr", "money", legacy="HonMgjr"),
        FieldSpec("pajak", "money", legacy="Pajak"),
        FieldSpec("pot_kop", "money", legacy="PotKop"),
        FieldSpec("arisan", "money", legacy="Arisan"),
        FieldSpec("pot_lain", "money", legacy="PotLain"),
        FieldSpec("gaji_bersih", "money", legacy="GajiBersih"),
    ),
)

MASTER_TABLES: dict[str, TableSpec] = {
    t.name: t for t in (GOLONGAN, JFA, JSTR, JKHS, PENDIDIKAN)
}

TABLES: dict[str, TableSpec] = {
    **MASTER_TABLES,
    "dosen": DOSEN,
    "gaji": GAJI,
}

COUNTER_KEYS = ("gol", "jfa", "jstr", "jkhs", "pend", "slip")

SCHEMA_VERSION = 1
