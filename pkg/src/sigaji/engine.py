"""Salary computation: teaching honorarium, gross and net.

The computation chain mirrors the data-entry form: SKS taught times the
per-SKS rate gives the gross honorarium; tax applies to that honorarium
only (never to base salary or allowances); base salary plus the three
allowances plus the taxed honorarium give gross pay; subtracting the
three deductions gives net pay.

``paper_compat=True`` reproduces the original prototype's behavior of
reporting net pay before deductions; deductions are still recorded on the
slip, only gaji_bersih changes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domain import (
    MONEY_MAX,
    DosenProfilTarif,
    Money,
    SlipGaji,
    canonical_periode,
    money_sum,
    require_count,
    require_money,
)
from .errors import ValidationError
from .store import Store


@dataclass(frozen=True)
class GajiInput:
    """Operator-entered slip inputs; everything else is derived."""

    periode: str
    nii: str
    sks_mgjr: int
    pajak: Money
    pot_kop: Money
    arisan: Money
    pot_lain: Money

    @classmethod
    def from_raw(cls, raw: dict) -> "GajiInput":
        """Build from an untrusted mapping (API body, CLI flags)."""
        if not isinstance(raw, dict):
            raise ValidationError("slip input must be an object")
        required = ("periode", "nii", "sks_mgjr", "pajak", "pot_kop", "arisan", "pot_lain")
        missing = [name for name in required if name not in raw]
        if missing:
            raise ValidationError(f"slip input missing fields: {', '.join(missing)}")
        unknown = sorted(set(raw) - set(required))
        if unknown:
            raise ValidationError(f"slip input has unknown fields: {', '.join(unknown)}")
        if not isinstance(raw["nii"], str):
            raise ValidationError("nii must be text")
        if not isinstance(raw["periode"], str):
            raise ValidationError("periode must be text")
        return cls(
            periode=canonical_periode(raw["periode"]),
            nii=raw["nii"],
            sks_mgjr=require_count(raw["sks_mgjr"], "sks_mgjr"),
            pajak=require_money(raw["pajak"], "pajak"),
            pot_kop=require_money(raw["pot_kop"], "pot_kop"),
            arisan=require_money(raw["arisan"], "arisan"),
            pot_lain=require_money(raw["pot_lain"], "pot_lain"),
        )

    def validated(self) -> "GajiInput":
        canonical = canonical_periode(self.periode)
        if canonical != self.periode:
            raise ValidationError(f"periode not canonical: {self.periode!r}")
        require_count(self.sks_mgjr, "sks_mgjr")
        for field in ("pajak", "pot_kop", "arisan", "pot_lain"):
            require_money(getattr(self, field), field)
        return self


@dataclass(frozen=True)
class GajiBreakdown:
    """Full derived chain for one slip, plus the snapshots it came from."""

    profil: DosenProfilTarif
    input: GajiInput
    honor_kotor: Money
    hon_mgjr: Money
    gaji_kotor: Money
    gaji_bersih: Money

    def as_dict(self) -> dict:
        return {
            "nii": self.profil.nii,
            "nama_dosen": self.profil.nama_dosen,
            "periode": self.input.periode,
            "gapok": self.profil.gapok,
            "tunj_fa": self.profil.tunj_fa,
            "tunj_str": self.profil.tunj_str,
            "tunj_khs": self.profil.tunj_khs,
            "tarif_mgjr": self.profil.tarif_mgjr,
            "sks_mgjr": self.input.sks_mgjr,
            "honor_kotor": self.honor_kotor,
            "pajak": self.input.pajak,
            "hon_mgjr": self.hon_mgjr,
            "gaji_kotor": self.gaji_kotor,
            "pot_kop": self.input.pot_kop,
            "arisan": self.input.arisan,
            "pot_lain": self.input.pot_lain,
            "gaji_bersih": self.gaji_bersih,
        }


def resolve_profil(store: Store, nii: str) -> DosenProfilTarif:
    """Resolve the five foreign keys to their current tariff values."""
    dosen = store.get_dosen(nii)
    return DosenProfilTarif(
        nii=dosen.nii,
        nama_dosen=dosen.nama_dosen,
        gapok=store.get_master("golongan", dosen.golongan).gapok,
        tunj_fa=store.get_master("jfa", dosen.jab_fa).tunj_fa,
        tunj_str=store.get_master("jstr", dosen.jab_str).tunj_str,
        tunj_khs=store.get_master("jkhs", dosen.jab_khs).tunj_khs,
        tarif_mgjr=store.get_master("pendidikan", dosen.pendidikan).tarif_mgjr,
    )


def honor_kotor(sks_mgjr: int, tarif_mgjr: Money) -> Money:
    """Gross teaching honorarium: SKS taught times the per-SKS rate."""
    require_count(sks_mgjr, "sks_mgjr")
    require_money(tarif_mgjr, "tarif_mgjr")
    product = sks_mgjr * tarif_mgjr
    if product > MONEY_MAX:
        raise ValidationError("honor_kotor overflows the maximum representable amount")
    return product


def honor_mengajar(kotor: Money, pajak: Money) -> Money:
    """Honorarium after tax; tax may not exceed the taxed amount."""
    require_money(kotor, "honor_kotor")
    require_money(pajak, "pajak")
    if pajak > kotor:
        raise ValidationError(f"pajak {pajak} exceeds honor_kotor {kotor}")
    return kotor - pajak


def gaji_kotor(profil: DosenProfilTarif, hon_mgjr: Money) -> Money:
    """Gross pay: base salary + three allowances + taxed honorarium."""
    require_money(hon_mgjr, "hon_mgjr")
    return money_sum(
        [profil.gapok, profil.tunj_fa, profil.tunj_str, profil.tunj_khs, hon_mgjr],
        "gaji_kotor",
    )


def gaji_bersih(kotor: Money, pot_kop: Money, arisan: Money, pot_lain: Money) -> Money:
    """Net pay: gross minus the three deductions."""
    require_money(kotor, "gaji_kotor")
    deductions = money_sum(
        [require_money(pot_kop, "pot_kop"),
         require_money(arisan, "arisan"),
         require_money(pot_lain, "pot_lain")],
        "potongan",
    )
    if deductions > kotor:
        raise ValidationError(f"deductions {deductions} exceed gaji_kotor {kotor}")
    return kotor - deductions


def compute_breakdown(profil: DosenProfilTarif, gaji_input: GajiInput,
                      paper_compat: bool = False) -> GajiBreakdown:
    """Run the four-equation chain for one slip."""
    gaji_input = gaji_input.validated()
    kotor_honor = honor_kotor(gaji_input.sks_mgjr, profil.tarif_mgjr)
    hon = honor_mengajar(kotor_honor, gaji_input.pajak)
    gross = gaji_kotor(profil, hon)
    net = gaji_bersih(gross, gaji_input.pot_kop, gaji_input.arisan, gaji_input.pot_lain)
    if paper_compat:
        net = gross
    return GajiBreakdown(
        profil=profil,
        input=gaji_input,
        honor_kotor=kotor_honor,
        hon_mgjr=hon,
        gaji_kotor=gross,
        gaji_bersih=net,
    )


def create_slip(store: Store, gaji_input: GajiInput) -> SlipGaji:
    """Resolve, compute, snapshot and insert one slip atomically.

    Returns the stored slip including its issued no_slip.  The store's
    own mode decides whether deductions reduce gaji_bersih.
    """
    breakdown = compute_breakdown(resolve_profil(store, gaji_input.nii),
                                  gaji_input, store.paper_compat)
    slip = SlipGaji(
        no_slip=0,
        periode=gaji_input.periode,
        nii=breakdown.profil.nii,
        nama_dosen=breakdown.profil.nama_dosen,
        gapok=breakdown.profil.gapok,
        tunj_fa=breakdown.profil.tunj_fa,
        tunj_str=breakdown.profil.tunj_str,
        tunj_khs=breakdown.profil.tunj_khs,
        sks_mgjr=gaji_input.sks_mgjr,
        hon_mgjr=breakdown.hon_mgjr,
        pajak=gaji_input.pajak,
        pot_kop=gaji_input.pot_kop,
        arisan=gaji_input.arisan,
        pot_lain=gaji_input.pot_lain,
        gaji_bersih=breakdown.gaji_bersih,
    )
    no_slip = store.insert_slip(slip)
    return store.get_slip(no_slip)
