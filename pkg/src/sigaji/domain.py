"""Value types and field validation shared by every other module.

Money is a plain non-negative ``int`` counting whole rupiah: there is no
fractional unit anywhere in the data, so exact integer arithmetic is both
sufficient and mandatory.  Amounts are capped at ``MONEY_MAX`` (2**53 - 1)
so every stored value survives a JSON / IEEE-754 round-trip un-rounded;
exceeding the cap is reported as an error, never wrapped around.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ValidationError

Money = int

MONEY_MAX = 2**53 - 1

# "Rp" prefix, digits either plain or dot-grouped by thousands.
_RP_RE = re.compile(r"^Rp(?P<digits>\d+|\d{1,3}(?:\.\d{3})+)$")
_PLAIN_RE = re.compile(r"^\d+$")

_PERIODE_RE = re.compile(r"^\d{4}-(0[1-9]|1[0-2])$")
_FORM_DATE_RE = re.compile(r"^(?P<d>\d{2})/(?P<m>\d{2})/(?P<y>\d{4})$")

# Field width limits (characters, not bytes).
WIDTH_NAMA_GOL = 25
WIDTH_NAMA_JABATAN = 30
WIDTH_NII = 10
WIDTH_NAMA_DOSEN = 25
WIDTH_PERIODE = 15


def parse_money(text: str) -> Money:
    """Parse a rupiah amount: plain digits or "Rp"-prefixed with "." grouping.

    >>> parse_money("Rp1.100.000")
    1100000
    """
    token = text.strip()
    if token.startswith("-"):
        raise ValidationError(f"negative amount not allowed: {token!r}")
    m = _PLAIN_RE.match(token) or _RP_RE.match(token)
    if not m:
        raise ValidationError(f"malformed money amount: {token!r}")
    digits = m.group("digits") if m.groupdict().get("digits") else token
    value = int(digits.replace(".", ""))
    if value > MONEY_MAX:
        raise ValidationError(f"money amount too large: {token!r}")
    return value


def format_money(amount: Money) -> str:
    """Format as "Rp" + digits grouped by 3 with "." separators.

    Inverse of :func:`parse_money` on its own output.
    """
    require_money(amount, "amount")
    return "Rp" + f"{amount:,}".replace(",", ".")


def require_money(value: object, field: str) -> Money:
    """Check that ``value`` is a valid Money amount and return it."""
    # bool is an int subclass; it is never a valid amount.
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{field} must be an integer rupiah amount")
    if value < 0:
        raise ValidationError(f"{field} must not be negative")
    if value > MONEY_MAX:
        raise ValidationError(f"{field} exceeds the maximum representable amount")
    return value


def money_sum(parts: list[Money], field: str) -> Money:
    """Exact sum of amounts, rejecting results beyond MONEY_MAX."""
    total = 0
    for part in parts:
        total += part
    if total > MONEY_MAX:
        raise ValidationError(f"{field} overflows the maximum representable amount")
    return total


def require_count(value: object, field: str) -> int:
    """Check a non-negative integer count (e.g. SKS units)."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{field} must be a non-negative integer")
    if value < 0:
        raise ValidationError(f"{field} must not be negative")
    if value > MONEY_MAX:
        raise ValidationError(f"{field} exceeds the maximum representable value")
    return value


def canonical_periode(text: str) -> str:
    """Canonicalize a pay period to "YYYY-MM".

    Accepts the canonical form itself or the form's date-picker display
    "DD/MM/YYYY" (e.g. "01/06/2006" -> "2006-06").
    """
    token = text.strip()
    if _PERIODE_RE.match(token):
        return token
    m = _FORM_DATE_RE.match(token)
    if m:
        day, month = int(m.group("d")), int(m.group("m"))
        if not 1 <= month <= 12:
            raise ValidationError(f"periode month out of range: {token!r}")
        if not 1 <= day <= 31:
            raise ValidationError(f"periode day out of range: {token!r}")
        return f"{m.group('y')}-{m.group('m')}"
    raise ValidationError(f"malformed periode (want YYYY-MM or DD/MM/YYYY): {token!r}")


def validate_width(text: object, limit: int, field: str = "field") -> str:
    """Check a text field: non-empty and at most ``limit`` characters."""
    if not isinstance(text, str):
        raise ValidationError(f"{field} must be text")
    if not text:
        raise ValidationError(f"{field} must not be empty")
    if len(text) > limit:
        raise ValidationError(f"{field} exceeds {limit} characters ({len(text)} given)")
    return text


@dataclass(frozen=True)
class Golongan:
    gol_id: int
    nama_gol: str
    gapok: Money


@dataclass(frozen=True)
class Jfa:
    jfa_id: int
    nama_jfa: str
    tunj_fa: Money


@dataclass(frozen=True)
class Jstr:
    jstr_id: int
    nama_jstr: str
    tunj_str: Money


@dataclass(frozen=True)
class Jkhs:
    jkhs_id: int
    nama_jkhs: str
    tunj_khs: Money


@dataclass(frozen=True)
class Pendidikan:
    pend_id: int
    nama_pend: str
    tarif_mgjr: Money


@dataclass(frozen=True)
class Dosen:
    """Lecturer record; the five integer fields are foreign keys."""

    nii: str
    nama_dosen: str
    golongan: int
    jab_fa: int
    jab_str: int
    jab_khs: int
    pendidikan: int


@dataclass(frozen=True)
class DosenProfilTarif:
    """Lookup-resolved tariff view of a lecturer; derived, never stored."""

    nii: str
    nama_dosen: str
    gapok: Money
    tunj_fa: Money
    tunj_str: Money
    tunj_khs: Money
    tarif_mgjr: Money


@dataclass(frozen=True)
class SlipGaji:
    """Payroll slip; tariff fields are snapshots taken at creation time."""

    no_slip: int
    periode: str
    nii: str
    nama_dosen: str
    gapok: Money
    tunj_fa: Money
    tunj_str: Money
    tunj_khs: Money
    sks_mgjr: int
    hon_mgjr: Money
    pajak: Money
    pot_kop: Money
    arisan: Money
    pot_lain: Money
    gaji_bersih: Money
