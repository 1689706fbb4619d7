"""Faculty payroll information system.

Embedded seven-table relational store, salary computation engine, five
reports, a JSON REST service and an operator CLI.
"""

from .domain import (
    Dosen,
    DosenProfilTarif,
    Golongan,
    Jfa,
    Jkhs,
    Jstr,
    Money,
    Pendidikan,
    SlipGaji,
    canonical_periode,
    format_money,
    parse_money,
    validate_width,
)
from .engine import GajiBreakdown, GajiInput, create_slip, resolve_profil
from .errors import (
    ConflictError,
    NotFoundError,
    PayrollError,
    ReferentialConflictError,
    ValidationError,
)
from .store import Store, load_store, save_store

__all__ = [
    "ConflictError",
    "Dosen",
    "DosenProfilTarif",
    "GajiBreakdown",
    "GajiInput",
    "Golongan",
    "Jfa",
    "Jkhs",
    "Jstr",
    "Money",
    "NotFoundError",
    "PayrollError",
    "Pendidikan",
    "ReferentialConflictError",
    "SlipGaji",
    "Store",
    "ValidationError",
    "canonical_periode",
    "create_slip",
    "format_money",
    "load_store",
    "parse_money",
    "resolve_profil",
    "save_store",
    "validate_width",
]

__version__ = "0.1.0"
