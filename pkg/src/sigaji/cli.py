"""Operator command line: init, seed, data entry, slips, reports,
import/export and the HTTP service.

Exit codes: 0 ok, 1 validation/usage, 2 not-found, 3 conflict, 4 I/O.
Machine output goes to stdout, diagnostics (single line) to stderr.
Mutating commands take an exclusive lock on the store document.
"""

from __future__ import annotations

import argparse
import os
import sys

from filelock import FileLock

from . import api, csvio, engine, reports
from .domain import Dosen, parse_money
from .errors import (
    ConflictError,
    NotFoundError,
    PayrollError,
    ReferentialConflictError,
    ValidationError,
)
from .seed import paper_seed
from .store import Store, load_store, save_store

DEFAULT_DB = "payroll.json"
MASTER_CHOICES = ("golongan", "jfa", "jstr", "jkhs", "pendidikan")
TABLE_CHOICES = MASTER_CHOICES + ("dosen", "gaji")


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the exit-code contract wants 1."""

    def error(self, message: str):
        raise UsageError(message)


def _money_arg(text: str) -> int:
    return parse_money(text)


def _nonneg_int_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ValidationError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise ValidationError(f"expected a non-negative integer, got {text!r}")
    return value


def build_parser() -> Parser:
    parser = Parser(prog="sigaji", description="Faculty payroll information system")
    parser.add_argument("--db", default=None,
                        help="store document path (default: $PAYROLL_DB or ./payroll.json)")
    parser.add_argument("--paper-compat", action="store_true",
                        help="report net salary before deductions (legacy behavior)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("init", help="create a fresh empty store document")
    p.add_argument("--force", action="store_true", help="overwrite an existing document")

    p = sub.add_parser("seed", help="load the reference dataset")
    p.add_argument("--paper", action="store_true", required=True,
                   help="load the reference dataset")
    p.add_argument("--force", action="store_true",
                   help="replace a non-empty store")

    master = sub.add_parser("master", help="master table rows").add_subparsers(
        dest="action", required=True)
    p = master.add_parser("add")
    p.add_argument("--table", choices=MASTER_CHOICES, required=True)
    p.add_argument("--nama", required=True)
    p.add_argument("--tarif", type=_money_arg, required=True,
                   help="amount in rupiah (bare integer or Rp notation)")
    p = master.add_parser("list")
    p.add_argument("--table", choices=MASTER_CHOICES)
    p = master.add_parser("update")
    p.add_argument("--table", choices=MASTER_CHOICES, required=True)
    p.add_argument("--id", type=int, required=True)
    p.add_argument("--nama", required=True)
    p.add_argument("--tarif", type=_money_arg, required=True)
    p = master.add_parser("delete")
    p.add_argument("--table", choices=MASTER_CHOICES, required=True)
    p.add_argument("--id", type=int, required=True)

    dosen = sub.add_parser("dosen", help="lecturer rows").add_subparsers(
        dest="action", required=True)
    p = dosen.add_parser("add")
    p.add_argument("--nii", required=True)
    p.add_argument("--nama", required=True)
    p.add_argument("--golongan", type=int, required=True)
    p.add_argument("--jfa", type=int, required=True)
    p.add_argument("--jstr", type=int, required=True)
    p.add_argument("--jkhs", type=int, required=True)
    p.add_argument("--pendidikan", type=int, required=True)
    dosen.add_parser("list")
    p = dosen.add_parser("delete")
    p.add_argument("--nii", required=True)

    slip = sub.add_parser("slip", help="payroll slips").add_subparsers(
        dest="action", required=True)
    p = slip.add_parser("create")
    p.add_argument("--periode", required=True)
    p.add_argument("--nii", required=True)
    p.add_argument("--sks", type=_nonneg_int_arg, required=True)
    p.add_argument("--pajak", type=_money_arg, default=0)
    p.add_argument("--pot-kop", type=_money_arg, default=0)
    p.add_argument("--arisan", type=_money_arg, default=0)
    p.add_argument("--pot-lain", type=_money_arg, default=0)
    p = slip.add_parser("list")
    p.add_argument("--periode")

    p = sub.add_parser("report", help="print one of the five reports")
    p.add_argument("name", choices=reports.REPORT_NAMES)
    p.add_argument("--periode")
    p.add_argument("--no-slip", type=int, dest="no_slip")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("import", help="replace one table from CSV (all-or-nothing)")
    p.add_argument("--table", choices=TABLE_CHOICES, required=True)
    p.add_argument("--csv", required=True, dest="csv_path")

    p = sub.add_parser("export", help="write one table as CSV")
    p.add_argument("--table", choices=TABLE_CHOICES, required=True)
    p.add_argument("--csv", required=True, dest="csv_path")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", default=None,
                   help="directory of web UI files to serve at /")

    return parser


def _db_path(args: argparse.Namespace) -> str:
    return args.db or os.environ.get("PAYROLL_DB") or DEFAULT_DB


def _load(args: argparse.Namespace) -> Store:
    return load_store(_db_path(args), paper_compat=args.paper_compat)


def _lock(args: argparse.Namespace) -> FileLock:
    return FileLock(_db_path(args) + ".lock")


_MASTER_HEADINGS = {
    "golongan": "Golongan",
    "jfa": "Jabatan Fungsional Akademik",
    "jstr": "Jabatan Struktural",
    "jkhs": "Jabatan Khusus",
    "pendidikan": "Pendidikan",
}


def _print_master_list(store: Store, table: str | None) -> None:
    report = reports.daftar_master(store)
    if table is not None:
        rows = tuple(row for row in report.rows if row[0] == _MASTER_HEADINGS[table])
        report = reports.Report(name="daftar_master", title=f"Tabel {table}",
                                columns=report.columns, kinds=report.kinds, rows=rows)
    print(reports.render_text(report), end="")


def _print_slips(slips) -> None:
    report = reports.Report(
        name="slips",
        title="Daftar Slip Gaji",
        columns=("no_slip", "periode", "nii", "nama_dosen", "gaji_bersih"),
        kinds=("count", "text", "text", "text", "money"),
        rows=tuple((s.no_slip, s.periode, s.nii, s.nama_dosen, s.gaji_bersih)
                   for s in slips),
    )
    print(reports.render_text(report), end="")


def run(args: argparse.Namespace) -> int:
    db = _db_path(args)

    if args.command == "init":
        if os.path.exists(db) and not args.force:
            raise ConflictError(f"store document {db} already exists (use --force)")
        with _lock(args):
            save_store(Store(paper_compat=args.paper_compat), db)
        print(f"initialized empty store at {db}")
        return 0

    if args.command == "seed":
        with _lock(args):
            if os.path.exists(db):
                store = _load(args)
                populated = any([store.golongan, store.jfa, store.jstr, store.jkhs,
                                 store.pendidikan, store.dosen, store.gaji])
                if populated and not args.force:
                    raise ConflictError("store is not empty (use --force to replace)")
            store = Store(paper_compat=args.paper_compat)
            paper_seed(store)
            save_store(store, db)
        print(f"seeded reference dataset into {db}")
        return 0

    if args.command == "master":
        if args.action == "add":
            with _lock(args):
                store = _load(args)
                new_id = store.insert_master(args.table, args.nama, args.tarif)
                save_store(store, db)
            print(new_id)
        elif args.action == "list":
            _print_master_list(_load(args), args.table)
        elif args.action == "update":
            with _lock(args):
                store = _load(args)
                store.update_master(args.table, args.id, args.nama, args.tarif)
                save_store(store, db)
            print(f"updated {args.table} {args.id}")
        elif args.action == "delete":
            with _lock(args):
                store = _load(args)
                store.delete_master(args.table, args.id)
                save_store(store, db)
            print(f"deleted {args.table} {args.id}")
        return 0

    if args.command == "dosen":
        if args.action == "add":
            row = Dosen(args.nii, args.nama, args.golongan, args.jfa,
                        args.jstr, args.jkhs, args.pendidikan)
            with _lock(args):
                store = _load(args)
                store.upsert_dosen(row)
                save_store(store, db)
            print(args.nii)
        elif args.action == "list":
            print(reports.render_text(reports.daftar_dosen(_load(args))), end="")
        elif args.action == "delete":
            with _lock(args):
                store = _load(args)
                store.delete_dosen(args.nii)
                save_store(store, db)
            print(f"deleted dosen {args.nii}")
        return 0

    if args.command == "slip":
        if args.action == "create":
            gaji_input = engine.GajiInput.from_raw({
                "periode": args.periode,
                "nii": args.nii,
                "sks_mgjr": args.sks,
                "pajak": args.pajak,
                "pot_kop": args.pot_kop,
                "arisan": args.arisan,
                "pot_lain": args.pot_lain,
            })
            with _lock(args):
                store = _load(args)
                slip = engine.create_slip(store, gaji_input)
                save_store(store, db)
            print(reports.render_text(reports.slip_gaji(store, slip.no_slip)), end="")
        elif args.action == "list":
            _print_slips(_load(args).list_slips(args.periode))
        return 0

    if args.command == "report":
        report = reports.build(_load(args), args.name, periode=args.periode,
                               no_slip=args.no_slip)
        if args.format == "csv":
            sys.stdout.write(reports.to_csv(report).decode("utf-8"))
        else:
            sys.stdout.write(reports.render_text(report))
        return 0

    if args.command == "import":
        with open(args.csv_path, "rb") as handle:
            data = handle.read()
        with _lock(args):
            store = _load(args)
            updated = csvio.import_table(store, args.table, data)
            save_store(updated, db)
        print(f"imported {args.table} from {args.csv_path}")
        return 0

    if args.command == "export":
        data = csvio.export_table(_load(args), args.table)
        with open(args.csv_path, "wb") as handle:
            handle.write(data)
        print(f"exported {args.table} to {args.csv_path}")
        return 0

    if args.command == "serve":
        api.serve(db, host=args.host, port=args.port,
                  paper_compat=args.paper_compat, static_dir=args.static)
        return 0

    raise UsageError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 1
    except NotFoundError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 2
    except (ConflictError, ReferentialConflictError) as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 3
    except PayrollError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
