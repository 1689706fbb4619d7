import json
import os

import pytest
from fastapi.testclient import TestClient

from conftest import PAPER_SLIP_INPUT
from sigaji.api import create_app
from sigaji.cli import main
from sigaji.store import load_store

PAPER_SLIP_ARGS = ["slip", "create", "--periode", "01/06/2006",
                   "--nii", "020209152", "--sks", "100", "--pajak", "37500",
                   "--pot-kop", "5000", "--arisan", "255000", "--pot-lain", "0"]


@pytest.fixture
def db(tmp_path):
    path = str(tmp_path / "payroll.json")
    assert main(["--db", path, "init"]) == 0
    return path


@pytest.fixture
def seeded_db(tmp_path):
    path = str(tmp_path / "payroll.json")
    assert main(["--db", path, "seed", "--paper"]) == 0
    return path


def run(db, *argv):
    return main(["--db", db, *argv])


class TestInit:
    def test_creates_document(self, tmp_path, capsys):
        path = str(tmp_path / "new.json")
        assert main(["--db", path, "init"]) == 0
        assert os.path.exists(path)
        assert load_store(path).counters["gol"] == 1

    def test_refuses_existing(self, db):
        assert run(db, "init") == 3

    def test_force_overwrites(self, seeded_db):
        assert run(seeded_db, "init", "--force") == 0
        assert load_store(seeded_db).dosen == {}

    def test_db_from_env(self, tmp_path, monkeypatch):
        path = str(tmp_path / "env.json")
        monkeypatch.setenv("PAYROLL_DB", path)
        assert main(["init"]) == 0
        assert os.path.exists(path)


class TestSeed:
    def test_seed_then_dosen_list(self, seeded_db, capsys):
        assert run(seeded_db, "dosen", "list") == 0
        out = capsys.readouterr().out
        for nii in ("020209151", "020209152", "020209153"):
            assert nii in out
        assert "(3 baris)" in out

    def test_seeded_tariffs(self, seeded_db):
        store = load_store(seeded_db)
        assert store.get_master("golongan", 2).gapok == 1_100_000
        assert store.get_master("pendidikan", 3).tarif_mgjr == 17_500
        assert store.get_master("jfa", 1).nama_jfa == "Asisten Ahli"
        assert store.get_master("jfa", 5).nama_jfa == "(unnamed-jfa-5)"

    def test_seed_twice_refused(self, seeded_db, capsys):
        assert run(seeded_db, "seed", "--paper") == 3
        assert "error:" in capsys.readouterr().err

    def test_seed_force(self, seeded_db):
        assert run(seeded_db, "seed", "--paper", "--force") == 0


class TestMasterCommands:
    def test_add_prints_id(self, db, capsys):
        assert run(db, "master", "add", "--table", "golongan",
                   "--nama", "III A", "--tarif", "Rp900.000") == 0
        assert capsys.readouterr().out.strip() == "1"
        assert load_store(db).get_master("golongan", 1).gapok == 900_000

    def test_update_and_delete(self, db, capsys):
        run(db, "master", "add", "--table", "jstr", "--nama", "Dosen", "--tarif", "0")
        assert run(db, "master", "update", "--table", "jstr", "--id", "1",
                   "--nama", "Dosen", "--tarif", "100000") == 0
        assert run(db, "master", "delete", "--table", "jstr", "--id", "1") == 0

    def test_delete_absent_is_exit_2(self, db, capsys):
        assert run(db, "master", "delete", "--table", "jstr", "--id", "9") == 2

    def test_delete_referenced_is_exit_3(self, seeded_db, capsys):
        assert run(seeded_db, "master", "delete", "--table", "golongan", "--id", "2") == 3
        err = capsys.readouterr().err
        assert "020209152" in err and err.count("\n") == 1

    def test_list_one_table(self, seeded_db, capsys):
        assert run(seeded_db, "master", "list", "--table", "golongan") == 0
        out = capsys.readouterr().out
        assert "III B" in out and "Rp1.100.000" in out


class TestDosenCommands:
    def test_add_and_delete(self, seeded_db, capsys):
        assert run(seeded_db, "dosen", "add", "--nii", "020209154",
                   "--nama", "Dosen Baru", "--golongan", "2", "--jfa", "1",
                   "--jstr", "1", "--jkhs", "1", "--pendidikan", "3") == 0
        assert run(seeded_db, "dosen", "delete", "--nii", "020209154") == 0

    def test_dangling_ref_is_exit_3(self, seeded_db):
        assert run(seeded_db, "dosen", "add", "--nii", "020209154",
                   "--nama", "X", "--golongan", "99", "--jfa", "1",
                   "--jstr", "1", "--jkhs", "1", "--pendidikan", "3") == 3


class TestSlipCommands:
    def test_paper_slip_prints_default_net(self, seeded_db, capsys):
        assert run(seeded_db, *PAPER_SLIP_ARGS) == 0
        out = capsys.readouterr().out
        assert "Rp3.032.500" in out

    def test_paper_compat_prints_screenshot_net(self, tmp_path, capsys):
        path = str(tmp_path / "compat.json")
        assert main(["--db", path, "--paper-compat", "seed", "--paper"]) == 0
        assert main(["--db", path, "--paper-compat", *PAPER_SLIP_ARGS]) == 0
        out = capsys.readouterr().out
        assert "Rp3.292.500" in out

    def test_duplicate_period_is_exit_3(self, seeded_db, capsys):
        assert run(seeded_db, *PAPER_SLIP_ARGS) == 0
        assert run(seeded_db, *PAPER_SLIP_ARGS) == 3

    def test_negative_sks_is_exit_1(self, seeded_db):
        argv = list(PAPER_SLIP_ARGS)
        argv[argv.index("--sks") + 1] = "-1"
        assert run(seeded_db, *argv) == 1

    def test_slip_list(self, seeded_db, capsys):
        run(seeded_db, *PAPER_SLIP_ARGS)
        capsys.readouterr()
        assert run(seeded_db, "slip", "list", "--periode", "2006-06") == 0
        assert "020209152" in capsys.readouterr().out


class TestReportCommand:
    def test_text_report(self, seeded_db, capsys):
        run(seeded_db, *PAPER_SLIP_ARGS)
        capsys.readouterr()
        assert run(seeded_db, "report", "slip_gaji", "--no-slip", "1") == 0
        assert "Rp3.032.500" in capsys.readouterr().out

    def test_csv_report(self, seeded_db, capsys):
        run(seeded_db, *PAPER_SLIP_ARGS)
        capsys.readouterr()
        assert run(seeded_db, "report", "rekap_periode", "--periode", "2006-06",
                   "--format", "csv") == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0].startswith("nii,")
        assert "3032500" in out

    def test_absent_slip_is_exit_2(self, seeded_db):
        assert run(seeded_db, "report", "slip_gaji", "--no-slip", "9") == 2

    def test_unknown_report_is_usage_error(self, seeded_db):
        assert run(seeded_db, "report", "laporan") == 1


class TestImportExport:
    def test_export_dosen_has_three_data_lines(self, seeded_db, tmp_path, capsys):
        out = str(tmp_path / "dosen.csv")
        assert run(seeded_db, "export", "--table", "dosen", "--csv", out) == 0
        lines = open(out, encoding="utf-8").read().splitlines()
        assert len(lines) == 4  # header + 3 rows
        assert lines[0] == "nii,nama_dosen,golongan,jab_fa,jab_str,jab_khs,pendidikan"

    @pytest.mark.parametrize("table", ["golongan", "jfa", "jstr", "jkhs",
                                       "pendidikan", "dosen", "gaji"])
    def test_import_export_round_trip(self, seeded_db, tmp_path, table):
        run(seeded_db, *PAPER_SLIP_ARGS)
        before = load_store(seeded_db).to_document()
        path = str(tmp_path / f"{table}.csv")
        assert run(seeded_db, "export", "--table", table, "--csv", path) == 0
        assert run(seeded_db, "import", "--table", table, "--csv", path) == 0
        assert load_store(seeded_db).to_document()[table] == before[table]

    def test_import_dangling_fk_aborts_without_partial_state(self, seeded_db, tmp_path, capsys):
        path = str(tmp_path / "dosen.csv")
        run(seeded_db, "export", "--table", "dosen", "--csv", path)
        text = open(path, encoding="utf-8").read().replace(
            "020209153,Endang Lestari,2,5", "020209153,Endang Lestari,2,77")
        open(path, "w", encoding="utf-8").write(text)
        before = load_store(seeded_db).to_document()
        assert run(seeded_db, "import", "--table", "dosen", "--csv", path) == 1
        err = capsys.readouterr().err
        assert "line 4" in err
        assert load_store(seeded_db).to_document() == before

    def test_import_bad_money_names_line(self, seeded_db, tmp_path, capsys):
        path = str(tmp_path / "golongan.csv")
        run(seeded_db, "export", "--table", "golongan", "--csv", path)
        text = open(path, encoding="utf-8").read().replace("1100000", "banyak")
        open(path, "w", encoding="utf-8").write(text)
        assert run(seeded_db, "import", "--table", "golongan", "--csv", path) == 1
        assert "line 3" in capsys.readouterr().err

    def test_import_missing_file_is_io_error(self, seeded_db):
        assert run(seeded_db, "import", "--table", "dosen", "--csv", "/no/such.csv") == 4


class TestUsage:
    def test_unknown_command(self, db, capsys):
        assert main(["--db", db, "menari"]) == 1

    def test_missing_required_flag(self, db):
        assert run(db, "master", "add", "--table", "golongan") == 1

    def test_missing_store_is_io_error(self, tmp_path):
        assert main(["--db", str(tmp_path / "absent.json"), "dosen", "list"]) == 4


class TestCliApiEquivalence:
    def test_same_mutations_same_document_bytes(self, tmp_path):
        cli_db = str(tmp_path / "cli.json")
        api_db = str(tmp_path / "api.json")
        for path in (cli_db, api_db):
            assert main(["--db", path, "seed", "--paper"]) == 0

        assert main(["--db", cli_db, "master", "add", "--table", "golongan",
                     "--nama", "III C", "--tarif", "1250000"]) == 0
        assert main(["--db", cli_db, "dosen", "add", "--nii", "020209154",
                     "--nama", "Dosen Baru", "--golongan", "3", "--jfa", "1",
                     "--jstr", "1", "--jkhs", "1", "--pendidikan", "3"]) == 0
        assert main(["--db", cli_db, *PAPER_SLIP_ARGS]) == 0

        client = TestClient(create_app(db_path=api_db))
        assert client.post("/api/golongan", json={
            "nama_gol": "III C", "gapok": 1_250_000}).status_code == 201
        assert client.post("/api/dosen", json={
            "nii": "020209154", "nama_dosen": "Dosen Baru", "golongan": 3,
            "jab_fa": 1, "jab_str": 1, "jab_khs": 1, "pendidikan": 3,
        }).status_code == 201
        assert client.post("/api/slips", json=PAPER_SLIP_INPUT).status_code == 201

        with open(cli_db, "rb") as a, open(api_db, "rb") as b:
            assert a.read() == b.read()
