import random

import pytest

from sigaji import engine
from sigaji.domain import Dosen
from sigaji.seed import paper_seed
from sigaji.store import Store

PAPER_NII = "020209152"

PAPER_SLIP_INPUT = {
    "periode": "2006-06",
    "nii": PAPER_NII,
    "sks_mgjr": 100,
    "pajak": 37_500,
    "pot_kop": 5_000,
    "arisan": 255_000,
    "pot_lain": 0,
}


@pytest.fixture
def store():
    return Store()


@pytest.fixture
def seeded():
    s = Store()
    paper_seed(s)
    return s


@pytest.fixture
def seeded_compat():
    s = Store(paper_compat=True)
    paper_seed(s)
    return s


def paper_input():
    return engine.GajiInput.from_raw(dict(PAPER_SLIP_INPUT))


def build_random_store(rng: random.Random, paper_compat: bool = False) -> Store:
    """A small consistent store built only through public operations."""
    s = Store(paper_compat=paper_compat)
    for table in ("golongan", "jfa", "jstr", "jkhs", "pendidikan"):
        for i in range(rng.randint(1, 4)):
            s.insert_master(table, f"{table}-{rng.randrange(10**6)}-{i}",
                            rng.randrange(0, 5_000_000))
    for i in range(rng.randint(0, 5)):
        nii = f"{rng.randrange(10**8):09d}{i}"[:10]
        s.upsert_dosen(Dosen(
            nii=nii,
            nama_dosen=f"Dosen {rng.randrange(10**6)}",
            golongan=rng.choice(list(s.golongan)),
            jab_fa=rng.choice(list(s.jfa)),
            jab_str=rng.choice(list(s.jstr)),
            jab_khs=rng.choice(list(s.jkhs)),
            pendidikan=rng.choice(list(s.pendidikan)),
        ))
    for dosen in list(s.dosen.values()):
        for month in rng.sample(range(1, 13), rng.randint(0, 3)):
            profil = engine.resolve_profil(s, dosen.nii)
            sks = rng.randrange(0, 30)
            pajak = rng.randrange(0, sks * profil.tarif_mgjr + 1)
            gross = (profil.gapok + profil.tunj_fa + profil.tunj_str
                     + profil.tunj_khs + sks * profil.tarif_mgjr - pajak)
            engine.create_slip(s, engine.GajiInput(
                periode=f"2006-{month:02d}",
                nii=dosen.nii,
                sks_mgjr=sks,
                pajak=pajak,
                pot_kop=rng.randrange(0, gross // 3 + 1),
                arisan=rng.randrange(0, gross // 3 + 1),
                pot_lain=rng.randrange(0, gross // 3 + 1),
            ))
    return s
