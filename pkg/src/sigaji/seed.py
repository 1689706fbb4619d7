"""Reference dataset: the original system's master rows and lecturers.

The grid ids in the source screenshots don't start at 1, so filler rows
with explicit "(unnamed-<table>-<id>)" names and zero tariffs are created
first to make the named rows land on their exact ids.  Tests rely on the
placeholder naming to tell filler from real data.
"""

from __future__ import annotations

from .domain import Dosen
from .errors import ValidationError
from .store import Store


def paper_seed(store: Store) -> None:
    """Load the reference dataset into an empty store."""
    if any([store.golongan, store.jfa, store.jstr, store.jkhs,
            store.pendidikan, store.dosen, store.gaji]):
        raise ValidationError("seed requires an empty store")

    def fill_until(table: str, target_id: int) -> None:
        while store.counters[_COUNTER[table]] < target_id:
            next_id = store.counters[_COUNTER[table]]
            store.insert_master(table, f"(unnamed-{table}-{next_id})", 0)

    fill_until("golongan", 2)
    store.insert_master("golongan", "III B", 1_100_000)          # id 2
    store.insert_master("jfa", "Asisten Ahli", 480_000)          # id 1
    fill_until("jfa", 6)                                         # ids 2-5
    store.insert_master("jstr", "Dosen", 0)                      # id 1
    store.insert_master("jkhs", "Level 0", 0)                    # id 1
    fill_until("pendidikan", 3)                                  # ids 1-2
    store.insert_master("pendidikan", "S2 - Magister", 17_500)   # id 3

    store.upsert_dosen(Dosen("020209151", "Liliya Dewi Susanawati", 2, 1, 1, 1, 3))
    store.upsert_dosen(Dosen("020209152", "Leon Andretti Abdillah", 2, 1, 1, 1, 3))
    store.upsert_dosen(Dosen("020209153", "Endang Lestari", 2, 5, 1, 1, 3))


_COUNTER = {
    "golongan": "gol",
    "jfa": "jfa",
    "jstr": "jstr",
    "jkhs": "jkhs",
    "pendidikan": "pend",
}
