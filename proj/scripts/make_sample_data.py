#!/usr/bin/env python3
"""Generate the synthetic sample datasets under data/.

The files follow the UCI column layouts (mushroom: class letter followed by
22 attribute letters; SPECT: binary class followed by 22 binary features) so
the loaders work unchanged on the real datasets.  The samples are small,
deterministic, and consistent: no two mushroom rows agree on the first ten
attributes, and the SPECT file contains exactly two indecisive vector pairs
meant to be removed by the loader's filter.
"""

import random
from pathlib import Path

MUSHROOM_ALPHABETS = [
    "bcxfks",       # cap-shape
    "fgys",         # cap-surface
    "nbcgrpuewy",   # cap-color
    "tf",           # bruises
    "alcyfmnps",    # odor
    "adfn",         # gill-attachment
    "cwd",          # gill-spacing
    "bn",           # gill-size
    "knbhgropuewy", # gill-color
    "et",           # stalk-shape
    "bcuezr",       # stalk-root
    "fyks",         # stalk-surface-above-ring
    "fyks",         # stalk-surface-below-ring
    "nbcgopewy",    # stalk-color-above-ring
    "nbcgopewy",    # stalk-color-below-ring
    "pu",           # veil-type
    "nowy",         # veil-color
    "not",          # ring-number
    "ceflnpsz",     # ring-type
    "knbhrouwy",    # spore-print-color
    "acnsvy",       # population
    "glmpuwd",      # habitat
]


def make_mushroom(path: Path, n_rows: int = 120) -> None:
    rng = random.Random(1729)
    rows = []
    seen = set()
    while len(rows) < n_rows:
        attrs = [rng.choice(a) for a in MUSHROOM_ALPHABETS]
        key = tuple(attrs[:10])
        if key in seen:
            continue
        seen.add(key)
        cls = rng.choice("ep")
        rows.append(",".join([cls] + attrs))
    path.write_text("\n".join(rows) + "\n")


def make_spect(path: Path, n_consistent: int = 66) -> None:
    rng = random.Random(9241)
    vectors = []
    seen = set()
    while len(vectors) < n_consistent + 2:
        vec = tuple(rng.randint(0, 1) for _ in range(22))
        if vec in seen:
            continue
        seen.add(vec)
        vectors.append(vec)
    rows = []
    for vec in vectors[:n_consistent]:
        cls = rng.randint(0, 1)
        rows.append(",".join([str(cls)] + [str(v) for v in vec]))
    # Two indecisive vectors, each listed under both labels.
    for vec in vectors[n_consistent:]:
        for cls in (0, 1):
            rows.append(",".join([str(cls)] + [str(v) for v in vec]))
    rng.shuffle(rows)
    path.write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    data = Path(__file__).resolve().parent.parent / "data"
    data.mkdir(exist_ok=True)
    make_mushroom(data / "mushroom.csv")
    make_spect(data / "spect.csv")
    print("wrote", data / "mushroom.csv", "and", data / "spect.csv")
