"""Regenerate the CLI sample inputs and golden outputs.

Run from the repository root:  python3 tests/generate_goldens.py
"""

from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).parent))

from cli_cases import CASES, DATA, GOLDEN

from nervelab import serialize as ser
from nervelab.cat import arrow_category, identity_functor
from nervelab.cli import main
from nervelab.corpus import circle, localizer_universe
from nervelab.localizer import MarkedClass
from nervelab.presentations import cat_of
from nervelab.simplicial import (
    SimplicialMap,
    boundary,
    constant_map,
    identity_map,
    standard_simplex,
)
from nervelab.twocat import as_two_category, two_functor_to_terminal


def write(path: Path, doc) -> None:
    path.write_text(ser.canonical_json(doc), encoding="utf-8")


def make_samples() -> None:
    DATA.mkdir(exist_ok=True)
    arrow = arrow_category()
    write(DATA / "arrow.fincat.json", ser.fincat_to_doc(arrow))
    write(DATA / "iota_arrow.fin2cat.json", ser.fin2cat_to_doc(as_two_category(arrow)))
    write(DATA / "boundary2.sset.json", ser.sset_to_doc(boundary(2, 2)))
    write(DATA / "interval.sset.json", ser.sset_to_doc(standard_simplex(1, 1)))
    write(DATA / "simplex2.sset.json", ser.sset_to_doc(standard_simplex(2, 2)))
    write(DATA / "point.sset.json", ser.sset_to_doc(standard_simplex(0, 2)))
    write(DATA / "circle.sset.json", ser.sset_to_doc(circle(2)))
    write(DATA / "pres_boundary2.json", ser.pres_to_doc(cat_of(boundary(2, 2))))

    interval = standard_simplex(1, 2)
    write(DATA / "interval_to_point.smap.json",
          ser.smap_to_doc(constant_map(interval, standard_simplex(0, 2), "0")))
    b2 = boundary(2, 3)
    write(DATA / "boundary2_to_point.smap.json",
          ser.smap_to_doc(constant_map(b2, standard_simplex(0, 3), "0")))
    write(DATA / "identity_interval.smap.json",
          ser.smap_to_doc(identity_map(standard_simplex(1, 2))))

    # a solvable lifting problem: extend an endpoint over the interval
    A = boundary(1, 1)
    B = standard_simplex(1, 1)
    i = SimplicialMap(A, B, {n: {c: c for c in A.cells[n]} for n in range(2)})
    p = constant_map(B, standard_simplex(0, 1), "0")
    u = SimplicialMap(A, B, {n: {c: c for c in A.cells[n]} for n in range(2)})
    v = constant_map(B, standard_simplex(0, 1), "0")
    write(DATA / "problem.json", {
        "i": ser.smap_to_doc(i), "p": ser.smap_to_doc(p),
        "top": ser.smap_to_doc(u), "bottom": ser.smap_to_doc(v),
    })

    # the circle span
    A = boundary(1, 3)
    X = standard_simplex(0, 3)
    Y = standard_simplex(1, 3)
    f = SimplicialMap(A, X, {n: {c: X.cells[n][0] for c in A.cells[n]} for n in range(4)})
    g = SimplicialMap(A, Y, {n: {c: c for c in A.cells[n]} for n in range(4)})
    write(DATA / "span_circle.json", {"f": ser.smap_to_doc(f), "g": ser.smap_to_doc(g)})

    write(DATA / "iota_arrow_to_terminal.tfun.json",
          ser.tfun_to_doc(two_functor_to_terminal(as_two_category(arrow))))

    U = localizer_universe()
    write(DATA / "universe.json", ser.universe_to_doc(U))
    write(DATA / "marked_empty.json", ser.marked_to_doc(MarkedClass(frozenset())))
    write(DATA / "marked_all.json", ser.marked_to_doc(MarkedClass(frozenset(U.edges))))


def make_goldens() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in CASES:
        out = GOLDEN / f"{name}.json"
        status = main(argv + ["--out", str(out)])
        if status != 0:
            raise SystemExit(f"case {name} failed with status {status}")
        print(f"wrote {out}")


if __name__ == "__main__":
    make_samples()
    make_goldens()
