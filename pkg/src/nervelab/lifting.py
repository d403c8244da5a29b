"""Lifting problems, right-lifting-property tests, bounded small-object
factorization, and homotopy-pushout comparison.

Lift search works in three ambients: simplicial maps, functors between
finite categories, and strict 2-functors.  Factorization and the homotopy
pushout are simplicial (they need pushouts, which this library only
materializes for simplicial sets).

All claims are bounded by the ambient truncation; a factorization report
records the bound alongside its residual problems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from .cat import CatFunctor, compose_functors, enumerate_functors
from .errors import BudgetError, ContractError
from .homology import EvidenceReport, weak_equivalence_evidence
from .simplicial import (
    SimplicialMap,
    SimplicialSet,
    compose_maps,
    enumerate_simplicial_maps,
    product,
    product_projections,
    pushout,
    pushout_induced,
)
from .twocat import TwoFunctor, compose_two_functors, enumerate_two_functors

Map = Union[SimplicialMap, CatFunctor, TwoFunctor]


def _compose(g: Map, f: Map) -> Map:
    if isinstance(f, SimplicialMap):
        return compose_maps(g, f)
    if isinstance(f, CatFunctor):
        return compose_functors(g, f)
    return compose_two_functors(g, f)


@dataclass
class LiftingProblem:
    """A commuting square: ``i: A -> B`` on the left, ``p: X -> Y`` on the
    right, ``top: A -> X`` and ``bottom: B -> Y``."""

    i: Map
    p: Map
    top: Map
    bottom: Map

    def __post_init__(self) -> None:
        kinds = {type(self.i), type(self.p), type(self.top), type(self.bottom)}
        if len(kinds) != 1:
            raise ContractError("all four maps must live in the same ambient")
        if _compose(self.p, self.top) != _compose(self.bottom, self.i):
            raise ContractError("the square does not commute")


def _find_simplicial_lift(P: LiftingProblem) -> Optional[SimplicialMap]:
    i, p, u, v = P.i, P.p, P.top, P.bottom
    B, X = i.target, p.source
    pin: dict[tuple[int, str], str] = {}
    for n in range(i.bound + 1):
        for a, b_cell in i.levels[n].items():
            want = u.levels[n][a]
            prev = pin.get((n, b_cell))
            if prev is not None and prev != want:
                return None  # i identifies cells that u separates
            pin[(n, b_cell)] = want

    fibers: dict[tuple[int, str], list[str]] = {}
    for n in range(min(B.dim_bound, X.dim_bound) + 1):
        for b_cell in B.cells[n]:
            target = v.levels[n][b_cell]
            fibers[(n, b_cell)] = [x for x in X.cells[n] if p.levels[n][x] == target]

    for h in enumerate_simplicial_maps(
        B, X, pin=pin, candidates=lambda n, c: fibers[(n, c)], limit=1
    ):
        return h
    return None


def _find_cat_lift(P: LiftingProblem) -> Optional[CatFunctor]:
    i, p, u, v = P.i, P.p, P.top, P.bottom
    B, X = i.target, p.source
    pin_obj: dict[str, str] = {}
    for a, b in i.objects.items():
        want = u.objects[a]
        if pin_obj.get(b, want) != want:
            return None
        pin_obj[b] = want
    pin_arr: dict[str, str] = {}
    for f, g in i.arrows.items():
        want = u.arrows[f]
        if pin_arr.get(g, want) != want:
            return None
        pin_arr[g] = want
    for h in enumerate_functors(
        B,
        X,
        pin_objects=pin_obj,
        pin_arrows=pin_arr,
        object_filter=lambda b, x: p.objects[x] == v.objects[b],
        arrow_filter=lambda g, x: p.arrows[x] == v.arrows[g],
    ):
        return h
    return None


def _find_two_lift(P: LiftingProblem) -> Optional[TwoFunctor]:
    i, p, u, v = P.i, P.p, P.top, P.bottom
    B, X = i.target, p.source
    pin_obj: dict[str, str] = {}
    for a, b in i.objects.items():
        want = u.objects[a]
        if pin_obj.get(b, want) != want:
            return None
        pin_obj[b] = want
    pin_one: dict[tuple, str] = {}
    for (a1, a2, f), g in i.on1.items():
        key = (i.objects[a1], i.objects[a2], g)
        want = u.on1[(a1, a2, f)]
        if pin_one.get(key, want) != want:
            return None
        pin_one[key] = want
    pin_two: dict[tuple, str] = {}
    for (a1, a2, al), be in i.on2.items():
        key = (i.objects[a1], i.objects[a2], be)
        want = u.on2[(a1, a2, al)]
        if pin_two.get(key, want) != want:
            return None
        pin_two[key] = want
    for h in enumerate_two_functors(
        B,
        X,
        pin_objects=pin_obj,
        pin_one=pin_one,
        pin_two=pin_two,
        object_filter=lambda b, x: p.objects[x] == v.objects[b],
        one_filter=lambda key, x, im: p.on1[(im[0], im[1], x)] == v.on1[key],
        two_filter=lambda key, x, im: p.on2[(im[0], im[1], x)] == v.on2[key],
        limit=1,
    ):
        return h
    return None


def find_lift(P: LiftingProblem) -> Optional[Map]:
    """A filler ``h: B -> X`` with ``h.i = top`` and ``p.h = bottom``,
    found by canonical-order backtracking; None only after exhaustion."""
    if isinstance(P.i, SimplicialMap):
        return _find_simplicial_lift(P)
    if isinstance(P.i, CatFunctor):
        return _find_cat_lift(P)
    return _find_two_lift(P)


# ---------------------------------------------------------------------------
# RLP tests
# ---------------------------------------------------------------------------

def _enumerate(A, B) -> Iterator[Map]:
    if isinstance(A, SimplicialSet):
        yield from enumerate_simplicial_maps(A, B)
    else:
        from .cat import FinCat

        if isinstance(A, FinCat):
            yield from enumerate_functors(A, B)
        else:
            yield from enumerate_two_functors(A, B)


def _source(m: Map):
    return m.source


def _target(m: Map):
    return m.target


def generator_squares(p: Map, i: Map) -> Iterator[LiftingProblem]:
    """All commuting squares from the generator i to p, in canonical order."""
    A, B = _source(i), _target(i)
    X, Y = _source(p), _target(p)
    for u in _enumerate(A, X):
        want = _compose(p, u)
        if isinstance(i, SimplicialMap):
            pin = {}
            ok = True
            for n in range(i.bound + 1):
                for a, b_cell in i.levels[n].items():
                    val = want.levels[n][a]
                    if pin.get((n, b_cell), val) != val:
                        ok = False
                        break
                    pin[(n, b_cell)] = val
                if not ok:
                    break
            if not ok:
                continue
            vs = enumerate_simplicial_maps(B, Y, pin=pin)
        elif isinstance(i, CatFunctor):
            pin_obj = {i.objects[a]: want.objects[a] for a in A.objects}
            pin_arr = {i.arrows[f]: want.arrows[f] for f in A.arrows}
            if any(
                want.objects[a] != pin_obj[i.objects[a]] for a in A.objects
            ) or any(want.arrows[f] != pin_arr[i.arrows[f]] for f in A.arrows):
                continue
            vs = enumerate_functors(B, Y, pin_objects=pin_obj, pin_arrows=pin_arr)
        else:
            pin_obj = {i.objects[a]: want.objects[a] for a in A.objects}
            pin_one = {
                (i.objects[a], i.objects[b], i.on1[(a, b, f)]): want.on1[(a, b, f)]
                for (a, b, f) in i.on1
            }
            pin_two = {
                (i.objects[a], i.objects[b], i.on2[(a, b, t)]): want.on2[(a, b, t)]
                for (a, b, t) in i.on2
            }
            vs = enumerate_two_functors(
                B, Y, pin_objects=pin_obj, pin_one=pin_one, pin_two=pin_two
            )
        for v in vs:
            if _compose(v, i) == want:
                yield LiftingProblem(i, p, u, v)


def has_rlp(p: Map, generators: Sequence[Map]) -> tuple[bool, Optional[LiftingProblem]]:
    """True when every generator square has a filler; otherwise the first
    unsolvable square in canonical order is returned as the counterexample."""
    for i in generators:
        for square in generator_squares(p, i):
            if find_lift(square) is None:
                return False, square
    return True, None


# ---------------------------------------------------------------------------
# bounded small-object factorization (simplicial)
# ---------------------------------------------------------------------------

@dataclass
class Attachment:
    stage: int
    generator: int
    top: str  # canonical encoding of the attaching map at attach time
    bottom: str


@dataclass
class FactorizationReport:
    """``f = right . left`` with ``left`` a relative cell complex.

    ``residual`` lists the generator squares against the right factor that
    remained unsolved when the stage budget ran out (empty residual
    certifies the RLP within the truncation bound).
    """

    middle: SimplicialSet
    left: SimplicialMap
    right: SimplicialMap
    attachments: list[Attachment] = field(default_factory=list)
    residual: list[LiftingProblem] = field(default_factory=list)
    stages: int = 0
    bound: int = 0

    def composite_equals_input(self, f: SimplicialMap) -> bool:
        return compose_maps(self.right, self.left) == f


def small_object_factorize(
    f: SimplicialMap, generators: Sequence[SimplicialMap], stage_budget: int
) -> FactorizationReport:
    """Factor ``f`` as a relative cell complex followed by a map with the
    RLP against the generators, within the stage budget.

    Each stage collects every unsolved generator square against the current
    right factor and attaches all of them (sequentially, in canonical
    order, which is the deterministic reading of a simultaneous pushout).
    """
    from .simplicial import identity_map

    if stage_budget < 0:
        raise BudgetError("stage budget must be >= 0")
    X, Y = f.source, f.target
    left = identity_map(X)
    q = f
    Z = X
    attachments: list[Attachment] = []
    stages = 0
    for stage in range(1, stage_budget + 1):
        unsolved = []
        for gi, i in enumerate(generators):
            for square in generator_squares(q, i):
                if find_lift(square) is None:
                    unsolved.append((gi, square))
        if not unsolved:
            break
        stages = stage
        carry = identity_map(Z)  # transports stage-start attaching maps forward
        for gi, square in unsolved:
            i, u, v = square.i, square.top, square.bottom
            P, jz, jb = pushout(compose_maps(carry, u), i)
            attachments.append(Attachment(stage, gi, u.encode(), v.encode()))
            q = pushout_induced(P, jz, jb, q, v)
            carry = compose_maps(jz, carry)
            left = compose_maps(jz, left)
            Z = P
    residual = []
    for gi, i in enumerate(generators):
        for square in generator_squares(q, i):
            if find_lift(square) is None:
                residual.append(square)
    return FactorizationReport(
        middle=Z,
        left=left,
        right=q,
        attachments=attachments,
        residual=residual,
        stages=stages,
        bound=min(X.dim_bound, Y.dim_bound),
    )


# ---------------------------------------------------------------------------
# homotopy pushout
# ---------------------------------------------------------------------------

def cylinder_inclusions(A: SimplicialSet, D: int) -> tuple[SimplicialSet, SimplicialMap, SimplicialMap, SimplicialMap]:
    """``A x Delta_1`` with its two end inclusions and the projection to A."""
    from .simplicial import standard_simplex

    interval = standard_simplex(1, D)
    Cyl = product(A, interval)
    proj_a, _ = product_projections(A, interval)
    ends = []
    for vertex in ("0", "1"):
        levels = {}
        img = {0: vertex}
        for n in range(1, min(A.dim_bound, D) + 1):
            img[n] = interval.s(n - 1, 0, img[n - 1])
        for n in range(min(A.dim_bound, D) + 1):
            levels[n] = {a: f"({a}|{img[n]})" for a in A.cells[n]}
        ends.append(SimplicialMap(A, Cyl, levels, check=False))
    return Cyl, ends[0], ends[1], proj_a


def homotopy_pushout(
    f: SimplicialMap, g: SimplicialMap
) -> tuple[SimplicialSet, SimplicialMap, SimplicialMap, SimplicialMap]:
    """The double mapping cylinder of ``X <-f- A -g-> Y``.

    Returns ``(P, from_X, from_Y, collapse_cylinder_to_A_then_f)`` where the
    last component records how the cylinder part projects (used to induce
    comparison maps).
    """
    if f.source != g.source:
        raise ContractError("span legs must share their source")
    A = f.source
    D = min(f.target.dim_bound, g.target.dim_bound, A.dim_bound)
    Cyl, i0, i1, proj = cylinder_inclusions(A, D)
    P1, jx, jcyl = pushout(f, i0)
    P, jy, jp1 = pushout(g, compose_maps(jcyl, i1))
    return P, compose_maps(jp1, jx), jy, compose_maps(jp1, jcyl)


def is_homotopy_cocartesian(
    f: SimplicialMap,
    g: SimplicialMap,
    x: SimplicialMap,
    y: SimplicialMap,
    k: int,
) -> EvidenceReport:
    """Homology comparison (through degree k) of the canonical map from the
    double mapping cylinder of the span to the square's corner."""
    if _compose(x, f) != _compose(y, g):
        raise ContractError("the square does not commute")
    A = f.source
    W = x.target
    D = min(f.target.dim_bound, g.target.dim_bound, A.dim_bound)
    Cyl, i0, i1, proj = cylinder_inclusions(A, D)
    P1, jx, jcyl = pushout(f, i0)
    P, jy, jp1 = pushout(g, compose_maps(jcyl, i1))
    h = compose_maps(x, f)  # = y . g
    q_cyl = compose_maps(h, proj)
    c1 = pushout_induced(P1, jx, jcyl, x, q_cyl)
    c = pushout_induced(P, jy, jp1, y, c1)
    return weak_equivalence_evidence(c, k)
