"""Finite strict 2-categories and strict 2-functors.

A :class:`Fin2Cat` stores, for every ordered pair of objects, a hom
:class:`~nervelab.cat.FinCat` whose objects are the 1-cells and whose
arrows are the 2-cells.  Horizontal composition is a pair of tables

* ``hcompose1[(a, b, c, f, g)]`` for 1-cells ``f: a -> b``, ``g: b -> c``
  (read "f then g"),
* ``hcompose2[(a, b, c, alpha, beta)]`` for 2-cells,

and ``unit[a]`` is the distinguished object of ``hom(a, a)``.  Since
1-cell and 2-cell names are only unique within their hom-category, all
tables are keyed by the surrounding objects.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Optional

from .cat import CatFunctor, FinCat, discrete_category, has_final_object, validate_category
from .errors import ContractError, DomainError
from .simplicial import Monotone, SimplicialSet, coface, codegeneracy, is_monotone

Obj = str
One = str  # a 1-cell (an object of a hom-category)
Two = str  # a 2-cell (an arrow of a hom-category)


class Fin2Cat:
    __slots__ = ("objects", "hom", "hcompose1", "hcompose2", "unit")

    def __init__(
        self,
        objects: Iterable[Obj],
        hom: Mapping[tuple[Obj, Obj], FinCat],
        hcompose1: Mapping[tuple[Obj, Obj, Obj, One, One], One],
        hcompose2: Mapping[tuple[Obj, Obj, Obj, Two, Two], Two],
        unit: Mapping[Obj, One],
    ):
        self.objects = tuple(sorted(objects))
        self.hom = dict(hom)
        for a in self.objects:
            for b in self.objects:
                self.hom.setdefault((a, b), FinCat([], [], {}, {}, {}, {}))
        self.hcompose1 = dict(hcompose1)
        self.hcompose2 = dict(hcompose2)
        self.unit = dict(unit)

    def hc1(self, a: Obj, b: Obj, c: Obj, f: One, g: One) -> One:
        return self.hcompose1[(a, b, c, f, g)]

    def hc2(self, a: Obj, b: Obj, c: Obj, al: Two, be: Two) -> Two:
        return self.hcompose2[(a, b, c, al, be)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fin2Cat):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.hom == other.hom
            and self.hcompose1 == other.hcompose1
            and self.hcompose2 == other.hcompose2
            and self.unit == other.unit
        )

    def __repr__(self) -> str:
        cells = sum(len(H.objects) for H in self.hom.values())
        return f"Fin2Cat({len(self.objects)} objects, {cells} one-cells)"


def validate_2category(C: Fin2Cat) -> list[str]:
    """Exhaustive check of the strict 2-category axioms."""
    out = []
    objs = C.objects
    for (a, b), H in C.hom.items():
        if a not in set(objs) or b not in set(objs):
            out.append(f"hom({a!r}, {b!r}) indexed by foreign objects")
            continue
        for msg in validate_category(H):
            out.append(f"hom({a!r}, {b!r}): {msg}")
    for a in objs:
        u = C.unit.get(a)
        if u is None or u not in set(C.hom[(a, a)].objects):
            out.append(f"unit of {a!r} missing from hom({a!r}, {a!r})")

    def hc1(a, b, c, f, g):
        return C.hcompose1.get((a, b, c, f, g))

    # totality and typing of horizontal composition
    for a in objs:
        for b in objs:
            for c in objs:
                H_ab, H_bc, H_ac = C.hom[(a, b)], C.hom[(b, c)], C.hom[(a, c)]
                for f in H_ab.objects:
                    for g in H_bc.objects:
                        h = hc1(a, b, c, f, g)
                        if h is None or h not in set(H_ac.objects):
                            out.append(f"hcompose1 missing/foreign on ({a},{b},{c},{f},{g})")
                for al in H_ab.arrows:
                    for be in H_bc.arrows:
                        ga = C.hcompose2.get((a, b, c, al, be))
                        if ga is None or ga not in set(H_ac.arrows):
                            out.append(f"hcompose2 missing/foreign on ({a},{b},{c},{al},{be})")
                            continue
                        want_src = hc1(a, b, c, H_ab.src[al], H_bc.src[be])
                        want_dst = hc1(a, b, c, H_ab.dst[al], H_bc.dst[be])
                        if H_ac.src[ga] != want_src or H_ac.dst[ga] != want_dst:
                            out.append(f"hcompose2 endpoints wrong on ({a},{b},{c},{al},{be})")

    # functoriality of horizontal composition (identities and interchange)
    for a in objs:
        for b in objs:
            for c in objs:
                H_ab, H_bc, H_ac = C.hom[(a, b)], C.hom[(b, c)], C.hom[(a, c)]
                for f in H_ab.objects:
                    for g in H_bc.objects:
                        got = C.hcompose2.get((a, b, c, H_ab.identity[f], H_bc.identity[g]))
                        want = H_ac.identity.get(hc1(a, b, c, f, g) or "")
                        if got != want:
                            out.append(f"hcompose2 of identities wrong at ({a},{b},{c},{f},{g})")
                for al in H_ab.arrows:
                    for al2 in H_ab.arrows:
                        if H_ab.dst[al] != H_ab.src[al2]:
                            continue
                        for be in H_bc.arrows:
                            for be2 in H_bc.arrows:
                                if H_bc.dst[be] != H_bc.src[be2]:
                                    continue
                                lhs = C.hcompose2.get(
                                    (a, b, c, H_ab.compose[(al2, al)], H_bc.compose[(be2, be)])
                                )
                                x1 = C.hcompose2.get((a, b, c, al, be))
                                x2 = C.hcompose2.get((a, b, c, al2, be2))
                                rhs = H_ac.compose.get((x2 or "", x1 or ""))
                                if lhs is None or lhs != rhs:
                                    out.append(
                                        f"interchange fails at ({a},{b},{c}) on ({al},{al2},{be},{be2})"
                                    )

    # associativity of horizontal composition
    for a in objs:
        for b in objs:
            for c in objs:
                for d in objs:
                    for f in C.hom[(a, b)].objects:
                        for g in C.hom[(b, c)].objects:
                            for h in C.hom[(c, d)].objects:
                                lhs = hc1(a, c, d, hc1(a, b, c, f, g) or "", h)
                                rhs = hc1(a, b, d, f, hc1(b, c, d, g, h) or "")
                                if lhs is None or lhs != rhs:
                                    out.append(f"hcompose1 not associative on ({f},{g},{h})")
                    for al in C.hom[(a, b)].arrows:
                        for be in C.hom[(b, c)].arrows:
                            for ga in C.hom[(c, d)].arrows:
                                x = C.hcompose2.get((a, b, c, al, be))
                                lhs = C.hcompose2.get((a, c, d, x or "", ga))
                                y = C.hcompose2.get((b, c, d, be, ga))
                                rhs = C.hcompose2.get((a, b, d, al, y or ""))
                                if lhs is None or lhs != rhs:
                                    out.append(f"hcompose2 not associative on ({al},{be},{ga})")

    # unit laws
    for a in objs:
        for b in objs:
            H = C.hom[(a, b)]
            ua, ub = C.unit.get(a), C.unit.get(b)
            if ua is None or ub is None:
                continue
            for f in H.objects:
                if hc1(a, a, b, ua, f) != f:
                    out.append(f"left unit law fails on 1-cell {f!r} in hom({a},{b})")
                if hc1(a, b, b, f, ub) != f:
                    out.append(f"right unit law fails on 1-cell {f!r} in hom({a},{b})")
            iua = C.hom[(a, a)].identity.get(ua)
            iub = C.hom[(b, b)].identity.get(ub)
            for al in H.arrows:
                if C.hcompose2.get((a, a, b, iua or "", al)) != al:
                    out.append(f"left unit law fails on 2-cell {al!r} in hom({a},{b})")
                if C.hcompose2.get((a, b, b, al, iub or "")) != al:
                    out.append(f"right unit law fails on 2-cell {al!r} in hom({a},{b})")
    return out


class TwoFunctor:
    """A strict 2-functor: object map plus a functor on every hom-category."""

    __slots__ = ("source", "target", "objects", "on1", "on2")

    def __init__(
        self,
        source: Fin2Cat,
        target: Fin2Cat,
        objects: Mapping[Obj, Obj],
        on1: Mapping[tuple[Obj, Obj, One], One],
        on2: Mapping[tuple[Obj, Obj, Two], Two],
        check: bool = True,
    ):
        self.source = source
        self.target = target
        self.objects = dict(sorted(objects.items()))
        self.on1 = dict(sorted(on1.items()))
        self.on2 = dict(sorted(on2.items()))
        if check:
            problems = validate_two_functor(self)
            if problems:
                raise ContractError("not a 2-functor: " + "; ".join(problems[:3]))

    def on_obj(self, a: Obj) -> Obj:
        return self.objects[a]

    def one(self, a: Obj, b: Obj, f: One) -> One:
        return self.on1[(a, b, f)]

    def two(self, a: Obj, b: Obj, al: Two) -> Two:
        return self.on2[(a, b, al)]

    def encode(self) -> str:
        o = ",".join(f"{a}>{b}" for a, b in self.objects.items())
        c1 = ",".join(f"{a}!{b}!{f}>{v}" for (a, b, f), v in self.on1.items())
        c2 = ",".join(f"{a}!{b}!{t}>{v}" for (a, b, t), v in self.on2.items())
        return o + "/" + c1 + "/" + c2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoFunctor):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.objects == other.objects
            and self.on1 == other.on1
            and self.on2 == other.on2
        )

    def __repr__(self) -> str:
        return f"TwoFunctor({self.source!r} -> {self.target!r})"


def validate_two_functor(F: TwoFunctor) -> list[str]:
    out = []
    A, B = F.source, F.target
    for a in A.objects:
        if F.objects.get(a) not in set(B.objects):
            out.append(f"object {a!r} unassigned or foreign")
    for (a, b), H in A.hom.items():
        fa, fb = F.objects.get(a), F.objects.get(b)
        K = B.hom.get((fa, fb))
        if K is None:
            if H.objects:
                out.append(f"hom({a},{b}) has no image hom")
            continue
        for f in H.objects:
            v = F.on1.get((a, b, f))
            if v is None or v not in set(K.objects):
                out.append(f"1-cell ({a},{b},{f}) unassigned or foreign")
        for al in H.arrows:
            v = F.on2.get((a, b, al))
            if v is None or v not in set(K.arrows):
                out.append(f"2-cell ({a},{b},{al}) unassigned or foreign")
                continue
            if K.src[v] != F.on1.get((a, b, H.src[al])) or K.dst[v] != F.on1.get((a, b, H.dst[al])):
                out.append(f"2-cell ({a},{b},{al}) image has wrong endpoints")
        for f in H.objects:
            if F.on2.get((a, b, H.identity[f])) != K.identity.get(F.on1.get((a, b, f), "")):
                out.append(f"identity 2-cell of ({a},{b},{f}) not preserved")
        for al in H.arrows:
            for be in H.arrows:
                if H.dst[al] != H.src[be]:
                    continue
                lhs = F.on2.get((a, b, H.compose[(be, al)]))
                rhs = K.compose.get((F.on2.get((a, b, be), ""), F.on2.get((a, b, al), "")))
                if lhs is None or lhs != rhs:
                    out.append(f"vertical composition not preserved in hom({a},{b})")
    for a in A.objects:
        if F.on1.get((a, a, A.unit[a])) != B.unit.get(F.objects.get(a, "")):
            out.append(f"unit 1-cell of {a!r} not preserved")
    for a in A.objects:
        for b in A.objects:
            for c in A.objects:
                fa, fb, fc = (F.objects.get(x) for x in (a, b, c))
                for f in A.hom[(a, b)].objects:
                    for g in A.hom[(b, c)].objects:
                        lhs = F.on1.get((a, c, A.hc1(a, b, c, f, g)))
                        rhs = B.hcompose1.get(
                            (fa, fb, fc, F.on1.get((a, b, f), ""), F.on1.get((b, c, g), ""))
                        )
                        if lhs is None or lhs != rhs:
                            out.append(f"hcompose1 not preserved on ({a},{b},{c},{f},{g})")
                for al in A.hom[(a, b)].arrows:
                    for be in A.hom[(b, c)].arrows:
                        lhs = F.on2.get((a, c, A.hc2(a, b, c, al, be)))
                        rhs = B.hcompose2.get(
                            (fa, fb, fc, F.on2.get((a, b, al), ""), F.on2.get((b, c, be), ""))
                        )
                        if lhs is None or lhs != rhs:
                            out.append(f"hcompose2 not preserved on ({a},{b},{c},{al},{be})")
    return out


def identity_two_functor(C: Fin2Cat) -> TwoFunctor:
    return TwoFunctor(
        C,
        C,
        {a: a for a in C.objects},
        {(a, b, f): f for (a, b), H in C.hom.items() for f in H.objects},
        {(a, b, al): al for (a, b), H in C.hom.items() for al in H.arrows},
        check=False,
    )


def compose_two_functors(G: TwoFunctor, F: TwoFunctor) -> TwoFunctor:
    if F.target is not G.source and F.target != G.source:
        raise ContractError("2-functor composition mismatch")
    objects = {a: G.objects[b] for a, b in F.objects.items()}
    on1 = {}
    on2 = {}
    for (a, b, f), v in F.on1.items():
        on1[(a, b, f)] = G.on1[(F.objects[a], F.objects[b], v)]
    for (a, b, al), v in F.on2.items():
        on2[(a, b, al)] = G.on2[(F.objects[a], F.objects[b], v)]
    return TwoFunctor(F.source, G.target, objects, on1, on2, check=False)


# ---------------------------------------------------------------------------
# the 2-categorical simplices
# ---------------------------------------------------------------------------

def _subset_id(s: Iterable[int]) -> str:
    return "".join(str(v) for v in sorted(set(s)))


def _subsets_between(i: int, j: int) -> list[str]:
    """Admissible subsets of {i..j}: contain both endpoints."""
    middle = list(range(i + 1, j))
    out = []
    for mask in range(1 << len(middle)):
        s = {i, j} | {middle[k] for k in range(len(middle)) if mask >> k & 1}
        out.append(_subset_id(s))
    return sorted(out)


def _poset_of_subsets(subsets: list[str]) -> FinCat:
    """Objects the given subsets; an arrow S -> T whenever T is a subset of S
    (the order opposite to inclusion)."""
    arrows = {}
    src = {}
    dst = {}
    for S in subsets:
        for T in subsets:
            if set(T) <= set(S):
                name = f"{S}>{T}"
                arrows[(S, T)] = name
                src[name] = S
                dst[name] = T
    compose = {}
    for (S, T), f in arrows.items():
        for (T2, U), g in arrows.items():
            if T == T2:
                compose[(g, f)] = arrows[(S, U)]
    identity = {S: arrows[(S, S)] for S in subsets}
    return FinCat(subsets, arrows.values(), src, dst, compose, identity)


@lru_cache(maxsize=None)
def delta_tilde(n: int) -> Fin2Cat:
    """The 2-categorical n-simplex.

    Objects 0..n; ``hom(i, j)`` for ``i <= j`` is the poset of subsets of
    ``{i..j}`` containing both endpoints, ordered opposite to inclusion;
    horizontal composition is union of subsets.

    Cached: all callers share one instance per ``n``, which also makes
    composition checks between the induced operators cheap.
    """
    if n > 9:
        raise DomainError("objects are encoded as digits; n <= 9 required")
    objects = [str(i) for i in range(n + 1)]
    hom = {}
    for i in range(n + 1):
        for j in range(n + 1):
            if i <= j:
                hom[(str(i), str(j))] = _poset_of_subsets(_subsets_between(i, j))
            else:
                hom[(str(i), str(j))] = FinCat([], [], {}, {}, {}, {})
    hcompose1 = {}
    hcompose2 = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                a, b, c = str(i), str(j), str(k)
                H_ab, H_bc = hom[(a, b)], hom[(b, c)]
                for S in H_ab.objects:
                    for T in H_bc.objects:
                        hcompose1[(a, b, c, S, T)] = _subset_id(set(S) | set(T))
                for al in H_ab.arrows:
                    S1, S2 = H_ab.src[al], H_ab.dst[al]
                    for be in H_bc.arrows:
                        T1, T2 = H_bc.src[be], H_bc.dst[be]
                        hcompose2[(a, b, c, al, be)] = (
                            f"{_subset_id(set(S1) | set(T1))}>{_subset_id(set(S2) | set(T2))}"
                        )
    unit = {str(i): str(i) for i in range(n + 1)}
    return Fin2Cat(objects, hom, hcompose1, hcompose2, unit)


def cosimplicial_operator(phi: Monotone, n: int) -> TwoFunctor:
    """The 2-functor ``delta_tilde(m) -> delta_tilde(n)`` induced by a
    monotone ``phi: [m] -> [n]`` (image of subsets on 1- and 2-cells)."""
    if not is_monotone(phi):
        raise ContractError(f"{phi} is not monotone")
    if any(v < 0 or v > n for v in phi):
        raise DomainError(f"{phi} does not land in [{n}]")
    m = len(phi) - 1
    A = delta_tilde(m)
    B = delta_tilde(n)
    objects = {str(i): str(phi[i]) for i in range(m + 1)}

    def image(S: str) -> str:
        return _subset_id(phi[int(ch)] for ch in S)

    on1 = {}
    on2 = {}
    for (a, b), H in A.hom.items():
        for S in H.objects:
            on1[(a, b, S)] = image(S)
        for al in H.arrows:
            S, T = al.split(">")
            on2[(a, b, al)] = f"{image(S)}>{image(T)}"
    return TwoFunctor(A, B, objects, on1, on2, check=False)


def terminal_2category() -> Fin2Cat:
    T = discrete_category(["*"])
    # hom(*, *) is the terminal category; rename for clarity
    H = FinCat(["1"], ["id_1"], {"id_1": "1"}, {"id_1": "1"}, {("id_1", "id_1"): "id_1"}, {"1": "id_1"})
    return Fin2Cat(
        ["*"],
        {("*", "*"): H},
        {("*", "*", "*", "1", "1"): "1"},
        {("*", "*", "*", "id_1", "id_1"): "id_1"},
        {"*": "1"},
    )


# ---------------------------------------------------------------------------
# inclusion of categories and its left adjoint
# ---------------------------------------------------------------------------

def as_two_category(C: FinCat) -> Fin2Cat:
    """View a category as a 2-category with discrete hom-categories."""
    hom = {}
    for a in C.objects:
        for b in C.objects:
            hom[(a, b)] = discrete_category(C.hom(a, b))
    hcompose1 = {}
    hcompose2 = {}
    for a in C.objects:
        for b in C.objects:
            for c in C.objects:
                for f in C.hom(a, b):
                    for g in C.hom(b, c):
                        gf = C.compose[(g, f)]
                        hcompose1[(a, b, c, f, g)] = gf
                        hcompose2[(a, b, c, f"id_{f}", f"id_{g}")] = f"id_{gf}"
    unit = {a: C.identity[a] for a in C.objects}
    return Fin2Cat(C.objects, hom, hcompose1, hcompose2, unit)


def as_two_functor(F: CatFunctor) -> TwoFunctor:
    A2, B2 = as_two_category(F.source), as_two_category(F.target)
    on1 = {}
    on2 = {}
    for f in F.source.arrows:
        a, b = F.source.src[f], F.source.dst[f]
        on1[(a, b, f)] = F.arrows[f]
        on2[(a, b, f"id_{f}")] = f"id_{F.arrows[f]}"
    return TwoFunctor(A2, B2, dict(F.objects), on1, on2, check=False)


def _hom_components(H: FinCat) -> dict[One, One]:
    """Map each 1-cell to the least 1-cell of its zig-zag component."""
    parent = {f: f for f in H.objects}

    def find(x: One) -> One:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for al in H.arrows:
        ra, rb = find(H.src[al]), find(H.dst[al])
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra
    return {f: find(f) for f in H.objects}


def component_category(C: Fin2Cat) -> FinCat:
    """Collapse each hom-category to its set of connected components.

    This is the left adjoint to :func:`as_two_category`; composition is
    induced on components (well defined by functoriality of horizontal
    composition).
    """
    comp: dict[tuple[Obj, Obj], dict[One, One]] = {}
    for (a, b), H in C.hom.items():
        comp[(a, b)] = _hom_components(H)

    def arrow_name(a: Obj, b: Obj, rep: One) -> str:
        return f"[{a}>{b}:{rep}]"

    arrows = []
    src = {}
    dst = {}
    for (a, b), m in comp.items():
        for rep in sorted(set(m.values())):
            name = arrow_name(a, b, rep)
            arrows.append(name)
            src[name] = a
            dst[name] = b
    compose = {}
    for (a, b), m1 in comp.items():
        for (b2, c), m2 in comp.items():
            if b != b2:
                continue
            for r1 in sorted(set(m1.values())):
                for r2 in sorted(set(m2.values())):
                    r12 = comp[(a, c)][C.hc1(a, b, c, r1, r2)]
                    compose[(arrow_name(b, c, r2), arrow_name(a, b, r1))] = arrow_name(a, c, r12)
    identity = {a: arrow_name(a, a, comp[(a, a)][C.unit[a]]) for a in C.objects}
    return FinCat(C.objects, arrows, src, dst, compose, identity)


def component_functor(u: TwoFunctor) -> CatFunctor:
    """The functor between component categories induced by a 2-functor."""
    A, B = component_category(u.source), component_category(u.target)
    comp_b = {(a, b): _hom_components(H) for (a, b), H in u.target.hom.items()}
    objects = dict(u.objects)
    arrows = {}
    for name in A.arrows:
        inner = name[1:-1]
        ab, rep = inner.split(":", 1)
        a, b = ab.split(">")
        ua, ub = u.objects[a], u.objects[b]
        arrows[name] = f"[{ua}>{ub}:{comp_b[(ua, ub)][u.on1[(a, b, rep)]]}]"
    return CatFunctor(A, B, objects, arrows, check=False)


def component_transpose(F: TwoFunctor) -> CatFunctor:
    """Transpose ``A -> as_two_category(D)`` to ``component_category(A) -> D``."""
    A = component_category(F.source)
    # the target of F must have discrete homs; its 1-cells are D's arrows
    D_objects = F.target.objects
    D_arrows = sorted({f for (_, _), H in F.target.hom.items() for f in H.objects})
    objects = dict(F.objects)
    arrows = {}
    for name in A.arrows:
        inner = name[1:-1]
        ab, rep = inner.split(":", 1)
        a, b = ab.split(">")
        arrows[name] = F.on1[(a, b, rep)]
    # reconstruct D from the discrete-hom 2-category
    src = {}
    dst = {}
    compose = {}
    identity = {}
    for (a, b), H in F.target.hom.items():
        for f in H.objects:
            src[f] = a
            dst[f] = b
    for (a, b, c, f, g), h in F.target.hcompose1.items():
        compose[(g, f)] = h
    for a in D_objects:
        identity[a] = F.target.unit[a]
    D = FinCat(D_objects, D_arrows, src, dst, compose, identity)
    return CatFunctor(A, D, objects, arrows, check=False)


def inclusion_transpose(G: CatFunctor, A: Fin2Cat) -> TwoFunctor:
    """Transpose ``component_category(A) -> D`` to ``A -> as_two_category(D)``."""
    comp = {(a, b): _hom_components(H) for (a, b), H in A.hom.items()}
    D2 = as_two_category(G.target)
    objects = dict(G.objects)
    on1 = {}
    on2 = {}
    for (a, b), H in A.hom.items():
        for f in H.objects:
            on1[(a, b, f)] = G.arrows[f"[{a}>{b}:{comp[(a, b)][f]}]"]
        for al in H.arrows:
            on2[(a, b, al)] = f"id_{on1[(a, b, H.src[al])]}"
    return TwoFunctor(A, D2, objects, on1, on2, check=False)


# ---------------------------------------------------------------------------
# enumeration of strict 2-functors (constrained backtracking)
# ---------------------------------------------------------------------------

def enumerate_two_functors(
    A: Fin2Cat,
    B: Fin2Cat,
    pin_objects: Optional[Mapping[Obj, Obj]] = None,
    pin_one: Optional[Mapping[tuple[Obj, Obj, One], One]] = None,
    pin_two: Optional[Mapping[tuple[Obj, Obj, Two], Two]] = None,
    one_filter: Optional[Callable[[tuple[Obj, Obj, One], One], bool]] = None,
    two_filter: Optional[Callable[[tuple[Obj, Obj, Two], Two], bool]] = None,
    object_filter: Optional[Callable[[Obj, Obj], bool]] = None,
    limit: Optional[int] = None,
) -> Iterator[TwoFunctor]:
    """All strict 2-functors A -> B, deterministically ordered.

    Branches on objects, then 1-cells, then 2-cells.  Unit cells and any
    cell expressible as a horizontal or vertical composite of already
    assigned cells are forced rather than branched on, which keeps the
    search shallow on simplex-shaped sources.
    """
    pin_objects = dict(pin_objects or {})
    pin_one = dict(pin_one or {})
    pin_two = dict(pin_two or {})

    obj_vars = list(A.objects)
    one_vars: list[tuple[Obj, Obj, One]] = []
    for (a, b), H in sorted(A.hom.items()):
        for f in H.objects:
            if not (a == b and f == A.unit[a]):
                one_vars.append((a, b, f))
    two_vars: list[tuple[Obj, Obj, Two]] = []
    for (a, b), H in sorted(A.hom.items()):
        for al in H.arrows:
            if not H.is_identity(al):
                two_vars.append((a, b, al))

    # decompositions of 1-cells as horizontal composites
    one_decomp: dict[tuple[Obj, Obj, One], list] = {v: [] for v in one_vars}
    for (a, b, c, f, g), h in A.hcompose1.items():
        key = (a, c, h)
        if key in one_decomp and (a, b, f) != key and (b, c, g) != key:
            one_decomp[key].append(((a, b, f), (b, c, g)))

    # Variable order: homs sorted by dependency rank (a hom holding composites
    # comes after the homs its parts live in), and inside a hom the forced
    # (decomposable) cells come before the freely branched ones.  Free
    # branches are then checked immediately against already-forced composites.
    hom_rank: dict[tuple[Obj, Obj], int] = {key: 0 for key in A.hom}
    for _ in range(2 * len(A.hom) + 1):
        changed = False
        for v, decs in one_decomp.items():
            for (k1, k2) in decs:
                want = max(hom_rank[(k1[0], k1[1])], hom_rank[(k2[0], k2[1])]) + 1
                if hom_rank[(v[0], v[1])] < want:
                    hom_rank[(v[0], v[1])] = want
                    changed = True
        if not changed:
            break
    one_vars.sort(
        key=lambda v: (
            hom_rank[(v[0], v[1])],
            (v[0], v[1]),
            0 if one_decomp[v] else 1,
            v[2],
        )
    )
    # decompositions of 2-cells: horizontal and vertical
    two_decomp_h: dict[tuple[Obj, Obj, Two], list] = {v: [] for v in two_vars}
    for (a, b, c, al, be), ga in A.hcompose2.items():
        key = (a, c, ga)
        if key in two_decomp_h and (a, b, al) != key and (b, c, be) != key:
            two_decomp_h[key].append(((a, b, al), (b, c, be)))
    two_decomp_v: dict[tuple[Obj, Obj, Two], list] = {v: [] for v in two_vars}
    for (a, b), H in A.hom.items():
        for (be, al), ga in H.compose.items():
            key = (a, b, ga)
            if key in two_decomp_v and al != ga and be != ga:
                two_decomp_v[key].append(((a, b, al), (a, b, be)))

    # constraint instances indexed by participating variable
    one_constraints: dict[tuple[Obj, Obj, One], list] = {}
    for (a, b, c, f, g), h in A.hcompose1.items():
        inst = ((a, b, f), (b, c, g), (a, c, h), (a, b, c))
        for key in inst[:3]:
            one_constraints.setdefault(key, []).append(inst)

    # hom-arrow compatibility: if hom_A has an arrow f -> g, the images must
    # admit an arrow in hom_B; prunes hard when hom_B is thin or discrete
    hom_arrow_pairs: dict[tuple[Obj, Obj, One], list] = {}
    for (a, b), H in A.hom.items():
        for al in H.arrows:
            f, g = H.src[al], H.dst[al]
            if f == g:
                continue
            pair = ((a, b, f), (a, b, g))
            hom_arrow_pairs.setdefault(pair[0], []).append(pair)
            hom_arrow_pairs.setdefault(pair[1], []).append(pair)
    b_rel: dict[tuple[Obj, Obj], set] = {}
    for (x, y), K in B.hom.items():
        b_rel[(x, y)] = {(K.src[al], K.dst[al]) for al in K.arrows}
    two_constraints: dict[tuple[Obj, Obj, Two], list] = {}
    for (a, b), H in A.hom.items():
        for (be, al), ga in H.compose.items():
            inst = ("v", (a, b, al), (a, b, be), (a, b, ga), (a, b))
            for key in inst[1:4]:
                two_constraints.setdefault(key, []).append(inst)
    for (a, b, c, al, be), ga in A.hcompose2.items():
        inst = ("h", (a, b, al), (b, c, be), (a, c, ga), (a, b, c))
        for key in inst[1:4]:
            two_constraints.setdefault(key, []).append(inst)

    fobj: dict[Obj, Obj] = {}
    fone: dict[tuple[Obj, Obj, One], One] = {}
    ftwo: dict[tuple[Obj, Obj, Two], Two] = {}
    count = 0

    def unit_images_ok() -> bool:
        for a in A.objects:
            key = (a, a, A.unit[a])
            img = B.unit[fobj[a]]
            if key in pin_one and pin_one[key] != img:
                return False
            fone[key] = img
        return True

    def one_candidates(var: tuple[Obj, Obj, One]) -> list[One]:
        a, b, f = var
        hom_b = B.hom[(fobj[a], fobj[b])]
        forced: Optional[One] = None
        for (k1, k2) in one_decomp[var]:
            v1, v2 = fone.get(k1), fone.get(k2)
            if v1 is None or v2 is None:
                continue
            val = B.hcompose1.get((fobj[k1[0]], fobj[k1[1]], fobj[k2[1]], v1, v2))
            if val is None or (forced is not None and forced != val):
                return []
            forced = val
        if var in pin_one:
            if forced is not None and forced != pin_one[var]:
                return []
            forced = pin_one[var]
        cands = [forced] if forced is not None else list(hom_b.objects)
        if forced is not None and forced not in set(hom_b.objects):
            return []
        if one_filter is not None:
            cands = [c for c in cands if one_filter(var, c, (fobj[a], fobj[b]))]
        return cands

    def one_consistent(var: tuple[Obj, Obj, One]) -> bool:
        # verify every fully-assigned horizontal composite involving var
        for k1, k2, kh, (a2, b2, c2) in one_constraints.get(var, ()):
            v1, v2, vh = fone.get(k1), fone.get(k2), fone.get(kh)
            if None in (v1, v2, vh):
                continue
            if B.hcompose1.get((fobj[a2], fobj[b2], fobj[c2], v1, v2)) != vh:
                return False
        for kf, kg in hom_arrow_pairs.get(var, ()):
            vf, vg = fone.get(kf), fone.get(kg)
            if vf is None or vg is None:
                continue
            if (vf, vg) not in b_rel[(fobj[kf[0]], fobj[kf[1]])]:
                return False
        return True

    def two_candidates(var: tuple[Obj, Obj, Two]) -> list[Two]:
        a, b, al = var
        H = A.hom[(a, b)]
        K = B.hom[(fobj[a], fobj[b])]
        want_src = fone[(a, b, H.src[al])]
        want_dst = fone[(a, b, H.dst[al])]
        forced: Optional[Two] = None
        for (k1, k2) in two_decomp_v[var]:
            v1, v2 = ftwo.get(k1), ftwo.get(k2)
            if v1 is None or v2 is None:
                continue
            val = K.compose.get((v2, v1))
            if val is None or (forced is not None and forced != val):
                return []
            forced = val
        for (k1, k2) in two_decomp_h[var]:
            v1, v2 = ftwo.get(k1), ftwo.get(k2)
            if v1 is None or v2 is None:
                continue
            val = B.hcompose2.get((fobj[k1[0]], fobj[k1[1]], fobj[k2[1]], v1, v2))
            if val is None or (forced is not None and forced != val):
                return []
            forced = val
        if var in pin_two:
            if forced is not None and forced != pin_two[var]:
                return []
            forced = pin_two[var]
        if forced is not None:
            cands = [forced]
        else:
            cands = [t for t in K.arrows if K.src[t] == want_src and K.dst[t] == want_dst]
        cands = [t for t in cands if K.src.get(t) == want_src and K.dst.get(t) == want_dst]
        if two_filter is not None:
            cands = [t for t in cands if two_filter(var, t, (fobj[a], fobj[b]))]
        return cands

    def two_consistent(var: tuple[Obj, Obj, Two]) -> bool:
        for inst in two_constraints.get(var, ()):
            kind, k1, k2, kg, ctx = inst
            v1, v2, vg = ftwo.get(k1), ftwo.get(k2), ftwo.get(kg)
            if None in (v1, v2, vg):
                continue
            if kind == "v":
                K = B.hom[(fobj[ctx[0]], fobj[ctx[1]])]
                if K.compose.get((v2, v1)) != vg:
                    return False
            else:
                a2, b2, c2 = ctx
                if B.hcompose2.get((fobj[a2], fobj[b2], fobj[c2], v1, v2)) != vg:
                    return False
        return True

    def fill_identity_two_cells() -> bool:
        for (a, b), H in A.hom.items():
            K = B.hom[(fobj[a], fobj[b])]
            for f in H.objects:
                key = (a, b, H.identity[f])
                img = K.identity[fone[(a, b, f)]]
                if key in pin_two and pin_two[key] != img:
                    return False
                ftwo[key] = img
        return True

    def emit() -> TwoFunctor:
        return TwoFunctor(A, B, dict(fobj), dict(fone), dict(ftwo), check=False)

    def assign_two(idx: int) -> Iterator[TwoFunctor]:
        nonlocal count
        if limit is not None and count >= limit:
            return
        if idx == len(two_vars):
            count += 1
            yield emit()
            return
        var = two_vars[idx]
        for val in two_candidates(var):
            ftwo[var] = val
            if two_consistent(var):
                yield from assign_two(idx + 1)
            del ftwo[var]

    def assign_one(idx: int) -> Iterator[TwoFunctor]:
        if idx == len(one_vars):
            if fill_identity_two_cells():
                yield from assign_two(0)
            for (a, b), H in A.hom.items():
                for f in H.objects:
                    ftwo.pop((a, b, H.identity[f]), None)
            return
        var = one_vars[idx]
        for val in one_candidates(var):
            fone[var] = val
            if one_consistent(var):
                yield from assign_one(idx + 1)
            del fone[var]

    def assign_obj(idx: int) -> Iterator[TwoFunctor]:
        if idx == len(obj_vars):
            if unit_images_ok():
                yield from assign_one(0)
            for a in A.objects:
                fone.pop((a, a, A.unit[a]), None)
            return
        a = obj_vars[idx]
        cands = [pin_objects[a]] if a in pin_objects else list(B.objects)
        for b in cands:
            if b not in set(B.objects):
                continue
            if object_filter is not None and not object_filter(a, b):
                continue
            fobj[a] = b
            ok = all(
                not A.hom[(x, y)].objects or B.hom[(fobj[x], fobj[y])].objects
                for x in fobj
                for y in fobj
                if (x, y) in A.hom
            )
            if ok:
                yield from assign_obj(idx + 1)
            del fobj[a]

    yield from assign_obj(0)


def count_two_functors(A: Fin2Cat, B: Fin2Cat) -> int:
    return sum(1 for _ in enumerate_two_functors(A, B))


def find_2cat_iso(A: Fin2Cat, B: Fin2Cat) -> Optional[TwoFunctor]:
    """Search for a strict isomorphism of 2-categories."""
    if len(A.objects) != len(B.objects):
        return None
    sizes_a = sorted((len(H.objects), len(H.arrows)) for H in A.hom.values())
    sizes_b = sorted((len(H.objects), len(H.arrows)) for H in B.hom.values())
    if sizes_a != sizes_b:
        return None
    for F in enumerate_two_functors(A, B):
        if len(set(F.objects.values())) != len(A.objects):
            continue
        ok = True
        for (a, b), H in A.hom.items():
            K = B.hom[(F.objects[a], F.objects[b])]
            img1 = {F.on1[(a, b, f)] for f in H.objects}
            img2 = {F.on2[(a, b, al)] for al in H.arrows}
            if len(img1) != len(K.objects) or len(img2) != len(K.arrows):
                ok = False
                break
        if ok:
            return F
    return None


# ---------------------------------------------------------------------------
# the geometric nerve
# ---------------------------------------------------------------------------

def geometric_nerve_cells(C: Fin2Cat, D: int) -> tuple[SimplicialSet, dict[tuple[int, str], TwoFunctor]]:
    """Geometric nerve truncated at D, plus the id -> 2-functor table.

    Level n holds all strict 2-functors ``delta_tilde(n) -> C``; operators
    act by precomposition with :func:`cosimplicial_operator`.
    """
    table: dict[tuple[int, str], TwoFunctor] = {}
    cells: dict[int, list[str]] = {}
    for n in range(D + 1):
        level = {}
        for F in enumerate_two_functors(delta_tilde(n), C):
            level[F.encode()] = F
        cells[n] = sorted(level)
        for cid, F in level.items():
            table[(n, cid)] = F
    face = {}
    degeneracy = {}
    for n in range(1, D + 1):
        ops = {i: cosimplicial_operator(coface(n, i), n) for i in range(n + 1)}
        for cid in cells[n]:
            F = table[(n, cid)]
            for i in range(n + 1):
                face[(n, i, cid)] = compose_two_functors(F, ops[i]).encode()
    for n in range(D):
        ops = {i: cosimplicial_operator(codegeneracy(n, i), n) for i in range(n + 1)}
        for cid in cells[n]:
            F = table[(n, cid)]
            for i in range(n + 1):
                degeneracy[(n, i, cid)] = compose_two_functors(F, ops[i]).encode()
    return SimplicialSet(D, cells, face, degeneracy), table


def geometric_nerve(C: Fin2Cat, D: int) -> SimplicialSet:
    return geometric_nerve_cells(C, D)[0]


def geometric_nerve_functor(u: TwoFunctor, D: int):
    """The simplicial map of geometric nerves induced by a 2-functor.

    Returns ``(N2(source), N2(target), levels)`` where levels are plain
    dictionaries (postcomposition with u on each cell).
    """
    NA, table = geometric_nerve_cells(u.source, D)
    NB = geometric_nerve(u.target, D)
    levels: dict[int, dict[str, str]] = {}
    for n in range(D + 1):
        levels[n] = {
            cid: compose_two_functors(u, table[(n, cid)]).encode() for cid in NA.cells[n]
        }
    return NA, NB, levels


# ---------------------------------------------------------------------------
# slices and final objects
# ---------------------------------------------------------------------------

def object_admits_final(C: Fin2Cat, z: Obj) -> tuple[bool, dict[Obj, Optional[One]]]:
    """Does every hom-category into ``z`` have a final object?

    Returns the verdict and the per-object witness (the final 1-cell of
    ``hom(a, z)``, or None where none exists).
    """
    if z not in set(C.objects):
        raise DomainError(f"object {z!r} not in the 2-category")
    witnesses: dict[Obj, Optional[One]] = {}
    ok = True
    for a in C.objects:
        w = has_final_object(C.hom[(a, z)])
        witnesses[a] = w
        if w is None:
            ok = False
    return ok, witnesses


def slice_2category(v: TwoFunctor, c: Obj) -> Fin2Cat:
    """The 2-categorical slice of ``v: A -> C`` over the object ``c``.

    Objects: pairs ``(a, f: v(a) -> c)``.
    1-cells ``(a, f) -> (a', f')``: pairs ``(g: a -> a', alpha)`` with
    ``alpha: f' . v(g) -> f`` a 2-cell of C (here ``f' . v(g)`` means
    ``hc1(v(g), f')``).
    2-cells ``(g, alpha) -> (g', alpha')``: 2-cells ``beta: g -> g'`` of A
    with ``alpha' . (f' * v(beta)) = alpha``.

    Compositions (the fixed pasting conventions):

    * composite of ``(g, alpha): (a,f) -> (a',f')`` and
      ``(h, gamma): (a',f') -> (a'',f'')`` is
      ``(h . g, alpha o (gamma * id_{v(g)}))``, i.e. whisker gamma by v(g)
      on the left, then paste with alpha;
    * vertical composition of 2-cells is vertical composition in A;
    * horizontal composition of 2-cells is horizontal composition in A.
    """
    A, C = v.source, v.target
    if c not in set(C.objects):
        raise DomainError(f"object {c!r} not in the target 2-category")

    def vo(a: Obj) -> Obj:
        return v.objects[a]

    slice_objects = []
    obj_data = {}
    for a in A.objects:
        for f in C.hom[(vo(a), c)].objects:
            name = f"({a}|{f})"
            slice_objects.append(name)
            obj_data[name] = (a, f)

    # 1-cells of the slice, per pair of slice objects
    one_data: dict[tuple[str, str], list[tuple[One, Two]]] = {}
    for o1 in slice_objects:
        a1, f1 = obj_data[o1]
        for o2 in slice_objects:
            a2, f2 = obj_data[o2]
            pairs = []
            H_c = C.hom[(vo(a1), c)]
            for g in A.hom[(a1, a2)].objects:
                vg = v.on1[(a1, a2, g)]
                composite = C.hc1(vo(a1), vo(a2), c, vg, f2)
                for al in H_c.arrows:
                    if H_c.src[al] == composite and H_c.dst[al] == f1:
                        pairs.append((g, al))
            one_data[(o1, o2)] = sorted(pairs)

    def one_name(g: One, al: Two) -> str:
        return f"({g}|{al})"

    hom = {}
    hom_arrow_data: dict[tuple[str, str], dict[str, tuple]] = {}
    for o1 in slice_objects:
        a1, f1 = obj_data[o1]
        for o2 in slice_objects:
            a2, f2 = obj_data[o2]
            H_a = A.hom[(a1, a2)]
            H_c1 = C.hom[(vo(a1), c)]
            cells = [one_name(g, al) for g, al in one_data[(o1, o2)]]
            arrows = {}
            src = {}
            dst = {}
            adata = {}
            for g, al in one_data[(o1, o2)]:
                for g2, al2 in one_data[(o1, o2)]:
                    for be in H_a.arrows:
                        if H_a.src[be] != g or H_a.dst[be] != g2:
                            continue
                        vbe = v.on2[(a1, a2, be)]
                        idf2 = C.hom[(vo(a2), c)].identity[f2]
                        whisker = C.hc2(vo(a1), vo(a2), c, vbe, idf2)
                        if H_c1.compose[(al2, whisker)] != al:
                            continue
                        name = f"[{be}|{al}|{al2}]"
                        arrows[name] = True
                        src[name] = one_name(g, al)
                        dst[name] = one_name(g2, al2)
                        adata[name] = (be, al, al2)
            compose = {}
            for n1, (be1, x1, y1) in adata.items():
                for n2, (be2, x2, y2) in adata.items():
                    if dst[n1] != src[n2]:
                        continue
                    be = H_a.compose[(be2, be1)]
                    compose[(n2, n1)] = f"[{be}|{x1}|{y2}]"
            identity = {}
            for g, al in one_data[(o1, o2)]:
                identity[one_name(g, al)] = f"[{H_a.identity[g]}|{al}|{al}]"
            hom[(o1, o2)] = FinCat(cells, arrows, src, dst, compose, identity)
            hom_arrow_data[(o1, o2)] = adata

    hcompose1 = {}
    hcompose2 = {}
    for o1 in slice_objects:
        a1, f1 = obj_data[o1]
        for o2 in slice_objects:
            a2, f2 = obj_data[o2]
            for o3 in slice_objects:
                a3, f3 = obj_data[o3]
                for g, al in one_data[(o1, o2)]:
                    vg = v.on1[(a1, a2, g)]
                    for h, ga in one_data[(o2, o3)]:
                        hg = A.hc1(a1, a2, a3, g, h)
                        idvg = C.hom[(vo(a1), vo(a2))].identity[vg]
                        whisker = C.hc2(vo(a1), vo(a2), c, idvg, ga)
                        paste = C.hom[(vo(a1), c)].compose[(al, whisker)]
                        hcompose1[(o1, o2, o3, one_name(g, al), one_name(h, ga))] = one_name(hg, paste)
                for n1, (be1, x1, y1) in hom_arrow_data[(o1, o2)].items():
                    for n2, (be2, x2, y2) in hom_arrow_data[(o2, o3)].items():
                        be = A.hc2(a1, a2, a3, be1, be2)
                        s1 = hcompose1[(o1, o2, o3, hom[(o1, o2)].src[n1], hom[(o2, o3)].src[n2])]
                        d1 = hcompose1[(o1, o2, o3, hom[(o1, o2)].dst[n1], hom[(o2, o3)].dst[n2])]
                        _, sal = obj_and_two(s1)
                        _, dal = obj_and_two(d1)
                        hcompose2[(o1, o2, o3, n1, n2)] = f"[{be}|{sal}|{dal}]"
    unit = {}
    for o in slice_objects:
        a, f = obj_data[o]
        idf = C.hom[(vo(a), c)].identity[f]
        unit[o] = one_name(A.unit[a], idf)
    return Fin2Cat(slice_objects, hom, hcompose1, hcompose2, unit)


def obj_and_two(one_cell_name: str) -> tuple[str, str]:
    """Split a slice 1-cell name ``(g|alpha)`` into its components."""
    inner = one_cell_name[1:-1]
    g, al = inner.split("|", 1)
    return g, al


def slice_2functor(
    u: TwoFunctor, p: TwoFunctor, q: TwoFunctor, c: Obj
) -> TwoFunctor:
    """For a commuting triangle ``q . u = p`` of 2-functors over C, the
    induced 2-functor between the slices over ``c``.

    Assignments are rebuilt from the defining data (names may nest)."""
    if compose_two_functors(q, u) != p:
        raise ContractError("triangle does not commute: q . u != p")
    A, C = p.source, p.target
    S_a = slice_2category(p, c)
    S_b = slice_2category(q, c)
    objects = {}
    obj_pairs = []
    for a in A.objects:
        for f in C.hom[(p.objects[a], c)].objects:
            obj_pairs.append((a, f))
            objects[f"({a}|{f})"] = f"({u.objects[a]}|{f})"
    on1 = {}
    on2 = {}
    for (a1, f1) in obj_pairs:
        o1 = f"({a1}|{f1})"
        for (a2, f2) in obj_pairs:
            o2 = f"({a2}|{f2})"
            H = S_a.hom[(o1, o2)]
            H_a = A.hom[(a1, a2)]
            H_c = C.hom[(p.objects[a1], c)]
            for g in H_a.objects:
                vg = p.on1[(a1, a2, g)]
                composite = C.hc1(p.objects[a1], p.objects[a2], c, vg, f2)
                for al in H_c.arrows:
                    if H_c.src[al] == composite and H_c.dst[al] == f1:
                        cell = f"({g}|{al})"
                        if cell in set(H.objects):
                            on1[(o1, o2, cell)] = f"({u.on1[(a1, a2, g)]}|{al})"
            for g in H_a.objects:
                for g2 in H_a.objects:
                    for be in H_a.arrows:
                        if H_a.src[be] != g or H_a.dst[be] != g2:
                            continue
                        for al in H_c.arrows:
                            for al2 in H_c.arrows:
                                name = f"[{be}|{al}|{al2}]"
                                if name in set(H.arrows):
                                    on2[(o1, o2, name)] = f"[{u.on2[(a1, a2, be)]}|{al}|{al2}]"
    return TwoFunctor(S_a, S_b, objects, on1, on2, check=False)


def two_functor_to_terminal(C: Fin2Cat) -> TwoFunctor:
    T = terminal_2category()
    objects = {a: "*" for a in C.objects}
    on1 = {(a, b, f): "1" for (a, b), H in C.hom.items() for f in H.objects}
    on2 = {(a, b, al): "id_1" for (a, b), H in C.hom.items() for al in H.arrows}
    return TwoFunctor(C, T, objects, on1, on2, check=False)
