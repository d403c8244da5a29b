"""Finite categories: composition tables, functors, nerves, slices.

Objects and arrows are identified by strings.  ``compose[(g, f)]`` is the
composite ``g . f`` (f first).  All constructors sort their data, so equal
inputs give structurally equal categories.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping, Optional

from .errors import ContractError, DomainError
from .simplicial import SimplicialSet, monotone_maps, simplicial_operator

Obj = str
Arr = str


class FinCat:
    """A finite category given by explicit tables."""

    __slots__ = ("objects", "arrows", "src", "dst", "compose", "identity")

    def __init__(
        self,
        objects: Iterable[Obj],
        arrows: Iterable[Arr],
        src: Mapping[Arr, Obj],
        dst: Mapping[Arr, Obj],
        compose: Mapping[tuple[Arr, Arr], Arr],
        identity: Mapping[Obj, Arr],
    ):
        self.objects = tuple(sorted(objects))
        self.arrows = tuple(sorted(arrows))
        self.src = dict(src)
        self.dst = dict(dst)
        self.compose = dict(compose)
        self.identity = dict(identity)

    def hom(self, a: Obj, b: Obj) -> tuple[Arr, ...]:
        return tuple(f for f in self.arrows if self.src[f] == a and self.dst[f] == b)

    def comp(self, g: Arr, f: Arr) -> Arr:
        return self.compose[(g, f)]

    def is_identity(self, f: Arr) -> bool:
        return self.identity.get(self.src[f]) == f

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinCat):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.arrows == other.arrows
            and self.src == other.src
            and self.dst == other.dst
            and self.compose == other.compose
            and self.identity == other.identity
        )

    def __repr__(self) -> str:
        return f"FinCat({len(self.objects)} objects, {len(self.arrows)} arrows)"


def validate_category(C: FinCat) -> list[str]:
    """Exhaustive axioms check: totality, typing, units, associativity."""
    out = []
    objset = set(C.objects)
    for f in C.arrows:
        if C.src.get(f) not in objset or C.dst.get(f) not in objset:
            out.append(f"arrow {f!r} has missing or foreign endpoints")
    for a in C.objects:
        i = C.identity.get(a)
        if i is None or i not in set(C.arrows):
            out.append(f"object {a!r} has no identity arrow")
        elif not (C.src[i] == a and C.dst[i] == a):
            out.append(f"identity of {a!r} is not an endomorphism")
    for f in C.arrows:
        for g in C.arrows:
            if C.dst[f] != C.src[g]:
                if (g, f) in C.compose:
                    out.append(f"compose defined on non-composable pair ({g!r}, {f!r})")
                continue
            gf = C.compose.get((g, f))
            if gf is None:
                out.append(f"compose missing on ({g!r}, {f!r})")
                continue
            if C.src.get(gf) != C.src[f] or C.dst.get(gf) != C.dst[g]:
                out.append(f"composite of ({g!r}, {f!r}) has wrong endpoints")
    for f in C.arrows:
        ia = C.identity.get(C.src[f])
        ib = C.identity.get(C.dst[f])
        if ia and C.compose.get((f, ia)) != f:
            out.append(f"right unit law fails on {f!r}")
        if ib and C.compose.get((ib, f)) != f:
            out.append(f"left unit law fails on {f!r}")
    for f in C.arrows:
        for g in C.arrows:
            if C.dst[f] != C.src[g]:
                continue
            for h in C.arrows:
                if C.dst[g] != C.src[h]:
                    continue
                lhs = C.compose.get((h, C.compose.get((g, f), "")))
                rhs = C.compose.get((C.compose.get((h, g), ""), f))
                if lhs is None or lhs != rhs:
                    out.append(f"associativity fails on ({h!r}, {g!r}, {f!r})")
    return out


class CatFunctor:
    """Object and arrow assignments preserving the category structure."""

    __slots__ = ("source", "target", "objects", "arrows")

    def __init__(
        self,
        source: FinCat,
        target: FinCat,
        objects: Mapping[Obj, Obj],
        arrows: Mapping[Arr, Arr],
        check: bool = True,
    ):
        self.source = source
        self.target = target
        self.objects = dict(sorted(objects.items()))
        self.arrows = dict(sorted(arrows.items()))
        if check:
            problems = validate_functor(self)
            if problems:
                raise ContractError("not a functor: " + "; ".join(problems[:3]))

    def on_obj(self, a: Obj) -> Obj:
        return self.objects[a]

    def on_arr(self, f: Arr) -> Arr:
        return self.arrows[f]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CatFunctor):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.objects == other.objects
            and self.arrows == other.arrows
        )

    def encode(self) -> str:
        obj = ",".join(f"{a}>{b}" for a, b in self.objects.items())
        arr = ",".join(f"{f}>{g}" for f, g in self.arrows.items())
        return obj + "/" + arr

    def __repr__(self) -> str:
        return f"CatFunctor({self.source!r} -> {self.target!r})"


def validate_functor(F: CatFunctor) -> list[str]:
    out = []
    A, B = F.source, F.target
    for a in A.objects:
        if F.objects.get(a) not in set(B.objects):
            out.append(f"object {a!r} unassigned or foreign image")
    for f in A.arrows:
        g = F.arrows.get(f)
        if g is None or g not in set(B.arrows):
            out.append(f"arrow {f!r} unassigned or foreign image")
            continue
        if B.src[g] != F.objects.get(A.src[f]) or B.dst[g] != F.objects.get(A.dst[f]):
            out.append(f"arrow {f!r} image has wrong endpoints")
    for a in A.objects:
        if F.arrows.get(A.identity[a]) != B.identity.get(F.objects.get(a, "")):
            out.append(f"identity of {a!r} not preserved")
    for f in A.arrows:
        for g in A.arrows:
            if A.dst[f] != A.src[g]:
                continue
            lhs = F.arrows.get(A.compose[(g, f)])
            rhs = B.compose.get((F.arrows.get(g, ""), F.arrows.get(f, "")))
            if lhs is None or lhs != rhs:
                out.append(f"composition not preserved on ({g!r}, {f!r})")
    return out


def identity_functor(C: FinCat) -> CatFunctor:
    return CatFunctor(C, C, {a: a for a in C.objects}, {f: f for f in C.arrows}, check=False)


def compose_functors(G: CatFunctor, F: CatFunctor) -> CatFunctor:
    if F.target != G.source:
        raise ContractError("functor composition mismatch")
    return CatFunctor(
        F.source,
        G.target,
        {a: G.objects[b] for a, b in F.objects.items()},
        {f: G.arrows[g] for f, g in F.arrows.items()},
        check=False,
    )


# ---------------------------------------------------------------------------
# small constructors
# ---------------------------------------------------------------------------

def category_from_graph(
    objects: Iterable[Obj],
    generators: Mapping[Arr, tuple[Obj, Obj]],
    compose_rule: Callable[[Arr, Arr], Arr],
) -> FinCat:
    """Build a category whose arrows are closed under a given composition rule.

    ``compose_rule(g, f)`` must return the name of ``g . f``; the arrow set
    is the closure of generators plus identities under the rule.
    """
    ids = {a: f"id_{a}" for a in objects}
    src = {ids[a]: a for a in objects}
    dst = {ids[a]: a for a in objects}
    for f, (a, b) in generators.items():
        src[f] = a
        dst[f] = b
    arrows = set(src)
    compose: dict[tuple[Arr, Arr], Arr] = {}
    changed = True
    while changed:
        changed = False
        for f in list(arrows):
            for g in list(arrows):
                if dst[f] != src[g] or (g, f) in compose:
                    continue
                if f == ids[src[f]]:
                    gf = g
                elif g == ids[dst[f]]:
                    gf = f
                else:
                    gf = compose_rule(g, f)
                compose[(g, f)] = gf
                if gf not in arrows:
                    arrows.add(gf)
                    src[gf] = src[f]
                    dst[gf] = dst[g]
                    changed = True
    return FinCat(objects, arrows, src, dst, compose, ids)


def terminal_category() -> FinCat:
    return FinCat(["*"], ["id_*"], {"id_*": "*"}, {"id_*": "*"}, {("id_*", "id_*"): "id_*"}, {"*": "id_*"})


def discrete_category(names: Iterable[Obj]) -> FinCat:
    names = list(names)
    ids = {a: f"id_{a}" for a in names}
    return FinCat(
        names,
        ids.values(),
        {i: a for a, i in ids.items()},
        {i: a for a, i in ids.items()},
        {(i, i): i for i in ids.values()},
        ids,
    )


def poset_category(elements: Iterable[Obj], leq: Callable[[Obj, Obj], bool]) -> FinCat:
    """The thin category of a finite poset; arrow ``a<=b`` whenever leq(a, b)."""
    elements = list(elements)
    arrows = {}
    src = {}
    dst = {}
    for a in elements:
        for b in elements:
            if leq(a, b):
                name = f"id_{a}" if a == b else f"{a}<={b}"
                arrows[(a, b)] = name
                src[name] = a
                dst[name] = b
    compose = {}
    for (a, b), f in arrows.items():
        for (b2, c), g in arrows.items():
            if b == b2:
                compose[(g, f)] = arrows[(a, c)]
    ids = {a: arrows[(a, a)] for a in elements}
    return FinCat(elements, arrows.values(), src, dst, compose, ids)


def chain_category(n: int) -> FinCat:
    """The poset 0 <= 1 <= ... <= n as a category."""
    return poset_category([str(i) for i in range(n + 1)], lambda a, b: int(a) <= int(b))


def arrow_category() -> FinCat:
    return chain_category(1)


def monoid_category(elements: Iterable[str], unit: str, mult: Callable[[str, str], str]) -> FinCat:
    """One-object category from a finite monoid; ``mult(g, f)`` is ``g . f``."""
    elements = list(elements)
    return FinCat(
        ["*"],
        elements,
        {e: "*" for e in elements},
        {e: "*" for e in elements},
        {(g, f): mult(g, f) for g in elements for f in elements},
        {"*": unit},
    )


def parallel_pair_category() -> FinCat:
    return FinCat(
        ["0", "1"],
        ["id_0", "id_1", "f", "g"],
        {"id_0": "0", "id_1": "1", "f": "0", "g": "0"},
        {"id_0": "0", "id_1": "1", "f": "1", "g": "1"},
        {
            ("id_0", "id_0"): "id_0",
            ("id_1", "id_1"): "id_1",
            ("f", "id_0"): "f",
            ("id_1", "f"): "f",
            ("g", "id_0"): "g",
            ("id_1", "g"): "g",
        },
        {"0": "id_0", "1": "id_1"},
    )


# ---------------------------------------------------------------------------
# the nerve
# ---------------------------------------------------------------------------

def _chain_id(chain: tuple[Arr, ...], obj: Optional[Obj] = None) -> str:
    if not chain:
        return f"<{obj}>"
    return "|".join(chain)


def nerve(C: FinCat, D: int) -> SimplicialSet:
    """Nerve truncated at D: level n holds composable n-chains of arrows.

    The chain ``(f1, ..., fn)`` runs left to right (f1 first); identities
    are allowed, and chains containing them are exactly the degenerate
    cells.
    """
    for f in C.arrows:
        if "|" in f:
            raise ContractError(f"arrow id {f!r} may not contain '|'")
    chains: dict[int, list[tuple[tuple[Arr, ...], Obj]]] = {
        0: [((), a) for a in C.objects]
    }
    for n in range(1, D + 1):
        prev = chains[n - 1]
        nxt = []
        for chain, end in prev:
            for f in C.arrows:
                if C.src[f] == end:
                    nxt.append((chain + (f,), C.dst[f]))
        chains[n] = nxt

    cells = {n: [_chain_id(ch, obj) for ch, obj in chains[n]] for n in range(D + 1)}
    start = {}
    for n in range(D + 1):
        for ch, end in chains[n]:
            start[_chain_id(ch, end)] = C.src[ch[0]] if ch else end

    face: dict[tuple[int, int, str], str] = {}
    degeneracy: dict[tuple[int, int, str], str] = {}
    for n in range(1, D + 1):
        for ch, end in chains[n]:
            cid = _chain_id(ch, end)
            for i in range(n + 1):
                if i == 0:
                    sub = ch[1:]
                    o = C.dst[ch[0]] if n == 1 else None
                elif i == n:
                    sub = ch[:-1]
                    o = C.src[ch[0]] if n == 1 else None
                else:
                    sub = ch[: i - 1] + (C.compose[(ch[i], ch[i - 1])],) + ch[i + 1:]
                    o = None
                if n == 1:
                    face[(n, i, cid)] = _chain_id((), o if o is not None else end)
                else:
                    face[(n, i, cid)] = _chain_id(sub)
    for n in range(D):
        for ch, end in chains[n]:
            cid = _chain_id(ch, end)
            verts = [start[cid]]
            for f in ch:
                verts.append(C.dst[f])
            for i in range(n + 1):
                ins = ch[:i] + (C.identity[verts[i]],) + ch[i:]
                degeneracy[(n, i, cid)] = _chain_id(ins)
    return SimplicialSet(D, cells, face, degeneracy)


def nerve_functor(F: CatFunctor, D: int) -> "tuple[SimplicialSet, SimplicialSet, dict]":
    """The induced map of nerves as level dictionaries (chain-wise image)."""
    NA = nerve(F.source, D)
    NB = nerve(F.target, D)
    levels: dict[int, dict[str, str]] = {0: {f"<{a}>": f"<{F.objects[a]}>" for a in F.source.objects}}
    for n in range(1, D + 1):
        lvl = {}
        for cid in NA.cells[n]:
            chain = tuple(cid.split("|"))
            lvl[cid] = "|".join(F.arrows[f] for f in chain)
        levels[n] = lvl
    return NA, NB, levels


# ---------------------------------------------------------------------------
# slices, final objects, category of elements
# ---------------------------------------------------------------------------

def slice_category(v: CatFunctor, c: Obj) -> tuple[FinCat, CatFunctor]:
    """The comma category A/c of ``v: A -> C`` over ``c`` with its projection.

    Objects are pairs ``(a, f: v(a) -> c)``; an arrow ``(a, f) -> (a', f')``
    is ``g: a -> a'`` in A with ``f' . v(g) = f``.
    """
    A, C = v.source, v.target
    if c not in set(C.objects):
        raise DomainError(f"object {c!r} not in the target category")
    objects = []
    obj_data = {}
    for a in A.objects:
        for f in C.hom(v.objects[a], c):
            name = f"({a}|{f})"
            objects.append(name)
            obj_data[name] = (a, f)
    arrows = []
    src = {}
    dst = {}
    arr_data = {}
    for o1 in objects:
        a1, f1 = obj_data[o1]
        for o2 in objects:
            a2, f2 = obj_data[o2]
            for g in A.hom(a1, a2):
                if C.compose[(f2, v.arrows[g])] == f1:
                    name = f"({g}|{f1}|{f2})"
                    arrows.append(name)
                    src[name] = o1
                    dst[name] = o2
                    arr_data[name] = g
    compose = {}
    for n1 in arrows:
        for n2 in arrows:
            if dst[n1] != src[n2]:
                continue
            g = A.compose[(arr_data[n2], arr_data[n1])]
            f_lo = obj_data[src[n1]][1]
            f_hi = obj_data[dst[n2]][1]
            compose[(n2, n1)] = f"({g}|{f_lo}|{f_hi})"
    identity = {}
    for o in objects:
        a, f = obj_data[o]
        identity[o] = f"({A.identity[a]}|{f}|{f})"
    S = FinCat(objects, arrows, src, dst, compose, identity)
    proj = CatFunctor(
        S, A, {o: obj_data[o][0] for o in objects}, {n: arr_data[n] for n in arrows}, check=False
    )
    return S, proj


def slice_functor(
    u: CatFunctor, p: CatFunctor, q: CatFunctor, c: Obj
) -> CatFunctor:
    """For a commuting triangle ``q . u = p`` over C, the induced A/c -> B/c.

    The assignments are rebuilt from the defining data (not parsed from
    names, which may nest when slices are sliced again).
    """
    if compose_functors(q, u) != p:
        raise ContractError("triangle does not commute: q . u != p")
    A, C = p.source, p.target
    Ac, _ = slice_category(p, c)
    Bc, _ = slice_category(q, c)
    objects = {}
    for a in A.objects:
        for f in C.hom(p.objects[a], c):
            objects[f"({a}|{f})"] = f"({u.objects[a]}|{f})"
    arrows = {}
    for a1 in A.objects:
        for f1 in C.hom(p.objects[a1], c):
            for a2 in A.objects:
                for f2 in C.hom(p.objects[a2], c):
                    for g in A.hom(a1, a2):
                        if C.compose[(f2, p.arrows[g])] == f1:
                            arrows[f"({g}|{f1}|{f2})"] = f"({u.arrows[g]}|{f1}|{f2})"
    return CatFunctor(Ac, Bc, objects, arrows, check=False)


def has_final_object(C: FinCat) -> Optional[Obj]:
    """The first object (in canonical order) to which every object has
    exactly one arrow, if any."""
    for z in C.objects:
        if all(len(C.hom(a, z)) == 1 for a in C.objects):
            return z
    return None


def category_of_elements(X: SimplicialSet, D: int) -> FinCat:
    """The D-truncation of the category of elements of X.

    Objects are pairs ``(n, cell)`` with ``n <= D``; an arrow
    ``(m, y) -> (n, x)`` is a monotone ``phi: [m] -> [n]`` with
    ``phi*(x) = y``.  Composition is composition of monotone maps.
    """
    if D > X.dim_bound:
        raise DomainError(f"truncation {D} exceeds the bound {X.dim_bound}")
    objects = []
    for n in range(D + 1):
        for c in X.cells[n]:
            objects.append(f"({n}:{c})")

    def phi_id(phi: tuple[int, ...]) -> str:
        return "".join(str(v) for v in phi)

    arrows = []
    src = {}
    dst = {}
    data = {}
    for n in range(D + 1):
        for x in X.cells[n]:
            for m in range(D + 1):
                for phi in monotone_maps(m, n):
                    y = simplicial_operator(X, phi, n, x)
                    name = f"[{phi_id(phi)}:{m}:{y}>{n}:{x}]"
                    arrows.append(name)
                    src[name] = f"({m}:{y})"
                    dst[name] = f"({n}:{x})"
                    data[name] = (phi, m, y, n, x)
    compose = {}
    for f in arrows:
        phi, m, y, n, x = data[f]
        for g in arrows:
            psi, m2, y2, n2, x2 = data[g]
            if (n, x) != (m2, y2):
                continue
            chi = tuple(psi[v] for v in phi)
            compose[(g, f)] = f"[{phi_id(chi)}:{m}:{y}>{n2}:{x2}]"
    identity = {}
    for n in range(D + 1):
        for c in X.cells[n]:
            ident = tuple(range(n + 1))
            identity[f"({n}:{c})"] = f"[{phi_id(ident)}:{n}:{c}>{n}:{c}]"
    return FinCat(objects, arrows, src, dst, compose, identity)


# ---------------------------------------------------------------------------
# functor enumeration and isomorphism search
# ---------------------------------------------------------------------------

def enumerate_functors(
    A: FinCat,
    B: FinCat,
    pin_objects: Optional[Mapping[Obj, Obj]] = None,
    pin_arrows: Optional[Mapping[Arr, Arr]] = None,
    arrow_filter: Optional[Callable[[Arr, Arr], bool]] = None,
    object_filter: Optional[Callable[[Obj, Obj], bool]] = None,
) -> Iterator[CatFunctor]:
    """All functors A -> B in canonical order (objects, then arrows).

    ``pin_*`` fix parts of the assignment; the filters restrict candidate
    images (this is how the lifting engine plants its fiber conditions).
    """
    pin_objects = dict(pin_objects or {})
    pin_arrows = dict(pin_arrows or {})
    objs = list(A.objects)
    nonid = [f for f in A.arrows if not A.is_identity(f)]
    obj_map: dict[Obj, Obj] = {}
    arr_map: dict[Arr, Arr] = {}

    def arrows_done() -> Iterator[CatFunctor]:
        yield CatFunctor(A, B, dict(obj_map), dict(arr_map), check=False)

    def composition_consistent() -> bool:
        # identities are pre-assigned, so any fully-assigned triangle
        # (f, g, g.f) is checkable; triangles with an unassigned composite
        # are re-examined once that composite gets its image
        for f in arr_map:
            for g in arr_map:
                if A.dst[f] != A.src[g]:
                    continue
                img = arr_map.get(A.compose[(g, f)])
                if img is not None and img != B.compose[(arr_map[g], arr_map[f])]:
                    return False
        return True

    def assign_arrow(idx: int) -> Iterator[CatFunctor]:
        if idx == len(nonid):
            yield from arrows_done()
            return
        f = nonid[idx]
        want_src = obj_map[A.src[f]]
        want_dst = obj_map[A.dst[f]]
        if f in pin_arrows:
            cands = [pin_arrows[f]]
        else:
            cands = [g for g in B.arrows if B.src[g] == want_src and B.dst[g] == want_dst]
        for g in cands:
            if B.src[g] != want_src or B.dst[g] != want_dst:
                continue
            if arrow_filter is not None and not arrow_filter(f, g):
                continue
            arr_map[f] = g
            if composition_consistent():
                yield from assign_arrow(idx + 1)
            del arr_map[f]

    def assign_obj(idx: int) -> Iterator[CatFunctor]:
        if idx == len(objs):
            for a in objs:
                arr_map[A.identity[a]] = B.identity[obj_map[a]]
            yield from assign_arrow(0)
            for a in objs:
                del arr_map[A.identity[a]]
            return
        a = objs[idx]
        cands = [pin_objects[a]] if a in pin_objects else list(B.objects)
        for b in cands:
            if b not in set(B.objects):
                continue
            if object_filter is not None and not object_filter(a, b):
                continue
            obj_map[a] = b
            yield from assign_obj(idx + 1)
            del obj_map[a]

    yield from assign_obj(0)


def count_functors(A: FinCat, B: FinCat) -> int:
    return sum(1 for _ in enumerate_functors(A, B))


def find_cat_iso(A: FinCat, B: FinCat) -> Optional[CatFunctor]:
    """Search for an isomorphism of categories (bijective on objects and arrows)."""
    if len(A.objects) != len(B.objects) or len(A.arrows) != len(B.arrows):
        return None
    for F in enumerate_functors(A, B):
        if len(set(F.objects.values())) == len(A.objects) and len(
            set(F.arrows.values())
        ) == len(A.arrows):
            return F
    return None
