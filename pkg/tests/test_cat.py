"""Finite categories, functors, nerves, slices, category of elements."""

from itertools import product as iproduct

import pytest

from nervelab.cat import (
    CatFunctor,
    arrow_category,
    category_of_elements,
    chain_category,
    compose_functors,
    count_functors,
    discrete_category,
    enumerate_functors,
    find_cat_iso,
    has_final_object,
    identity_functor,
    monoid_category,
    nerve,
    parallel_pair_category,
    poset_category,
    slice_category,
    slice_functor,
    terminal_category,
    validate_category,
    validate_functor,
)
from nervelab.errors import ContractError, DomainError
from nervelab.simplicial import boundary, find_simplicial_iso, standard_simplex, validate


def z2_group():
    return monoid_category(["e", "t"], "e", lambda g, f: "e" if g == f else "t")


def z3_group():
    def mult(g, f):
        return str((int(g) + int(f)) % 3)

    return monoid_category(["0", "1", "2"], "0", mult)


# -- oracles ------------------------------------------------------------------

def oracle_enumerate_functors(A, B):
    """Filter every (object map, arrow map) pair by the functor laws."""
    found = []
    for omap_vals in iproduct(B.objects, repeat=len(A.objects)):
        omap = dict(zip(A.objects, omap_vals))
        cands = []
        for f in A.arrows:
            cands.append(
                [g for g in B.arrows if B.src[g] == omap[A.src[f]] and B.dst[g] == omap[A.dst[f]]]
            )
        for amap_vals in iproduct(*cands):
            amap = dict(zip(A.arrows, amap_vals))
            if any(amap[A.identity[a]] != B.identity[omap[a]] for a in A.objects):
                continue
            ok = True
            for f in A.arrows:
                for g in A.arrows:
                    if A.dst[f] != A.src[g]:
                        continue
                    if amap[A.compose[(g, f)]] != B.compose[(amap[g], amap[f])]:
                        ok = False
            if ok:
                found.append((omap, amap))
    return found


# -- structure ----------------------------------------------------------------

@pytest.mark.parametrize("builder", [
    terminal_category,
    arrow_category,
    lambda: chain_category(2),
    lambda: discrete_category(["a", "b"]),
    parallel_pair_category,
    z2_group,
    z3_group,
])
def test_corpus_categories_validate(builder):
    assert validate_category(builder()) == []


def test_nerve_of_terminal_is_point():
    N = nerve(terminal_category(), 3)
    assert N.counts() == (1, 1, 1, 1)


def test_nerve_of_arrow_category_is_interval():
    N = nerve(arrow_category(), 2)
    assert find_simplicial_iso(N, standard_simplex(1, 2)) is not None


def test_nerve_of_z2_level_sizes():
    N = nerve(z2_group(), 3)
    assert N.counts() == (1, 2, 4, 8)  # frozen: chains are tuples of group elements


@pytest.mark.parametrize("builder", [
    terminal_category,
    arrow_category,
    lambda: chain_category(2),
    parallel_pair_category,
    z2_group,
])
def test_nerves_validate(builder):
    assert validate(nerve(builder(), 3)) == []


# -- slices and final objects ---------------------------------------------------

def test_slice_of_identity_on_arrow_category():
    C = arrow_category()
    S, proj = slice_category(identity_functor(C), "1")
    assert len(S.objects) == 2
    non_id = [f for f in S.arrows if not S.is_identity(f)]
    assert len(non_id) == 1
    assert validate_category(S) == []
    assert validate_functor(proj) == []


def test_slice_constant_functor_trivial_hom():
    C = terminal_category()
    v = identity_functor(C)
    S, _ = slice_category(v, "*")
    assert find_cat_iso(S, C) is not None


def test_slice_over_final_object_has_final_object():
    C = chain_category(2)
    S, _ = slice_category(identity_functor(C), "2")
    z = has_final_object(S)
    assert z is not None
    # the final object is (final object, its identity)
    assert z == "(2|id_2)"


def test_slice_rejects_foreign_object():
    with pytest.raises(DomainError):
        slice_category(identity_functor(arrow_category()), "7")


def test_has_final_object_examples():
    assert has_final_object(terminal_category()) == "*"
    assert has_final_object(arrow_category()) == "1"
    assert has_final_object(discrete_category(["a", "b"])) is None


def test_slice_functor_identity_is_identity():
    C = chain_category(2)
    u = identity_functor(C)
    uc = slice_functor(u, u, u, "2")
    assert uc.objects == {o: o for o in uc.source.objects}


def test_slice_functor_requires_commuting_triangle():
    C = chain_category(2)
    A = arrow_category()
    # u: include [1] as 0 <= 1, p as 0 <= 2: triangle q.u != p for q = id
    u = CatFunctor(A, C, {"0": "0", "1": "1"}, {"id_0": "id_0", "id_1": "id_1", "0<=1": "0<=1"})
    p = CatFunctor(A, C, {"0": "0", "1": "2"}, {"id_0": "id_0", "id_1": "id_2", "0<=1": "0<=2"})
    with pytest.raises(ContractError):
        slice_functor(u, p, identity_functor(C), "2")


def test_slice_functor_with_empty_source_is_empty():
    from nervelab.cat import FinCat

    empty = FinCat([], [], {}, {}, {}, {})
    C = arrow_category()
    u = CatFunctor(empty, C, {}, {})
    q = identity_functor(C)
    p = compose_functors(q, u)
    uc = slice_functor(u, p, q, "1")
    assert uc.source.objects == () and uc.objects == {}


def test_slice_functor_matches_brute_force_comma():
    # triangle: u: [1] -> [2] sending 0,1 to 0,2; p = q . u with q = id on [2]
    C = chain_category(2)
    A = arrow_category()
    u = CatFunctor(A, C, {"0": "0", "1": "2"}, {"id_0": "id_0", "id_1": "id_2", "0<=1": "0<=2"})
    q = identity_functor(C)
    p = compose_functors(q, u)
    uc = slice_functor(u, p, q, "2")
    # brute-force reconstruction of the object map from the comma definition
    for o in uc.source.objects:
        a, f = o[1:-1].split("|")
        assert uc.objects[o] == f"({u.objects[a]}|{f})"
    assert validate_functor(uc) == []


# -- category of elements -------------------------------------------------------

def test_elements_of_point_at_zero():
    E = category_of_elements(standard_simplex(0, 2), 0)
    assert find_cat_iso(E, terminal_category()) is not None


def test_elements_of_point_at_one():
    E = category_of_elements(standard_simplex(0, 2), 1)
    assert len(E.objects) == 2
    assert len(E.arrows) == 7  # frozen: monotone maps among [0], [1]
    assert validate_category(E) == []


def test_elements_of_two_points():
    E = category_of_elements(boundary(1, 2), 1)
    assert len(E.objects) == 4  # 2 vertices + 2 degenerate edges
    # no arrows between the two components: arrows split evenly
    assert len(E.arrows) == 14
    assert validate_category(E) == []


# -- functor enumeration ----------------------------------------------------------

@pytest.mark.parametrize("pair", [
    (arrow_category, arrow_category),
    (arrow_category, lambda: chain_category(2)),
    (parallel_pair_category, arrow_category),
    (z2_group, z2_group),
])
def test_functor_enumeration_matches_brute_force(pair):
    A, B = pair[0](), pair[1]()
    fast = list(enumerate_functors(A, B))
    slow = oracle_enumerate_functors(A, B)
    assert len(fast) == len(slow)
    for F in fast:
        assert validate_functor(F) == []


def test_functor_count_to_terminal():
    assert count_functors(z3_group(), terminal_category()) == 1


def test_nerve_two_determined_on_small_categories():
    cats = [terminal_category(), arrow_category(), chain_category(2),
            discrete_category(["a", "b"]), parallel_pair_category(), z2_group(), z3_group()]
    for i, C in enumerate(cats):
        for j, D in enumerate(cats):
            if i >= j:
                continue
            nerves_iso = find_simplicial_iso(nerve(C, 2), nerve(D, 2)) is not None
            cats_iso = find_cat_iso(C, D) is not None
            assert nerves_iso == cats_iso
