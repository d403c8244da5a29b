"""Smith normal form, integer homology, fundamental group, evidence reports."""

import random

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from nervelab.errors import BoundError
from nervelab.homology import (
    EvidenceReport,
    chain_map_matrices,
    classify_presentation,
    homology,
    homology_of_complex,
    integer_det,
    mapping_cone,
    mat_mul,
    normalized_chains,
    pi1_presentation,
    smith_normal_form,
    tietze_reduce,
    weak_equivalence_evidence,
    weak_equivalence_evidence2,
)
from nervelab.simplicial import (
    SimplicialMap,
    boundary,
    constant_map,
    disjoint_union,
    empty_simplicial_set,
    identity_map,
    pushout,
    standard_simplex,
)
from nervelab.twocat import (
    as_two_category,
    delta_tilde,
    identity_two_functor,
    two_functor_to_terminal,
)
from nervelab.cat import arrow_category, chain_category, discrete_category


def circle(D=3):
    A = boundary(1, D)
    X = standard_simplex(0, D)
    Y = standard_simplex(1, D)
    f = SimplicialMap(A, X, {n: {c: X.cells[n][0] for c in A.cells[n]} for n in range(D + 1)})
    g = SimplicialMap(A, Y, {n: {c: c for c in A.cells[n]} for n in range(D + 1)})
    return pushout(f, g)[0]


# -- Smith normal form ---------------------------------------------------------

def test_snf_identity():
    s = smith_normal_form([[1, 0], [0, 1]])
    assert s.diagonal == [[1, 0], [0, 1]]
    assert s.verify()


def test_snf_zero():
    s = smith_normal_form([[0, 0], [0, 0]])
    assert s.diagonal == [[0, 0], [0, 0]]
    assert s.invariants == ()
    assert s.verify()


def test_snf_diag_2_3():
    s = smith_normal_form([[2, 0], [0, 3]])
    assert s.invariants == (1, 6)
    assert s.verify()


def test_snf_rectangular_and_empty():
    s = smith_normal_form([[2, 4, 4]])
    assert s.invariants == (2,)
    assert s.verify()
    s2 = smith_normal_form([])
    assert s2.diagonal == []


@pytest.mark.parametrize("seed", range(20))
def test_snf_matches_sympy_on_random_matrices(seed):
    rng = random.Random(seed)
    rows = rng.randint(1, 5)
    cols = rng.randint(1, 5)
    M = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
    ours = smith_normal_form(M)
    assert ours.verify()
    theirs = sympy_snf(sympy.Matrix(M))
    their_inv = sorted(abs(theirs[i, i]) for i in range(min(rows, cols)) if theirs[i, i] != 0)
    assert sorted(map(abs, ours.invariants)) == their_inv


def test_integer_det():
    assert integer_det([[2, 1], [1, 1]]) == 1
    assert integer_det([[1, 2], [2, 4]]) == 0
    assert integer_det([]) == 1


# -- chain complexes -------------------------------------------------------------

def test_chains_of_point():
    cc = normalized_chains(standard_simplex(0, 2))
    assert tuple(cc.rank(n) for n in range(3)) == (1, 0, 0)


def test_chains_of_boundary_two():
    cc = normalized_chains(boundary(2, 2))
    assert (cc.rank(0), cc.rank(1), cc.rank(2)) == (3, 3, 0)


@pytest.mark.parametrize("builder", [
    lambda: standard_simplex(3, 3),
    lambda: boundary(3, 3),
    lambda: circle(),
])
def test_boundary_squares_to_zero(builder):
    assert normalized_chains(builder()).validate() == []


# -- homology ---------------------------------------------------------------------

def test_homology_of_sphere_two():
    h = homology(boundary(3, 3), 2)
    assert h.degrees == {0: (1, ()), 1: (0, ()), 2: (1, ())}


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_homology_of_simplex_is_point(n):
    h = homology(standard_simplex(n, max(n, 3) + 1), 2)
    assert h.degrees == {0: (1, ()), 1: (0, ()), 2: (0, ())}


def test_homology_of_circle():
    h = homology(circle(), 1)
    assert h.degrees == {0: (1, ()), 1: (1, ())}


def test_homology_of_empty():
    h = homology(empty_simplicial_set(2), 1)
    assert h.degrees == {0: (0, ()), 1: (0, ())}


def test_homology_insufficient_bound():
    with pytest.raises(BoundError):
        homology(standard_simplex(1, 1), 1)


def pseudo_projective_plane(D=3):
    """A 2-cell glued to the one-vertex circle running twice around the loop."""
    S1 = circle(D)
    loop = S1.nondegenerate(1)[0]
    vertex = S1.cells[0][0]
    A = boundary(2, D)
    B = standard_simplex(2, D)
    from nervelab.simplicial import simplicial_operator

    levels = {0: {v: vertex for v in A.cells[0]}}
    image_of_edge = {"01": loop, "12": loop, "02": S1.s(0, 0, vertex)}
    for n in range(1, D + 1):
        lvl = {}
        for c in A.cells[n]:
            epi, k, y = A.eilenberg_zilber(n, c)
            if k == 0:
                img = vertex
                for m in range(n):
                    img = S1.s(m, 0, img)
                lvl[c] = img
            else:
                lvl[c] = simplicial_operator(S1, epi, 1, image_of_edge[y]) if k == 1 else None
        levels[n] = lvl
    attach = SimplicialMap(A, S1, levels)
    include = SimplicialMap(B, B, {n: {c: c for c in B.cells[n]} for n in range(D + 1)})
    inc = SimplicialMap(A, B, {n: {c: c for c in A.cells[n]} for n in range(D + 1)})
    return pushout(attach, inc)[0]


def test_torsion_in_homology():
    # loop squared bounds a disk: H_1 is cyclic of order two, H_2 vanishes
    P = pseudo_projective_plane()
    h = homology(P, 2)
    assert h.degrees == {0: (1, ()), 1: (0, (2,)), 2: (0, ())}


def test_torsion_in_pi1():
    P = pseudo_projective_plane()
    p = pi1_presentation(P, P.cells[0][0])
    assert classify_presentation(p) == "cyclic(2)"
    assert p.abelian_invariants() == (0, (2,))


def test_evidence_detects_torsion_failure():
    # collapsing the torsion complex to a point is not an equivalence at H1
    P = pseudo_projective_plane()
    f = constant_map(P, standard_simplex(0, P.dim_bound), "0")
    r = weak_equivalence_evidence(f, 1)
    assert r.verdict("pi0") == "PASS"
    assert r.verdict("H1") == "FAIL"
    witness = r.witnesses["H1"]["cone_homology"]
    assert (0, (2,)) in witness.values()  # the cone carries the torsion group


def test_euler_characteristic_matches_cell_count():
    for X in [boundary(3, 3), circle(), standard_simplex(2, 3)]:
        cc = normalized_chains(X)
        h = homology_of_complex(cc, X.dim_bound)
        chi_h = sum((-1) ** n * h.betti(n) for n in range(X.dim_bound + 1))
        chi_c = sum((-1) ** n * len(X.nondegenerate(n)) for n in range(X.dim_bound + 1))
        assert chi_h == chi_c


# -- fundamental group --------------------------------------------------------------

def test_pi1_circle_is_free_on_one_generator():
    p = pi1_presentation(circle(), circle().cells[0][0])
    q = tietze_reduce(p)
    assert len(q.generators) == 1 and q.relations == ()
    assert classify_presentation(p) == "free(1)"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pi1_simplex_trivial(n):
    X = standard_simplex(n, 3)
    assert classify_presentation(pi1_presentation(X, "0")) == "trivial"


def test_pi1_boundary_two():
    p = pi1_presentation(boundary(2, 2), "0")
    assert len(p.generators) == 1 and p.relations == ()


def test_pi1_abelianization():
    p = pi1_presentation(circle(), circle().cells[0][0])
    assert p.abelian_invariants() == (1, ())


# -- evidence -----------------------------------------------------------------------

def test_identity_map_all_pass():
    X = boundary(2, 3)
    r = weak_equivalence_evidence(identity_map(X), 1)
    assert r.all_pass()


def test_fold_map_fails_pi0():
    P, _, _ = disjoint_union(standard_simplex(0, 2), standard_simplex(0, 2))
    pt = standard_simplex(0, 2)
    f = constant_map(P, pt, "0")
    r = weak_equivalence_evidence(f, 0)
    assert r.verdict("pi0") == "FAIL"
    assert "witness" in r.witnesses["pi0"]


def test_cone_detects_homology_failure():
    # the inclusion of the boundary circle into the disk is not an equivalence
    f = SimplicialMap(
        boundary(2, 3),
        standard_simplex(2, 3),
        {n: {c: c for c in boundary(2, 3).cells[n]} for n in range(4)},
    )
    r = weak_equivalence_evidence(f, 1)
    assert r.verdict("H1") == "FAIL"
    assert r.verdict("pi0") == "PASS"


def test_evidence_requires_bounds():
    with pytest.raises(BoundError):
        weak_equivalence_evidence(identity_map(standard_simplex(1, 2)), 1)


def test_chain_map_of_constant_map_kills_positive_degrees():
    X = boundary(2, 2)
    f = constant_map(X, standard_simplex(0, 2), "0")
    m = chain_map_matrices(f)
    assert m[1] == []  # no nondegenerate 1-cells in the point


def test_w2_evidence_delta2_to_terminal():
    u = two_functor_to_terminal(delta_tilde(2))
    r = weak_equivalence_evidence2(u, 4, 2)
    assert r.all_pass()


def test_w2_identity_passes():
    u = identity_two_functor(as_two_category(arrow_category()))
    r = weak_equivalence_evidence2(u, 3, 1)
    assert r.all_pass()


def test_w2_point_into_discrete_pair_fails_pi0():
    Cb = as_two_category(discrete_category(["a", "b"]))
    Ca = as_two_category(discrete_category(["a"]))
    from nervelab.twocat import TwoFunctor

    incl = TwoFunctor(Ca, Cb, {"a": "a"}, {("a", "a", "id_a"): "id_a"},
                      {("a", "a", "id_id_a"): "id_id_a"}, check=False)
    r = weak_equivalence_evidence2(incl, 2, 0)
    assert r.verdict("pi0") == "FAIL"
