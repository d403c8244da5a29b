"""Lift search, RLP tests, bounded factorization, homotopy pushouts."""

import pytest

from nervelab.cat import (
    CatFunctor,
    arrow_category,
    chain_category,
    discrete_category,
    identity_functor,
    terminal_category,
)
from nervelab.errors import ContractError
from nervelab.homology import homology
from nervelab.lifting import (
    LiftingProblem,
    find_lift,
    generator_squares,
    has_rlp,
    homotopy_pushout,
    is_homotopy_cocartesian,
    small_object_factorize,
)
from nervelab.simplicial import (
    SimplicialMap,
    boundary,
    compose_maps,
    constant_map,
    empty_simplicial_set,
    identity_map,
    pushout,
    standard_simplex,
    validate,
)


def inclusion(A, B):
    return SimplicialMap(A, B, {n: {c: c for c in A.cells[n]} for n in range(min(A.dim_bound, B.dim_bound) + 1)})


def to_point(X, D=None):
    P = standard_simplex(0, X.dim_bound if D is None else D)
    return constant_map(X, P, "0")


def boundary_inclusions(n_max, D):
    return [inclusion(boundary(n, D), standard_simplex(n, D)) for n in range(n_max + 1)]


# -- find_lift -----------------------------------------------------------------

def test_lift_exists_horn_like():
    i = inclusion(boundary(1, 1), standard_simplex(1, 1))
    p = to_point(standard_simplex(1, 1))
    u = inclusion(boundary(1, 1), standard_simplex(1, 1))
    v = to_point(standard_simplex(1, 1))
    h = find_lift(LiftingProblem(i, p, u, v))
    assert h is not None
    assert compose_maps(h, i) == u
    assert compose_maps(p, h) == v


def test_lift_missing_for_two_point_target():
    # p: two-point discrete -> point cannot lift a boundary hitting both points
    two = boundary(1, 1)
    i = inclusion(boundary(1, 1), standard_simplex(1, 1))
    p = to_point(two)
    u = identity_map(two)
    v = to_point(standard_simplex(1, 1))
    assert find_lift(LiftingProblem(i, p, u, v)) is None


def test_lift_along_identity_is_top():
    X = boundary(2, 2)
    i = identity_map(X)
    p = to_point(X)
    u = identity_map(X)
    v = compose_maps(p, u)
    h = find_lift(LiftingProblem(i, p, u, v))
    assert h == u


def test_noncommuting_square_rejected():
    two = boundary(1, 1)
    i = inclusion(two, standard_simplex(1, 1))
    p = identity_map(two)
    u = identity_map(two)
    swap = SimplicialMap(
        standard_simplex(1, 1), two,
        {0: {"0": "1", "1": "0"}, 1: {"00": "11", "01": "11", "11": "00"}},
        check=False,
    )
    with pytest.raises(ContractError):
        LiftingProblem(i, p, u, swap)


def test_lift_in_cat_ambient():
    # extend a functor along the inclusion of an endpoint into the arrow
    A = terminal_category()
    B = arrow_category()
    C2 = chain_category(2)
    i = CatFunctor(A, B, {"*": "0"}, {"id_*": "id_0"})
    p = identity_functor(C2)
    u = CatFunctor(A, C2, {"*": "0"}, {"id_*": "id_0"})
    v = CatFunctor(B, C2, {"0": "0", "1": "2"},
                   {"id_0": "id_0", "id_1": "id_2", "0<=1": "0<=2"})
    h = find_lift(LiftingProblem(i, p, u, v))
    assert h is not None and h.objects == {"0": "0", "1": "2"}


def test_lift_in_two_cat_ambient():
    from nervelab.twocat import (
        as_two_category,
        as_two_functor,
        identity_two_functor,
    )

    A = as_two_category(terminal_category())
    B = as_two_category(arrow_category())
    i = as_two_functor(CatFunctor(terminal_category(), arrow_category(), {"*": "0"}, {"id_*": "id_0"}))
    p = identity_two_functor(B)
    u = as_two_functor(CatFunctor(terminal_category(), arrow_category(), {"*": "0"}, {"id_*": "id_0"}))
    v = identity_two_functor(B)
    h = find_lift(LiftingProblem(i, p, u, v))
    assert h is not None


# -- has_rlp ---------------------------------------------------------------------

def test_identity_has_rlp():
    X = boundary(2, 2)
    ok, _ = has_rlp(identity_map(X), boundary_inclusions(2, 2))
    assert ok


def test_point_has_rlp():
    pt = standard_simplex(0, 2)
    ok, _ = has_rlp(identity_map(pt), boundary_inclusions(2, 2))
    assert ok


def test_interval_to_point_fails_rlp_with_decreasing_witness():
    D = 2
    p = to_point(standard_simplex(1, D))
    ok, witness = has_rlp(p, boundary_inclusions(2, D))
    assert not ok
    assert witness is not None
    # the minimal counterexample sends the boundary vertices in decreasing order
    assert witness.top.levels[0] == {"0": "1", "1": "0"}


# -- factorization ----------------------------------------------------------------

def test_factorize_with_no_generators():
    f = to_point(boundary(1, 1))
    rep = small_object_factorize(f, [], 5)
    assert rep.stages == 0
    assert rep.residual == []
    assert rep.composite_equals_input(f)
    assert rep.left == identity_map(f.source)


def test_factorize_empty_into_point():
    D = 1
    E = empty_simplicial_set(D)
    pt = standard_simplex(0, D)
    f = SimplicialMap(E, pt, {})
    gen = SimplicialMap(E, pt, {})
    rep = small_object_factorize(f, [gen], 3)
    assert rep.stages == 1
    assert rep.residual == []
    assert len(rep.attachments) == 1
    assert rep.composite_equals_input(f)
    assert len(rep.middle.level(0)) == 1


def test_factorize_boundary_two_to_point():
    D = 3
    f = to_point(boundary(2, D))
    gens = boundary_inclusions(3, D)
    rep = small_object_factorize(f, gens, 6)
    assert rep.residual == []
    assert rep.composite_equals_input(f)
    assert validate(rep.middle) == []
    ok, _ = has_rlp(rep.right, gens)
    assert ok
    # the left factor replays: each attachment is a generator cell
    assert rep.attachments
    assert rep.stages <= 6


# -- homotopy pushout ----------------------------------------------------------------

def span_circle(D=3):
    A = boundary(1, D)
    X = standard_simplex(0, D)
    Y = standard_simplex(1, D)
    f = SimplicialMap(A, X, {n: {c: X.cells[n][0] for c in A.cells[n]} for n in range(D + 1)})
    g = inclusion(A, Y)
    return f, g


def test_homotopy_pushout_of_circle_span_has_h1():
    f, g = span_circle(3)
    P, _, _, _ = homotopy_pushout(f, g)
    assert validate(P) == []
    h = homology(P, 1)
    assert h.degrees[0] == (1, ()) and h.degrees[1] == (1, ())


def test_square_of_identities_is_cocartesian():
    X = standard_simplex(1, 3)
    i = identity_map(X)
    r = is_homotopy_cocartesian(i, i, i, i, 1)
    assert r.all_pass()


def test_strict_pushout_along_injective_matches_cylinder():
    f, g = span_circle(4)
    P, jx, jy = pushout(f, g)
    r = is_homotopy_cocartesian(f, g, jx, jy, 2)
    assert r.all_pass()


def test_homotopy_pushout_flip_invariant():
    f, g = span_circle(3)
    P1, _, _, _ = homotopy_pushout(f, g)
    P2, _, _, _ = homotopy_pushout(g, f)
    assert homology(P1, 1) == homology(P2, 1)


def test_generator_squares_are_commuting():
    p = to_point(standard_simplex(1, 2))
    i = inclusion(boundary(1, 2), standard_simplex(1, 2))
    squares = list(generator_squares(p, i))
    assert len(squares) == 4  # vertex pairs of the interval
