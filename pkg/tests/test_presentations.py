"""Categorification presentations, bounded rewriting, realization."""

import pytest

from nervelab.cat import (
    arrow_category,
    chain_category,
    count_functors,
    discrete_category,
    find_cat_iso,
    monoid_category,
    nerve,
    parallel_pair_category,
    terminal_category,
)
from nervelab.presentations import (
    CatPresentation,
    cat_of,
    realize,
    realize_cat,
    realize_twocat,
    thomason_generators,
    twocat_of,
)
from nervelab.simplicial import (
    boundary,
    count_maps,
    standard_simplex,
)
from nervelab.twocat import (
    as_two_category,
    count_two_functors,
    delta_tilde,
    find_2cat_iso,
    geometric_nerve,
    validate_2category,
)


def z2_group():
    return monoid_category(["e", "t"], "e", lambda g, f: "e" if g == f else "t")


def retract_category():
    def mult(g, f):
        # objects a, b; i: a->b, r: b->a, r.i = id_a, i.r = e idempotent
        table = {
            ("r", "i"): "id_a", ("i", "r"): "e",
            ("e", "e"): "e", ("e", "i"): "i", ("r", "e"): "r",
        }
        return table[(g, f)]

    from nervelab.cat import FinCat

    return FinCat(
        ["a", "b"],
        ["id_a", "id_b", "i", "r", "e"],
        {"id_a": "a", "id_b": "b", "i": "a", "r": "b", "e": "b"},
        {"id_a": "a", "id_b": "b", "i": "b", "r": "a", "e": "b"},
        {
            ("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
            ("i", "id_a"): "i", ("id_b", "i"): "i",
            ("r", "id_b"): "r", ("id_a", "r"): "r",
            ("e", "id_b"): "e", ("id_b", "e"): "e",
            ("r", "i"): "id_a", ("i", "r"): "e",
            ("e", "e"): "e", ("e", "i"): "i", ("r", "e"): "r",
        },
        {"a": "id_a", "b": "id_b"},
    )


# -- the adjoint presentations -----------------------------------------------------

def test_cat_of_point():
    p = cat_of(standard_simplex(0, 2))
    assert p.objects == ("0",)
    assert p.generators == ()


def test_cat_of_boundary_two_is_free():
    p = cat_of(boundary(2, 2))
    assert len(p.generators) == 3
    assert p.relations == ()
    r = realize_cat(p)
    assert r.status == "finite"
    # free category on the three edges: no composite collapses
    assert len(r.category.arrows) == 3 + 3 + 1  # identities + edges + the one path


def test_cat_of_standard_two_has_relation():
    p = cat_of(standard_simplex(2, 2))
    assert len(p.relations) == 1
    r = realize_cat(p)
    assert r.status == "finite"
    assert find_cat_iso(r.category, chain_category(2)) is not None


# -- realize ------------------------------------------------------------------------

def test_realize_idempotent_monoid():
    p = CatPresentation(("x",), ("e",), {"e": "x"}, {"e": "x"}, ((("e", "e"), ("e",)),))
    r = realize_cat(p)
    assert r.status == "finite"
    assert len(r.category.arrows) == 2
    assert r.certificate["confluent"]


def test_realize_free_monoid_is_infinite():
    p = CatPresentation(("x",), ("t",), {"t": "x"}, {"t": "x"}, ())
    r = realize_cat(p)
    assert r.status == "infinite"
    assert r.witness == ["t"]


def test_realize_chain_presentation():
    p = CatPresentation(
        ("0", "1", "2"), ("f", "g"),
        {"f": "0", "g": "1"}, {"f": "1", "g": "2"}, ()
    )
    r = realize_cat(p)
    assert r.status == "finite"
    assert len(r.category.arrows) == 3 + 2 + 1


def test_realize_deterministic():
    p = cat_of(nerve(z2_group(), 2))
    r1 = realize_cat(p)
    r2 = realize_cat(p)
    assert r1.category == r2.category
    assert r1.certificate == r2.certificate


@pytest.mark.parametrize("builder", [
    terminal_category,
    arrow_category,
    lambda: chain_category(2),
    lambda: discrete_category(["a", "b"]),
    parallel_pair_category,
    z2_group,
    retract_category,
])
def test_counit_recovers_category(builder):
    C = builder()
    r = realize_cat(cat_of(nerve(C, 2)))
    assert r.status == "finite"
    assert find_cat_iso(r.category, C) is not None


def test_nerve_adjunction_counts():
    pairs = [
        (standard_simplex(1, 2), arrow_category()),
        (standard_simplex(2, 2), chain_category(2)),
        (boundary(2, 2), arrow_category()),
        (boundary(2, 2), chain_category(2)),
        (standard_simplex(1, 2), z2_group()),
    ]
    for X, C in pairs:
        r = realize_cat(cat_of(X))
        assert r.status == "finite"
        lhs = count_functors(r.category, C)
        rhs = count_maps(X, nerve(C, X.dim_bound))
        assert lhs == rhs


# -- the 2-categorical adjoint --------------------------------------------------------

def test_twocat_of_point():
    p = twocat_of(standard_simplex(0, 2))
    assert p.objects == ("0",)
    assert p.generators == () and p.two_generators == ()


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_realize_twocat_of_simplex_is_delta_tilde(n):
    X = standard_simplex(n, max(n, 3))
    r = realize_twocat(twocat_of(X))
    assert r.status == "finite"
    assert validate_2category(r.two_category) == []
    assert find_2cat_iso(r.two_category, delta_tilde(n)) is not None


def test_geometric_nerve_adjunction_counts():
    targets = [
        as_two_category(arrow_category()),
        as_two_category(chain_category(2)),
        delta_tilde(2),
    ]
    sources = [standard_simplex(1, 2), standard_simplex(2, 2), boundary(2, 2)]
    for X in sources:
        r = realize_twocat(twocat_of(X))
        assert r.status == "finite"
        for C in targets:
            lhs = count_two_functors(r.two_category, C)
            rhs = count_maps(X, geometric_nerve(C, X.dim_bound))
            assert lhs == rhs


# -- Thomason generators ----------------------------------------------------------------

def test_thomason_generator_zero():
    gens = thomason_generators(0, 1)
    assert len(gens) == 1
    g = gens[0]
    assert g.source.objects == ()
    assert len(g.target.objects) == 1


def test_thomason_generator_one_level_two():
    gens = thomason_generators(1, 2)
    g = gens[1]
    # doubly subdivided interval: discrete pair into the 4-edge path
    assert len(g.source.objects) == 2
    assert g.source.generators == ()
    assert len(g.target.objects) == 5
    assert len(g.target.generators) == 4
    assert g.target.two_generators == ()
    r = realize_twocat(g.target)
    assert r.status == "finite"
    assert g.validate() == []


def test_thomason_generator_two_level_one():
    gens = thomason_generators(2, 1)
    g = gens[2]
    # frozen counts: the twice-subdivided boundary is a 12-gon; the twice
    # subdivided triangle has 25 vertices, 60 edges, 36 triangles
    assert len(g.source.objects) == 12
    assert len(g.source.generators) == 12
    assert len(g.target.objects) == 25
    assert len(g.target.generators) == 60
    assert len(g.target.relations) == 36
    assert g.validate() == []


def test_realize_dispatch():
    assert realize(cat_of(standard_simplex(1, 1))).status == "finite"
    assert realize(twocat_of(standard_simplex(1, 2))).status == "finite"
