from __future__ import annotations

from random import Random

import pytest

from kdecomp import (
    BudgetExceededError,
    SimplicialComplex,
    VariableContext,
    ZeroIdealError,
    betti_hochster,
    betti_koszul,
    induced_subcomplex,
    reduced_homology_dims,
)
from kdecomp.generators import random_complex, random_monomial_ideal, random_squarefree_ideal
from kdecomp.homology import homology_dims_from_masks

from conftest import ideal


def dims_by_degree(delta, field=None):
    out = reduced_homology_dims(delta, field)
    return {d - 1: h for d, h in enumerate(out) if h}


def test_circle(ctx3):
    tri = SimplicialComplex.from_facets(ctx3, [[0, 1], [0, 2], [1, 2]])
    assert dims_by_degree(tri) == {1: 1}


def test_full_simplex_contractible(ctx3):
    full = SimplicialComplex.from_facets(ctx3, [[0, 1, 2]])
    assert dims_by_degree(full) == {}


def test_two_points(ctx3):
    two = SimplicialComplex.from_facets(ctx3, [[0], [1]])
    assert dims_by_degree(two) == {0: 1}


def test_irrelevant_and_void(ctx3):
    assert dims_by_degree(SimplicialComplex.irrelevant(ctx3)) == {-1: 1}
    assert reduced_homology_dims(SimplicialComplex.void(ctx3)) == []


def test_sphere_boundary():
    ctx = VariableContext.of(*"abcde")
    # boundary of the 4-simplex: a 3-sphere
    facets = [[i for i in range(5) if i != j] for j in range(5)]
    sphere = SimplicialComplex.from_facets(ctx, facets)
    assert dims_by_degree(sphere) == {3: 1}


def test_field_choice_validated(ctx3):
    tri = SimplicialComplex.from_facets(ctx3, [[0, 1], [0, 2], [1, 2]])
    assert dims_by_degree(tri, field=2) == {1: 1}
    with pytest.raises(ValueError):
        reduced_homology_dims(tri, field=4)


def test_vertex_budget():
    ctx = VariableContext(tuple(f"v{i}" for i in range(22)))
    big = SimplicialComplex.from_facets(ctx, [[i] for i in range(21)])
    with pytest.raises(BudgetExceededError):
        reduced_homology_dims(big)


def test_euler_characteristic(ctx4):
    # alternating sum of reduced homology equals the reduced Euler
    # characteristic from face counts
    rng = Random(31)
    for _ in range(40):
        delta = random_complex(rng, ctx4, 4)
        faces = delta.faces()
        euler = sum((-1) ** (len(f) - 1) for f in faces)
        dims = reduced_homology_dims(delta)
        assert sum((-1) ** (c - 1) * h for c, h in enumerate(dims)) == euler


def test_induced_subcomplex(ctx3):
    delta = SimplicialComplex.from_facets(ctx3, [[0, 1], [1, 2]])
    assert induced_subcomplex(delta, [0, 2]).facets == frozenset(
        {frozenset({0}), frozenset({2})}
    )
    assert induced_subcomplex(delta, delta.vertices) == delta
    edge = SimplicialComplex.from_facets(ctx3, [[0, 1]])
    assert induced_subcomplex(edge, []).is_irrelevant


def test_hochster_goldens(ctx3):
    assert dict(betti_hochster(ideal(ctx3, "x*y", "x*z", "y*z")).items()) == {
        (0, 2): 3,
        (1, 3): 2,
    }
    assert dict(betti_hochster(ideal(ctx3, "x")).items()) == {(0, 1): 1}
    assert dict(betti_hochster(ideal(ctx3, "x*y*z")).items()) == {(0, 3): 1}


def test_hochster_variables(ctx3):
    assert dict(betti_hochster(ideal(ctx3, "x", "y", "z")).items()) == {
        (0, 1): 3,
        (1, 2): 3,
        (2, 3): 1,
    }


def test_koszul_goldens(ctx3):
    ctx2 = VariableContext.of("x", "y")
    assert dict(betti_koszul(ideal(ctx2, "x^2", "x*y", "y^2")).items()) == {
        (0, 2): 3,
        (1, 3): 2,
    }
    assert dict(betti_koszul(ideal(ctx2, "x^3")).items()) == {(0, 3): 1}
    tri = ideal(ctx3, "x*y", "x*z", "y*z")
    assert betti_koszul(tri) == betti_hochster(tri)


def test_koszul_equals_hochster_on_squarefree(ctx4):
    rng = Random(13)
    for _ in range(40):
        i = random_squarefree_ideal(rng, ctx4, 5)
        assert betti_koszul(i) == betti_hochster(i)


def test_koszul_lattice_scan_equals_full_scan(ctx3):
    # the multidegree pruning is a pure optimization
    rng = Random(29)
    for _ in range(25):
        i = random_monomial_ideal(rng, ctx3, 4, 2)
        assert betti_koszul(i) == betti_koszul(i, all_multidegrees=True)


def test_field_independence_for_linear_quotient_ideals(ctx4):
    from kdecomp import k_decomposable_ideal

    rng = Random(37)
    checked = 0
    while checked < 20:
        i = random_monomial_ideal(rng, ctx4, 6, 2)
        if k_decomposable_ideal(i) is None:
            continue
        assert betti_koszul(i) == betti_koszul(i, field=2)
        checked += 1


def test_oracle_rejects_zero_and_nonsquarefree(ctx3):
    from kdecomp import MonomialIdeal

    with pytest.raises(ZeroIdealError):
        betti_hochster(MonomialIdeal.from_monomials(ctx3, []))
    with pytest.raises(ValueError):
        betti_hochster(ideal(ctx3, "x^2"))


def test_koszul_budget(ctx3):
    with pytest.raises(BudgetExceededError):
        betti_koszul(ideal(ctx3, "x^25"))


def test_void_masks():
    assert homology_dims_from_masks([]) == []
    assert homology_dims_from_masks([0]) == [1]  # the complex {{}}
