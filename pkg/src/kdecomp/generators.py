"""Seeded random and exhaustive instance generators.

Everything here is driven by an explicit random.Random so that property
runs are reproducible from a seed.
"""

from __future__ import annotations

from itertools import combinations
from random import Random
from typing import Iterator

from .clutters import Clutter
from .complexes import SimplicialComplex
from .monomials import Monomial, MonomialIdeal, VariableContext


def random_monomial(rng: Random, ctx: VariableContext, max_exp: int) -> Monomial:
    """A random nonunit monomial with exponents in [0, max_exp]."""
    while True:
        exps = tuple(rng.randint(0, max_exp) for _ in range(ctx.n))
        if any(exps):
            return Monomial(ctx, exps)


def random_monomial_ideal(
    rng: Random, ctx: VariableContext, max_gens: int, max_exp: int
) -> MonomialIdeal:
    count = rng.randint(1, max_gens)
    return MonomialIdeal.from_monomials(
        ctx, (random_monomial(rng, ctx, max_exp) for _ in range(count))
    )


def random_squarefree_ideal(
    rng: Random, ctx: VariableContext, max_gens: int
) -> MonomialIdeal:
    return random_monomial_ideal(rng, ctx, max_gens, 1)


def random_subset(rng: Random, pool: list[int], size: int) -> frozenset[int]:
    return frozenset(rng.sample(pool, size))


def random_complex(
    rng: Random, ctx: VariableContext, n_vertices: int, max_facets: int = 6
) -> SimplicialComplex:
    """A random nondegenerate complex on a subset of the first n vertices."""
    pool = list(range(n_vertices))
    count = rng.randint(1, max_facets)
    facets = [
        random_subset(rng, pool, rng.randint(1, n_vertices)) for _ in range(count)
    ]
    return SimplicialComplex.from_facets(ctx, facets)


def random_face(rng: Random, delta: SimplicialComplex) -> frozenset[int]:
    """A random nonempty face."""
    facets = sorted(delta.facets, key=sorted)
    nonempty = [f for f in facets if f]
    facet = sorted(nonempty[rng.randrange(len(nonempty))])
    size = rng.randint(1, len(facet))
    return frozenset(rng.sample(facet, size))


def random_clutter(
    rng: Random,
    ctx: VariableContext,
    n_vertices: int,
    max_edges: int = 6,
    uniform: int | None = None,
) -> Clutter:
    """A random clutter on exactly the first n vertices (isolated allowed)."""
    pool = list(range(n_vertices))
    count = rng.randint(0, max_edges)
    edges = []
    for _ in range(count):
        size = uniform if uniform is not None else rng.randint(2, max(2, n_vertices))
        size = min(size, n_vertices)
        if size >= 2:
            edges.append(random_subset(rng, pool, size))
    return Clutter.from_edges(ctx, edges, vertices=pool)


def antichains(candidates: list[frozenset[int]]) -> Iterator[frozenset[frozenset[int]]]:
    """All antichains (including the empty one) of the candidate sets."""
    n = len(candidates)

    def extend(start: int, chosen: list[frozenset[int]]):
        yield frozenset(chosen)
        for i in range(start, n):
            c = candidates[i]
            if all(not (c <= o or o <= c) for o in chosen):
                chosen.append(c)
                yield from extend(i + 1, chosen)
                chosen.pop()

    yield from extend(0, [])


def _subsets(n: int, min_size: int) -> list[frozenset[int]]:
    out = []
    for r in range(min_size, n + 1):
        out.extend(frozenset(c) for c in combinations(range(n), r))
    return out


def all_complexes(ctx: VariableContext, max_vertices: int) -> Iterator[SimplicialComplex]:
    """Every complex with at most `max_vertices` vertices (vertex labels
    drawn from the first max_vertices context variables), the two
    degenerate complexes included."""
    yield SimplicialComplex.void(ctx)
    yield SimplicialComplex.irrelevant(ctx)
    for facets in antichains(_subsets(max_vertices, 1)):
        if facets:
            yield SimplicialComplex.from_facets(ctx, facets)


def all_clutters(ctx: VariableContext, n_vertices: int) -> Iterator[Clutter]:
    """Every clutter on the vertex set {0..n-1} (the edgeless one included)."""
    for edges in antichains(_subsets(n_vertices, 2)):
        yield Clutter.from_edges(ctx, edges, vertices=range(n_vertices))


def all_graphs(ctx: VariableContext, n_vertices: int) -> Iterator[Clutter]:
    """Every 2-uniform clutter on the vertex set {0..n-1}."""
    pairs = [frozenset(p) for p in combinations(range(n_vertices), 2)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield Clutter.from_edges(ctx, edges, vertices=range(n_vertices))
