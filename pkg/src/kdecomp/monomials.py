"""Variable contexts, monomials and minimally generated monomial ideals.

All values are immutable and hashable; every operation is pure.  Vertex
sets are represented throughout as frozensets of variable indices into a
shared :class:`VariableContext`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ContextMismatchError, ImproperIdealError


@dataclass(frozen=True)
class VariableContext:
    """An ordered tuple of distinct variable names.

    The order is part of the contract: it fixes the lexicographic
    tie-breaking used by every deterministic search in the package.
    """

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"variable names must be distinct: {self.names}")

    @classmethod
    def of(cls, *names: str) -> "VariableContext":
        return cls(tuple(names))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.n)

    def variable(self, i: int) -> "Monomial":
        exps = [0] * self.n
        exps[i] = 1
        return Monomial(self, tuple(exps))

    def monomial(self, exponents: Iterable[int]) -> "Monomial":
        return Monomial(self, tuple(exponents))

    def monomial_of_set(self, vertices: Iterable[int]) -> "Monomial":
        """The squarefree monomial whose support is exactly `vertices`."""
        exps = [0] * self.n
        for v in vertices:
            exps[v] = 1
        return Monomial(self, tuple(exps))

    def set_names(self, vertices: Iterable[int]) -> list[str]:
        return [self.names[v] for v in sorted(vertices)]


@dataclass(frozen=True)
class Monomial:
    """A monomial as a dense exponent vector; the zero vector is 1."""

    ctx: VariableContext
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.ctx.n:
            raise ValueError("exponent vector length does not match context")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    @property
    def support_bits(self) -> int:
        """Bitset view of the support, for set arithmetic on indices."""
        bits = 0
        for i, e in enumerate(self.exponents):
            if e:
                bits |= 1 << i
        return bits

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def colon(self, other: "Monomial") -> "Monomial":
        """self : other, i.e. self / gcd(self, other), componentwise max(a-b, 0)."""
        self._check(other)
        return Monomial(
            self.ctx,
            tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)),
        )

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(
            self.ctx, tuple(max(a, b) for a, b in zip(self.exponents, other.exponents))
        )

    def times(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(
            self.ctx, tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def _check(self, other: "Monomial") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError("monomials live in different contexts")

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(self.ctx.names[i])
            elif e > 1:
                parts.append(f"{self.ctx.names[i]}^{e}")
        return "*".join(parts)


def colon_monomial(f: Monomial, g: Monomial) -> Monomial:
    """The colon f : g = f / gcd(f, g)."""
    return f.colon(g)


def support(f: Monomial) -> frozenset[int]:
    return f.support


def monomial_of_set(ctx: VariableContext, vertices: Iterable[int]) -> Monomial:
    return ctx.monomial_of_set(vertices)


def minimal_monomials(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Drop every monomial strictly divisible by another; canonical order.

    The canonical listing order used everywhere in the package is
    decreasing lexicographic order on exponent vectors (x before y, so
    e.g. x*y < x*z < y*z as a listing).
    """
    distinct = sorted(set(monomials), key=lambda m: m.exponents, reverse=True)
    kept: list[Monomial] = []
    for m in distinct:
        if not any(other != m and other.divides(m) for other in distinct):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generating set.

    Generators are pairwise incomparable under divisibility and stored in
    the canonical order of :func:`minimal_monomials`.  The empty tuple is
    the zero ideal; the unit ideal is not representable.
    """

    ctx: VariableContext
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if g.is_one:
                raise ImproperIdealError("1 cannot be a minimal generator")
            if g.ctx != self.ctx:
                raise ContextMismatchError("generator from a different context")

    @classmethod
    def from_monomials(
        cls, ctx: VariableContext, monomials: Iterable[Monomial]
    ) -> "MonomialIdeal":
        """Minimalize a generating set; raises if 1 occurs."""
        monomials = list(monomials)
        if any(m.is_one for m in monomials):
            raise ImproperIdealError("generating set contains 1 (unit ideal)")
        return cls(ctx, tuple(minimal_monomials(monomials)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        """Membership test for monomials: some generator divides m."""
        return any(g.divides(m) for g in self.gens)

    def plus(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.ctx != other.ctx:
            raise ContextMismatchError("ideals live in different contexts")
        return MonomialIdeal.from_monomials(self.ctx, self.gens + other.gens)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def minimalize(ctx: VariableContext, monomials: Iterable[Monomial]) -> MonomialIdeal:
    """Public constructor enforcing the minimal-generating-set invariant."""
    return MonomialIdeal.from_monomials(ctx, monomials)
