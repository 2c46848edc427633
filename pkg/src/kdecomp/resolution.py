"""Linear-quotient orders, Betti tables and homological invariants.

Two independent routes produce the graded Betti numbers of a
decomposable ideal: the binomial formula over a linear-quotient order,
and a recursion over the decomposition certificate.  Both are validated
against the homology oracle elsewhere.

Conventions used as recursion base cases (standard Koszul facts):
reg(R/0) = pd(R/0) = 0, and for an ideal generated by s distinct
variables reg(R/I) = 0 and pd(R/I) = s.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable, binom
from .complexes import SimplicialComplex, delete_face, link
from .decomposition import (
    ComplexCertificate,
    ComplexLeaf,
    IdealCertificate,
    IdealLeaf,
    verify_complex_certificate,
    verify_ideal_certificate,
)
from .errors import InvalidCertificateError, ZeroIdealError
from .homology import betti_hochster, oracle_ideal_table
from .monomials import Monomial, MonomialIdeal, minimal_monomials


@dataclass(frozen=True)
class QuotientOrder:
    """An order of linear quotients with its colon variable sets."""

    order: tuple[Monomial, ...]
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.order) != len(self.sets):
            raise ValueError("one variable set per generator is required")

    def verify(self) -> None:
        """Recompute every colon ideal and compare with the stored sets."""
        for i, f in enumerate(self.order):
            found = colon_is_variable_generated(self.order[:i], f)
            if found is None or found != self.sets[i]:
                raise InvalidCertificateError(
                    f"colon ideal at position {i} is not the recorded variable set"
                )


def colon_is_variable_generated(prefix, f: Monomial) -> frozenset[int] | None:
    """Support of (prefix) : (f) when that colon ideal is generated by
    variables, else None.  An empty prefix gives the empty set."""
    colons = minimal_monomials(p.colon(f) for p in prefix)
    if all(c.degree == 1 for c in colons):
        out: set[int] = set()
        for c in colons:
            out |= c.support
        return frozenset(out)
    return None


def linear_quotients_order(ideal: MonomialIdeal) -> QuotientOrder | None:
    """Greedy backtracking search for an order of linear quotients.

    Generators are tried in the canonical listing order; the first
    admissible extension is taken and failed prefixes are memoized, so
    a None return is a definitive negative.
    """
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no generators to order")
    gens = list(ideal.gens)
    dead: set[frozenset[Monomial]] = set()

    def extend(prefix: list[Monomial], sets: list[frozenset[int]]):
        if len(prefix) == len(gens):
            return QuotientOrder(tuple(prefix), tuple(sets))
        placed = frozenset(prefix)
        if placed in dead:
            return None
        for g in gens:
            if g in placed:
                continue
            s = colon_is_variable_generated(prefix, g)
            if s is None:
                continue
            prefix.append(g)
            sets.append(s)
            found = extend(prefix, sets)
            if found is not None:
                return found
            prefix.pop()
            sets.pop()
        dead.add(placed)
        return None

    return extend([], [])


def order_from_certificate(cert: IdealCertificate) -> QuotientOrder:
    """Linear-quotient order read off a decomposition certificate.

    The order of the deletion part is followed by the order of the link
    part; on the link part the colon set is the disjoint union of the
    shedding support with the set from the sub-ideal.
    """
    verify_ideal_certificate(cert)
    order, sets = _order_rec(cert)
    result = QuotientOrder(tuple(order), tuple(sets))
    result.verify()
    return result


def _order_rec(cert: IdealCertificate):
    if isinstance(cert, IdealLeaf):
        return [cert.generator], [frozenset()]
    del_order, del_sets = _order_rec(cert.deletion)
    link_order, link_sets = _order_rec(cert.link)
    supp = frozenset(cert.u.support)
    merged_sets = []
    for s in link_sets:
        if s & supp:
            raise InvalidCertificateError(
                "shedding support meets a link colon set; certificate is broken"
            )
        merged_sets.append(s | supp)
    return del_order + link_order, del_sets + merged_sets


def betti_from_order(ideal: MonomialIdeal, order: QuotientOrder) -> BettiTable:
    """beta_{i, deg f + i} summed as binomials of the colon set sizes."""
    entries: dict[tuple[int, int], int] = {}
    for f, s in zip(order.order, order.sets):
        d = f.degree
        for i in range(len(s) + 1):
            key = (i, d + i)
            entries[key] = entries.get(key, 0) + binom(len(s), i)
    return BettiTable(entries, minimal=True)


def betti_recursive(cert: IdealCertificate) -> BettiTable:
    """Betti table by the shedding recursion
    beta(I) = beta(I^u) + sum_l C(m, l) * beta(I_u) shifted by (l, l)."""
    verify_ideal_certificate(cert)
    return BettiTable(_betti_rec(cert), minimal=True)


def _betti_rec(cert: IdealCertificate) -> dict[tuple[int, int], int]:
    if isinstance(cert, IdealLeaf):
        return {(0, cert.generator.degree): 1}
    out = dict(_betti_rec(cert.deletion))
    lower = _betti_rec(cert.link)
    m = len(cert.u.support)
    for l in range(m + 1):
        c = binom(m, l)
        for (i, j), count in lower.items():
            key = (i + l, j + l)
            out[key] = out.get(key, 0) + c * count
    return out


def pd_reg_from_certificate(cert: IdealCertificate) -> tuple[int, int]:
    """(pd I, reg I): pd = max(pd I^u, pd I_u + |supp u|), reg = max of regs;
    a leaf has pd 0 and reg its degree."""
    verify_ideal_certificate(cert)
    return _pd_reg_rec(cert)


def _pd_reg_rec(cert: IdealCertificate) -> tuple[int, int]:
    if isinstance(cert, IdealLeaf):
        return 0, cert.generator.degree
    pd_u, reg_u = _pd_reg_rec(cert.deletion)
    pd_l, reg_l = _pd_reg_rec(cert.link)
    m = len(cert.u.support)
    return max(pd_u, pd_l + m), max(reg_u, reg_l)


def invariants_from_betti(table: BettiTable) -> tuple[int, int]:
    """(pd, reg) read off a table from a minimal resolution source."""
    if not table:
        raise ValueError("empty Betti table")
    if not table.minimal:
        raise ValueError("table lacks the minimal-source tag")
    return table.pd, table.reg


def reg_pd_complex(
    delta: SimplicialComplex, cert: ComplexCertificate
) -> tuple[int, int]:
    """(reg R/I, pd R/I) for the nonface ideal of a decomposable complex.

    Evaluates, over the certificate, reg = max(reg deletion, reg link +
    |sigma|) and pd = max(pd deletion, pd link); the deletion branch
    keeps the ambient vertex set, the link branch drops sigma from it.
    Base case: a simplex leaf missing s ambient vertices has the
    variable-generated nonface ideal, so reg 0 and pd s.
    """
    verify_complex_certificate(delta, cert)
    return _reg_pd_rec(delta, frozenset(delta.vertices), cert)


def _reg_pd_rec(delta, ambient: frozenset[int], cert) -> tuple[int, int]:
    if isinstance(cert, ComplexLeaf):
        if cert.facet is None:
            raise InvalidCertificateError("the void complex has no nonface ideal")
        return 0, len(ambient - cert.facet)
    sigma = cert.sigma
    reg_d, pd_d = _reg_pd_rec(delete_face(delta, sigma), ambient, cert.deletion)
    reg_l, pd_l = _reg_pd_rec(link(delta, sigma), ambient - sigma, cert.link)
    return max(reg_d, reg_l + len(sigma)), max(pd_d, pd_l)


def terao_check(ideal: MonomialIdeal, field=None) -> bool:
    """Oracle identity pd(dual I) = reg(R/I) for a squarefree proper ideal.

    A False return would indicate an implementation bug rather than an
    interesting ideal.
    """
    from .complexes import alexander_dual_ideal

    if ideal.is_zero:
        raise ZeroIdealError("needs a nonzero ideal")
    if not ideal.is_squarefree:
        raise ValueError("needs a squarefree ideal")
    dual = alexander_dual_ideal(ideal)
    pd_dual = betti_hochster(dual, field).pd
    reg_quotient = betti_hochster(ideal, field).reg - 1
    return pd_dual == reg_quotient


def bight(ideal: MonomialIdeal) -> int:
    """Big height: the largest size of a minimal prime, i.e. the largest
    generator degree of the Alexander dual."""
    from .complexes import alexander_dual_ideal

    if not ideal.is_squarefree:
        raise ValueError("big height via duality needs a squarefree ideal")
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no minimal primes")
    return max(g.degree for g in alexander_dual_ideal(ideal).gens)


def oracle_betti(ideal: MonomialIdeal, field=None) -> BettiTable:
    """Convenience re-export of the ground-truth table."""
    return oracle_ideal_table(ideal, field)
