"""Shedding tests and k-decomposability search with verifiable certificates.

A certificate is a binary tree of splits.  For ideals each inner node
names a shedding monomial u and splits the generators into the part some
power of u divides (the "deletion" side I^u) and the untouched part (the
"link" side I_u).  For complexes each inner node names a shedding face.
Certificates can be re-verified independently of the search that found
them.

Determinism: candidates are tried in lexicographic order of their sorted
support/vertex tuple, then of the exponent vector, and the first valid
shedding monomial or face wins.  Search failures are memoized by the
canonical form of the object together with the bound k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .complexes import SimplicialComplex, delete_face, link
from .errors import (
    BudgetExceededError,
    InvalidCertificateError,
    NotAFaceError,
    ZeroIdealError,
)
from .monomials import Monomial, MonomialIdeal

DEFAULT_NODE_BUDGET = 500_000


def matches(u: Monomial, m: Monomial) -> bool:
    """The predicate [u, M] = 1: no x_i^{a_i} with a_i > 0 in u divides M."""
    u._check(m)
    if u.is_one:
        raise ValueError("the predicate is vacuous for u = 1")
    return all(b < a for a, b in zip(u.exponents, m.exponents) if a > 0)


def split(ideal: MonomialIdeal, u: Monomial) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Partition G(I) into (I^u, I_u) by the predicate [u, .]."""
    if u.is_one:
        raise ValueError("cannot split along u = 1")
    upper = [g for g in ideal.gens if not matches(u, g)]
    lower = [g for g in ideal.gens if matches(u, g)]
    return (
        MonomialIdeal(ideal.ctx, tuple(upper)),
        MonomialIdeal(ideal.ctx, tuple(lower)),
    )


def is_shedding_monomial(ideal: MonomialIdeal, u: Monomial) -> bool:
    """u sheds I when I_u != 0 and every generator of I_u is one colon step
    away from some generator of I^u, in every support variable of u."""
    upper, lower = split(ideal, u)
    if lower.is_zero:
        return False
    if upper.is_zero:
        return False  # the required witnesses cannot exist
    for m in lower.gens:
        for var in sorted(u.support):
            target = ideal.ctx.variable(var)
            if not any(g.colon(m) == target for g in upper.gens):
                return False
    return True


@dataclass(frozen=True)
class IdealLeaf:
    generator: Monomial


@dataclass(frozen=True)
class IdealNode:
    u: Monomial
    deletion: "IdealCertificate"  # certificate for I^u
    link: "IdealCertificate"  # certificate for I_u


IdealCertificate = IdealLeaf | IdealNode


def certificate_generators(cert: IdealCertificate) -> list[Monomial]:
    if isinstance(cert, IdealLeaf):
        return [cert.generator]
    return certificate_generators(cert.deletion) + certificate_generators(cert.link)


def verify_ideal_certificate(
    cert: IdealCertificate, k: int = -1, expected: MonomialIdeal | None = None
) -> MonomialIdeal:
    """Re-check every node of a certificate; returns the root ideal.

    Raises InvalidCertificateError when any shedding claim, split or the
    support bound fails.
    """
    leaves = certificate_generators(cert)
    if not leaves:
        raise InvalidCertificateError("certificate has no leaves")
    ctx = leaves[0].ctx
    ideal = MonomialIdeal.from_monomials(ctx, leaves)
    if len(ideal.gens) != len(leaves):
        raise InvalidCertificateError("certificate leaves are not a minimal set")
    if expected is not None and ideal != expected:
        raise InvalidCertificateError("certificate does not describe this ideal")
    _verify_ideal_node(cert, ideal, k)
    return ideal


def _verify_ideal_node(cert: IdealCertificate, ideal: MonomialIdeal, k: int) -> None:
    if isinstance(cert, IdealLeaf):
        if ideal.gens != (cert.generator,):
            raise InvalidCertificateError("leaf does not match its ideal")
        return
    u = cert.u
    if k >= 0 and len(u.support) > k + 1:
        raise InvalidCertificateError(
            f"|supp(u)| = {len(u.support)} exceeds k + 1 = {k + 1}"
        )
    if not is_shedding_monomial(ideal, u):
        raise InvalidCertificateError(f"{u} is not a shedding monomial here")
    upper, lower = split(ideal, u)
    if set(certificate_generators(cert.deletion)) != set(upper.gens):
        raise InvalidCertificateError("deletion subtree does not match I^u")
    if set(certificate_generators(cert.link)) != set(lower.gens):
        raise InvalidCertificateError("link subtree does not match I_u")
    _verify_ideal_node(cert.deletion, upper, k)
    _verify_ideal_node(cert.link, lower, k)


def _shedding_candidates(ideal: MonomialIdeal, cap: int):
    """Candidate shedding monomials in deterministic order.

    For each variable the candidate exponents are exactly the positive
    exponents occurring among the generators, so the space is finite and
    complete up to the threshold semantics of the predicate.  Supports
    are enumerated in lexicographic order of their sorted index tuple,
    exponent choices in ascending product order.
    """
    occurring: dict[int, list[int]] = {}
    for g in ideal.gens:
        for i, e in enumerate(g.exponents):
            if e > 0:
                occurring.setdefault(i, []).append(e)
    variables = sorted(occurring)
    exps = {i: sorted(set(v)) for i, v in occurring.items()}
    supports: list[tuple[int, ...]] = []
    for r in range(1, min(cap, len(variables)) + 1):
        supports.extend(combinations(variables, r))
    supports.sort()
    for supp in supports:
        for choice in product(*(exps[i] for i in supp)):
            vec = [0] * ideal.ctx.n
            for i, e in zip(supp, choice):
                vec[i] = e
            yield Monomial(ideal.ctx, tuple(vec))


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceededError("decomposition search budget exhausted")


def k_decomposable_ideal(
    ideal: MonomialIdeal,
    k: int = -1,
    memo: dict | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> IdealCertificate | None:
    """Search for a k-decomposition certificate of a nonzero proper ideal.

    k = -1 places no bound on shedding supports.  Returns None when the
    search space is exhausted (a definitive negative); raises
    BudgetExceededError when the node budget runs out first.
    """
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no decomposition")
    if memo is None:
        memo = {}
    return _search_ideal(ideal, k, memo, _Budget(node_budget))


def _search_ideal(ideal, k, memo, budget) -> IdealCertificate | None:
    if len(ideal.gens) == 1:
        return IdealLeaf(ideal.gens[0])
    key = (tuple(g.exponents for g in ideal.gens), k)
    if key in memo:
        return memo[key]
    budget.spend()
    cap = ideal.ctx.n if k < 0 else k + 1
    result = None
    for u in _shedding_candidates(ideal, cap):
        if not is_shedding_monomial(ideal, u):
            continue
        upper, lower = split(ideal, u)
        left = _search_ideal(upper, k, memo, budget)
        if left is None:
            continue
        right = _search_ideal(lower, k, memo, budget)
        if right is None:
            continue
        result = IdealNode(u, left, right)
        break
    memo[key] = result
    return result


def is_shedding_face(delta: SimplicialComplex, sigma) -> bool:
    """Exchange test: every face containing sigma can swap any vertex of
    sigma for some outside vertex and stay a face."""
    sigma = frozenset(sigma)
    if not sigma:
        raise ValueError("a shedding face must be nonempty")
    if not delta.has_face(sigma):
        raise NotAFaceError(f"{sorted(sigma)} is not a face")
    faces = delta.faces()
    vertices = delta.vertices
    for tau in faces:
        if not sigma <= tau:
            continue
        outside = vertices - tau
        for v in sigma:
            base = tau - {v}
            if not any(base | {w} in faces for w in outside):
                return False
    return True


@dataclass(frozen=True)
class ComplexLeaf:
    """A simplex leaf; facet None encodes the void complex."""

    facet: frozenset[int] | None


@dataclass(frozen=True)
class ComplexNode:
    sigma: frozenset[int]
    deletion: "ComplexCertificate"
    link: "ComplexCertificate"


ComplexCertificate = ComplexLeaf | ComplexNode


def verify_complex_certificate(
    delta: SimplicialComplex, cert: ComplexCertificate, k: int = -1
) -> None:
    """Re-check a complex certificate against `delta`; raises on failure."""
    if isinstance(cert, ComplexLeaf):
        if cert.facet is None:
            if not delta.is_void:
                raise InvalidCertificateError("void leaf for a non-void complex")
        elif delta.facets != frozenset([cert.facet]):
            raise InvalidCertificateError("leaf facet does not match the complex")
        return
    sigma = cert.sigma
    if not sigma:
        raise InvalidCertificateError("empty shedding face in certificate")
    if k >= 0 and len(sigma) > k + 1:
        raise InvalidCertificateError(
            f"dim(sigma) = {len(sigma) - 1} exceeds k = {k}"
        )
    if not delta.has_face(sigma):
        raise InvalidCertificateError(f"{sorted(sigma)} is not a face")
    if not is_shedding_face(delta, sigma):
        raise InvalidCertificateError(f"{sorted(sigma)} is not a shedding face")
    verify_complex_certificate(delete_face(delta, sigma), cert.deletion, k)
    verify_complex_certificate(link(delta, sigma), cert.link, k)


def k_decomposable_complex(
    delta: SimplicialComplex,
    k: int = -1,
    mode: str = "direct",
    memo: dict | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ComplexCertificate | None:
    """Decide k-decomposability of a complex.

    Direct mode searches shedding faces and recurses on deletion and
    link.  Dual mode runs the ideal search on the facet-complement ideal
    of the complex and transports the certificate back (a shedding
    monomial with support S corresponds to the shedding face S).  The two
    modes agree; certificates from either re-verify directly.
    """
    if mode not in ("direct", "dual"):
        raise ValueError(f"unknown mode {mode!r}")
    if memo is None:
        memo = {}
    if mode == "direct":
        return _search_complex(delta, k, memo, _Budget(node_budget))
    if delta.is_simplex:
        return _complex_leaf(delta)
    dual_ideal = facet_complement_ideal(delta)
    cert = k_decomposable_ideal(dual_ideal, k, memo=memo, node_budget=node_budget)
    if cert is None:
        return None
    return transport_certificate(cert, delta.vertices)


def facet_complement_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """The ideal generated by x^(X - F) over facets F; this is the nonface
    ideal of the Alexander dual."""
    if delta.is_void:
        raise ZeroIdealError("the void complex has no facet-complement ideal")
    ctx = delta.ctx
    return MonomialIdeal.from_monomials(
        ctx, (ctx.monomial_of_set(delta.vertices - f) for f in delta.facets)
    )


def transport_certificate(cert: IdealCertificate, vertices) -> ComplexCertificate:
    """Map an ideal certificate for the facet-complement ideal back to the
    complex: leaves become facets (complement of the generator support in
    the current vertex set), nodes become shedding faces."""
    vertices = frozenset(vertices)
    if isinstance(cert, IdealLeaf):
        return ComplexLeaf(vertices - cert.generator.support)
    sigma = frozenset(cert.u.support)
    return ComplexNode(
        sigma,
        transport_certificate(cert.deletion, vertices),
        transport_certificate(cert.link, vertices - sigma),
    )


def _complex_leaf(delta: SimplicialComplex) -> ComplexLeaf:
    if delta.is_void:
        return ComplexLeaf(None)
    (facet,) = delta.facets
    return ComplexLeaf(facet)


def _search_complex(delta, k, memo, budget) -> ComplexCertificate | None:
    if delta.is_simplex:
        return _complex_leaf(delta)
    key = (delta.canonical_key(), k)
    if key in memo:
        return memo[key]
    budget.spend()
    cap = len(delta.vertices) if k < 0 else k + 1
    faces = sorted(
        (tuple(sorted(f)) for f in delta.faces() if 0 < len(f) <= cap),
    )
    result = None
    for face in faces:
        sigma = frozenset(face)
        if not is_shedding_face(delta, sigma):
            continue
        left = _search_complex(delete_face(delta, sigma), k, memo, budget)
        if left is None:
            continue
        right = _search_complex(link(delta, sigma), k, memo, budget)
        if right is None:
            continue
        result = ComplexNode(sigma, left, right)
        break
    memo[key] = result
    return result
