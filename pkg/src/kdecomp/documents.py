"""Input documents and serialization for the command line.

Documents are JSON objects with an explicit variable list; the variable
order is part of the contract (it drives lexicographic tie-breaking).
Monomials are written either as strings like ``"x^2*y"`` or as exponent
lists; facets and edges as lists of variable names.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .clutters import Clutter, MinorStep
from .complexes import SimplicialComplex
from .decomposition import (
    ComplexCertificate,
    ComplexLeaf,
    IdealCertificate,
    IdealLeaf,
)
from .errors import DocumentError, ImproperIdealError
from .monomials import Monomial, MonomialIdeal, VariableContext


@dataclass
class ParsedDocument:
    kind: str  # "ideal" | "complex" | "clutter"
    value: object
    warnings: list[str]


def monomial_from_string(text: str, ctx: VariableContext) -> Monomial:
    text = text.strip()
    if text == "1":
        return ctx.one()
    exps = [0] * ctx.n
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor:
            raise DocumentError(f"empty factor in monomial {text!r}")
        name, _, power = factor.partition("^")
        if power:
            try:
                e = int(power)
            except ValueError:
                raise DocumentError(f"bad exponent {power!r} in {text!r}") from None
            if e < 0:
                raise DocumentError(f"negative exponent in {text!r}")
        else:
            e = 1
        try:
            exps[ctx.index(name.strip())] += e
        except KeyError:
            raise DocumentError(f"unknown variable {name.strip()!r}") from None
    return ctx.monomial(exps)


def vertex_list(items, ctx: VariableContext, what: str) -> frozenset[int]:
    out = set()
    for name in items:
        try:
            out.add(ctx.index(name))
        except KeyError:
            raise DocumentError(f"unknown variable {name!r} in {what}") from None
    return frozenset(out)


def parse_document(text: str) -> ParsedDocument:
    """Parse a document; syntax errors report line and column."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    return parse_object(obj)


def parse_object(obj) -> ParsedDocument:
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    kind = obj.get("kind")
    if kind not in ("ideal", "complex", "clutter"):
        raise DocumentError(f"unknown document kind {kind!r}")
    variables = obj.get("vars")
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise DocumentError('"vars" must be a list of variable names')
    try:
        ctx = VariableContext(tuple(variables))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None

    warnings: list[str] = []
    if kind == "ideal":
        raw = obj.get("gens")
        if not isinstance(raw, list):
            raise DocumentError('"gens" must be a list')
        gens = []
        for item in raw:
            if isinstance(item, str):
                gens.append(monomial_from_string(item, ctx))
            elif isinstance(item, list):
                if len(item) != ctx.n or not all(isinstance(e, int) for e in item):
                    raise DocumentError(f"bad exponent list {item!r}")
                gens.append(ctx.monomial(item))
            else:
                raise DocumentError(f"bad generator {item!r}")
        if any(g.is_one for g in gens):
            raise ImproperIdealError("generators contain 1 (unit ideal)")
        ideal = MonomialIdeal.from_monomials(ctx, gens)
        if len(ideal.gens) != len(gens):
            warnings.append("duplicate or non-minimal generators were minimalized")
        return ParsedDocument("ideal", ideal, warnings)

    if kind == "complex":
        raw = obj.get("facets")
        if not isinstance(raw, list):
            raise DocumentError('"facets" must be a list')
        facets = [vertex_list(f, ctx, "facet") for f in raw]
        extra = obj.get("vertices")
        declared = vertex_list(extra, ctx, "vertices") if extra is not None else None
        if not facets:
            value = SimplicialComplex.void(ctx, declared or ())
        else:
            value = SimplicialComplex.from_facets(ctx, facets, vertices=declared)
            if len(value.facets) != len(set(facets)) or len(set(facets)) != len(facets):
                warnings.append("duplicate or non-maximal facets were reduced")
        return ParsedDocument("complex", value, warnings)

    raw = obj.get("edges")
    if not isinstance(raw, list):
        raise DocumentError('"edges" must be a list')
    edges = [vertex_list(e, ctx, "edge") for e in raw]
    extra = obj.get("vertices")
    declared = vertex_list(extra, ctx, "vertices") if extra is not None else None
    try:
        value = Clutter.from_edges(ctx, edges, vertices=declared)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    if len(value.edges) != len(set(edges)) or len(set(edges)) != len(edges):
        warnings.append("duplicate or non-minimal edges were reduced")
    return ParsedDocument("clutter", value, warnings)


def _names(ctx: VariableContext, vertices) -> list[str]:
    return [ctx.names[v] for v in sorted(vertices)]


def emit_object(value) -> dict:
    """Document form of a core value; parse(emit(v)) is semantically v."""
    if isinstance(value, MonomialIdeal):
        return {
            "kind": "ideal",
            "vars": list(value.ctx.names),
            "gens": [str(g) for g in value.gens],
        }
    if isinstance(value, SimplicialComplex):
        out = {
            "kind": "complex",
            "vars": list(value.ctx.names),
            "facets": [_names(value.ctx, f) for f in sorted(value.facets, key=sorted)],
        }
        union = frozenset().union(*value.facets) if value.facets else frozenset()
        if value.vertices != union:
            out["vertices"] = _names(value.ctx, value.vertices)
        return out
    if isinstance(value, Clutter):
        out = {
            "kind": "clutter",
            "vars": list(value.ctx.names),
            "edges": [_names(value.ctx, e) for e in sorted(value.edges, key=sorted)],
        }
        union = frozenset().union(*value.edges) if value.edges else frozenset()
        if value.vertices != union:
            out["vertices"] = _names(value.ctx, value.vertices)
        return out
    raise TypeError(f"cannot emit {type(value).__name__}")


def ideal_certificate_object(cert: IdealCertificate) -> dict:
    if isinstance(cert, IdealLeaf):
        return {"kind": "leaf", "generator": str(cert.generator)}
    return {
        "kind": "node",
        "u": str(cert.u),
        "deletion": ideal_certificate_object(cert.deletion),
        "link": ideal_certificate_object(cert.link),
    }


def complex_certificate_object(cert: ComplexCertificate, ctx: VariableContext) -> dict:
    if isinstance(cert, ComplexLeaf):
        facet = None if cert.facet is None else _names(ctx, cert.facet)
        return {"kind": "leaf", "facet": facet}
    return {
        "kind": "node",
        "sigma": _names(ctx, cert.sigma),
        "deletion": complex_certificate_object(cert.deletion, ctx),
        "link": complex_certificate_object(cert.link, ctx),
    }


def ideal_certificate_text(cert: IdealCertificate, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(cert, IdealLeaf):
        return f"{pad}leaf: {cert.generator}"
    return "\n".join(
        [
            f"{pad}u = {cert.u}",
            f"{pad}  deletion:",
            ideal_certificate_text(cert.deletion, indent + 2),
            f"{pad}  link:",
            ideal_certificate_text(cert.link, indent + 2),
        ]
    )


def complex_certificate_text(
    cert: ComplexCertificate, ctx: VariableContext, indent: int = 0
) -> str:
    pad = "  " * indent
    if isinstance(cert, ComplexLeaf):
        if cert.facet is None:
            return f"{pad}leaf: void"
        return f"{pad}leaf: {{{','.join(_names(ctx, cert.facet))}}}"
    sigma = ",".join(_names(ctx, cert.sigma))
    return "\n".join(
        [
            f"{pad}sigma = {{{sigma}}}",
            f"{pad}  deletion:",
            complex_certificate_text(cert.deletion, ctx, indent + 2),
            f"{pad}  link:",
            complex_certificate_text(cert.link, ctx, indent + 2),
        ]
    )


def trace_object(trace, ctx: VariableContext) -> list[dict]:
    return [{"op": s.kind, "vertex": ctx.names[s.vertex]} for s in trace]


def parse_ops(text: str, ctx: VariableContext) -> tuple[MinorStep, ...]:
    """Parse a minor recipe like "delete:x,contract:y"."""
    steps = []
    if not text.strip():
        return ()
    for part in text.split(","):
        op, _, name = part.strip().partition(":")
        if op not in ("delete", "contract") or not name:
            raise DocumentError(f"bad minor operation {part.strip()!r}")
        try:
            steps.append(MinorStep(op, ctx.index(name.strip())))
        except KeyError:
            raise DocumentError(f"unknown variable {name.strip()!r}") from None
    return tuple(steps)
