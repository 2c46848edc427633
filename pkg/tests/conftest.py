from __future__ import annotations

import pytest

from kdecomp import VariableContext


@pytest.fixture
def ctx3():
    return VariableContext.of("x", "y", "z")


@pytest.fixture
def ctx4():
    return VariableContext.of("x", "y", "z", "w")


def mono(ctx, text: str):
    """Build a monomial from a compact string like 'x^2*y' (test helper)."""
    from kdecomp.documents import monomial_from_string

    return monomial_from_string(text, ctx)


def ideal(ctx, *texts: str):
    from kdecomp import MonomialIdeal

    return MonomialIdeal.from_monomials(ctx, [mono(ctx, t) for t in texts])
