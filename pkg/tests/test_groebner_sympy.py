"""Cross-validation of the Groebner engine against an independent
implementation, when one is importable."""

import random
from fractions import Fraction

import pytest

sympy = pytest.importorskip("sympy")

from dcoset.polyring import GREVLEX, LEX, RingCtx
from dcoset.groebner import Ideal, groebner_basis


def _to_sympy(poly, symbols):
    expr = sympy.Integer(0)
    for exps, coeff in poly.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for sym, e in zip(symbols, exps):
            term *= sym ** e
        expr += term
    return expr


def _random_ideal(rng, ring):
    gens = []
    for _ in range(rng.randint(1, 3)):
        p = ring.zero()
        for _ in range(rng.randint(1, 4)):
            exps = tuple(rng.randint(0, 2) for _ in ring.vars)
            p = p + ring.monomial(exps, Fraction(rng.randint(-4, 4)))
        if not p.is_zero():
            gens.append(p)
    return Ideal(ring, gens)


@pytest.mark.parametrize("order_name", ["lex", "grevlex"])
def test_reduced_bases_match_sympy(order_name):
    order = {"lex": LEX, "grevlex": GREVLEX}[order_name]
    rng = random.Random(2026)
    for trial in range(20):
        nvars = rng.randint(1, 3)
        ring = RingCtx(("x", "y", "z")[:nvars], order)
        symbols = sympy.symbols(ring.vars)
        if nvars == 1:
            symbols = (symbols,) if not isinstance(symbols, tuple) else symbols
        ideal = _random_ideal(rng, ring)
        if not ideal.generators:
            continue
        ours = groebner_basis(ideal)
        theirs = sympy.groebner(
            [_to_sympy(g, symbols) for g in ideal.generators],
            *symbols,
            order=order_name,
        )
        def canon(e):
            # Rescale to a fixed monic form so both bases, each monic with
            # respect to its own order convention, become comparable.
            return sympy.expand(sympy.monic(e, *symbols) if e.free_symbols else sympy.Integer(1))

        ours_exprs = {canon(_to_sympy(g, symbols)) for g in ours}
        theirs_exprs = {canon(e) for e in theirs.exprs}
        assert ours_exprs == theirs_exprs, f"trial {trial}: {ours_exprs} != {theirs_exprs}"
