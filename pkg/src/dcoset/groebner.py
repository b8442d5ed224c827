"""Buchberger's algorithm and the ideal operations built on it.

The pipeline is deliberately deterministic: pairs are selected by smallest
lcm in the active order with ties broken by input index, every computed
basis is interreduced to the unique reduced monic basis and sorted by
leading monomial, and after every run each S-polynomial of the result is
checked to reduce to zero (a cheap self-audit that has caught more bugs
than it costs).

Derived operations follow the classical elimination recipes: variable
elimination through a block order, saturation through a fresh inverse
variable, radical membership through the extra-variable trick of adjoining
1 - t*f and testing for the unit ideal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .polyring import (
    GREVLEX,
    BlockOrder,
    MonomialOrder,
    Polynomial,
    RingCtx,
    block_order,
    extend_ring,
    lift,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    restrict,
)

__all__ = [
    "Ideal",
    "spolynomial",
    "normal_form",
    "groebner_basis",
    "ideal_member",
    "is_unit_ideal",
    "radical_member",
    "eliminate",
    "saturate",
    "saturate_product",
    "equal_ideals",
    "ideal_sum",
    "ideal_product",
    "lift_ideal",
    "fresh_var",
]

_ONE = Fraction(1)

# every groebner_basis() call re-verifies the Buchberger fixed point unless
# a caller profiling a hot loop turns this off
CHECK_FIXED_POINT = True


class Ideal:
    """A finitely generated ideal, with cached reduced bases per order."""

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: RingCtx, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be polynomials")
            if g.ring.vars != ring.vars:
                raise ValueError(f"generator {g!r} is not in ring {ring!r}")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = {}

    def groebner_basis(self, order: MonomialOrder | None = None):
        return groebner_basis(self, order)

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({inside})"


def spolynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S(f, g) = (L/lt f)·f - (L/lt g)·g with L = lcm of the leading monomials."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of the zero polynomial is undefined")
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    lcm = mono_lcm(lf, lg)
    a = _mul_term(f, mono_div(lcm, lf), _ONE / f.terms[lf])
    b = _mul_term(g, mono_div(lcm, lg), _ONE / g.terms[lg])
    return a - b


def _mul_term(p: Polynomial, mono, coeff: Fraction) -> Polynomial:
    return Polynomial._new(
        p.ring, {mono_mul(m, mono): c * coeff for m, c in p.terms.items()}
    )


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Fully reduce f against basis: no remainder term is divisible by any
    leading monomial of the basis."""
    basis = [b for b in basis]
    for b in basis:
        if b.is_zero():
            raise ValueError("reduction basis contains the zero polynomial")
    if f.is_zero() or not basis:
        return f
    key = order.key
    lms = [b.leading_monomial(order) for b in basis]
    lcs = [b.terms[lm] for b, lm in zip(basis, lms)]
    work = dict(f.terms)
    out: dict = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for i, lm in enumerate(lms):
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                factor = c / lcs[i]
                for bm, bc in basis[i].terms.items():
                    if bm == lm:
                        continue
                    mm = mono_mul(bm, shift)
                    v = work.get(mm, 0) - factor * bc
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            out[m] = c
    return Polynomial._new(f.ring, out)


def _chain_skip(i, j, lcm_ij, lms, pending) -> bool:
    # Buchberger's second criterion: some k with lt(k) | lcm(i,j) whose
    # pairs with both i and j were already handled
    for k in range(len(lms)):
        if k == i or k == j:
            continue
        if not mono_divides(lms[k], lcm_ij):
            continue
        p1 = (i, k) if i < k else (k, i)
        p2 = (j, k) if j < k else (k, j)
        if p1 not in pending and p2 not in pending:
            return True
    return False


def _buchberger(gens: Sequence[Polynomial], order: MonomialOrder):
    basis = [g.monic(order) for g in gens if not g.is_zero()]
    if not basis:
        return []
    lms = [g.leading_monomial(order) for g in basis]
    pending = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    key = order.key
    while pending:
        i, j = min(pending, key=lambda p: (key(mono_lcm(lms[p[0]], lms[p[1]])), p))
        pending.discard((i, j))
        lcm_ij = mono_lcm(lms[i], lms[j])
        if lcm_ij == mono_mul(lms[i], lms[j]):
            continue  # coprime leading terms: S-poly reduces to zero
        if _chain_skip(i, j, lcm_ij, lms, pending):
            continue
        h = normal_form(spolynomial(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        h = h.monic(order)
        k = len(basis)
        basis.append(h)
        lms.append(h.leading_monomial(order))
        for m in range(k):
            pending.add((m, k))
    return basis


def _reduced_basis(basis, order):
    if not basis:
        return ()
    key = order.key
    # minimal: drop any element whose leading monomial is divisible by
    # another kept one; ascending scan keeps the smallest representatives
    ordered = sorted(range(len(basis)), key=lambda i: (key(basis[i].leading_monomial(order)), i))
    kept = []
    kept_lms = []
    for i in ordered:
        lm = basis[i].leading_monomial(order)
        if any(mono_divides(k, lm) for k in kept_lms):
            continue
        kept.append(basis[i])
        kept_lms.append(lm)
    # interreduce tails to a fixed point
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            h = normal_form(kept[i], others, order) if others else kept[i]
            if h != kept[i]:
                kept[i] = h.monic(order)
                changed = True
    kept.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return tuple(kept)


def _assert_fixed_point(basis, order):
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = spolynomial(basis[i], basis[j], order)
            if not normal_form(s, basis, order).is_zero():
                raise AssertionError(
                    f"S-polynomial of basis elements {i} and {j} does not reduce to zero"
                )


def groebner_basis(ideal: Ideal, order: MonomialOrder | None = None):
    """Reduced monic Groebner basis as a tuple, cached per order.

    The zero ideal yields the empty tuple; the unit ideal yields (1,).
    Permuting the generators gives the identical tuple.
    """
    order = order or ideal.ring.order
    tag = order.tag()
    cached = ideal._gb.get(tag)
    if cached is not None:
        return cached
    basis = _reduced_basis(_buchberger(ideal.generators, order), order)
    if CHECK_FIXED_POINT:
        _assert_fixed_point(basis, order)
    ideal._gb[tag] = basis
    return basis


def ideal_member(f: Polynomial, ideal: Ideal, order: MonomialOrder | None = None) -> bool:
    if f.ring.vars != ideal.ring.vars:
        raise ValueError("polynomial and ideal live in different rings")
    order = order or ideal.ring.order
    basis = groebner_basis(ideal, order)
    if not basis:
        return f.is_zero()
    return normal_form(f, basis, order).is_zero()


def is_unit_ideal(ideal: Ideal, order: MonomialOrder | None = None) -> bool:
    basis = groebner_basis(ideal, order)
    return len(basis) == 1 and basis[0].is_constant()


def fresh_var(ring: RingCtx, base: str = "t") -> str:
    """A variable name not already used by the ring."""
    if not ring.has_var(base):
        return base
    n = 1
    while ring.has_var(f"{base}_{n}"):
        n += 1
    return f"{base}_{n}"


def radical_member(f: Polynomial, ideal: Ideal) -> bool:
    """f lies in the radical iff 1 is in ideal + (1 - t*f) for fresh t."""
    if f.ring.vars != ideal.ring.vars:
        raise ValueError("polynomial and ideal live in different rings")
    if f.is_zero():
        return True
    t = fresh_var(ideal.ring)
    big = extend_ring(ideal.ring, (t,))
    gens = [lift(g, big) for g in ideal.generators]
    gens.append(big.one() - big.gen(t) * lift(f, big))
    return is_unit_ideal(Ideal(big, gens))


def eliminate(ideal: Ideal, drop: Iterable[str], into: RingCtx | None = None) -> Ideal:
    """Intersection with the subring omitting `drop`, via a block order."""
    drop = set(drop)
    unknown = drop - set(ideal.ring.vars)
    if unknown:
        raise ValueError(f"variables not in ring: {sorted(unknown)}")
    kept_names = tuple(v for v in ideal.ring.vars if v not in drop)
    if not kept_names:
        raise ValueError("cannot eliminate every variable of the ring")
    if into is not None and into.vars != kept_names:
        raise ValueError(
            f"target ring variables {into.vars} do not match the kept block {kept_names}"
        )
    small = into or RingCtx(kept_names)
    if not drop:
        return Ideal(small, [restrict(g, small) for g in ideal.generators])
    order = block_order(ideal.ring, drop)
    basis = groebner_basis(ideal, order)
    drop_idx = order.elim_idx
    kept = []
    for g in basis:
        if all(all(m[i] == 0 for i in drop_idx) for m in g.terms):
            kept.append(restrict(g, small))
    return Ideal(small, kept)


def saturate(ideal: Ideal, g: Polynomial) -> Ideal:
    """ideal : g^inf, computed by inverting g with a fresh variable."""
    if g.ring.vars != ideal.ring.vars:
        raise ValueError("polynomial and ideal live in different rings")
    if g.is_zero():
        raise ValueError("cannot saturate by the zero polynomial")
    if g.is_constant():
        return Ideal(ideal.ring, ideal.generators)
    t = fresh_var(ideal.ring)
    big = extend_ring(ideal.ring, (t,))
    gens = [lift(p, big) for p in ideal.generators]
    gens.append(big.one() - big.gen(t) * lift(g, big))
    return eliminate(Ideal(big, gens), {t}, into=ideal.ring)


def saturate_product(ideal: Ideal, factors: Sequence[Polynomial]) -> Ideal:
    """ideal : (f1*...*fk)^inf, as per-factor saturations run to a fixed point."""
    if not factors:
        return Ideal(ideal.ring, ideal.generators)
    current = ideal
    while True:
        nxt = current
        for f in factors:
            nxt = saturate(nxt, f)
        if equal_ideals(nxt, current):
            return current
        current = nxt


def equal_ideals(a: Ideal, b: Ideal) -> bool:
    if a.ring.vars != b.ring.vars:
        raise ValueError("ideals live in different rings")
    return all(ideal_member(g, b) for g in a.generators) and all(
        ideal_member(g, a) for g in b.generators
    )


def ideal_sum(*ideals: Ideal) -> Ideal:
    if not ideals:
        raise ValueError("ideal_sum needs at least one ideal")
    ring = ideals[0].ring
    gens = []
    for i in ideals:
        if i.ring.vars != ring.vars:
            raise ValueError("ideals live in different rings")
        gens.extend(i.generators)
    return Ideal(ring, gens)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    """Pairwise generator products; the zero ideal absorbs."""
    if a.ring.vars != b.ring.vars:
        raise ValueError("ideals live in different rings")
    return Ideal(a.ring, [g * h for g in a.generators for h in b.generators])


def lift_ideal(ideal: Ideal, big: RingCtx) -> Ideal:
    return Ideal(big, [lift(g, big) for g in ideal.generators])
