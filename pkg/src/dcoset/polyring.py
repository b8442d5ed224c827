"""Sparse multivariate polynomials over the rationals.

A polynomial is a dict from exponent tuples to nonzero `Fraction`
coefficients, attached to a `RingCtx` that fixes the variable names and a
monomial order.  All arithmetic is exact; nothing in this module ever touches
floating point.

Monomial orders are exposed as sort-key functions on exponent tuples, so
`max(terms, key=order.key)` picks the leading monomial and sorting a term
list gives a deterministic display order.  Three orders are provided: `LEX`,
`GREVLEX`, and block orders built with `block_order` for elimination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "RingMismatchError",
    "MonomialOrder",
    "LEX",
    "GREVLEX",
    "BlockOrder",
    "block_order",
    "compare_monomials",
    "mono_mul",
    "mono_div",
    "mono_divides",
    "mono_lcm",
    "mono_degree",
    "RingCtx",
    "Polynomial",
    "RationalPoint",
    "as_point",
    "as_rational",
    "substitute",
    "evaluate",
    "extend_ring",
    "lift",
    "restrict",
    "format_poly",
]

Scalar = Union[int, Fraction]
Monomial = tuple  # exponent tuple, one slot per ring variable

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RingMismatchError(ValueError):
    """Operands live in rings with different variable tuples."""


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; reject floats outright."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


# ---------------------------------------------------------------------------
# monomial utilities


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exponent-wise difference a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """Total order on exponent tuples of a fixed arity, given by a sort key."""

    name = "abstract"

    def key(self, exps: Monomial):
        raise NotImplementedError

    def tag(self):
        """Hashable identity used for caching Groebner bases per order."""
        return self.name

    def __repr__(self):
        return self.name


class _Lex(MonomialOrder):
    name = "lex"

    def key(self, exps):
        return exps


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class _GrevLex(MonomialOrder):
    name = "grevlex"

    def key(self, exps):
        return _grevlex_key(exps)


LEX = _Lex()
GREVLEX = _GrevLex()


class BlockOrder(MonomialOrder):
    """Two-block elimination order.

    Exponents are split into an eliminated block and a kept block by
    variable index; blocks are compared grevlex, eliminated block first.
    Any polynomial whose leading monomial avoids the eliminated block lies
    entirely in the kept subring, which is what makes elimination work.
    """

    name = "block"

    def __init__(self, elim_names, kept_names, elim_idx, kept_idx):
        self.elim_names = tuple(elim_names)
        self.kept_names = tuple(kept_names)
        self.elim_idx = tuple(elim_idx)
        self.kept_idx = tuple(kept_idx)

    def key(self, exps):
        return (
            _grevlex_key(tuple(exps[i] for i in self.elim_idx)),
            _grevlex_key(tuple(exps[i] for i in self.kept_idx)),
        )

    def tag(self):
        return ("block", self.elim_idx, self.kept_idx)

    def __repr__(self):
        return f"block({','.join(self.elim_names)} ; {','.join(self.kept_names)})"


def block_order(ring: "RingCtx", eliminated: Iterable[str]) -> BlockOrder:
    """Build the elimination order on `ring` that drops `eliminated` first."""
    elim = set(eliminated)
    unknown = elim - set(ring.vars)
    if unknown:
        raise ValueError(f"variables not in ring: {sorted(unknown)}")
    elim_idx = tuple(i for i, v in enumerate(ring.vars) if v in elim)
    kept_idx = tuple(i for i, v in enumerate(ring.vars) if v not in elim)
    return BlockOrder(
        tuple(ring.vars[i] for i in elim_idx),
        tuple(ring.vars[i] for i in kept_idx),
        elim_idx,
        kept_idx,
    )


def compare_monomials(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as m1 <, =, > m2 in the given order."""
    if len(m1) != len(m2):
        raise ValueError("exponent tuples have different arities")
    if isinstance(order, BlockOrder) and len(m1) != len(order.elim_idx) + len(order.kept_idx):
        raise ValueError("arity does not match the block order's partition")
    k1, k2 = order.key(m1), order.key(m2)
    if k1 < k2:
        return -1
    if k1 > k2:
        return 1
    return 0


# ---------------------------------------------------------------------------
# rings


class RingCtx:
    """Polynomial ring context: ordered variable names plus a monomial order.

    >>> R = RingCtx(("x", "y"))
    >>> x, y = R.gens()
    >>> str((x + y) ** 2)
    'x^2 + 2*x*y + y^2'
    """

    __slots__ = ("vars", "order", "_index")

    def __init__(self, variables: Iterable[str], order: MonomialOrder = GREVLEX):
        names = tuple(variables)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if any(not isinstance(v, str) or not v for v in names):
            raise ValueError("variable names must be nonempty strings")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if isinstance(order, BlockOrder):
            covered = tuple(sorted(order.elim_idx + order.kept_idx))
            if covered != tuple(range(len(names))):
                raise ValueError("block order does not partition the ring's variables")
            for i in order.elim_idx:
                if names[i] not in order.elim_names:
                    raise ValueError("block order names disagree with the ring")
        self.vars = names
        self.order = order
        self._index = {v: i for i, v in enumerate(names)}

    @property
    def arity(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r} in ring {self!r}") from None

    def has_var(self, name: str) -> bool:
        return name in self._index

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, value: Scalar) -> "Polynomial":
        c = as_rational(value)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.arity: c})

    def gen(self, name: str) -> "Polynomial":
        i = self.index(name)
        exps = tuple(1 if j == i else 0 for j in range(self.arity))
        return Polynomial(self, {exps: _ONE})

    def gens(self) -> tuple:
        return tuple(self.gen(v) for v in self.vars)

    def monomial(self, exps: Mapping[str, int] | Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        if isinstance(exps, Mapping):
            vec = [0] * self.arity
            for name, e in exps.items():
                vec[self.index(name)] = int(e)
            exps = tuple(vec)
        else:
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.arity:
                raise ValueError("exponent tuple has the wrong arity")
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        c = as_rational(coeff)
        if c == 0:
            return self.zero()
        return Polynomial(self, {exps: c})

    def point(self, coords: Sequence[Scalar]) -> "RationalPoint":
        return RationalPoint(self, coords)

    def __eq__(self, other):
        return (
            isinstance(other, RingCtx)
            and self.vars == other.vars
            and self.order.tag() == other.order.tag()
        )

    def __hash__(self):
        return hash((self.vars, self.order.tag()))

    def __repr__(self):
        return f"RingCtx({','.join(self.vars)}; {self.order!r})"


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms", "_lm_cache")

    def __init__(self, ring: RingCtx, terms: Mapping[Monomial, Fraction]):
        self.ring = ring
        self.terms = dict(terms)
        self._lm_cache = {}

    @classmethod
    def _new(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._lm_cache = {}
        return p

    # -- predicates and accessors

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.ring.arity}

    def constant_value(self) -> Fraction:
        if not self.terms:
            return _ZERO
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def variables_used(self) -> tuple:
        """Names of variables with a nonzero exponent somewhere, in ring order."""
        seen = [False] * self.ring.arity
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    seen[i] = True
        return tuple(v for v, s in zip(self.ring.vars, seen) if s)

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        order = order or self.ring.order
        tag = order.tag()
        lm = self._lm_cache.get(tag)
        if lm is None:
            lm = max(self.terms, key=order.key)
            self._lm_cache[tag] = lm
        return lm

    def leading_coefficient(self, order: MonomialOrder | None = None) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def coefficient(self, exps: Monomial) -> Fraction:
        return self.terms.get(tuple(exps), _ZERO)

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        inv = _ONE / lc
        return Polynomial._new(self.ring, {m: c * inv for m, c in self.terms.items()})

    def sorted_terms(self, order: MonomialOrder | None = None, reverse: bool = True):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=reverse)

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring.vars != self.ring.vars:
                raise RingMismatchError(
                    f"ring mismatch: {self.ring!r} vs {other.ring!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in q.terms.items():
            v = terms.get(m, _ZERO) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial._new(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._new(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in q.terms.items():
            v = terms.get(m, _ZERO) - c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial._new(self.ring, terms)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q - self

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if not self.terms or not q.terms:
            return Polynomial._new(self.ring, {})
        # multiply the shorter poly on the outside
        a, b = (self.terms, q.terms) if len(self.terms) <= len(q.terms) else (q.terms, self.terms)
        out: dict = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                v = out.get(m, _ZERO) + ca * cb
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._new(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.vars == other.ring.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"<{format_poly(self)}>"


# ---------------------------------------------------------------------------
# points


class RationalPoint:
    """A point of affine space with exact rational coordinates."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: RingCtx, coords: Sequence[Scalar]):
        cs = tuple(as_rational(c) for c in coords)
        if len(cs) != ring.arity:
            raise ValueError(
                f"point has {len(cs)} coordinates, ring {ring!r} has arity {ring.arity}"
            )
        self.ring = ring
        self.coords = cs

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        if isinstance(other, RationalPoint):
            return self.ring.vars == other.ring.vars and self.coords == other.coords
        if isinstance(other, tuple):
            return self.coords == tuple(as_rational(c) for c in other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.vars, self.coords))

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def as_point(ring: RingCtx, value) -> RationalPoint:
    """Accept a RationalPoint or any coordinate sequence."""
    if isinstance(value, RationalPoint):
        if value.ring.vars != ring.vars:
            raise RingMismatchError("point belongs to a different ring")
        return value
    return RationalPoint(ring, value)


# ---------------------------------------------------------------------------
# substitution and evaluation


def evaluate(p: Polynomial, point) -> Fraction:
    """Value of p at a rational point, computed exactly."""
    pt = as_point(p.ring, point)
    total = _ZERO
    for m, c in p.terms.items():
        v = c
        for x, e in zip(pt.coords, m):
            if e:
                v *= x**e
        total += v
    return total


def substitute(p: Polynomial, assignment: Mapping[str, object], into: RingCtx | None = None) -> Polynomial:
    """Substitute rationals or polynomials for some variables of p.

    `assignment` maps variable names to scalars or to polynomials in the
    target ring.  Variables left out must exist in the target ring, which
    defaults to the ring of the first polynomial value, then to p's ring.
    """
    for name in assignment:
        if not p.ring.has_var(name):
            raise ValueError(f"unknown variable {name!r} in substitution")
    target = into
    if target is None:
        for v in assignment.values():
            if isinstance(v, Polynomial):
                target = v.ring
                break
    if target is None:
        target = p.ring
    for name, v in assignment.items():
        if isinstance(v, Polynomial) and v.ring.vars != target.vars:
            raise RingMismatchError(
                f"substitution value for {name!r} lives in {v.ring!r}, expected {target!r}"
            )
    for name in p.ring.vars:
        if name not in assignment and not target.has_var(name):
            raise ValueError(
                f"variable {name!r} is not substituted and missing from the target ring"
            )

    result = target.zero()
    for m, c in p.terms.items():
        acc = target.const(c)
        for i, e in enumerate(m):
            if not e:
                continue
            name = p.ring.vars[i]
            if name in assignment:
                v = assignment[name]
                if isinstance(v, Polynomial):
                    acc = acc * v**e
                else:
                    acc = acc * target.const(as_rational(v) ** e)
            else:
                acc = acc * target.gen(name) ** e
            if acc.is_zero():
                break
        result = result + acc
    return result


# ---------------------------------------------------------------------------
# moving polynomials between rings


def extend_ring(ring: RingCtx, new_vars: Iterable[str], order: MonomialOrder | None = None) -> RingCtx:
    """Ring with `new_vars` appended after the existing variables."""
    extra = tuple(new_vars)
    clash = set(extra) & set(ring.vars)
    if clash:
        raise ValueError(f"variables already present: {sorted(clash)}")
    return RingCtx(ring.vars + extra, order or GREVLEX)


def lift(p: Polynomial, big: RingCtx) -> Polynomial:
    """Reinterpret p inside a ring containing all of p's variables, by name."""
    idx = [big.index(v) for v in p.ring.vars]
    terms = {}
    for m, c in p.terms.items():
        vec = [0] * big.arity
        for j, e in zip(idx, m):
            if e:
                vec[j] = e
        terms[tuple(vec)] = c
    return Polynomial._new(big, terms)


def restrict(p: Polynomial, small: RingCtx) -> Polynomial:
    """Reinterpret p inside a subring; p must only use the subring's variables."""
    pos = {}
    for j, v in enumerate(p.ring.vars):
        pos[j] = small._index.get(v)
    terms = {}
    for m, c in p.terms.items():
        vec = [0] * small.arity
        for j, e in enumerate(m):
            if not e:
                continue
            i = pos[j]
            if i is None:
                raise ValueError(
                    f"{p.ring.vars[j]!r} appears in the polynomial but not in {small!r}"
                )
            vec[i] = e
        terms[tuple(vec)] = c
    return Polynomial._new(small, terms)


# ---------------------------------------------------------------------------
# printing


def _format_monomial(ring: RingCtx, m: Monomial) -> str:
    parts = []
    for v, e in zip(ring.vars, m):
        if e == 0:
            continue
        parts.append(v if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    """Render in the CLI grammar; parsing the result gives p back."""
    if not p.terms:
        return "0"
    chunks = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        mono = _format_monomial(p.ring, m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(chunks)
