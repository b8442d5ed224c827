"""Constructible subsets of affine space over an algebraically closed field.

A set is stored as a finite union of locally closed pieces V(I) \\ V(J).
All predicates are semantic: emptiness goes through radical membership
(a piece is empty iff every generator of J vanishes on V(I)), equality and
containment are mutual-difference checks, and closure saturates the carrier
ideal by each excluded generator.  Nothing ever depends on which particular
piece decomposition represents a set.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .polyring import Polynomial, RationalPoint, RingCtx, as_point, evaluate
from .groebner import (
    Ideal,
    equal_ideals,
    ideal_member,
    ideal_product,
    ideal_sum,
    is_unit_ideal,
    radical_member,
    saturate,
)

__all__ = [
    "ClosedSet",
    "LocallyClosedPiece",
    "ConstructibleSet",
    "whole_space",
    "empty_set",
    "vanishing",
    "locally_closed",
    "union",
    "intersection",
    "difference",
    "complement",
    "boolean",
    "closure",
    "is_empty",
    "contains_point",
    "contains",
    "same_set",
    "is_open_in",
]


class ClosedSet:
    """V(I): the common zero locus of an ideal's generators."""

    __slots__ = ("ring", "ideal")

    def __init__(self, ideal: Ideal):
        self.ring = ideal.ring
        self.ideal = ideal

    def to_constructible(self) -> "ConstructibleSet":
        return ConstructibleSet(self.ring, [LocallyClosedPiece(self.ideal, None)])

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.ideal.generators) or "0"
        return f"V({gens})"


class LocallyClosedPiece:
    """V(carrier) minus V(excluded); excluded = None means nothing removed."""

    __slots__ = ("carrier", "excluded", "_empty")

    def __init__(self, carrier: Ideal, excluded: Ideal | None = None):
        if excluded is not None and excluded.ring.vars != carrier.ring.vars:
            raise ValueError("carrier and excluded ideals live in different rings")
        self.carrier = carrier
        self.excluded = excluded
        self._empty = None

    @property
    def ring(self) -> RingCtx:
        return self.carrier.ring

    def is_empty(self) -> bool:
        """Empty over an algebraically closed field.

        V(I) \\ V(J) is empty iff every generator of J lies in the radical
        of I, i.e. V(I) is contained in V(J).  With no excluded locus the
        piece is empty iff I is the unit ideal.
        """
        if self._empty is None:
            if self.excluded is None:
                self._empty = is_unit_ideal(self.carrier)
            elif self.excluded.is_zero_ideal():
                # removing V(0) = everything
                self._empty = True
            else:
                self._empty = all(
                    radical_member(g, self.carrier) for g in self.excluded.generators
                )
        return self._empty

    def contains_point(self, point) -> bool:
        pt = as_point(self.ring, point)
        if any(evaluate(g, pt) != 0 for g in self.carrier.generators):
            return False
        if self.excluded is None:
            return True
        return any(evaluate(g, pt) != 0 for g in self.excluded.generators)

    def __repr__(self):
        base = ", ".join(str(g) for g in self.carrier.generators) or "0"
        if self.excluded is None:
            return f"V({base})"
        cut = ", ".join(str(g) for g in self.excluded.generators) or "0"
        return f"V({base}) \\ V({cut})"


class ConstructibleSet:
    """Finite union of locally closed pieces in a fixed ambient ring."""

    __slots__ = ("ring", "pieces")

    def __init__(self, ring: RingCtx, pieces: Iterable[LocallyClosedPiece] = ()):
        ps = []
        for p in pieces:
            if p.ring.vars != ring.vars:
                raise ValueError("piece lives in a different ring than the ambient space")
            ps.append(p)
        self.ring = ring
        self.pieces = tuple(ps)

    def pruned(self) -> "ConstructibleSet":
        """Drop pieces that are empty over the algebraic closure."""
        keep = [p for p in self.pieces if not p.is_empty()]
        if len(keep) == len(self.pieces):
            return self
        return ConstructibleSet(self.ring, keep)

    def __repr__(self):
        if not self.pieces:
            return "EmptySet"
        return " ∪ ".join(repr(p) for p in self.pieces)


# ---------------------------------------------------------------------------
# constructors


def whole_space(ring: RingCtx) -> ConstructibleSet:
    return ConstructibleSet(ring, [LocallyClosedPiece(Ideal(ring, []), None)])


def empty_set(ring: RingCtx) -> ConstructibleSet:
    return ConstructibleSet(ring, [])


def vanishing(ideal: Ideal) -> ConstructibleSet:
    """The closed set V(ideal) as a constructible set."""
    return ConstructibleSet(ideal.ring, [LocallyClosedPiece(ideal, None)])


def locally_closed(carrier: Ideal, excluded: Ideal | None = None) -> ConstructibleSet:
    return ConstructibleSet(carrier.ring, [LocallyClosedPiece(carrier, excluded)])


def _check_same_ambient(a: ConstructibleSet, b: ConstructibleSet):
    if a.ring.vars != b.ring.vars:
        raise ValueError("constructible sets live in different ambient spaces")


# ---------------------------------------------------------------------------
# boolean algebra


def union(a: ConstructibleSet, b: ConstructibleSet) -> ConstructibleSet:
    _check_same_ambient(a, b)
    return ConstructibleSet(a.ring, a.pieces + b.pieces).pruned()


def _intersect_pieces(p: LocallyClosedPiece, q: LocallyClosedPiece) -> LocallyClosedPiece:
    carrier = ideal_sum(p.carrier, q.carrier)
    if p.excluded is None and q.excluded is None:
        return LocallyClosedPiece(carrier, None)
    # (A \ V(J1)) ∩ (B \ V(J2)) = (A ∩ B) \ V(J1*J2): a point survives iff
    # some generator of J1 and some generator of J2 are both nonzero there
    if p.excluded is None:
        return LocallyClosedPiece(carrier, q.excluded)
    if q.excluded is None:
        return LocallyClosedPiece(carrier, p.excluded)
    return LocallyClosedPiece(carrier, ideal_product(p.excluded, q.excluded))


def intersection(a: ConstructibleSet, b: ConstructibleSet) -> ConstructibleSet:
    _check_same_ambient(a, b)
    pieces = [_intersect_pieces(p, q) for p in a.pieces for q in b.pieces]
    return ConstructibleSet(a.ring, pieces).pruned()


def _complement_piece(piece: LocallyClosedPiece) -> ConstructibleSet:
    # complement of V(I) \ V(J) is (complement of V(I)) ∪ V(J)
    ring = piece.ring
    out = [LocallyClosedPiece(Ideal(ring, []), piece.carrier)]
    if piece.excluded is not None:
        out.append(LocallyClosedPiece(piece.excluded, None))
    return ConstructibleSet(ring, out).pruned()


def complement(a: ConstructibleSet) -> ConstructibleSet:
    result = whole_space(a.ring)
    for piece in a.pieces:
        result = intersection(result, _complement_piece(piece))
    return result


def difference(a: ConstructibleSet, b: ConstructibleSet) -> ConstructibleSet:
    _check_same_ambient(a, b)
    return intersection(a, complement(b))


def boolean(kind: str, a: ConstructibleSet, b: ConstructibleSet) -> ConstructibleSet:
    """Dispatch on kind: 'union', 'intersection' or 'difference'."""
    ops = {"union": union, "intersection": intersection, "difference": difference}
    try:
        op = ops[kind]
    except KeyError:
        raise ValueError(f"unknown boolean operation {kind!r}") from None
    return op(a, b)


# ---------------------------------------------------------------------------
# predicates and closure


def is_empty(a: ConstructibleSet) -> bool:
    return all(p.is_empty() for p in a.pieces)


def contains_point(a: ConstructibleSet, point) -> bool:
    pt = as_point(a.ring, point)
    return any(p.contains_point(pt) for p in a.pieces)


def closure(a: ConstructibleSet) -> ClosedSet:
    """Zariski closure.

    closure(V(I) \\ V(J)) = union over generators g of J of V(I : g^inf),
    and the union of closed sets is the vanishing locus of the product
    ideal.  The empty set closes to V(1).
    """
    ring = a.ring
    result = None  # running product ideal; None means nothing accumulated yet
    for piece in a.pieces:
        if piece.is_empty():
            continue
        if piece.excluded is None:
            parts = [piece.carrier]
        else:
            parts = [saturate(piece.carrier, g) for g in piece.excluded.generators]
        for part in parts:
            result = part if result is None else ideal_product(result, part)
            if result.is_zero_ideal():
                return ClosedSet(result)  # already the whole space
    if result is None:
        return ClosedSet(Ideal(ring, [ring.one()]))
    return ClosedSet(result)


def contains(outer: ConstructibleSet, inner: ConstructibleSet) -> bool:
    _check_same_ambient(outer, inner)
    return is_empty(difference(inner, outer))


def same_set(a: ConstructibleSet, b: ConstructibleSet) -> bool:
    """Semantic equality: mutual containment, independent of representation."""
    return contains(a, b) and contains(b, a)


def is_open_in(subset: ConstructibleSet, ambient: ConstructibleSet) -> bool:
    """Is `subset` open inside `ambient`?

    True iff the complement of subset within ambient is closed in ambient,
    i.e. equals (its own Zariski closure) ∩ ambient.  Raises if subset is
    not contained in ambient, since the question is then ill-posed.
    """
    _check_same_ambient(subset, ambient)
    if not contains(ambient, subset):
        raise ValueError("subset is not contained in the ambient set")
    rest = difference(ambient, subset)
    closed_part = intersection(closure(rest).to_constructible(), ambient)
    return same_set(rest, closed_part)
