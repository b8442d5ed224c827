"""Brute-force finite-field oracle.

Symbolic claims whose proofs are field-independent can be shadowed by
exhaustive computation over a small prime field: reduce every polynomial
mod p, enumerate points, and compare image membership or orbit partitions
against the symbolic prediction.  Scenarios declare which of their claims
carry such shadows; :func:`cross_check` runs the declared shadows for one
prime and returns a report.

Rational coefficients are mapped to F_p via modular inverse of the
denominator.  A denominator divisible by p has no image, so reduction
raises :class:`GuardViolation` rather than produce a wrong answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .polyring import Polynomial, RingCtx
from .geometry import ConstructibleSet
from .action import GroupActionSpec
from .morphism import PolyMap
from .report import KIND_VERIFIED, CheckResult, Report
from . import scenarios as _scenarios

__all__ = [
    "DEFAULT_PRIMES",
    "FpConfig",
    "GuardViolation",
    "compile_poly",
    "set_pred_mod_p",
    "enumerate_image",
    "enumerate_orbits",
    "group_elements",
    "ImageEnumeration",
    "OrbitCensus",
    "cross_check",
]

DEFAULT_PRIMES = (3, 5, 7)


class GuardViolation(ArithmeticError):
    """A rational coefficient cannot be reduced mod p (denominator in pZ)."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FpConfig:
    """Prime field selector for the oracle."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")


def compile_poly(poly: Polynomial, p: int) -> Callable:
    """Return an evaluator tuple-of-ints -> int for ``poly`` mod p."""
    terms = []
    for exps, coeff in poly.terms.items():
        den = coeff.denominator % p
        if den == 0:
            raise GuardViolation(
                f"coefficient {coeff} has denominator divisible by {p}"
            )
        c = (coeff.numerator % p) * pow(den, p - 2, p) % p
        if c:
            terms.append((c, exps))

    def run(point) -> int:
        total = 0
        for c, exps in terms:
            v = c
            for x, e in zip(point, exps):
                if e:
                    v = v * pow(x, e, p) % p
            total += v
        return total % p

    return run


def set_pred_mod_p(s: ConstructibleSet, p: int) -> Callable:
    """Membership predicate for the F_p-points of a constructible set."""
    compiled = []
    for piece in s.pieces:
        carrier = [compile_poly(g, p) for g in piece.carrier.generators]
        if piece.excluded is None:
            excluded = None
        else:
            excluded = [compile_poly(g, p) for g in piece.excluded.generators]
        compiled.append((carrier, excluded))

    def member(point) -> bool:
        for carrier, excluded in compiled:
            if any(f(point) for f in carrier):
                continue
            if excluded is not None and not any(f(point) for f in excluded):
                continue
            return True
        return False

    return member


def enumerate_points(p: int, arity: int):
    return itertools.product(range(p), repeat=arity)


@dataclass(frozen=True)
class ImageEnumeration:
    p: int
    source_count: int
    points: tuple  # sorted target tuples actually attained


def enumerate_image(
    f: PolyMap, domain: ConstructibleSet | None, cfg: FpConfig
) -> ImageEnumeration:
    """Exhaustively apply ``f`` to the F_p-points of ``domain``."""
    p = cfg.p
    coords = [compile_poly(c, p) for c in f.coords]
    pred = None if domain is None else set_pred_mod_p(domain, p)
    hit = set()
    n_source = 0
    for pt in enumerate_points(p, f.source.arity):
        if pred is not None and not pred(pt):
            continue
        n_source += 1
        hit.add(tuple(c(pt) for c in coords))
    return ImageEnumeration(p=p, source_count=n_source, points=tuple(sorted(hit)))


@dataclass(frozen=True)
class OrbitCensus:
    p: int
    point_count: int
    orbit_count: int
    sizes: dict  # orbit size -> number of orbits of that size
    fixed_points: tuple  # sorted points whose orbit is a singleton
    group_order: int


def group_elements(spec: GroupActionSpec, p: int) -> tuple:
    """All parameter tuples over F_p satisfying the constraint ideal."""
    checks = [compile_poly(g, p) for g in spec.constraint.generators]
    out = []
    for g in enumerate_points(p, len(spec.params)):
        if all(f(g) == 0 for f in checks):
            out.append(g)
    return tuple(out)


def enumerate_orbits(
    spec: GroupActionSpec,
    cfg: FpConfig,
    domain: ConstructibleSet | None = None,
) -> OrbitCensus:
    """Partition the F_p-points of ``domain`` into orbits.

    Orbits are grown by breadth-first closure, so the element list only
    needs to generate the group.  The domain must be action-stable;
    a point moved outside it raises ValueError.
    """
    p = cfg.p
    elements = group_elements(spec, p)
    coords = [compile_poly(c, p) for c in spec.action]
    pred = None if domain is None else set_pred_mod_p(domain, p)
    points = [
        pt
        for pt in enumerate_points(p, spec.space.arity)
        if pred is None or pred(pt)
    ]
    point_set = set(points)

    seen = set()
    sizes: dict = {}
    orbit_count = 0
    fixed = []
    for start in points:
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for pt in frontier:
                for g in elements:
                    combined = pt + g
                    moved = tuple(c(combined) for c in coords)
                    if moved not in orbit:
                        if moved not in point_set:
                            raise ValueError(
                                f"action moved {pt} outside the domain to {moved}"
                            )
                        orbit.add(moved)
                        nxt.append(moved)
            frontier = nxt
        seen |= orbit
        orbit_count += 1
        size = len(orbit)
        sizes[size] = sizes.get(size, 0) + 1
        if size == 1:
            fixed.append(start)
    return OrbitCensus(
        p=p,
        point_count=len(points),
        orbit_count=orbit_count,
        sizes=dict(sorted(sizes.items())),
        fixed_points=tuple(sorted(fixed)),
        group_order=len(elements),
    )


def _image_check(shadow, cfg: FpConfig) -> CheckResult:
    p = cfg.p
    enum = enumerate_image(shadow.map, shadow.domain, cfg)
    image = set(enum.points)
    pred = set_pred_mod_p(shadow.predicted, p)
    total = 0
    agree = 0
    pred_count = 0
    witness = None
    for q in enumerate_points(p, shadow.map.target.arity):
        total += 1
        enum_member = q in image
        pred_member = pred(q)
        if pred_member:
            pred_count += 1
        if enum_member == pred_member:
            agree += 1
        elif witness is None:
            witness = (q, enum_member, pred_member)
    detail = (
        f"{agree}/{total} points agree; enumerated image has "
        f"{len(image)} points; predicted set has {pred_count}"
    )
    if witness is not None:
        q, e, pr = witness
        detail += (
            f"; first mismatch at {q}: enumerated={'in' if e else 'out'}, "
            f"predicted={'in' if pr else 'out'}"
        )
    return CheckResult(
        id=f"{shadow.id}-p{p}",
        status="pass" if agree == total else "fail",
        kind=KIND_VERIFIED,
        detail=detail,
        claim=shadow.claim,
    )


def _census_check(shadow, cfg: FpConfig) -> CheckResult:
    p = cfg.p
    census = enumerate_orbits(shadow.action, cfg, shadow.domain)
    want_points, want_orbits, want_sizes = shadow.expected(p)
    want_sizes = dict(sorted(want_sizes.items()))
    shape_ok = (
        census.point_count == want_points
        and census.orbit_count == want_orbits
        and census.sizes == want_sizes
    )
    fixed_pred = set_pred_mod_p(shadow.fixed_stratum, p)
    declared_fixed = tuple(
        sorted(pt for pt in census.fixed_points if fixed_pred(pt))
    )
    # the declared stratum must be exactly the enumerated fixed points
    stratum_points = [
        pt
        for pt in enumerate_points(p, shadow.action.space.arity)
        if fixed_pred(pt)
    ]
    domain_pred = (
        None if shadow.domain is None else set_pred_mod_p(shadow.domain, p)
    )
    if domain_pred is not None:
        stratum_points = [pt for pt in stratum_points if domain_pred(pt)]
    fixed_ok = tuple(sorted(stratum_points)) == census.fixed_points
    partition_ok = (
        sum(size * count for size, count in census.sizes.items())
        == census.point_count
    )
    divides_ok = all(
        census.group_order % size == 0 for size in census.sizes
    )
    ok = shape_ok and fixed_ok and partition_ok and divides_ok
    detail = (
        f"{census.point_count} points, {census.orbit_count} orbits, sizes "
        f"{census.sizes}; expected ({want_points}, {want_orbits}, "
        f"{want_sizes}); fixed points match declared stratum: {fixed_ok}; "
        f"sizes sum to the point count: {partition_ok}; every size divides "
        f"the group order {census.group_order}: {divides_ok}"
    )
    return CheckResult(
        id=f"{shadow.id}-p{p}",
        status="pass" if ok else "fail",
        kind=KIND_VERIFIED,
        detail=detail,
        claim=shadow.claim,
    )


def cross_check(name: str, cfg: FpConfig) -> Report:
    """Run the finite-field shadows a scenario declares, at one prime."""
    spec = _scenarios.get_scenario(name)
    if not spec.shadows:
        raise ValueError(f"scenario {name!r} declares no finite-field shadows")
    checks = []
    for shadow in spec.shadows:
        if shadow.primes is not None and cfg.p not in shadow.primes:
            checks.append(
                CheckResult(
                    id=f"{shadow.id}-p{cfg.p}",
                    status="pass",
                    kind="by-representation",
                    detail=(
                        f"shadow declared only for primes {shadow.primes}; "
                        f"skipped at p={cfg.p}"
                    ),
                    claim=shadow.claim,
                )
            )
            continue
        if isinstance(shadow, _scenarios.ImageShadow):
            checks.append(_image_check(shadow, cfg))
        elif isinstance(shadow, _scenarios.CensusShadow):
            checks.append(_census_check(shadow, cfg))
        else:
            raise TypeError(f"unknown shadow type {type(shadow).__name__}")
    return Report(scenario=spec.name, checks=tuple(checks))
