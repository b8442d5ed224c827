"""Command-line interface.

Verbs operate on rings declared inline (``--ring x,y,z``) with polynomials
in the grammar of :mod:`.parsing`:

* ``gb`` / ``eliminate`` / ``saturate`` print reduced Groebner bases;
* ``member`` / ``radmember`` answer ideal and radical membership;
* ``image`` / ``fiber`` handle polynomial maps between affine spaces;
* ``orbit`` computes orbit closures of built-in or custom group actions;
* ``verify`` / ``oracle`` / ``catalog`` drive the bundled scenarios.

Exit codes: 0 for success (or a true/pass answer), 1 for a false/fail
answer, 2 for input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import signal
import sys
from fractions import Fraction

from .polyring import GREVLEX, LEX, RingCtx, RingMismatchError, extend_ring, format_poly
from .groebner import Ideal, eliminate, groebner_basis, ideal_member, radical_member, saturate
from .geometry import ConstructibleSet, locally_closed, vanishing, whole_space
from .morphism import PolyMap, image_closure, point_in_image
from .action import GroupActionSpec, orbit_closure, same_orbit
from .parsing import ParseError, parse_point, parse_poly, parse_polys
from .report import Report, merge_reports
from .scenarios import get_scenario, run_scenario, scenario_catalog, scenario_names

__all__ = ["main"]

PRIMES_ENV = "DCOSET_ORACLE_PRIMES"

_CANONICAL = ("background", "example1", "example2", "example3")


class CliError(Exception):
    """Bad command-line input; maps to exit code 2."""


def _ring_from(names_arg: str, order_name: str) -> RingCtx:
    names = tuple(n.strip() for n in names_arg.split(",") if n.strip())
    if not names:
        raise CliError("--ring needs at least one variable name")
    order = {"lex": LEX, "grevlex": GREVLEX}[order_name]
    try:
        return RingCtx(names, order)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _print_basis(gens) -> None:
    if not gens:
        print("0")
        return
    for g in gens:
        print(format_poly(g))


def _domain(ring: RingCtx, carrier_arg, excluded_arg) -> ConstructibleSet:
    carrier = Ideal(ring, list(parse_polys(carrier_arg, ring))) if carrier_arg else Ideal(ring, [])
    if excluded_arg:
        return locally_closed(carrier, Ideal(ring, list(parse_polys(excluded_arg, ring))))
    if carrier.generators:
        return vanishing(carrier)
    return whole_space(ring)


# built-in actions for the orbit verb

def _action_shear_mat2() -> GroupActionSpec:
    M = RingCtx(("a11", "a12", "a21", "a22"))
    C = extend_ring(M, ("lam",))
    a11, a12, a21, a22, lam = C.gens()
    return GroupActionSpec(
        space=M,
        params=("lam",),
        constraint=Ideal(RingCtx(("lam",)), []),
        action=(a11 + lam * a21, a12 + lam * a22, a21, a22),
        identity={"lam": 0},
    )


def _action_scale_mat2() -> GroupActionSpec:
    M = RingCtx(("m11", "m12", "m21", "m22"))
    C = extend_ring(M, ("s", "u"))
    P = RingCtx(("s", "u"))
    s = C.gen("s")
    return GroupActionSpec(
        space=M,
        params=("s", "u"),
        constraint=Ideal(P, [P.gen("s") * P.gen("u") - 1]),
        action=tuple(s * C.gen(v) for v in M.vars),
        identity={"s": 1, "u": 1},
    )


def _action_isotropic_shear() -> GroupActionSpec:
    X = RingCtx(("x1", "x2", "x3", "x4"))
    C = extend_ring(X, ("a",))
    x1, x2, x3, x4, a = C.gens()
    return GroupActionSpec(
        space=X,
        params=("a",),
        constraint=Ideal(RingCtx(("a",)), []),
        action=(x1 + a * x2, x2, x3 - a * x4, x4),
        identity={"a": 0},
    )


_BUILTIN_ACTIONS = {
    "shear-mat2": _action_shear_mat2,
    "scale-mat2": _action_scale_mat2,
    "isotropic-shear": _action_isotropic_shear,
}


def _custom_action(args) -> GroupActionSpec:
    if not (args.space and args.params and args.act and args.identity):
        raise CliError(
            "custom actions need --space, --params, --act and --identity "
            "(and optionally --constraint)"
        )
    space = _ring_from(args.space, "grevlex")
    params = tuple(n.strip() for n in args.params.split(",") if n.strip())
    if not params:
        raise CliError("--params needs at least one name")
    combined = extend_ring(space, params)
    action = parse_polys(args.act, combined)
    if len(action) != space.arity:
        raise CliError(
            f"--act must give {space.arity} polynomials, got {len(action)}"
        )
    param_ring = RingCtx(params)
    constraint = (
        Ideal(param_ring, list(parse_polys(args.constraint, param_ring)))
        if args.constraint
        else Ideal(param_ring, [])
    )
    ident_vals = args.identity.split(",")
    if len(ident_vals) != len(params):
        raise CliError(f"--identity must give {len(params)} values")
    identity = {name: Fraction(v.strip()) for name, v in zip(params, ident_vals)}
    try:
        return GroupActionSpec(
            space=space,
            params=params,
            constraint=constraint,
            action=action,
            identity=identity,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _resolve_action(args) -> GroupActionSpec:
    if args.action:
        try:
            return _BUILTIN_ACTIONS[args.action]()
        except KeyError:
            known = ", ".join(_BUILTIN_ACTIONS)
            raise CliError(f"unknown action {args.action!r}; built-ins: {known}") from None
    return _custom_action(args)


def _oracle_primes(args) -> tuple:
    if args.prime is not None:
        return (args.prime,)
    if args.primes:
        raw = args.primes
    else:
        raw = os.environ.get(PRIMES_ENV, "")
    if raw:
        try:
            return tuple(int(tok) for tok in raw.split(",") if tok.strip())
        except ValueError as exc:
            raise CliError(f"bad prime list {raw!r}: {exc}") from None
    from .fforacle import DEFAULT_PRIMES

    return DEFAULT_PRIMES


def _cmd_gb(args) -> int:
    ring = _ring_from(args.ring, args.order)
    ideal = Ideal(ring, list(parse_polys(args.ideal, ring)))
    _print_basis(groebner_basis(ideal))
    return 0


def _cmd_eliminate(args) -> int:
    ring = _ring_from(args.ring, args.order)
    ideal = Ideal(ring, list(parse_polys(args.ideal, ring)))
    drop = {n.strip() for n in args.drop.split(",") if n.strip()}
    for name in drop:
        if not ring.has_var(name):
            raise CliError(f"--drop names unknown variable {name!r}")
    if drop >= set(ring.vars):
        raise CliError("--drop would eliminate every variable")
    result = eliminate(ideal, drop)
    _print_basis(groebner_basis(result))
    return 0


def _cmd_member(args) -> int:
    ring = _ring_from(args.ring, args.order)
    ideal = Ideal(ring, list(parse_polys(args.ideal, ring)))
    poly = parse_poly(args.poly, ring)
    inside = ideal_member(poly, ideal)
    print("true" if inside else "false")
    return 0 if inside else 1


def _cmd_radmember(args) -> int:
    ring = _ring_from(args.ring, args.order)
    ideal = Ideal(ring, list(parse_polys(args.ideal, ring)))
    poly = parse_poly(args.poly, ring)
    inside = radical_member(poly, ideal)
    print("true" if inside else "false")
    return 0 if inside else 1


def _cmd_saturate(args) -> int:
    ring = _ring_from(args.ring, args.order)
    ideal = Ideal(ring, list(parse_polys(args.ideal, ring)))
    by = parse_poly(args.by, ring)
    try:
        result = saturate(ideal, by)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _print_basis(groebner_basis(result))
    return 0


def _map_from(args):
    source = _ring_from(args.ring, args.order)
    target = _ring_from(args.target, args.order)
    coords = parse_polys(args.map, source)
    if len(coords) != target.arity:
        raise CliError(
            f"--map must give {target.arity} polynomials, got {len(coords)}"
        )
    return PolyMap(source, target, coords), _domain(source, args.carrier, args.excluded)


def _cmd_image(args) -> int:
    f, domain = _map_from(args)
    closed = image_closure(f, domain)
    _print_basis(groebner_basis(closed.ideal))
    return 0


def _cmd_fiber(args) -> int:
    f, domain = _map_from(args)
    point = parse_point(args.point, f.target.arity)
    hit = point_in_image(f, domain, point)
    print("nonempty" if hit else "empty")
    return 0 if hit else 1


def _cmd_orbit(args) -> int:
    spec = _resolve_action(args)
    point = parse_point(args.point, spec.space.arity)
    if args.same_as:
        other = parse_point(args.same_as, spec.space.arity)
        same = same_orbit(spec, point, other)
        print("same-orbit" if same else "different-orbit")
        return 0 if same else 1
    closed = orbit_closure(spec, point)
    _print_basis(groebner_basis(closed.ideal))
    return 0


def _cmd_verify(args) -> int:
    if args.all:
        names = _CANONICAL
    elif args.scenario:
        names = (args.scenario,)
    else:
        raise CliError("verify needs a scenario name or --all")
    reports = []
    for name in names:
        try:
            reports.append(run_scenario(name))
        except ValueError as exc:
            raise CliError(str(exc)) from None
    if args.json:
        if len(reports) == 1:
            print(reports[0].to_json())
        else:
            print(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for i, rep in enumerate(reports):
            if i:
                print()
            print(rep.to_text())
        if len(reports) > 1:
            overall = "pass" if all(r.verdict == "pass" for r in reports) else "fail"
            print(f"\noverall: {overall}")
    return 0 if all(r.verdict == "pass" for r in reports) else 1


def _cmd_oracle(args) -> int:
    from .fforacle import FpConfig, GuardViolation, cross_check

    primes = _oracle_primes(args)
    reports = []
    for p in primes:
        try:
            cfg = FpConfig(p)
            reports.append(cross_check(args.scenario, cfg))
        except (ValueError, GuardViolation) as exc:
            raise CliError(str(exc)) from None
    merged = (
        reports[0]
        if len(reports) == 1
        else merge_reports(reports[0].scenario, reports)
    )
    print(merged.to_json() if args.json else merged.to_text())
    return 0 if merged.verdict == "pass" else 1


def _cmd_catalog(args) -> int:
    entries = scenario_catalog()
    if args.json:
        payload = [
            {
                "name": name,
                "summary": summary,
                "checks": [
                    {"id": cid, "kind": kind, "claim": claim}
                    for cid, kind, claim in checks
                ],
                "negative_control": negative,
                "targeted_check": targeted,
            }
            for name, summary, checks, negative, targeted in entries
        ]
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    for name, summary, checks, negative, targeted in entries:
        print(f"{name}: {summary}")
        for cid, kind, claim in checks:
            print(f"  [{kind}] {cid}: {claim}")
        if negative:
            print(f"  negative control; must fail exactly: {targeted}")
        print()
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcoset",
        description="Exact constructible-quotient toolkit: Groebner bases, "
        "constructible sets, group actions, and scenario verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_opts(p, ideal=True):
        p.add_argument("--ring", required=True, help="comma-separated variable names")
        p.add_argument("--order", choices=("lex", "grevlex"), default="grevlex")
        if ideal:
            p.add_argument("--ideal", required=True, help="comma-separated generators")

    p = sub.add_parser("gb", help="reduced Groebner basis of an ideal")
    ring_opts(p)
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("eliminate", help="eliminate variables from an ideal")
    ring_opts(p)
    p.add_argument("--drop", required=True, help="comma-separated variables to eliminate")
    p.set_defaults(func=_cmd_eliminate)

    p = sub.add_parser("member", help="ideal membership test")
    ring_opts(p)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("radmember", help="radical membership test")
    ring_opts(p)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=_cmd_radmember)

    p = sub.add_parser("saturate", help="saturation of an ideal by a polynomial")
    ring_opts(p)
    p.add_argument("--by", required=True)
    p.set_defaults(func=_cmd_saturate)

    def map_opts(p):
        p.add_argument("--ring", required=True, help="source variables")
        p.add_argument("--order", choices=("lex", "grevlex"), default="grevlex")
        p.add_argument("--target", required=True, help="target variables")
        p.add_argument("--map", required=True, help="comma-separated coordinate polynomials")
        p.add_argument("--carrier", help="closed condition cutting out the domain")
        p.add_argument("--excluded", help="closed condition removed from the domain")

    p = sub.add_parser("image", help="closure of the image of a polynomial map")
    map_opts(p)
    p.set_defaults(func=_cmd_image)

    p = sub.add_parser("fiber", help="is a target point in the image?")
    map_opts(p)
    p.add_argument("--point", required=True, help="comma-separated coordinates")
    p.set_defaults(func=_cmd_fiber)

    p = sub.add_parser("orbit", help="orbit closure under a group action")
    p.add_argument("--action", help=f"built-in action: {', '.join(_BUILTIN_ACTIONS)}")
    p.add_argument("--space", help="custom action: space variables")
    p.add_argument("--params", help="custom action: group parameters")
    p.add_argument("--act", help="custom action: moved coordinates (in space+params)")
    p.add_argument("--constraint", help="custom action: group relations (params only)")
    p.add_argument("--identity", help="custom action: identity parameter values")
    p.add_argument("--point", required=True)
    p.add_argument("--same-as", dest="same_as", help="second point: same orbit?")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("verify", help="run a scenario's checks")
    p.add_argument("scenario", nargs="?", help=f"one of: {', '.join(scenario_names())}")
    p.add_argument("--all", action="store_true", help="run every canonical scenario")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="finite-field cross-check of a scenario")
    p.add_argument("scenario")
    p.add_argument("--prime", type=int, help="single prime")
    p.add_argument("--primes", help="comma-separated primes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("catalog", help="list scenarios and their checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ParseError, RingMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _entry() -> None:
    # Die quietly when stdout is a pipe that closes early (e.g. `| head`).
    if hasattr(signal, "SIGPIPE"):
        signal.signal(signal.SIGPIPE, signal.SIG_DFL)
    sys.exit(main())


if __name__ == "__main__":
    _entry()
