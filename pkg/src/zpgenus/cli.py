"""Command-line interface.

Verbs:

* ``compute``      genus of a weight set mod p, by one route or all of them
* ``cf-check``     Conner-Floyd style vanishing of the low p-series coefficients
* ``ab``           per-point coefficient-route vs cyclotomic-trace values
* ``cpn``          emit the weight set of a linear Z/p action on CP^n
* ``legendre``     elliptic-genus Legendre congruence checks
* ``thm71``        the combined ab/pseries/residual congruence
* ``submanifold``  genus mod p from fixed-submanifold data
* ``selftest``     a quick internal cross-validation battery

Exit codes: 0 success (and all requested checks passed), 1 a computation ran
but a check or cross-route agreement failed, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .cpn import (
    ResidueTuple,
    canonical_residues,
    check_eq45,
    check_eq46,
    cpn_weight_set,
)
from .cyclotomic import (
    ab_trace,
    evaluate_at_theta,
    theta_minimal_polynomial,
    theta_of,
    trace_theta_power,
)
from .engine import (
    ROUTES,
    SubmanifoldData,
    WeightSet,
    ab_coefficient,
    b_series,
    cf_residuals,
    genus_mod_p,
    h_series,
    submanifold_genus,
    thm71_check,
)
from .errors import BadParams, EngineError
from .genus import make_genus, parse_genus_name
from .rings import rational_reduce_mod_p


def _parse_int_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError as exc:
        raise BadParams(f"bad integer list {text!r}") from exc


def _load_weight_set(args) -> WeightSet:
    if args.weights:
        try:
            with open(args.weights, "r", encoding="utf-8") as fh:
                w = WeightSet.from_json(fh.read())
        except OSError as exc:
            raise BadParams(f"cannot read weights file: {exc}") from exc
        if args.p is not None and args.p != w.p:
            raise BadParams(f"--p {args.p} contradicts p = {w.p} in the weights file")
        return w
    if args.residues:
        if args.p is None:
            raise BadParams("--residues needs --p")
        return cpn_weight_set(ResidueTuple(args.p, _parse_int_list(args.residues)))
    raise BadParams("need --weights FILE or --residues LIST")


def _genus_for(args, w: WeightSet, extra_order: int = 0):
    kind, y = parse_genus_name(args.genus)
    order = args.order if args.order is not None else w.n + w.p + 2
    if order < 2:
        order = 2
    return make_genus(kind, order + 1 + extra_order, y), order


def _emit(args, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
        return
    for key, val in _flatten(payload):
        print(f"{key}: {val}")


def _flatten(payload: dict, prefix: str = ""):
    for key, val in payload.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            yield from _flatten(val, f"{name}.")
        elif isinstance(val, list):
            yield name, json.dumps(val)
        else:
            yield name, val


# ---------------------------------------------------------------------------
# Verb handlers; each returns the exit code and prints one report.
# ---------------------------------------------------------------------------


def _run_compute(args) -> int:
    w = _load_weight_set(args)
    g, order = _genus_for(args, w)
    base = {
        "verb": "compute",
        "genus": args.genus,
        "p": w.p,
        "n": w.n,
        "q": w.q,
        "order": order,
    }
    if args.route != "all":
        value = genus_mod_p(g, w, route=args.route, order=order)
        base["route"] = args.route
        base["result"] = str(value)
        _emit(args, base)
        return 0
    results = {}
    values = []
    for route in ROUTES:
        try:
            value = genus_mod_p(g, w, route=route, order=order)
        except EngineError as exc:
            results[route] = f"unavailable ({type(exc).__name__})"
        else:
            results[route] = str(value)
            values.append(str(value))
    agree = len(values) > 0 and all(v == values[0] for v in values)
    base["route"] = "all"
    base["results"] = results
    base["agree"] = agree
    if agree:
        base["result"] = values[0]
    _emit(args, base)
    return 0 if agree else 1


def _run_cf_check(args) -> int:
    w = _load_weight_set(args)
    g, order = _genus_for(args, w)
    residuals = cf_residuals(g, w, order=order)
    slots = []
    all_zero = True
    for m, r in enumerate(residuals):
        if isinstance(r, EngineError):
            slots.append({"m": m, "residual": f"non-integral ({r})"})
            all_zero = False
        else:
            slots.append({"m": m, "residual": str(r)})
            all_zero = all_zero and r.is_zero()
    _emit(
        args,
        {
            "verb": "cf-check",
            "genus": args.genus,
            "p": w.p,
            "n": w.n,
            "q": w.q,
            "residuals": slots,
            "all_zero": all_zero,
        },
    )
    return 0 if all_zero else 1


def _run_ab(args) -> int:
    if args.p is None:
        raise BadParams("ab needs --p")
    if args.residues is None:
        raise BadParams("ab needs --residues with the weight tuple")
    kind, y = parse_genus_name(args.genus)
    weights = _parse_int_list(args.residues)
    payload = {
        "verb": "ab",
        "genus": args.genus,
        "p": args.p,
        "weights": list(weights),
    }
    g = make_genus(kind, max(len(weights), args.p) + 3, y)
    coeff = ab_coefficient(g, args.p, weights)
    trace = ab_trace(kind, args.p, weights, y)
    payload["coefficient_route"] = {
        "exact": str(coeff),
        "mod_p": str(rational_reduce_mod_p(coeff, args.p)),
    }
    payload["trace_route"] = {
        "exact": str(trace),
        "mod_p": str(rational_reduce_mod_p(trace, args.p)),
    }
    agree = rational_reduce_mod_p(coeff, args.p) == rational_reduce_mod_p(trace, args.p)
    payload["agree"] = agree
    _emit(args, payload)
    return 0 if agree else 1


def _run_cpn(args) -> int:
    if args.p is None:
        raise BadParams("cpn needs --p")
    if args.residues is None:
        if args.n is None:
            raise BadParams("cpn needs --residues or --n")
        rt = canonical_residues(args.p, args.n)
    else:
        rt = ResidueTuple(args.p, _parse_int_list(args.residues))
    w = cpn_weight_set(rt)
    doc = w.to_json_dict()
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    print(json.dumps(doc, indent=2))
    return 0


def _run_legendre(args) -> int:
    if args.p is None:
        raise BadParams("legendre needs --p")
    if args.residues is not None:
        report = check_eq45(args.p, residues=_parse_int_list(args.residues), order=args.order)
        ok = report.equal and report.cpn_matches
        _emit(args, {"verb": "legendre", "check": "projective", **report.to_json_dict()})
        return 0 if ok else 1
    if args.n is not None:
        if args.n % 2:
            raise BadParams("the projective check needs even n")
        report = check_eq45(args.p, m=args.n // 2, order=args.order)
        ok = report.equal and report.cpn_matches
        _emit(args, {"verb": "legendre", "check": "projective", **report.to_json_dict()})
        return 0 if ok else 1
    report46 = check_eq46(args.p, order=args.order)
    ok = (
        report46.equal
        and report46.power_system_matches
        and report46.low_coeffs_vanish
        and report46.eps_one_equal
    )
    _emit(args, {"verb": "legendre", "check": "power-system", **report46.to_json_dict()})
    return 0 if ok else 1


def _run_thm71(args) -> int:
    w = _load_weight_set(args)
    kind, y = parse_genus_name(args.genus)
    order = args.order if args.order is not None else w.n + w.p + 2
    g = make_genus(kind, order + 1, y)
    report = thm71_check(g, w, force=args.force)
    _emit(args, {"verb": "thm71", "genus": args.genus, **report.to_json_dict()})
    return 0 if report.equal else 1


def _run_submanifold(args) -> int:
    if not args.weights:
        raise BadParams("submanifold needs --weights FILE with submanifold data")
    try:
        with open(args.weights, "r", encoding="utf-8") as fh:
            data = SubmanifoldData.from_json(fh.read())
    except OSError as exc:
        raise BadParams(f"cannot read weights file: {exc}") from exc
    kind, y = parse_genus_name(args.genus)
    dmax = max((len(c.normal_weights) for c in data.components), default=0)
    order = args.order if args.order is not None else dmax + data.p + 2
    g = make_genus(kind, max(order, 2) + 1, y)
    value = submanifold_genus(g, data)
    _emit(
        args,
        {
            "verb": "submanifold",
            "genus": args.genus,
            "p": data.p,
            "components": len(data.components),
            "result": str(value),
        },
    )
    return 0


def _selftest_checks():
    from .genus import cpn_genus, power_system, power_system_closed

    yield "todd_cp2_p5_routes_agree", lambda: _routes_agree("td", 5, 2, "1")
    yield "euler_cp3_p7_value", lambda: _routes_agree("euler", 7, 3, "4")
    yield "l_genus_cp3_p7_zero", lambda: _routes_agree("L", 7, 3, "0")
    yield "chi2_cp2_p7_value", lambda: _routes_agree(
        "chi_y:2", 7, 2, str(rational_reduce_mod_p(Fraction(1 + 2**3, 3), 7))
    )
    yield "ahat_bseries_matches_traces_p5", lambda: all(
        b_series("a_hat", 5, 6)[s] == trace_theta_power("a_hat", 5, -s)
        for s in range(5)
    )
    yield "ahat_minimal_polynomial_p5", lambda: evaluate_at_theta(
        theta_minimal_polynomial("a_hat", 5), theta_of("a_hat", 5)
    ).is_zero()
    yield "h_todd_p5_is_1_minus_u", lambda: h_series("todd", 5, 6).to_text() == "1 + (-1)*u"
    yield "elliptic_cp2_p5_delta", lambda: str(
        genus_mod_p(
            make_genus("elliptic", 9),
            cpn_weight_set(canonical_residues(5, 2)),
            "pseries",
        )
    ) == "1*delta"
    yield "power_system_closed_matches_generic", lambda: all(
        power_system(make_genus(kind, 8, y), m)
        == power_system_closed(kind, m, 8, y)
        for kind, y in [("todd", None), ("l_genus", None), ("a_hat", None)]
        for m in (2, 3)
    )
    yield "eq45_p5_m1", lambda: check_eq45(5, m=1).equal
    yield "eq46_p5", lambda: check_eq46(5).equal


def _routes_agree(name: str, p: int, n: int, expected: str) -> bool:
    w = cpn_weight_set(canonical_residues(p, n))
    kind, y = parse_genus_name(name)
    g = make_genus(kind, n + p + 3, y)
    vals = [str(genus_mod_p(g, w, route=r)) for r in ROUTES]
    return all(v == expected for v in vals)


def _run_selftest(args) -> int:
    results = []
    all_ok = True
    for name, check in _selftest_checks():
        try:
            ok = bool(check())
        except EngineError as exc:
            ok = False
            results.append({"check": name, "ok": False, "error": str(exc)})
            all_ok = False
            continue
        results.append({"check": name, "ok": ok})
        all_ok = all_ok and ok
    _emit(args, {"verb": "selftest", "checks": results, "all_ok": all_ok})
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# Argument plumbing.
# ---------------------------------------------------------------------------


def _add_common(sub, genus=False, weights=False, route=False):
    sub.add_argument("--p", type=int, default=None, help="the odd prime p")
    sub.add_argument("--residues", type=str, default=None, help="comma-separated integers")
    sub.add_argument("--n", type=int, default=None, help="dimension parameter")
    sub.add_argument("--order", type=int, default=None, help="series truncation override")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    if genus:
        sub.add_argument(
            "--genus",
            required=True,
            help="td, euler, L, chi_y:<rational>, ahat or elliptic",
        )
    if weights:
        sub.add_argument("--weights", type=str, default=None, help="JSON input file")
    if route:
        sub.add_argument("--route", choices=ROUTES + ("all",), default="all")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zpgenus",
        description="Exact genera of Z/p fixed-point data, three ways.",
    )
    parser.add_argument("--version", action="version", version=f"zpgenus {__version__}")
    subs = parser.add_subparsers(dest="verb", required=True)

    sub = subs.add_parser("compute", help="genus of a weight set mod p")
    _add_common(sub, genus=True, weights=True, route=True)
    sub.set_defaults(handler=_run_compute)

    sub = subs.add_parser("cf-check", help="low p-series coefficients must vanish")
    _add_common(sub, genus=True, weights=True)
    sub.set_defaults(handler=_run_cf_check)

    sub = subs.add_parser("ab", help="coefficient route vs trace route, one point")
    _add_common(sub, genus=True)
    sub.set_defaults(handler=_run_ab)

    sub = subs.add_parser("cpn", help="weight set of a linear action on CP^n")
    _add_common(sub)
    sub.add_argument("--emit", type=str, default=None, help="also write the JSON here")
    sub.set_defaults(handler=_run_cpn)

    sub = subs.add_parser("legendre", help="elliptic Legendre congruence checks")
    _add_common(sub)
    sub.set_defaults(handler=_run_legendre)

    sub = subs.add_parser("thm71", help="ab vs pseries + weighted residuals")
    _add_common(sub, genus=True, weights=True)
    sub.add_argument("--force", action="store_true", help="ignore the n <= p-2 guard")
    sub.set_defaults(handler=_run_thm71)

    sub = subs.add_parser("submanifold", help="genus from fixed-submanifold data")
    _add_common(sub, genus=True, weights=True)
    sub.set_defaults(handler=_run_submanifold)

    sub = subs.add_parser("selftest", help="internal cross-validation battery")
    _add_common(sub)
    sub.set_defaults(handler=_run_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except EngineError as exc:
        diagnostic = {"error": type(exc).__name__, "detail": str(exc)}
        if args.format == "json":
            print(json.dumps(diagnostic, indent=2), file=sys.stderr)
        else:
            print(f"error: {diagnostic['error']}", file=sys.stderr)
            print(f"detail: {diagnostic['detail']}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
