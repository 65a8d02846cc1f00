"""Genera of Z/p fixed-point data, computed three independent ways.

A weight set records, for each fixed point of a Z/p action on a stably
complex 2n-manifold, the n rotation weights of the action on the tangent
space (nonzero residues mod p).  The genus of the ambient manifold mod p is
computed by any of three routes, which must agree:

* ``pseries``: sum over fixed points of <(p u/[u]_p) * prod_k u/[u]_{x_k}>_n,
  exact over Q (or Q[delta, eps]), reduced mod p at the end.
* ``ab``: sum over fixed points of ab_coefficient = -<A(u) B(u)>_n with
  A = prod_k u/[u]_{x_k} and B the trace generating series of the kind.
* ``trace``: sum over fixed points of -Tr prod_k factor(zeta^{x_k}) in
  Q(zeta_p), an independent cyclotomic oracle.

Realizable weight sets also satisfy the vanishing of the lower p-series
coefficients (m = 0..n-1), exposed by :func:`cf_residuals`, and the exact
congruence of :func:`thm71_check` ties all of it together.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .cyclotomic import ab_trace
from .errors import (
    BadParams,
    GuardViolation,
    NonIntegralAtP,
    UnsupportedKind,
    ZeroWeight,
)
from .genus import (
    B_SERIES_KINDS,
    KIND_A_HAT,
    KIND_CHI_Y,
    KIND_EULER,
    KIND_L,
    KIND_TODD,
    TRACE_KINDS,
    GenusSpec,
    arcsinh_u_over_2,
    default_order,
    ensure_order,
    make_genus,
    power_system,
    sinh_series,
    sqrt_one_plus_quarter_u2,
)
from .rings import (
    QQ,
    GradedPoly,
    GradedPolyModP,
    ModP,
    Rational,
    poly_reduce_mod_p,
    rational_reduce_mod_p,
    require_odd_prime,
)
from .series import Series

Residue = Union[ModP, GradedPolyModP]

ROUTES = ("pseries", "ab", "trace")


def reduce_value(x, p: int) -> Residue:
    """Reduce an exact route value (Fraction or GradedPoly) mod p."""
    if isinstance(x, GradedPoly):
        return poly_reduce_mod_p(x, p)
    return rational_reduce_mod_p(x, p)


def residue_to_text(r: Residue) -> str:
    return str(r)


def canonical_weight(x: int, p: int) -> int:
    """Reduce a weight into [1, p-1]; weights divisible by p are rejected."""
    if not isinstance(x, int):
        raise BadParams(f"weights must be ints, got {x!r}")
    x %= p
    if x == 0:
        raise ZeroWeight(f"weight ≡ 0 mod p = {p} is not allowed")
    return x


def canonical_weights(weights: Iterable[int], p: int) -> Tuple[int, ...]:
    return tuple(canonical_weight(x, p) for x in weights)


# ---------------------------------------------------------------------------
# Weight data containers and their JSON forms.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightSet:
    """Fixed-point data: q points, each carrying n weights in [1, p-1]."""

    p: int
    n: int
    points: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        require_odd_prime(self.p)
        if not isinstance(self.n, int) or self.n < 0:
            raise BadParams(f"n must be an int >= 0, got {self.n!r}")
        pts = []
        for pt in self.points:
            pt = canonical_weights(pt, self.p)
            if len(pt) != self.n:
                raise BadParams(
                    f"each fixed point needs exactly n = {self.n} weights, got {len(pt)}"
                )
            pts.append(pt)
        object.__setattr__(self, "points", tuple(pts))

    @property
    def q(self) -> int:
        return len(self.points)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "fixed_points": [list(pt) for pt in self.points],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "WeightSet":
        try:
            p = d["p"]
            n = d["n"]
            pts = d["fixed_points"]
        except (KeyError, TypeError) as exc:
            raise BadParams(f"weight-set JSON needs keys p, n, fixed_points: {exc}") from exc
        if not isinstance(pts, list) or not all(isinstance(pt, list) for pt in pts):
            raise BadParams("fixed_points must be a list of lists of ints")
        return cls(p=p, n=n, points=tuple(tuple(pt) for pt in pts))

    @classmethod
    def from_json(cls, text: str) -> "WeightSet":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise BadParams(f"bad JSON: {exc}") from exc
        return cls.from_json_dict(d)


@dataclass(frozen=True)
class SubmanifoldComponent:
    normal_weights: Tuple[int, ...]
    genus_value: Fraction


@dataclass(frozen=True)
class SubmanifoldData:
    """Fixed submanifold data: per component, normal weights and the genus value."""

    p: int
    components: Tuple[SubmanifoldComponent, ...]

    def __post_init__(self):
        require_odd_prime(self.p)
        comps = []
        for c in self.components:
            comps.append(
                SubmanifoldComponent(
                    canonical_weights(c.normal_weights, self.p),
                    Fraction(c.genus_value),
                )
            )
        object.__setattr__(self, "components", tuple(comps))

    @classmethod
    def from_json_dict(cls, d: dict) -> "SubmanifoldData":
        try:
            p = d["p"]
            comps = d["components"]
        except (KeyError, TypeError) as exc:
            raise BadParams(f"submanifold JSON needs keys p, components: {exc}") from exc
        if not isinstance(comps, list):
            raise BadParams("components must be a list")
        built = []
        for c in comps:
            try:
                nw = c["normal_weights"]
                gv = c["genus_value"]
            except (KeyError, TypeError) as exc:
                raise BadParams(
                    f"each component needs normal_weights and genus_value: {exc}"
                ) from exc
            if isinstance(gv, str):
                try:
                    gv = Fraction(gv)
                except (ValueError, ZeroDivisionError) as exc:
                    raise BadParams(f"bad genus_value {gv!r}") from exc
            elif isinstance(gv, int):
                gv = Fraction(gv)
            else:
                raise BadParams(f"genus_value must be an int or a rational string, got {gv!r}")
            built.append(SubmanifoldComponent(tuple(nw), gv))
        return cls(p=p, components=tuple(built))

    @classmethod
    def from_json(cls, text: str) -> "SubmanifoldData":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise BadParams(f"bad JSON: {exc}") from exc
        return cls.from_json_dict(d)


# ---------------------------------------------------------------------------
# The series building blocks shared by the routes.
# ---------------------------------------------------------------------------


def a_series(g: GenusSpec, weights: Sequence[int], order: int) -> Series:
    """A(u) = prod_k u/[u]_{x_k} at the given order; empty product is 1.

    Weights are used literally as power-system indices (positive integers);
    congruent representatives give mod-p congruent final answers, which the
    tests pin against the trace route.
    """
    g = ensure_order(g, order + 1)
    acc = Series.one(g.ring, order)
    for x in weights:
        if not isinstance(x, int) or x < 1:
            raise BadParams(f"a_series weights must be ints >= 1, got {x!r}")
        ps = power_system(g, x).truncate(order + 1)
        acc = acc * ps.shift_down(1).invert()
    return acc


def p_power_factor(g: GenusSpec, p: int, order: int) -> Series:
    """p*u/[u]_p at the given order; its constant term is 1."""
    require_odd_prime(p)
    g = ensure_order(g, order + 1)
    ps = power_system(g, p).truncate(order + 1)
    return ps.shift_down(1).invert().scale(p)


_B_CACHE: dict = {}


def b_series(
    kind: str, p: int, order: int, y: Union[Rational, int, None] = None
) -> Series:
    """The trace generating series B(u) = sum_s Tr(theta^{-s}) u^s, over Q.

    Closed forms: for the chi_y family (todd y = 0, l_genus y = 1)
    B = p((1+yu)^{p-1} - (1-u)^{p-1}) / ((1+yu)^p - (1-u)^p); for a_hat
    B = p sinh((p-1)t) / (sqrt(1+u^2/4) sinh(pt)) with t = arcsinh(u/2).
    Euler has no B-series (its trace contribution is the constant -(p-1)),
    and elliptic/custom have no theta in Q(zeta_p) at all.
    """
    require_odd_prime(p)
    if kind not in B_SERIES_KINDS:
        raise UnsupportedKind(f"no B-series for genus kind {kind!r}")
    if kind == KIND_CHI_Y:
        if y is None:
            raise BadParams("chi_y needs the parameter y")
        y = Fraction(y)
        if y.denominator % p == 0:
            raise BadParams(f"chi_y parameter {y} is not p-integral at p = {p}")
        if (1 + y).numerator % p == 0:
            raise BadParams(f"chi_y parameter {y} has 1 + y ≡ 0 mod {p}")
    elif y is not None:
        raise BadParams(f"kind {kind!r} does not take a parameter y")

    key = (kind, y, p, order)
    cached = _B_CACHE.get(key)
    if cached is not None:
        return cached

    work = order + 1
    if kind == KIND_A_HAT:
        t = arcsinh_u_over_2(work)
        sh = sinh_series(QQ, work)
        num = sh.compose(t.scale(p - 1)).scale(p)
        den = sqrt_one_plus_quarter_u2(work) * sh.compose(t.scale(p))
    else:
        y_eff = Fraction(0) if kind == KIND_TODD else Fraction(1) if kind == KIND_L else y
        one = Series.one(QQ, work)
        u = Series.identity(QQ, work)
        plus = one + u.scale(y_eff)
        minus = one - u
        num = (plus ** (p - 1) - minus ** (p - 1)).scale(p)
        den = plus**p - minus**p
    out = num.divide(den)
    _B_CACHE[key] = out
    return out


def ab_coefficient(g: GenusSpec, p: int, weights: Sequence[int]) -> Fraction:
    """Per-point coefficient-route value -<A(u) B(u)>_d, d = len(weights).

    Exact over Q; its residue mod p equals the trace-route value.  For euler
    the value is the constant -(p-1) regardless of the weights.
    """
    require_odd_prime(p)
    if g.kind not in TRACE_KINDS:
        raise UnsupportedKind(f"no coefficient route for genus kind {g.kind!r}")
    weights = canonical_weights(weights, p)
    if g.kind == KIND_EULER:
        return Fraction(-(p - 1))
    d = len(weights)
    order = default_order(d, p)
    a = a_series(g, weights, order)
    b = b_series(g.kind, p, order, g.y)
    return -(a * b)[d]


def p_series_term(g: GenusSpec, p: int, weights: Sequence[int], m: int):
    """<(p u/[u]_p) prod_k u/[u]_{x_k}>_m, exact in the coefficient ring."""
    require_odd_prime(p)
    if not isinstance(m, int) or m < 0:
        raise BadParams(f"coefficient index must be an int >= 0, got {m!r}")
    g = ensure_order(g, m + 1)
    prod = p_power_factor(g, p, m) * a_series(g, weights, m)
    return prod[m]


# ---------------------------------------------------------------------------
# The three routes and the Conner-Floyd residuals.
# ---------------------------------------------------------------------------


def _pseries_point_products(g: GenusSpec, w: WeightSet, order: int):
    """The full per-point series (p u/[u]_p) A_j(u), one per fixed point."""
    g = ensure_order(g, order + 1)
    pf = p_power_factor(g, w.p, order)
    return [pf * a_series(g, pt, order) for pt in w.points]


def _ring_zero(g: GenusSpec):
    return g.ring.zero


def genus_mod_p(
    g: GenusSpec, w: WeightSet, route: str = "pseries", order: Optional[int] = None
) -> Residue:
    """The genus of the ambient manifold mod p, by the chosen route.

    The exact per-point values are summed over Q (or Q[delta, eps]) and only
    the total is reduced; a non-p-integral total raises NonIntegralAtP, which
    for the pseries route flags non-realizable input data.
    """
    if route not in ROUTES:
        raise BadParams(f"route must be one of {ROUTES}, got {route!r}")
    if route == "pseries":
        work = order if order is not None else w.n + w.p + 2
        total = _ring_zero(g)
        for prod in _pseries_point_products(g, w, work):
            total = total + prod[w.n]
        return reduce_value(total, w.p)
    if route == "ab":
        total = Fraction(0)
        for pt in w.points:
            total += ab_coefficient(g, w.p, pt)
        return rational_reduce_mod_p(total, w.p)
    # trace route
    total = Fraction(0)
    for pt in w.points:
        total += ab_trace(g.kind, w.p, pt, g.y)
    return rational_reduce_mod_p(total, w.p)


def cf_residuals(
    g: GenusSpec, w: WeightSet, order: Optional[int] = None
) -> list:
    """Summed p-series coefficients at m = 0..n-1, reduced mod p per slot.

    For weight data coming from an actual Z/p action these all vanish.  A
    slot whose exact sum is not p-integral carries the NonIntegralAtP
    exception instance instead of a residue, so one bad slot does not hide
    the others.
    """
    if w.n < 1:
        raise BadParams("cf_residuals needs n >= 1")
    work = order if order is not None else w.n + w.p + 2
    prods = _pseries_point_products(g, w, work)
    out = []
    for m in range(w.n):
        total = _ring_zero(g)
        for prod in prods:
            total = total + prod[m]
        try:
            out.append(reduce_value(total, w.p))
        except NonIntegralAtP as exc:
            out.append(exc)
    return out


# ---------------------------------------------------------------------------
# The h-series and the combined congruence check.
# ---------------------------------------------------------------------------

_H_CACHE: dict = {}


def h_series(
    kind: str, p: int, order: int, y: Union[Rational, int, None] = None
) -> Series:
    """h(u) = p([u]_p - u)/(B(u)[u]_p); h(0) = 1 and h is p-integral.

    Known closed forms: 1-u (todd), 1-u^2 (l_genus), (1-u)(1+yu) (chi_y),
    and for a_hat cosh(((p+1)/2)t) cosh(t)/cosh(((p-1)/2)t), t = arcsinh(u/2).
    """
    require_odd_prime(p)
    if kind not in B_SERIES_KINDS:
        raise UnsupportedKind(f"no h-series for genus kind {kind!r}")
    yk = Fraction(y) if y is not None else None
    key = (kind, yk, p, order)
    cached = _H_CACHE.get(key)
    if cached is not None:
        return cached

    work = order + 1
    g = make_genus(kind, work + 1, yk)
    ps_p = power_system(g, p).truncate(work)
    u = Series.identity(QQ, work)
    num = (ps_p - u).scale(p)
    den = b_series(kind, p, work, yk).truncate(work) * ps_p
    out = num.divide(den)
    _H_CACHE[key] = out
    return out


@dataclass(frozen=True)
class Thm71Report:
    """Exact data behind the congruence: sum_j ab ≡ pseries_n + sum H*cf (mod p)."""

    p: int
    n: int
    q: int
    ab_sum: Fraction
    pseries_n: Fraction
    cf_sums: Tuple[Fraction, ...]
    h_inverse_coeffs: Tuple[Fraction, ...]
    lhs: ModP
    rhs: ModP

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "q": self.q,
            "ab_sum": str(self.ab_sum),
            "pseries_n": str(self.pseries_n),
            "cf_sums": [str(c) for c in self.cf_sums],
            "h_inverse_coeffs": [str(c) for c in self.h_inverse_coeffs],
            "lhs_mod_p": self.lhs.value,
            "rhs_mod_p": self.rhs.value,
            "equal": self.equal,
        }


def thm71_check(g: GenusSpec, w: WeightSet, force: bool = False) -> Thm71Report:
    """Check sum_j ab_coefficient ≡ pseries_n + sum_{m<n} H_{n-m} cf_m (mod p).

    H_i are the coefficients of 1/h(u).  The congruence is guaranteed for
    n <= p-2; beyond that a GuardViolation is raised unless force=True, in
    which case the reduction itself may legitimately fail NonIntegralAtP.
    """
    if g.kind not in B_SERIES_KINDS:
        raise UnsupportedKind(f"thm71_check needs a B-series kind, got {g.kind!r}")
    n, p, q = w.n, w.p, w.q
    if n < 1:
        raise BadParams("thm71_check needs n >= 1")
    if n > p - 2 and not force:
        raise GuardViolation(
            f"n = {n} exceeds p-2 = {p - 2}; pass force=True to check anyway"
        )

    ab_sum = Fraction(0)
    for pt in w.points:
        ab_sum += ab_coefficient(g, p, pt)

    prods = _pseries_point_products(g, w, n + p + 2)
    sums = []
    for m in range(n + 1):
        total = Fraction(0)
        for prod in prods:
            total += prod[m]
        sums.append(total)

    h_inv = h_series(g.kind, p, n, g.y).invert()
    rhs_exact = sums[n]
    for m in range(n):
        rhs_exact += h_inv[n - m] * sums[m]

    lhs = rational_reduce_mod_p(ab_sum, p)
    rhs = rational_reduce_mod_p(rhs_exact, p)
    return Thm71Report(
        p=p,
        n=n,
        q=q,
        ab_sum=ab_sum,
        pseries_n=sums[n],
        cf_sums=tuple(sums[:n]),
        h_inverse_coeffs=tuple(h_inv[k] for k in range(n + 1)),
        lhs=lhs,
        rhs=rhs,
    )


# ---------------------------------------------------------------------------
# Genus from fixed submanifold data.
# ---------------------------------------------------------------------------


def submanifold_genus(g: GenusSpec, data: SubmanifoldData) -> Residue:
    """phi(M) ≡ sum_nu ab_coefficient(normal weights of nu) * phi(M_nu) (mod p).

    Isolated fixed points have n normal weights and genus value 1, recovering
    the ab route; a trivial action (one component, no normal weights, value
    phi(M)) returns phi(M) mod p since ab(empty) = -(p-1) ≡ 1.
    """
    if g.kind not in TRACE_KINDS:
        raise UnsupportedKind(
            f"submanifold reduction needs the coefficient route; kind {g.kind!r} has none"
        )
    total = Fraction(0)
    for comp in data.components:
        total += ab_coefficient(g, data.p, comp.normal_weights) * comp.genus_value
    return rational_reduce_mod_p(total, data.p)
