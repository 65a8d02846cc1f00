"""Projective-space laboratory: linear Z/p actions on CP^n and the
Legendre-polynomial congruences of the elliptic genus.

A linear Z/p action on CP^n is given by n+1 residues y_0..y_n, distinct
mod p; its fixed points are the n+1 coordinate lines, and the fixed point
number j carries the tangent weights (y_i - y_j) mod p, i != j.  These
weight sets feed the engine and are also where closed-form expected values
live: the genus of CP^n is <g'(u)>_n, and for the elliptic genus the
mod-p values are homogenized Legendre polynomials:

* the full p-series value on CP^{2m} (residues arbitrary) is congruent to
  the homogenization of P_m(t) with deg t = 2 filled by eps = (degree 4);
* the coefficient of u^p in [u]_p is congruent to the homogenization of
  P_{(p-1)/2}, equivalently <p^2 u^p / (u [u]_2 ... [u]_p)>_{p-1} = p X
  with X the (p-1)-st p-series coefficient of the point with weights
  (1, 2, ..., p-1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .engine import WeightSet, genus_mod_p, p_series_term, reduce_value
from .errors import BadParams, DuplicateResidues
from .genus import (
    KIND_ELLIPTIC,
    GenusSpec,
    cpn_genus,
    ensure_order,
    make_genus,
    power_system,
)
from .rings import (
    DE,
    GradedPoly,
    GradedPolyModP,
    poly_reduce_mod_p,
    require_odd_prime,
)
from .series import Series, binomial_power


@dataclass(frozen=True)
class ResidueTuple:
    """Residues y_0..y_n defining a linear Z/p action on CP^n."""

    p: int
    residues: Tuple[int, ...]

    def __post_init__(self):
        require_odd_prime(self.p)
        res = tuple(int(y) for y in self.residues)
        if not res:
            raise BadParams("need at least one residue")
        seen = set()
        for y in res:
            r = y % self.p
            if r in seen:
                raise DuplicateResidues(
                    f"residues must be distinct mod {self.p}; {y} repeats"
                )
            seen.add(r)
        object.__setattr__(self, "residues", res)

    @property
    def n(self) -> int:
        return len(self.residues) - 1


def cpn_weight_set(rt: ResidueTuple) -> WeightSet:
    """The fixed-point weight set of the linear action: point j gets
    weights (y_i - y_j) mod p for i != j."""
    p = rt.p
    points = []
    for j, yj in enumerate(rt.residues):
        points.append(
            tuple((yi - yj) % p for i, yi in enumerate(rt.residues) if i != j)
        )
    return WeightSet(p=p, n=rt.n, points=tuple(points))


def canonical_residues(p: int, n: int) -> ResidueTuple:
    """The standard action with residues (0, 1, ..., n); needs n < p."""
    require_odd_prime(p)
    if not isinstance(n, int) or n < 0:
        raise BadParams(f"n must be an int >= 0, got {n!r}")
    if n >= p:
        raise BadParams(f"CP^{n} admits no effective linear Z/{p} action: n >= p")
    return ResidueTuple(p, tuple(range(n + 1)))


# ---------------------------------------------------------------------------
# Legendre polynomials, exact, via the generating function
# (1 - 2tu + u^2)^{-1/2} = sum_m P_m(t) u^m.
# ---------------------------------------------------------------------------


def legendre_coeffs(m: int) -> Tuple[Fraction, ...]:
    """Coefficients of P_m(t), low degree first, exact over Q."""
    if not isinstance(m, int) or m < 0:
        raise BadParams(f"Legendre index must be an int >= 0, got {m!r}")
    # expand over Q[delta, eps] with delta standing in for t
    w = Series(
        DE,
        [GradedPoly.zero(), GradedPoly.delta() * Fraction(-2), GradedPoly.one()],
        max(m, 1),
    )
    gen = binomial_power(w, Fraction(-1, 2))
    poly = gen[m]
    coeffs = [Fraction(0)] * (m + 1)
    for (a, b), c in poly.terms.items():
        if b != 0:
            raise BadParams("unexpected eps term in a Legendre expansion")
        coeffs[a] = c
    return tuple(coeffs)


def legendre_value(m: int, t: Fraction) -> Fraction:
    t = Fraction(t)
    return sum((c * t**a for a, c in enumerate(legendre_coeffs(m))), Fraction(0))


def homogenized_legendre(m: int) -> GradedPoly:
    """P_m(t) with t^a replaced by delta^a eps^{(m-a)/2}: weighted degree 2m.

    P_m has the parity of m, so m - a is always even on nonzero terms.
    """
    terms = {}
    for a, c in enumerate(legendre_coeffs(m)):
        if not c:
            continue
        if (m - a) % 2:
            raise BadParams("Legendre parity violated; cannot homogenize")
        terms[(a, (m - a) // 2)] = c
    return GradedPoly(terms)


# ---------------------------------------------------------------------------
# The two elliptic-genus congruence checks.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Eq45Report:
    """Elliptic genus of CP^{2m} mod p vs the homogenized Legendre polynomial."""

    p: int
    m: int
    residues: Tuple[int, ...]
    pseries_value: GradedPolyModP
    legendre_value: GradedPolyModP
    cpn_value: GradedPolyModP

    @property
    def equal(self) -> bool:
        return self.pseries_value == self.legendre_value

    @property
    def cpn_matches(self) -> bool:
        return self.pseries_value == self.cpn_value

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "residues": list(self.residues),
            "pseries_value": str(self.pseries_value),
            "legendre_value": str(self.legendre_value),
            "cpn_value": str(self.cpn_value),
            "equal": self.equal,
            "cpn_matches": self.cpn_matches,
        }


def check_eq45(
    p: int,
    residues: Optional[Sequence[int]] = None,
    m: Optional[int] = None,
    order: Optional[int] = None,
) -> Eq45Report:
    """Compare the elliptic p-series value on CP^{2m} with homogenized P_m.

    Give either explicit residues (2m+1 of them) or m (canonical residues
    0..2m are used).  The genus value on CP^{2m} computed from the logarithm
    is carried along as a cross-check.
    """
    require_odd_prime(p)
    if residues is None:
        if m is None:
            raise BadParams("check_eq45 needs residues or m")
        rt = canonical_residues(p, 2 * m)
    else:
        rt = ResidueTuple(p, tuple(residues))
        if rt.n % 2:
            raise BadParams(f"check_eq45 needs even n, got n = {rt.n}")
        if m is not None and 2 * m != rt.n:
            raise BadParams(f"m = {m} contradicts n = {rt.n}")
        m = rt.n // 2
    n = 2 * m
    w = cpn_weight_set(rt)
    g = make_genus(KIND_ELLIPTIC, order if order is not None else n + p + 2)
    lhs = genus_mod_p(g, w, route="pseries", order=g.order - 1)
    rhs = poly_reduce_mod_p(homogenized_legendre(m), p)
    cpn_val = reduce_value(cpn_genus(g, n), p)
    return Eq45Report(
        p=p,
        m=m,
        residues=rt.residues,
        pseries_value=lhs,
        legendre_value=rhs,
        cpn_value=cpn_val,
    )


@dataclass(frozen=True)
class Eq46Report:
    """The u^p coefficient of the elliptic [u]_p mod p vs homogenized P_{(p-1)/2}."""

    p: int
    m: int
    scaled_term: GradedPolyModP
    legendre_value: GradedPolyModP
    power_system_u_p: GradedPolyModP
    low_coeffs_vanish: bool
    eps_one_equal: bool

    @property
    def equal(self) -> bool:
        return self.scaled_term == self.legendre_value

    @property
    def power_system_matches(self) -> bool:
        return self.power_system_u_p == self.legendre_value

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "scaled_term": str(self.scaled_term),
            "legendre_value": str(self.legendre_value),
            "power_system_u_p": str(self.power_system_u_p),
            "equal": self.equal,
            "power_system_matches": self.power_system_matches,
            "low_coeffs_vanish": self.low_coeffs_vanish,
            "eps_one_equal": self.eps_one_equal,
        }


def check_eq46(p: int, order: Optional[int] = None) -> Eq46Report:
    """Check p * <(p u/[u]_p) u^{p-1}/([u]_1...[u]_{p-1})>_{p-1} ≡ P-hom mod p.

    The single p-series coefficient X at the point with weights (1,...,p-1)
    is not itself p-integral, but p X is, and reduces to the homogenized
    Legendre polynomial P_{(p-1)/2}.  Equivalently the coefficient of u^p in
    [u]_p reduces to the same polynomial while the coefficients of
    u^1..u^{p-1} reduce to zero; both the fully homogenized comparison and
    its eps = 1 specialization are reported.
    """
    require_odd_prime(p)
    m = (p - 1) // 2
    g = make_genus(KIND_ELLIPTIC, order if order is not None else p + 2)
    x = p_series_term(g, p, tuple(range(1, p)), p - 1)
    scaled = poly_reduce_mod_p(x * p, p)
    rhs = poly_reduce_mod_p(homogenized_legendre(m), p)

    g = ensure_order(g, p + 1)
    ps = power_system(g, p)
    u_p = poly_reduce_mod_p(ps[p], p)
    low_ok = all(poly_reduce_mod_p(ps[k], p).is_zero() for k in range(1, p))

    eps_lhs = poly_reduce_mod_p(ps[p].substitute_eps(1), p)
    eps_rhs = poly_reduce_mod_p(homogenized_legendre(m).substitute_eps(1), p)
    return Eq46Report(
        p=p,
        m=m,
        scaled_term=scaled,
        legendre_value=rhs,
        power_system_u_p=u_p,
        low_coeffs_vanish=low_ok,
        eps_one_equal=eps_lhs == eps_rhs,
    )
