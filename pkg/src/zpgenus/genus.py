"""The catalog of Hirzebruch genera.

A genus is determined by its logarithm g(u) = u + ... (equivalently by the
characteristic series f = g^{-1}); everything downstream -- power systems,
projective-space values, fixed-point routes -- is derived from these two
series.  The catalog:

===========  ==========================================  =================
kind         logarithm g(u)                              coefficient ring
===========  ==========================================  =================
todd         -ln(1-u) = sum u^k/k                        Q
euler        u/(1-u)                                     Q
l_genus      arctanh(u) = (1/2) ln((1+u)/(1-u))          Q
chi_y        integral of 1/((1-u)(1+y u))                Q
a_hat        2 arcsinh(u/2)                              Q
elliptic     integral of (1-2 delta u^2 + eps u^4)^-1/2  Q[delta, eps]
custom       caller supplied                             caller supplied
===========  ==========================================  =================

All logarithms are normalized (g(0) = 0, g'(0) = 1).  For chi_y this fixes
the scale so that the value on CP^n is (1 + (-1)^n y^{n+1})/(1+y); it also
makes the construction polynomial in y, so y = -1 smoothly reproduces the
euler logarithm.  The m-th power system is [u]_m = f(m·g(u)), the exact
kernel of the mod-p fixed-point machinery.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Optional, Union

from .errors import (
    BadParams,
    IndexBeyondTruncation,
    UnsupportedClosedForm,
    UnsupportedKind,
)
from .rings import DE, QQ, CoefficientRing, GradedPoly, Rational
from .series import Series, binomial_power, geometric

KIND_TODD = "todd"
KIND_EULER = "euler"
KIND_L = "l_genus"
KIND_CHI_Y = "chi_y"
KIND_A_HAT = "a_hat"
KIND_ELLIPTIC = "elliptic"
KIND_CUSTOM = "custom"

CATALOG_KINDS = (KIND_TODD, KIND_EULER, KIND_L, KIND_CHI_Y, KIND_A_HAT, KIND_ELLIPTIC)

# kinds whose theta lies in Q(zeta_p), so the trace and B-series routes apply
TRACE_KINDS = (KIND_TODD, KIND_EULER, KIND_L, KIND_CHI_Y, KIND_A_HAT)
# kinds with a B-series (euler's theta degenerates to 1 and is handled apart)
B_SERIES_KINDS = (KIND_TODD, KIND_L, KIND_CHI_Y, KIND_A_HAT)


def default_order(n: int, p: int) -> int:
    """Default series truncation order for dimension n at the prime p."""
    return max(n, p) + 2


class GenusSpec:
    """A genus, pinned by its normalized logarithm and f = revert(logarithm).

    Immutable apart from an internal power-system cache.
    """

    __slots__ = ("kind", "y", "ring", "logarithm", "f_series", "_powers")

    def __init__(self, kind: str, y: Optional[Rational], logarithm: Series):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "ring", logarithm.ring)
        object.__setattr__(self, "logarithm", logarithm)
        object.__setattr__(self, "f_series", logarithm.revert())
        object.__setattr__(self, "_powers", {})

    def __setattr__(self, name, val):
        raise AttributeError("GenusSpec is immutable")

    @property
    def order(self) -> int:
        return self.logarithm.order

    def __repr__(self):
        y = f", y={self.y}" if self.y is not None else ""
        return f"GenusSpec({self.kind}{y}; order {self.order})"


def _build_logarithm(kind: str, order: int, y: Optional[Fraction]) -> Series:
    if kind == KIND_TODD:
        return geometric(QQ, order - 1).integrate()
    if kind == KIND_EULER:
        return geometric(QQ, order).shift_up(1)
    if kind == KIND_L:
        one_minus_u2 = Series.from_fractions(QQ, [1, 0, -1], order - 1)
        return one_minus_u2.invert().integrate()
    if kind == KIND_CHI_Y:
        lin1 = Series.from_fractions(QQ, [1, -1], order - 1)
        lin2 = Series.from_fractions(QQ, [1, y], order - 1)
        return (lin1 * lin2).invert().integrate()
    if kind == KIND_A_HAT:
        w = Series.from_fractions(QQ, [0, 0, Fraction(1, 4)], order - 1)
        return binomial_power(w, Fraction(-1, 2)).integrate()
    if kind == KIND_ELLIPTIC:
        w = Series(
            DE,
            [
                GradedPoly.zero(),
                GradedPoly.zero(),
                GradedPoly.delta() * Fraction(-2),
                GradedPoly.zero(),
                GradedPoly.eps(),
            ],
            order - 1,
        )
        return binomial_power(w, Fraction(-1, 2)).integrate()
    raise UnsupportedKind(f"unknown genus kind {kind!r}")


_GENUS_CACHE: dict = {}


def make_genus(
    kind: str,
    order: int,
    y: Union[Rational, int, None] = None,
    logarithm: Optional[Series] = None,
) -> GenusSpec:
    """Construct (and cache) a genus from the catalog.

    ``y`` is required for (and only allowed with) chi_y.  ``logarithm`` is
    required for (and only allowed with) kind 'custom'; it must satisfy
    g(0) = 0 and g'(0) = 1 and is used at its own truncation order.
    """
    if not isinstance(order, int) or order < 2:
        raise BadParams(f"order must be an int >= 2, got {order!r}")
    if kind == KIND_CUSTOM:
        if logarithm is None:
            raise BadParams("custom genus needs an explicit logarithm")
        if logarithm.coeffs[0] != logarithm.ring.zero:
            raise BadParams("custom logarithm must vanish at 0")
        if logarithm.order < 1 or logarithm.coeffs[1] != logarithm.ring.one:
            raise BadParams("custom logarithm must have linear coefficient 1")
        return GenusSpec(KIND_CUSTOM, None, logarithm)
    if logarithm is not None:
        raise BadParams("an explicit logarithm is only allowed with kind='custom'")
    if kind == KIND_CHI_Y:
        if y is None:
            raise BadParams("chi_y needs the parameter y")
        y = Fraction(y)
    elif y is not None:
        raise BadParams(f"kind {kind!r} does not take a parameter y")
    if kind not in CATALOG_KINDS:
        raise UnsupportedKind(f"unknown genus kind {kind!r}")

    key = (kind, y, order)
    g = _GENUS_CACHE.get(key)
    if g is None:
        g = GenusSpec(kind, y, _build_logarithm(kind, order, y))
        _GENUS_CACHE[key] = g
    return g


def ensure_order(g: GenusSpec, order: int) -> GenusSpec:
    """Return g, rebuilt at a higher truncation order if needed."""
    if g.order >= order:
        return g
    if g.kind == KIND_CUSTOM:
        raise BadParams(
            f"custom genus has order {g.order} but order {order} is needed"
        )
    return make_genus(g.kind, order, g.y)


def power_system(g: GenusSpec, m: int) -> Series:
    """The m-th power system [u]_m = f(m·g(u)), at the genus's own order."""
    if not isinstance(m, int) or m < 1:
        raise BadParams(f"power system index must be an int >= 1, got {m!r}")
    cached = g._powers.get(m)
    if cached is None:
        if m == 1:
            cached = Series.identity(g.ring, g.order)
        else:
            cached = g.f_series.compose(g.logarithm.scale(m))
        g._powers[m] = cached
    return cached


def power_system_closed(
    kind: str, m: int, order: int, y: Union[Rational, int, None] = None
) -> Series:
    """Closed-form [u]_m for the kinds that admit one (all but elliptic/custom)."""
    if not isinstance(m, int) or m < 1:
        raise BadParams(f"power system index must be an int >= 1, got {m!r}")
    if kind == KIND_CHI_Y:
        if y is None:
            raise BadParams("chi_y needs the parameter y")
        y = Fraction(y)
    elif y is not None:
        raise BadParams(f"kind {kind!r} does not take a parameter y")

    one = Series.one(QQ, order)
    u = Series.identity(QQ, order)
    if kind == KIND_TODD:
        return one - (one - u) ** m
    if kind == KIND_EULER or (kind == KIND_CHI_Y and y == -1):
        return u.scale(m) * (one + u.scale(m - 1)).invert()
    if kind == KIND_L:
        plus = (one + u) ** m
        minus = (one - u) ** m
        return (plus - minus).divide(plus + minus)
    if kind == KIND_CHI_Y:
        plus = (one + u.scale(y)) ** m
        minus = (one - u) ** m
        return (plus - minus).divide(plus + minus.scale(y))
    if kind == KIND_A_HAT:
        w = Series.from_fractions(QQ, [0, 0, Fraction(1, 4)], order)
        s = binomial_power(w, Fraction(1, 2)) + u.scale(Fraction(1, 2))
        return s**m - s.invert() ** m
    if kind in (KIND_ELLIPTIC, KIND_CUSTOM):
        raise UnsupportedClosedForm(f"no closed-form power system for kind {kind!r}")
    raise UnsupportedKind(f"unknown genus kind {kind!r}")


def cpn_genus(g: GenusSpec, n: int):
    """Value of the genus on complex projective n-space: <g'(u)>_n.

    Returns a ring element (Fraction, or GradedPoly for elliptic).
    """
    if not isinstance(n, int) or n < 0:
        raise BadParams(f"projective dimension must be an int >= 0, got {n!r}")
    deriv = g.logarithm.differentiate()
    if n > deriv.order:
        raise IndexBeyondTruncation(
            f"CP^{n} value needs order {n + 1}, genus has order {g.order}"
        )
    return deriv[n]


# ---------------------------------------------------------------------------
# Hyperbolic helper series (used by the a_hat closed forms and the engine).
# ---------------------------------------------------------------------------


def sinh_series(ring: CoefficientRing, order: int) -> Series:
    return Series(
        ring,
        [
            ring.from_fraction(Fraction(1, factorial(k))) if k % 2 else ring.zero
            for k in range(order + 1)
        ],
    )


def cosh_series(ring: CoefficientRing, order: int) -> Series:
    return Series(
        ring,
        [
            ring.zero if k % 2 else ring.from_fraction(Fraction(1, factorial(k)))
            for k in range(order + 1)
        ],
    )


def arcsinh_u_over_2(order: int) -> Series:
    """t(u) = arcsinh(u/2) over Q; the a_hat logarithm is 2t."""
    w = Series.from_fractions(QQ, [0, 0, Fraction(1, 4)], order - 1)
    return binomial_power(w, Fraction(-1, 2)).integrate().scale(Fraction(1, 2))


def sqrt_one_plus_quarter_u2(order: int) -> Series:
    """(1 + u^2/4)^{1/2} = cosh(arcsinh(u/2)) over Q."""
    w = Series.from_fractions(QQ, [0, 0, Fraction(1, 4)], order)
    return binomial_power(w, Fraction(1, 2))


# ---------------------------------------------------------------------------
# Genus names as accepted by the command line.
# ---------------------------------------------------------------------------

_NAME_TO_KIND = {
    "td": KIND_TODD,
    "euler": KIND_EULER,
    "L": KIND_L,
    "ahat": KIND_A_HAT,
    "elliptic": KIND_ELLIPTIC,
}

_KIND_TO_NAME = {v: k for k, v in _NAME_TO_KIND.items()}


def parse_genus_name(text: str):
    """Map a CLI genus name to (kind, y): td, euler, L, chi_y:<y>, ahat, elliptic."""
    text = text.strip()
    if text in _NAME_TO_KIND:
        return _NAME_TO_KIND[text], None
    if text.startswith("chi_y:"):
        raw = text[len("chi_y:"):]
        try:
            return KIND_CHI_Y, Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise BadParams(f"bad chi_y parameter {raw!r}") from exc
    raise BadParams(
        f"unknown genus name {text!r}; expected td, euler, L, chi_y:<y>, ahat or elliptic"
    )


def genus_name(kind: str, y: Optional[Rational] = None) -> str:
    if kind == KIND_CHI_Y:
        return f"chi_y:{y}"
    if kind in _KIND_TO_NAME:
        return _KIND_TO_NAME[kind]
    return kind
