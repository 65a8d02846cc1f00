"""Truncated formal power series over an exact coefficient ring.

A :class:`Series` holds coefficients c_0..c_N (N = truncation order) over one
of the ring descriptors from :mod:`zpgenus.rings`.  All arithmetic is exact;
truncation is the only approximation, and every operation states how it
propagates the order.  Binary operations work through the minimum of the two
orders, and equality compares through the common order.

Conventions used throughout:

* ``order`` is the largest exponent whose coefficient is known exactly.
* constructing from a short coefficient list pads with zeros, which is only
  correct for polynomial inputs -- that is the intended use.
* ``shift_down(k)`` divides by u^k and fails if any dropped coefficient is
  nonzero; combined with :meth:`Series.invert` it gives exact division of
  series with positive valuation.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .errors import (
    BadParams,
    IndexBeyondTruncation,
    IntegrateInResidueRing,
    NonUnitConstantTerm,
    NonzeroInnerConstant,
    NotReversible,
    RingMismatch,
    ZeroDivision,
)
from .rings import CoefficientRing

Scalar = Union[int, Fraction]


class Series:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CoefficientRing, coeffs: Sequence, order: int | None = None):
        coeffs = list(coeffs)
        if order is not None:
            if order < 0:
                raise BadParams(f"order must be >= 0, got {order}")
            if len(coeffs) > order + 1:
                coeffs = coeffs[: order + 1]
            else:
                coeffs.extend(ring.zero for _ in range(order + 1 - len(coeffs)))
        if not coeffs:
            raise BadParams("a series needs at least the constant coefficient")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, val):
        raise AttributeError("Series is immutable")

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, ring: CoefficientRing, order: int) -> "Series":
        return cls(ring, [], order)

    @classmethod
    def one(cls, ring: CoefficientRing, order: int) -> "Series":
        return cls(ring, [ring.one], order)

    @classmethod
    def identity(cls, ring: CoefficientRing, order: int) -> "Series":
        if order < 1:
            raise BadParams("the identity series u needs order >= 1")
        return cls(ring, [ring.zero, ring.one], order)

    @classmethod
    def from_fractions(cls, ring: CoefficientRing, coeffs: Sequence[Scalar], order: int) -> "Series":
        return cls(ring, [ring.from_fraction(Fraction(c)) for c in coeffs], order)

    # -- basic structure -----------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int):
        if not isinstance(m, int) or m < 0:
            raise BadParams(f"coefficient index must be an int >= 0, got {m!r}")
        if m > self.order:
            raise IndexBeyondTruncation(
                f"coefficient of u^{m} requested but the series is truncated at order {self.order}"
            )
        return self.coeffs[m]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise IndexBeyondTruncation(
                f"cannot extend a truncated series from order {self.order} to {order}"
            )
        return Series(self.ring, self.coeffs[: order + 1])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient; None for the zero series."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def _check_ring(self, other: "Series"):
        if self.ring is not other.ring:
            raise RingMismatch(f"mixed rings {self.ring!r} and {other.ring!r}")

    # -- linear arithmetic ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._check_ring(other)
        n = min(self.order, other.order)
        return Series(self.ring, [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._check_ring(other)
        n = min(self.order, other.order)
        return Series(self.ring, [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __neg__(self):
        return Series(self.ring, [-c for c in self.coeffs])

    def scale(self, q) -> "Series":
        """Multiply every coefficient by a scalar (int/Fraction) or ring element."""
        if isinstance(q, (int, Fraction)):
            if self.ring.char:
                q = self.ring.from_fraction(Fraction(q))
            elif isinstance(q, int):
                q = Fraction(q)
        return Series(self.ring, [c * q for c in self.coeffs])

    # -- multiplicative arithmetic --------------------------------------------
    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        self._check_ring(other)
        n = min(self.order, other.order)
        zero = self.ring.zero
        out = [zero] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return Series(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if not isinstance(k, int) or k < 0:
            raise BadParams(f"series power wants k >= 0, got {k!r}")
        out = Series.one(self.ring, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def invert(self) -> "Series":
        """Multiplicative inverse; the constant term must be a unit."""
        a0 = self.coeffs[0]
        if not self.ring.is_unit(a0):
            raise NonUnitConstantTerm(
                f"cannot invert a series with constant term {a0!r}"
            )
        n = self.order
        b0 = self.ring.invert(a0)
        out = [b0]
        neg_b0 = -b0
        for k in range(1, n + 1):
            acc = self.ring.zero
            for i in range(1, k + 1):
                ai = self.coeffs[i]
                if ai:
                    acc = acc + ai * out[k - i]
            out.append(neg_b0 * acc if acc else self.ring.zero)
        return Series(self.ring, out)

    def divide(self, other: "Series") -> "Series":
        """Exact division self/other.

        If other has valuation v > 0, self must also be divisible by u^v; the
        result then has order min(orders) - v.
        """
        if not isinstance(other, Series):
            raise BadParams("divide wants a Series")
        self._check_ring(other)
        v = other.valuation()
        if v is None:
            raise ZeroDivision("division by the zero series")
        if v == 0:
            return self * other.invert()
        return self.shift_down(v) * other.shift_down(v).invert()

    def shift_down(self, k: int) -> "Series":
        """Divide by u^k; errors if a dropped coefficient is nonzero."""
        if k == 0:
            return self
        if k < 0 or k > self.order:
            raise BadParams(f"shift_down({k}) out of range for order {self.order}")
        for c in self.coeffs[:k]:
            if c:
                raise ZeroDivision(f"series is not divisible by u^{k}")
        return Series(self.ring, self.coeffs[k:])

    def shift_up(self, k: int) -> "Series":
        """Multiply by u^k, keeping the order (the top k coefficients fall off)."""
        if k < 0:
            raise BadParams(f"shift_up wants k >= 0, got {k}")
        if k == 0:
            return self
        zero = self.ring.zero
        kept = list(self.coeffs[: max(self.order + 1 - k, 0)])
        return Series(self.ring, [zero] * k + kept, self.order)

    # -- composition and reversion ---------------------------------------------
    def compose(self, inner: "Series") -> "Series":
        """self(inner(u)); inner must vanish at 0."""
        if not isinstance(inner, Series):
            raise BadParams("compose wants a Series")
        self._check_ring(inner)
        if inner.coeffs[0]:
            raise NonzeroInnerConstant(
                f"inner series has constant term {inner.coeffs[0]!r}, expected 0"
            )
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        out = Series(self.ring, [self.coeffs[n]], n)
        for k in range(n - 1, -1, -1):
            out = out * inner
            ck = self.coeffs[k]
            if ck:
                out = Series(
                    self.ring, [out.coeffs[0] + ck] + list(out.coeffs[1:])
                )
        return out

    def revert(self) -> "Series":
        """Compositional inverse b with self(b(u)) = u.

        Degree-by-degree back-substitution: once b is known through degree
        k-1, the coefficient of u^k in self∘b is a1*b_k + (known), so b_k
        follows.  Each step composes at order k only.
        """
        if self.coeffs[0]:
            raise NotReversible("a(0) must be 0 to revert")
        if self.order < 1 or not self.ring.is_unit(self.coeffs[1]):
            raise NotReversible("the linear coefficient must be a unit to revert")
        n = self.order
        inv_a1 = self.ring.invert(self.coeffs[1])
        zero = self.ring.zero
        b = [zero, inv_a1]
        for k in range(2, n + 1):
            partial = Series(self.ring, b, k)
            c = self.truncate(k).compose(partial).coeffs[k]
            b.append(-(c * inv_a1) if c else zero)
        return Series(self.ring, b, n)

    # -- calculus ----------------------------------------------------------------
    def differentiate(self) -> "Series":
        """Termwise d/du; the order drops by one."""
        if self.order < 1:
            raise BadParams("cannot differentiate a series of order 0")
        return Series(
            self.ring, [self.coeffs[k + 1] * (k + 1) for k in range(self.order)]
        )

    def integrate(self) -> "Series":
        """Termwise integral with constant 0; the order grows by one.

        Over a ring of characteristic p this fails with IntegrateInResidueRing
        as soon as a needed division by k+1 hits p | k+1.
        """
        p = self.ring.char
        out = [self.ring.zero]
        for k, c in enumerate(self.coeffs):
            if p:
                if (k + 1) % p == 0:
                    raise IntegrateInResidueRing(
                        f"integration needs division by {k + 1}, impossible mod {p}"
                    )
                out.append(c * self.ring.from_int(pow(k + 1, -1, p)))
            else:
                out.append(c * Fraction(1, k + 1))
        return Series(self.ring, out)

    # -- comparison and text --------------------------------------------------
    def __eq__(self, other) -> bool:
        """Coefficientwise equality through the common truncation order."""
        if not isinstance(other, Series):
            return NotImplemented
        if self.ring is not other.ring:
            return False
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def to_text(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"({c})*u")
            else:
                parts.append(f"({c})*u^{k}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Series[{self.ring!r}; order {self.order}]({self.to_text()})"


def binomial_power(w: Series, alpha: Scalar) -> "Series":
    """(1 + w)^alpha for a series w with w(0) = 0 and rational alpha.

    Expanded by the generalized binomial theorem; since w has positive
    valuation, w^k contributes nothing below degree k and the sum is finite
    at each truncation order.
    """
    if not isinstance(w, Series):
        raise BadParams("binomial_power wants a Series")
    if w.coeffs[0]:
        raise BadParams("binomial_power needs w(0) = 0")
    alpha = Fraction(alpha)
    n = w.order
    acc = Series.one(w.ring, n)
    term = Series.one(w.ring, n)
    coef = Fraction(1)
    for k in range(1, n + 1):
        term = term * w
        coef = coef * (alpha - (k - 1)) / k
        if coef:
            acc = acc + term.scale(coef)
    return acc


def geometric(ring: CoefficientRing, order: int) -> Series:
    """1/(1-u) = 1 + u + u^2 + ... as an explicit polynomial-free construction."""
    return Series(ring, [ring.one] * (order + 1))
