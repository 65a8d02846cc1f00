"""Exact coefficient arithmetic.

Four coefficient domains, all exact:

* ``Rational`` -- stdlib :class:`fractions.Fraction` (already canonical:
  gcd-reduced, positive denominator).
* :class:`ModP` -- the field of p elements, p an odd prime.
* :class:`GradedPoly` -- Q[delta, eps] with the weighted grading
  deg(delta) = 2, deg(eps) = 4.
* :class:`GradedPolyModP` -- F_p[delta, eps], the image of GradedPoly mod p.

Reduction mod p is only defined for p-integral inputs: a rational (or a
polynomial coefficient) with p dividing its denominator raises
:class:`~zpgenus.errors.NonIntegralAtP`.  This is the single choke point for
p-integrality diagnostics in the whole package.

The module also exposes tiny ring descriptors (:data:`QQ`, :data:`DE`,
:func:`modp_ring`, :func:`graded_modp_ring`) so the series layer can stay
generic over the coefficient domain.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .errors import (
    BadParams,
    NonIntegralAtP,
    PrimeMismatch,
    ZeroDivision,
    ZeroPolynomial,
)

Rational = Fraction


@lru_cache(maxsize=None)
def is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def require_odd_prime(p: int) -> int:
    if not is_odd_prime(p):
        raise BadParams(f"p must be an odd prime >= 3, got {p!r}")
    return p


class ModP:
    """An element of the field of p elements, stored as a residue in [0, p-1]."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        require_odd_prime(p)
        object.__setattr__(self, "value", value % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, val):  # immutable
        raise AttributeError("ModP is immutable")

    def _coerce(self, other) -> "ModP":
        if isinstance(other, ModP):
            if other.p != self.p:
                raise PrimeMismatch(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return ModP(pow(self.value, k, self.p), self.p)

    def inverse(self) -> "ModP":
        if self.value == 0:
            raise ZeroDivision(f"0 is not invertible mod {self.p}")
        return ModP(pow(self.value, -1, self.p), self.p)

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModP) and self.p == other.p and self.value == other.value
        )

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"ModP({self.value}, p={self.p})"

    def __str__(self):
        return str(self.value)


def rational_reduce_mod_p(r: Union[Rational, int], p: int) -> ModP:
    """Reduce a p-integral rational mod p.

    Raises NonIntegralAtP when p divides the denominator of r in lowest terms.
    """
    require_odd_prime(p)
    r = Fraction(r)
    if r.denominator % p == 0:
        raise NonIntegralAtP(f"{r} is not p-integral at p = {p}")
    return ModP(r.numerator * pow(r.denominator, -1, p), p)


# ---------------------------------------------------------------------------
# The graded ring Q[delta, eps], deg(delta) = 2, deg(eps) = 4.
# ---------------------------------------------------------------------------

Monomial = tuple  # (a, b) meaning delta^a * eps^b


def _monomial_degree(m: Monomial) -> int:
    return 2 * m[0] + 4 * m[1]


def _term_sort_key(m: Monomial):
    # descending weighted degree, then descending delta exponent
    return (-_monomial_degree(m), -m[0])


class _Inhomogeneous:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INHOMOGENEOUS"


INHOMOGENEOUS = _Inhomogeneous()


class GradedPoly:
    """An element of Q[delta, eps], stored sparsely as {(a, b): coefficient}.

    Canonical form: no zero coefficients are stored, every coefficient is a
    Fraction.  Instances are immutable; all operations return new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Union[Rational, int]] = ()):
        canon = {}
        for (a, b), c in dict(terms).items():
            if not isinstance(a, int) or not isinstance(b, int) or a < 0 or b < 0:
                raise BadParams(f"bad monomial exponents ({a!r}, {b!r})")
            c = Fraction(c)
            if c:
                canon[(a, b)] = c
        object.__setattr__(self, "terms", canon)

    def __setattr__(self, name, val):
        raise AttributeError("GradedPoly is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "GradedPoly":
        return cls({})

    @classmethod
    def one(cls) -> "GradedPoly":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, q: Union[Rational, int]) -> "GradedPoly":
        return cls({(0, 0): Fraction(q)})

    @classmethod
    def delta(cls) -> "GradedPoly":
        return cls({(1, 0): 1})

    @classmethod
    def eps(cls) -> "GradedPoly":
        return cls({(0, 1): 1})

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_value(self) -> Rational:
        return self.terms.get((0, 0), Fraction(0))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return GradedPoly(out)

    def __sub__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) - c
        return GradedPoly(out)

    def __neg__(self):
        return GradedPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return GradedPoly({m: c * q for m, c in self.terms.items()})
        if not isinstance(other, GradedPoly):
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                m = (a1 + a2, b1 + b2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return GradedPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise BadParams(f"polynomial power wants k >= 0, got {k!r}")
        out = GradedPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def substitute(self, delta_val: Union[Rational, int], eps_val: Union[Rational, int]) -> Rational:
        """Evaluate at delta = delta_val, eps = eps_val."""
        dv, ev = Fraction(delta_val), Fraction(eps_val)
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * dv**a * ev**b
        return total

    def substitute_eps(self, eps_val: Union[Rational, int]) -> "GradedPoly":
        """Partial evaluation eps = eps_val; the result lives in Q[delta]."""
        ev = Fraction(eps_val)
        out = {}
        for (a, b), c in self.terms.items():
            m = (a, 0)
            out[m] = out.get(m, Fraction(0)) + c * ev**b
        return GradedPoly(out)

    # -- structure ----------------------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, GradedPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _term_sort_key(kv[0]))

    def __repr__(self):
        return f"GradedPoly({poly_to_text(self)!r})"

    def __str__(self):
        return poly_to_text(self)


def weighted_degree(q: GradedPoly):
    """Weighted degree of a nonzero homogeneous polynomial.

    Returns the sentinel INHOMOGENEOUS when terms of different weighted
    degrees are mixed; raises ZeroPolynomial on the zero polynomial.
    """
    if not isinstance(q, GradedPoly):
        raise BadParams(f"weighted_degree wants a GradedPoly, got {type(q).__name__}")
    if q.is_zero():
        raise ZeroPolynomial("the zero polynomial has no weighted degree")
    degrees = {_monomial_degree(m) for m in q.terms}
    if len(degrees) > 1:
        return INHOMOGENEOUS
    return degrees.pop()


class GradedPolyModP:
    """An element of F_p[delta, eps]: integer coefficients in [1, p-1], sparse."""

    __slots__ = ("terms", "p")

    def __init__(self, terms: Mapping[Monomial, int], p: int):
        require_odd_prime(p)
        canon = {}
        for m, c in dict(terms).items():
            c = c % p
            if c:
                canon[m] = c
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, val):
        raise AttributeError("GradedPolyModP is immutable")

    @classmethod
    def zero(cls, p: int) -> "GradedPolyModP":
        return cls({}, p)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "GradedPolyModP"):
        if self.p != other.p:
            raise PrimeMismatch(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other):
        if not isinstance(other, GradedPolyModP):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPolyModP(out, self.p)

    def __sub__(self, other):
        if not isinstance(other, GradedPolyModP):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return GradedPolyModP(out, self.p)

    def __neg__(self):
        return GradedPolyModP({m: -c for m, c in self.terms.items()}, self.p)

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedPolyModP({m: c * other for m, c in self.terms.items()}, self.p)
        if not isinstance(other, GradedPolyModP):
            return NotImplemented
        self._check(other)
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                m = (a1 + a2, b1 + b2)
                out[m] = out.get(m, 0) + c1 * c2
        return GradedPolyModP(out, self.p)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedPolyModP)
            and self.p == other.p
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.p))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _term_sort_key(kv[0]))

    def __repr__(self):
        return f"GradedPolyModP({poly_to_text(self)!r}, p={self.p})"

    def __str__(self):
        return poly_to_text(self)


def poly_reduce_mod_p(q: GradedPoly, p: int) -> GradedPolyModP:
    """Reduce every coefficient mod p; NonIntegralAtP if any denominator has p."""
    require_odd_prime(p)
    out = {}
    for m, c in q.terms.items():
        if c.denominator % p == 0:
            raise NonIntegralAtP(
                f"coefficient {c} of delta^{m[0]}*eps^{m[1]} is not p-integral at p = {p}"
            )
        out[m] = c.numerator * pow(c.denominator, -1, p)
    return GradedPolyModP(out, p)


# ---------------------------------------------------------------------------
# Text form: "c", "c*delta^a", "c*eps^b", "c*delta^a*eps^b" joined by " + ",
# exponent 1 omitted, terms in descending weighted degree then descending
# delta exponent.  Round-trips bit-exactly.
# ---------------------------------------------------------------------------


def _term_to_text(m: Monomial, c) -> str:
    a, b = m
    parts = [str(c)]
    if a:
        parts.append("delta" if a == 1 else f"delta^{a}")
    if b:
        parts.append("eps" if b == 1 else f"eps^{b}")
    return "*".join(parts)


def poly_to_text(q: Union[GradedPoly, GradedPolyModP]) -> str:
    if q.is_zero():
        return "0"
    return " + ".join(_term_to_text(m, c) for m, c in q.sorted_terms())


def _parse_term(text: str):
    pieces = text.split("*")
    try:
        c = Fraction(pieces[0])
    except (ValueError, ZeroDivisionError) as exc:
        raise BadParams(f"bad coefficient {pieces[0]!r} in term {text!r}") from exc
    a = b = 0
    for piece in pieces[1:]:
        if piece.startswith("delta"):
            rest, cur = piece[len("delta"):], "delta"
        elif piece.startswith("eps"):
            rest, cur = piece[len("eps"):], "eps"
        else:
            raise BadParams(f"bad factor {piece!r} in term {text!r}")
        if rest == "":
            e = 1
        elif rest.startswith("^"):
            try:
                e = int(rest[1:])
            except ValueError as exc:
                raise BadParams(f"bad exponent in {piece!r}") from exc
        else:
            raise BadParams(f"bad factor {piece!r} in term {text!r}")
        if cur == "delta":
            a += e
        else:
            b += e
    return (a, b), c


def poly_from_text(text: str) -> GradedPoly:
    """Parse the text form of a GradedPoly (inverse of poly_to_text)."""
    text = text.strip()
    if not text:
        raise BadParams("empty polynomial text")
    if text == "0":
        return GradedPoly.zero()
    terms = {}
    for chunk in text.split(" + "):
        m, c = _parse_term(chunk.strip())
        terms[m] = terms.get(m, Fraction(0)) + c
    return GradedPoly(terms)


def poly_modp_from_text(text: str, p: int) -> GradedPolyModP:
    q = poly_from_text(text)
    return poly_reduce_mod_p(q, p)


# ---------------------------------------------------------------------------
# Ring descriptors.  A descriptor carries just enough for the series layer:
# characteristic, distinguished elements, conversions, and unit tests.
# ---------------------------------------------------------------------------


class CoefficientRing:
    """Descriptor protocol; concrete subclasses are singletons (per prime)."""

    char: int = 0
    name: str = "?"

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, q: Rational):
        raise NotImplementedError

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def invert(self, x):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class _RationalField(CoefficientRing):
    char = 0
    name = "Q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def from_fraction(self, q: Rational):
        return Fraction(q)

    def is_unit(self, x) -> bool:
        return x != 0

    def invert(self, x):
        if x == 0:
            raise ZeroDivision("division by zero in Q")
        return 1 / Fraction(x)


class _GradedRing(CoefficientRing):
    char = 0
    name = "Q[delta,eps]"

    @property
    def zero(self):
        return GradedPoly.zero()

    @property
    def one(self):
        return GradedPoly.one()

    def from_int(self, n: int):
        return GradedPoly.const(n)

    def from_fraction(self, q: Rational):
        return GradedPoly.const(q)

    def is_unit(self, x) -> bool:
        return x.is_constant() and not x.is_zero()

    def invert(self, x):
        if not self.is_unit(x):
            raise ZeroDivision(f"{x!r} is not a unit in {self.name}")
        return GradedPoly.const(1 / x.constant_value())


class _ModPField(CoefficientRing):
    def __init__(self, p: int):
        require_odd_prime(p)
        self.p = p
        self.char = p
        self.name = f"F_{p}"

    @property
    def zero(self):
        return ModP(0, self.p)

    @property
    def one(self):
        return ModP(1, self.p)

    def from_int(self, n: int):
        return ModP(n, self.p)

    def from_fraction(self, q: Rational):
        return rational_reduce_mod_p(q, self.p)

    def is_unit(self, x) -> bool:
        return x.value != 0

    def invert(self, x):
        return x.inverse()


class _GradedModPRing(CoefficientRing):
    def __init__(self, p: int):
        require_odd_prime(p)
        self.p = p
        self.char = p
        self.name = f"F_{p}[delta,eps]"

    @property
    def zero(self):
        return GradedPolyModP.zero(self.p)

    @property
    def one(self):
        return GradedPolyModP({(0, 0): 1}, self.p)

    def from_int(self, n: int):
        return GradedPolyModP({(0, 0): n}, self.p)

    def from_fraction(self, q: Rational):
        r = rational_reduce_mod_p(q, self.p)
        return GradedPolyModP({(0, 0): r.value}, self.p)

    def is_unit(self, x) -> bool:
        return set(x.terms) == {(0, 0)}

    def invert(self, x):
        if not self.is_unit(x):
            raise ZeroDivision(f"{x!r} is not a unit in {self.name}")
        return GradedPolyModP({(0, 0): pow(x.terms[(0, 0)], -1, self.p)}, self.p)


QQ = _RationalField()
DE = _GradedRing()


@lru_cache(maxsize=None)
def modp_ring(p: int) -> _ModPField:
    return _ModPField(p)


@lru_cache(maxsize=None)
def graded_modp_ring(p: int) -> _GradedModPRing:
    return _GradedModPRing(p)
