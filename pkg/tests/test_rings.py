"""Exact scalar, residue and graded-polynomial arithmetic."""
import random
from fractions import Fraction as F

import pytest

from zpgenus.errors import (
    BadParams,
    NonIntegralAtP,
    PrimeMismatch,
    ZeroDivision,
    ZeroPolynomial,
)
from zpgenus.rings import (
    INHOMOGENEOUS,
    GradedPoly,
    GradedPolyModP,
    ModP,
    is_odd_prime,
    poly_from_text,
    poly_reduce_mod_p,
    poly_to_text,
    rational_reduce_mod_p,
    require_odd_prime,
    weighted_degree,
)

D = GradedPoly.delta()
E = GradedPoly.eps()
ONE = GradedPoly.one()


def test_odd_prime_gate():
    assert is_odd_prime(3) and is_odd_prime(11) and is_odd_prime(97)
    for bad in (2, 1, 0, -3, 9, 15, 21):
        assert not is_odd_prime(bad)
    with pytest.raises(BadParams):
        require_odd_prime(2)
    with pytest.raises(BadParams):
        require_odd_prime(9)


def test_rational_reduce_examples():
    # 7/4 is the exact CP^1 Todd point sum at p=3 (1 + 3/4); its residue is 1
    assert rational_reduce_mod_p(F(7, 4), 3) == ModP(1, 3)
    assert rational_reduce_mod_p(F(0), 5) == ModP(0, 5)
    assert rational_reduce_mod_p(7, 5) == ModP(2, 5)
    # 2/3 shows up as the u^2 coefficient of 3u/[u]_3 for todd; not 3-integral
    with pytest.raises(NonIntegralAtP):
        rational_reduce_mod_p(F(2, 3), 3)
    with pytest.raises(NonIntegralAtP):
        rational_reduce_mod_p(F(1, 10), 5)


def test_rational_reduce_is_a_homomorphism():
    rng = random.Random(101)
    for _ in range(200):
        p = rng.choice((3, 5, 7, 11))
        a = F(rng.randint(-40, 40), rng.choice([1, 2, 4, 9, 121]))
        b = F(rng.randint(-40, 40), rng.choice([1, 2, 4, 9, 121]))
        if a.denominator % p == 0 or b.denominator % p == 0:
            continue
        assert rational_reduce_mod_p(a + b, p) == rational_reduce_mod_p(a, p) + rational_reduce_mod_p(b, p)
        assert rational_reduce_mod_p(a * b, p) == rational_reduce_mod_p(a, p) * rational_reduce_mod_p(b, p)


def test_modp_field_laws_exhaustive():
    for p in (3, 5):
        elems = [ModP(v, p) for v in range(p)]
        for a in elems:
            for b in elems:
                assert a + b == b + a
                assert a * b == b * a
                for c in elems:
                    assert (a + b) + c == a + (b + c)
                    assert a * (b + c) == a * b + a * c
            assert a + (-a) == ModP(0, p)
            if a.value:
                assert a * a.inverse() == ModP(1, p)
    with pytest.raises(ZeroDivision):
        ModP(0, 7).inverse()


def test_modp_prime_mismatch_and_int_mixing():
    assert ModP(2, 5) + 4 == ModP(1, 5)
    assert 3 * ModP(4, 5) == ModP(2, 5)
    assert ModP(2, 5) ** -1 == ModP(3, 5)
    with pytest.raises(PrimeMismatch):
        ModP(1, 3) + ModP(1, 5)
    with pytest.raises(PrimeMismatch):
        ModP(1, 3) * ModP(1, 5)


def test_graded_poly_basic_algebra():
    assert D * D == GradedPoly({(2, 0): 1})
    assert (D + E) - D == E
    assert (D * 2) * F(1, 2) == D
    assert D * E == GradedPoly({(1, 1): 1})
    assert (D + E) * (D - E) == GradedPoly({(2, 0): 1, (0, 2): -1})
    # canonicalization: zeros dropped, all representations agree
    assert GradedPoly({(1, 0): 0, (0, 1): 2}) == E * 2
    assert GradedPoly({(0, 0): F(0)}).is_zero()
    assert hash(D + E) == hash(E + D)


def test_weighted_degree():
    assert weighted_degree(D) == 2
    assert weighted_degree(E) == 4
    assert weighted_degree(D * D + E * 7) == 4
    assert weighted_degree(ONE) == 0
    assert weighted_degree(D + E) is INHOMOGENEOUS
    with pytest.raises(ZeroPolynomial):
        weighted_degree(GradedPoly.zero())


def test_weighted_degree_multiplicative():
    rng = random.Random(7)
    for _ in range(50):
        d1 = rng.randint(0, 3)
        d2 = rng.randint(0, 3)
        # random homogeneous polys of weighted degrees 2*d1.. and 2*d2..
        q1 = GradedPoly({(d1 - 2 * b, b): rng.randint(1, 5) for b in range(d1 // 2 + 1)})
        q2 = GradedPoly({(d2 - 2 * b, b): rng.randint(1, 5) for b in range(d2 // 2 + 1)})
        assert weighted_degree(q1 * q2) == weighted_degree(q1) + weighted_degree(q2)


def test_poly_reduce_mod_p():
    assert poly_reduce_mod_p(D * 3 + E, 3) == GradedPolyModP({(0, 1): 1}, 3)
    assert poly_reduce_mod_p(D * F(1, 2), 5) == GradedPolyModP({(1, 0): 3}, 5)
    assert poly_reduce_mod_p(GradedPoly.zero(), 5).is_zero()
    with pytest.raises(NonIntegralAtP):
        poly_reduce_mod_p(E * F(1, 3), 3)


def test_graded_modp_arithmetic():
    p = 5
    a = GradedPolyModP({(1, 0): 3}, p)
    b = GradedPolyModP({(1, 0): 2, (0, 1): 1}, p)
    assert a + b == GradedPolyModP({(0, 1): 1}, p)
    assert a * b == GradedPolyModP({(2, 0): 1, (1, 1): 3}, p)
    assert (a - a).is_zero()
    with pytest.raises(PrimeMismatch):
        a + GradedPolyModP({(1, 0): 1}, 7)


def test_poly_text_round_trip_fixed():
    q = D * D * F(3, 2) + E * F(-1, 2)
    text = poly_to_text(q)
    assert text == "3/2*delta^2 + -1/2*eps"
    assert poly_from_text(text) == q
    assert poly_to_text(GradedPoly.zero()) == "0"
    assert poly_from_text("0") == GradedPoly.zero()
    assert poly_to_text(ONE * 7) == "7"
    # ordering: descending weighted degree, then descending delta exponent
    q2 = E + D * D + D + ONE * 2
    assert poly_to_text(q2) == "1*delta^2 + 1*eps + 1*delta + 2"


def test_poly_text_round_trip_random():
    rng = random.Random(31)
    for _ in range(100):
        terms = {}
        for _ in range(rng.randint(0, 6)):
            terms[(rng.randint(0, 4), rng.randint(0, 3))] = F(
                rng.randint(-9, 9), rng.randint(1, 9)
            )
        q = GradedPoly(terms)
        assert poly_from_text(poly_to_text(q)) == q
    with pytest.raises(BadParams):
        poly_from_text("3*gamma")
    with pytest.raises(BadParams):
        poly_from_text("")


def test_substitution():
    q = D * D * 3 + E * -1  # 3*delta^2 - eps
    assert q.substitute(1, 1) == 2
    assert q.substitute(F(-1, 8), 0) == F(3, 64)
    assert q.substitute_eps(1) == D * D * 3 - ONE
