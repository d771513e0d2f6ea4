import pytest
from hypothesis import given, strategies as st

from ternary_codes.errors import BadParameters
from ternary_codes.poly import Polynomial, is_prime, prime_factors

coeff_lists = st.lists(st.integers(0, 2), max_size=8)


def test_parse_both_notations():
    assert Polynomial.parse("1 2 0 1", 3) == Polynomial.parse("x^3 + 2x + 1", 3)
    assert Polynomial.parse("x^3 - x + 1", 3).coeffs == (1, 2, 0, 1)
    assert Polynomial.parse("2*x^2", 3).coeffs == (0, 0, 2)


@pytest.mark.parametrize("bad", ["^3", "x^", "y + 1", "-", "1 a"])
def test_parse_rejects(bad):
    with pytest.raises(BadParameters):
        Polynomial.parse(bad, 3)


def test_str_round_trip():
    text = "x^6 + 2x^3 + 2x^2 + x + 2"
    assert str(Polynomial.parse(text, 3)) == text


def test_zero_polynomial():
    z = Polynomial([0, 0], 3)
    assert z.is_zero and z.degree == -1 and str(z) == "0"


@pytest.mark.parametrize("coeffs, irreducible", [
    ((1, 2, 0, 1), True),            # x^3 + 2x + 1
    ((1, 2, 0, 0, 0, 1), True),      # x^5 + 2x + 1
    ((1, 0, 2, 0, 0, 0, 0, 1), True),
    ((2, 0, 1), False),              # x^2 + 2 = (x - 1)(x + 1)
    ((1, 0, 1), True),               # x^2 + 1, -1 is a nonsquare mod 3
    ((0, 1, 0, 1), False),
])
def test_irreducibility(coeffs, irreducible):
    assert Polynomial(coeffs, 3).is_irreducible() is irreducible


def test_irreducible_count_degree_3():
    # monic irreducible cubics over GF(3): (3^3 - 3) / 3 = 8
    count = sum(Polynomial([a, b, c, 1], 3).is_irreducible()
                for a in range(3) for b in range(3) for c in range(3))
    assert count == 8


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_divmod_identity(a, b):
    pa, pb = Polynomial(a, 3), Polynomial(b, 3)
    q, r = divmod(pa, pb)
    assert q * pb + r == pa
    assert r.degree < pb.degree


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    pa, pb, pc = (Polynomial(x, 3) for x in (a, b, c))
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert pa * pb == pb * pa
    assert (pa - pb) + pb == pa


@given(coeff_lists, coeff_lists)
def test_gcd_divides(a, b):
    pa, pb = Polynomial(a, 3), Polynomial(b, 3)
    g = pa.gcd(pb)
    if not g.is_zero:
        assert (pa % g).is_zero and (pb % g).is_zero


def test_primes():
    assert prime_factors(2186) == [2, 1093]
    assert prime_factors(728) == [2, 7, 13]
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
