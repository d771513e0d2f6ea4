import pytest
from hypothesis import given, strategies as st

import oracles
from ternary_codes.cosets import (
    all_cosets, coset, coset_members, cosets_disjoint, cyclotomic_product, minimal_polynomial,
    parity_check_polynomial,
)
from ternary_codes.errors import CosetsOverlap
from ternary_codes.field import make_field
from ternary_codes.poly import Polynomial


def evaluate_at_power(g: Polynomial, k: int, f: Polynomial) -> Polynomial:
    """g(x^k) reduced mod f, by Horner's rule on polynomials."""
    point = oracles.x_power(k, f)
    acc = Polynomial([], f.p)
    for c in reversed(g.coeffs):
        acc = (acc * point + Polynomial([c], f.p)) % f
    return acc


def test_coset_examples(f3):
    assert coset(1, f3).members == (1, 3, 9)
    assert coset(20, f3).members == (8, 20, 24)
    assert coset(20, f3).leader == 8
    assert coset(0, f3).members == (0,)
    assert coset(13, f3).members == (13,)


def test_cosets_partition(f5):
    seen = [a for c in all_cosets(f5) for a in c.members]
    assert sorted(seen) == list(range(f5.n))


@given(st.integers(0, 10_000))
def test_coset_closed_under_p(a):
    n = 3**7 - 1
    members = coset_members(a, 3, n)
    assert all((x * 3) % n in members for x in members)
    assert len(members) in (1, 7)


def test_disjointness(f3):
    assert cosets_disjoint(1, 20, f3)
    assert not cosets_disjoint(1, 9, f3)
    with pytest.raises(CosetsOverlap):
        parity_check_polynomial(1, 3, f3)


@pytest.mark.parametrize("m", [3, 5])
def test_minimal_polynomials_vanish_at_their_roots(m):
    cfg = make_field(3, m)
    for c in all_cosets(cfg):
        g = minimal_polynomial(c.leader, cfg)
        assert g.is_monic and g.degree == c.size
        assert g.is_irreducible()
        for k in c.members:
            assert evaluate_at_power(g, -k % cfg.n, cfg.modulus).is_zero


def test_minimal_polynomial_of_inverse_generator(f3):
    # a^(-1) has the reciprocal of x^3 + 2x + 1 as minimal polynomial, made monic
    assert minimal_polynomial(1, f3) == Polynomial([1, 0, 2, 1], 3).monic()
    assert minimal_polynomial(0, f3) == Polynomial([2, 1], 3)


@pytest.mark.parametrize("m", [3, 5])
def test_cyclotomic_product(m):
    cfg = make_field(3, m)
    assert cyclotomic_product(cfg) == Polynomial.monomial(cfg.n, 3) - Polynomial.one(3)


@pytest.mark.parametrize("m, v, text", [
    (3, 20, "x^6 + 2x^3 + 2x^2 + x + 2"),
    (5, 182, "x^10 + 2x^9 + 2x^8 + 2x^7 + 2x^5 + x^4 + 2x^3 + x^2 + x + 2"),
    (7, 1640, "x^14 + 2x^13 + x^12 + x^11 + x^9 + 2x^8 + 2x^7 + x^6 + 2x^3 + x^2 + x + 2"),
])
def test_parity_check_polynomials(m, v, text):
    assert str(parity_check_polynomial(1, v, make_field(3, m))) == text
