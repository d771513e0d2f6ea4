"""Slow reference computations that avoid the log/antilog tables entirely.

Field elements are polynomials reduced modulo the defining polynomial, traces
are sums of Frobenius images and characters are complex roots of unity.
"""

import cmath
from functools import lru_cache

import numpy as np

from ternary_codes.poly import Polynomial


def x_power(k: int, f: Polynomial) -> Polynomial:
    return Polynomial.monomial(1, f.p).powmod(k, f)


def code_of(poly: Polynomial) -> int:
    return sum(c * poly.p**i for i, c in enumerate(poly.coeffs))


@lru_cache(maxsize=None)
def trace_of_power(k: int, f: Polynomial, ell: int | None = None) -> int:
    """Tr(x^k) from GF(p^ell) as sum_(j<ell) x^(k p^j) mod f, which must be a constant."""
    p = f.p
    total = Polynomial([], p)
    for j in range(ell or f.degree):
        total = total + x_power(k * p**j, f)
    assert total.degree <= 0, "trace left the prime field"
    return total[0] if total.coeffs else 0


def codeword(f: Polynomial, u: int, v: int, la: int | None, lb: int | None,
             ell_u: int | None = None, ell_v: int | None = None) -> list[int]:
    """c_i = Tr(a x^(iu)) + Tr(b x^(iv)) with a = x^la, b = x^lb (None for zero).

    Traces are taken from the subfields of degree ell_u, ell_v (default: m).
    """
    n = f.p**f.degree - 1
    out = []
    for i in range(n):
        s = 0
        if la is not None:
            s += trace_of_power((la + i * u) % n, f, ell_u)
        if lb is not None:
            s += trace_of_power((lb + i * v) % n, f, ell_v)
        out.append(s % f.p)
    return out


def weight_distribution(f: Polynomial, u: int, v: int) -> dict[int, int]:
    n = f.p**f.degree - 1
    logs = [None] + list(range(n))
    hist: dict[int, int] = {}
    for la in logs:
        for lb in logs:
            w = sum(1 for c in codeword(f, u, v, la, lb) if c)
            hist[w] = hist.get(w, 0) + 1
    return dict(sorted(hist.items()))


def complex_sum(f: Polynomial, u: int, v: int, la: int | None, lb: int | None) -> complex:
    """sum over x in GF(q) of exp(2 pi i Tr(a x^u + b x^v) / 3), x = 0 included."""
    n = f.p**f.degree - 1
    w = cmath.exp(2j * cmath.pi / f.p)
    total = 0j
    # x = 0 contributes w^0 (0^0 = 1 only matters when u or v is 0)
    t0 = 0
    if u % n == 0 and la is not None:
        t0 += trace_of_power(la, f)
    if v % n == 0 and lb is not None:
        t0 += trace_of_power(lb, f)
    total += w ** (t0 % f.p)
    for k in range(n):
        t = 0
        if la is not None:
            t += trace_of_power((la + k * u) % n, f)
        if lb is not None:
            t += trace_of_power((lb + k * v) % n, f)
        total += w ** (t % f.p)
    return total


def complex_crosscorrelation(seq, v: int) -> np.ndarray:
    s = np.asarray(seq, dtype=np.int64)
    n = len(s)
    w = np.exp(2j * np.pi / 3)
    t = np.arange(n)
    return np.array([np.sum(w ** ((s[(t + tau) % n] - s[(v * t) % n]) % 3)) for tau in range(n)])
