"""Table-driven arithmetic in GF(p^m).

Elements are encoded as integers ``sum(c_k * p**k)`` where ``c_k`` are the
coordinates in the polynomial basis 1, a, ..., a^(m-1) and ``a`` is the class
of ``x`` modulo a primitive polynomial.  Every table is built once when the
field is constructed; afterwards a :class:`FieldConfig` is read-only and can be
shared freely between threads.

Logarithms are taken to base ``a``.  Zero has no logarithm and is given the
sentinel log :data:`ZERO_LOG` (-1) throughout the package.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np

from .eisenstein import OMEGA, OMEGA2, ONE, EisensteinInteger
from .errors import (
    BadParameters,
    DivisionByZero,
    NotIrreducible,
    NotPrimitive,
    TooLarge,
    UnsupportedCharacteristic,
    ZeroArgument,
)
from .poly import Polynomial, is_prime, prime_factors

ZERO_LOG = -1
MAX_FIELD_SIZE = 3**13

# constant term first; these are the moduli used by the worked examples
DEFAULT_MODULI = {
    (3, 3): (1, 2, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
}


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class FieldConfig:
    """GF(p^m) together with its log, antilog, trace and Zech tables."""

    def __init__(self, p: int, m: int, modulus: Polynomial):
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p**m
        self.n = self.q - 1
        self._build_tables()

    def _build_tables(self) -> None:
        p, m, q, n = self.p, self.m, self.q, self.n
        f = self.modulus.coeffs
        weights = p ** np.arange(m, dtype=np.int64)

        exp = np.empty(n, dtype=np.int64)
        log = np.full(q, ZERO_LOG, dtype=np.int64)
        vec = [1] + [0] * (m - 1)
        for k in range(n):
            code = sum(c * int(w) for c, w in zip(vec, weights))
            if k > 0 and code == 1:
                raise NotPrimitive(
                    f"root of {self.modulus} has order {k} < {n}"
                )
            exp[k] = code
            log[code] = k
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                vec = [(vec[i] - top * f[i]) % p for i in range(m)]
        self.weights = _readonly(weights)
        self.exp = _readonly(exp)
        self.log = _readonly(log)

        codes = np.arange(q, dtype=np.int64)
        digits = np.empty((q, m), dtype=np.int8)
        for k in range(m):
            digits[:, k] = (codes // int(weights[k])) % p
        self.digits = _readonly(digits)

        idx = np.arange(n, dtype=np.int64)
        acc = np.zeros(n, dtype=np.int64)
        for j in range(m):
            acc = self.add_codes(acc, exp[(idx * p**j) % n])
        if np.any(acc >= p):
            raise AssertionError("trace left the prime field; table bug")
        self.trace_table = _readonly(acc.astype(np.int8))
        self.zech = _readonly(log[self.add_codes(np.ones(n, dtype=np.int64), exp)])

    # -- vectorised primitives on integer codes -------------------------------

    def encode(self, digits: np.ndarray) -> np.ndarray:
        return (np.asarray(digits, dtype=np.int64) % self.p) @ self.weights

    def add_codes(self, x, y) -> np.ndarray:
        d = self.digits[np.asarray(x)].astype(np.int64) + self.digits[np.asarray(y)]
        return self.encode(d)

    def neg_codes(self, x) -> np.ndarray:
        return self.encode(-self.digits[np.asarray(x)].astype(np.int64))

    def sub_codes(self, x, y) -> np.ndarray:
        return self.add_codes(x, self.neg_codes(y))

    def mul_codes(self, x, y) -> np.ndarray:
        x, y = np.broadcast_arrays(np.asarray(x), np.asarray(y))
        lx, ly = self.log[x], self.log[y]
        out = self.exp[(lx + ly) % self.n]
        return np.where((lx < 0) | (ly < 0), 0, out)

    def pow_codes(self, x, e: int) -> np.ndarray:
        """x**e elementwise; 0**0 = 1, 0**e = 0 for e > 0."""
        x = np.asarray(x)
        lx = self.log[x]
        if e == 0:
            return np.ones_like(x, dtype=np.int64)
        if e < 0 and np.any(lx < 0):
            raise DivisionByZero("zero raised to a negative power")
        out = self.exp[(lx * (e % self.n)) % self.n]
        return np.where(lx < 0, 0, out)

    def trace_codes(self, x) -> np.ndarray:
        lx = self.log[np.asarray(x)]
        return np.where(lx < 0, 0, self.trace_table[lx % self.n])

    def antilog(self, k: int) -> int:
        return int(self.exp[k % self.n])

    # -- element construction -------------------------------------------------

    def __call__(self, value: int | Iterable[int]) -> FieldElement:
        """Element from a prime-field integer or a coordinate vector."""
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, int(value) % self.p)
        coords = list(value)
        if len(coords) > self.m:
            raise BadParameters(f"expected at most {self.m} coordinates")
        coords += [0] * (self.m - len(coords))
        return FieldElement(self, int(self.encode(coords)))

    def from_code(self, code: int) -> FieldElement:
        return FieldElement(self, int(code))

    def alpha_pow(self, k: int) -> FieldElement:
        return FieldElement(self, self.antilog(k))

    @cached_property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @cached_property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @cached_property
    def generator(self) -> FieldElement:
        return self.alpha_pow(1)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, c) for c in range(self.q)]

    def __repr__(self) -> str:
        return f"FieldConfig(p={self.p}, m={self.m}, modulus={self.modulus})"


class FieldElement:
    __slots__ = ("cfg", "code")

    def __init__(self, cfg: FieldConfig, code: int):
        self.cfg = cfg
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.cfg.digits[self.code])

    @property
    def log(self) -> int:
        """Discrete log base the generator, or ZERO_LOG for zero."""
        return int(self.cfg.log[self.code])

    @property
    def is_zero(self) -> bool:
        return self.code == 0

    def _lift(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.cfg is not self.cfg:
                raise BadParameters("elements of different fields")
            return other
        if isinstance(other, (int, np.integer)):
            return self.cfg(int(other))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.cfg, int(self.cfg.add_codes(self.code, o.code)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.cfg, int(self.cfg.neg_codes(self.code)))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.cfg, int(self.cfg.mul_codes(self.code, o.code)))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.code == 0:
            raise DivisionByZero("inverse of zero")
        return self.cfg.alpha_pow(-self.log)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, e: int) -> FieldElement:
        if self.code == 0:
            if e < 0:
                raise DivisionByZero("zero raised to a negative power")
            return self.cfg.one if e == 0 else self
        return self.cfg.alpha_pow(self.log * e)

    def trace(self) -> int:
        return trace(self)

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.cfg(int(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.cfg is other.cfg and self.code == other.code

    def __hash__(self):
        return hash((id(self.cfg), self.code))

    def __repr__(self):
        if self.code == 0:
            return "0"
        return f"a^{self.log}"


def is_primitive_polynomial(f: Polynomial) -> bool:
    """Irreducible with x of order p^deg - 1 modulo f."""
    if not f.is_monic or f.degree < 1 or not f.is_irreducible():
        return False
    n = f.p**f.degree - 1
    x = Polynomial.monomial(1, f.p)
    one = Polynomial.one(f.p)
    return all(x.powmod(n // r, f) != one for r in prime_factors(n))


def find_primitive_polynomial(p: int, m: int) -> Polynomial:
    """Tabled modulus if there is one, else the first primitive one in lexicographic order."""
    if (p, m) in DEFAULT_MODULI:
        return Polynomial(DEFAULT_MODULI[(p, m)], p)
    for k in range(1, p**m):
        lower = [(k // p**i) % p for i in range(m)]
        f = Polynomial(lower + [1], p)
        if lower[0] and is_primitive_polynomial(f):
            return f
    raise BadParameters(f"no primitive polynomial of degree {m} over GF({p})")


def _default_modulus(p: int, m: int) -> Polynomial:
    return find_primitive_polynomial(p, m)


@lru_cache(maxsize=32)
def _make_field(p: int, m: int, coeffs: tuple[int, ...]) -> FieldConfig:
    modulus = Polynomial(coeffs, p)
    if modulus.degree != m or not modulus.is_monic:
        raise BadParameters(f"modulus {modulus} is not monic of degree {m}")
    if not modulus.is_irreducible():
        raise NotIrreducible(f"{modulus} factors over GF({p})")
    return FieldConfig(p, m, modulus)


def make_field(p: int = 3, m: int = 3, modulus: Polynomial | str | None = None) -> FieldConfig:
    """Validated GF(p^m) whose generator is a root of ``modulus``.

    Results are cached, so repeated calls with the same arguments share tables.
    """
    if not is_prime(p) or p == 2:
        raise BadParameters(f"p={p} must be an odd prime")
    if m < 1:
        raise BadParameters("m must be positive")
    if p**m > MAX_FIELD_SIZE:
        raise TooLarge(f"GF({p}^{m}) exceeds the table size limit {MAX_FIELD_SIZE}")
    if modulus is None:
        modulus = _default_modulus(p, m)
    elif isinstance(modulus, str):
        modulus = Polynomial.parse(modulus, p)
    if modulus.p != p:
        raise BadParameters("modulus is over the wrong prime field")
    return _make_field(p, m, modulus.coeffs)


# -- module-level operations ---------------------------------------------------

def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def neg(x: FieldElement) -> FieldElement:
    return -x


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def power(x: FieldElement, e: int) -> FieldElement:
    return x**e


def trace(x: FieldElement, cfg: FieldConfig | None = None) -> int:
    """Absolute trace of ``x`` onto GF(p), read from the precomputed table."""
    cfg = cfg or x.cfg
    if x.code == 0:
        return 0
    return int(cfg.trace_table[x.log])


def chi(x: FieldElement) -> EisensteinInteger:
    """Canonical additive character w^Tr(x); only p = 3 is representable."""
    if x.cfg.p != 3:
        raise UnsupportedCharacteristic("exact characters are implemented for p = 3")
    return (ONE, OMEGA, OMEGA2)[trace(x)]


def is_square(x: FieldElement) -> bool:
    if x.code == 0:
        raise ZeroArgument("squareness is only defined on nonzero elements")
    return x.log % 2 == 0


def fixed_nonsquare(cfg: FieldConfig) -> FieldElement:
    """-1 when it is a nonsquare (m odd), else the generator itself."""
    minus_one = -cfg.one
    if not is_square(minus_one):
        return minus_one
    return cfg.generator


def other_nonsquare(cfg: FieldConfig, avoid: FieldElement) -> FieldElement:
    """Smallest odd power of the generator that differs from ``avoid``."""
    for k in range(1, cfg.n, 2):
        cand = cfg.alpha_pow(k)
        if cand != avoid:
            return cand
    raise BadParameters("field has a single nonsquare")


def subfield_logs(cfg: FieldConfig, ell: int) -> np.ndarray:
    """Logs of the nonzero elements of GF(p^ell) inside GF(p^m)."""
    if cfg.m % ell:
        raise BadParameters(f"GF({cfg.p}^{ell}) is not a subfield of GF({cfg.q})")
    step = cfg.n // (cfg.p**ell - 1)
    return np.arange(0, cfg.n, step, dtype=np.int64)


def subfield_trace_table(cfg: FieldConfig, ell: int) -> np.ndarray:
    """Length-n table of Tr from GF(p^ell) to GF(p), valid on subfield logs.

    Entries at logs outside the subfield are never read and are left at 0.
    """
    if ell == cfg.m:
        return cfg.trace_table
    logs = subfield_logs(cfg, ell)
    acc = np.zeros(len(logs), dtype=np.int64)
    for j in range(ell):
        acc = cfg.add_codes(acc, cfg.exp[(logs * cfg.p**j) % cfg.n])
    if np.any(acc >= cfg.p):
        raise AssertionError("subfield trace left the prime field; table bug")
    table = np.zeros(cfg.n, dtype=np.int8)
    table[logs] = acc
    return _readonly(table)


def in_subfield(x: FieldElement, ell: int) -> bool:
    """x lies in GF(p^ell) iff x^(p^ell) = x."""
    return x.code == 0 or (x.log * (x.cfg.p**ell - 1)) % x.cfg.n == 0
