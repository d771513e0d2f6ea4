"""Dense polynomials over the prime field GF(p).

Coefficients are stored constant term first, trailing zeros stripped, so the
zero polynomial has an empty coefficient tuple.  The text format used by the
CLI and by test fixtures is the same ordering, space separated; the usual
term notation is accepted as well::

    Polynomial.parse("1 2 0 1", 3)      # x^3 + 2x + 1
    Polynomial.parse("x^3 + 2x + 1", 3)
"""

from __future__ import annotations

import re
from functools import reduce
from typing import Iterable, Sequence

from .errors import BadParameters


def _strip(coeffs: Iterable[int], p: int) -> tuple[int, ...]:
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


_TERM = re.compile(r"(-?\d*)(x)?(?:\^(\d+))?")


class Polynomial:
    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: Sequence[int], p: int):
        if not is_prime(p):
            raise BadParameters(f"modulus {p} is not prime")
        self.p = p
        self.coeffs = _strip(coeffs, p)

    @classmethod
    def parse(cls, text: str, p: int) -> Polynomial:
        """Either a coefficient list "1 2 0 1" (constant first) or "x^3 + 2x + 1"."""
        if "x" in text:
            return cls._parse_terms(text, p)
        try:
            coeffs = [int(tok) for tok in text.replace(",", " ").split()]
        except ValueError as exc:
            raise BadParameters(f"bad polynomial text {text!r}") from exc
        return cls(coeffs, p)

    @classmethod
    def _parse_terms(cls, text: str, p: int) -> Polynomial:
        compact = text.replace(" ", "").replace("*", "").replace("-", "+-")
        coeffs: dict[int, int] = {}
        for term in filter(None, compact.split("+")):
            match = _TERM.fullmatch(term)
            if not match or (not match.group(2) and (match.group(3) or match.group(1) in ("", "-"))):
                raise BadParameters(f"bad polynomial term {term!r} in {text!r}")
            coef, var, exp = match.groups()
            if var:
                c = -1 if coef == "-" else int(coef) if coef else 1
                e = int(exp) if exp else 1
            else:
                c, e = int(coef), 0
            coeffs[e] = coeffs.get(e, 0) + c
        dense = [0] * (max(coeffs) + 1 if coeffs else 0)
        for e, c in coeffs.items():
            dense[e] = c
        return cls(dense, p)

    @classmethod
    def monomial(cls, degree: int, p: int, coeff: int = 1) -> Polynomial:
        return cls([0] * degree + [coeff], p)

    @classmethod
    def one(cls, p: int) -> Polynomial:
        return cls([1], p)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _check(self, other: Polynomial) -> None:
        if self.p != other.p:
            raise BadParameters("polynomials over different prime fields")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        k = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] + other[i] for i in range(k)], self.p)

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs], self.p)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial([c * other for c in self.coeffs], self.p)
        self._check(other)
        if self.is_zero or other.is_zero:
            return Polynomial([], self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out, self.p)

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dv = other.degree
        inv_lead = pow(other.coeffs[-1], -1, p)
        quot = [0] * max(len(rem) - dv, 0)
        for k in range(len(rem) - 1, dv - 1, -1):
            c = rem[k] * inv_lead % p
            if c:
                quot[k - dv] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dv + j] = (rem[k - dv + j] - c * b) % p
        return Polynomial(quot, p), Polynomial(rem[:dv] if dv > 0 else [], p)

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        if self.is_zero:
            return self
        return self * pow(self.coeffs[-1], -1, self.p)

    def gcd(self, other: Polynomial) -> Polynomial:
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def powmod(self, e: int, mod: Polynomial) -> Polynomial:
        result = Polynomial.one(self.p) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def is_irreducible(self) -> bool:
        """Rabin's test: x^(p^d) = x mod f and gcd(x^(p^(d/r)) - x, f) = 1."""
        d = self.degree
        if d < 1:
            return False
        if d == 1:
            return True
        x = Polynomial.monomial(1, self.p)
        if (x.powmod(self.p**d, self) - x) % self != Polynomial([], self.p):
            return False
        for r in prime_factors(d):
            g = (x.powmod(self.p ** (d // r), self) - x).gcd(self)
            if g.degree > 0:
                return False
        return True

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "x" if k == 1 else f"x^{k}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)}, p={self.p})"


def product(polys: Iterable[Polynomial], p: int) -> Polynomial:
    return reduce(lambda a, b: a * b, polys, Polynomial.one(p))
