"""Exact arithmetic in Z[w], w = exp(2*pi*i/3), using w^2 = -1 - w."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class EisensteinInteger:
    a0: int
    a1: int = 0

    @classmethod
    def from_counts(cls, n0: int, n1: int, n2: int) -> EisensteinInteger:
        """n0 + n1*w + n2*w^2, i.e. the sum of w^t over a multiset of exponents."""
        return cls(n0 - n2, n1 - n2)

    @classmethod
    def root(cls, k: int) -> EisensteinInteger:
        return (ONE, OMEGA, OMEGA2)[k % 3]

    @staticmethod
    def _coerce(other: object) -> EisensteinInteger | None:
        if isinstance(other, EisensteinInteger):
            return other
        if isinstance(other, int):
            return EisensteinInteger(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisensteinInteger(self.a0 + o.a0, self.a1 + o.a1)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInteger(-self.a0, -self.a1)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisensteinInteger(self.a0 - o.a0, self.a1 - o.a1)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.a0, self.a1, o.a0, o.a1
        return EisensteinInteger(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a0 == o.a0 and self.a1 == o.a1

    def __hash__(self):
        return hash((self.a0, self.a1)) if self.a1 else hash(self.a0)

    def conjugate(self) -> EisensteinInteger:
        return EisensteinInteger(self.a0 - self.a1, -self.a1)

    def norm(self) -> int:
        """|z|^2 = z * conj(z), always a non-negative integer."""
        return self.a0 * self.a0 - self.a0 * self.a1 + self.a1 * self.a1

    @property
    def is_rational(self) -> bool:
        return self.a1 == 0

    def __int__(self) -> int:
        if self.a1:
            raise ValueError(f"{self} is not a rational integer")
        return self.a0

    def exact_div(self, k: int) -> EisensteinInteger:
        if self.a0 % k or self.a1 % k:
            raise ArithmeticError(f"{self} is not divisible by {k}")
        return EisensteinInteger(self.a0 // k, self.a1 // k)

    def __str__(self):
        if not self.a1:
            return str(self.a0)
        return f"{self.a0}{self.a1:+}w"


ONE = EisensteinInteger(1, 0)
OMEGA = EisensteinInteger(0, 1)
OMEGA2 = EisensteinInteger(-1, -1)
ZERO = EisensteinInteger(0, 0)
