"""GF(q^2) built as GF(q)[y]/(y^2 - lam) for a nonsquare lam of GF(q).

Elements are encoded as ``c0 + q*c1`` for ``c0 + c1*y`` with c0, c1 codes of
the base field.  A generator is found by search and full log/antilog tables
are built, after which arithmetic is vectorised exactly as in the base field.
"""

from __future__ import annotations

import numpy as np

from .errors import ExtensionConstructionFailure, TooLarge
from .field import ZERO_LOG, FieldConfig, FieldElement, is_square
from .poly import prime_factors

MAX_EXTENSION_SIZE = 3**12


class QuadraticExtension:
    def __init__(self, base: FieldConfig, lam: FieldElement):
        if base.q**2 > MAX_EXTENSION_SIZE:
            raise TooLarge(f"GF({base.q}^2) is too large for full tables")
        if lam.is_zero or is_square(lam):
            raise ExtensionConstructionFailure(f"{lam} is a square; y^2 - lam is reducible")
        self.base = base
        self.lam = lam.code
        self.q = base.q**2
        self.n = self.q - 1
        self._build()

    # scalar arithmetic, used only while searching for a generator
    def _mul_scalar(self, x: int, y: int) -> int:
        b, q = self.base, self.base.q
        x0, x1, y0, y1 = x % q, x // q, y % q, y // q
        m = b.mul_codes
        c0 = int(b.add_codes(m(x0, y0), m(m(x1, y1), self.lam)))
        c1 = int(b.add_codes(m(x0, y1), m(x1, y0)))
        return c0 + q * c1

    def _try_generator(self, g: int) -> np.ndarray | None:
        # order test first, then the sequential power table
        for r in prime_factors(self.n):
            if self._pow_scalar(g, self.n // r) == 1:
                return None
        exp = np.empty(self.n, dtype=np.int64)
        cur = 1
        for k in range(self.n):
            exp[k] = cur
            cur = self._mul_scalar(cur, g)
        return exp

    def _pow_scalar(self, x: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_scalar(result, x)
            x = self._mul_scalar(x, x)
            e >>= 1
        return result

    def _build(self) -> None:
        bq = self.base.q
        for g in range(bq, self.q):  # elements with nonzero y-coordinate first
            exp = self._try_generator(g)
            if exp is not None:
                break
        else:
            raise ExtensionConstructionFailure("no generator of GF(q^2)* found")
        log = np.full(self.q, ZERO_LOG, dtype=np.int64)
        log[exp] = np.arange(self.n)
        if np.any(log[1:] < 0):
            raise ExtensionConstructionFailure("power table does not cover the group")
        self.generator = int(g)
        self.exp, self.log = exp, log

    # vectorised arithmetic on codes
    def split(self, x):
        x = np.asarray(x, dtype=np.int64)
        return x % self.base.q, x // self.base.q

    def add(self, x, y):
        x0, x1 = self.split(x)
        y0, y1 = self.split(y)
        b = self.base
        return b.add_codes(x0, y0) + b.q * b.add_codes(x1, y1)

    def neg(self, x):
        x0, x1 = self.split(x)
        return self.base.neg_codes(x0) + self.base.q * self.base.neg_codes(x1)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        x, y = np.broadcast_arrays(np.asarray(x), np.asarray(y))
        lx, ly = self.log[x], self.log[y]
        return np.where((lx < 0) | (ly < 0), 0, self.exp[(lx + ly) % self.n])

    def pow(self, x, e: int):
        x = np.asarray(x)
        lx = self.log[x]
        if e == 0:
            return np.ones_like(x, dtype=np.int64)
        return np.where(lx < 0, 0, self.exp[(lx * (e % self.n)) % self.n])

    def antilog(self, k: int) -> int:
        return int(self.exp[k % self.n])

    def embed(self, x: FieldElement) -> int:
        return x.code
