"""Ternary m-sequences and the periodic crosscorrelation with their decimations."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import kernels
from .errors import BadDecimation, NonIntegerCorrelation, UnsupportedCharacteristic
from .field import FieldConfig


@dataclass(frozen=True, eq=False)
class MSequence:
    symbols: np.ndarray  # s_t = Tr(g^t), t = 0..n-1

    @property
    def period(self) -> int:
        return len(self.symbols)

    def shifted(self, tau: int) -> np.ndarray:
        return np.roll(self.symbols, -tau)

    def decimated(self, v: int) -> np.ndarray:
        n = self.period
        return self.symbols[(np.arange(n) * v) % n]


@dataclass
class CorrelationSpectrum:
    values: dict[int, int]  # correlation value -> number of shifts

    @property
    def distinct(self) -> list[int]:
        return sorted(self.values)

    @property
    def total(self) -> int:
        return sum(self.values.values())


def m_sequence(cfg: FieldConfig) -> MSequence:
    return MSequence(np.array(cfg.trace_table, dtype=np.int8))


def correlation_values(seq: MSequence, v: int, p: int = 3) -> np.ndarray:
    """C_v(tau) = sum_t w^(s_(t+tau) - s_(vt)) for every tau, as exact integers."""
    if p != 3:
        raise UnsupportedCharacteristic("exact correlation is implemented for p = 3")
    n = seq.period
    s = np.ascontiguousarray(seq.symbols, dtype=np.int8)
    minus_s = np.ascontiguousarray((-s) % p, dtype=np.int8)
    taus = np.arange(n, dtype=np.int64)
    # row tau counts t by (-s_(vt) + s_(tau+t)) mod 3
    counts = kernels.trace_counts(minus_s, 0, v % n, s, taus, 1, p)
    n0, n1, n2 = counts[:, 0], counts[:, 1], counts[:, 2]
    if np.any(n1 != n2):
        tau = int(np.flatnonzero(n1 != n2)[0])
        raise NonIntegerCorrelation(f"C_v({tau}) has a nonzero w-component")
    return n0 - n2


def crosscorrelation(seq: MSequence, v: int, cfg: FieldConfig | None = None) -> CorrelationSpectrum:
    n = seq.period
    if gcd(v, n) != 1:
        raise BadDecimation(f"gcd({v}, {n}) = {gcd(v, n)}; the decimation is not an m-sequence")
    p = cfg.p if cfg is not None else 3
    vals, freq = np.unique(correlation_values(seq, v, p), return_counts=True)
    return CorrelationSpectrum({int(a): int(b) for a, b in zip(vals, freq)})


def predicted_values(m: int, p: int = 3) -> list[int]:
    r = p ** ((m + 1) // 2)
    return [-1 - r, -1, -1 + r]
