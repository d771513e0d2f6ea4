"""Exact exponential sums over GF(3^m) and checks of the identities built on them.

Every sum here has the shape ``sum_x chi(a x^u + b x^v)``.  Because the trace
is additive, ``Tr(a x^u + b x^v) = Tr(a x^u) + Tr(b x^v)`` and with
``x = g^i`` both terms are table lookups at logs ``la + i*u`` and
``lb + i*v``.  A sum is therefore three counters (how often the trace is
0, 1, 2), turned into ``N0 + N1 w + N2 w^2`` in Z[w].  No floating point is
involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from . import kernels
from .eisenstein import EisensteinInteger
from .errors import BadGcd, BadParameters, NonIntegerResult, NotANonsquare, UnsupportedCharacteristic
from .field import FieldConfig, FieldElement, is_square

EXHAUSTIVE_LIMIT = 3**10


def _require_ternary(cfg: FieldConfig) -> None:
    if cfg.p != 3:
        raise UnsupportedCharacteristic("exact character sums are implemented for p = 3")


def _all_logs(cfg: FieldConfig) -> np.ndarray:
    """Logs of every field element, zero first (as -1)."""
    return np.arange(-1, cfg.n, dtype=np.int64)


def neg_log(lg, cfg: FieldConfig):
    """Log of -x given the log of x (-1 = n/2 in log space)."""
    lg = np.asarray(lg, dtype=np.int64)
    return np.where(lg < 0, -1, (lg + cfg.n // 2) % cfg.n)


def _shift_log(lg, k: int, cfg: FieldConfig):
    """Log of x * g^k given the log of x."""
    lg = np.asarray(lg, dtype=np.int64)
    return np.where(lg < 0, -1, (lg + k) % cfg.n)


def sum_rows(u: int, v: int, la: int, lbs, cfg: FieldConfig) -> tuple[np.ndarray, np.ndarray]:
    """Components (a0, a1) of T_(u,v)(a, b) for fixed log(a) and a batch of log(b).

    The x = 0 term uses 0^0 = 1, so it contributes Tr(a [u=0] + b [v=0]).
    """
    _require_ternary(cfg)
    n = cfg.n
    lbs = np.ascontiguousarray(lbs, dtype=np.int64)
    counts = kernels.trace_counts(cfg.trace_table, la, u % n, cfg.trace_table, lbs, v % n, 3)
    zero_tr = np.zeros(len(lbs), dtype=np.int64)
    if u == 0 and la >= 0:
        zero_tr += cfg.trace_table[la]
    if v == 0:
        zero_tr += np.where(lbs >= 0, cfg.trace_table[lbs % n], 0)
    counts[np.arange(len(lbs)), zero_tr % 3] += 1
    return counts[:, 0] - counts[:, 2], counts[:, 1] - counts[:, 2]


def t_sum(u: int, v: int, a: FieldElement, b: FieldElement, cfg: FieldConfig | None = None) -> EisensteinInteger:
    """sum over all x in GF(q) of chi(a x^u + b x^v), exactly in Z[w]."""
    cfg = cfg or a.cfg
    a0, a1 = sum_rows(u, v, a.log, [b.log], cfg)
    return EisensteinInteger(int(a0[0]), int(a1[0]))


def r_sum(h: int, a: FieldElement, b: FieldElement, cfg: FieldConfig | None = None) -> EisensteinInteger:
    """sum_x chi(a x^(p^h + 1) + b x^2)."""
    cfg = cfg or a.cfg
    return t_sum(cfg.p**h + 1, 2, a, b, cfg)


@dataclass
class SumValueDistribution:
    """Frequency of each (rational integer) sum value over all (a, b)."""

    entries: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def __eq__(self, other):
        if isinstance(other, SumValueDistribution):
            return self.entries == other.entries
        if isinstance(other, dict):
            return self.entries == other
        return NotImplemented


def _tally(values: list[np.ndarray]) -> dict[int, int]:
    keys, freq = np.unique(np.concatenate(values), return_counts=True)
    return {int(k): int(f) for k, f in zip(keys, freq)}


def lemma2_distribution(h: int, cfg: FieldConfig) -> SumValueDistribution:
    """Distribution of sum_{y in GF(3)*} (R(ya, yb) + R(-ya, yb)) over GF(q)^2.

    For p = 3 that is R(a,b) + R(-a,b) + R(-a,-b) + R(a,-b).  Any value with a
    nonzero w-component aborts with :class:`NonIntegerResult`.
    """
    _require_ternary(cfg)
    if cfg.m % 2 == 0 or gcd(cfg.m, h) != 1:
        raise BadParameters(f"need m odd and gcd(m, h) = 1, got m={cfg.m}, h={h}")
    e = cfg.p**h + 1
    lbs = _all_logs(cfg)
    flip = neg_log(lbs, cfg) + 1  # index of -b within lbs
    values = []
    for la in range(-1, cfg.n):
        p0, p1 = sum_rows(e, 2, la, lbs, cfg)
        m0, m1 = sum_rows(e, 2, int(neg_log(la, cfg)), lbs, cfg)
        s0 = p0 + m0 + p0[flip] + m0[flip]
        s1 = p1 + m1 + p1[flip] + m1[flip]
        if np.any(s1):
            bad = int(np.flatnonzero(s1)[0])
            raise NonIntegerResult(
                f"non-rational value {EisensteinInteger(int(s0[bad]), int(s1[bad]))} "
                f"at log a={la}, log b={int(lbs[bad])}"
            )
        values.append(s0)
    return SumValueDistribution(_tally(values))


def lemma2_closed_form(m: int, p: int = 3) -> dict[int, int]:
    """The four-valued distribution predicted in closed form (m odd)."""
    if m % 2 == 0:
        raise BadParameters("closed form needs m odd")
    q = p**m
    r = p ** ((m - 1) // 2)
    big = (p - 1) * p ** ((m + 1) // 2)
    return {
        2 * (p - 1) * q: 1,
        big: (p ** (m - 1) + r) * (q - 1),
        0: (q - 2 * p ** (m - 1) + 1) * (q - 1),
        -big: (p ** (m - 1) - r) * (q - 1),
    }


@dataclass
class HalvingIdentityReport:
    u: int
    v: int
    s: int
    nonsquare_log: int
    checked: int = 0
    exhaustive: bool = False
    failures: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures


def _lemma_key_rows(u, v, s, lam_log, la, lbs, cfg):
    """Boolean mask: 2 T_(u,v)(a,b) == T_(su,sv)(a,b) + T_(su,sv)(a l^u, b l^v)."""
    l0, l1 = sum_rows(u, v, la, lbs, cfg)
    r0, r1 = sum_rows(s * u, s * v, la, lbs, cfg)
    la2 = int(_shift_log(la, u * lam_log, cfg))
    lbs2 = _shift_log(lbs, v * lam_log, cfg)
    t0, t1 = sum_rows(s * u, s * v, la2, lbs2, cfg)
    return (r0 + t0 == 2 * l0) & (r1 + t1 == 2 * l1)


def lemma_key_check(
    u: int,
    v: int,
    s: int,
    lam: FieldElement,
    cfg: FieldConfig,
    *,
    samples: int = 1000,
    seed: int = 0,
    exhaustive: bool | None = None,
) -> HalvingIdentityReport:
    """Check the halving identity for T_(u,v) under x -> x^s with gcd(s, q-1) = 2.

    Runs over every (a, b) when q^2 <= 3^10 (or ``exhaustive=True``),
    otherwise over ``samples`` seeded random pairs.
    """
    _require_ternary(cfg)
    if gcd(s, cfg.n) != 2:
        raise BadGcd(f"gcd({s}, {cfg.n}) = {gcd(s, cfg.n)}, need 2")
    if lam.is_zero or is_square(lam):
        raise NotANonsquare(f"{lam} is not a nonsquare")
    if exhaustive is None:
        exhaustive = cfg.q**2 <= EXHAUSTIVE_LIMIT
    report = HalvingIdentityReport(u, v, s, lam.log, exhaustive=exhaustive)
    if exhaustive:
        lbs = _all_logs(cfg)
        for la in range(-1, cfg.n):
            ok = _lemma_key_rows(u, v, s, lam.log, la, lbs, cfg)
            report.checked += len(lbs)
            report.failures.extend((la, int(lb)) for lb in lbs[~ok])
        return report
    rng = np.random.default_rng(seed)
    pairs = rng.integers(-1, cfg.n, size=(samples, 2))
    for la, lb in pairs:
        ok = _lemma_key_rows(u, v, s, lam.log, int(la), [lb], cfg)
        report.checked += 1
        if not ok[0]:
            report.failures.append((int(la), int(lb)))
    return report


def brute_t_sum(u: int, v: int, a: FieldElement, b: FieldElement) -> EisensteinInteger:
    """Reference evaluation through element arithmetic; slow, for cross-checks."""
    from .field import chi

    total = EisensteinInteger(0, 0)
    for x in a.cfg.elements():
        total = total + chi(a * x**u + b * x**v)
    return total
