"""Cyclic codes C_(u,v,p,m) and their weight distributions.

The codeword for (a, b) has symbols ``c_i = Tr(a g^(iu)) + Tr(b g^(iv))``
with traces taken from the subfields GF(p^l_u), GF(p^l_v).  With
``a = g^la`` both terms are lookups at logs ``la + iu`` and ``lb + iv`` in a
trace table, which is what the kernels iterate over.

Cyclic shift maps c(a, b) to c(a g^u, b g^v), so when l_u = l_v = m the
enumeration only needs one ``a`` per coset of <g^u> in GF(q)*; see
:func:`weight_distribution`.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import kernels
from .cosets import coset_members
from .errors import BadParameters, CosetsOverlap, NonIntegerResult, SubfieldViolation, TooLarge
from .expsums import neg_log, sum_rows
from .families import applicability, table_for
from .field import FieldConfig, FieldElement, in_subfield, subfield_logs, subfield_trace_table

NAIVE_LIMIT = 5_000_000


@dataclass(frozen=True, eq=False)
class CodeSpec:
    cfg: FieldConfig
    u: int
    v: int
    ell_u: int
    ell_v: int

    @property
    def length(self) -> int:
        return self.cfg.n

    @property
    def dimension(self) -> int:
        return self.ell_u + self.ell_v

    @property
    def full_subfields(self) -> bool:
        return self.ell_u == self.ell_v == self.cfg.m

    def trace_tables(self) -> tuple[np.ndarray, np.ndarray]:
        return (
            subfield_trace_table(self.cfg, self.ell_u),
            subfield_trace_table(self.cfg, self.ell_v),
        )

    def __repr__(self) -> str:
        return f"CodeSpec(p={self.cfg.p}, m={self.cfg.m}, u={self.u}, v={self.v})"


def code_spec(cfg: FieldConfig, u: int, v: int) -> CodeSpec:
    """Validated code description; exponents are reduced modulo n."""
    u, v = u % cfg.n, v % cfg.n
    cu = coset_members(u, cfg.p, cfg.n)
    cv = coset_members(v, cfg.p, cfg.n)
    if cu[0] == cv[0]:
        raise CosetsOverlap(f"C_{u} and C_{v} coincide")
    return CodeSpec(cfg, u, v, len(cu), len(cv))


@dataclass(frozen=True)
class Codeword:
    symbols: tuple[int, ...]
    source: tuple[FieldElement, FieldElement]

    def __len__(self) -> int:
        return len(self.symbols)


def _symbols(spec: CodeSpec, la: int, lb: int) -> np.ndarray:
    cfg = spec.cfg
    ta, tb = spec.trace_tables()
    i = np.arange(cfg.n, dtype=np.int64)
    out = np.zeros(cfg.n, dtype=np.int64)
    if la >= 0:
        out += ta[(la + i * spec.u) % cfg.n]
    if lb >= 0:
        out += tb[(lb + i * spec.v) % cfg.n]
    return out % cfg.p


def codeword(spec: CodeSpec, a: FieldElement, b: FieldElement) -> Codeword:
    if not in_subfield(a, spec.ell_u):
        raise SubfieldViolation(f"a={a} is not in GF({spec.cfg.p}^{spec.ell_u})")
    if not in_subfield(b, spec.ell_v):
        raise SubfieldViolation(f"b={b} is not in GF({spec.cfg.p}^{spec.ell_v})")
    syms = _symbols(spec, a.log, b.log)
    return Codeword(tuple(int(s) for s in syms), (a, b))


def weight(cw: Codeword) -> int:
    return sum(1 for s in cw.symbols if s)


def cyclic_shift(cw: Codeword) -> tuple[int, ...]:
    """(c_0, ..., c_{n-1}) -> (c_1, ..., c_{n-1}, c_0), i.e. index i -> i + 1."""
    return cw.symbols[1:] + cw.symbols[:1]


@dataclass(frozen=True)
class WeightDistribution:
    counts: dict[int, int]
    length: int
    dimension: int

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def nonzero_weights(self) -> list[int]:
        return sorted(w for w in self.counts if w)

    @property
    def min_distance(self) -> int:
        return self.nonzero_weights[0]

    def as_dict(self) -> dict:
        return {
            "length": self.length,
            "dimension": self.dimension,
            "counts": {str(w): c for w, c in sorted(self.counts.items())},
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight", "count"])
        for w, c in sorted(self.counts.items()):
            writer.writerow([w, c])
        return buf.getvalue()

    def enumerator(self) -> str:
        terms = []
        for w, c in sorted(self.counts.items()):
            terms.append(str(c) if w == 0 else f"{c}y^{w}")
        return " + ".join(terms)


def _hist_to_dist(hist: np.ndarray, spec: CodeSpec) -> WeightDistribution:
    counts = {int(w): int(c) for w, c in enumerate(hist) if c}
    return WeightDistribution(counts, spec.length, spec.dimension)


def enumeration_cost(spec: CodeSpec, orbit: bool) -> int:
    """Number of codewords the chosen strategy evaluates."""
    q = spec.cfg.q
    if orbit:
        return (gcd(spec.u, spec.cfg.n) + 1) * q
    return spec.cfg.p ** spec.dimension


def weight_distribution(
    spec: CodeSpec,
    *,
    orbit: bool | None = None,
    threads: int | None = None,
    limit: int = NAIVE_LIMIT,
) -> WeightDistribution:
    """Exact weight distribution by enumeration.

    With ``orbit`` (the default when l_u = l_v = m) only a = g^i for
    0 <= i < gcd(u, n) and a = 0 are enumerated, each against every b; the
    nonzero-a counts are scaled by n / gcd(u, n).  This is exact because
    k -> (a g^(ku), b g^(kv)) covers each such coset gcd(u, n) times and
    preserves weight.
    """
    cfg = spec.cfg
    if orbit is None:
        orbit = spec.full_subfields
    if orbit and not spec.full_subfields:
        raise BadParameters("orbit enumeration needs l_u = l_v = m")
    cost = enumeration_cost(spec, orbit)
    if cost > limit:
        raise TooLarge(
            f"{cost} codewords x {cfg.n} positions exceeds the limit {limit}; "
            "use orbit enumeration or raise the limit"
        )
    ta, tb = spec.trace_tables()
    if orbit:
        g = gcd(spec.u, cfg.n)
        jobs = [(la, cfg.n // g) for la in range(g)] + [(-1, 1)]
        lbs = np.arange(-1, cfg.n, dtype=np.int64)
    else:
        jobs = [(-1, 1)] + [(int(la), 1) for la in subfield_logs(cfg, spec.ell_u)]
        lbs = np.concatenate([[-1], subfield_logs(cfg, spec.ell_v)]).astype(np.int64)

    def run(job):
        la, mult = job
        return mult * kernels.weight_histogram(ta, la, spec.u, tb, lbs, spec.v, cfg.p)

    if threads and threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            hists = list(pool.map(run, jobs))
    else:
        hists = [run(job) for job in jobs]
    return _hist_to_dist(np.sum(hists, axis=0), spec)


def weight_via_sums(spec: CodeSpec, a: FieldElement, b: FieldElement) -> int:
    """(p-1) p^(m-1) - (1/p) sum_{y in GF(p)*} T_(u,v)(ya, yb), evaluated exactly."""
    cfg = spec.cfg
    if not spec.full_subfields:
        raise BadParameters("the character-sum weight formula needs l_u = l_v = m")
    la, lb = a.log, b.log
    # y = 1 and y = 2 = -1
    s0, s1 = sum_rows(spec.u, spec.v, la, [lb], cfg)
    t0, t1 = sum_rows(spec.u, spec.v, int(neg_log(la, cfg)), neg_log([lb], cfg), cfg)
    re, im = int(s0[0] + t0[0]), int(s1[0] + t1[0])
    if im or re % cfg.p:
        raise NonIntegerResult(f"sum {re}{im:+}w is not a rational multiple of {cfg.p}")
    return (cfg.p - 1) * cfg.p ** (cfg.m - 1) - re // cfg.p


def table_distribution(table: str, m: int, p: int = 3) -> WeightDistribution:
    """Closed-form weight distribution I or II for odd m."""
    if m % 2 == 0 or m < 3:
        raise BadParameters(f"closed forms need odd m >= 3, got {m}")
    q = p**m
    top = (p - 1) * p ** (m - 1)
    r = p ** ((m - 1) // 2)
    if table == "I":
        d = (p - 1) * r // 2
        counts = {
            top - d: (q - 1) * (p ** (m - 1) + r),
            top: (q - 1) * (q - 2 * p ** (m - 1) + 1),
            top + d: (q - 1) * (p ** (m - 1) - r),
        }
    elif table == "II":
        d = (p - 1) * r
        counts = {
            top - d: (q - 1) * (p ** (m - 1) + r) // 2,
            top: (q - 1) * (q - p ** (m - 1) + 1),
            top + d: (q - 1) * (p ** (m - 1) - r) // 2,
        }
    else:
        raise BadParameters(f"unknown table {table!r}")
    counts[0] = 1
    return WeightDistribution(dict(sorted(counts.items())), q - 1, 2 * m)


def expected_distribution(family_id: int, m: int, p: int = 3, h: int | None = None) -> WeightDistribution:
    if family_id == 3 and h is None:
        h = (m + 1) // 2  # admissible for every odd m; the table does not depend on h
    reason = applicability(family_id, m, h)
    if reason:
        raise BadParameters(f"family {family_id}: {reason}")
    return table_distribution(table_for(family_id), m, p)
