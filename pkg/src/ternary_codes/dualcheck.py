"""Dual-code parameters of C_(u,v,3,m).

A vector x is in the dual iff sum_i x_i g^(iu) = 0 and sum_i x_i g^(iv) = 0
(trace duality), so a dual word of weight w is a set of w positions with
nonzero coefficients annihilating both "moments".  Small weights are found
from a table of all coefficient-weighted position pairs keyed on the pair's
moment values in GF(q)^2; two disjoint pairs whose keys agree up to sign give
a weight-4 word.  Keys are built from Zech logarithms, and a separate brute
force over the generator matrix serves as the oracle.

Also here: the C1-C3 conditions characterising d = 4, the sphere-packing
bound, and the solution parametrisations used in the dual-distance proofs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb, gcd

import numpy as np

from . import kernels
from .codes import CodeSpec, codeword
from .cosets import coset_members
from .errors import BadCongruence, BadCosetSize, BadParameters, CosetsOverlap, TooLarge, UnsupportedCharacteristic
from .extension import QuadraticExtension
from .field import FieldConfig, fixed_nonsquare

MAX_SEARCH_WEIGHT = 5


@dataclass(frozen=True)
class AboveLimit:
    """No dual word of weight <= limit exists."""

    limit: int

    def __str__(self) -> str:
        return f">{self.limit}"


@dataclass(frozen=True)
class DualWord:
    positions: tuple[int, ...]
    coeffs: tuple[int, ...]

    @property
    def weight(self) -> int:
        return len(self.positions)

    def dense(self, n: int) -> np.ndarray:
        out = np.zeros(n, dtype=np.int64)
        out[list(self.positions)] = self.coeffs
        return out


# -- C1, C2, C3 ---------------------------------------------------------------

@dataclass
class ConditionReport:
    v: int
    c1: bool
    c2: bool
    c3: bool
    c2_solutions: list[int]
    c3_solutions: list[int]

    @property
    def all_hold(self) -> bool:
        return self.c1 and self.c2 and self.c3

    @property
    def witnesses(self) -> dict[str, list[int]]:
        """Field codes that break C2 / C3 (extra solutions, or the expected one missing)."""
        return {
            "c2": sorted(set(self.c2_solutions) ^ {1}),
            "c3": sorted(set(self.c3_solutions) ^ {0}),
        }


def check_conditions(v: int, cfg: FieldConfig) -> ConditionReport:
    """Exhaustively evaluate C1 (v even), C2 and C3 over GF(q), with 0^v = 0."""
    if cfg.p != 3:
        raise UnsupportedCharacteristic("the conditions are stated for p = 3")
    cv = coset_members(v, cfg.p, cfg.n)
    if len(cv) != cfg.m:
        raise BadCosetSize(f"|C_{v % cfg.n}| = {len(cv)}, need {cfg.m}")
    if 1 in cv:
        raise CosetsOverlap(f"v={v} lies in C_1")
    x = np.arange(cfg.q, dtype=np.int64)
    one = np.ones_like(x)
    xv = cfg.pow_codes(x, v)
    # C2 on GF(q)*: (-x-1)^v + x^v + 1 = 0
    lhs2 = cfg.add_codes(cfg.add_codes(cfg.pow_codes(cfg.neg_codes(cfg.add_codes(x, one)), v), xv), one)
    sol2 = [int(c) for c in x[(lhs2 == 0) & (x != 0)]]
    # C3 on GF(q): (x+1)^v - x^v - 1 = 0
    lhs3 = cfg.sub_codes(cfg.sub_codes(cfg.pow_codes(cfg.add_codes(x, one), v), xv), one)
    sol3 = [int(c) for c in x[lhs3 == 0]]
    return ConditionReport(v, v % 2 == 0, sol2 == [1], sol3 == [0], sol2, sol3)


# -- minimum distance search --------------------------------------------------

def _pack(l1, l2, n):
    return (np.asarray(l1) + 1) * (n + 1) + (np.asarray(l2) + 1)


def _negate(lg, n):
    lg = np.asarray(lg)
    return np.where(lg < 0, -1, (lg + n // 2) % n)


def _canonical(l1, l2, n):
    """Key identifying a moment pair K with -K; also reports which sign was kept."""
    k = _pack(l1, l2, n)
    nk = _pack(_negate(l1, n), _negate(l2, n), n)
    return np.minimum(k, nk), k <= nk


def _check_ternary(spec: CodeSpec) -> None:
    if spec.cfg.p != 3:
        raise UnsupportedCharacteristic("dual search is implemented for p = 3")


def find_dual_word(spec: CodeSpec, limit: int = 4) -> DualWord | None:
    """A minimum-weight dual word of weight <= ``limit``, or None."""
    _check_ternary(spec)
    if not 1 <= limit <= MAX_SEARCH_WEIGHT:
        raise BadParameters(f"limit must be in 1..{MAX_SEARCH_WEIGHT}")
    cfg = spec.cfg
    n = cfg.n
    # weight 1 is impossible: g^(iu) is never zero
    if limit < 2:
        return None
    i, j, c, l1, l2 = kernels.pair_sums(cfg.zech, spec.u, spec.v)
    zero = np.flatnonzero((l1 < 0) & (l2 < 0))
    if len(zero):
        k = zero[0]
        return DualWord((int(i[k]), int(j[k])), (1, int(c[k])))
    if limit < 3:
        return None

    pkey, psign = _canonical(l1, l2, n)
    idx = np.arange(n, dtype=np.int64)
    skey, ssign = _canonical((idx * spec.u) % n, (idx * spec.v) % n, n)

    # weight 3: pair + d * single = 0
    order = np.argsort(skey, kind="stable")
    sorted_s = skey[order]
    pos = np.searchsorted(sorted_s, pkey)
    hit = np.flatnonzero((pos < n) & (sorted_s[np.minimum(pos, n - 1)] == pkey))
    for k in hit:
        r = pos[k]
        while r < n and sorted_s[r] == pkey[k]:
            s = int(order[r])
            if s != i[k] and s != j[k]:
                # same kept sign => pair == single, so the single gets coefficient -1
                d = 2 if psign[k] == ssign[s] else 1
                return _sorted_word((int(i[k]), int(j[k]), s), (1, int(c[k]), d))
            r += 1
    if limit < 4:
        return None

    # weight 4: two disjoint pairs with keys equal up to sign
    order = np.argsort(pkey, kind="stable")
    ks, ii, jj = pkey[order], i[order], j[order]
    same = ks[1:] == ks[:-1]
    disjoint = (
        (ii[1:] != ii[:-1]) & (ii[1:] != jj[:-1]) & (jj[1:] != ii[:-1]) & (jj[1:] != jj[:-1])
    )
    adj = np.flatnonzero(same & disjoint)
    if len(adj):
        return _four(order[adj[0]], order[adj[0] + 1], i, j, c, psign)
    starts = np.flatnonzero(np.diff(np.concatenate([[-1], ks])) != 0)
    sizes = np.diff(np.concatenate([starts, [len(ks)]]))
    for st, sz in zip(starts[sizes > 2], sizes[sizes > 2]):
        members = order[st:st + sz]
        for x, y in combinations(members, 2):
            if not {i[x], j[x]} & {i[y], j[y]}:
                return _four(x, y, i, j, c, psign)
    if limit < 5:
        return None
    return _find_weight5(spec, i, j, c, pkey, psign)


def _sorted_word(positions, coeffs) -> DualWord:
    pairs = sorted(zip(positions, coeffs))
    return DualWord(tuple(p for p, _ in pairs), tuple(int(q) % 3 for _, q in pairs))


def _four(x, y, i, j, c, sign) -> DualWord:
    # equal kept sign => K_x = K_y, so subtract: second pair gets -(1, c)
    scale = 2 if sign[x] == sign[y] else 1
    return _sorted_word(
        (int(i[x]), int(j[x]), int(i[y]), int(j[y])),
        (1, int(c[x]), scale, scale * int(c[y])),
    )


def _find_weight5(spec, i, j, c, pkey, psign) -> DualWord | None:
    """Pair + triple meet in the middle; only for short codes."""
    cfg = spec.cfg
    n = cfg.n
    if comb(n, 3) * 4 > 20_000_000:
        raise TooLarge("weight-5 search is limited to short codes")
    # triple keys: pair (i, j, c) plus d * single k, k > j
    rows = []
    for k in range(n):
        sel = np.flatnonzero(j < k)
        if not len(sel):
            continue
        for d in (1, 2):
            ek = (k * np.array([spec.u, spec.v]) + (0 if d == 1 else n // 2)) % n
            t1 = _zech_add(cfg, _signed_log(pkey, psign, sel, n, 0), ek[0])
            t2 = _zech_add(cfg, _signed_log(pkey, psign, sel, n, 1), ek[1])
            rows.append((sel, np.full(len(sel), k), np.full(len(sel), d), t1, t2))
    sel = np.concatenate([r[0] for r in rows])
    kk = np.concatenate([r[1] for r in rows])
    dd = np.concatenate([r[2] for r in rows])
    tkey, tsign = _canonical(np.concatenate([r[3] for r in rows]), np.concatenate([r[4] for r in rows]), n)
    order = np.argsort(pkey, kind="stable")
    sp = pkey[order]
    pos = np.searchsorted(sp, tkey)
    for t in np.flatnonzero((pos < len(sp)) & (sp[np.minimum(pos, len(sp) - 1)] == tkey)):
        r = pos[t]
        trip = {int(i[sel[t]]), int(j[sel[t]]), int(kk[t])}
        while r < len(sp) and sp[r] == tkey[t]:
            y = order[r]
            if not trip & {int(i[y]), int(j[y])}:
                scale = 2 if tsign[t] == psign[y] else 1
                x = sel[t]
                return _sorted_word(
                    (int(i[x]), int(j[x]), int(kk[t]), int(i[y]), int(j[y])),
                    (1, int(c[x]), int(dd[t]), scale, scale * int(c[y])),
                )
            r += 1
    return None


def _signed_log(pkey, psign, sel, n, comp):
    """Recover log of component ``comp`` of the actual (unsigned) pair sum."""
    k = pkey[sel]
    l1, l2 = k // (n + 1) - 1, k % (n + 1) - 1
    lg = l1 if comp == 0 else l2
    return np.where(psign[sel], lg, _negate(lg, n))


def _zech_add(cfg, lx, ly):
    """log(g^lx + g^ly) with -1 for zero operands/results."""
    lx = np.asarray(lx)
    n = cfg.n
    z = cfg.zech[(ly - lx) % n]
    out = np.where(z < 0, -1, (lx + z) % n)
    return np.where(lx < 0, ly, out)


def dual_min_distance(spec: CodeSpec, limit: int = 4) -> int | AboveLimit:
    word = find_dual_word(spec, limit)
    return AboveLimit(limit) if word is None else word.weight


def generator_matrix(spec: CodeSpec) -> np.ndarray:
    """Rows c(beta^k, 0) and c(0, beta^k) for a basis of each subfield."""
    cfg = spec.cfg
    rows = []
    for ell, first in ((spec.ell_u, True), (spec.ell_v, False)):
        step = cfg.n // (cfg.p**ell - 1)
        for k in range(ell):
            e = cfg.alpha_pow(k * step)
            a, b = (e, cfg.zero) if first else (cfg.zero, e)
            rows.append(codeword(spec, a, b).symbols)
    return np.array(rows, dtype=np.int64)


def naive_dual_min_distance(spec: CodeSpec, limit: int = 4) -> int | AboveLimit:
    """Brute force over supports and coefficients against the generator matrix."""
    G = generator_matrix(spec)
    n, p = spec.length, spec.cfg.p
    if comb(n, limit) * (p - 1) ** limit > 5_000_000:
        raise TooLarge("naive dual search is meant for short codes")
    for w in range(1, limit + 1):
        supports = np.array(list(combinations(range(n), w)), dtype=np.int64)
        coeffs = np.array(list(product(range(1, p), repeat=w)), dtype=np.int64)
        cols = G[:, supports]  # (k, S, w)
        sums = np.einsum("ksw,cw->sck", cols, coeffs) % p
        if np.any(np.all(sums == 0, axis=2)):
            return w
    return AboveLimit(limit)


def sphere_packing_max_d(n: int, dimension: int, p: int) -> int:
    """Largest d compatible with the Hamming bound for an [n, dimension] code."""
    budget = p ** (n - dimension)
    ball, t = 0, -1
    for j in range(n + 1):
        ball += comb(n, j) * (p - 1) ** j
        if ball > budget:
            break
        t = j
    return min(2 * t + 2, n)


@dataclass
class DualReport:
    code: CodeSpec
    dual_dimension: int
    d_perp: int | AboveLimit
    sphere_packing_max_d: int
    conditions: ConditionReport | None = None
    word: DualWord | None = None

    @property
    def c1(self):
        return None if self.conditions is None else self.conditions.c1

    @property
    def c2(self):
        return None if self.conditions is None else self.conditions.c2

    @property
    def c3(self):
        return None if self.conditions is None else self.conditions.c3

    @property
    def optimal(self) -> bool:
        return isinstance(self.d_perp, int) and self.d_perp == self.sphere_packing_max_d

    def as_dict(self) -> dict:
        out = {
            "length": self.code.length,
            "u": self.code.u,
            "v": self.code.v,
            "dual_dimension": self.dual_dimension,
            "d_perp": self.d_perp if isinstance(self.d_perp, int) else str(self.d_perp),
            "sphere_packing_max_d": self.sphere_packing_max_d,
            "optimal": self.optimal,
        }
        if self.conditions is not None:
            cr = self.conditions
            out.update(c1=cr.c1, c2=cr.c2, c3=cr.c3, witnesses=cr.witnesses)
        if self.word is not None:
            out["dual_word"] = {"positions": list(self.word.positions), "coeffs": list(self.word.coeffs)}
        return out


def dual_report(spec: CodeSpec, limit: int = 4) -> DualReport:
    cfg = spec.cfg
    conditions = None
    if 1 in coset_members(spec.u, cfg.p, cfg.n) and spec.ell_v == cfg.m:
        conditions = check_conditions(spec.v, cfg)
    word = find_dual_word(spec, limit)
    k = spec.length - spec.dimension
    return DualReport(
        spec,
        k,
        AboveLimit(limit) if word is None else word.weight,
        sphere_packing_max_d(spec.length, k, cfg.p),
        conditions,
        word,
    )


# -- parametrisations ---------------------------------------------------------

def _default_h(m: int) -> int:
    return (m + 1) // 8 if m % 8 == 7 else 1


def _solution_pairs(sq_x, target_of, domain):
    """All (x, y) with y^2 == target_of(x), by inverting the squaring table."""
    roots: dict[int, list[int]] = {}
    for y, s in zip(domain, sq_x):
        roots.setdefault(int(s), []).append(int(y))
    out = set()
    for x, t in zip(domain, target_of):
        for y in roots.get(int(t), ()):
            out.add((int(x), y))
    return out


@dataclass
class ParametrisationReport:
    h: int
    s: int
    brute_count: int
    param_count: int
    sets_equal: bool
    injective: bool
    identities_hold: bool
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.sets_equal and self.injective and self.identities_hold and all(self.extra.values())


def hyperbola_solutions(cfg: FieldConfig, h: int | None = None) -> ParametrisationReport:
    """Solutions of y^2 - x^2 = 1 against x = t - 1/t, y = -t - 1/t.

    Also checks the power identities for s = 3^h + 1:
    x^s = t^s + t^-s - (t^(3^h-1) + t^(1-3^h)), y^s = same with +.
    """
    if cfg.p != 3 or cfg.m % 2 == 0:
        raise BadParameters("needs p = 3 and m odd")
    h = _default_h(cfg.m) if h is None else h
    s = 3**h + 1
    allx = np.arange(cfg.q, dtype=np.int64)
    sq = cfg.pow_codes(allx, 2)
    brute = _solution_pairs(sq, cfg.add_codes(sq, np.ones_like(sq)), allx)

    theta = cfg.exp.copy()
    inv = cfg.pow_codes(theta, -1)
    x1 = cfg.sub_codes(theta, inv)
    y1 = cfg.sub_codes(cfg.neg_codes(theta), inv)
    param = set(zip(x1.tolist(), y1.tolist()))

    ts = cfg.add_codes(cfg.pow_codes(theta, s), cfg.pow_codes(theta, -s))
    tk = cfg.add_codes(cfg.pow_codes(theta, 3**h - 1), cfg.pow_codes(theta, 1 - 3**h))
    ok_x = np.array_equal(cfg.pow_codes(x1, s), cfg.sub_codes(ts, tk))
    ok_y = np.array_equal(cfg.pow_codes(y1, s), cfg.add_codes(ts, tk))
    back = cfg.sub_codes(y1, x1)  # y - x recovers theta
    return ParametrisationReport(
        h, s, len(brute), len(param), brute == param, len(param) == cfg.n,
        bool(ok_x and ok_y), {"y-x = theta": bool(np.array_equal(back, theta))},
    )


def circle_solutions_ext(cfg: FieldConfig, h: int | None = None) -> ParametrisationReport:
    """Solutions of x^2 + y^2 = -1 over GF(q^2) against x = e(t + 1/t), y = t - 1/t.

    e = gamma^((q^2-1)/4) for a generator gamma of GF(q^2)*.
    """
    if cfg.p != 3 or cfg.m % 2 == 0:
        raise BadParameters("needs p = 3 and m odd")
    h = _default_h(cfg.m) if h is None else h
    s = 3**h + 1
    E = QuadraticExtension(cfg, fixed_nonsquare(cfg))
    minus_one = int(cfg.neg_codes(1))
    eps = E.antilog(E.n // 4)
    eps_sq_ok = int(E.pow(eps, 2)) == minus_one

    allx = np.arange(E.q, dtype=np.int64)
    sq = E.pow(allx, 2)
    brute = _solution_pairs(sq, E.sub(np.full_like(sq, minus_one), sq), allx)

    theta = E.exp.copy()
    inv = E.pow(theta, -1)
    x1 = E.mul(eps, E.add(theta, inv))
    y1 = E.sub(theta, inv)
    param = set(zip(x1.tolist(), y1.tolist()))

    ts = E.add(E.pow(theta, s), E.pow(theta, -s))
    tk = E.add(E.pow(theta, 3**h - 1), E.pow(theta, 1 - 3**h))
    ok_x = np.array_equal(E.pow(x1, s), E.mul(E.add(ts, tk), E.pow(eps, s)))
    ok_y = np.array_equal(E.pow(y1, s), E.sub(ts, tk))
    return ParametrisationReport(
        h, s, len(brute), len(param), brute == param, len(param) == E.n,
        bool(ok_x and ok_y), {"eps^2 = -1": eps_sq_ok},
    )


@dataclass
class GcdFacts:
    m: int
    h: int
    s: int
    branch: str
    facts: list[tuple[str, int, int]]

    @property
    def passed(self) -> bool:
        return all(want == got for _, want, got in self.facts)


def gcd_facts(m: int) -> GcdFacts:
    """Residue of s = 3^h + 1 mod 8 and two gcds with 3^(2m) - 1, h = (m+1)/8."""
    if m % 8 != 7:
        raise BadCongruence(f"m={m} is not 7 mod 8")
    h = (m + 1) // 8
    s = 3**h + 1
    big = 3 ** (2 * m) - 1
    if m % 16 == 7:
        branch, want = "m = 7 mod 16", (4, 4, 2)
    else:
        branch, want = "m = -1 mod 16", (2, 2, 8)
    facts = [
        ("s mod 8", want[0], s % 8),
        ("gcd(s, q^2-1)", want[1], gcd(s, big)),
        ("gcd(3^h-1, q^2-1)", want[2], gcd(3**h - 1, big)),
    ]
    return GcdFacts(m, h, s, branch, facts)
