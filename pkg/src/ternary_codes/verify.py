"""One-shot rerun of every acceptance claim, as used by ``ternary-codes verify``.

Claims are grouped by acceptance criterion (1-12).  A claim tied to an
extension degree runs only if that degree was selected; m = 7 claims also
need ``heavy=True``.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .codes import code_spec, codeword, expected_distribution, weight, weight_distribution, weight_via_sums
from .cosets import cyclotomic_product, parity_check_polynomial
from .dualcheck import (
    check_conditions,
    circle_solutions_ext,
    dual_min_distance,
    gcd_facts,
    hyperbola_solutions,
    naive_dual_min_distance,
    sphere_packing_max_d,
)
from .eisenstein import EisensteinInteger
from .expsums import lemma2_closed_form, lemma2_distribution, lemma_key_check
from .families import family_v, valid_instances
from .field import FieldConfig, fixed_nonsquare, make_field, other_nonsquare
from .poly import Polynomial
from .sequences import crosscorrelation, m_sequence, predicted_values

DEFAULT_SEED = 20240601

EXAMPLES = {
    3: (20, "x^6 + 2x^3 + 2x^2 + x + 2", {0: 1, 15: 312, 18: 260, 21: 156}, 1.0),
    5: (182, "x^10 + 2x^9 + 2x^8 + 2x^7 + 2x^5 + x^4 + 2x^3 + x^2 + x + 2", {0: 1, 153: 21780, 162: 19844, 171: 17424}, 5.0),
    7: (1640, "x^14 + 2x^13 + x^12 + x^11 + x^9 + 2x^8 + 2x^7 + x^6 + 2x^3 + x^2 + x + 2",
        {0: 1, 1431: 1652616, 1458: 1595780, 1485: 1534572}, 600.0),
}


@dataclass
class ClaimResult:
    claim_id: str
    criterion: int
    paper_location: str
    status: str
    expected: object = None
    actual: object = None
    elapsed: float = 0.0


@dataclass
class VerifySuiteResult:
    items: list[ClaimResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(it.status != "FAIL" for it in self.items)

    @property
    def criteria(self) -> set[int]:
        return {it.criterion for it in self.items}

    def as_dict(self) -> dict:
        return {"passed": self.passed, "items": [asdict(it) for it in self.items]}


@dataclass
class _Claim:
    claim_id: str
    criterion: int
    location: str
    m: int | None
    run: Callable[[], tuple[object, object, bool]]


# -- individual checks --------------------------------------------------------

def _example(m: int):
    v, poly_text, counts, budget = EXAMPLES[m]

    def run():
        t = time.perf_counter()
        cfg = make_field(3, m)
        poly = parity_check_polynomial(1, v, cfg)
        dist = weight_distribution(code_spec(cfg, 1, v))
        dt = time.perf_counter() - t
        want_poly = Polynomial.parse(poly_text, 3)
        ok = poly == want_poly and dist.counts == counts and dt < budget
        return (
            {"poly": str(want_poly), "counts": counts, "budget_s": budget},
            {"poly": str(poly), "counts": dist.counts, "seconds": round(dt, 3)},
            ok,
        )

    return run


def _table(fid: int, m: int, h: int | None = None):
    def run():
        params = family_v(fid, m, h)
        dist = weight_distribution(code_spec(make_field(3, m), 1, params.v))
        want = expected_distribution(fid, m, h=params.h)
        return want.counts, dist.counts, dist == want

    return run


def _key_identity(m: int, v: int, seed: int, samples: int):
    def run():
        cfg = make_field(3, m)
        lam = fixed_nonsquare(cfg)
        reports = []
        for nonsq in (lam, other_nonsquare(cfg, lam)):
            if m == 3:
                rep = lemma_key_check(1, v, 4, nonsq, cfg, exhaustive=True)
            else:
                rep = lemma_key_check(1, v, 4, nonsq, cfg, samples=samples, seed=seed, exhaustive=False)
            reports.append(rep)
        want = cfg.q**2 if m == 3 else samples
        actual = [{"lambda_log": r.nonsquare_log, "checked": r.checked, "failures": len(r.failures)} for r in reports]
        return {"checked": want, "failures": 0}, actual, all(r.passed and r.checked >= want for r in reports)

    return run


def _lemma2(m: int, h: int):
    def run():
        got = lemma2_distribution(h, make_field(3, m)).entries
        want = lemma2_closed_form(m)
        return want, got, got == want

    return run


def _dual(fid: int, m: int, want_d: int, h: int | None = None):
    def run():
        params = family_v(fid, m, h)
        cfg = make_field(3, m)
        d = dual_min_distance(code_spec(cfg, 1, params.v))
        cond = check_conditions(params.v, cfg)
        want_all = want_d == 4
        ok = d == want_d and cond.all_hold == want_all
        return (
            {"d_perp": want_d, "c1c2c3": want_all},
            {"d_perp": d, "c1": cond.c1, "c2": cond.c2, "c3": cond.c3},
            ok,
        )

    return run


def _naive_oracle():
    def run():
        cfg = make_field(3, 3)
        rows = []
        for params in valid_instances(3):
            spec = code_spec(cfg, 1, params.v)
            rows.append((params.v, dual_min_distance(spec), naive_dual_min_distance(spec)))
        return [r[2] for r in rows], [r[1] for r in rows], all(a == b for _, a, b in rows)

    return run


def _sphere(m: int):
    def run():
        n = 3**m - 1
        got = sphere_packing_max_d(n, n - 2 * m, 3)
        return 4, got, got == 4

    return run


def _xcorr(m: int):
    def run():
        cfg = make_field(3, m)
        seq = m_sequence(cfg)
        want = predicted_values(m)
        got = {}
        for params in valid_instances(m):
            if params.family_id >= 3:
                spec = crosscorrelation(seq, params.v, cfg)
                got[f"f{params.family_id}h{params.h}:v={params.v}"] = spec.distinct
        return want, got, bool(got) and all(vals == want for vals in got.values())

    return run


def _hyperbola(m: int):
    def run():
        rep = hyperbola_solutions(make_field(3, m))
        return {"solutions": 3**m - 1}, asdict(rep), rep.passed and rep.brute_count == 3**m - 1

    return run


def _circle(m: int):
    def run():
        rep = circle_solutions_ext(make_field(3, m))
        return {"solutions": 3 ** (2 * m) - 1}, asdict(rep), rep.passed and rep.brute_count == 3 ** (2 * m) - 1

    return run


def _gcds(m: int):
    def run():
        rep = gcd_facts(m)
        return [f[1] for f in rep.facts], [f[2] for f in rep.facts], rep.passed

    return run


def weight_formula_agreement(m: int, v: int, *, samples: int | None, seed: int) -> tuple[int, int]:
    """(pairs checked, mismatches) between the character-sum weight and direct counting."""
    cfg = make_field(3, m)
    spec = code_spec(cfg, 1, v)
    if samples is None:
        pairs = [(a, b) for a in range(-1, cfg.n) for b in range(-1, cfg.n)]
    else:
        rng = np.random.default_rng(seed)
        pairs = [tuple(int(x) for x in row) for row in rng.integers(-1, cfg.n, size=(samples, 2))]
    bad = 0
    for la, lb in pairs:
        a = cfg.zero if la < 0 else cfg.alpha_pow(la)
        b = cfg.zero if lb < 0 else cfg.alpha_pow(lb)
        if weight_via_sums(spec, a, b) != weight(codeword(spec, a, b)):
            bad += 1
    return len(pairs), bad


def _eq2(m: int, v: int, samples: int | None, seed: int):
    def run():
        checked, bad = weight_formula_agreement(m, v, samples=samples, seed=seed)
        want = 3 ** (2 * m) if samples is None else samples
        return {"checked": want, "mismatches": 0}, {"checked": checked, "mismatches": bad}, bad == 0 and checked == want

    return run


def field_invariant_checks(cfg: FieldConfig) -> dict[str, bool]:
    """Trace/character/log-table invariants, exhaustive over the field."""
    q, p, m = cfg.q, cfg.p, cfg.m
    x = np.arange(q, dtype=np.int64)
    tr = cfg.trace_codes(x)
    out = {}
    out["log round trip"] = bool(np.array_equal(cfg.exp[cfg.log[1:]], x[1:])) and bool(
        np.array_equal(cfg.log[cfg.exp], np.arange(cfg.n))
    )
    out["trace balanced"] = all(int(np.count_nonzero(tr == t)) == p ** (m - 1) for t in range(p))
    out["trace Frobenius"] = bool(np.array_equal(cfg.trace_codes(cfg.pow_codes(x, p)), tr))
    xs, ys = np.meshgrid(x, x, indexing="ij") if q <= 243 else (x[:, None], x[None, :50])
    lhs = cfg.trace_codes(cfg.add_codes(xs, ys))
    out["trace additive"] = bool(np.array_equal(lhs, (tr[xs] + tr[ys]) % p))
    out["squares = even logs"] = int(np.count_nonzero(cfg.log[1:] % 2 == 0)) == cfg.n // 2
    if p == 3:
        # chi additive -> multiplicative via w^(Tr x + Tr y); check through Z[w] for a sample
        roots = [EisensteinInteger.root(k) for k in range(3)]
        sel = [(int(a), int(b)) for a, b in zip(xs.ravel()[:2000], ys.ravel()[:2000])]
        out["chi multiplicative"] = all(
            roots[int(cfg.trace_codes(cfg.add_codes(a, b)))] == roots[int(tr[a])] * roots[int(tr[b])] for a, b in sel
        )
        total = sum((roots[int(t)] for t in tr), EisensteinInteger(0, 0))
        out["chi sums to zero"] = total == 0
    return out


def _invariants(m: int):
    def run():
        checks = field_invariant_checks(make_field(3, m))
        return {k: True for k in checks}, checks, all(checks.values())

    return run


def _coset_product(m: int):
    def run():
        cfg = make_field(3, m)
        got = cyclotomic_product(cfg)
        want = Polynomial.monomial(cfg.n, 3) - Polynomial.one(3)
        return str(want), str(got) if got.degree < 30 else f"degree {got.degree}", got == want

    return run


# -- suite --------------------------------------------------------------------

def claims(seed: int = DEFAULT_SEED, samples: int = 1000, eq2_samples: int = 10_000) -> list[_Claim]:
    out = [
        _Claim("example.m3", 1, "family 1 worked example, m=3", 3, _example(3)),
        _Claim("example.m5", 2, "family 1 worked example, m=5", 5, _example(5)),
        _Claim("example.m7", 3, "family 2 worked example, m=7", 7, _example(7)),
        _Claim("table1.f1.m3", 4, "weight table I, family 1", 3, _table(1, 3)),
        _Claim("table1.f1.m5", 4, "weight table I, family 1", 5, _table(1, 5)),
        _Claim("table1.f2.m7", 4, "weight table I, family 2", 7, _table(2, 7)),
        _Claim("table2.f3h1.m3", 5, "weight table II, family 3", 3, _table(3, 3, 1)),
        _Claim("table2.f3h1.m5", 5, "weight table II, family 3", 5, _table(3, 5, 1)),
        _Claim("table2.f3h3.m5", 5, "weight table II, family 3", 5, _table(3, 5, 3)),
        _Claim("table2.f5.m3", 5, "weight table II, family 5", 3, _table(5, 3)),
        _Claim("keyid.m3", 6, "halving identity under x -> x^s", 3, _key_identity(3, 20, seed, samples)),
        _Claim("keyid.m5", 6, "halving identity under x -> x^s", 5, _key_identity(5, 182, seed, samples)),
        _Claim("keyid.m7", 6, "halving identity under x -> x^s", 7, _key_identity(7, 1640, seed, samples)),
        _Claim("quadsum.m3h1", 7, "quadratic-form sum distribution", 3, _lemma2(3, 1)),
        _Claim("quadsum.m5h1", 7, "quadratic-form sum distribution", 5, _lemma2(5, 1)),
        _Claim("quadsum.m5h2", 7, "quadratic-form sum distribution", 5, _lemma2(5, 2)),
    ]
    for m in (3, 5, 7):
        out.append(_Claim(f"dual.f1.m{m}", 8, "family 1 dual is [n, n-2m, 4]", m, _dual(1, m, 4)))
    out.append(_Claim("dual.f2.m7", 8, "family 2 dual is [n, n-2m, 4]", 7, _dual(2, 7, 4)))
    for m in (3, 5, 7):
        for params in valid_instances(m):
            if params.family_id >= 3:
                cid = f"dual.f{params.family_id}" + (f"h{params.h}" if params.family_id == 3 else "") + f".m{m}"
                out.append(_Claim(cid, 8, "odd-v duals have distance 2", m, _dual(params.family_id, m, 2, params.h)))
    out.append(_Claim("dual.naive.m3", 8, "dual distance vs brute force", 3, _naive_oracle()))
    for m in (3, 5, 7):
        out.append(_Claim(f"sphere.m{m}", 9, "sphere-packing optimality of duals", m, _sphere(m)))
    for m in (3, 5):
        out.append(_Claim(f"xcorr.m{m}", 10, "three-valued crosscorrelation", m, _xcorr(m)))
    out += [
        _Claim("hyperbola.m3", 11, "hyperbola parametrisation", 3, _hyperbola(3)),
        _Claim("hyperbola.m7", 11, "hyperbola parametrisation", 7, _hyperbola(7)),
        _Claim("circle.m3", 11, "circle parametrisation over GF(q^2)", 3, _circle(3)),
    ]
    for m in (7, 15, 23):
        out.append(_Claim(f"gcd.m{m}", 11, "gcd facts for s = 3^h + 1", None, _gcds(m)))
    out += [
        _Claim("weightsum.m3", 12, "weight from character sums", 3, _eq2(3, 20, None, seed)),
        _Claim("weightsum.m5", 12, "weight from character sums", 5, _eq2(5, 182, eq2_samples, seed)),
        _Claim("weightsum.m7", 12, "weight from character sums", 7, _eq2(7, 1640, eq2_samples, seed)),
        _Claim("field.m3", 12, "field, trace, character invariants", 3, _invariants(3)),
        _Claim("field.m5", 12, "field, trace, character invariants", 5, _invariants(5)),
        _Claim("cosets.m3", 12, "product of minimal polynomials is x^n - 1", 3, _coset_product(3)),
        _Claim("cosets.m5", 12, "product of minimal polynomials is x^n - 1", 5, _coset_product(5)),
    ]
    return out


def run_suite(
    ms: tuple[int, ...] = (3, 5, 7),
    *,
    heavy: bool = False,
    seed: int = DEFAULT_SEED,
    samples: int = 1000,
    eq2_samples: int = 10_000,
    progress: Callable[[ClaimResult], None] | None = None,
) -> VerifySuiteResult:
    result = VerifySuiteResult()
    for claim in claims(seed, samples, eq2_samples):
        skip = None
        if claim.m is not None and claim.m not in ms:
            skip = f"m={claim.m} not selected"
        elif claim.m == 7 and not heavy:
            skip = "m=7 needs --heavy"
        if skip:
            item = ClaimResult(claim.claim_id, claim.criterion, claim.location, "SKIPPED", actual=skip)
        else:
            t = time.perf_counter()
            try:
                expected, actual, ok = claim.run()
                status = "PASS" if ok else "FAIL"
            except Exception as exc:  # a crash is a failed claim, reported not raised
                expected, actual, status = None, f"{type(exc).__name__}: {exc}", "FAIL"
            item = ClaimResult(
                claim.claim_id, claim.criterion, claim.location, status,
                _jsonable(expected), _jsonable(actual), round(time.perf_counter() - t, 3),
            )
        result.items.append(item)
        if progress:
            progress(item)
    return result


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, (int, float, str, bool)) or obj is None:
        return obj
    return str(obj)
