"""Command line front end: ``ternary-codes <command> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage
errors or parameters that violate a family's conditions.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import kernels
from .codes import code_spec, enumeration_cost, expected_distribution, weight_distribution
from .cosets import parity_check_polynomial
from .dualcheck import dual_report
from .errors import CodesError
from .expsums import lemma2_closed_form, lemma2_distribution, lemma_key_check
from .families import family_v, validate_family
from .field import fixed_nonsquare, make_field, other_nonsquare
from .sequences import crosscorrelation, m_sequence, predicted_values
from .verify import DEFAULT_SEED, run_suite

log = logging.getLogger("ternary_codes")

# codewords evaluated before a run counts as heavy
HEAVY_CODEWORDS = 2_000_000


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, text: str | None = None, csv: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    elif fmt == "csv" and csv is not None:
        sys.stdout.write(csv)
    else:
        print(text if text is not None else json.dumps(obj, indent=2))


def _field(args):
    return make_field(3, args.m, args.modulus)


def _exponents(args):
    """(u, v, FamilyParams or None) from --family or --u/--v."""
    if args.family is not None:
        params = family_v(args.family, args.m, args.h)
        return 1, params.v, params
    if args.v is None:
        raise UsageError("give --family or --v (with optional --u)")
    return args.u, args.v, None


def _heavy_gate(args, cost: int, what: str) -> None:
    estimate = f"{what}: about {cost:,} codeword evaluations of length {3**args.m - 1}"
    if args.m >= 7 or cost > HEAVY_CODEWORDS:
        if not args.heavy:
            raise UsageError(f"{estimate}; pass --heavy to run it")
        print(f"# {estimate}", file=sys.stderr)


# -- commands -----------------------------------------------------------------

def cmd_construct(args) -> int:
    if args.family is None:
        raise UsageError("construct needs --family")
    params = family_v(args.family, args.m, args.h)
    report = validate_family(params)
    out = {
        "family": params.family_id,
        "m": params.m,
        "h": params.h,
        "v_raw": params.v_raw,
        "v": params.v,
        "s": params.s,
        "conditions": report.as_dict(),
        "expected_table": params.expected_table,
        "expected_distribution": {str(w): c for w, c in expected_distribution(
            params.family_id, params.m, h=params.h).counts.items()},
    }
    try:
        cfg = _field(args)
        poly = parity_check_polynomial(1, params.v, cfg)
        out["modulus"] = str(cfg.modulus)
        out["parity_check_poly"] = {"text": str(poly), "coeffs": list(poly.coeffs)}
    except CodesError as exc:  # e.g. field too large for tables
        out["modulus"] = None
        out["parity_check_poly"] = None
        log.warning("parity-check polynomial not computed: %s", exc)
    lines = [
        f"family {params.family_id}, m={params.m}, h={params.h}",
        f"v = {params.v_raw} = {params.v} (mod {params.n}), s = {params.s}",
        f"table {params.expected_table}",
    ]
    if out["parity_check_poly"]:
        lines.append(f"parity-check polynomial: {out['parity_check_poly']['text']}")
    for name, ok, detail in report.checks:
        lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}" + (f"  ({detail})" if detail else ""))
    lines += [f"  note: {n}" for n in report.notes]
    _emit(out, args.format, "\n".join(lines))
    return 0 if report.passed else 1


def cmd_weights(args) -> int:
    u, v, params = _exponents(args)
    cfg = _field(args)
    spec = code_spec(cfg, u, v)
    _heavy_gate(args, enumeration_cost(spec, spec.full_subfields), "weight enumeration")
    t = time.perf_counter()
    dist = weight_distribution(spec, threads=args.threads)
    log.info("enumerated in %.3fs with the %s backend", time.perf_counter() - t, kernels.BACKEND)
    status = 0
    text = [f"[{dist.length}, {dist.dimension}] code, u={spec.u}, v={spec.v}"]
    text += [f"{w:>6} {c}" for w, c in sorted(dist.counts.items())]
    if params is not None:
        want = expected_distribution(params.family_id, params.m, h=params.h)
        match = dist == want
        status = 0 if match else 1
        text.append(f"table {params.expected_table}: {'PASS' if match else 'FAIL'}")
    _emit(dist.as_dict(), args.format, "\n".join(text), dist.to_csv())
    return status


def cmd_dual_check(args) -> int:
    u, v, params = _exponents(args)
    cfg = _field(args)
    if args.m >= 7 and not args.heavy:
        raise UsageError(f"dual search at m={args.m} takes a few seconds per code; pass --heavy")
    rep = dual_report(code_spec(cfg, u, v), limit=args.limit)
    out = rep.as_dict()
    status = 0
    if params is not None:
        want = 4 if params.family_id in (1, 2) else 2
        out["expected_d_perp"] = want
        status = 0 if rep.d_perp == want else 1
    text = [
        f"dual of [{rep.code.length}, {rep.code.dimension}]: [{rep.code.length}, {rep.dual_dimension}, {rep.d_perp}]",
        f"sphere-packing bound on d: {rep.sphere_packing_max_d} ({'optimal' if rep.optimal else 'not optimal'})",
    ]
    if rep.conditions is not None:
        text.append(f"C1={rep.c1} C2={rep.c2} C3={rep.c3}")
    if rep.word is not None:
        text.append(f"witness: positions {list(rep.word.positions)} coeffs {list(rep.word.coeffs)}")
    _emit(out, args.format, "\n".join(text))
    return status


def cmd_expsum(args) -> int:
    cfg = _field(args)
    if args.lemma == 2:
        h = 1 if args.h is None else args.h
        got = lemma2_distribution(h, cfg).entries
        want = lemma2_closed_form(args.m)
        ok = got == want
        out = {"m": args.m, "h": h, "values": {str(k): c for k, c in got.items()},
               "closed_form": {str(k): c for k, c in want.items()}, "passed": ok}
        text = [f"value distribution, m={args.m}, h={h}"]
        text += [f"{k:>8} {c:>8}  (closed form {want.get(k, 0)})" for k, c in got.items()]
        text.append("PASS" if ok else "FAIL")
    else:
        u, v, params = _exponents(args)
        s = params.s if params is not None else 4
        lam = fixed_nonsquare(cfg)
        reports = [
            lemma_key_check(u, v, s, nonsq, cfg, samples=args.samples, seed=args.seed)
            for nonsq in (lam, other_nonsquare(cfg, lam))
        ]
        ok = all(r.passed for r in reports)
        out = {"u": u, "v": v, "s": s, "passed": ok, "checks": [
            {"nonsquare_log": r.nonsquare_log, "checked": r.checked, "exhaustive": r.exhaustive,
             "failures": r.failures[:20]} for r in reports]}
        text = [f"halving identity, u={u}, v={v}, s={s}"]
        text += [f"  lambda=a^{r.nonsquare_log}: {r.checked} pairs"
                 f"{' (all)' if r.exhaustive else ''}, {len(r.failures)} failures" for r in reports]
        text.append("PASS" if ok else "FAIL")
    _emit(out, args.format, "\n".join(text))
    return 0 if ok else 1


def cmd_xcorr(args) -> int:
    _, v, params = _exponents(args)
    cfg = _field(args)
    spec = crosscorrelation(m_sequence(cfg), v, cfg)
    want = predicted_values(args.m)
    ok = spec.distinct == want
    out = {"m": args.m, "v": v, "values": {str(k): c for k, c in spec.values.items()},
           "predicted": want, "three_valued": ok}
    text = [f"crosscorrelation of the m-sequence with its {v}-decimation, m={args.m}"]
    text += [f"{k:>8} {c:>6}" for k, c in spec.values.items()]
    text.append(("PASS" if ok else "FAIL") + f": predicted {want}")
    _emit(out, args.format, "\n".join(text))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    ms = (3, 5, 7) if args.m is None else (args.m,)
    verbose = args.format == "text"

    def progress(item):
        if verbose:
            print(f"{item.status:<7} [{item.criterion:>2}] {item.claim_id:<18} {item.elapsed:7.3f}s  {item.paper_location}")
            if item.status == "FAIL":
                print(f"          expected {item.expected}\n          actual   {item.actual}")

    result = run_suite(ms, heavy=args.heavy, seed=args.seed, samples=args.samples, progress=progress)
    counts = {s: sum(it.status == s for it in result.items) for s in ("PASS", "FAIL", "SKIPPED")}
    if verbose:
        print(f"{counts['PASS']} passed, {counts['FAIL']} failed, {counts['SKIPPED']} skipped")
    else:
        out = result.as_dict()
        out["summary"] = counts
        _emit(out, "json")
    return 0 if result.passed else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=None, help="extension degree of GF(3^m)")
    common.add_argument("--family", type=int, choices=range(1, 6), help="exponent family 1-5")
    common.add_argument("--h", type=int, default=None, help="family parameter h (family 3, quadratic sums)")
    common.add_argument("--u", type=int, default=1)
    common.add_argument("--v", type=int, default=None)
    common.add_argument("--modulus", default=None, help='field modulus, e.g. "1 2 0 1" or "x^3 + 2x + 1"')
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--samples", type=int, default=1000, help="random pairs for sampled checks")
    common.add_argument("--heavy", action="store_true", help="allow m=7 and other long runs")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads for enumeration (default: all cores)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="ternary-codes", description="Ternary cyclic codes with few weights.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("construct", parents=[common], help="exponent, conditions and parity-check polynomial")
    sub.add_parser("weights", parents=[common], help="exact weight distribution")
    dc = sub.add_parser("dual-check", parents=[common], help="minimum distance of the dual code")
    dc.add_argument("--limit", type=int, default=4, choices=range(1, 6))
    es = sub.add_parser("expsum", parents=[common], help="exponential sum checks")
    es.add_argument("--lemma", type=int, choices=(1, 2), required=True,
                    help="1: halving identity, 2: quadratic-form value distribution")
    sub.add_parser("xcorr", parents=[common], help="m-sequence crosscorrelation spectrum")
    sub.add_parser("verify", parents=[common], help="rerun every acceptance claim")
    return parser


COMMANDS = {
    "construct": cmd_construct,
    "weights": cmd_weights,
    "dual-check": cmd_dual_check,
    "expsum": cmd_expsum,
    "xcorr": cmd_xcorr,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="# %(message)s")
    if args.m is None and args.command != "verify":
        args.m = 3
    if args.m is not None and args.m < 1:
        parser.error("--m must be positive")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, CodesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
