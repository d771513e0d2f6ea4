"""The five exponent families v giving three-weight codes C_(1,v,3,m).

Families 1 and 2 share weight table I, families 3-5 share table II.  All
exponent arithmetic uses Python integers, so ``v_raw`` is exact for any m;
code construction uses ``v = v_raw mod (3^m - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .cosets import coset_members
from .errors import ConditionViolated

P = 3
FAMILIES = (1, 2, 3, 4, 5)


def table_for(family_id: int) -> str:
    return "I" if family_id in (1, 2) else "II"


def applicability(family_id: int, m: int, h: int | None = None) -> str | None:
    """Reason the family does not apply to (m, h), or None when it does."""
    if family_id not in FAMILIES:
        return f"unknown family {family_id}"
    if m < 3 or m % 2 == 0:
        return f"m={m} must be odd and at least 3"
    if family_id in (2, 4) and m % 8 != 7:
        return f"m={m} is not 7 mod 8 ({m} = {m % 8} mod 8)"
    if family_id == 5 and m % 4 != 3:
        return f"m={m} is not 3 mod 4 ({m} = {m % 4} mod 4)"
    if family_id == 3:
        if h is None or h < 1:
            return "family 3 needs h >= 1"
        if (m + 1) % h or ((m + 1) // h) % 2:
            return f"(m+1)/h = {(m + 1) / h:g} is not an even integer"
    return None


def valid_h(m: int) -> list[int]:
    """All h for which family 3 applies at this m."""
    return [h for h in range(1, m + 2) if applicability(3, m, h) is None]


def raw_v(family_id: int, m: int, h: int | None = None) -> int:
    half = (P**m - 1) // 2
    if family_id == 1:
        return (P ** (m + 1) - 1) // 4
    if family_id in (2, 4):
        k = (m + 1) // 8
        base = (P**k - 1) * (P ** (2 * k) + 1) * (P ** (4 * k) + 1)
        return base if family_id == 2 else base + half
    if family_id == 3:
        return (P ** (m + 1) - 1) // (P**h + 1) + half
    if family_id == 5:
        return (P ** ((m + 1) // 4) - 1) * (P ** ((m + 1) // 2) + 1) + half
    raise ConditionViolated(f"unknown family {family_id}")


def _h_for(family_id: int, m: int, h: int | None) -> int:
    if family_id == 1:
        return 1
    if family_id in (2, 4):
        return (m + 1) // 8
    if family_id == 5:
        return (m + 1) // 4
    return 1 if h is None else h


@dataclass(frozen=True)
class FamilyParams:
    family_id: int
    m: int
    h: int
    v_raw: int
    v: int
    s: int
    expected_table: str

    @property
    def n(self) -> int:
        return P**self.m - 1


def family_v(family_id: int, m: int, h: int | None = None) -> FamilyParams:
    """Exponent data for one family; ``h`` matters only for family 3 (default 1)."""
    h = _h_for(family_id, m, h)
    reason = applicability(family_id, m, h)
    if reason:
        raise ConditionViolated(f"family {family_id}: {reason}")
    v_raw = raw_v(family_id, m, h)
    n = P**m - 1
    return FamilyParams(family_id, m, h, v_raw, v_raw % n, P**h + 1, table_for(family_id))


def valid_instances(m: int) -> list[FamilyParams]:
    """Every (family, h) instance that applies at this m."""
    out = []
    for fid in FAMILIES:
        hs = valid_h(m) if fid == 3 else [None]
        for h in hs:
            if applicability(fid, m, _h_for(fid, m, h)) is None:
                out.append(family_v(fid, m, h))
    return out


@dataclass
class FamilyReport:
    params: FamilyParams
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self) -> list[str]:
        return [name for name, ok, _ in self.checks if not ok]

    def as_dict(self) -> dict:
        return {
            "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks],
            "notes": self.notes,
            "passed": self.passed,
        }


def validate_family(params: FamilyParams) -> FamilyReport:
    """Re-derive every structural fact about the exponent and itemise the results."""
    rep = FamilyReport(params)
    fid, m, h, v_raw, v, s = (
        params.family_id, params.m, params.h, params.v_raw, params.v, params.s
    )
    n = params.n
    reason = applicability(fid, m, h)
    rep.add("applicable", reason is None, reason or "")
    rep.add("v_raw formula", raw_v(fid, m, h) == v_raw, str(v_raw))
    rep.add("v = v_raw mod n", v == v_raw % n, f"{v_raw} mod {n} = {v}")
    want_even = fid in (1, 2)
    rep.add("parity", (v_raw % 2 == 0) == want_even, "even" if v_raw % 2 == 0 else "odd")
    rep.add("reduction keeps parity", v % 2 == v_raw % 2, "n is even")
    rep.add("gcd(s, n) = 2", gcd(s, n) == 2, f"s={s}, gcd={gcd(s, n)}")
    rep.add("s*v = 2 mod n", s * v_raw % n == 2 % n, f"{s}*{v_raw} mod {n} = {s * v_raw % n}")
    c1 = coset_members(1, P, n)
    cv = coset_members(v, P, n)
    rep.add("C_v disjoint from C_1", not set(c1) & set(cv), f"C_v leader {cv[0]}")
    rep.add("|C_v| = m", len(cv) == m, f"|C_v| = {len(cv)}")
    if fid >= 3:
        rep.add("gcd(v, n) = 1", gcd(v_raw, n) == 1, f"gcd = {gcd(v_raw, n)}")
        rep.add("v = 1 mod (p-1)", (v_raw - 1) % (P - 1) == 0, "")
        # lambda = g^(n/(p-1)) generates GF(3)*, i.e. -1; compare logs of lambda^v and lambda
        lam_log = n // (P - 1)
        rep.add("lambda^v = lambda", lam_log * v_raw % n == lam_log, f"log lambda = {lam_log}")
    if fid == 3:
        rep.add("gcd(m, h) = 1", gcd(m, h) == 1, "follows from h | m+1")
    for other in valid_instances(m):
        if other.v == v and (other.family_id, other.h) != (fid, h):
            rep.notes.append(
                f"same v as family {other.family_id}"
                + (f" (h={other.h})" if other.family_id == 3 else "")
            )
    return rep
