"""p-cyclotomic cosets modulo n and the minimal polynomials they index."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CosetsOverlap, ProjectionFailure
from .field import FieldConfig
from .poly import Polynomial, product

__all__ = [
    "CyclotomicCoset",
    "Polynomial",
    "all_cosets",
    "coset",
    "coset_members",
    "cosets_disjoint",
    "cyclotomic_product",
    "minimal_polynomial",
    "parity_check_polynomial",
]


@dataclass(frozen=True)
class CyclotomicCoset:
    leader: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return a in self.members


def coset_members(a: int, p: int, n: int) -> tuple[int, ...]:
    """Sorted orbit of ``a`` under multiplication by ``p`` modulo ``n``.

    Works from integers alone so it also serves extension degrees far beyond
    what the field tables allow.
    """
    a %= n
    orbit = [a]
    x = a * p % n
    while x != a:
        orbit.append(x)
        x = x * p % n
    return tuple(sorted(orbit))


def coset(a: int, cfg: FieldConfig) -> CyclotomicCoset:
    members = coset_members(a, cfg.p, cfg.n)
    return CyclotomicCoset(members[0], members)


def cosets_disjoint(u: int, v: int, cfg: FieldConfig) -> bool:
    return coset_members(u, cfg.p, cfg.n)[0] != coset_members(v, cfg.p, cfg.n)[0]


def all_cosets(cfg: FieldConfig) -> list[CyclotomicCoset]:
    seen: set[int] = set()
    out = []
    for a in range(cfg.n):
        if a not in seen:
            c = coset(a, cfg)
            seen.update(c.members)
            out.append(c)
    return out


def minimal_polynomial(a: int, cfg: FieldConfig) -> Polynomial:
    """Minimal polynomial over GF(p) of a^(-a), as prod (x - a^(-k)) over k in C_a."""
    # coefficients live in GF(q) during expansion, constant term first
    poly = [cfg.one]
    for k in coset(a, cfg).members:
        root = cfg.alpha_pow(-k)
        shifted = [cfg.zero] + poly
        for i in range(len(poly)):
            shifted[i] = shifted[i] - root * poly[i]
        poly = shifted
    coeffs = []
    for c in poly:
        if c.code >= cfg.p:
            raise ProjectionFailure(f"coefficient {c} of m_{a}(x) is not in GF({cfg.p})")
        coeffs.append(c.code)
    return Polynomial(coeffs, cfg.p)


def parity_check_polynomial(u: int, v: int, cfg: FieldConfig) -> Polynomial:
    if not cosets_disjoint(u, v, cfg):
        raise CosetsOverlap(f"C_{u % cfg.n} and C_{v % cfg.n} coincide")
    return minimal_polynomial(u, cfg) * minimal_polynomial(v, cfg)


def cyclotomic_product(cfg: FieldConfig) -> Polynomial:
    """Product of m_a(x) over all coset leaders; equals x^n - 1."""
    return product((minimal_polynomial(c.leader, cfg) for c in all_cosets(cfg)), cfg.p)
