"""Symmetric function values and basis transitions in exact arithmetic.

Values are always taken at a finite spectrum (a tuple of rationals); the
monomial/elementary transition matrices are assembled from Kostka numbers
and their inverses rather than hard-coded tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod

from .partitions import (
    Partition,
    distinct_permutations,
    partitions_of,
    kostka,
    hooks_and_contents,
)
from .symgroup import dim_irrep, inverse_kostka
from .util import PARTITION_CAP, SET_PARTITION_CAP, check_cap, to_fraction


def as_spectrum(values) -> tuple:
    """Validate and coerce to a nonempty tuple of Fractions."""
    spec = tuple(to_fraction(v) for v in values)
    if not spec:
        raise ValueError("spectrum must be nonempty")
    return spec


def elementary_symmetric(x) -> tuple:
    """e_0..e_d of the values, by the one-pass product recurrence."""
    x = tuple(to_fraction(v) for v in x)
    e = [Fraction(1)] + [Fraction(0)] * len(x)
    for i, v in enumerate(x):
        for j in range(i + 1, 0, -1):
            e[j] += v * e[j - 1]
    return tuple(e)


def power_sums(x, upto: int) -> tuple:
    """p_1..p_upto of the values."""
    x = tuple(to_fraction(v) for v in x)
    return tuple(sum(v**j for v in x) for j in range(1, upto + 1))


def eval_elementary(lam, x) -> Fraction:
    """Product of e_{lam_i} at the spectrum."""
    lam = Partition(lam)
    x = as_spectrum(x)
    e = elementary_symmetric(x)
    out = Fraction(1)
    for part in lam:
        if part > len(x):
            return Fraction(0)
        out *= e[part]
    return out


def eval_monomial(lam, x) -> Fraction:
    """Sum of all distinct monomials with exponent multiset lam."""
    lam = Partition(lam)
    x = as_spectrum(x)
    d = len(x)
    if lam.length > d:
        return Fraction(0)
    total = Fraction(0)
    for expo in distinct_permutations(lam.pad(d)):
        term = Fraction(1)
        for v, e in zip(x, expo):
            if e:
                term *= v**e
        total += term
    return total


def eval_quasisym(comp, x) -> Fraction:
    """Quasisymmetric monomial: ordered exponents on an increasing index chain.

    comp may contain zeros; a zero exponent still occupies an index slot.
    """
    comp = tuple(int(c) for c in comp)
    if any(c < 0 for c in comp):
        raise ValueError(f"exponents must be nonnegative, got {comp}")
    x = as_spectrum(x)
    if len(comp) > len(x):
        raise ValueError(f"composition length {len(comp)} exceeds {len(x)} values")
    total = Fraction(0)
    for chain in itertools.combinations(range(len(x)), len(comp)):
        term = Fraction(1)
        for idx, e in zip(chain, comp):
            if e:
                term *= x[idx] ** e
        total += term
    return total


@dataclass(frozen=True)
class SymExpansion:
    """A symmetric function written in the monomial or elementary basis."""

    basis: str
    k: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("monomial", "elementary"):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for key, val in self.coeffs.items():
            key = Partition(key)
            if key.size != self.k:
                raise ValueError(f"term {key} has size != {self.k}")
            val = to_fraction(val)
            if val:
                clean[key] = val
        object.__setattr__(self, "coeffs", clean)

    def evaluate(self, x) -> Fraction:
        evaluator = eval_monomial if self.basis == "monomial" else eval_elementary
        return sum((c * evaluator(mu, x) for mu, c in self.coeffs.items()), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, SymExpansion):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.k == other.k
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def to_json_dict(self) -> dict:
        terms = [
            {"partition": list(mu), "coeff": str(c)}
            for mu, c in sorted(self.coeffs.items(), reverse=True)
        ]
        return {"basis": self.basis, "k": self.k, "terms": terms}

    @classmethod
    def from_json_dict(cls, payload) -> "SymExpansion":
        coeffs = {
            Partition(t["partition"]): to_fraction(t["coeff"])
            for t in payload["terms"]
        }
        return cls(payload["basis"], int(payload["k"]), coeffs)


def e_to_m(lam, cap: int = PARTITION_CAP) -> SymExpansion:
    """Expand the elementary function e_lam in the monomial basis."""
    lam = Partition(lam)
    k = lam.size
    check_cap(k, cap, "transition degree")
    parts = partitions_of(k, cap)
    coeffs = {}
    for mu in parts:
        total = sum(
            kostka(nu, lam, cap) * kostka(nu.transpose(), mu, cap) for nu in parts
        )
        if total:
            coeffs[mu] = Fraction(total)
    return SymExpansion("monomial", k, coeffs)


def m_to_e(lam, cap: int = PARTITION_CAP) -> SymExpansion:
    """Expand the monomial function m_lam in the elementary basis."""
    lam = Partition(lam)
    k = lam.size
    check_cap(k, cap, "transition degree")
    parts = partitions_of(k, cap)
    coeffs = {}
    for mu in parts:
        total = sum(
            inverse_kostka(lam, nu.transpose(), cap) * inverse_kostka(mu, nu, cap)
            for nu in parts
        )
        if total:
            coeffs[mu] = Fraction(total)
    return SymExpansion("elementary", k, coeffs)


def schur_principal(lam, d: int) -> Fraction:
    """Schur function at d ones, by the hook content formula."""
    lam = Partition(lam)
    if d < 0:
        raise ValueError("d must be nonnegative")
    _, contents = hooks_and_contents(lam)
    num = dim_irrep(lam) * prod((Fraction(d + c) for c in contents), start=Fraction(1))
    return num / factorial(lam.size)


def schur_rank_two(lam, alpha, beta) -> Fraction:
    """Schur function at (alpha, beta, 0, 0, ...), in summation form."""
    lam = Partition(lam)
    alpha, beta = to_fraction(alpha), to_fraction(beta)
    if lam.length > 2:
        return Fraction(0)
    k = lam.size
    lam1 = lam[0] if lam else 0
    lam2 = lam[1] if lam.length > 1 else 0
    total = Fraction(0)
    for t in range(lam1 - lam2 + 1):
        total += alpha ** (k - lam2 - t) * beta ** (lam2 + t)
    return total


def kernel_sum(blocks, x, cap: int = SET_PARTITION_CAP) -> Fraction:
    """Sum of prod_i x_{p(i)} over maps p with kernel exactly `blocks`.

    A map has kernel `blocks` when p(i) == p(j) iff i, j share a block, so
    the sum runs over injective assignments of values to blocks.
    """
    blocks = tuple(tuple(b) for b in blocks)
    k = sum(len(b) for b in blocks)
    check_cap(k, cap, "kernel sum size")
    x = as_spectrum(x)
    total = Fraction(0)
    for positions in itertools.permutations(range(len(x)), len(blocks)):
        term = Fraction(1)
        for block, pos in zip(blocks, positions):
            term *= x[pos] ** len(block)
        total += term
    return total
