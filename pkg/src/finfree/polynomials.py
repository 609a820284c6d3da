"""Monic polynomials and their finite free convolutions.

A degree-d monic polynomial is stored by its unsigned coefficient vector
(a_0, ..., a_d) with a_0 = 1, standing for

    sum_k x^(d-k) (-1)^k a_k,

so a_k is the k-th elementary symmetric function of the roots and the
alternating signs appear only on display and evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .symfunc import as_spectrum, elementary_symmetric
from .util import to_fraction


def falling(n, j: int) -> Fraction:
    """Falling factorial n (n-1) ... (n-j+1)."""
    n = to_fraction(n)
    out = Fraction(1)
    for t in range(j):
        out *= n - t
    return out


@dataclass(frozen=True)
class MonicPoly:
    a: tuple

    def __post_init__(self):
        a = tuple(to_fraction(v) for v in self.a)
        if len(a) < 2:
            raise ValueError("degree must be at least 1")
        if a[0] != 1:
            raise ValueError(f"leading coefficient must be 1, got {a[0]}")
        object.__setattr__(self, "a", a)

    @property
    def degree(self) -> int:
        return len(self.a) - 1

    def coefficient(self, k: int) -> Fraction:
        """Unsigned coefficient a_k (elementary symmetric in the roots)."""
        return self.a[k]

    def signed_coefficient(self, k: int) -> Fraction:
        """Coefficient of x^(d-k) in the displayed polynomial."""
        return (-1) ** k * self.a[k]

    def evaluate(self, x) -> Fraction:
        x = to_fraction(x)
        d = self.degree
        return sum(
            ((-1) ** k * self.a[k] * x ** (d - k) for k in range(d + 1)),
            Fraction(0),
        )

    @classmethod
    def from_spectrum(cls, values) -> "MonicPoly":
        """Monic polynomial with the given roots."""
        return cls(elementary_symmetric(as_spectrum(values)))

    @classmethod
    def power_of_x(cls, d: int) -> "MonicPoly":
        if d < 1:
            raise ValueError("degree must be at least 1")
        return cls((Fraction(1),) + (Fraction(0),) * d)

    def negate_roots(self) -> "MonicPoly":
        return MonicPoly(tuple((-1) ** k * v for k, v in enumerate(self.a)))

    def pretty(self) -> str:
        d = self.degree
        pieces = []
        for k in range(d + 1):
            c = self.signed_coefficient(k)
            if c == 0:
                continue
            power = d - k
            if power == 0:
                body = str(abs(c))
            else:
                xpow = "x" if power == 1 else f"x^{power}"
                body = xpow if abs(c) == 1 else f"{abs(c)}*{xpow}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces) if pieces else "0"

    def to_json_dict(self) -> dict:
        return {"d": self.degree, "a": [str(v) for v in self.a]}

    @classmethod
    def from_json_dict(cls, payload) -> "MonicPoly":
        poly = cls(tuple(to_fraction(v) for v in payload["a"]))
        if "d" in payload and int(payload["d"]) != poly.degree:
            raise ValueError(
                f"declared degree {payload['d']} != coefficient count {poly.degree}"
            )
        return poly


def _common_degree(p: MonicPoly, q: MonicPoly) -> int:
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    return p.degree


def boxplus(p: MonicPoly, q: MonicPoly) -> MonicPoly:
    """Additive convolution: expected polynomial of A + UBU*."""
    d = _common_degree(p, q)
    a = []
    for k in range(d + 1):
        total = Fraction(0)
        for i in range(k + 1):
            j = k - i
            w = Fraction(factorial(d - i) * factorial(d - j), factorial(d) * factorial(d - k))
            total += w * p.a[i] * q.a[j]
        a.append(total)
    return MonicPoly(tuple(a))


def boxminus(p: MonicPoly, q: MonicPoly) -> MonicPoly:
    """Subtractive convolution: expected polynomial of A - UBU*."""
    d = _common_degree(p, q)
    a = []
    for k in range(d + 1):
        total = Fraction(0)
        for i in range(k + 1):
            j = k - i
            w = Fraction(factorial(d - i) * factorial(d - j), factorial(d) * factorial(d - k))
            total += (-1) ** j * w * p.a[i] * q.a[j]
        a.append(total)
    return MonicPoly(tuple(a))


def boxtimes(p: MonicPoly, q: MonicPoly) -> MonicPoly:
    """Multiplicative convolution: expected polynomial of A UBU*."""
    d = _common_degree(p, q)
    a = tuple(p.a[k] * q.a[k] / comb(d, k) for k in range(d + 1))
    return MonicPoly(a)


def z_poly(d: int) -> MonicPoly:
    """The degree-d commutator kernel polynomial (even coefficients only)."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    a = [Fraction(0)] * (d + 1)
    a[0] = Fraction(1)
    for m in range(1, d // 2 + 1):
        a[2 * m] = (
            comb(d, 2 * m)
            * falling(d, m)
            * factorial(m)
            / factorial(2 * m)
            * Fraction(d + 1 - m, d + 1)
        )
    return MonicPoly(tuple(a))


def commutator_poly(p: MonicPoly, q: MonicPoly) -> MonicPoly:
    """Expected polynomial of the commutator AUBU* - UBU*A, by convolution."""
    d = _common_degree(p, q)
    return boxtimes(boxtimes(boxminus(p, p), boxminus(q, q)), z_poly(d))


def commutator_coefficient(k: int, spec_a, spec_b) -> Fraction:
    """Coefficient-level form of the expected commutator polynomial.

    spec_a and spec_b are the spectra (root tuples) of the two matrices;
    returns the unsigned coefficient E[e_k] of the commutator.
    """
    spec_a, spec_b = as_spectrum(spec_a), as_spectrum(spec_b)
    d = len(spec_a)
    if len(spec_b) != d:
        raise ValueError(f"spectrum lengths differ: {d} != {len(spec_b)}")
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= {d}, got k={k}")
    if k == 0:
        return Fraction(1)
    if k % 2:
        return Fraction(0)
    h = k // 2
    ea, eb = elementary_symmetric(spec_a), elementary_symmetric(spec_b)

    def cross(e):
        total = Fraction(0)
        for i in range(k + 1):
            j = k - i
            w = Fraction(
                factorial(d - i) * factorial(d - j),
                factorial(d) * factorial(d - k),
            )
            total += (-1) ** i * w * e[i] * e[j]
        return total

    factor = (
        Fraction(factorial(d - k), factorial(d - h))
        * factorial(h)
        * Fraction(d + 1 - h, d + 1)
    )
    return cross(ea) * cross(eb) * factor
