"""Immanants, eigenvalue-difference matrices, and multilinear extraction.

The expensive route sums chi^lam(sigma) prod_i Y[i][sigma(i)] over the whole
symmetric group. The cheap route for structured matrices evaluates Schur
functions of ZY at all 0/1 choices of Z = diag(z) and reads off the
coefficient of z_1...z_k by inclusion-exclusion, which is valid because that
Schur value is jointly homogeneous of degree k in z.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from .partitions import Partition, partitions_of
from .polynomials import MonicPoly
from .symfunc import as_spectrum, elementary_symmetric
from .symgroup import character, cycle_type, perm_sign
from .util import IMMANANT_CAP, MULTILINEAR_CAP, PARTITION_CAP, check_cap, to_fraction


def as_matrix(rows) -> tuple:
    """Validate a square matrix of exact rationals, as a tuple of row tuples."""
    mat = tuple(tuple(to_fraction(v) for v in row) for row in rows)
    n = len(mat)
    if n == 0 or any(len(row) != n for row in mat):
        raise ValueError("matrix must be square and nonempty")
    return mat


def mat_mul(x, y) -> tuple:
    n = len(x)
    return tuple(
        tuple(sum((x[i][t] * y[t][j] for t in range(n)), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def trace(x) -> Fraction:
    return sum((x[i][i] for i in range(len(x))), Fraction(0))


def scale_rows(z, y) -> tuple:
    """diag(z) . y."""
    y = as_matrix(y)
    z = tuple(to_fraction(v) for v in z)
    if len(z) != len(y):
        raise ValueError("diagonal length must match matrix size")
    return tuple(tuple(z[i] * v for v in row) for i, row in enumerate(y))


def delta_minus(x) -> tuple:
    """The matrix (x_i - x_j)_{ij}; rank at most 2, zero diagonal."""
    x = as_spectrum(x)
    return tuple(tuple(xi - xj for xj in x) for xi in x)


def delta_plus(x) -> tuple:
    """The matrix (x_i + x_j)_{ij}."""
    x = as_spectrum(x)
    return tuple(tuple(xi + xj for xj in x) for xi in x)


def immanant_direct(lam, y, cap: int = IMMANANT_CAP) -> Fraction:
    """Immanant by full summation over the symmetric group."""
    y = as_matrix(y)
    n = len(y)
    lam = Partition(lam)
    if lam.size != n:
        raise ValueError(f"shape size {lam.size} != matrix size {n}")
    check_cap(n, cap, "immanant size")
    chi = {
        rho: character(lam, rho, cap=max(n, PARTITION_CAP))
        for rho in partitions_of(n, cap=max(n, PARTITION_CAP))
    }
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        term = Fraction(1)
        for i, v in enumerate(perm):
            term *= y[i][v]
            if not term:
                break
        if term:
            total += chi[cycle_type(perm)] * term
    return total


def imm_delta_minus(lam, x) -> Fraction:
    """Closed form for the immanant of (x_i - x_j) at a two-row shape.

    Shapes with more than two rows give zero (the matrix has rank <= 2).
    """
    lam = Partition(lam)
    x = as_spectrum(x)
    k = lam.size
    if len(x) != k:
        raise ValueError(f"shape size {k} != spectrum length {len(x)}")
    if lam.length > 2:
        return Fraction(0)
    lam2 = lam[1] if lam.length > 1 else 0
    e = elementary_symmetric(x)
    total = Fraction(0)
    for l in range(k + 1):
        total += (-1) ** l * factorial(k - l) * factorial(l) * e[k - l] * e[l]
    return (-1) ** lam2 * total


def _elementary_from_powersums(p, n: int) -> list:
    """e_0..e_n from p_1..p_n by Newton's identities."""
    e = [Fraction(1)] + [Fraction(0)] * n
    for j in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, j + 1):
            acc += (-1) ** (i - 1) * e[j - i] * p[i - 1]
        e[j] = acc / j
    return e


def char_poly(y) -> MonicPoly:
    """Exact characteristic polynomial via traces of powers."""
    y = as_matrix(y)
    n = len(y)
    powers = []
    cur = y
    for _ in range(n):
        powers.append(trace(cur))
        cur = mat_mul(cur, y)
    e = _elementary_from_powersums(powers, n)
    return MonicPoly(tuple(e))


def schur_from_elementary(lam, e) -> Fraction:
    """Dual Jacobi-Trudi determinant det(e_{lam'_i - i + j})."""
    lam = Partition(lam)
    if not lam:
        return Fraction(1)
    lam_t = lam.transpose()
    m = len(lam_t)

    def entry(i, j):
        idx = lam_t[i] - (i + 1) + (j + 1)
        if idx < 0 or idx >= len(e):
            return Fraction(0)
        return e[idx]

    total = Fraction(0)
    for perm in itertools.permutations(range(m)):
        term = Fraction(1)
        for i, v in enumerate(perm):
            term *= entry(i, v)
            if not term:
                break
        if term:
            total += perm_sign(perm) * term
    return total


def immanant_gj(lam, y, cap: int = MULTILINEAR_CAP) -> Fraction:
    """Immanant as the multilinear part of a Schur function of diag(z) . y.

    Runs 2^n exact characteristic-polynomial evaluations at z in {0,1}^n and
    extracts the z_1...z_k coefficient by inclusion-exclusion.
    """
    y = as_matrix(y)
    n = len(y)
    lam = Partition(lam)
    if lam.size != n:
        raise ValueError(f"shape size {lam.size} != matrix size {n}")
    check_cap(n, cap, "multilinear extraction size")
    total = Fraction(0)
    for keep in itertools.product((0, 1), repeat=n):
        scaled = scale_rows(keep, y)
        powers = []
        cur = scaled
        for _ in range(n):
            powers.append(trace(cur))
            cur = mat_mul(cur, scaled)
        e = _elementary_from_powersums(powers, n)
        total += (-1) ** (n - sum(keep)) * schur_from_elementary(lam, e)
    return total


def charpoly_z_delta(x, z) -> MonicPoly:
    """Characteristic polynomial of diag(z) . (x_i - x_j), computed exactly."""
    return char_poly(scale_rows(z, delta_minus(x)))


def charpoly_z_delta_closed(x, z) -> MonicPoly:
    """Same polynomial from its two-term closed form.

    Only the x^k and x^(k-2) coefficients survive: the matrix is traceless,
    its 2x2 principal minors sum to sum_{i<j} z_i z_j (x_i - x_j)^2, and all
    larger minors vanish by the rank bound.
    """
    x = as_spectrum(x)
    z = tuple(to_fraction(v) for v in z)
    k = len(x)
    if len(z) != k:
        raise ValueError("diagonal length must match spectrum length")
    if k < 2:
        return MonicPoly.power_of_x(k)
    quad = sum(
        (
            z[i] * z[j] * (x[i] - x[j]) ** 2
            for i in range(k)
            for j in range(i + 1, k)
        ),
        Fraction(0),
    )
    a = [Fraction(0)] * (k + 1)
    a[0] = Fraction(1)
    a[2] = quad
    return MonicPoly(tuple(a))
