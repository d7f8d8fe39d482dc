"""The Siegel upper half-space H_g, the symplectic group, and affine
one-parameter families of period matrices.

Numeric points of H_g are complex numpy arrays; symplectic matrices are kept
with exact Fraction entries so that gamma^T J gamma = J is decided exactly.
Affine families t -> t * slope + offset carry an exact Gaussian-rational
offset whenever one is available, plus a precomputed lower bound on Im t
below which the imaginary part stops being positive definite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .exact import GaussianRational
from .intlinalg import fraction_matmul

SYMMETRY_TOL = 1e-12


class SiegelDomainError(ValueError):
    """Evaluation outside the validity domain of a family."""


def is_siegel_point(mat, tol: float = SYMMETRY_TOL) -> bool:
    """True iff mat is symmetric (within tol) with positive-definite
    imaginary part (all eigenvalues strictly positive)."""
    m = np.asarray(mat, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    if np.max(np.abs(m - m.T)) > tol:
        return False
    eigs = np.linalg.eigvalsh((m.imag + m.imag.T) / 2)
    return bool(eigs.min() > 0)


def symplectic_j(g: int):
    """The standard form J = ((0, I), (-I, 0)) as a Fraction matrix."""
    n = 2 * g
    J = [[Fraction(0)] * n for _ in range(n)]
    for i in range(g):
        J[i][g + i] = Fraction(1)
        J[g + i][i] = Fraction(-1)
    return J


@dataclass(frozen=True)
class SymplecticMatrix:
    """2g x 2g rational matrix preserving the standard symplectic form.

    Rational entries are allowed (isogeny matrices live in Sp(2g, Q)); use
    ``is_integral`` to test membership in Sp(2g, Z).
    """

    genus: int
    entries: tuple  # tuple of tuples of Fraction

    @classmethod
    def from_rows(cls, rows, check: bool = True) -> "SymplecticMatrix":
        ent = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(ent)
        if n % 2 != 0 or any(len(r) != n for r in ent):
            raise ValueError("matrix must be square of even size")
        gamma = cls(genus=n // 2, entries=ent)
        if check and not gamma.is_symplectic():
            raise ValueError("matrix does not satisfy gamma^T J gamma = J")
        return gamma

    @classmethod
    def identity(cls, g: int) -> "SymplecticMatrix":
        n = 2 * g
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def is_symplectic(self) -> bool:
        rows = [list(r) for r in self.entries]
        J = symplectic_j(self.genus)
        t = [[rows[j][i] for j in range(len(rows))] for i in range(len(rows))]
        return fraction_matmul(fraction_matmul(t, J), rows) == J

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    @property
    def blocks(self):
        g = self.genus
        e = self.entries
        A = [[e[i][j] for j in range(g)] for i in range(g)]
        B = [[e[i][g + j] for j in range(g)] for i in range(g)]
        C = [[e[g + i][j] for j in range(g)] for i in range(g)]
        D = [[e[g + i][g + j] for j in range(g)] for i in range(g)]
        return A, B, C, D

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        prod = fraction_matmul([list(r) for r in self.entries], [list(r) for r in other.entries])
        return SymplecticMatrix(self.genus, tuple(tuple(row) for row in prod))

    def as_array(self):
        return np.array([[float(x) for x in row] for row in self.entries])


def is_symplectic(mat) -> bool:
    """Exact test of gamma^T J gamma = J for a rational square matrix."""
    rows = [[Fraction(x) for x in row] for row in mat]
    n = len(rows)
    if n % 2 != 0 or any(len(r) != n for r in rows):
        return False
    J = symplectic_j(n // 2)
    t = [[rows[j][i] for j in range(n)] for i in range(n)]
    return fraction_matmul(fraction_matmul(t, J), rows) == J


def siegel_action(gamma: SymplecticMatrix, tau) -> np.ndarray:
    """(A tau + B)(C tau + D)^(-1); raises on a singular denominator."""
    tau = np.asarray(tau, dtype=complex)
    A, B, C, D = (np.array([[float(x) for x in row] for row in blk]) for blk in gamma.blocks)
    den = C @ tau + D
    if abs(np.linalg.det(den)) < 1e-14:
        raise SiegelDomainError("non-invertible denominator C tau + D")
    out = (A @ tau + B) @ np.linalg.inv(den)
    return (out + out.T) / 2  # kill roundoff asymmetry


# ---------------------------------------------------------------------------
# Affine period families tau(t) = t * slope + offset


@dataclass(frozen=True)
class AffinePeriodFamily:
    """One-parameter family tau(t) = t * slope + offset on {Im t > domain_bound}.

    ``slope`` is an integer (or rational) symmetric positive-semidefinite
    matrix embedded in the full g x g shape; ``offset_exact`` is kept when the
    offset has Gaussian-rational entries.
    """

    genus: int
    slope: tuple  # tuple of tuples of Fraction
    offset: np.ndarray = field(compare=False)
    domain_bound: float
    offset_exact: Optional[tuple] = None  # tuple of tuples of GaussianRational

    def at(self, t: complex) -> np.ndarray:
        if t.imag <= self.domain_bound + 1e-15:
            raise SiegelDomainError(
                f"outside family domain: Im t = {t.imag} <= bound {self.domain_bound}"
            )
        s = np.array([[float(x) for x in row] for row in self.slope])
        return t * s + self.offset

    def slope_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.slope])


def _pd(mat) -> bool:
    sym = (mat + mat.T) / 2
    return bool(np.linalg.eigvalsh(sym).min() > 0)


def domain_bound_by_bisection(slope: np.ndarray, offset_imag: np.ndarray, hi: float = 1024.0) -> float:
    """Smallest beta with Im(offset) + h * slope positive definite for all
    h > beta.  Monotone in h because slope is positive semidefinite."""
    if _pd(offset_imag):
        lo = 0.0
        # may even be valid for some negative h; callers only need a valid bound
        return 0.0
    if not _pd(offset_imag + hi * slope):
        raise SiegelDomainError("family imaginary part never becomes positive definite")
    lo = 0.0
    for _ in range(80):
        mid = (lo + hi) / 2
        if _pd(offset_imag + mid * slope):
            hi = mid
        else:
            lo = mid
    return hi


def rank_one_K(a, b):
    """Rational symmetric rank-one 3x3 matrix ((a^2, ab, a), (ab, b^2, b), (a, b, 1))."""
    a, b = Fraction(a), Fraction(b)
    return [[a * a, a * b, a], [a * b, b * b, b], [a, b, Fraction(1)]]


def build_varphi(E, A, Z, R) -> AffinePeriodFamily:
    """Affine family with slope E (embedded top-left) and offset
    A diag(0, Z) A^T + R.

    E: integer symmetric positive-semidefinite r x r, nonzero.
    A: rational invertible g x g.  Z: point of H_(g-r) (may be empty).
    R: rational symmetric g x g.
    """
    E = [[Fraction(x) for x in row] for row in E]
    A = [[Fraction(x) for x in row] for row in A]
    R = [[Fraction(x) for x in row] for row in R]
    g = len(A)
    r = len(E)
    if any(E[i][j] != E[j][i] for i in range(r) for j in range(r)):
        raise ValueError("E must be symmetric")
    if any(R[i][j] != R[j][i] for i in range(g) for j in range(g)):
        raise ValueError("R must be symmetric")
    Ef = np.array([[float(x) for x in row] for row in E])
    if r and (np.linalg.eigvalsh((Ef + Ef.T) / 2).min() < -1e-12 or not Ef.any()):
        raise ValueError("E must be positive semidefinite and nonzero")
    Af = np.array([[float(x) for x in row] for row in A])
    if abs(np.linalg.det(Af)) < 1e-12:
        raise ValueError("A must be invertible")

    slope = [[Fraction(0)] * g for _ in range(g)]
    for i in range(r):
        for j in range(r):
            slope[i][j] = E[i][j]

    Zm = np.asarray(Z, dtype=complex).reshape(g - r, g - r) if g > r else np.zeros((0, 0))
    diagZ = np.zeros((g, g), dtype=complex)
    if g > r:
        if not is_siegel_point(Zm):
            raise ValueError("Z must be a point of the Siegel upper half-space")
        diagZ[r:, r:] = Zm
    offset = Af @ diagZ @ Af.T + np.array([[float(x) for x in row] for row in R])
    offset = (offset + offset.T) / 2
    bound = domain_bound_by_bisection(np.array([[float(x) for x in row] for row in slope]), offset.imag)
    return AffinePeriodFamily(genus=g, slope=tuple(tuple(row) for row in slope), offset=offset, domain_bound=bound)


def evaluate_family(family: AffinePeriodFamily, t: complex) -> np.ndarray:
    tau = family.at(t)
    if not is_siegel_point(tau, tol=1e-9):
        raise SiegelDomainError("family value left the Siegel upper half-space")
    return tau


# ---------------------------------------------------------------------------
# JSON wire format for matrices


def complex_matrix_to_json(mat) -> list:
    m = np.asarray(mat, dtype=complex)
    return [[[x.real, x.imag] for x in row] for row in m]


def complex_matrix_from_json(data) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in data])


def gaussian_matrix_to_json(mat: Sequence[Sequence[GaussianRational]]) -> list:
    return [
        [[x.re.numerator, x.re.denominator, x.im.numerator, x.im.denominator] for x in row]
        for row in mat
    ]


def gaussian_matrix_from_json(data) -> tuple:
    return tuple(
        tuple(GaussianRational(Fraction(a, b), Fraction(c, d)) for a, b, c, d in row)
        for row in data
    )
