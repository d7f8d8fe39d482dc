"""Explicit one-parameter families of genus-3 period matrices with a
two-dimensional moving part: constructors, the identical vanishing of the
[110;110] theta constant, the exact exponential relations that drive the
term-by-term vanishing, and the discrete invariant (fixed-part polarization
degree) separating the family members.

The basic family, for a Gaussian-rational parameter u not in Z + Zi, is

    Pi_u(t) = ( t + i u^2,  u^2 / 2,  i u
                u^2 / 2,    t,        u
                i u,        u,        i ),

whose imaginary part is positive definite exactly when Im t > (Im u)^2 (the
Schur complement of the (3,3) entry is (Im t - (Im u)^2) * Id_2).  The
(a, b)-form moves the parameter shift 2ab + b^2 i into the (2,2) entry,
making the slope block diag(1, 1, 0) exact with a domain bound of 0.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import GAUSSIAN_I, GaussianRational
from .intlinalg import integer_kernel, rational_rank
from .siegel import AffinePeriodFamily
from .theta import Characteristic, even_characteristics, theta, theta_constant

VANISHING_CHARACTERISTIC = Characteristic((1, 1, 0), (1, 1, 0))


class DegenerateParameter(ValueError):
    """u in Z + Zi defines a decomposable (excluded) family."""


def _require_admissible(u: GaussianRational) -> GaussianRational:
    if not isinstance(u, GaussianRational):
        raise TypeError("u must be a GaussianRational")
    if u.is_gaussian_integer():
        raise DegenerateParameter(f"degenerate parameter u = {u} in Z + Zi")
    return u


def _gaussian_offset_to_array(offset) -> np.ndarray:
    return np.array([[x.to_complex() for x in row] for row in offset])


def pi_u(u: GaussianRational) -> AffinePeriodFamily:
    """The family Pi_u with slope diag(1, 1, 0) and exact Gaussian-rational
    offset; valid for Im t > (Im u)^2."""
    u = _require_admissible(u)
    u2 = u * u
    iu = GAUSSIAN_I * u
    iu2 = GAUSSIAN_I * u2
    half = Fraction(1, 2)
    offset = (
        (iu2, u2 * half, iu),
        (u2 * half, GaussianRational.of(0), u),
        (iu, u, GAUSSIAN_I),
    )
    slope = tuple(
        tuple(Fraction(1) if i == j and i < 2 else Fraction(0) for j in range(3)) for i in range(3)
    )
    bound = float(u.im * u.im)
    return AffinePeriodFamily(
        genus=3,
        slope=slope,
        offset=_gaussian_offset_to_array(offset),
        domain_bound=bound,
        offset_exact=offset,
    )


def example_family(a, b) -> AffinePeriodFamily:
    """The (a, b)-form: equal to Pi_(a+bi) after the parameter shift
    t -> t + 2ab + b^2 i; its own domain bound is 0."""
    a, b = Fraction(a), Fraction(b)
    u = GaussianRational(a, b)
    _require_admissible(u)
    G = GaussianRational.of
    half = Fraction(1, 2)
    offset = (
        (G(0, a * a), G((a * a - b * b) * half, a * b), G(-b, a)),
        (G((a * a - b * b) * half, a * b), G(2 * a * b, b * b), G(a, b)),
        (G(-b, a), G(a, b), GAUSSIAN_I),
    )
    slope = tuple(
        tuple(Fraction(1) if i == j and i < 2 else Fraction(0) for j in range(3)) for i in range(3)
    )
    return AffinePeriodFamily(
        genus=3,
        slope=slope,
        offset=_gaussian_offset_to_array(offset),
        domain_bound=0.0,
        offset_exact=offset,
    )


def compare_families(a, b) -> dict:
    """Exact comparison: the (a, b)-form at t equals Pi_u at t + 2ab + b^2 i.

    Equivalently offset_ab - offset_u = shift * slope with
    shift = 2ab + b^2 i; returns the entrywise residue (all zero)."""
    a, b = Fraction(a), Fraction(b)
    u = GaussianRational(a, b)
    fam_ab = example_family(a, b)
    fam_u = pi_u(u)
    shift = GaussianRational(2 * a * b, b * b)
    residues = []
    exact = True
    for i in range(3):
        row = []
        for j in range(3):
            want = shift if (i == j and i < 2) else GaussianRational.of(0)
            got = fam_ab.offset_exact[i][j] - fam_u.offset_exact[i][j]
            row.append(got - want)
            exact = exact and (got - want).is_zero()
        residues.append(tuple(row))
    return {"shift": shift, "equal": exact, "residues": tuple(residues)}


# ---------------------------------------------------------------------------
# Exact exponential relations


def relations_check(a, b) -> dict:
    """Exact verification, on the (a, b)-form, of the two exponential
    identities behind the term-by-term vanishing:

      (i)  qt12^2 = exp(pi i tau23^2 / 2), i.e. tau12 - tau23^2 / 2 in 2 Z;
           the real part satisfies r12 = (a^2 - b^2) / 2 (mod Z);
      (ii) gamma := exp(2 pi i (tau22_offset - tau11_offset) / 8)
           equals exp(-pi tau13^2 / 4) = exp(pi tau23^2 / 4), i.e.
           i (tau22_offset - tau11_offset) = tau23^2 = -tau13^2 exactly.

    Returns the exact residues plus a numeric spot check.
    """
    a, b = Fraction(a), Fraction(b)
    fam = example_family(a, b)
    off = fam.offset_exact
    tau12 = off[0][1]
    tau13 = off[0][2]
    tau23 = off[1][2]
    # (i) exact exponent identity
    res_q12 = tau12 - tau23 * tau23 * GaussianRational.of(Fraction(1, 2))
    r12_residue = (tau12.re - (a * a - b * b) / 2) % 1
    # (ii) gamma identity
    diag_diff = off[1][1] - off[0][0]
    res_gamma = GAUSSIAN_I * diag_diff - tau23 * tau23
    res_gamma_alt = GAUSSIAN_I * diag_diff + tau13 * tau13
    r22_residue = (off[1][1].re - 2 * a * b) % 1
    # numeric cross-check |qt12^2 - exp(pi i tau23^2 / 2)|
    qt12_sq = cmath.exp(1j * cmath.pi * tau12.to_complex())
    target = cmath.exp(1j * cmath.pi * tau23.to_complex() ** 2 / 2)
    return {
        "q12_exponent_residue": res_q12,
        "q12_relation_exact": res_q12.is_zero(),
        "r12_residue_mod_1": r12_residue,
        "gamma_residue": res_gamma,
        "gamma_relation_exact": res_gamma.is_zero() and res_gamma_alt.is_zero(),
        "r22_residue_mod_1": r22_residue,
        "numeric_q12_error": abs(qt12_sq - target),
    }


# ---------------------------------------------------------------------------
# Vanishing of the distinguished theta constant


def verify_vanishing(u: GaussianRational, t_samples, tol: float = 1e-10) -> dict:
    """|theta[110;110]| at Pi_u(t) for each sample (expected below tol), and
    the minimum of |theta| over the other 35 even characteristics (expected
    bounded away from zero at generic samples)."""
    fam = pi_u(u)
    rows = []
    for t in t_samples:
        tau = fam.at(complex(t))
        vanishing = abs(theta_constant(VANISHING_CHARACTERISTIC, tau, tol=min(tol, 1e-12)).value)
        others = [
            abs(theta_constant(c, tau, tol=1e-12).value)
            for c in even_characteristics(3)
            if c != VANISHING_CHARACTERISTIC
        ]
        rows.append(
            {
                "t": complex(t),
                "vanishing_abs": vanishing,
                "vanishing_ok": vanishing < tol,
                "min_other_abs": min(others),
            }
        )
    return {"u": u, "samples": rows, "all_ok": all(r["vanishing_ok"] for r in rows)}


def fj_group_vanishing(u: GaussianRational, n1: int, n2: int, tol: float = 1e-10) -> float:
    """Scaled residual of one term group of the Fourier-Jacobi series of
    theta[110;110] along Pi_u.

    With qt12 = exp(pi i u^2 / 2)^(1/..)  -- concretely qt12^2 =
    exp(pi i u^2 / 2) and gamma = exp(pi u^2 / 4) -- the group for odd
    n1 > n2 > 0 is

        th(n1, n2) - qt12^(-2 n1 n2) th(n1, -n2)
          + gamma^(n1^2 - n2^2) (th(n2, n1) - qt12^(-2 n1 n2) th(n2, -n1)),

    the n1 = n2 group being the first two terms only; here
    th(m, n) = theta[0;0](i, (m tau13 + n tau23)/2).  The residual is scaled
    by the largest term magnitude, since the terms themselves grow like
    exp(pi (Im z)^2) while cancelling exactly.
    """
    u = _require_admissible(u)
    if n1 % 2 == 0 or n2 % 2 == 0 or n1 < n2 or n2 < 1:
        raise ValueError("need odd n1 >= n2 >= 1")
    u2 = (u * u).to_complex()
    tau13 = (GAUSSIAN_I * u).to_complex()
    tau23 = u.to_complex()
    tau33 = np.array([[1j]])
    c0 = Characteristic((0,), (0,))

    def th(m, n):
        return theta(c0, tau33, [(m * tau13 + n * tau23) / 2], tol=1e-14).value

    qt12_pow = cmath.exp(-1j * cmath.pi * u2 * n1 * n2 / 2)  # qt12^(-2 n1 n2)
    if n1 == n2:
        terms = [th(n1, n1), -qt12_pow * th(n1, -n1)]
    else:
        gamma_pow = cmath.exp(cmath.pi * u2 * (n1 * n1 - n2 * n2) / 4)
        terms = [
            th(n1, n2),
            -qt12_pow * th(n1, -n2),
            gamma_pow * th(n2, n1),
            -gamma_pow * qt12_pow * th(n2, -n1),
        ]
    scale = max(1.0, max(abs(x) for x in terms))
    return abs(sum(terms)) / scale


# ---------------------------------------------------------------------------
# Fixed part of the family


@dataclass(frozen=True)
class FixedPartLattice:
    basis: tuple  # two integer 6-vectors (k1, k2, k3, l1, l2, l3)
    degree: int
    axis: tuple  # the fixed complex line, as a rational direction vector


def fixed_part_lattice(u: GaussianRational) -> FixedPartLattice:
    """Rank-2 sublattice of Z^6 of column coefficients m = (k, l) for which
    tau(t) k + l stays on the fixed complex axis for every t, and the degree
    |m1^T J m2| of the polarization restricted to it.

    The fixed axis is C (a, b, 1) with u = a + bi: after untwisting by the
    unipotent isogeny A = ((1, 0, a), (0, 1, b), (0, 0, 1)) each period
    column becomes a Gaussian-rational vector plus t times a 0/1 indicator,
    and membership in the axis says exactly that the first two coordinates
    vanish identically in t.  Stacking real part, imaginary part, and
    t-coefficient of those two coordinates gives an exact rational matrix
    whose integer kernel (computed through the Hermite normal form) is the
    lattice; the t-rows force k1 = k2 = 0 and the imaginary-part rows are
    identically zero in the untwisted coordinates, leaving a rank-2 kernel.
    """
    u = _require_admissible(u)
    a, b = u.re, u.im
    fam = pi_u(u)
    off = fam.offset_exact

    def row_pair(coeffs):
        # coeffs: GaussianRational coefficient per m-component
        re = [x.re for x in coeffs]
        im = [x.im for x in coeffs]
        return re, im

    G = GaussianRational.of
    zero = G(0)
    # w = tau(t) k + l; conditions (w1 - a w3) and (w2 - b w3) == 0 for all t
    cond1 = [
        off[0][0] - G(a) * off[0][2],
        off[0][1] - G(a) * off[1][2],
        off[0][2] - G(a) * off[2][2],
        G(1),
        zero,
        G(-a),
    ]
    cond2 = [
        off[0][1] - G(b) * off[0][2],
        off[1][1] - G(b) * off[1][2],
        off[1][2] - G(b) * off[2][2],
        zero,
        G(1),
        G(-b),
    ]
    rows = [
        [Fraction(1), 0, 0, 0, 0, 0],  # t-coefficient of w1 - a w3
        [0, Fraction(1), 0, 0, 0, 0],  # t-coefficient of w2 - b w3
    ]
    for cond in (cond1, cond2):
        re, im = row_pair(cond)
        rows.append(re)
        rows.append(im)

    kernel = integer_kernel(rows)
    if len(kernel) != 2:
        raise ArithmeticError(f"unexpected fixed-part rank {len(kernel)} for u = {u}")
    m1, m2 = kernel
    pairing = sum(m1[i] * m2[3 + i] for i in range(3)) - sum(m1[3 + i] * m2[i] for i in range(3))
    axis = (a, b, Fraction(1))
    return FixedPartLattice(basis=(tuple(m1), tuple(m2)), degree=abs(pairing), axis=axis)


def fixed_vector_value(u: GaussianRational, m, t: complex) -> np.ndarray:
    """The lattice vector tau(t) k + l for m = (k, l); used to certify that a
    kernel element really is constant on the fixed axis."""
    fam = pi_u(u)
    tau = fam.at(t)
    k = np.array(m[:3], dtype=complex)
    ell = np.array(m[3:], dtype=complex)
    return tau @ k + ell


def kernel_condition_rank(u: GaussianRational) -> int:
    """Rank of the exact condition matrix (should be 4, kernel rank 2)."""
    u = _require_admissible(u)
    a, b = u.re, u.im
    fam = pi_u(u)
    off = fam.offset_exact
    G = GaussianRational.of
    zero = G(0)
    cond1 = [
        off[0][0] - G(a) * off[0][2],
        off[0][1] - G(a) * off[1][2],
        off[0][2] - G(a) * off[2][2],
        G(1),
        zero,
        G(-a),
    ]
    cond2 = [
        off[0][1] - G(b) * off[0][2],
        off[1][1] - G(b) * off[1][2],
        off[1][2] - G(b) * off[2][2],
        zero,
        G(1),
        G(-b),
    ]
    rows = [[Fraction(1), 0, 0, 0, 0, 0], [0, Fraction(1), 0, 0, 0, 0]]
    for cond in (cond1, cond2):
        rows.append([x.re for x in cond])
        rows.append([x.im for x in cond])
    return rational_rank(rows)
