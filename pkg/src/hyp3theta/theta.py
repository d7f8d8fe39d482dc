"""Certified numerical evaluation of theta functions with half-integer
characteristics for genus 1..3.

The series used is

    theta[eps; delta](tau, z)
        = sum over N in Z^g of
          exp( pi i (N + eps/2)^T tau (N + eps/2)
               + 2 pi i (N + eps/2) . (z + delta/2) ),

truncated to the box max|N_i| <= R.  Each value is returned together with a
rigorous bound on the discarded tail, obtained from the Gaussian decay of the
summand: with lam the smallest eigenvalue of Im tau, any term satisfies

    |term(N)| <= exp(pi |Im z|^2 / lam) * exp(-pi lam (|N| - s)^2),
    s = |eps/2| + |Im z| / lam        (Euclidean norms),

and the tail is summed shell by shell over max|N_i| = j > R.

The odd-characteristic constants are evaluated honestly (no shortcut), so
their vanishing doubles as a self-test of the evaluator.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .siegel import is_siegel_point

RADIUS_START = 4
RADIUS_CAP = 64
DEFAULT_TOL = 1e-10


class PrecisionError(ArithmeticError):
    """The radius cap was reached before the tail bound met the tolerance."""


@dataclass(frozen=True)
class Characteristic:
    """Pair of binary g-vectors [eps; delta]; parity is eps . delta mod 2."""

    eps: tuple
    delta: tuple

    def __post_init__(self):
        eps = tuple(int(x) for x in self.eps)
        delta = tuple(int(x) for x in self.delta)
        if len(eps) != len(delta) or not eps:
            raise ValueError("eps and delta must be nonempty and equally long")
        if any(x not in (0, 1) for x in eps + delta):
            raise ValueError("characteristic entries must be 0 or 1")
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "delta", delta)

    @property
    def genus(self) -> int:
        return len(self.eps)

    def parity(self) -> str:
        return "even" if sum(e * d for e, d in zip(self.eps, self.delta)) % 2 == 0 else "odd"

    def is_even(self) -> bool:
        return self.parity() == "even"

    def __str__(self):
        return "[%s;%s]" % ("".join(map(str, self.eps)), "".join(map(str, self.delta)))


def parity(c: Characteristic) -> str:
    return c.parity()


@lru_cache(maxsize=None)
def even_characteristics(g: int) -> tuple:
    """All even characteristics of genus g in lexicographic (eps, delta)
    order; there are 2^(g-1) (2^g + 1) of them."""
    if not 1 <= g <= 3:
        raise ValueError("genus must be 1, 2 or 3")
    out = []
    for eps in itertools.product((0, 1), repeat=g):
        for delta in itertools.product((0, 1), repeat=g):
            if sum(e * d for e, d in zip(eps, delta)) % 2 == 0:
                out.append(Characteristic(eps, delta))
    return tuple(out)


@lru_cache(maxsize=None)
def odd_characteristics(g: int) -> tuple:
    if not 1 <= g <= 3:
        raise ValueError("genus must be 1, 2 or 3")
    out = []
    for eps in itertools.product((0, 1), repeat=g):
        for delta in itertools.product((0, 1), repeat=g):
            if sum(e * d for e, d in zip(eps, delta)) % 2 == 1:
                out.append(Characteristic(eps, delta))
    return tuple(out)


@dataclass(frozen=True)
class ThetaValue:
    """Truncated series value with a certified bound on the discarded tail."""

    value: complex
    tail_bound: float
    radius: int

    def __complex__(self):
        return self.value


@lru_cache(maxsize=16)
def _box(g: int, R: int) -> np.ndarray:
    rng = np.arange(-R, R + 1)
    grids = np.meshgrid(*([rng] * g), indexing="ij")
    return np.stack([grd.ravel() for grd in grids], axis=1).astype(np.float64)


def _tail_bound(g: int, R: int, lam: float, shift: float, prefactor: float) -> float:
    """Rigorous bound for the sum over max|N_i| > R, summed per shell of the
    sup-norm; the shell count is (2j+1)^g - (2j-1)^g."""
    if R <= shift:
        return math.inf
    total = 0.0
    j = R + 1
    while True:
        count = (2 * j + 1) ** g - (2 * j - 1) ** g
        expo = -math.pi * lam * (j - shift) ** 2
        term = count * (math.exp(expo) if expo > -745 else 0.0)
        total += term
        if term < 1e-320 or (term < 1e-30 * max(total, 1e-300) and j > R + 4):
            break
        j += 1
        if j > R + 10_000:  # unreachable for lam bounded away from 0
            return math.inf
    return prefactor * total


def _eval_at_radius(c: Characteristic, tau: np.ndarray, z: np.ndarray, R: int) -> complex:
    g = c.genus
    m = _box(g, R) + np.array(c.eps, dtype=np.float64) / 2.0
    quad = np.einsum("ni,ij,nj->n", m, tau, m)
    lin = m @ (z + np.array(c.delta, dtype=np.float64) / 2.0)
    return complex(np.exp(1j * np.pi * quad + 2j * np.pi * lin).sum())


def theta(c: Characteristic, tau, z=None, tol: float = DEFAULT_TOL) -> ThetaValue:
    """Theta with characteristic c at (tau, z), truncated so that the
    certified tail bound is below tol."""
    tau = np.asarray(tau, dtype=complex)
    g = c.genus
    if tau.shape != (g, g):
        raise ValueError(f"tau must be {g}x{g} for this characteristic")
    if not is_siegel_point(tau, tol=1e-9):
        raise ValueError("tau is not a point of the Siegel upper half-space")
    if tol <= 0:
        raise ValueError("tol must be positive")
    z = np.zeros(g, dtype=complex) if z is None else np.asarray(z, dtype=complex).reshape(g)

    lam = float(np.linalg.eigvalsh((tau.imag + tau.imag.T) / 2).min())
    imz = float(np.linalg.norm(z.imag))
    shift = float(np.linalg.norm(np.array(c.eps) / 2.0)) + imz / lam
    prefactor = math.exp(math.pi * imz * imz / lam)

    R = RADIUS_START
    while True:
        bound = _tail_bound(g, R, lam, shift, prefactor)
        if bound <= tol:
            return ThetaValue(value=_eval_at_radius(c, tau, z, R), tail_bound=bound, radius=R)
        if R >= RADIUS_CAP:
            raise PrecisionError(
                f"precision unreachable: radius cap {RADIUS_CAP} gives tail {bound:.3g} > tol {tol:.3g}"
            )
        R *= 2


def theta_constant(c: Characteristic, tau, tol: float = DEFAULT_TOL) -> ThetaValue:
    return theta(c, tau, None, tol)


def _all_even_constants(tau: np.ndarray, tol: float) -> list:
    """Theta constants over all even characteristics of the genus of tau,
    sharing one lattice pass per eps vector."""
    g = tau.shape[0]
    chars = even_characteristics(g)
    lam = float(np.linalg.eigvalsh((tau.imag + tau.imag.T) / 2).min())

    values = {}
    for eps in sorted({c.eps for c in chars}):
        shift = float(np.linalg.norm(np.array(eps) / 2.0))
        R = RADIUS_START
        while True:
            bound = _tail_bound(g, R, lam, shift, 1.0)
            if bound <= tol:
                break
            if R >= RADIUS_CAP:
                raise PrecisionError("precision unreachable for theta-null factor")
            R *= 2
        m = _box(g, R) + np.array(eps, dtype=np.float64) / 2.0
        quad = np.exp(1j * np.pi * np.einsum("ni,ij,nj->n", m, tau, m))
        for c in chars:
            if c.eps == eps:
                phase = np.exp(1j * np.pi * (m @ np.array(c.delta, dtype=np.float64)))
                values[c] = ThetaValue(value=complex((quad * phase).sum()), tail_bound=bound, radius=R)
    return [values[c] for c in chars]


def theta_null(tau, tol: float = DEFAULT_TOL) -> ThetaValue:
    """Product of the 36 even theta constants in genus 3, with a propagated
    error bound: |prod(v_i + e_i) - prod(v_i)| <= prod(|v_i| + t_i) - prod|v_i|."""
    tau = np.asarray(tau, dtype=complex)
    if tau.shape != (3, 3):
        raise ValueError("theta_null is defined for genus 3")
    vals = _all_even_constants(tau, tol)
    prod = complex(1.0)
    mag, mag_up = 1.0, 1.0
    for v in vals:
        prod *= v.value
        mag *= abs(v.value)
        mag_up *= abs(v.value) + v.tail_bound
    return ThetaValue(value=prod, tail_bound=mag_up - mag, radius=max(v.radius for v in vals))


def even_theta_constants(tau, tol: float = DEFAULT_TOL):
    """List of (Characteristic, ThetaValue) over all even characteristics."""
    tau = np.asarray(tau, dtype=complex)
    return list(zip(even_characteristics(tau.shape[0]), _all_even_constants(tau, tol)))


@dataclass(frozen=True)
class FactorizationCheck:
    joint: ThetaValue
    product: complex
    difference: float


def factor_on_decomposable(c: Characteristic, tau1, tau2, z1=None, z2=None, tol=DEFAULT_TOL) -> FactorizationCheck:
    """On a block-diagonal period matrix the theta function factors through
    the blocks; returns both sides and their difference."""
    tau1 = np.asarray(tau1, dtype=complex)
    tau2 = np.asarray(tau2, dtype=complex)
    g1, g2 = tau1.shape[0], tau2.shape[0]
    if c.genus != g1 + g2:
        raise ValueError("characteristic length does not match the genus split")
    z1 = np.zeros(g1, dtype=complex) if z1 is None else np.asarray(z1, dtype=complex).reshape(g1)
    z2 = np.zeros(g2, dtype=complex) if z2 is None else np.asarray(z2, dtype=complex).reshape(g2)
    tau = np.zeros((g1 + g2, g1 + g2), dtype=complex)
    tau[:g1, :g1] = tau1
    tau[g1:, g1:] = tau2
    joint = theta(c, tau, np.concatenate([z1, z2]), tol)
    c1 = Characteristic(c.eps[:g1], c.delta[:g1])
    c2 = Characteristic(c.eps[g1:], c.delta[g1:])
    prod = theta(c1, tau1, z1, tol).value * theta(c2, tau2, z2, tol).value
    return FactorizationCheck(joint=joint, product=prod, difference=abs(joint.value - prod))
