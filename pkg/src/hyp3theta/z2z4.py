"""Exact verification of the explicit period-matrix computation for the
family of genus-3 hyperelliptic curves with reduced automorphism group
Z2 x Z4 (curves w^2 = z(z+1)(z-1)(1 + 2sz^2 + z^4)).

All matrices below are transcribed as literal constants; every identity is
then checked by exact arithmetic over Q(zeta_12) (zeta = primitive 12th root
of unity, i = zeta^3) or over Q(i).  Two of the source displays are known to
be internally inconsistent and are handled explicitly:

* the displayed 4x4 matrix S is off by one entry ((1,3) should be 0; the
  corrected matrix is symplectic and is the one consistent with the final
  6x6 product), and
* the final product is written as C1 BH^-1 S3^-1 but the product consistent
  with both the text (which says BH^T D S3^-1) and the displayed 6x6 value
  is C1 BH^T D S3^-1.

The verifier computes both versions and reports which one reproduces the
displayed value, rather than silently substituting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import GAUSSIAN_I, CyclotomicElement, GaussianRational
from .families import pi_u
from .intlinalg import fraction_inverse, fraction_matmul
from .siegel import is_siegel_point, is_symplectic
from .theta import Characteristic, theta_constant

CONDUCTOR = 12


def _z(k: int) -> CyclotomicElement:
    return CyclotomicElement.root(CONDUCTOR, k)


def _r(q) -> CyclotomicElement:
    return CyclotomicElement.from_rational(CONDUCTOR, q)


HALF = Fraction(1, 2)

# homology action of the order-12 automorphism (z, w) -> (zeta^2 z, zeta w)
M = (
    (0, 0, 0, 1, -1, 0),
    (0, 0, 0, 0, 1, -1),
    (0, 0, 0, 0, 0, 1),
    (-1, 0, 0, 0, 1, 0),
    (-1, -1, 0, 1, 0, 0),
    (-1, -1, -1, 1, 0, 0),
)

# homology action of the order-4 automorphism (z, w) -> (1/z, i w / z^4)
M1 = (
    (0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, -1),
    (0, 0, 0, 0, -1, 1),
    (-1, 0, 0, 0, 0, 0),
    (0, 1, 1, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
)


def _pi_half():
    # full 3x6 period matrix of the special fiber w^2 = z(z^6 - 1), rows
    # normalized so that L Pi = Pi M with L = diag(zeta, zeta^3, zeta^5)
    z = _z
    r = _r
    return (
        (z(2) + z(1), z(2) + r(1), r(1), z(1) - z(2), -z(3), -z(1)),
        (r(HALF) - z(3) * r(HALF), r(0), r(1), r(-HALF) - z(3) * r(HALF), z(3), -z(3)),
        (r(1) - z(1) - z(2) + z(3), r(2) - z(2), r(1), z(4) + z(5), -z(3), -z(5)),
    )


def _b_d():
    # diagonalizes the induced action on differential forms
    z = _z
    r = _r
    return (
        (-z(4) * r(HALF), r(0), r(HALF)),
        (r(0), r(1), r(0)),
        (z(4) * r(HALF), r(0), r(HALF)),
    )


B_H = (
    (0, 0, 1, 0, 0, 0),
    (-1, 0, -1, 1, 0, 0),
    (0, 0, 0, 0, 1, 0),
    (-1, 0, 0, 0, 0, 1),
    (-2, 0, 0, 0, 1, 0),
    (-1, -2, -1, 1, 0, 0),
)

# 4x4 base change to the product polarization, as displayed (left) and with
# the single-entry correction that makes it symplectic (right)
S_DISPLAYED = ((0, 0, 1, -1), (1, 0, 1, 1), (0, 1, 1, 1), (0, 0, 1, 0))
S_CORRECTED = ((0, 0, 0, -1), (1, 0, 1, 1), (0, 1, 1, 1), (0, 0, 1, 0))

D_SCALING = ((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
             (0, 0, 0, 2, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1))

C1 = (
    (1, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (1, 0, 0, 0, 1, 0),
    (-1, 1, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 1),
    (0, -1, 0, 0, 0, 0),
)

C2_FACTOR = (
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (0, 0, -1, 0, 0, -1),
    (0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 0),
)

# the 6x6 value the final product is displayed to equal
FINAL_PRODUCT_DISPLAY = (
    (1, 0, 0, -1, -1, -1),
    (0, 1, 0, -1, 0, -1),
    (0, 0, 1, -1, -1, -1),
    (0, 0, 0, 2, 0, 0),
    (0, 0, 0, 0, 2, 0),
    (0, 0, 0, 0, 0, 2),
)

# intermediate 2x4 period block quoted for the quotient genus-2 family, and
# the special-fiber value of its Type-II parametrization
PI2 = (
    (GaussianRational.of(-1, Fraction(-5, 3)), GaussianRational.of(-1, Fraction(1, 3)),
     GaussianRational.of(2), GaussianRational.of(0)),
    (GaussianRational.of(-1, Fraction(1, 3)), GaussianRational.of(-1, Fraction(2, 3)),
     GaussianRational.of(0), GaussianRational.of(1)),
)
Z2_SPECIAL = (
    (GaussianRational.of(0, Fraction(3, 2)), GaussianRational.of(HALF)),
    (GaussianRational.of(HALF), GaussianRational.of(0, Fraction(3, 2))),
)


def embed_sp4(s4):
    """Upper-left block inclusion Sp4 -> Sp6 on coordinates (1, 2, 4, 5)."""
    out = [[0] * 6 for _ in range(6)]
    out[2][2] = out[5][5] = 1
    pos = [0, 1, 3, 4]
    for i in range(4):
        for j in range(4):
            out[pos[i]][pos[j]] = s4[i][j]
    return tuple(tuple(row) for row in out)


# ---------------------------------------------------------------------------
# small exact linear algebra over Q(zeta_12)


def _cmat(rows):
    return [[x if isinstance(x, CyclotomicElement) else _r(x) for x in row] for row in rows]


def _cmul(A, B):
    return [
        [sum((A[i][k] * B[k][j] for k in range(len(B))), _r(0)) for j in range(len(B[0]))]
        for i in range(len(A))
    ]


def _csub(A, B):
    return [[A[i][j] - B[i][j] for j in range(len(A[0]))] for i in range(len(A))]


def _czero(A):
    return all(x.is_zero() for row in A for x in row)


def _cident(n):
    return [[_r(int(i == j)) for j in range(n)] for i in range(n)]


def _cinv(A):
    n = len(A)
    aug = [[A[i][j] for j in range(n)] + [_r(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
        if p is None:
            raise ZeroDivisionError("singular cyclotomic matrix")
        aug[c], aug[p] = aug[p], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [inv * x for x in aug[c]]
        for r in range(n):
            if r != c and not aug[r][c].is_zero():
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _crank(A):
    m = [row[:] for row in A]
    rows, cols = len(m), len(m[0])
    rank = 0
    for c in range(cols):
        p = next((r for r in range(rank, rows) if not m[r][c].is_zero()), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        inv = m[rank][c].inverse()
        m[rank] = [inv * x for x in m[rank]]
        for r in range(rows):
            if r != rank and not m[r][c].is_zero():
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def _int_pow(mat, n):
    out = [[int(i == j) for j in range(len(mat))] for i in range(len(mat))]
    base = [list(r) for r in mat]
    while n:
        if n & 1:
            out = [[sum(out[i][k] * base[k][j] for k in range(len(base))) for j in range(len(base))] for i in range(len(out))]
        base = [[sum(base[i][k] * base[k][j] for k in range(len(base))) for j in range(len(base))] for i in range(len(base))]
        n >>= 1
    return out


def _int_eq(a, b):
    return all(a[i][j] == b[i][j] for i in range(len(a)) for j in range(len(a[0])))


def _int_ident(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# verification operations


def verify_matrix_relations() -> dict:
    """Exact checks on the transcribed integer matrices."""
    m6 = _int_pow(M, 6)
    m12 = _int_pow(M, 12)
    m1sq = _int_pow(M1, 2)
    report = {
        "M_symplectic": is_symplectic(M),
        "M1_symplectic": is_symplectic(M1),
        "M1_squared_equals_M_pow6": _int_eq(m1sq, m6),
        "M_pow12_identity": _int_eq(m12, _int_ident(6)),
        "S_displayed_symplectic": is_symplectic(S_DISPLAYED),
        "S_corrected_symplectic": is_symplectic(S_CORRECTED),
        "C1_symplectic": is_symplectic(C1),
        "C2_symplectic": is_symplectic(fraction_matmul(C2_FACTOR, C1)),
        "C2_factor_symplectic": is_symplectic(C2_FACTOR),
    }
    report["all_ok"] = all(
        report[k]
        for k in (
            "M_symplectic",
            "M1_symplectic",
            "M1_squared_equals_M_pow6",
            "M_pow12_identity",
            "C1_symplectic",
            "C2_symplectic",
        )
    )
    return report


def solve_LPiM() -> dict:
    """For each eigenvalue zeta^(2j+1) of the diagonal form action, check the
    row space {v : v M = lam v} is one-dimensional and contains the matching
    row of the transcribed period matrix."""
    Pi = _pi_half()
    Mc = _cmat(M)
    Mt = [[Mc[j][i] for j in range(6)] for i in range(6)]
    out = {"rows": []}
    ok = True
    for j, lam in enumerate((_z(1), _z(3), _z(5))):
        A = [[Mt[i][k] - (lam if i == k else _r(0)) for k in range(6)] for i in range(6)]
        corank = 6 - _crank(A)
        row = list(Pi[j])
        lhs = [lam * x for x in row]
        rhs = _cmul([row], Mc)[0]
        satisfied = all((a - b).is_zero() for a, b in zip(lhs, rhs))
        out["rows"].append(
            {"eigenvalue_power": 2 * j + 1, "solution_space_dim": corank, "pi_row_satisfies": satisfied}
        )
        ok = ok and corank == 1 and satisfied
    out["all_ok"] = ok
    return out


def _group_elements():
    """The 48 words M^a M1^b (a < 12, b < 4), deduplicated by value."""
    seen = {}
    Xa = _int_ident(6)
    for a in range(12):
        Xab = [row[:] for row in Xa]
        for b in range(4):
            key = tuple(tuple(r) for r in Xab)
            seen.setdefault(key, (a, b))
            Xab = [[sum(Xab[i][k] * M1[k][j] for k in range(6)) for j in range(6)] for i in range(6)]
        Xa = [[sum(Xa[i][k] * M[k][j] for k in range(6)) for j in range(6)] for i in range(6)]
    return seen


def verify_diagonalizations() -> dict:
    """Search the automorphism words M^a M1^b for the involution that B_H
    conjugates to diag(1, 1, -1, 1, 1, -1) on homology, and for the matching
    form action (read off through the period matrix) that B_D conjugates to
    diag(1, 1, -1).  The defining displays leave the acting element implicit,
    so it is identified by search and reported, never assumed."""
    target_h = [[_r((1, 1, -1, 1, 1, -1)[i]) if i == j else _r(0) for j in range(6)] for i in range(6)]
    BHc = _cmat(B_H)
    BHinv = _cinv(BHc)
    BD = _b_d()
    BDinv = _cinv([list(r) for r in BD])
    Pi = _pi_half()
    Pir = [[Pi[i][3 + j] for j in range(3)] for i in range(3)]
    Pir_inv = _cinv(Pir)

    homology_hits = []
    forms_hits = []
    for key, (a, b) in sorted(_group_elements().items(), key=lambda kv: kv[1]):
        Xc = _cmat([list(r) for r in key])
        conj = _cmul(_cmul(BHc, Xc), BHinv)
        if _czero(_csub(conj, target_h)):
            homology_hits.append((a, b))
        # form action L_X with L_X Pi = Pi X
        PiX = _cmul([list(r) for r in Pi], Xc)
        LX = _cmul([[PiX[i][3 + j] for j in range(3)] for i in range(3)], Pir_inv)
        # consistency on the left block
        left_ok = _czero(_csub(_cmul(LX, [[Pi[i][j] for j in range(3)] for i in range(3)]),
                               [[PiX[i][j] for j in range(3)] for i in range(3)]))
        # accept any diagonal of signature (+1, +1, -1); the source display
        # quotes B_D^-1 L B_D = diag(1, 1, -1) but the transcribed B_D gives
        # B_D L B_D^-1 = diag(-1, 1, 1), so both orientation and diagonal
        # order are reported rather than assumed
        for orient, conj3 in (
            ("BD^-1 L BD", _cmul(_cmul(BDinv, LX), [list(r) for r in BD])),
            ("BD L BD^-1", _cmul(_cmul([list(r) for r in BD], LX), BDinv)),
        ):
            if not left_ok:
                continue
            if any(not conj3[i][j].is_zero() for i in range(3) for j in range(3) if i != j):
                continue
            diag = [conj3[i][i] for i in range(3)]
            if any(not d.is_rational() for d in diag):
                continue
            vals = sorted(d.coords[0] for d in diag)
            if vals == [Fraction(-1), Fraction(1), Fraction(1)]:
                forms_hits.append((a, b, orient, tuple(str(d.coords[0]) for d in diag)))

    report = {"homology_words": homology_hits, "forms_words": forms_hits}
    if homology_hits:
        a, b = homology_hits[0]
        X = _int_pow(M, a)
        X1 = _int_pow(M1, b)
        X = [[sum(X[i][k] * X1[k][j] for k in range(6)) for j in range(6)] for i in range(6)]
        report["involution"] = _int_eq(_int_pow(X, 2), _int_ident(6))
        fix = [[Fraction(X[i][j] - int(i == j)) for j in range(6)] for i in range(6)]
        from .intlinalg import rational_rank

        report["plus_eigenspace_dim"] = 6 - rational_rank(fix)
    report["unique_element"] = len({tuple(h[:2]) for h in homology_hits}) >= 1 and len(
        {tuple(tuple(r) for r in _int_pow(M, a)) for a, b in homology_hits}
    ) <= len(homology_hits)
    matched = {(a, b) for a, b, *_ in forms_hits}
    report["homology_forms_consistent"] = bool(matched.intersection(set(homology_hits)))
    report["all_ok"] = bool(homology_hits) and report.get("involution", False) and report[
        "plus_eigenspace_dim"
    ] == 4 and report["homology_forms_consistent"]
    return report


# ---------------------------------------------------------------------------
# affine-in-parameter exact matrices over Q(i)


@dataclass(frozen=True)
class AffineGR:
    """c0 + c1 * parameter with Gaussian-rational coefficients."""

    c0: GaussianRational
    c1: GaussianRational

    @classmethod
    def const(cls, x) -> "AffineGR":
        if not isinstance(x, GaussianRational):
            x = GaussianRational.of(x)
        return cls(x, GaussianRational.of(0))

    @classmethod
    def param(cls, coeff=1) -> "AffineGR":
        c = coeff if isinstance(coeff, GaussianRational) else GaussianRational.of(coeff)
        return cls(GaussianRational.of(0), c)

    def __add__(self, other):
        other = other if isinstance(other, AffineGR) else AffineGR.const(other)
        return AffineGR(self.c0 + other.c0, self.c1 + other.c1)

    def __sub__(self, other):
        other = other if isinstance(other, AffineGR) else AffineGR.const(other)
        return AffineGR(self.c0 - other.c0, self.c1 - other.c1)

    def scale(self, g: GaussianRational) -> "AffineGR":
        return AffineGR(self.c0 * g, self.c1 * g)

    def is_zero(self) -> bool:
        return self.c0.is_zero() and self.c1.is_zero()

    def at(self, value: complex) -> complex:
        return self.c0.to_complex() + self.c1.to_complex() * value


def _aff_zeros(n):
    return [[AffineGR.const(0) for _ in range(n)] for _ in range(n)]


def _aff_equal(A, B):
    return all((A[i][j] - B[i][j]).is_zero() for i in range(len(A)) for j in range(len(A[0])))


def _gr_matmul_aff(Q, A):
    """(rational constant matrix Q) @ (affine matrix A)."""
    n = len(A)
    out = _aff_zeros(n)
    for i in range(n):
        for j in range(n):
            acc = AffineGR.const(0)
            for k in range(n):
                acc = acc + A[k][j].scale(GaussianRational.of(Fraction(Q[i][k])))
            out[i][j] = acc
    return out


def _aff_matmul_gr(A, Q):
    n = len(A)
    out = _aff_zeros(n)
    for i in range(n):
        for j in range(n):
            acc = AffineGR.const(0)
            for k in range(n):
                acc = acc + A[i][k].scale(Q[k][j])
            out[i][j] = acc
    return out


def _gr_inverse(G):
    n = len(G)
    aug = [
        [G[i][j] for j in range(n)] + [GaussianRational.of(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for c in range(n):
        p = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
        if p is None:
            raise ZeroDivisionError("singular Gaussian-rational matrix")
        aug[c], aug[p] = aug[p], aug[c]
        inv = GaussianRational.of(1) / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and not aug[r][c].is_zero():
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _fractional_action_affine(gamma_rational, Z):
    """(A Z + B)(C Z + D)^(-1) for a rational 2g x 2g similitude acting on an
    affine-in-parameter symmetric matrix; requires C Z + D constant in the
    parameter (true in every use here)."""
    n = len(Z)
    A = [[Fraction(gamma_rational[i][j]) for j in range(n)] for i in range(n)]
    B = [[Fraction(gamma_rational[i][n + j]) for j in range(n)] for i in range(n)]
    C = [[Fraction(gamma_rational[n + i][j]) for j in range(n)] for i in range(n)]
    Dm = [[Fraction(gamma_rational[n + i][n + j]) for j in range(n)] for i in range(n)]
    num = _gr_matmul_aff(A, Z)
    for i in range(n):
        for j in range(n):
            num[i][j] = num[i][j] + AffineGR.const(GaussianRational.of(B[i][j]))
    den_aff = _gr_matmul_aff(C, Z)
    den = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = den_aff[i][j] + AffineGR.const(GaussianRational.of(Dm[i][j]))
            if not entry.c1.is_zero():
                raise ArithmeticError("denominator depends on the parameter; action not affine")
            row.append(entry.c0)
        den.append(row)
    return _aff_matmul_gr(num, _gr_inverse(den))


def _target_zs():
    """diag(Z_S, i) with Z_S = ((S, 1/2), (1/2, S)), affine in S."""
    Z = _aff_zeros(3)
    Z[0][0] = AffineGR.param()
    Z[1][1] = AffineGR.param()
    Z[0][1] = Z[1][0] = AffineGR.const(GaussianRational.of(HALF))
    Z[2][2] = AffineGR.const(GAUSSIAN_I)
    return Z


def first_matrix_affine():
    """((t/2 - 1/2, -1/4, -1/2), (-1/4, t/2, -1/2), (-1/2, -1/2, -1/2 + i/2))."""
    G = GaussianRational.of
    Z = _aff_zeros(3)
    Z[0][0] = AffineGR(G(-HALF), G(HALF))
    Z[1][1] = AffineGR(G(0), G(HALF))
    Z[0][1] = Z[1][0] = AffineGR.const(G(Fraction(-1, 4)))
    Z[0][2] = Z[2][0] = AffineGR.const(G(-HALF))
    Z[1][2] = Z[2][1] = AffineGR.const(G(-HALF))
    Z[2][2] = AffineGR.const(G(-HALF, HALF))
    return Z


def second_matrix_affine():
    G = GaussianRational.of
    Z = _aff_zeros(3)
    Z[0][0] = AffineGR(G(Fraction(-1, 4), Fraction(1, 4)), G(HALF))
    Z[1][1] = AffineGR(G(Fraction(1, 4), Fraction(1, 4)), G(HALF))
    Z[0][1] = Z[1][0] = AffineGR.const(G(0, Fraction(1, 4)))
    Z[0][2] = Z[2][0] = AffineGR.const(G(HALF, HALF))
    Z[1][2] = Z[2][1] = AffineGR.const(G(HALF, HALF))
    Z[2][2] = AffineGR.const(G(0, 1))
    return Z


def first_matrix(t: complex) -> np.ndarray:
    return np.array([[e.at(t) for e in row] for row in first_matrix_affine()])


def second_matrix(t: complex) -> np.ndarray:
    return np.array([[e.at(t) for e in row] for row in second_matrix_affine()])


def _stack_rows(mat):
    return [list(r) for r in mat]


def verify_final_period_matrix() -> dict:
    """Exact verification of the closing identity: the 6x6 integer product,
    its affine action on diag(Z_S, i), and the match with the displayed
    period matrices and with the Pi_u family."""
    BHinv = fraction_inverse(_stack_rows(B_H))
    BHt = [[Fraction(B_H[j][i]) for j in range(6)] for i in range(6)]
    S3_disp = _stack_rows(embed_sp4(S_DISPLAYED))
    S3_corr = _stack_rows(embed_sp4(S_CORRECTED))

    displayed_product = fraction_matmul(fraction_matmul(_stack_rows(C1), BHinv), fraction_inverse(S3_disp))
    text_product = fraction_matmul(
        fraction_matmul(fraction_matmul(_stack_rows(C1), BHt), _stack_rows(D_SCALING)),
        fraction_inverse(S3_corr),
    )
    target = [[Fraction(x) for x in row] for row in FINAL_PRODUCT_DISPLAY]
    report = {
        "displayed_product_matches_display": displayed_product == target,
        "text_product_matches_display": text_product == target,
    }
    G = target  # verified value used for the action

    acted = _fractional_action_affine([list(map(int, r)) for r in FINAL_PRODUCT_DISPLAY], _target_zs())
    report["first_matrix_entrywise"] = _aff_equal(acted, first_matrix_affine())
    # parameter identification by the (2,2) entries: t/2 == S/2
    report["parameter_match"] = (acted[1][1].c1 - GaussianRational.of(HALF)).is_zero()

    C2 = fraction_matmul(_stack_rows(C2_FACTOR), _stack_rows(C1))
    G2 = fraction_matmul(
        fraction_matmul(fraction_matmul(C2, BHt), _stack_rows(D_SCALING)), fraction_inverse(S3_corr)
    )
    acted2 = _fractional_action_affine(G2, _target_zs())
    report["second_matrix_entrywise"] = _aff_equal(acted2, second_matrix_affine())

    # X-relation between the two displayed matrices
    xact = _fractional_action_affine(_stack_rows(C2_FACTOR), first_matrix_affine())
    report["second_is_C2C1inv_of_first"] = _aff_equal(xact, second_matrix_affine())

    # second matrix == Pi_u((1+i)/2) at t' = t/2 + 1/4 + i/4, modulo an
    # integer symmetric translation
    u = GaussianRational.of(HALF, HALF)
    off = pi_u(u).offset_exact
    G_ = GaussianRational.of
    shift = G_(Fraction(1, 4), Fraction(1, 4))
    translation = []
    is_integral = True
    second = second_matrix_affine()
    lin_ok = True
    for i in range(3):
        row = []
        for j in range(3):
            slope_ij = G_(1) if (i == j and i < 2) else G_(0)
            lin_ok = lin_ok and (second[i][j].c1 - slope_ij * G_(HALF)).is_zero()
            const_expected = off[i][j] + shift * slope_ij
            diff = second[i][j].c0 - const_expected
            row.append(diff)
            is_integral = is_integral and diff.is_gaussian_integer() and diff.im == 0
        translation.append(tuple(row))
    symmetric = all(
        (translation[i][j] - translation[j][i]).is_zero() for i in range(3) for j in range(3)
    )
    report["pi_u_match_mod_integer_translation"] = lin_ok and is_integral and symmetric
    report["integer_translation"] = tuple(
        tuple(int(x.re) for x in row) for row in translation
    ) if is_integral else None

    # special fiber: at S = 3i/2 the genus-2 block of the isogeny target
    # diag(Z_S, i) is the quoted CM point
    s_special = GaussianRational.of(0, Fraction(3, 2))
    zs = _target_zs()
    block = [[zs[i][j].c0 + zs[i][j].c1 * s_special for j in range(2)] for i in range(2)]
    report["special_fiber_block_is_Z2"] = all(
        (block[i][j] - Z2_SPECIAL[i][j]).is_zero() for i in range(2) for j in range(2)
    )
    report["pi2_display_reproducible"] = _pi2_conjugation_attempt()

    report["all_ok"] = all(
        report[k]
        for k in (
            "text_product_matches_display",
            "first_matrix_entrywise",
            "parameter_match",
            "second_matrix_entrywise",
            "second_is_C2C1inv_of_first",
            "pi_u_match_mod_integer_translation",
            "special_fiber_block_is_Z2",
        )
    )
    return report


def _pi2_conjugation_attempt() -> bool:
    """Try to reproduce the quoted 2x4 block passing to the CM point under
    the 4x4 base change, over all transpose/inverse conventions.  Returns
    False when, as with the source displays, none matches."""
    W = [[PI2[i][j] for j in range(2)] for i in range(2)]
    for s4 in (S_DISPLAYED, S_CORRECTED):
        mats = [_stack_rows(s4)]
        mats.append([[Fraction(s4[j][i]) for j in range(4)] for i in range(4)])
        try:
            mats.append(fraction_inverse(mats[0]))
            mats.append(fraction_inverse(mats[1]))
        except ZeroDivisionError:
            pass
        for V in mats:
            a = [[GaussianRational.of(V[i][j]) for j in range(2)] for i in range(2)]
            b = [[GaussianRational.of(V[i][2 + j]) for j in range(2)] for i in range(2)]
            c = [[GaussianRational.of(V[2 + i][j]) for j in range(2)] for i in range(2)]
            d = [[GaussianRational.of(V[2 + i][2 + j]) for j in range(2)] for i in range(2)]

            def mm(P, Q):
                return [
                    [sum((P[i][k] * Q[k][j] for k in range(2)), GaussianRational.of(0)) for j in range(2)]
                    for i in range(2)
                ]

            num = [[mm(a, W)[i][j] + b[i][j] for j in range(2)] for i in range(2)]
            den = [[mm(c, W)[i][j] + d[i][j] for j in range(2)] for i in range(2)]
            try:
                out = mm(num, _gr_inverse(den))
            except ZeroDivisionError:
                continue
            if all((out[i][j] - Z2_SPECIAL[i][j]).is_zero() for i in range(2) for j in range(2)):
                return True
    return False


def numeric_crosscheck(tol: float = 1e-9) -> dict:
    """Complex-embedding checks tying the exact computation to the theta
    evaluator: the distinguished theta constant vanishes on the family, both
    displayed matrices are Siegel points, and the two are related by the
    expected integral symplectic change."""
    out = {}
    t = 2j
    second = second_matrix(t)
    first = first_matrix(t)
    # the integer translation shifts the vanishing characteristic's delta
    out["theta_110_111_on_second"] = abs(
        theta_constant(Characteristic((1, 1, 0), (1, 1, 1)), second, tol=1e-12).value
    )
    u = GaussianRational.of(HALF, HALF)
    tprime = t / 2 + 0.25 + 0.25j
    tau_u = pi_u(u).at(tprime)
    out["theta_110_110_on_pi_u"] = abs(
        theta_constant(Characteristic((1, 1, 0), (1, 1, 0)), tau_u, tol=1e-12).value
    )
    out["vanishing_ok"] = (
        out["theta_110_111_on_second"] < tol and out["theta_110_110_on_pi_u"] < tol
    )
    out["first_is_siegel_point_t_i"] = is_siegel_point(first_matrix(1j))
    out["second_is_siegel_point_t_i"] = is_siegel_point(second_matrix(1j))
    out["first_is_siegel_point_t_2i"] = is_siegel_point(first)
    out["second_is_siegel_point_t_2i"] = is_siegel_point(second)
    out["all_ok"] = out["vanishing_ok"] and all(
        out[k] for k in out if k.endswith("_t_i") or k.endswith("_t_2i")
    )
    return out


def run_all(tol: float = 1e-9) -> dict:
    report = {
        "matrix_relations": verify_matrix_relations(),
        "eigenrow_equation": solve_LPiM(),
        "diagonalizations": verify_diagonalizations(),
        "final_period_matrix": verify_final_period_matrix(),
        "numeric_crosscheck": numeric_crosscheck(tol),
    }
    report["all_ok"] = all(section["all_ok"] for section in report.values() if isinstance(section, dict))
    return report
