"""The eight GL(3,Z)-orbit representatives of boundary cones of the (unique
minimal) toroidal compactification of A_3, their bounded/unbounded coordinate
changes, and the monomial-valuation bookkeeping used in every lowest-order
term computation.

Conventions.  For a cone of rank r only the entries q_ij = exp(2 pi i tau_ij)
with i <= j <= r take part in the coordinate change; the q-basis is ordered

    rank 3: (q11, q22, q33, q23, q13, q12)
    rank 2: (q11, q22, q12)
    rank 1: (q11,)

so that for a theta-series term indexed by N in Z^3 the q-exponent vector is
(a1, a2, a3, b1, b2, b3) with a_i = (n_i + eps_i/2)^2 / 2 and
b_i = (n_j + eps_j/2)(n_k + eps_k/2) for {i, j, k} = {1, 2, 3}.

All valuations are exact rationals; no floating point enters this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .intlinalg import fraction_inverse
from .theta import Characteristic, even_characteristics

Q_BASIS_RANK3 = ("q11", "q22", "q33", "q23", "q13", "q12")
Q_BASIS_RANK2 = ("q11", "q22", "q12")
Q_BASIS_RANK1 = ("q11",)


def _form(v):
    # rank-one quadratic form x -> (v . x)^2 as an integer symmetric matrix
    return tuple(tuple(v[i] * v[j] for j in range(3)) for i in range(3))


@dataclass(frozen=True)
class Cone:
    name: str
    generators: tuple  # rank-one integer quadratic forms
    rank: int
    t_exponents: tuple  # integer vectors over the q-basis of the rank
    s_exponents: tuple

    @property
    def dimension(self) -> int:
        return len(self.generators)

    @property
    def n_bounded(self) -> int:
        # r(r+1)/2 - k
        return self.rank * (self.rank + 1) // 2 - self.dimension

    @property
    def q_basis(self) -> tuple:
        return {1: Q_BASIS_RANK1, 2: Q_BASIS_RANK2, 3: Q_BASIS_RANK3}[self.rank]

    def exponent_matrix(self):
        """Square integer matrix whose rows are the exponent vectors of
        (T_1, ..., T_k', S_1, ..., S_l) over the q-basis."""
        return [list(v) for v in self.t_exponents + self.s_exponents]


def _cones() -> tuple:
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    return (
        Cone(
            "sigma_1",
            (_form(e1),),
            rank=1,
            t_exponents=((1,),),
            s_exponents=(),
        ),
        Cone(
            "sigma_1+1",
            (_form(e1), _form(e2)),
            rank=2,
            t_exponents=((1, 0, 0), (0, 1, 0)),
            s_exponents=((0, 0, 1),),
        ),
        Cone(
            "sigma_K3",
            (_form(e1), _form(e2), _form((1, -1, 0))),
            rank=2,
            t_exponents=((1, 0, 1), (0, 1, 1), (0, 0, -1)),
            s_exponents=(),
        ),
        Cone(
            "sigma_1+1+1",
            (_form(e1), _form(e2), _form(e3)),
            rank=3,
            t_exponents=((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)),
            s_exponents=((0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0)),
        ),
        Cone(
            "sigma_K3+1",
            (_form(e1), _form(e2), _form((1, -1, 0)), _form(e3)),
            rank=3,
            t_exponents=(
                (1, 0, 0, 0, 0, 1),
                (0, 1, 0, 0, 0, 1),
                (0, 0, 1, 0, 0, 0),
                (0, 0, 0, 0, 0, -1),
            ),
            s_exponents=((0, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0)),
        ),
        # the C4 cone: equivalently generated by y1^2, y2^2, (y1-y3)^2, (y2-y3)^2
        # after x1 = y2 - y3, x2 = y3 - y1, x3 = y1
        Cone(
            "sigma_C4",
            (_form(e1), _form(e2), _form(e3), _form((1, 1, 1))),
            rank=3,
            t_exponents=(
                (1, 0, 0, -1, 0, 0),
                (0, 1, 0, 0, -1, 0),
                (0, 0, 1, 0, 0, -1),
                (0, 0, 0, 1, 0, 0),
            ),
            s_exponents=((0, 0, 0, -1, 0, 1), (0, 0, 0, -1, 1, 0)),
        ),
        Cone(
            "sigma_K4-1",
            (_form(e1), _form(e2), _form(e3), _form((1, -1, 0)), _form((1, 0, -1))),
            rank=3,
            t_exponents=(
                (1, 0, 0, 0, 1, 1),
                (0, 1, 0, 0, 0, 1),
                (0, 0, 1, 0, 1, 0),
                (0, 0, 0, 0, 0, -1),
                (0, 0, 0, 0, -1, 0),
            ),
            s_exponents=((0, 0, 0, 1, 0, 0),),
        ),
        Cone(
            "sigma_K4",
            (
                _form(e1),
                _form(e2),
                _form(e3),
                _form((1, -1, 0)),
                _form((1, 0, -1)),
                _form((0, 1, -1)),
            ),
            rank=3,
            t_exponents=(
                (1, 0, 0, 0, 1, 1),
                (0, 1, 0, 1, 0, 1),
                (0, 0, 1, 1, 1, 0),
                (0, 0, 0, 0, 0, -1),
                (0, 0, 0, 0, -1, 0),
                (0, 0, 0, -1, 0, 0),
            ),
            s_exponents=(),
        ),
    )


_CATALOG = _cones()
_BY_NAME = {c.name: c for c in _CATALOG}


def cone_catalog() -> tuple:
    return _CATALOG


def get_cone(name: str) -> Cone:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown cone {name!r}; known: {sorted(_BY_NAME)}") from None


_ENTRY_INDEX = {
    "q11": (0, 0),
    "q22": (1, 1),
    "q33": (2, 2),
    "q23": (1, 2),
    "q13": (0, 2),
    "q12": (0, 1),
}


def boundary_coords(cone: Cone, tau):
    """(T, S, moduli) at a genus-3 period point.  Every coordinate is
    computed as exp(2 pi i <exponent vector, tau entries>), never by taking
    powers of q, so fractional or negative exponents are branch-free."""
    tau = np.asarray(tau, dtype=complex)
    entries = np.array([tau[_ENTRY_INDEX[k]] for k in cone.q_basis])
    T = [complex(np.exp(2j * np.pi * np.dot(v, entries))) for v in cone.t_exponents]
    S = [complex(np.exp(2j * np.pi * np.dot(v, entries))) for v in cone.s_exponents]
    r = cone.rank
    moduli = {
        "Z": tau[r:, r:].copy(),
        "cross": tau[:r, r:].copy(),
    }
    return T, S, moduli


@dataclass(frozen=True)
class MonomialExponents:
    """q-exponents of one theta-series term: a_i >= 0 on the diagonal
    variables, b_i on the off-diagonal ones (b_1 ~ q23, b_2 ~ q13, b_3 ~ q12)."""

    a: tuple
    b: tuple


def monomial_exponents(c: Characteristic, N) -> MonomialExponents:
    if c.genus != 3:
        raise ValueError("monomial exponents are a genus-3 computation")
    n = [Fraction(int(x)) for x in N]
    m = [n[i] + Fraction(c.eps[i], 2) for i in range(3)]
    a = tuple(m[i] * m[i] / 2 for i in range(3))
    b = (m[1] * m[2], m[0] * m[2], m[0] * m[1])
    return MonomialExponents(a=a, b=b)


def _dual_map(cone: Cone):
    # columns express each q-basis exponent in the cone variables:
    # for exponent vector x over the q-basis, the variable exponents are
    # inverse(W)^T x with W the stacked exponent matrix.
    W = [[Fraction(x) for x in row] for row in cone.exponent_matrix()]
    Winv = fraction_inverse(W)
    # transpose of the inverse
    n = len(Winv)
    return [[Winv[j][i] for j in range(n)] for i in range(n)]


_DUAL = {c.name: _dual_map(c) for c in _CATALOG}


def _q_exponent_vector(cone: Cone, c: Characteristic, N):
    me = monomial_exponents(c, N)
    if cone.rank == 3:
        return list(me.a) + list(me.b)
    if cone.rank == 2:
        return [me.a[0], me.a[1], me.b[2]]
    return [me.a[0]]


def cone_valuation(cone: Cone, c: Characteristic, N) -> tuple:
    """Exponent of each unbounded variable T_i in the series term indexed by
    N (exact Fractions).  Moduli-paired entries are ignored for rank < 3."""
    x = _q_exponent_vector(cone, c, N)
    dual = _DUAL[cone.name]
    y = [sum(dual[i][j] * x[j] for j in range(len(x))) for i in range(len(x))]
    return tuple(y[: len(cone.t_exponents)])


def bounded_valuation(cone: Cone, c: Characteristic, N) -> tuple:
    """Exponents of the bounded variables S_j for the same term."""
    x = _q_exponent_vector(cone, c, N)
    dual = _DUAL[cone.name]
    y = [sum(dual[i][j] * x[j] for j in range(len(x))) for i in range(len(x))]
    return tuple(y[len(cone.t_exponents):])


def minimal_valuations(cone: Cone, c: Characteristic, box: int):
    """Brute-force minimum of cone_valuation over max|n_i| <= box.

    Returns (min_vector, argmins, unique) where min_vector is the
    componentwise minimum, argmins are the lattice points attaining it, and
    unique says whether the componentwise minimum is actually attained -- the
    certificate that a single monomial divides all others in the divisibility
    partial order.
    """
    if box < 2:
        raise ValueError("box must be at least 2")
    coords = cone.rank  # T-exponents only involve n_1..n_rank
    best = None
    table = {}
    for tup in itertools.product(range(-box, box + 1), repeat=coords):
        N = tuple(tup) + (0,) * (3 - coords)
        v = cone_valuation(cone, c, N)
        table[N] = v
        if best is None:
            best = list(v)
        else:
            for i, x in enumerate(v):
                if x < best[i]:
                    best[i] = x
    best = tuple(best)
    argmins = [N for N, v in table.items() if v == best]
    return best, argmins, bool(argmins)


def aggregate_lot_monomial(cone: Cone, box: int = 3) -> tuple:
    """Componentwise sum over all 36 even characteristics of the minimal
    T-exponent vectors; this is the T-monomial of the lowest-order term of
    the theta-null for this cone."""
    total = None
    for c in even_characteristics(3):
        v, _, unique = minimal_valuations(cone, c, box)
        if not unique:
            raise ArithmeticError(f"no unique minimal monomial for {c} on {cone.name}")
        total = list(v) if total is None else [t + x for t, x in zip(total, v)]
    return tuple(total)


def catalog_json() -> list:
    """Plain-data dump of the catalog (for the CLI)."""
    out = []
    for c in _CATALOG:
        out.append(
            {
                "name": c.name,
                "rank": c.rank,
                "dimension": c.dimension,
                "bounded_count": c.n_bounded,
                "generators": [[list(row) for row in g] for g in c.generators],
                "q_basis": list(c.q_basis),
                "t_exponents": [list(v) for v in c.t_exponents],
                "s_exponents": [list(v) for v in c.s_exponents],
            }
        )
    return out
