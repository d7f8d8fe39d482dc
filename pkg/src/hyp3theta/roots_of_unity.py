"""Exact solver for vanishing Q-linear relations among roots of unity.

A relation sum_i a_i zeta_i = 0 with nonzero rational a_i is *irreducible*
when no proper nonempty subset of the summands vanishes.  For an irreducible
relation of length k, Mann's theorem bounds the solutions: all ratios
zeta_i / zeta_1 are N-th roots of unity for some N dividing the product of
the primes <= k.  The solver enumerates set partitions into irreducible
parts, Mann-bounded exponent tuples inside each part, and a finite set of
relative rotations between parts; every candidate is certified by the exact
cyclotomic zero test.  A brute-force oracle over a fixed order is provided
independently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact import CyclotomicElement, RootOfUnity, lcm_many

SOLVER_LENGTH_CAP = 8
BRUTE_FORCE_ORDER_CAP = 60
BRUTE_FORCE_SPACE_CAP = 5_000_000


class RelationTooLong(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    coefficients: tuple  # nonzero Fractions, length >= 2

    def __post_init__(self):
        co = tuple(Fraction(c) for c in self.coefficients)
        if len(co) < 2:
            raise ValueError("a relation needs at least two summands")
        if any(c == 0 for c in co):
            raise ValueError("relation coefficients must be nonzero")
        object.__setattr__(self, "coefficients", co)

    @property
    def length(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class Solution:
    roots: tuple  # RootOfUnity tuple, normalized so roots[0] == 1
    irreducible: bool
    partition: tuple  # index blocks whose sub-sums vanish


def _primorial(k: int) -> int:
    out = 1
    for p in range(2, k + 1):
        if all(p % q for q in range(2, p)):
            out *= p
    return out


def mann_candidate_orders(k: int) -> list:
    """All divisors of the product of the primes <= k."""
    if k < 2:
        raise ValueError("relations have length >= 2")
    P = _primorial(k)
    return sorted(d for d in range(1, P + 1) if P % d == 0)


def relation_holds(coefficients, roots) -> bool:
    """Exact test of sum a_i zeta_i = 0 via cyclotomic arithmetic, with a
    cheap numeric rejection first (an exact zero embeds below 1e-9 for any
    relation within the solver caps, so the prefilter never drops one)."""
    approx = sum(float(a) * r.to_complex() for a, r in zip(coefficients, roots))
    if abs(approx) > 1e-9:
        return False
    conductor = lcm_many([r.order for r in roots] + [1])
    total = CyclotomicElement.zero(conductor)
    for a, r in zip(coefficients, roots):
        total = total + r.to_cyclotomic(conductor) * Fraction(a)
    return total.is_zero()


def _vanishing_subsets(coefficients, roots):
    n = len(roots)
    out = []
    for mask in range(1, 1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        if 0 < len(idx) < n and relation_holds([coefficients[i] for i in idx], [roots[i] for i in idx]):
            out.append(tuple(idx))
    return out


def is_irreducible(coefficients, roots) -> bool:
    return not _vanishing_subsets(coefficients, roots)


def _normalize(roots):
    base = roots[0].inverse()
    return tuple(base * r for r in roots)


def _set_partitions(items):
    # all partitions of the index list into unordered nonempty blocks
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


_PART_CACHE: dict = {}


def _irreducible_part_solutions(coefficients):
    """Normalized (first entry 1) exact solutions of one irreducible part.
    By Mann's bound the entries lie among the N-th roots for N dividing the
    primorial of the length, even when some entries coincide in value."""
    key = tuple(Fraction(c) for c in coefficients)
    if key in _PART_CACHE:
        return _PART_CACHE[key]
    m = len(coefficients)
    N = _primorial(m)
    if N ** (m - 1) > BRUTE_FORCE_SPACE_CAP:
        raise RelationTooLong(f"irreducible part of length {m} exceeds the enumeration cap")
    sols = []
    for exps in itertools.product(range(N), repeat=m - 1):
        roots = (RootOfUnity(Fraction(0)),) + tuple(RootOfUnity(Fraction(e, N)) for e in exps)
        if relation_holds(coefficients, roots) and is_irreducible(coefficients, roots):
            sols.append(roots)
    _PART_CACHE[key] = sols
    return sols


def solve_vanishing_sum(relation: Relation, rotation_order: int = 12) -> list:
    """All solutions of sum a_i zeta_i = 0 up to global rotation, returned
    with the first root pinned to 1.

    Irreducible solutions are complete by Mann's bound.  Reducible solutions
    carry one free rotation per extra part; those rotations are enumerated
    over the roots of order dividing ``rotation_order``, which keeps the
    output finite (and makes it exhaustive among solutions whose entries all
    have order dividing ``rotation_order``).
    """
    k = relation.length
    if k > SOLVER_LENGTH_CAP:
        raise RelationTooLong(f"relation too long: {k} > {SOLVER_LENGTH_CAP}")
    co = relation.coefficients

    found = {}
    for part in _set_partitions(list(range(k))):
        if any(len(block) < 2 for block in part):
            continue
        blocks = [tuple(sorted(b)) for b in part]
        per_block = []
       	# the block containing index 0 is pinned; later blocks rotate freely
        for block in blocks:
            base = _irreducible_part_solutions([co[i] for i in block])
            if not base:
                per_block = None
                break
            per_block.append(base)
        if per_block is None:
            continue
        rotations = [RootOfUnity(Fraction(j, rotation_order)) for j in range(rotation_order)]
        free = [[RootOfUnity(Fraction(0))]] + [rotations] * (len(blocks) - 1)
        # keep the block holding index 0 first so the pin is meaningful
        order = sorted(range(len(blocks)), key=lambda i: blocks[i])
        blocks = [blocks[i] for i in order]
        per_block = [per_block[i] for i in order]
        for choice in itertools.product(*per_block):
            for rots in itertools.product(*free):
                roots = [None] * k
                for block, sol, rot in zip(blocks, choice, rots):
                    for pos, r in zip(block, sol):
                        roots[pos] = rot * r
                norm = _normalize(tuple(roots))
                if norm in found:
                    continue
                if not relation_holds(co, norm):  # exact certification
                    continue
                whole_irred = len(blocks) == 1 and is_irreducible(co, norm)
                found[norm] = Solution(
                    roots=norm,
                    irreducible=whole_irred,
                    partition=tuple(blocks),
                )
    # a solution reachable by several partitions is stored once (first wins);
    # prefer the irreducible flag when some partition is the whole set
    for norm in list(found):
        if not found[norm].irreducible and is_irreducible(co, norm):
            found[norm] = Solution(roots=norm, irreducible=True, partition=(tuple(range(k)),))
    return sorted(found.values(), key=lambda s: tuple(r.exponent for r in s.roots))


def brute_force_vanishing(relation: Relation, max_order: int) -> list:
    """Exhaustive oracle: all normalized solutions whose entries have order
    dividing max_order, certified exactly."""
    if max_order > BRUTE_FORCE_ORDER_CAP:
        raise ValueError(f"max_order {max_order} exceeds cap {BRUTE_FORCE_ORDER_CAP}")
    k = relation.length
    if max_order ** (k - 1) > BRUTE_FORCE_SPACE_CAP:
        raise ValueError("search space cap exceeded")
    co = relation.coefficients
    out = []
    for exps in itertools.product(range(max_order), repeat=k - 1):
        roots = (RootOfUnity(Fraction(0)),) + tuple(RootOfUnity(Fraction(e, max_order)) for e in exps)
        if relation_holds(co, roots):
            parts = _vanishing_subsets(co, roots)
            out.append(
                Solution(
                    roots=roots,
                    irreducible=not parts,
                    partition=tuple(parts) if parts else (tuple(range(k)),),
                )
            )
    return sorted(out, key=lambda s: tuple(r.exponent for r in s.roots))


# ---------------------------------------------------------------------------
# The four-term factors of the standard-cone leading coefficient


@dataclass(frozen=True)
class FactorFamily:
    """A component of the vanishing locus of one four-term factor: the two
    pinned variables (values +-1 with correlated signs), the free variable,
    and the q-conclusion (squares of the pinned variables are 1)."""

    signs: tuple
    pinned: tuple  # e.g. ("qt12", "qt23")
    pinned_values: tuple  # pairs of +-1
    free: str


_FACTOR_SIGNS = ((-1, -1, 1), (-1, 1, -1), (1, -1, -1), (1, 1, 1))
_VARS = ("qt12", "qt13", "qt23")


def _factor_value(signs, A, B, C, one):
    s1, s2, s3 = signs
    return A * B * C + s1 * A + s2 * B + s3 * C


def analyze_L_factors(enumeration_order: int = 12) -> dict:
    """Classify the root-of-unity zeros of the four 4-term factors
    qt12*qt13*qt23 + s1*qt12 + s2*qt13 + s3*qt23.

    Two certificates are produced per factor: (a) the one-parameter families
    where two variables are pinned to correlated signs in {+1, -1} and the
    factor vanishes identically in the third (verified symbolically); (b) an
    exhaustive exact enumeration over the roots of unity of order dividing
    ``enumeration_order`` (which covers all irreducible solutions, whose
    entries are 12th roots at most by Mann's bound applied to the ratios),
    checking that every zero lies on one of the families.  The q-conclusion
    is that the two pinned variables have squares q = 1.
    """
    N = enumeration_order
    one = CyclotomicElement.from_rational(N, 1)
    report = {}
    for signs in _FACTOR_SIGNS:
        s1, s2, s3 = signs
        families = []
        # pin (A, C): factor = B (A C + s2) + (s1 A + s3 C); identical vanishing
        # needs A C = -s2 and s1 A = -s3 C with A, C in {1, -1}
        for A in (1, -1):
            for C in (1, -1):
                if A * C == -s2 and s1 * A == -s3 * C:
                    families.append(FactorFamily(signs, ("qt12", "qt23"), (A, C), "qt13"))
        # pin (A, B): factor = C (A B + s3) + (s1 A + s2 B)
        for A in (1, -1):
            for B in (1, -1):
                if A * B == -s3 and s1 * A == -s2 * B:
                    families.append(FactorFamily(signs, ("qt12", "qt13"), (A, B), "qt23"))
        # pin (B, C): factor = A (B C + s1) + (s2 B + s3 C)
        for B in (1, -1):
            for C in (1, -1):
                if B * C == -s1 and s2 * B == -s3 * C:
                    families.append(FactorFamily(signs, ("qt13", "qt23"), (B, C), "qt12"))

        strays = []
        zeros = 0
        for ea, eb, ec in itertools.product(range(N), repeat=3):
            A = CyclotomicElement.root(N, ea)
            B = CyclotomicElement.root(N, eb)
            C = CyclotomicElement.root(N, ec)
            if not _factor_value(signs, A, B, C, one).is_zero():
                continue
            zeros += 1
            vals = {"qt12": (ea, A), "qt13": (eb, B), "qt23": (ec, C)}
            on_family = False
            for fam in families:
                ok = True
                for var, want in zip(fam.pinned, fam.pinned_values):
                    exp, _ = vals[var]
                    value_is = 1 if exp == 0 else (-1 if 2 * exp == N else None)
                    if value_is != want:
                        ok = False
                        break
                if ok:
                    on_family = True
                    break
            if not on_family:
                strays.append((Fraction(ea, N), Fraction(eb, N), Fraction(ec, N)))
        report[signs] = {
            "families": families,
            "enumerated_zeros": zeros,
            "strays": strays,
            "q_conclusion": sorted({v for fam in families for v in fam.pinned}),
        }
    return report


def analyze_c4_factor() -> dict:
    """Solve the four sign variants of +-St1 +-St2 + 1 = 0 exactly.

    Any solution is an irreducible length-3 relation (no proper subsum can
    vanish), so by Mann's bound both unknowns are sixth roots of unity after
    dividing by the constant term; the full solution set is enumerated over
    the sixth roots and certified exactly.  Every solution satisfies
    S1 * S2 = (St1 * St2)^2 = 1.
    """
    out = {}
    for s1, s2 in itertools.product((1, -1), repeat=2):
        sols = []
        for e1, e2 in itertools.product(range(6), repeat=2):
            St1 = CyclotomicElement.root(6, e1)
            St2 = CyclotomicElement.root(6, e2)
            if (s1 * St1 + s2 * St2 + 1).is_zero():
                sols.append((RootOfUnity(Fraction(e1, 6)), RootOfUnity(Fraction(e2, 6))))
        product_one = all(((a * b) ** 2).exponent == 0 for a, b in sols)
        out[(s1, s2)] = {"solutions": sols, "s1s2_is_one": product_one}
    return out
