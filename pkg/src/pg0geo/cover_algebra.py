"""Character combinatorics for (Z/2)^n covers of the plane.

Group elements and characters share one bit-vector type; the pairing
<g, h> is the parity of the bitwise AND. Covers are described by attaching
a nonzero character to each branch line.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from pg0geo import linalg
from pg0geo.plane_geom import (
    DuplicateLineError,
    ProjLine,
    SingularPoint,
    arrangement_singular_points,
)

GODEAUX_WEIGHTS = (1, 2, 3, 4)


class ZeroElementError(ValueError):
    """A nonzero group element was required."""


class DegeneratePairError(ValueError):
    """Product relation requested for a degenerate pair (equal or zero)."""


class RankDeficientError(ValueError):
    """Line coefficients do not span the space of linear forms."""


class EmptyPolynomialError(ValueError):
    """A polynomial with no nonzero coefficients was supplied."""


@dataclass(frozen=True, slots=True)
class G2Elt:
    """Element of (Z/2)^n as a fixed-length bit vector."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.bits)

    def is_zero(self) -> bool:
        return all(b == 0 for b in self.bits)

    def __xor__(self, other: G2Elt) -> G2Elt:
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return G2Elt(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def pair(self, other: G2Elt) -> int:
        """The standard pairing: parity of the bitwise AND."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return sum(a & b for a, b in zip(self.bits, other.bits)) % 2

    def __repr__(self) -> str:
        return "(" + ",".join(str(b) for b in self.bits) + ")"


def all_elements(n: int) -> list[G2Elt]:
    return [G2Elt(bits) for bits in product((0, 1), repeat=n)]


def nonzero_elements(n: int) -> list[G2Elt]:
    return [g for g in all_elements(n) if not g.is_zero()]


def annihilator(g: G2Elt, n: int | None = None) -> set[G2Elt]:
    """All h with <g, h> = 0; an index-2 subgroup for g != 0."""
    if n is None:
        n = g.n
    return {h for h in all_elements(n) if g.pair(h) == 0}


@dataclass(frozen=True, slots=True)
class CoverAssignment:
    """Branch lines with one nonzero character of (Z/2)^n attached to each."""

    n: int
    lines: tuple[ProjLine, ...]
    chars: tuple[G2Elt, ...]

    def __post_init__(self):
        if len(self.lines) != len(self.chars):
            raise ValueError("one character per line is required")
        for ch in self.chars:
            if ch.n != self.n:
                raise ValueError("character rank mismatch")
            if ch.is_zero():
                raise ZeroElementError("branch characters must be nonzero")

    @classmethod
    def campedelli(cls, lines) -> CoverAssignment:
        """The standard assignment: the 7 nonzero characters of (Z/2)^3, in
        lexicographic order, attached to the 7 lines in input order."""
        lines = tuple(lines)
        if len(lines) != 7:
            raise ValueError("a Campedelli assignment needs exactly 7 lines")
        return cls(3, lines, tuple(nonzero_elements(3)))

    def is_campedelli(self) -> bool:
        return (
            self.n == 3
            and len(self.lines) == 7
            and sorted(self.chars, key=lambda g: g.bits) == nonzero_elements(3)
        )


@dataclass(frozen=True, slots=True)
class CoverRelation:
    """One relation y_gi * y_gj = y_sum * prod(delta_j over factor_lines)."""

    gi: G2Elt
    gj: G2Elt
    sum: G2Elt
    factor_lines: tuple[int, ...]


def square_equation(g: G2Elt, asg: CoverAssignment) -> list[int]:
    """Indices of the branch lines appearing in y_g^2 (characters outside Ann(g))."""
    if g.is_zero():
        raise ZeroElementError("square equation needs a nonzero element")
    return [j for j, ch in enumerate(asg.chars) if g.pair(ch) == 1]


def product_relation(gi: G2Elt, gj: G2Elt, asg: CoverAssignment) -> CoverRelation:
    """Relation for a pair of distinct nonzero elements."""
    if gi.is_zero() or gj.is_zero() or gi == gj:
        raise DegeneratePairError(
            "product relation needs distinct nonzero elements (gi = gj is the square equation)"
        )
    factors = tuple(
        j
        for j, ch in enumerate(asg.chars)
        if gi.pair(ch) == 1 and gj.pair(ch) == 1
    )
    return CoverRelation(gi, gj, gi ^ gj, factors)


def relations_consistent(asg: CoverAssignment) -> bool:
    """Whether squaring each product relation matches the square equations.

    Checks, for every pair, the multiset identity
    sq(gi) + sq(gj) = sq(gi+gj) + 2*factor_lines.
    """
    for gi, gj in combinations(nonzero_elements(asg.n), 2):
        rel = product_relation(gi, gj, asg)
        lhs = Counter(square_equation(gi, asg)) + Counter(square_equation(gj, asg))
        rhs = Counter(square_equation(rel.sum, asg))
        for j in rel.factor_lines:
            rhs[j] += 2
        if lhs != rhs:
            return False
    return True


def campedelli_quadrics(lines) -> list[tuple[Fraction, ...]]:
    """Coefficient vectors of the quadric relations among the 7 line forms.

    Returns the reduced-echelon basis of {lam : sum(lam_j * delta_j) = 0};
    each vector encodes the quadric sum(lam_j * x_j^2) = 0. The basis has
    exactly 4 vectors when the 7 lines span the space of linear forms.
    """
    lines = list(lines)
    if len(lines) != 7:
        raise ValueError("expected exactly 7 lines")
    columns = [line.coeffs for line in lines]
    rows = [
        [Fraction(columns[j][i]) for j in range(7)]
        for i in range(3)
    ]
    if linalg.rank(rows) < 3:
        raise RankDeficientError("the 7 lines do not span the space of linear forms")
    return [tuple(vec) for vec in linalg.kernel_basis(rows, 7)]


@dataclass(frozen=True, slots=True)
class SmoothnessReport:
    smooth: bool
    bad_points: tuple[SingularPoint, ...]


def campedelli_smoothness(lines) -> SmoothnessReport:
    """The cover is smooth iff no point lies on three or more branch lines."""
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise DuplicateLineError("branch lines must be distinct")
    bad = tuple(
        sp for sp in arrangement_singular_points(lines) if sp.multiplicity >= 3
    )
    return SmoothnessReport(smooth=not bad, bad_points=bad)


def godeaux_invariant_monomials(char_index: int) -> list[tuple[int, int, int, int]]:
    """Degree-5 exponent vectors in 4 variables of weights (1,2,3,4) whose
    weighted degree is char_index mod 5, in lexicographic order."""
    char_index %= 5
    out = []
    for e1 in range(6):
        for e2 in range(6 - e1):
            for e3 in range(6 - e1 - e2):
                e4 = 5 - e1 - e2 - e3
                exps = (e1, e2, e3, e4)
                if sum(w * e for w, e in zip(GODEAUX_WEIGHTS, exps)) % 5 == char_index:
                    out.append(exps)
    return sorted(out)


@dataclass(frozen=True, slots=True)
class FreeActionReport:
    free: bool
    fixed_points_hit: tuple[tuple[int, int, int, int], ...]


def godeaux_free_action(coeffs: dict) -> FreeActionReport:
    """Whether the weight-(1,2,3,4) action is free on the invariant quintic.

    The fixed points of the action on P^3 are the 4 coordinate points, and
    the quintic avoids coordinate point i iff the coefficient of x_i^5 is
    nonzero.
    """
    invariant = set(godeaux_invariant_monomials(0))
    cleaned = {}
    for exps, value in coeffs.items():
        exps = tuple(exps)
        if exps not in invariant:
            raise ValueError(f"monomial {exps} is not an invariant quintic monomial")
        value = Fraction(value)
        if value != 0:
            cleaned[exps] = value
    if not cleaned:
        raise EmptyPolynomialError("the quintic has no nonzero coefficients")
    hit = []
    for i in range(4):
        fifth_power = tuple(5 if j == i else 0 for j in range(4))
        if cleaned.get(fifth_power, Fraction(0)) == 0:
            hit.append(tuple(1 if j == i else 0 for j in range(4)))
    return FreeActionReport(free=not hit, fixed_points_hit=tuple(hit))
