"""Exact projective plane: points, lines, conics, and incidence.

Coordinates are homogeneous rational triples stored in a canonical integer
form (denominators cleared, gcd 1, first nonzero entry positive), so equality
is structural and every object is hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

Rat = Fraction
RatLike = int | Fraction


class IdenticalPointsError(ValueError):
    """Two points that were required to be distinct coincide."""


class DuplicateLineError(ValueError):
    """A line arrangement contains the same line twice."""


class CollinearBaseError(ValueError):
    """Conic pencil base points are not in general position."""


class ZeroParameterError(ValueError):
    """A pencil parameter (0:0) was supplied."""


def _canonical_triple(coords) -> tuple[int, int, int]:
    """Clear denominators, divide by the gcd, make the first nonzero entry
    positive."""
    fracs = [Fraction(c) for c in coords]
    if len(fracs) != 3:
        raise ValueError(f"expected 3 homogeneous coordinates, got {len(fracs)}")
    if all(f == 0 for f in fracs):
        raise ValueError("homogeneous coordinates must not all vanish")
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-u for u in ints]
            break
    return (ints[0], ints[1], ints[2])


def _cross(a: tuple[int, int, int], b: tuple[int, int, int]) -> tuple[int, int, int]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


@dataclass(frozen=True, slots=True)
class ProjPoint:
    """Point of P^2 in canonical homogeneous coordinates."""

    coords: tuple[int, int, int]

    def __init__(self, a: RatLike, b: RatLike, c: RatLike):
        object.__setattr__(self, "coords", _canonical_triple((a, b, c)))

    def __repr__(self) -> str:
        return "({}:{}:{})".format(*self.coords)


@dataclass(frozen=True, slots=True)
class ProjLine:
    """Line of P^2 in canonical dual homogeneous coordinates."""

    coeffs: tuple[int, int, int]

    def __init__(self, a: RatLike, b: RatLike, c: RatLike):
        object.__setattr__(self, "coeffs", _canonical_triple((a, b, c)))

    def __repr__(self) -> str:
        return "[{}:{}:{}]".format(*self.coeffs)

    def two_points(self) -> tuple[ProjPoint, ProjPoint]:
        """Two distinct points spanning the line."""
        candidates = [
            _cross(self.coeffs, (1, 0, 0)),
            _cross(self.coeffs, (0, 1, 0)),
            _cross(self.coeffs, (0, 0, 1)),
        ]
        points = []
        for c in candidates:
            if c != (0, 0, 0):
                p = ProjPoint(*c)
                if p not in points:
                    points.append(p)
            if len(points) == 2:
                return points[0], points[1]
        raise ValueError("degenerate line coefficients")


@dataclass(frozen=True, slots=True)
class Conic:
    """Plane conic as a canonical symmetric 3x3 integer matrix.

    `sym` stores the upper triangle (a11, a12, a13, a22, a23, a33) of the
    defining quadratic form x^T A x.
    """

    sym: tuple[int, int, int, int, int, int]

    def __init__(self, entries) -> None:
        fracs = [Fraction(e) for e in entries]
        if len(fracs) != 6:
            raise ValueError("a conic needs 6 upper-triangle entries")
        if all(f == 0 for f in fracs):
            raise ValueError("conic form must not vanish identically")
        lcm = 1
        for f in fracs:
            lcm = lcm * f.denominator // gcd(lcm, f.denominator)
        ints = [int(f * lcm) for f in fracs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        for v in ints:
            if v != 0:
                if v < 0:
                    ints = [-u for u in ints]
                break
        object.__setattr__(self, "sym", tuple(ints))

    def matrix(self) -> list[list[int]]:
        a11, a12, a13, a22, a23, a33 = self.sym
        return [[a11, a12, a13], [a12, a22, a23], [a13, a23, a33]]

    def value_at(self, p: ProjPoint) -> int:
        x, y, z = p.coords
        a11, a12, a13, a22, a23, a33 = self.sym
        return (
            a11 * x * x + a22 * y * y + a33 * z * z
            + 2 * (a12 * x * y + a13 * x * z + a23 * y * z)
        )

    def contains(self, p: ProjPoint) -> bool:
        return self.value_at(p) == 0

    def det(self) -> int:
        m = self.matrix()
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    def has_line_component(self, line: ProjLine) -> bool:
        """Whether the quadratic form is divisible by the linear form.

        A conic vanishes on a line iff it vanishes at three distinct points
        of the line (a binary quadratic form with three roots is zero).
        """
        p, q = line.two_points()
        r = ProjPoint(*(pc + qc for pc, qc in zip(p.coords, q.coords)))
        return self.contains(p) and self.contains(q) and self.contains(r)


@dataclass(frozen=True, slots=True)
class SingularPoint:
    """Point lying on at least two lines of an arrangement."""

    point: ProjPoint
    lines_through: frozenset[int]

    @property
    def multiplicity(self) -> int:
        return len(self.lines_through)


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The unique line through two distinct points (cross product)."""
    if p == q:
        raise IdenticalPointsError(f"no unique line through coincident points {p}")
    return ProjLine(*_cross(p.coords, q.coords))


def intersection_point(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The unique intersection point of two distinct lines."""
    if l1 == l2:
        raise DuplicateLineError(f"no unique intersection of coincident lines {l1}")
    return ProjPoint(*_cross(l1.coeffs, l2.coeffs))


def point_on_line(p: ProjPoint, l: ProjLine) -> bool:
    return sum(a * b for a, b in zip(p.coords, l.coeffs)) == 0


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    """Whether the 3x3 determinant of the coordinate triples vanishes."""
    (a, b, c), (d, e, f), (g, h, i) = p.coords, q.coords, r.coords
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g) == 0


def arrangement_singular_points(lines) -> list[SingularPoint]:
    """All points on >= 2 lines of the arrangement, with their full incidence.

    Output is sorted lexicographically on canonical coordinates. Raises
    DuplicateLineError when two lines coincide.
    """
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise DuplicateLineError("arrangement contains a repeated line")
    incidence: dict[ProjPoint, set[int]] = {}
    for i, j in combinations(range(len(lines)), 2):
        pt = intersection_point(lines[i], lines[j])
        if pt not in incidence:
            incidence[pt] = {
                k for k, line in enumerate(lines) if point_on_line(pt, line)
            }
    return [
        SingularPoint(pt, frozenset(incidence[pt]))
        for pt in sorted(incidence, key=lambda p: p.coords)
    ]


def _line_pair_conic(l1: ProjLine, l2: ProjLine) -> tuple[int, ...]:
    """Upper triangle of the (unnormalised) form (l1.x)(l2.x)."""
    a, b = l1.coeffs, l2.coeffs
    return (
        2 * a[0] * b[0],
        a[0] * b[1] + a[1] * b[0],
        a[0] * b[2] + a[2] * b[0],
        2 * a[1] * b[1],
        a[1] * b[2] + a[2] * b[1],
        2 * a[2] * b[2],
    )


def conic_pencil_member(base, param: tuple[RatLike, RatLike]) -> Conic:
    """Member of the conic pencil through four general-position base points.

    The pencil is spanned by the two degenerate members on the fixed pairing
    of the base points (b1b2|b3b4) and (b1b3|b2b4); param (lam:mu) selects
    lam*Q1 + mu*Q2.
    """
    base = list(base)
    if len(base) != 4:
        raise ValueError("a conic pencil needs exactly 4 base points")
    if len(set(base)) != 4:
        raise CollinearBaseError("pencil base points must be distinct")
    for trio in combinations(base, 3):
        if collinear(*trio):
            raise CollinearBaseError(f"pencil base points {trio} are collinear")
    lam, mu = Fraction(param[0]), Fraction(param[1])
    if lam == 0 and mu == 0:
        raise ZeroParameterError("pencil parameter must not be (0:0)")
    q1 = _line_pair_conic(line_through(base[0], base[1]), line_through(base[2], base[3]))
    q2 = _line_pair_conic(line_through(base[0], base[2]), line_through(base[1], base[3]))
    return Conic([lam * a + mu * b for a, b in zip(q1, q2)])


def conic_is_irreducible(c: Conic) -> bool:
    """True iff the symmetric matrix has rank 3; rank <= 2 conics split."""
    return c.det() != 0


def _det3(m) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _adjugate3(m):
    c = lambda i, j: m[i][j]
    return [
        [
            c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1),
            c(0, 2) * c(2, 1) - c(0, 1) * c(2, 2),
            c(0, 1) * c(1, 2) - c(0, 2) * c(1, 1),
        ],
        [
            c(1, 2) * c(2, 0) - c(1, 0) * c(2, 2),
            c(0, 0) * c(2, 2) - c(0, 2) * c(2, 0),
            c(0, 2) * c(1, 0) - c(0, 0) * c(1, 2),
        ],
        [
            c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0),
            c(0, 1) * c(2, 0) - c(0, 0) * c(2, 1),
            c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0),
        ],
    ]


def transform_point(matrix, p: ProjPoint) -> ProjPoint:
    """Image of a point under an invertible 3x3 matrix acting on coordinates."""
    if _det3(matrix) == 0:
        raise ValueError("projective transformation must be invertible")
    x, y, z = p.coords
    return ProjPoint(*(row[0] * x + row[1] * y + row[2] * z for row in matrix))


def transform_line(matrix, l: ProjLine) -> ProjLine:
    """Image of a line: coefficients transform by the adjugate (inverse
    transpose up to scale), so incidence is preserved."""
    if _det3(matrix) == 0:
        raise ValueError("projective transformation must be invertible")
    adj = _adjugate3(matrix)
    a, b, c = l.coeffs
    return ProjLine(*(a * adj[0][j] + b * adj[1][j] + c * adj[2][j] for j in range(3)))
