"""Divisor classes on the blow-up of the plane at r labeled points.

The lattice is Z<L, E_1, ..., E_r> with L^2 = 1, E_i^2 = -1 and mixed
products 0; a class is written d*L + sum(m_i * E_i).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from pg0geo import linalg
from pg0geo.plane_geom import (
    Conic,
    ProjPoint,
    conic_is_irreducible,
    line_through,
    point_on_line,
)


class LatticeMismatchError(ValueError):
    """Two divisor classes live on different lattices."""


class UnvalidatedConfigError(ValueError):
    """A configuration-level operation was fed an invalid configuration."""


class NotDelPezzoError(ValueError):
    """Some enumerated curve class has negative anticanonical degree."""


class DegenerateConfigError(ValueError):
    """Blown-up points too degenerate for the conic enumeration (>= 4 on a line)."""


@dataclass(frozen=True, slots=True)
class Lattice:
    """Blow-up lattice, determined by the labels of the blown-up points."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("lattice labels must be distinct")

    @property
    def r(self) -> int:
        return len(self.labels)

    def zero(self) -> DivisorClass:
        return DivisorClass(self, 0, (0,) * self.r)

    def line(self) -> DivisorClass:
        return DivisorClass(self, 1, (0,) * self.r)

    def exceptional(self, label: str) -> DivisorClass:
        i = self.labels.index(label)
        return DivisorClass(self, 0, tuple(1 if j == i else 0 for j in range(self.r)))

    def from_coeffs(self, degree: int, mults) -> DivisorClass:
        return DivisorClass(self, degree, tuple(mults))


@dataclass(frozen=True, slots=True)
class DivisorClass:
    """Integer class degree*L + sum(mults[i]*E_i) on a fixed lattice."""

    lattice: Lattice
    degree: int
    mults: tuple[int, ...]

    def __post_init__(self):
        if len(self.mults) != self.lattice.r:
            raise ValueError("multiplicity vector length does not match lattice rank")

    def _check(self, other: DivisorClass) -> None:
        if self.lattice != other.lattice:
            raise LatticeMismatchError(
                f"classes on different lattices: {self.lattice.labels} vs {other.lattice.labels}"
            )

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(
            self.lattice,
            self.degree + other.degree,
            tuple(a + b for a, b in zip(self.mults, other.mults)),
        )

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(
            self.lattice,
            self.degree - other.degree,
            tuple(a - b for a, b in zip(self.mults, other.mults)),
        )

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.lattice, -self.degree, tuple(-a for a in self.mults))

    def __rmul__(self, k: int) -> DivisorClass:
        return DivisorClass(self.lattice, k * self.degree, tuple(k * a for a in self.mults))

    def __repr__(self) -> str:
        parts = [f"{self.degree}L"] if self.degree else []
        for label, m in zip(self.lattice.labels, self.mults):
            if m:
                parts.append(f"{'+' if m > 0 else '-'}{abs(m) if abs(m) != 1 else ''}{label}")
        text = "".join(parts) or "0"
        return text[1:] if text.startswith("+") else text


class CurveClassKind(enum.Enum):
    MINUS_ONE = "MinusOne"
    MINUS_TWO = "MinusTwo"
    OTHER = "Other"


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection number: deg*deg - sum of products of E-coefficients."""
    a._check(b)
    return a.degree * b.degree - sum(x * y for x, y in zip(a.mults, b.mults))


def canonical_class(lat: Lattice) -> DivisorClass:
    """K = -3L + sum(E_i); self-intersection 9 - r."""
    return DivisorClass(lat, -3, (1,) * lat.r)


def classify_curve_class(c: DivisorClass, lat: Lattice | None = None) -> CurveClassKind:
    if lat is None:
        lat = c.lattice
    k = canonical_class(lat)
    self_int = intersect(c, c)
    k_deg = intersect(k, c)
    if self_int == -2 and k_deg == 0:
        return CurveClassKind.MINUS_TWO
    if self_int == -1 and k_deg == -1:
        return CurveClassKind.MINUS_ONE
    return CurveClassKind.OTHER


def _conic_row(p: ProjPoint) -> list[Fraction]:
    x, y, z = p.coords
    return [Fraction(v) for v in (x * x, x * y, x * z, y * y, y * z, z * z)]


def _conic_from_vector(vec: list[Fraction]) -> Conic:
    a, b, c, d, e, f = vec
    return Conic([a, b / 2, c / 2, d, e / 2, f])


def _irreducible_conic_incidence(points: list[ProjPoint]) -> list[frozenset[int]]:
    """Index sets S (|S| >= 5) of points lying on a common irreducible conic."""
    found: set[frozenset[int]] = set()
    n = len(points)
    for size in range(5, n + 1):
        for subset in combinations(range(n), size):
            rows = [_conic_row(points[i]) for i in subset]
            kernel = linalg.kernel_basis(rows, 6)
            if not kernel:
                continue
            if len(kernel) == 1:
                conic = _conic_from_vector(kernel[0])
                if conic_is_irreducible(conic):
                    full = frozenset(
                        i for i in range(n) if conic.contains(points[i])
                    )
                    found.add(full)
            elif len(kernel) == 2:
                q1 = _conic_from_vector(kernel[0])
                q2 = _conic_from_vector(kernel[1])
                # det(lam*Q1 + mu*Q2) is a cubic form: four roots force it to
                # vanish identically, so four sample parameters decide.
                samples = [(1, 0), (0, 1), (1, 1), (1, 2)]
                if any(
                    Conic(
                        [Fraction(lam) * a + Fraction(mu) * b for a, b in zip(q1.sym, q2.sym)]
                    ).det()
                    != 0
                    for lam, mu in samples
                ):
                    base = frozenset(
                        i
                        for i in range(n)
                        if q1.contains(points[i]) and q2.contains(points[i])
                    )
                    found.add(base)
            else:
                raise DegenerateConfigError(
                    "conic system through a point subset has a 3-dimensional space "
                    "of solutions; points are too degenerate"
                )
    return sorted(found, key=sorted)


def config_curve_classes(cfg) -> list[tuple[DivisorClass, CurveClassKind]]:
    """Candidate effective classes determined by a Burniat configuration.

    Enumerates every exceptional class, the strict transform of every line
    through at least one blown-up point (arrangement lines and the lines
    spanned by pairs of blown-up points), and the strict transform of every
    irreducible conic through >= 5 blown-up points. The MinusTwo sublist is
    the node set of the anticanonical model.
    """
    from pg0geo import burniat as _burniat

    report = _burniat.validate_config(cfg)
    if not report.ok:
        raise UnvalidatedConfigError(
            "configuration is invalid: " + "; ".join(report.violations)
        )
    labeled = _burniat.blowup_points(cfg)
    lat = Lattice(tuple(label for label, _ in labeled))
    points = [p for _, p in labeled]
    n = len(points)

    classes: list[DivisorClass] = [lat.exceptional(label) for label, _ in labeled]
    seen = set(classes)

    lines = set(cfg.all_lines())
    for i, j in combinations(range(n), 2):
        lines.add(line_through(points[i], points[j]))
    for line in sorted(lines, key=lambda l: l.coeffs):
        incident = [i for i in range(n) if point_on_line(points[i], line)]
        cls = lat.line() - sum(
            (lat.exceptional(lat.labels[i]) for i in incident), lat.zero()
        )
        if cls not in seen:
            seen.add(cls)
            classes.append(cls)

    for subset in _irreducible_conic_incidence(points):
        cls = 2 * lat.line() - sum(
            (lat.exceptional(lat.labels[i]) for i in subset), lat.zero()
        )
        if cls not in seen:
            seen.add(cls)
            classes.append(cls)

    return [(cls, classify_curve_class(cls, lat)) for cls in classes]


@dataclass(frozen=True, slots=True)
class DelPezzoStatus:
    degree: int
    node_count: int
    weak: bool


def del_pezzo_status(cfg) -> DelPezzoStatus:
    """Degree and node count of the anticanonical model of the blown-up plane.

    Raises NotDelPezzoError when some enumerated curve class has negative
    anticanonical degree (so -K fails to be nef on the candidates).
    """
    tagged = config_curve_classes(cfg)
    lat = tagged[0][0].lattice
    k = canonical_class(lat)
    k2 = intersect(k, k)
    if k2 <= 0:
        raise NotDelPezzoError(f"K^2 = {k2} is not positive")
    for cls, _ in tagged:
        if intersect(-1 * k, cls) < 0:
            raise NotDelPezzoError(f"class {cls} has negative anticanonical degree")
    nodes = [cls for cls, kind in tagged if kind is CurveClassKind.MINUS_TWO]
    return DelPezzoStatus(degree=k2, node_count=len(nodes), weak=bool(nodes))
