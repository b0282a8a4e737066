"""Triangle-plus-pencils line configurations and their surface invariants.

A configuration is three non-collinear vertices with a pencil of three lines
through each (including the triangle sides) plus up to four extra triple
points. The module validates configurations, classifies the corresponding
surface family, runs the singularity calculus for the numerical invariants,
and computes branch divisor classes on the blown-up plane.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations

from pg0geo import picard_lattice as pl
from pg0geo.cover_algebra import CoverAssignment, G2Elt
from pg0geo.plane_geom import (
    Conic,
    ProjLine,
    ProjPoint,
    RatLike,
    SingularPoint,
    arrangement_singular_points,
    collinear,
    conic_is_irreducible,
    conic_pencil_member,
    line_through,
    point_on_line,
    transform_line,
    transform_point,
)


class InvalidConfigError(ValueError):
    """An operation requiring a valid configuration received an invalid one."""


class PatternMismatchError(ValueError):
    """An m=3 configuration lacks the three tertiary collinearities."""


class DegenerateConicError(ValueError):
    """A conic flagged strictly-extended is reducible."""


class WrongPencilError(ValueError):
    """A conic does not pass through the prescribed pencil base points."""


class WrongMError(ValueError):
    """Operation applies only to a different number of extra points."""


class NotNodalError(ValueError):
    """An m=2 extension was requested for a non-nodal configuration."""


class UnsupportedSingularityError(ValueError):
    """The singularity calculus met a multiplicity triple it cannot price."""


@dataclass(frozen=True, slots=True)
class BurniatConfig:
    """Three vertices, three pencils of three lines, and m <= 4 extra points."""

    vertices: tuple[ProjPoint, ProjPoint, ProjPoint]
    extra_points: tuple[ProjPoint, ...]
    pencils: tuple[tuple[ProjLine, ProjLine, ProjLine], ...]

    def __post_init__(self):
        if len(self.vertices) != 3:
            raise ValueError("exactly three vertices are required")
        if len(self.extra_points) > 4:
            raise ValueError("at most four extra points are allowed")
        if len(self.pencils) != 3 or any(len(p) != 3 for p in self.pencils):
            raise ValueError("exactly three pencils of three lines are required")

    @property
    def m(self) -> int:
        return len(self.extra_points)

    def all_lines(self) -> list[ProjLine]:
        return [line for pencil in self.pencils for line in pencil]

    def side(self, i: int) -> ProjLine:
        """The triangle side joining vertex i to vertex i+1 (0-based, mod 3)."""
        return line_through(self.vertices[i % 3], self.vertices[(i + 1) % 3])


@dataclass(frozen=True, slots=True)
class ValidationReport:
    ok: bool
    m: int
    violations: tuple[str, ...]


def validate_config(cfg: BurniatConfig) -> ValidationReport:
    """Check every configuration invariant; collects violations, never raises."""
    violations: list[str] = []
    v1, v2, v3 = cfg.vertices
    if len({v1, v2, v3}) != 3:
        violations.append("vertices are not distinct")
    elif collinear(v1, v2, v3):
        violations.append("vertices are collinear")

    lines = cfg.all_lines()
    if len(set(lines)) != 9:
        violations.append("the nine lines are not pairwise distinct")

    for i, pencil in enumerate(cfg.pencils):
        for line in pencil:
            if not point_on_line(cfg.vertices[i], line):
                violations.append(f"line {line} of pencil {i + 1} misses vertex P{i + 1}")

    sides = []
    if "vertices are collinear" not in violations and len({v1, v2, v3}) == 3:
        for i in range(3):
            side = cfg.side(i)
            sides.append(side)
            if side not in cfg.pencils[i]:
                violations.append(
                    f"pencil {i + 1} does not contain the side joining P{i + 1} and P{(i + 1) % 3 + 1}"
                )

    if len(set(cfg.extra_points)) != cfg.m:
        violations.append("extra points are not distinct")
    for q in cfg.extra_points:
        if q in cfg.vertices:
            violations.append(f"extra point {q} coincides with a vertex")
        for side in sides:
            if point_on_line(q, side):
                violations.append(f"extra point {q} lies on the triangle side {side}")

    if violations:
        return ValidationReport(False, cfg.m, tuple(violations))

    for q in cfg.extra_points:
        triple = tuple(
            sum(1 for line in pencil if point_on_line(q, line))
            for pencil in cfg.pencils
        )
        if triple != (1, 1, 1):
            violations.append(
                f"extra point {q} has pencil multiplicities {triple}, expected (1,1,1)"
            )

    marked = set(cfg.vertices) | set(cfg.extra_points)
    for sp in arrangement_singular_points(lines):
        if sp.point not in marked and sp.multiplicity >= 3:
            violations.append(
                f"unlisted point {sp.point} has multiplicity {sp.multiplicity}"
            )
    return ValidationReport(not violations, cfg.m, tuple(violations))


def _pencil_triple(cfg: BurniatConfig, sp: SingularPoint) -> tuple[int, int, int]:
    counts = [0, 0, 0]
    for idx in sp.lines_through:
        counts[idx // 3] += 1
    return (counts[0], counts[1], counts[2])


def _require_valid(cfg: BurniatConfig) -> None:
    report = validate_config(cfg)
    if not report.ok:
        raise InvalidConfigError("; ".join(report.violations))


@dataclass(frozen=True, slots=True)
class Invariants:
    """Numerical invariants of the covering surface."""

    p_g: int
    q: int
    K2: int
    chi: int
    P2: int

    def __post_init__(self):
        if self.chi != 1 - self.q + self.p_g:
            raise ValueError("chi must equal 1 - q + p_g")
        if self.P2 != self.K2 + self.chi:
            raise ValueError("P2 must equal K^2 + chi")
        if not 1 <= self.K2 <= 9 * self.chi:
            raise ValueError("K^2 violates 1 <= K^2 <= 9*chi")


def burniat_invariants(cfg: BurniatConfig) -> Invariants:
    """p_g = q = 0 and K^2 = 6 - m for a valid configuration."""
    _require_valid(cfg)
    k2 = 6 - cfg.m
    return Invariants(p_g=0, q=0, K2=k2, chi=1, P2=k2 + 1)


class SingKind(enum.Enum):
    TYPE_310 = "Type310"
    TYPE_111 = "Type111"
    UNSUPPORTED = "Unsupported"


@dataclass(frozen=True, slots=True)
class SingularityLedgerEntry:
    point: ProjPoint
    triple: tuple[int, int, int]
    kind: SingKind


@dataclass(frozen=True, slots=True)
class SingularityLedger:
    """Priced list of the multiplicity >= 3 points of the branch curve.

    Each (3,1,0) point and each (1,1,1) point lowers K^2 by one, starting
    from K^2 = 9 for three smooth branch cubics; only the (3,1,0) points
    lower p_g - q.
    """

    entries: tuple[SingularityLedgerEntry, ...]
    supported: bool
    k2: int | None
    pg_minus_q: int | None

    def require_derivation(self) -> tuple[int, int]:
        if not self.supported:
            bad = [e for e in self.entries if e.kind is SingKind.UNSUPPORTED]
            raise UnsupportedSingularityError(
                "multiplicity triples outside the calculus: "
                + ", ".join(f"{e.point}:{e.triple}" for e in bad)
            )
        assert self.k2 is not None and self.pg_minus_q is not None
        return self.k2, self.pg_minus_q


def singularity_ledger(cfg: BurniatConfig) -> SingularityLedger:
    """Classify every multiplicity >= 3 point of the nine-line curve."""
    entries = []
    for sp in arrangement_singular_points(cfg.all_lines()):
        if sp.multiplicity < 3:
            continue
        triple = _pencil_triple(cfg, sp)
        if sorted(triple, reverse=True) == [3, 1, 0]:
            kind = SingKind.TYPE_310
        elif triple == (1, 1, 1):
            kind = SingKind.TYPE_111
        else:
            kind = SingKind.UNSUPPORTED
        entries.append(SingularityLedgerEntry(sp.point, triple, kind))
    entries.sort(key=lambda e: e.point.coords)
    if any(e.kind is SingKind.UNSUPPORTED for e in entries):
        return SingularityLedger(tuple(entries), False, None, None)
    n310 = sum(1 for e in entries if e.kind is SingKind.TYPE_310)
    n111 = sum(1 for e in entries if e.kind is SingKind.TYPE_111)
    ledger = SingularityLedger(tuple(entries), True, 9 - n310 - n111, 3 - n310)
    if validate_config(cfg).ok:
        inv = burniat_invariants(cfg)
        if ledger.k2 != inv.K2 or ledger.pg_minus_q != inv.p_g - inv.q:
            raise RuntimeError(
                "singularity calculus disagrees with the invariant formula"
            )
    return ledger


class FamilyName(enum.Enum):
    PRIMARY = "Primary"
    SECONDARY_K5 = "SecondaryK5"
    SECONDARY_K4_NON_NODAL = "SecondaryK4NonNodal"
    SECONDARY_K4_NODAL = "SecondaryK4Nodal"
    TERTIARY = "Tertiary"
    QUATERNARY = "Quaternary"


@dataclass(frozen=True, slots=True)
class FamilyDescriptor:
    name: FamilyName
    dim: int
    is_connected_component: bool
    component_note: str
    pi1: str
    node_count: int


_PI1 = {
    FamilyName.PRIMARY: "1→Z⁶→π₁→(Z/2)³",
    FamilyName.SECONDARY_K5: "H₈⊕(Z/2)³",
    FamilyName.SECONDARY_K4_NON_NODAL: "H₈⊕(Z/2)²",
    FamilyName.SECONDARY_K4_NODAL: "H₈⊕(Z/2)²",
    FamilyName.TERTIARY: "H₈⊕Z/2",
    FamilyName.QUATERNARY: "(Z/2)³",
}


def nodal_vertex_index(cfg: BurniatConfig) -> int | None:
    """For m=2: the 1-based vertex collinear with the two extra points."""
    if cfg.m != 2:
        return None
    q1, q2 = cfg.extra_points
    for i, v in enumerate(cfg.vertices):
        if collinear(v, q1, q2):
            return i + 1
    return None


def tertiary_labeling(cfg: BurniatConfig) -> tuple[ProjPoint, ProjPoint, ProjPoint] | None:
    """Order the m=3 extras as (P'_1, P'_2, P'_3) so that P_i, P'_{i+1},
    P'_{i+2} are collinear for every i; None when no ordering works."""
    if cfg.m != 3:
        return None
    p1, p2, p3 = cfg.vertices
    for perm in permutations(cfg.extra_points):
        q1, q2, q3 = perm
        if (
            collinear(p1, q2, q3)
            and collinear(p2, q3, q1)
            and collinear(p3, q1, q2)
        ):
            return perm
    return None


def classify_family(cfg: BurniatConfig) -> FamilyDescriptor:
    """Table row for a valid configuration: family name, dimension of its
    parameter family (K^2 - 2), moduli-component status, fundamental-group
    descriptor, and node count of the anticanonical model."""
    _require_valid(cfg)
    m = cfg.m
    if m == 0:
        return FamilyDescriptor(
            FamilyName.PRIMARY, 4, True,
            "irreducible connected component of the moduli space",
            _PI1[FamilyName.PRIMARY], 0,
        )
    if m == 1:
        return FamilyDescriptor(
            FamilyName.SECONDARY_K5, 3, True,
            "irreducible connected component of the moduli space",
            _PI1[FamilyName.SECONDARY_K5], 0,
        )
    if m == 2:
        if nodal_vertex_index(cfg) is not None:
            return FamilyDescriptor(
                FamilyName.SECONDARY_K4_NODAL, 2, False,
                "contained in a 3-dimensional irreducible connected component "
                "that also contains the extended surfaces",
                _PI1[FamilyName.SECONDARY_K4_NODAL], 1,
            )
        return FamilyDescriptor(
            FamilyName.SECONDARY_K4_NON_NODAL, 2, True,
            "irreducible connected component of the moduli space",
            _PI1[FamilyName.SECONDARY_K4_NON_NODAL], 0,
        )
    if m == 3:
        if tertiary_labeling(cfg) is None:
            raise PatternMismatchError(
                "the three collinearities P_i, P'_{i+1}, P'_{i+2} do not hold"
            )
        return FamilyDescriptor(
            FamilyName.TERTIARY, 1, False,
            "contained in a 4-dimensional irreducible component "
            "that also contains the extended surfaces",
            _PI1[FamilyName.TERTIARY], 3,
        )
    return FamilyDescriptor(
        FamilyName.QUATERNARY, 0, False,
        "lies in the connected component of the standard Campedelli surfaces",
        _PI1[FamilyName.QUATERNARY],
        pl.del_pezzo_status(cfg).node_count,
    )


def blowup_points(cfg: BurniatConfig) -> list[tuple[str, ProjPoint]]:
    """Blown-up points in lattice order with their exceptional-class labels.

    Vertices are E1, E2, E3. For m=3 with the tertiary pattern the extras
    are reordered to E1', E2', E3'; otherwise they keep input order as E4,...
    """
    labeled = [(f"E{i + 1}", v) for i, v in enumerate(cfg.vertices)]
    if cfg.m == 3:
        primed = tertiary_labeling(cfg)
        if primed is not None:
            labeled += [(f"E{i + 1}'", q) for i, q in enumerate(primed)]
            return labeled
    labeled += [(f"E{i + 4}", q) for i, q in enumerate(cfg.extra_points)]
    return labeled


def config_lattice(cfg: BurniatConfig) -> tuple[pl.Lattice, dict[str, ProjPoint]]:
    labeled = blowup_points(cfg)
    return pl.Lattice(tuple(label for label, _ in labeled)), dict(labeled)


def _strict_transform(lat: pl.Lattice, labeled, line: ProjLine) -> pl.DivisorClass:
    cls = lat.line()
    for label, point in labeled:
        if point_on_line(point, line):
            cls = cls - lat.exceptional(label)
    return cls


def branch_divisor_classes(cfg: BurniatConfig) -> tuple[pl.DivisorClass, ...]:
    """Classes of the three branch divisors on the blown-up plane.

    D_i is the sum of the strict transforms of the three pencil-i lines plus
    the exceptional curve over vertex i-1; the classes satisfy
    D_1 + D_2 + D_3 = -3K.
    """
    _require_valid(cfg)
    lat, _ = config_lattice(cfg)
    labeled = blowup_points(cfg)
    classes = []
    for i, pencil in enumerate(cfg.pencils):
        cls = lat.zero()
        for line in pencil:
            cls = cls + _strict_transform(lat, labeled, line)
        cls = cls + lat.exceptional(f"E{(i - 1) % 3 + 1}")
        classes.append(cls)
    total = classes[0] + classes[1] + classes[2]
    if total != -3 * pl.canonical_class(lat):
        raise RuntimeError("branch classes do not sum to -3K")
    return tuple(classes)


Component = tuple[str, pl.DivisorClass]


@dataclass(frozen=True, slots=True)
class ExtendedBranchResult:
    classes: tuple[pl.DivisorClass, ...]
    decompositions: tuple[tuple[Component, ...], ...]
    conics: dict[int, Conic]


def _tertiary_frame(cfg: BurniatConfig):
    """Lattice, N classes/lines, and point lookups for an m=3 configuration."""
    lat, by_label = config_lattice(cfg)
    primed = tertiary_labeling(cfg)
    if primed is None:
        raise PatternMismatchError("tertiary collinearity pattern does not hold")

    def vert(i):
        return cfg.vertices[(i - 1) % 3]

    def prime(i):
        return primed[(i - 1) % 3]

    def e(i):
        return lat.exceptional(f"E{(i - 1) % 3 + 1}")

    def ep(i):
        return lat.exceptional(f"E{(i - 1) % 3 + 1}'")

    def n_class(i):
        return lat.line() - e(i) - ep(i + 1) - ep(i + 2)

    def n_line(i):
        return line_through(prime(i + 1), prime(i + 2))

    return lat, vert, prime, e, ep, n_class, n_line


def tertiary_n_classes(cfg: BurniatConfig) -> tuple[pl.DivisorClass, ...]:
    """The three classes L - E_i - E'_{i+1} - E'_{i+2} of an m=3 configuration."""
    _require_valid(cfg)
    if cfg.m != 3:
        raise WrongMError("the three N classes exist only for m = 3")
    _, _, _, _, _, n_class, _ = _tertiary_frame(cfg)
    return (n_class(1), n_class(2), n_class(3))


def extended_branch_classes(
    cfg: BurniatConfig,
    extend: dict[int, tuple[RatLike, RatLike]],
) -> ExtendedBranchResult:
    """Branch classes with some divisors replaced by their extended variants.

    `extend` maps a 1-based divisor index flagged strictly-extended to the
    pencil parameter selecting its conic. For m=3 each extended class is
    computed both from the class recipe D_i - N_i + N_{i-1} + N_{i+1} and
    from its conic decomposition, and the two must agree; for m=2 only the
    index following the nodal vertex can be extended.
    """
    _require_valid(cfg)
    if cfg.m == 3:
        return _extended_tertiary(cfg, extend)
    if cfg.m == 2:
        return _extended_nodal_k4(cfg, extend)
    raise WrongMError("extended branch divisors are defined for m in {2, 3}")


def _extended_tertiary(cfg, extend):
    lat, vert, prime, e, ep, n_class, n_line = _tertiary_frame(cfg)
    base_classes = branch_divisor_classes(cfg)
    labeled = blowup_points(cfg)

    classes = []
    decomps = []
    conics = {}
    for i in (1, 2, 3):
        d_i = base_classes[i - 1]
        if i not in extend:
            classes.append(d_i)
            decomps.append(_pencil_decomposition(cfg, lat, labeled, i))
            continue
        gamma = 2 * lat.line() - e(i) - ep(i) - e(i + 1) - ep(i + 1)
        if gamma != n_class(i - 1) + (lat.line() - e(i) - e(i + 1)) + e(i - 1):
            raise RuntimeError("conic class identity failed")
        base = (vert(i), prime(i), vert(i + 1), prime(i + 1))
        conic = conic_pencil_member(base, extend[i])
        if not conic_is_irreducible(conic):
            raise DegenerateConicError(
                f"pencil member {extend[i]} for index {i} is reducible"
            )
        conics[i] = conic
        by_recipe = d_i - n_class(i) + n_class(i - 1) + n_class(i + 1)
        side_class = lat.line() - e(i) - ep(i)
        by_decomposition = gamma + n_class(i + 1) + side_class
        if by_recipe != by_decomposition:
            raise RuntimeError("the two extended-class computations disagree")
        classes.append(by_recipe)
        decomps.append(
            (
                (f"Gamma_{i}", gamma),
                (f"N_{i % 3 + 1}", n_class(i + 1)),
                (repr(side_class), side_class),
            )
        )
    if len(extend) == 3:
        total = classes[0] + classes[1] + classes[2]
        expected = -3 * pl.canonical_class(lat) + n_class(1) + n_class(2) + n_class(3)
        if total != expected:
            raise RuntimeError("extended classes do not sum to -3K + sum(N_i)")
    return ExtendedBranchResult(tuple(classes), tuple(decomps), conics)


def _extended_nodal_k4(cfg, extend):
    v = nodal_vertex_index(cfg)
    if v is None:
        raise NotNodalError("m=2 extended divisors require a nodal configuration")
    lat, _ = config_lattice(cfg)
    labeled = blowup_points(cfg)
    base_classes = branch_divisor_classes(cfg)
    q1, q2 = cfg.extra_points

    def vert(i):
        return cfg.vertices[(i - 1) % 3]

    def e(i):
        return lat.exceptional(f"E{(i - 1) % 3 + 1}")

    n = lat.line() - e(v) - lat.exceptional("E4") - lat.exceptional("E5")
    gamma_index = v % 3 + 1
    allowed = {gamma_index}
    if set(extend) - allowed:
        raise NotNodalError(
            f"only index {gamma_index} (following the nodal vertex P{v}) can be extended"
        )

    classes = list(base_classes)
    decomps = [_pencil_decomposition(cfg, lat, labeled, i) for i in (1, 2, 3)]
    conics = {}
    if gamma_index in extend:
        base = (vert(gamma_index), vert(gamma_index + 1), q1, q2)
        conic = conic_pencil_member(base, extend[gamma_index])
        if not conic_is_irreducible(conic):
            raise DegenerateConicError(
                f"pencil member {extend[gamma_index]} for index {gamma_index} is reducible"
            )
        conics[gamma_index] = conic
        gamma = (
            2 * lat.line()
            - e(gamma_index)
            - e(gamma_index + 1)
            - lat.exceptional("E4")
            - lat.exceptional("E5")
        )
        non_side = [
            _strict_transform(lat, labeled, line)
            for line in cfg.pencils[gamma_index - 1]
            if line != cfg.side(gamma_index - 1)
        ]
        by_decomposition = gamma + non_side[0] + non_side[1]
        if by_decomposition != base_classes[gamma_index - 1] + n:
            raise RuntimeError("the two extended-class computations disagree")
        classes[v - 1] = base_classes[v - 1] - n
        classes[gamma_index - 1] = by_decomposition
        decomps[v - 1] = tuple(
            comp
            for comp in decomps[v - 1]
            if comp[1] != n
        )
        decomps[gamma_index - 1] = (
            (f"Gamma_{gamma_index}", gamma),
            (repr(non_side[0]), non_side[0]),
            (repr(non_side[1]), non_side[1]),
        )
        total = classes[0] + classes[1] + classes[2]
        if total != -3 * pl.canonical_class(lat):
            raise RuntimeError("extended m=2 classes do not sum to -3K")
    return ExtendedBranchResult(tuple(classes), tuple(decomps), conics)


def _pencil_decomposition(cfg, lat, labeled, i: int):
    parts = [
        (repr(cls), cls)
        for cls in (_strict_transform(lat, labeled, line) for line in cfg.pencils[i - 1])
    ]
    exceptional = lat.exceptional(f"E{(i - 2) % 3 + 1}")
    parts.append((repr(exceptional), exceptional))
    return tuple(parts)


class Degeneration(enum.Enum):
    STRICTLY_EXTENDED = "StrictlyExtended"
    DEGENERATES_TO_NODAL = "DegeneratesToNodal"


@dataclass(frozen=True, slots=True)
class DegenerationVerdict:
    kind: Degeneration
    warning: str | None = None


def detect_degeneration(cfg: BurniatConfig, index: int, conic: Conic) -> DegenerationVerdict:
    """Whether a pencil member stays strictly extended or falls back to the
    nodal branch divisor (it contains the line through the node)."""
    _require_valid(cfg)
    if cfg.m == 3:
        _, vert, prime, *_rest, n_line = _tertiary_frame(cfg)
        base = (vert(index), prime(index), vert(index + 1), prime(index + 1))
        node_line = n_line(index - 1)
    elif cfg.m == 2:
        v = nodal_vertex_index(cfg)
        if v is None:
            raise NotNodalError("m=2 degeneration detection requires a nodal configuration")
        if index != v % 3 + 1:
            raise WrongPencilError(
                f"index {index} carries no conic; the extended index is {v % 3 + 1}"
            )
        q1, q2 = cfg.extra_points
        base = (cfg.vertices[index - 1], cfg.vertices[index % 3], q1, q2)
        node_line = line_through(q1, q2)
    else:
        raise WrongMError("degeneration detection is defined for m in {2, 3}")

    for point in base:
        if not conic.contains(point):
            raise WrongPencilError(f"conic misses the pencil base point {point}")
    if conic_is_irreducible(conic):
        return DegenerationVerdict(Degeneration.STRICTLY_EXTENDED)
    if conic.has_line_component(node_line):
        return DegenerationVerdict(Degeneration.DEGENERATES_TO_NODAL)
    return DegenerationVerdict(
        Degeneration.STRICTLY_EXTENDED,
        warning="reducible pencil member outside the named degeneration",
    )


@dataclass(frozen=True, slots=True)
class CampedelliBridge:
    lines: tuple[ProjLine, ...]
    assignment: CoverAssignment


def campedelli_bridge(cfg: BurniatConfig) -> CampedelliBridge:
    """The seven-line picture of an m=4 configuration.

    The four non-side lines of pencils 1 and 2 form a complete quadrilateral
    whose three diagonals are the side P1P2 and the two non-side lines of
    pencil 3; characters of (Z/2)^3 are attached so that the three characters
    at every triple point sum to zero.
    """
    _require_valid(cfg)
    if cfg.m != 4:
        raise WrongMError("the seven-line bridge needs m = 4")

    non_side = []
    for i in range(3):
        side = cfg.side(i)
        non_side.append([line for line in cfg.pencils[i] if line != side])
    quadrilateral = non_side[0] + non_side[1]
    lines7 = tuple(quadrilateral) + (cfg.side(0),) + tuple(non_side[2])

    chars: dict[ProjLine, G2Elt] = {
        quadrilateral[0]: G2Elt((1, 0, 0)),
        quadrilateral[1]: G2Elt((1, 1, 0)),
        quadrilateral[2]: G2Elt((1, 0, 1)),
        quadrilateral[3]: G2Elt((1, 1, 1)),
        cfg.side(0): G2Elt((0, 1, 0)),
    }
    for q in cfg.extra_points:
        a = next(line for line in non_side[0] if point_on_line(q, line))
        b = next(line for line in non_side[1] if point_on_line(q, line))
        c = next(line for line in non_side[2] if point_on_line(q, line))
        value = chars[a] ^ chars[b]
        if c in chars and chars[c] != value:
            raise RuntimeError("inconsistent character assignment on a diagonal")
        chars[c] = value
    assigned = tuple(chars[line] for line in lines7)
    if len(set(assigned)) != 7 or any(g.is_zero() for g in assigned):
        raise RuntimeError("bridge characters do not cover the seven nonzero elements")

    for sp in arrangement_singular_points(list(lines7)):
        if sp.multiplicity >= 3:
            total = G2Elt((0, 0, 0))
            for idx in sp.lines_through:
                total = total ^ assigned[idx]
            if not total.is_zero():
                raise RuntimeError("characters at a triple point do not sum to zero")

    return CampedelliBridge(lines7, CoverAssignment(3, lines7, assigned))


def transform_config(cfg: BurniatConfig, matrix) -> BurniatConfig:
    """Apply an invertible projective transformation to every point and line."""
    return BurniatConfig(
        vertices=tuple(transform_point(matrix, v) for v in cfg.vertices),
        extra_points=tuple(transform_point(matrix, q) for q in cfg.extra_points),
        pencils=tuple(
            tuple(transform_line(matrix, line) for line in pencil)
            for pencil in cfg.pencils
        ),
    )
