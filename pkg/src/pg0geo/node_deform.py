"""Symbolic local model of a deforming node and its group liftings.

Polynomials live in Q[u, v, w, tau] and are reduced modulo the relation
w^2 = uv + tau^2 of the total space after base change. The Klein group acts
by sign changes; each lift is classified as biregular or flop-like by
reducing the composite of the resolution coordinate with the lift.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

VARIABLES = ("u", "v", "w", "tau")

Exponents = tuple[int, int, int, int]


class ZeroDenominatorError(ZeroDivisionError):
    """A rational-expression denominator reduces to zero on the total space."""


class NotALiftError(ValueError):
    """A sign map does not preserve the relation w^2 - uv - tau^2."""


class Poly:
    """Sparse polynomial in (u, v, w, tau) with Fraction coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        cleaned: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                cleaned[tuple(exps)] = coeff
        self._terms = cleaned

    @classmethod
    def monomial(cls, exps: Exponents, coeff=1) -> Poly:
        return cls({tuple(exps): Fraction(coeff)})

    @classmethod
    def constant(cls, value) -> Poly:
        return cls({(0, 0, 0, 0): Fraction(value)})

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def w_degree(self) -> int:
        return max((e[2] for e in self._terms), default=0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: Poly) -> Poly:
        res = dict(self._terms)
        for exps, coeff in other._terms.items():
            res[exps] = res.get(exps, Fraction(0)) + coeff
        return Poly(res)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __neg__(self) -> Poly:
        return Poly({e: -c for e, c in self._terms.items()})

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return Poly({e: c * Fraction(other) for e, c in self._terms.items()})
        res: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                res[exps] = res.get(exps, Fraction(0)) + c1 * c2
        return Poly(res)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms, reverse=True):
            coeff = self._terms[exps]
            body = "*".join(
                f"{name}^{e}" if e > 1 else name
                for name, e in zip(VARIABLES, exps)
                if e
            )
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        text = "+".join(parts)
        return text.replace("+-", "-")


U = Poly.monomial((1, 0, 0, 0))
V = Poly.monomial((0, 1, 0, 0))
W = Poly.monomial((0, 0, 1, 0))
TAU = Poly.monomial((0, 0, 0, 1))

RELATION = W * W - U * V - TAU * TAU


def normal_form(p: Poly) -> Poly:
    """Rewrite w^2 -> uv + tau^2 until the w-degree is at most 1."""
    terms = p.terms
    while any(e[2] >= 2 for e in terms):
        reduced: dict[Exponents, Fraction] = {}

        def _add(exps, coeff):
            reduced[exps] = reduced.get(exps, Fraction(0)) + coeff

        for (eu, ev, ew, et), coeff in terms.items():
            if ew >= 2:
                _add((eu + 1, ev + 1, ew - 2, et), coeff)
                _add((eu, ev, ew - 2, et + 2), coeff)
            else:
                _add((eu, ev, ew, et), coeff)
        terms = {e: c for e, c in reduced.items() if c != 0}
    return Poly(terms)


def rational_equal(n1: Poly, d1: Poly, n2: Poly, d2: Poly) -> bool:
    """Whether n1/d1 = n2/d2 on the total space (cross-product reduces to 0)."""
    if normal_form(d1).is_zero() or normal_form(d2).is_zero():
        raise ZeroDenominatorError("denominator vanishes on the total space")
    return normal_form(n1 * d2 - n2 * d1).is_zero()


@dataclass(frozen=True, slots=True)
class SignedMonomialMap:
    """The automorphism (u, v, w, tau) -> (eps_u*u, eps_v*v, eps_w*w, eps_tau*tau)."""

    eps: tuple[int, int, int, int]

    def __post_init__(self):
        if any(e not in (1, -1) for e in self.eps):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def identity(cls, tau_sign: int = 1) -> SignedMonomialMap:
        return cls((1, 1, 1, tau_sign))

    @classmethod
    def sigma1(cls, tau_sign: int = 1) -> SignedMonomialMap:
        return cls((1, 1, -1, tau_sign))

    @classmethod
    def sigma2(cls, tau_sign: int = 1) -> SignedMonomialMap:
        return cls((-1, -1, 1, tau_sign))

    @classmethod
    def sigma3(cls, tau_sign: int = 1) -> SignedMonomialMap:
        return cls((-1, -1, -1, tau_sign))

    def apply(self, p: Poly) -> Poly:
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in p.terms.items():
            sign = 1
            for e, s in zip(exps, self.eps):
                if s < 0 and e % 2 == 1:
                    sign = -sign
            out[exps] = out.get(exps, Fraction(0)) + sign * coeff
        return Poly(out)

    def compose(self, other: SignedMonomialMap) -> SignedMonomialMap:
        return SignedMonomialMap(tuple(a * b for a, b in zip(self.eps, other.eps)))

    def preserves_relation(self) -> bool:
        return normal_form(self.apply(RELATION) - RELATION).is_zero()

    def downstairs(self) -> str:
        """Name of the induced element of the Klein group on (u, v, w)."""
        return {
            (1, 1): "id",
            (1, -1): "sigma1",
            (-1, 1): "sigma2",
            (-1, -1): "sigma3",
        }[(self.eps[0], self.eps[2])]


class LiftKind(enum.Enum):
    BIREGULAR_FIXES_TAU = "BiregularFixesTau"
    BIREGULAR_MOVES_TAU = "BiregularMovesTau"
    FLOP_BIRATIONAL = "FlopBirational"


@dataclass(frozen=True, slots=True)
class LiftClassification:
    kind: LiftKind
    witness: str


XI_NUM, XI_DEN = W - TAU, U
ETA_NUM, ETA_DEN = W + TAU, U


def lift_action(g: SignedMonomialMap) -> LiftClassification:
    """Classify a sign-map lift by reducing xi o g against +-xi and +-eta.

    xi = (w - tau)/u is the chart coordinate of one small resolution and
    eta = (w + tau)/u that of the other; a lift identified with +-xi is
    biregular on the first resolution, one identified with +-eta acts as the
    flop, hence only birationally.
    """
    if not g.preserves_relation():
        raise NotALiftError(f"sign map {g.eps} does not preserve w^2 - uv - tau^2")
    eps_u, _, eps_w, eps_tau = g.eps
    num = Poly({(0, 0, 1, 0): eps_w, (0, 0, 0, 1): -eps_tau})
    den = Poly({(1, 0, 0, 0): eps_u})

    sw, st = eps_u * eps_w, -eps_u * eps_tau
    expression = f"({'w' if sw > 0 else '-w'}{'+' if st > 0 else '-'}tau)/u"

    for name, target_num, sign in (
        ("xi", XI_NUM, 1),
        ("-xi", XI_NUM, -1),
        ("eta", ETA_NUM, 1),
        ("-eta", ETA_NUM, -1),
    ):
        if rational_equal(num, den, sign * target_num, XI_DEN):
            if name.endswith("xi"):
                kind = (
                    LiftKind.BIREGULAR_FIXES_TAU
                    if eps_tau == 1
                    else LiftKind.BIREGULAR_MOVES_TAU
                )
            else:
                kind = LiftKind.FLOP_BIRATIONAL
            return LiftClassification(kind, f"{expression} = {name}")
    raise RuntimeError("xi o g matched none of +-xi, +-eta")


@dataclass(frozen=True, slots=True)
class QuotientInvariants:
    """Generators of the invariant ring and their verified relations."""

    generators: tuple[tuple[str, Poly], ...]
    relation: str
    family_relation: str


def quotient_invariants() -> QuotientInvariants:
    """Generators x=u^2, y=v^2, z=uv, s=w^2, t=tau^2 of the invariant ring.

    Verifies that each generator is fixed by sigma1 and sigma2, that
    z^2 - xy vanishes identically, and that s - z - t vanishes on the family
    w^2 = uv + tau^2.
    """
    gens = (
        ("x", U * U),
        ("y", V * V),
        ("z", U * V),
        ("s", W * W),
        ("t", TAU * TAU),
    )
    for sigma in (SignedMonomialMap.sigma1(), SignedMonomialMap.sigma2()):
        for name, poly in gens:
            if sigma.apply(poly) != poly:
                raise RuntimeError(f"generator {name} is not invariant under {sigma.eps}")
    by_name = dict(gens)
    if not (by_name["z"] * by_name["z"] - by_name["x"] * by_name["y"]).is_zero():
        raise RuntimeError("z^2 - xy does not vanish")
    if not normal_form(by_name["s"] - by_name["z"] - by_name["t"]).is_zero():
        raise RuntimeError("s - z - t does not vanish on the family")
    return QuotientInvariants(gens, "z^2 = x*y", "s = z + t on w^2 = uv + tau^2")


@dataclass(frozen=True, slots=True)
class LiftTableRow:
    sigma: str
    eps_tau: int
    classification: LiftClassification


@dataclass(frozen=True, slots=True)
class LiftVerdict:
    """Both horns of the lifting dichotomy, checked exhaustively."""

    tau_fixing_has_flop: bool
    biregular_groups: tuple[tuple[int, int, int], ...]
    every_biregular_group_moves_tau: bool


@dataclass(frozen=True, slots=True)
class LiftTable:
    rows: tuple[LiftTableRow, ...]
    verdict: LiftVerdict


_SIGMAS = (
    ("sigma1", SignedMonomialMap.sigma1),
    ("sigma2", SignedMonomialMap.sigma2),
    ("sigma3", SignedMonomialMap.sigma3),
)


def group_lift_table() -> LiftTable:
    """The six lift classifications plus the group-level verdict.

    The verdict checks all eight tau-sign assignments for the three nontrivial
    elements: an assignment is a group iff the signs are multiplicative, and
    the dichotomy holds iff the tau-fixing lifts contain a flop while some
    multiplicative assignment is entirely biregular, every such assignment
    using a sign -1 somewhere.
    """
    rows = tuple(
        LiftTableRow(name, eps_tau, lift_action(make(eps_tau)))
        for name, make in _SIGMAS
        for eps_tau in (1, -1)
    )
    by_key = {(row.sigma, row.eps_tau): row.classification.kind for row in rows}
    tau_fixing_has_flop = any(
        by_key[(name, 1)] is LiftKind.FLOP_BIRATIONAL for name, _ in _SIGMAS
    )
    biregular_groups = []
    for e1, e2, e3 in product((1, -1), repeat=3):
        if e3 != e1 * e2:
            continue
        kinds = (
            by_key[("sigma1", e1)],
            by_key[("sigma2", e2)],
            by_key[("sigma3", e3)],
        )
        if all(k is not LiftKind.FLOP_BIRATIONAL for k in kinds):
            biregular_groups.append((e1, e2, e3))
    verdict = LiftVerdict(
        tau_fixing_has_flop=tau_fixing_has_flop,
        biregular_groups=tuple(biregular_groups),
        every_biregular_group_moves_tau=bool(biregular_groups)
        and all(-1 in assignment for assignment in biregular_groups),
    )
    return LiftTable(rows, verdict)
