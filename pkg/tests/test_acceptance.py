"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every expected value here is either pinned from an independent oracle
computed inside this module or is an exact integer identity.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations, product

from helpers import random_invertible_matrix, random_small_poly, seeded_general_lines
from pg0geo import linalg
from pg0geo import picard_lattice as pl
from pg0geo.burniat import (
    FamilyName,
    branch_divisor_classes,
    burniat_invariants,
    classify_family,
    config_lattice,
    extended_branch_classes,
    singularity_ledger,
    tertiary_n_classes,
    transform_config,
    validate_config,
)
from pg0geo.cover_algebra import (
    CoverAssignment,
    campedelli_quadrics,
    godeaux_free_action,
    godeaux_invariant_monomials,
    nonzero_elements,
    product_relation,
    relations_consistent,
    square_equation,
)
from pg0geo.node_deform import (
    RELATION,
    LiftKind,
    SignedMonomialMap,
    group_lift_table,
    normal_form,
    quotient_invariants,
    rational_equal,
)
from pg0geo.plane_geom import arrangement_singular_points


@contextmanager
def criterion(number, description, limit=None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed >= limit:
            raise AssertionError(
                f"criterion {number} took {elapsed:.2f}s, limit {limit}s"
            )
    except BaseException:
        print(f"ACCEPTANCE criterion {number}: FAIL ({description})", flush=True)
        raise
    print(
        f"ACCEPTANCE criterion {number}: PASS in {elapsed:.2f}s ({description})",
        flush=True,
    )


TABLE_ROWS = {
    "primary_m0": (FamilyName.PRIMARY, 6, 4, True, "1→Z⁶→π₁→(Z/2)³"),
    "secondary_k5_m1": (FamilyName.SECONDARY_K5, 5, 3, True, "H₈⊕(Z/2)³"),
    "secondary_k4_nonnodal_m2": (
        FamilyName.SECONDARY_K4_NON_NODAL, 4, 2, True, "H₈⊕(Z/2)²",
    ),
    "secondary_k4_nodal_m2": (
        FamilyName.SECONDARY_K4_NODAL, 4, 2, False, "H₈⊕(Z/2)²",
    ),
    "tertiary_m3": (FamilyName.TERTIARY, 3, 1, False, "H₈⊕Z/2"),
    "quaternary_m4": (FamilyName.QUATERNARY, 2, 0, False, "(Z/2)³"),
}


def test_criterion_1_table_reproduction(golden_cfgs):
    with criterion(1, "classification table reproduced on the bundled configurations", limit=1.0):
        seen = set()
        for name, cfg in golden_cfgs.items():
            family, k2, dim, conn, pi1 = TABLE_ROWS[name]
            fam = classify_family(cfg)
            inv = burniat_invariants(cfg)
            assert fam.name is family
            assert inv.K2 == k2
            assert fam.dim == dim
            assert fam.is_connected_component is conn
            assert fam.pi1 == pi1
            seen.add((inv.K2, fam.dim, fam.name))
        assert {(k2, dim) for k2, dim, _ in seen} == {
            (6, 4), (5, 3), (4, 2), (3, 1), (2, 0),
        }
        assert len(seen) == 6  # the two K^2=4 rows differ by nodal type


def test_criterion_2_invariant_calculus(golden_cfgs):
    with criterion(2, "invariants match the singularity-ledger derivation", limit=1.0):
        for cfg in golden_cfgs.values():
            inv = burniat_invariants(cfg)
            assert (inv.p_g, inv.q) == (0, 0)
            assert inv.K2 == 6 - cfg.m
            ledger = singularity_ledger(cfg)
            n310 = sum(1 for e in ledger.entries if e.kind.value == "Type310")
            n111 = sum(1 for e in ledger.entries if e.kind.value == "Type111")
            assert n310 == 3
            assert n111 == cfg.m
            k2, pg_minus_q = ledger.require_derivation()
            assert k2 == 9 - n310 - n111 == inv.K2
            assert pg_minus_q == 0


def test_criterion_3_lattice_identities(golden_cfgs):
    with criterion(3, "branch-class identities hold with exact integer equality"):
        for cfg in golden_cfgs.values():
            classes = branch_divisor_classes(cfg)
            lat = classes[0].lattice
            k = pl.canonical_class(lat)
            assert classes[0] + classes[1] + classes[2] == -3 * k

        cfg = golden_cfgs["tertiary_m3"]
        lat, _ = config_lattice(cfg)
        k = pl.canonical_class(lat)
        line = lat.line()
        e = {label: lat.exceptional(label) for label in lat.labels}
        n = tertiary_n_classes(cfg)
        for ni in n:
            assert pl.intersect(ni, ni) == -2
            assert pl.intersect(k, ni) == 0
        for i in (1, 2, 3):
            gamma = (
                2 * line
                - e[f"E{i}"] - e[f"E{i}'"]
                - e[f"E{i % 3 + 1}"] - e[f"E{i % 3 + 1}'"]
            )
            expected = (
                n[(i - 2) % 3]
                + (line - e[f"E{i}"] - e[f"E{i % 3 + 1}"])
                + e[f"E{(i - 2) % 3 + 1}"]
            )
            assert gamma == expected

        d = branch_divisor_classes(cfg)
        result = extended_branch_classes(cfg, {1: (1, 1), 2: (1, 1), 3: (1, 1)})
        for i in range(3):
            by_recipe = d[i] - n[i] + n[(i - 1) % 3] + n[(i + 1) % 3]
            assert result.classes[i] == by_recipe
            by_decomposition = result.decompositions[i][0][1]
            for _, cls in result.decompositions[i][1:]:
                by_decomposition = by_decomposition + cls
            assert by_decomposition == by_recipe
        total = result.classes[0] + result.classes[1] + result.classes[2]
        assert total == -3 * k + n[0] + n[1] + n[2]


def test_criterion_4_campedelli_suite():
    with criterion(4, "quadrics and cover relations on 100 seeded 7-line configurations", limit=5.0):
        elements = nonzero_elements(3)
        for seed in range(100):
            lines = seeded_general_lines(seed)
            quadrics = campedelli_quadrics(lines)
            assert len(quadrics) == 4
            rows = [[Fraction(c) for c in vec] for vec in quadrics]
            assert linalg.rank(rows) == 4
            for vec in quadrics:
                for coord in range(3):
                    assert (
                        sum(vec[j] * lines[j].coeffs[coord] for j in range(7)) == 0
                    )
            asg = CoverAssignment.campedelli(lines)
            assert relations_consistent(asg)
            for g in elements:
                assert len(square_equation(g, asg)) == 4
            pairs = list(combinations(elements, 2))
            assert len(pairs) == 21
            for gi, gj in pairs:
                assert len(product_relation(gi, gj, asg).factor_lines) == 2


def _godeaux_oracle():
    counts = {r: 0 for r in range(5)}
    residue_zero = []
    for e1 in range(6):
        for e2 in range(6 - e1):
            for e3 in range(6 - e1 - e2):
                e4 = 5 - e1 - e2 - e3
                r = (e1 + 2 * e2 + 3 * e3 + 4 * e4) % 5
                counts[r] += 1
                if r == 0:
                    residue_zero.append((e1, e2, e3, e4))
    return counts, sorted(residue_zero)


def test_criterion_5_godeaux_suite():
    with criterion(5, "invariant quintic monomials and the free-action test"):
        counts, residue_zero = _godeaux_oracle()
        assert sum(counts.values()) == 56
        assert counts[0] == 12  # frozen from the enumeration oracle
        for r in range(5):
            assert len(godeaux_invariant_monomials(r)) == counts[r]
        assert godeaux_invariant_monomials(0) == residue_zero

        fifth_powers = [tuple(5 if j == i else 0 for j in range(4)) for i in range(4)]
        for kill in range(1 << 4):
            coeffs = {exps: 1 for exps in residue_zero}
            expected_hits = []
            for i in range(4):
                if kill & (1 << i):
                    coeffs[fifth_powers[i]] = 0
                    expected_hits.append(tuple(1 if j == i else 0 for j in range(4)))
            report = godeaux_free_action(coeffs)
            assert report.free == (kill == 0)
            assert list(report.fixed_points_hit) == expected_hits


def test_criterion_6_node_deformation_suite():
    with criterion(6, "quotient invariants and the lifting dichotomy", limit=1.0):
        quotient = quotient_invariants()
        gens = dict(quotient.generators)
        for sigma in (SignedMonomialMap.sigma1(), SignedMonomialMap.sigma2()):
            for poly in gens.values():
                assert sigma.apply(poly) == poly
        assert (gens["z"] * gens["z"] - gens["x"] * gens["y"]).is_zero()
        assert normal_form(gens["s"] - gens["z"] - gens["t"]).is_zero()

        table = group_lift_table()
        by_key = {(r.sigma, r.eps_tau): r.classification.kind for r in table.rows}
        assert by_key[("sigma1", 1)] is LiftKind.FLOP_BIRATIONAL

        # independent exhaustive check over the eight tau-sign assignments
        names = ("sigma1", "sigma2", "sigma3")
        biregular_groups = []
        for signs in product((1, -1), repeat=3):
            is_group = all(
                signs[i] * signs[j] == signs[3 - i - j]
                for i, j in ((0, 1), (0, 2), (1, 2))
            )
            if not is_group:
                continue
            kinds = [by_key[(names[i], signs[i])] for i in range(3)]
            if all(kind is not LiftKind.FLOP_BIRATIONAL for kind in kinds):
                biregular_groups.append(signs)
        tau_fixing_kinds = [by_key[(name, 1)] for name in names]
        assert any(k is LiftKind.FLOP_BIRATIONAL for k in tau_fixing_kinds)
        assert biregular_groups == [(-1, 1, -1)]
        assert all(-1 in g for g in biregular_groups)
        assert table.verdict.tau_fixing_has_flop
        assert tuple(biregular_groups) == table.verdict.biregular_groups
        assert table.verdict.every_biregular_group_moves_tau


def test_criterion_7_consistency_cross_checks(golden_cfgs):
    with criterion(7, "del Pezzo degree, node counts, and numerical identities agree"):
        for name, cfg in golden_cfgs.items():
            inv = burniat_invariants(cfg)
            status = pl.del_pezzo_status(cfg)
            fam = classify_family(cfg)
            assert status.degree == inv.K2
            assert status.node_count == fam.node_count
            if cfg.m <= 3:
                assert fam.node_count in {0, 1, 3}
            else:
                # the quaternary count is not stated in the table; frozen
                # from the configuration-driven enumeration
                assert fam.node_count == 6
            assert inv.chi == 1 - inv.q + inv.p_g
            assert inv.P2 == inv.K2 + inv.chi
            assert 1 <= inv.K2 <= 9 * inv.chi


def test_criterion_8_robustness_properties(golden_cfgs):
    with criterion(8, "projective invariance and symbolic robustness", limit=30.0):
        rng = random.Random(20260811)
        for name, cfg in golden_cfgs.items():
            fam0 = classify_family(cfg)
            inv0 = burniat_invariants(cfg)
            for _ in range(50):
                moved = transform_config(cfg, random_invertible_matrix(rng))
                assert validate_config(moved).ok
                assert classify_family(moved) == fam0
                assert burniat_invariants(moved) == inv0
            singular = arrangement_singular_points(cfg.all_lines())
            pair_sum = sum(
                sp.multiplicity * (sp.multiplicity - 1) // 2 for sp in singular
            )
            assert pair_sum == 9 * 8 // 2

        checked = 0
        while checked < 1000:
            p = random_small_poly(rng)
            assert normal_form(normal_form(p)) == normal_form(p)

            d = random_small_poly(rng)
            g = random_small_poly(rng)
            h = random_small_poly(rng)
            if any(normal_form(x).is_zero() for x in (d, g, h)):
                continue
            n = p
            r1, r2 = random_small_poly(rng), random_small_poly(rng)
            n2, d2 = n * g + RELATION * r1, d * g
            n3, d3 = n * g * h + RELATION * r2, d * g * h
            assert rational_equal(n, d, n2, d2)
            assert rational_equal(n2, d2, n3, d3)
            assert rational_equal(n, d, n3, d3)
            checked += 1
