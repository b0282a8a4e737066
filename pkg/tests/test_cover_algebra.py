from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import seeded_general_lines
from pg0geo import linalg
from pg0geo.cover_algebra import (
    CoverAssignment,
    DegeneratePairError,
    G2Elt,
    RankDeficientError,
    ZeroElementError,
    EmptyPolynomialError,
    annihilator,
    all_elements,
    campedelli_quadrics,
    campedelli_smoothness,
    godeaux_free_action,
    godeaux_invariant_monomials,
    nonzero_elements,
    product_relation,
    relations_consistent,
    square_equation,
)
from pg0geo.plane_geom import DuplicateLineError, ProjLine

L = ProjLine


def campedelli_assignment(seed=7):
    return CoverAssignment.campedelli(seeded_general_lines(seed))


def test_annihilator_zero():
    assert annihilator(G2Elt((0, 0, 0))) == set(all_elements(3))


def test_annihilator_of_basis_vector():
    expected = {G2Elt(b) for b in [(0, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1)]}
    assert annihilator(G2Elt((1, 0, 0))) == expected


def test_annihilator_counts():
    for g in nonzero_elements(3):
        ann = annihilator(g)
        assert len(ann) == 4
        assert len([h for h in ann if not h.is_zero()]) == 3


@given(st.integers(2, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.sampled_from((0, 1)), min_size=n, max_size=n))
))
def test_annihilator_is_index_two_subgroup(data):
    n, bits = data
    g = G2Elt(tuple(bits))
    ann = annihilator(g, n)
    if g.is_zero():
        assert len(ann) == 2 ** n
    else:
        assert len(ann) == 2 ** (n - 1)
    for h1 in ann:
        for h2 in ann:
            assert (h1 ^ h2) in ann


def test_square_equation_campedelli():
    asg = campedelli_assignment()
    sq = square_equation(G2Elt((1, 0, 0)), asg)
    assert sq == [j for j, ch in enumerate(asg.chars) if ch.bits[0] == 1]
    assert len(sq) == 4


def test_square_equation_zero_element():
    with pytest.raises(ZeroElementError):
        square_equation(G2Elt((0, 0, 0)), campedelli_assignment())


def test_square_equation_bidouble():
    lines = seeded_general_lines(3, count=3)
    asg = CoverAssignment(2, tuple(lines), (G2Elt((1, 0)), G2Elt((0, 1)), G2Elt((1, 1))))
    assert square_equation(G2Elt((1, 0)), asg) == [0, 2]


def test_product_relation_basic():
    asg = campedelli_assignment()
    rel = product_relation(G2Elt((1, 0, 0)), G2Elt((0, 1, 0)), asg)
    assert rel.sum == G2Elt((1, 1, 0))
    assert len(rel.factor_lines) == 2


def test_product_relation_degenerate_pair():
    asg = campedelli_assignment()
    with pytest.raises(DegeneratePairError):
        product_relation(G2Elt((1, 0, 0)), G2Elt((1, 0, 0)), asg)


def test_all_21_pairs_have_two_factors():
    asg = campedelli_assignment()
    pairs = list(combinations(nonzero_elements(3), 2))
    assert len(pairs) == 21
    for gi, gj in pairs:
        assert len(product_relation(gi, gj, asg).factor_lines) == 2


def test_relations_consistent_standard():
    assert relations_consistent(campedelli_assignment())


def test_relations_consistent_with_duplicated_character():
    lines = seeded_general_lines(11, count=4)
    chars = (G2Elt((1, 0, 0)), G2Elt((1, 0, 0)), G2Elt((0, 1, 0)), G2Elt((1, 1, 1)))
    assert relations_consistent(CoverAssignment(3, tuple(lines), chars))


def test_zero_character_rejected_upstream():
    lines = seeded_general_lines(5, count=2)
    with pytest.raises(ZeroElementError):
        CoverAssignment(3, tuple(lines), (G2Elt((0, 0, 0)), G2Elt((1, 0, 0))))


_NONZERO_BITS = {n: [g.bits for g in nonzero_elements(n)] for n in (2, 3, 4)}


@given(
    st.integers(2, 4).flatmap(
        lambda n: st.lists(
            st.sampled_from(_NONZERO_BITS[n]), min_size=3, max_size=7
        ).map(lambda chars: (n, chars))
    )
)
def test_relations_consistent_always(data):
    n, char_bits = data
    lines = seeded_general_lines(n * 100 + len(char_bits), count=len(char_bits))
    asg = CoverAssignment(n, tuple(lines), tuple(G2Elt(b) for b in char_bits))
    assert relations_consistent(asg)


def test_quadrics_on_general_lines():
    lines = seeded_general_lines(1)
    quadrics = campedelli_quadrics(lines)
    assert len(quadrics) == 4
    rows = [[Fraction(c) for c in vec] for vec in quadrics]
    assert linalg.rank(rows) == 4
    for vec in quadrics:
        for coord in range(3):
            assert sum(vec[j] * lines[j].coeffs[coord] for j in range(7)) == 0


def test_quadrics_rank_deficient():
    concurrent = [L(1, k, 0) for k in range(6)] + [L(0, 1, 0)]  # all through (0:0:1)
    with pytest.raises(RankDeficientError):
        campedelli_quadrics(concurrent)


def test_smoothness_general_lines():
    report = campedelli_smoothness(seeded_general_lines(2))
    assert report.smooth and not report.bad_points


def test_smoothness_single_triple_point():
    lines = [
        L(1, 0, 0), L(0, 1, 0), L(1, 1, 0),  # concurrent at (0:0:1)
        L(1, 1, -5), L(1, -3, -2), L(1, -1, 2), L(0, 2, -1),
    ]
    report = campedelli_smoothness(lines)
    assert not report.smooth
    assert len(report.bad_points) == 1
    assert report.bad_points[0].point.coords == (0, 0, 1)
    assert report.bad_points[0].lines_through == frozenset({0, 1, 2})


def test_smoothness_duplicate_line():
    lines = seeded_general_lines(2)
    with pytest.raises(DuplicateLineError):
        campedelli_smoothness(lines[:6] + [lines[0]])


def _oracle_residue_counts():
    counts = {r: 0 for r in range(5)}
    monos = []
    for e1 in range(6):
        for e2 in range(6 - e1):
            for e3 in range(6 - e1 - e2):
                e4 = 5 - e1 - e2 - e3
                monos.append((e1, e2, e3, e4))
    assert len(monos) == 56
    for exps in monos:
        counts[(exps[0] + 2 * exps[1] + 3 * exps[2] + 4 * exps[3]) % 5] += 1
    return counts


def test_godeaux_partition_and_counts():
    oracle = _oracle_residue_counts()
    total = 0
    for r in range(5):
        monos = godeaux_invariant_monomials(r)
        assert len(monos) == oracle[r]
        assert monos == sorted(monos)
        total += len(monos)
    assert total == 56
    assert oracle[0] == 12


def test_godeaux_residue_zero_contains_fifth_powers():
    monos = godeaux_invariant_monomials(0)
    for i in range(4):
        assert tuple(5 if j == i else 0 for j in range(4)) in monos


def test_free_action_all_ones():
    coeffs = {exps: 1 for exps in godeaux_invariant_monomials(0)}
    report = godeaux_free_action(coeffs)
    assert report.free and not report.fixed_points_hit


def test_free_action_missing_fifth_power():
    coeffs = {exps: 1 for exps in godeaux_invariant_monomials(0)}
    coeffs[(5, 0, 0, 0)] = 0
    report = godeaux_free_action(coeffs)
    assert not report.free
    assert report.fixed_points_hit == ((1, 0, 0, 0),)


def test_free_action_fermat():
    coeffs = {tuple(5 if j == i else 0 for j in range(4)): 1 for i in range(4)}
    assert godeaux_free_action(coeffs).free


def test_free_action_empty():
    with pytest.raises(EmptyPolynomialError):
        godeaux_free_action({(5, 0, 0, 0): 0})


def test_free_action_rejects_non_invariant_monomial():
    with pytest.raises(ValueError):
        godeaux_free_action({(4, 1, 0, 0): 1})
