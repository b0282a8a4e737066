"""Shared generators for seeded randomized tests."""

import random
from fractions import Fraction
from itertools import combinations

from pg0geo import linalg
from pg0geo.node_deform import Poly
from pg0geo.plane_geom import ProjLine


def seeded_general_lines(seed, count=7, bound=9):
    """Distinct lines, no three concurrent, spanning the dual plane."""
    rng = random.Random(seed)
    lines: list[ProjLine] = []
    while len(lines) < count:
        coeffs = tuple(rng.randint(-bound, bound) for _ in range(3))
        if coeffs == (0, 0, 0):
            continue
        candidate = ProjLine(*coeffs)
        if candidate in lines:
            continue
        ok = True
        for l1, l2 in combinations(lines, 2):
            a, b = l1.coeffs, l2.coeffs
            pt = (
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            )
            if sum(x * y for x, y in zip(pt, candidate.coeffs)) == 0:
                ok = False
                break
        if ok:
            lines.append(candidate)
    if count >= 3:
        rows = [[Fraction(l.coeffs[i]) for l in lines] for i in range(3)]
        if linalg.rank(rows) < 3:
            return seeded_general_lines(seed + 10_000, count, bound)
    return lines


def random_invertible_matrix(rng, bound=3):
    while True:
        matrix = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
        det = (
            matrix[0][0] * (matrix[1][1] * matrix[2][2] - matrix[1][2] * matrix[2][1])
            - matrix[0][1] * (matrix[1][0] * matrix[2][2] - matrix[1][2] * matrix[2][0])
            + matrix[0][2] * (matrix[1][0] * matrix[2][1] - matrix[1][1] * matrix[2][0])
        )
        if det != 0:
            return matrix


def random_small_poly(rng, max_terms=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = (
            rng.randint(0, 2),
            rng.randint(0, 2),
            rng.randint(0, 3),
            rng.randint(0, 2),
        )
        coeff = rng.randint(-3, 3)
        if coeff:
            terms[exps] = terms.get(exps, 0) + coeff
    return Poly(terms)
