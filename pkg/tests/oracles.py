"""Independent oracles shared by the test modules.

None of these use the package's own derived structures: closure is checked
by scanning all cell pairs, minors by scanning all index subsets, and
determinants by summing over permutations.
"""

from itertools import combinations, permutations

import sympy

from symladder.ideal import Minor
from symladder.polyarith import groebner, krull_dimension
from symladder.polyarith.minors import expand_minor, ladder_ring


def plus_triangle(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def brute_is_ladder(n, plus):
    """Order-convex in the plus triangle and closed under the band rule."""
    plus = set(plus)
    if not plus:
        return False
    full = plus | {(j, i) for i, j in plus}
    for (i, j) in full:
        for (h, k) in full:
            if i < h and j < k and not {(i, k), (h, j)} <= full:
                return False
    tri = plus_triangle(n)
    for a in plus:
        for b in plus:
            for c in tri:
                if a[0] <= c[0] <= b[0] and a[1] <= c[1] <= b[1] and c not in plus:
                    return False
    return True


def brute_minors(ideal):
    """Canonical minors of every size/point pair, by scanning all index subsets."""
    full = ideal.ladder.completion
    out = set()
    idx = range(1, ideal.n + 1)
    for (v, w), t in zip(ideal.points, ideal.sizes):
        for rows in combinations(idx, t):
            for cols in combinations(idx, t):
                cells = [(a, b) if a <= b else (b, a) for a in rows for b in cols]
                if all((a, b) in full for a in rows for b in cols) and \
                        all(a <= v and b <= w for a, b in cells):
                    out.add(Minor.of(rows, cols))
    return out


def sym(i, j):
    i, j = min(i, j), max(i, j)
    return sympy.Symbol(f"x{i}_{j}")


def perm_det(rows, cols):
    """Determinant of the symmetric submatrix as a signed permutation sum."""
    total = 0
    for perm in permutations(range(len(cols))):
        sign = sympy.combinatorics.Permutation(list(perm)).signature()
        term = sign
        for r, p in zip(rows, perm):
            term *= sym(r, cols[p])
        total += term
    return sympy.expand(total)


def to_sympy(poly):
    names = [sympy.Symbol(n.replace("x[", "x").replace(",", "_").replace("]", ""))
             for n in poly.ring.names]
    total = 0
    for e, c in poly.terms.items():
        term = sympy.Rational(c.numerator, c.denominator) if hasattr(c, "numerator") else c
        for x, k in zip(names, e):
            term *= x ** k
        total += term
    return sympy.expand(total)


def oracle_height(ideal, modulus=32003):
    ring = ladder_ring(ideal.ladder.plus_cells, modulus)
    gens = [expand_minor(m, ideal.n, ring) for m in ideal.generators]
    if not gens:
        return 0
    return ring.nvars - krull_dimension(gens, basis=groebner(gens))

