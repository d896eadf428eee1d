import random
from itertools import combinations

import pytest
import sympy

from oracles import perm_det, to_sympy
from symladder.errors import IndexOutOfRange, ResourceBound
from symladder.ideal import Minor
from symladder.polyarith import (Bounds, MonomialOrder, Ring, contains, groebner, height,
                                 is_groebner, krull_dimension, normal_form,
                                 reduce_with_quotients)
from symladder.polyarith.minors import expand_minor, full_ring


def R(modulus=0, names=("a", "b", "c")):
    return Ring(names, MonomialOrder("degrevlex"), modulus)


def test_arithmetic_matches_sympy():
    ring = R()
    a, b, c = ring.gens()
    p = (a + 2 * b - c) ** 3 - a * b * c + b
    sa, sb, sc = sympy.symbols("a b c")
    expected = sympy.expand((sa + 2 * sb - sc) ** 3 - sa * sb * sc + sb)
    names = dict(zip(("a", "b", "c"), (sa, sb, sc)))
    got = sum(sympy.Integer(int(k)) * sympy.Mul(*[names[n] ** e for n, e in zip(ring.names, ex)])
              for ex, k in p.terms.items())
    assert sympy.expand(got - expected) == 0


def test_prime_field_reduces_coefficients():
    ring = R(7)
    a, _, _ = ring.gens()
    assert (a * 7).is_zero()
    assert (a * 8) == a
    assert ring.inv(3) * 3 % 7 == 1


def test_text_form_is_canonical():
    ring = R()
    a, b, c = ring.gens()
    assert (a * b - 2 * c ** 2).to_text() == "+1*a*b -2*c^2"
    assert ring.zero().to_text() == "0"


@pytest.mark.parametrize("rows,cols,text", [
    ((1,), (2,), "+1*x[1,2]"),
    ((1, 2), (1, 2), "-1*x[1,2]^2 +1*x[1,1]*x[2,2]"),
    ((1, 3), (2, 3), "-1*x[1,3]*x[2,3] +1*x[1,2]*x[3,3]"),
])
def test_minor_expansions(rows, cols, text):
    assert expand_minor(Minor.of(rows, cols), 3).to_text() == text


def test_expansion_against_permutation_sum():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 6)
        t = rng.randint(1, min(4, n))
        rows = tuple(sorted(rng.sample(range(1, n + 1), t)))
        cols = tuple(sorted(rng.sample(range(1, n + 1), t)))
        got = to_sympy(expand_minor(Minor.of(rows, cols), n))
        assert sympy.expand(got - perm_det(rows, cols)) == 0


def test_expansion_rejects_bad_indices():
    with pytest.raises(IndexOutOfRange):
        expand_minor(Minor.of((1, 4), (1, 2)), 3)


def two_minors(n, modulus=0):
    ring = full_ring(n, modulus)
    return ring, [expand_minor(Minor.of(r, c), n, ring)
                  for r in combinations(range(1, n + 1), 2)
                  for c in combinations(range(1, n + 1), 2) if r <= c]


def test_groebner_matches_sympy():
    ring, gens = two_minors(3)
    ours = groebner(gens)
    syms = [sympy.Symbol(n.replace("x[", "x").replace(",", "_").replace("]", ""))
            for n in ring.names]
    theirs = sympy.groebner([to_sympy(g) for g in gens], *syms, order="grevlex")
    assert {sympy.expand(to_sympy(g)) for g in ours} == {sympy.expand(g) for g in theirs.exprs}
    assert is_groebner(ours)


def test_groebner_trivial_cases():
    ring = R()
    a, b, c = ring.gens()
    assert groebner([3 * a * b + 6 * c]) == [a * b + 2 * c]
    assert set(groebner([a, b, c])) == {a, b, c}
    assert groebner([a, a + ring.one()]) == [ring.one()]


def test_normal_form_and_quotients():
    ring, gens = two_minors(3)
    G = groebner(gens)
    for g in gens:
        assert normal_form(g, G).is_zero()
    assert normal_form(ring.one(), G) == ring.one()
    x = {n: ring.var(n) for n in ring.names}
    p = x["x[2,3]"] * (x["x[1,2]"] * x["x[2,3]"] - x["x[1,3]"] * x["x[2,2]"])
    assert contains(G, p)
    q, r = reduce_with_quotients(p * p + x["x[1,1]"], G)
    assert sum((qi * gi for qi, gi in zip(q, G)), ring.zero()) + r == p * p + x["x[1,1]"]


def test_krull_dimension_examples():
    ring, gens = two_minors(3)
    assert krull_dimension([], num_vars=6) == 6
    assert krull_dimension(ring.gens()) == 0
    assert krull_dimension(gens) == 3
    assert height(gens) == 3
    assert krull_dimension([ring.one()]) == -1


@pytest.mark.parametrize("n,t", [(n, t) for n in range(2, 6) for t in range(2, n + 1)])
def test_classical_heights_over_prime_field(n, t):
    ring = full_ring(n, 32003)
    gens = [expand_minor(Minor.of(r, c), n, ring)
            for r in combinations(range(1, n + 1), t)
            for c in combinations(range(1, n + 1), t) if r <= c]
    assert height(gens) == (n - t + 1) * (n - t + 2) // 2


def test_resource_bounds_are_reported():
    ring, gens = two_minors(4)
    with pytest.raises(ResourceBound):
        groebner(gens, bounds=Bounds(max_degree=2))
    with pytest.raises(ResourceBound):
        groebner(gens, bounds=Bounds(max_pairs=1))


def test_lex_order_differs_from_degrevlex():
    ring = R()
    a, b, c = ring.gens()
    G = groebner([a - b ** 2, b - c], order=MonomialOrder("lex"))
    assert sorted(g.to_text() for g in G) == ["+1*a -1*c^2", "+1*b -1*c"]
