from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import brute_is_ladder, brute_minors, plus_triangle
from symladder.biliaison import descend_step
from symladder.errors import ClosureViolation, IdealError
from symladder.families import all_ladders, ideal_family
from symladder.height import h_plus
from symladder.ideal import mk_ideal, normalize, pivot
from symladder.ladder import corners, from_corners, subladder_at, union_of, validate_ladder
from symladder.polyarith import groebner
from symladder.polyarith.minors import expand_minor, ladder_ring

LADDERS = {n: all_ladders(n) for n in range(1, 6)}


@st.composite
def ladders(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    return draw(st.sampled_from(LADDERS[n]))


@st.composite
def ideals(draw, max_n=5, max_t=3):
    L = draw(ladders(max_n))
    outs = list(L.corner_data.upper_outside)
    extra = draw(st.lists(st.sampled_from(L.border), max_size=2, unique=True))
    pts = outs + [p for p in extra if p not in outs]
    sizes = draw(st.lists(st.integers(1, max_t), min_size=len(pts), max_size=len(pts)))
    try:
        return mk_ideal(L, pts, sizes)
    except IdealError:
        assume(False)


@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.sampled_from(plus_triangle(n)), min_size=1))))
def test_validity_agrees_with_brute_force(arg):
    n, cells = arg
    try:
        validate_ladder(n, cells)
        ok = True
    except ClosureViolation:
        ok = False
    assert ok == brute_is_ladder(n, cells)


@given(ladders())
def test_corner_round_trip(L):
    cd = corners(L)
    assert from_corners(L.n, cd.lower_inside, cd.upper_inside) == L
    assert set(cd.upper_outside) <= set(L.border)
    assert union_of(L.n, [subladder_at(L, *c) for c in cd.upper_outside]) == L


@given(ideals())
def test_normalize_is_idempotent(I):
    N = normalize(I)
    assert normalize(N) == N
    assert N.is_zero or N.is_normalized()


@settings(max_examples=60, deadline=None)
@given(ideals(max_n=4))
def test_normalize_keeps_the_ideal(I):
    assume(len(I.ladder) <= 12)
    N = normalize(I)
    ring = ladder_ring(I.ladder.plus_cells, 32003)
    before = groebner([expand_minor(m, I.n, ring) for m in I.generators])
    after = groebner([expand_minor(m, I.n, ring) for m in N.generators])
    assert before == after


@given(ideals())
def test_generators_match_brute_force(I):
    assert set(I.generators) == brute_minors(I)


DESCENDABLE = [I for I in ideal_family() if pivot(I) is not None]


@settings(deadline=None)
@given(st.sampled_from(DESCENDABLE))
def test_descent_step_heights(N):
    step = descend_step(N)
    h = h_plus(N).height
    assert step.heights == (h, h, h - 1)
    assert max(step.target.sizes, default=0) <= max(N.sizes)
