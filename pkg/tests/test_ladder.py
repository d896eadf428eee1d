import pytest

from oracles import brute_is_ladder, plus_triangle
from symladder.errors import (CellNotInLadder, ClosureViolation, EmptyLadder, MalformedCorners,
                              OutOfRange)
from symladder.families import all_ladders
from symladder.ladder import (corners, from_corners, mirror_closure, subladder_at, union_of,
                              upper_border, validate_ladder)


def test_upper_left_triangle_is_a_ladder():
    L = validate_ladder(3, [(1, 1), (1, 2), (2, 2)])
    assert L.plus_cells == {(1, 1), (1, 2), (2, 2)}


def test_diagonal_pair_forces_the_cell_between():
    with pytest.raises(ClosureViolation) as err:
        validate_ladder(2, [(1, 1), (2, 2)])
    assert (1, 2) in err.value.missing
    assert set(err.value.witness) == {(1, 1), (2, 2)}


def test_lone_corner_cell_is_a_ladder():
    # closure is read on NW/SE pairs, so a lone corner cell forces nothing
    assert validate_ladder(3, [(1, 3), (3, 1)]).plus_cells == {(1, 3)}


def test_full_two_by_two():
    L = validate_ladder(2, [(1, 1), (1, 2), (2, 2)])
    assert len(L.completion) == 4


def test_mirrored_input_is_canonicalised():
    assert validate_ladder(2, [(2, 1), (1, 1)]).plus_cells == {(1, 1), (1, 2)}


@pytest.mark.parametrize("cells,exc", [
    ([], EmptyLadder),
    ([(0, 1)], OutOfRange),
    ([(1, 4)], OutOfRange),
])
def test_bad_cells(cells, exc):
    with pytest.raises(exc):
        validate_ladder(3, cells)


def test_from_corners_full_triangle():
    L = from_corners(3, [(1, 3)], [(1, 3)])
    assert L.plus_cells == set(plus_triangle(3))


def test_from_corners_set_builder():
    # upper corner (2,3): keep cells with i <= 2 or j <= 3
    L = from_corners(4, [(1, 4)], [(1, 4), (2, 3)])
    expected = {(i, j) for i, j in plus_triangle(4) if i <= 2 or j <= 3}
    assert L.plus_cells == expected


@pytest.mark.parametrize("lower,upper", [
    ([(1, 4)], [(1, 4), (2, 3), (1, 2)]),   # rows not increasing
    ([(1, 4)], [(2, 4), (4, 2)]),           # corner below the diagonal, apex mismatch
    ([(1, 4)], [(1, 3)]),                   # apex mismatch
])
def test_malformed_corners(lower, upper):
    with pytest.raises(MalformedCorners):
        from_corners(4, lower, upper)


def test_corners_of_full_triangle():
    cd = corners(from_corners(3, [(1, 3)], [(1, 3)]))
    assert cd.lower_inside[0] == cd.upper_inside[0] == (1, 3)
    assert (3, 3) in cd.upper_outside


def test_single_cell():
    L = validate_ladder(1, [(1, 1)])
    cd = L.corner_data
    assert cd.lower_inside == cd.upper_inside == cd.lower_outside == cd.upper_outside == ((1, 1),)
    assert upper_border(L) == [(1, 1)]


def test_border_of_small_triangle():
    assert upper_border(validate_ladder(2, plus_triangle(2))) == [(1, 2), (2, 2)]


def test_subladder_filters():
    L = validate_ladder(3, plus_triangle(3))
    assert subladder_at(L, 2, 3).plus_cells == {(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)}
    assert subladder_at(L, 3, 2).plus_cells == {(1, 1), (1, 2), (2, 2)}
    with pytest.raises(CellNotInLadder):
        subladder_at(validate_ladder(3, [(1, 1), (1, 2), (2, 2)]), 3, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_validity_matches_brute_force_on_every_subset(n):
    tri = plus_triangle(n)
    subsets = [frozenset(c for k, c in enumerate(tri) if mask >> k & 1)
               for mask in range(1, 1 << len(tri))]
    for cells in subsets:
        try:
            validate_ladder(n, cells)
            ok = True
        except ClosureViolation:
            ok = False
        assert ok == brute_is_ladder(n, cells), sorted(cells)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 6), (3, 25), (4, 95)])
def test_every_ladder_is_enumerated(n, count):
    tri = plus_triangle(n)
    brute = sum(brute_is_ladder(n, [c for k, c in enumerate(tri) if mask >> k & 1])
                for mask in range(1, 1 << len(tri)))
    assert brute == count == len(all_ladders(n))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_round_trip_and_border_properties(n):
    for L in all_ladders(n):
        cd = corners(L)
        assert from_corners(n, cd.lower_inside, cd.upper_inside) == L
        border = set(upper_border(L))
        assert set(cd.upper_outside) <= border
        assert union_of(n, [subladder_at(L, *c) for c in cd.upper_outside]) == L
        for c in border:
            subladder_at(L, *c)


def test_mirror_closure():
    assert mirror_closure({(1, 2)}) == {(1, 2), (2, 1)}
