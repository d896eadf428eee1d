import pytest

from oracles import oracle_height, plus_triangle
from symladder.errors import InvalidPivot, NotNormalized
from symladder.families import ideal_family, random_ideal, rng_from
from symladder.height import h_plus, height, i_plus
from symladder.ideal import mk_ideal
from symladder.ladder import validate_ladder


def full_ideal(n, t):
    return mk_ideal(validate_ladder(n, plus_triangle(n)), [(n, n)], [t])


@pytest.mark.parametrize("n,t", [(n, t) for n in range(1, 6) for t in range(1, n + 1)])
def test_full_matrix_region(n, t):
    hp = h_plus(full_ideal(n, t))
    assert hp.h_plus == {(i, j) for i, j in plus_triangle(n) if j <= n - t + 1}
    assert hp.height == (n - t + 1) * (n - t + 2) // 2


def test_veronese_height():
    I = full_ideal(3, 2)
    assert height(I) == 3 == oracle_height(I)


def test_ones_give_the_whole_ladder():
    L = validate_ladder(4, [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3)])
    outs = L.corner_data.upper_outside
    assert h_plus(mk_ideal(L, outs, [1] * len(outs))).h_plus == L.plus_cells


def test_three_points_staircase():
    # every cell above-left of a pulled-back corner, and only those
    n = 14
    pts, ts = [(4, 14), (9, 13), (10, 10)], [3, 6, 4]
    from symladder.ladder import subladder_at, union_of
    big = validate_ladder(n, plus_triangle(n))
    L = union_of(n, [subladder_at(big, *p) for p in pts])
    I = mk_ideal(L, pts, ts)
    assert I.is_normalized()
    pulled = [(v - t + 1, w - t + 1) for (v, w), t in zip(pts, ts)]
    expected = {c for c in L.plus_cells if any(c[0] <= a and c[1] <= b for a, b in pulled)}
    assert h_plus(I).h_plus == expected
    assert set(I.ladder.plus_cells) >= set(pulled)


def test_i_plus_removes_the_pulled_corner():
    I = full_ideal(3, 2)
    ip = i_plus(I, 1)
    assert h_plus(I).h_plus - ip.h_plus == {(2, 2)}
    assert ip.height == 2


def test_i_plus_rejects_bad_pivot():
    with pytest.raises(InvalidPivot):
        i_plus(full_ideal(3, 1), 1)


def test_unnormalized_rejected():
    L = validate_ladder(3, plus_triangle(3))
    with pytest.raises(NotNormalized):
        h_plus(mk_ideal(L, [(2, 3), (3, 3)], [2, 3]))


def test_i_plus_on_random_ideals():
    rng = rng_from(7)
    for _ in range(100):
        I = random_ideal(rng, rng.randint(2, 5))
        hp = h_plus(I)
        for k in range(1, I.s + 1):
            if I.sizes[k - 1] < 2:
                continue
            try:
                ip = i_plus(I, k)
            except InvalidPivot:
                continue
            v, w = I.points[k - 1]
            t = I.sizes[k - 1]
            assert (v - t + 1, w - t + 1) in hp.h_plus
            assert ip.height == hp.height - 1


def test_height_matches_oracle_on_small_family():
    fam = [I for I in ideal_family(max_n=4) if len(I.ladder) <= 8]
    assert len(fam) > 50
    for I in fam:
        assert height(I) == oracle_height(I), I
