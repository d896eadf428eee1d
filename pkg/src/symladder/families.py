"""Enumerated and random families of ladders and ideals, for sweeps and tests."""

import random

from .errors import IdealError, LadderError
from .ideal import mk_ideal, normalize
from .ladder import from_corners


def _staircases(n):
    """Sequences of plus cells with weakly increasing rows and weakly decreasing columns."""
    cells = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    out = []

    def grow(seq):
        out.append(tuple(seq))
        r, c = seq[-1]
        for cell in cells:
            if cell[0] >= r and cell[1] <= c and cell != (r, c):
                grow(seq + [cell])

    for cell in cells:
        grow([cell])
    return out


def all_ladders(n):
    """Every ladder of the n x n symmetric matrix, sorted by cell list."""
    stairs = _staircases(n)
    seen = {}
    for lower in stairs:
        for upper in stairs:
            if lower[0] != upper[0]:
                continue
            try:
                L = from_corners(n, lower, upper)
            except LadderError:
                continue
            seen.setdefault(L.plus_cells, L)
    return sorted(seen.values(), key=lambda L: (len(L), L.cells))


def ideal_family(max_n=5, max_points=2, max_t=3, max_cells=15):
    """Distinct normalized ideals reachable from small ladders.

    Points are the upper outside corners plus optionally one more border
    cell; sizes range over ``1..max_t``.  Results are deduplicated after
    normalization and sorted for reproducibility.
    """
    found = {}
    for n in range(1, max_n + 1):
        for L in all_ladders(n):
            if len(L) > max_cells:
                continue
            outs = list(L.corner_data.upper_outside)
            if len(outs) > max_points:
                continue
            choices = [outs]
            if len(outs) < max_points:
                choices += [outs + [p] for p in L.border if p not in outs]
            for pts in choices:
                for sizes in _size_vectors(len(pts), max_t):
                    try:
                        I = normalize(mk_ideal(L, pts, sizes))
                    except IdealError:
                        continue
                    if I.is_zero:
                        continue
                    found.setdefault((I.n, I.ladder.cells, I.points, I.sizes), I)
    return [found[k] for k in sorted(found)]


def _size_vectors(s, max_t):
    if s == 0:
        yield ()
        return
    for rest in _size_vectors(s - 1, max_t):
        for t in range(1, max_t + 1):
            yield rest + (t,)


def random_ladder(rng, n):
    """A uniformly chosen ladder among those of the n x n matrix."""
    return rng.choice(_ladder_cache(n))


_CACHE = {}


def _ladder_cache(n):
    if n not in _CACHE:
        _CACHE[n] = all_ladders(n)
    return _CACHE[n]


def random_ideal(rng, n, max_t=3, extra_points=1):
    """Random normalized ideal on a random ladder; may retry a few times."""
    for _ in range(100):
        L = random_ladder(rng, n)
        pts = list(L.corner_data.upper_outside)
        spare = [p for p in L.border if p not in pts]
        rng.shuffle(spare)
        pts += spare[:rng.randint(0, extra_points)]
        sizes = [rng.randint(1, max_t) for _ in pts]
        try:
            I = normalize(mk_ideal(L, pts, sizes))
        except IdealError:
            continue
        if not I.is_zero:
            return I
    raise RuntimeError("could not draw a non-zero ideal")


def rng_from(seed):
    return random.Random(seed)
