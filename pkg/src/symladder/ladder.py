"""Symmetric ladders of an n x n symmetric matrix of indeterminates.

A ladder is stored through its plus part: the cells ``(i, j)`` with
``i <= j``.  Cells are 1-based ``(row, col)`` tuples.  The full ladder is
the plus part together with the mirrored cells.

The shape is the band left over after cutting a staircase off the top-left
(lower corners) and one off the bottom-right (upper corners) of the plus
triangle::

    L+ = {(i, j) : i <= j, (i <= c_l or j <= d_l) for all l,
                           (i >= a_l or j >= b_l) for all l}

restricted to the frame ``a_1 <= i``, ``j <= b_1`` spanned by the apex
``(a_1, b_1) = (c_1, d_1)``.
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import (CellNotInLadder, ClosureViolation, EmptyLadder, MalformedCorners,
                     OutOfRange, UnrepresentableLadder)


def canonical(cell):
    i, j = cell
    return (i, j) if i <= j else (j, i)


def mirror_closure(plus_cells):
    return frozenset(plus_cells) | frozenset((j, i) for i, j in plus_cells)


@dataclass(frozen=True)
class CornerData:
    lower_inside: tuple
    lower_outside: tuple
    upper_inside: tuple
    upper_outside: tuple


@dataclass(frozen=True)
class Ladder:
    """Immutable ladder; build it with :func:`validate_ladder` or :func:`from_corners`."""

    n: int
    plus_cells: frozenset

    def __contains__(self, cell):
        return canonical(cell) in self.plus_cells

    def __len__(self):
        return len(self.plus_cells)

    def __iter__(self):
        return iter(self.cells)

    @cached_property
    def cells(self):
        """Plus cells in row-major order."""
        return tuple(sorted(self.plus_cells))

    @cached_property
    def completion(self):
        return mirror_closure(self.plus_cells)

    @cached_property
    def corner_data(self):
        return corners(self)

    @cached_property
    def border(self):
        return tuple(upper_border(self))

    def restrict(self, cells):
        """Unvalidated ladder on a subset of the cells (same ambient size)."""
        return Ladder(self.n, frozenset(cells))

    def __repr__(self):
        return f"Ladder(n={self.n}, cells={list(self.cells)})"


def _maxima(cells):
    """Componentwise-maximal cells, sorted by increasing row."""
    out = []
    for c in sorted(cells, key=lambda c: (c[0], -c[1])):
        out = [m for m in out if not (m[0] <= c[0] and m[1] <= c[1])]
        if not any(c[0] <= m[0] and c[1] <= m[1] for m in out):
            out.append(c)
    return sorted(out)


def _minima(cells):
    out = []
    for c in sorted(cells):
        if not any(m[0] <= c[0] and m[1] <= c[1] for m in out):
            out.append(c)
    return sorted(out)


def _corner_lists(cells):
    cells = frozenset(cells)
    r0 = min(i for i, _ in cells)
    n0 = max(j for _, j in cells)
    maxima = _maxima(cells)
    minima = _minima(cells)

    upper = [(r0, maxima[0][1])]
    for m in range(len(maxima) - 1):
        upper.append((maxima[m][0], maxima[m + 1][1]))
    p, q = maxima[-1]
    if p < q:
        upper.append((p, p))

    lower = []
    prev_col = n0
    for p_, q_ in minima:
        lower.append((p_, prev_col))
        prev_col = q_
    p, q = minima[-1]
    if p < q:
        lower.append((q, q))
    return CornerData(tuple(lower), tuple(minima), tuple(upper), tuple(maxima))


def _check_corner_shape(lower, upper):
    # rows may repeat and columns may stall at the degenerate ends (a ladder
    # confined to one row, or whose top cell is itself an outside corner)
    if not lower or not upper:
        raise MalformedCorners("both corner lists must be non-empty")
    for name, pts in (("lower", lower), ("upper", upper)):
        for (r1, c1), (r2, c2) in zip(pts, pts[1:]):
            if not (r1 <= r2 and c1 >= c2) or (r1, c1) == (r2, c2):
                raise MalformedCorners(
                    f"{name} inside corners must have increasing rows and decreasing "
                    f"columns: {(r1, c1)} then {(r2, c2)}")
        for r, c in pts:
            if r > c:
                raise MalformedCorners(f"{name} inside corner {(r, c)} lies below the diagonal")
            if r < 1:
                raise MalformedCorners(f"{name} inside corner {(r, c)} out of range")
    if tuple(lower[0]) != tuple(upper[0]):
        raise MalformedCorners(
            f"first lower and upper inside corners must coincide: {lower[0]} vs {upper[0]}")


def _cells_from_corners(n, lower, upper):
    a1, b1 = lower[0]
    out = set()
    for i in range(a1, n + 1):
        for j in range(i, min(b1, n) + 1):
            if all(i <= c or j <= d for c, d in upper) and \
                    all(i >= a or j >= b for a, b in lower):
                out.add((i, j))
    return frozenset(out)


def _closure_witness(full):
    """First pair violating band closure in the symmetric cell set, or None.

    Band closure: for (i, j), (h, k) in the set with i < h and j < k, both
    (i, k) and (h, j) must be present.
    """
    cells = sorted(full)
    for idx, (i, j) in enumerate(cells):
        for h, k in cells[idx + 1:]:
            if i < h and j < k:
                missing = [c for c in ((i, k), (h, j)) if c not in full]
                if missing:
                    return (i, j), (h, k), missing
    return None


def _convexity_witness(n, plus):
    """A missing plus cell squeezed between two ladder cells, or None.

    Ladders are exactly the subsets of the plus triangle that are convex for
    the componentwise order; this is what the corner description encodes.
    """
    ordered = sorted(plus)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if (i, j) in plus:
                continue
            below = next((p for p in ordered if p[0] <= i and p[1] <= j), None)
            above = next((r for r in ordered if r[0] >= i and r[1] >= j), None)
            if below and above:
                return below, above, (i, j)
    return None


def validate_ladder(n, cells):
    """Canonicalise ``cells`` and check they form a ladder of the n x n matrix."""
    if n < 1:
        raise OutOfRange(f"matrix size must be positive, got {n}")
    plus = set()
    for cell in cells:
        i, j = (int(x) for x in cell)
        if not (1 <= i <= n and 1 <= j <= n):
            raise OutOfRange(f"cell {(i, j)} outside the {n}x{n} grid")
        plus.add(canonical((i, j)))
    if not plus:
        raise EmptyLadder("a ladder needs at least one cell")
    full = mirror_closure(plus)
    bad = _closure_witness(full)
    if bad is not None:
        a, b, missing = bad
        raise ClosureViolation(
            f"cells {a} and {b} force {missing} into the ladder", witness=(a, b), missing=missing)
    bad = _convexity_witness(n, plus)
    if bad is not None:
        a, b, hole = bad
        raise ClosureViolation(
            f"cell {hole} lies between {a} and {b} but is missing", witness=(a, b),
            missing=[hole])
    cd = _corner_lists(plus)
    if _cells_from_corners(n, cd.lower_inside, cd.upper_inside) != plus:
        raise UnrepresentableLadder("no corner data describes these cells")
    return Ladder(n, frozenset(plus))


def from_corners(n, lower_inside, upper_inside):
    """Ladder cut out by the given lower and upper inside corners."""
    lower = [tuple(c) for c in lower_inside]
    upper = [tuple(c) for c in upper_inside]
    _check_corner_shape(lower, upper)
    for r, c in lower + upper:
        if c > n:
            raise MalformedCorners(f"corner {(r, c)} outside the {n}x{n} grid")
    cells = _cells_from_corners(n, lower, upper)
    if not cells:
        raise EmptyLadder("corner constraints exclude every cell")
    return validate_ladder(n, cells)


def corners(ladder):
    """Inside and outside corners, with the diagonal augmentation applied.

    Outside corners are the componentwise extreme cells of the plus part:
    maxima for the upper corners, minima for the lower ones.
    """
    return _corner_lists(ladder.plus_cells)


def upper_border(ladder):
    """Cells on the upper (bottom-right) staircase, by row then decreasing column."""
    up = ladder.corner_data.upper_inside
    cs = [c for c, _ in up]
    ds = [d for _, d in up]
    r = len(up)
    cs.append(ds[-1])  # c_{r+1} = d_r
    out = []
    for c, d in ladder.plus_cells:
        for l in range(r):
            if cs[l] <= c <= cs[l + 1] and d == ds[l]:
                out.append((c, d))
                break
            upper_d = ds[l - 1] if l > 0 else ds[0]
            if c == cs[l] and ds[l] <= d <= upper_d:
                out.append((c, d))
                break
    return sorted(out, key=lambda x: (x[0], -x[1]))


def subladder_at(ladder, c, d):
    """The part of the ladder weakly above-left of ``(c, d)``."""
    if (c, d) not in ladder:
        raise CellNotInLadder(f"{(c, d)} is not a cell of the ladder")
    cells = [(i, j) for i, j in ladder.plus_cells if i <= c and j <= d]
    return validate_ladder(ladder.n, cells)


def union_of(n, ladders):
    cells = set()
    for L in ladders:
        cells |= L.plus_cells
    return validate_ladder(n, cells)
