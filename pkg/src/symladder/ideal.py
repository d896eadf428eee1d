"""Symmetric mixed ladder determinantal ideals.

An ideal is a ladder, distinguished points ``(v_k, w_k)`` on its upper
border and sizes ``t_k``; it is generated by the ``t_k``-minors whose
entries all lie in the subladder above-left of ``(v_k, w_k)``.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import (AlphaOutOfRange, IdealError, InvalidPivot, LengthMismatch, MalformedBlocks,
                     MissingUpperOutsideCorner, NonPositiveSize, NotNormalized,
                     PointNotOnBorder, PreconditionCornerMissing)
from .ladder import Ladder, mirror_closure, validate_ladder


@dataclass(frozen=True, order=True)
class Minor:
    """The minor ``det(x[rows[a], cols[b]])``, stored in canonical orientation."""

    rows: tuple
    cols: tuple

    @classmethod
    def of(cls, rows, cols):
        rows, cols = tuple(rows), tuple(cols)
        if len(rows) != len(cols) or not rows:
            raise ValueError("a minor needs equally many rows and columns (at least one)")
        for seq in (rows, cols):
            if any(a >= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"indices must be strictly increasing: {seq}")
        # [a; b] and [b; a] are the same polynomial on a symmetric matrix
        if cols < rows:
            rows, cols = cols, rows
        return cls(rows, cols)

    @property
    def size(self):
        return len(self.rows)

    def entries(self):
        return [(a, b) for a in self.rows for b in self.cols]

    def involves(self, cell):
        i, j = cell
        return any((a, b) in ((i, j), (j, i)) for a, b in self.entries())

    def __str__(self):
        return f"[{','.join(map(str, self.rows))};{','.join(map(str, self.cols))}]"


@dataclass(frozen=True)
class CogeneratedSpec:
    alpha: tuple


@dataclass(frozen=True)
class MixedLadderIdeal:
    ladder: Ladder
    points: tuple
    sizes: tuple

    @property
    def n(self):
        return self.ladder.n

    @property
    def s(self):
        return len(self.points)

    @property
    def is_zero(self):
        return not self.points

    def subladder_cells(self, k):
        """Plus cells of the subladder for point ``k`` (0-based)."""
        v, w = self.points[k]
        return frozenset((i, j) for i, j in self.ladder.plus_cells if i <= v and j <= w)

    @cached_property
    def generators(self):
        return enumerate_generators(self)

    def is_normalized(self):
        return not _normalization_defects(self)

    def with_sizes(self, sizes):
        return MixedLadderIdeal(self.ladder, self.points, tuple(sizes))

    def __repr__(self):
        return (f"MixedLadderIdeal(n={self.n}, |L+|={len(self.ladder)}, "
                f"points={list(self.points)}, t={list(self.sizes)})")


def mk_ideal(ladder, points, sizes):
    """Validate points and sizes against ``ladder`` and order the points."""
    points = [tuple(int(x) for x in p) for p in points]
    sizes = [int(t) for t in sizes]
    if len(points) != len(sizes):
        raise LengthMismatch(f"{len(points)} points but {len(sizes)} sizes")
    if not points:
        raise LengthMismatch("at least one distinguished point is required")
    if any(t < 1 for t in sizes):
        raise NonPositiveSize(f"sizes must be positive: {sizes}")
    if len(set(points)) != len(points):
        raise IdealError(f"repeated distinguished point in {points}")
    border = set(ladder.border)
    for p in points:
        if p not in border:
            raise PointNotOnBorder(f"{p} is not on the upper border of the ladder")
    for corner in ladder.corner_data.upper_outside:
        if corner not in points:
            raise MissingUpperOutsideCorner(
                f"upper outside corner {corner} is not a distinguished point", corner=corner)
    order = sorted(range(len(points)), key=lambda k: (points[k][0], -points[k][1]))
    pts = tuple(points[k] for k in order)
    ts = tuple(sizes[k] for k in order)
    for (v1, w1), (v2, w2) in zip(pts, pts[1:]):
        if not (v1 <= v2 and w1 >= w2):
            raise IdealError(f"points {(v1, w1)} and {(v2, w2)} are not border-ordered")
    return MixedLadderIdeal(ladder, pts, ts)


def _nonvacuous(ideal, k):
    """True when some lower outside corner leaves room for a t_k-minor."""
    v, w = ideal.points[k]
    t = ideal.sizes[k]
    return any(t <= min(v - p + 1, w - q + 1)
               for p, q in ideal.ladder.corner_data.lower_outside)


def _normalization_defects(ideal):
    defects = []
    for k in range(ideal.s):
        if not _nonvacuous(ideal, k):
            defects.append(("vacuous", k))
    for k in range(1, ideal.s):
        (v0, w0), (v1, w1) = ideal.points[k - 1], ideal.points[k]
        dt = ideal.sizes[k] - ideal.sizes[k - 1]
        if not (w1 - w0 < dt < v1 - v0):
            defects.append(("redundant", k))
    return defects


def _drop(ideal, k):
    keep = [m for m in range(ideal.s) if m != k]
    if not keep:
        # the zero ideal: no points left, the ladder is kept as the ambient ring
        return MixedLadderIdeal(ideal.ladder, (), ())
    cells = set()
    for m in keep:
        cells |= ideal.subladder_cells(m)
    ladder = validate_ladder(ideal.n, cells)
    return mk_ideal(ladder, [ideal.points[m] for m in keep], [ideal.sizes[m] for m in keep])


def normalize(ideal):
    """Remove vacuous and redundant points until the strict inequalities hold.

    When every point is vacuous the result is the zero ideal: no points, the
    original ladder kept as ambient.

    Vacuous points (no room for a minor of their size) are removed first in
    each pass.  Then for consecutive points k-1, k: a small row step
    ``v_k - v_{k-1} <= t_k - t_{k-1}`` makes point k redundant (its minors
    expand along the extra rows into minors of point k-1); a small column
    step ``w_{k-1} - w_k <= t_{k-1} - t_k`` makes point k-1 redundant.  The
    ladder shrinks to the union of the surviving subladders.
    """
    while True:
        vac = [k for k in range(ideal.s) if not _nonvacuous(ideal, k)]
        if vac:
            ideal = _drop(ideal, vac[0])
            continue
        for k in range(1, ideal.s):
            (v0, w0), (v1, w1) = ideal.points[k - 1], ideal.points[k]
            dt = ideal.sizes[k] - ideal.sizes[k - 1]
            if v1 - v0 <= dt:
                ideal = _drop(ideal, k)
                break
            if w1 - w0 >= dt:
                ideal = _drop(ideal, k - 1)
                break
        else:
            return ideal


def require_normalized(ideal):
    defects = _normalization_defects(ideal)
    if defects:
        raise NotNormalized(f"ideal is not normalized: {defects}")


def _pivot_ok(ideal, idx):
    v, w = ideal.points[idx]
    v_prev = ideal.points[idx - 1][0] if idx > 0 else 0
    w_next = ideal.points[idx + 1][1] if idx + 1 < ideal.s else 0
    return ideal.sizes[idx] >= 2 and v > v_prev and w > w_next


def is_valid_pivot(ideal, k):
    """``k`` is 1-based, as in :func:`pivot`."""
    return isinstance(k, int) and 1 <= k <= ideal.s and _pivot_ok(ideal, k - 1)


def check_pivot(ideal, k):
    if not is_valid_pivot(ideal, k):
        raise InvalidPivot(f"k={k} is not a valid pivot for {ideal!r}")


def pivot(ideal):
    """1-based index of the point a descent step acts on, or None.

    Among points with ``t_k >= 2``, ``v_k > v_{k-1}`` and ``w_k > w_{k+1}``
    (with ``v_0 = w_{s+1} = 0``) the largest size wins, then the smallest k.
    """
    require_normalized(ideal)
    best = None
    for idx, t in enumerate(ideal.sizes):
        if _pivot_ok(ideal, idx) and (best is None or t > ideal.sizes[best]):
            best = idx
    return None if best is None else best + 1


def minor_in_ladder(minor, ladder):
    full = ladder.completion
    return all((a, b) in full for a in minor.rows for b in minor.cols)


def minors_in_cells(plus_cells, t):
    """All canonical t-minors whose entries lie in the symmetric completion."""
    full = mirror_closure(plus_cells)
    idx = sorted({i for i, _ in full})
    rows_of = {}
    for a, b in full:
        rows_of.setdefault(a, set()).add(b)
    out = set()
    for rows in combinations(idx, t):
        common = set.intersection(*(rows_of[r] for r in rows))
        if len(common) < t:
            continue
        for cols in combinations(sorted(common), t):
            if cols < rows:
                continue
            out.add(Minor.of(rows, cols))
    return out


def enumerate_generators(ideal):
    """Canonical minors generating the ideal, deduplicated and sorted."""
    gens = set()
    for k in range(ideal.s):
        gens |= minors_in_cells(ideal.subladder_cells(k), ideal.sizes[k])
    return sorted(gens, key=lambda m: (m.size, m.rows, m.cols))


def from_cogenerated(ladder, spec):
    """Ideal cogenerated by ``alpha`` in a ladder with inside corner (1, n).

    Points are the upper outside corners plus the unique border point of
    row ``alpha_l - 1`` when there is exactly one.  Sizes are
    ``tau_k = min{l : alpha_l > v_k}``; an empty minimum is an error, so
    ``alpha_t = n + 1`` is the way to ask for t-minors at the last row.
    """
    alpha = tuple(int(a) for a in (spec.alpha if isinstance(spec, CogeneratedSpec) else spec))
    n = ladder.n
    if ladder.corner_data.upper_inside[0] != (1, n):
        raise PreconditionCornerMissing(f"(1, {n}) is not an inside corner of the ladder")
    if not alpha or any(a >= b for a, b in zip(alpha, alpha[1:])):
        raise AlphaOutOfRange(f"alpha must be a non-empty increasing sequence: {alpha}")
    if alpha[0] < 1 or alpha[0] > n or alpha[-1] > n + 1:
        raise AlphaOutOfRange(f"alpha {alpha} out of range for n = {n}")
    points = list(ladder.corner_data.upper_outside)
    border = ladder.border
    for a in alpha:
        row = [c for c in border if c[0] == a - 1]
        if len(row) == 1 and row[0] not in points:
            points.append(row[0])
    sizes = []
    for v, _ in points:
        bigger = [l for l, a in enumerate(alpha, start=1) if a > v]
        if not bigger:
            raise AlphaOutOfRange(f"no entry of alpha {alpha} exceeds row {v}")
        sizes.append(bigger[0])
    return normalize(mk_ideal(ladder, points, sizes))


def _parse_range(r):
    if isinstance(r, range):
        return (r.start, r.stop - 1) if len(r) else (1, 0)
    lo, hi = r
    return int(lo), int(hi)


def embed_block_matrix(m, n, sym_rows, sym_cols, t):
    """t-minors of an m x n matrix with a symmetric lower-left block, as a ladder ideal.

    ``sym_rows`` / ``sym_cols`` are inclusive 1-based ``(first, last)`` pairs
    (or ``range`` objects) locating the square symmetric block S in
    ``X = [[M, N], [S, P]]``.  X sits in rows ``1..m`` and columns
    ``m-s+1..m+n-s`` of a symmetric matrix of size ``m + n - s``.
    """
    if not (1 <= m <= n):
        raise MalformedBlocks(f"need 1 <= m <= n, got m={m}, n={n}")
    r1, r2 = _parse_range(sym_rows)
    c1, c2 = _parse_range(sym_cols)
    s = r2 - r1 + 1
    if s < 1 or c2 - c1 + 1 != s:
        raise MalformedBlocks("the symmetric block must be square and non-empty")
    if r2 != m or c1 != 1 or r1 < 1 or c2 > n:
        raise MalformedBlocks(
            f"the symmetric block must occupy the last rows and first columns, got "
            f"rows {r1}..{r2}, cols {c1}..{c2}")
    if t < 1:
        raise NonPositiveSize(f"t must be positive, got {t}")
    size = m + n - s
    shift = m - s
    cells = [(i, j) for i in range(1, m + 1) for j in range(max(i, shift + 1), size + 1)]
    ladder = validate_ladder(size, cells)
    outs = ladder.corner_data.upper_outside
    return normalize(mk_ideal(ladder, outs, [t] * len(outs)))
