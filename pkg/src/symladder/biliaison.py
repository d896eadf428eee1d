"""The G-biliaison descent: one step lowers the largest size by one.

A step at pivot k (point ``(v, w)``, size ``t``) produces

* the target I': ladder L' without column w (rows v_{k-1}+1..v) and row v
  (columns w_{k+1}+1..w), point ``(v-1, w-1)`` with size ``t-1``;
* the link J: ladder L without ``(v, w)``, points ``(v-1, w)`` and
  ``(v, w-1)`` with size ``t``;
* f = [v-t+1..v-1; w-t+1..w-1] / [v-t+1..v; w-t+1..w].

Iterating until every size is 1 reaches an ideal of indeterminates.
"""

from dataclasses import dataclass

from .errors import IdealError, NoPivot
from .height import h_plus
from .ideal import Minor, check_pivot, mk_ideal, normalize, pivot
from .ladder import canonical, validate_ladder


@dataclass(frozen=True)
class BiliaisonStep:
    source: object
    target: object
    link: object
    pivot_k: int
    f_numerator: Minor | None
    f_denominator: Minor
    height_shift: int = 1

    @property
    def heights(self):
        return (h_plus(self.source).height, h_plus(self.target).height,
                h_plus(self.link).height)


@dataclass(frozen=True)
class BiliaisonCertificate:
    """Descent steps in the order they were computed, from the input downwards."""

    initial: object
    steps: tuple
    terminal: object
    biliaison_count: int
    g_link_count: int

    def ascending(self):
        """Steps from the ideal of indeterminates up to the input."""
        return tuple(reversed(self.steps))


@dataclass(frozen=True)
class LocalizationMap:
    inverted_cell: tuple
    forward_rules: dict   # cell -> (cell_iw, cell_vj), meaning x + x_iw * x_vj / x_vw
    backward_rules: dict  # same shape, with a minus sign
    transported_cells: tuple


def _span(lo, hi):
    return tuple(range(lo, hi + 1))


def _deleted_cells(ideal, idx):
    """Plus cells removed from the ladder when descending at point ``idx``.

    Only cells of the plus part are listed; positions ``(v, j)`` with
    ``j < v`` are mirror images of column-v cells, which stay.
    """
    v, w = ideal.points[idx]
    v_prev = ideal.points[idx - 1][0] if idx > 0 else 0
    w_next = ideal.points[idx + 1][1] if idx + 1 < ideal.s else 0
    plus = ideal.ladder.plus_cells
    col = {(i, w) for i in range(v_prev + 1, v + 1)}
    row = {(v, j) for j in range(w_next + 1, w)}
    return sorted((col | row) & plus)


def _settle_points(plus, pts, sizes):
    """Make points land on cells of ``plus``; merge repeats keeping the smaller size.

    A point outside the ladder is replaced by the maximal cells of the
    region above-left of it (same generated ideal).  A point below the
    diagonal covers a region already covered by its mirror's column
    neighbour, so it is dropped by the same rule.
    """
    out = {}
    for (p, q), t in zip(pts, sizes):
        if (p, q) in plus:
            cands = [(p, q)]
        else:
            region = [(i, j) for i, j in plus if i <= p and j <= q]
            cands = [c for c in region
                     if not any(d != c and d[0] >= c[0] and d[1] >= c[1] for d in region)]
        for c in cands:
            out[c] = min(t, out.get(c, t))
    keys = sorted(out, key=lambda c: (c[0], -c[1]))
    # a point weakly above-left of another with no smaller size adds nothing
    keep = [c for c in keys
            if not any(d != c and d[0] >= c[0] and d[1] >= c[1] and out[d] <= out[c]
                       for d in keys)]
    return keep, [out[c] for c in keep]


def _build(n, plus, pts, sizes):
    ladder = validate_ladder(n, plus)
    pts, sizes = _settle_points(ladder.plus_cells, pts, sizes)
    return normalize(mk_ideal(ladder, pts, sizes))


def descend_step(ideal, k=None):
    """One descent step at pivot ``k`` (1-based; defaults to :func:`pivot`)."""
    if k is None:
        k = pivot(ideal)
        if k is None:
            raise NoPivot("all sizes are 1; the ideal is generated by indeterminates")
    else:
        check_pivot(ideal, k)
    idx = k - 1
    v, w = ideal.points[idx]
    t = ideal.sizes[idx]
    plus = ideal.ladder.plus_cells
    n = ideal.n

    gone = set(_deleted_cells(ideal, idx))
    pts = list(ideal.points)
    sizes = list(ideal.sizes)
    pts[idx] = (v - 1, w - 1)
    sizes[idx] = t - 1
    target = _build(n, plus - gone, pts, sizes)

    pts = list(ideal.points[:idx]) + [(v - 1, w), (v, w - 1)] + list(ideal.points[idx + 1:])
    sizes = list(ideal.sizes[:idx]) + [t, t] + list(ideal.sizes[idx + 1:])
    link = _build(n, plus - {(v, w)}, pts, sizes)

    num = Minor.of(_span(v - t + 1, v - 1), _span(w - t + 1, w - 1)) if t >= 2 else None
    den = Minor.of(_span(v - t + 1, v), _span(w - t + 1, w))
    return BiliaisonStep(ideal, target, link, k, num, den)


def descend_chain(ideal):
    """Descend until all sizes are 1 and wrap the steps in a certificate."""
    start = normalize(ideal)
    steps = []
    current = start
    while True:
        try:
            step = descend_step(current)
        except NoPivot:
            break
        steps.append(step)
        current = step.target
    count = len(steps)
    return BiliaisonCertificate(start, tuple(steps), current, count, 2 * count)


def lemma_local_data(ideal, k):
    """Substitution data for the localization isomorphism at pivot ``k``.

    Cells of the subladder at ``(v, w)`` off row v and column w are rewritten
    as ``x_ij - x_iw * x_vj / x_vw`` by the backward map and with a plus sign
    by the forward map.  Cells are canonical, so ``x_vj`` is ``x_jv`` when
    ``j < v``; for an off-diagonal pivot that cell is itself rewritten, and
    the forward map uses its image there (see :func:`forward_image`), which
    makes it the inverse of the backward map.
    """
    check_pivot(ideal, k)
    idx = k - 1
    v, w = ideal.points[idx]
    gone = set(_deleted_cells(ideal, idx))
    sub = ideal.subladder_cells(idx)
    forward = {}
    backward = {}
    for i, j in sorted(sub):
        if i == v or j == w:
            continue
        rule = (canonical((i, w)), canonical((v, j)))
        forward[(i, j)] = rule
        if (i, j) not in gone:
            backward[(i, j)] = rule
    return LocalizationMap((v, w), forward, backward, tuple(sorted(gone)))


def forward_image(data, cell, var, y):
    """Forward image of the variable at ``cell``; ``var(cell)`` builds variables.

    ``y`` stands for ``1 / x_vw``.
    """
    memo = {}

    def img(c):
        if c not in data.forward_rules:
            return var(c)
        if c not in memo:
            c_iw, c_vj = data.forward_rules[c]
            memo[c] = var(c) + var(c_iw) * img(c_vj) * y
        return memo[c]

    return img(cell)


def backward_image(data, cell, var, y):
    if cell not in data.backward_rules:
        return var(cell)
    c_iw, c_vj = data.backward_rules[cell]
    return var(cell) - var(c_iw) * var(c_vj) * y


def terminal_cells(cert):
    """Cells of the indeterminates generating the terminal ideal."""
    term = cert.terminal
    if any(t != 1 for t in term.sizes):
        raise IdealError("terminal ideal still has a size above 1")
    return sorted({m.rows + m.cols for m in term.generators})
