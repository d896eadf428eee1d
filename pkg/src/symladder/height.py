"""Combinatorial height of a mixed ladder ideal.

The height equals the number of cells of the subladder ``H+`` obtained by
pulling every distinguished point ``(v_k, w_k)`` back to
``(v_k - t_k + 1, w_k - t_k + 1)``.
"""

from dataclasses import dataclass

from .ideal import check_pivot, require_normalized


@dataclass(frozen=True)
class HeightProfile:
    h_plus: frozenset
    height: int

    @property
    def cells(self):
        return sorted(self.h_plus)


def _in_h_plus(cell, pts, ts):
    i, j = cell
    s = len(pts)
    if j > pts[0][1] - ts[0] + 1 or i > pts[-1][0] - ts[-1] + 1:
        return False
    for k in range(1, s):
        if not (i <= pts[k - 1][0] - ts[k - 1] + 1 or j <= pts[k][1] - ts[k] + 1):
            return False
    return True


def h_plus(ideal):
    """Height profile of a normalized ideal; unnormalized input is rejected."""
    require_normalized(ideal)
    if ideal.is_zero:
        return HeightProfile(frozenset(), 0)
    cells = frozenset(c for c in ideal.ladder.plus_cells
                      if _in_h_plus(c, ideal.points, ideal.sizes))
    return HeightProfile(cells, len(cells))


def i_plus(ideal, k):
    """``H+`` without the pulled-back pivot corner; k is 1-based."""
    check_pivot(ideal, k)
    hp = h_plus(ideal)
    v, w = ideal.points[k - 1]
    t = ideal.sizes[k - 1]
    cells = hp.h_plus - {(v - t + 1, w - t + 1)}
    return HeightProfile(cells, len(cells))


def height(ideal):
    return h_plus(ideal).height
