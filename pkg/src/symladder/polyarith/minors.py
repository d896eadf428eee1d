"""Rings of matrix entries and exact expansion of symmetric minors."""

from ..errors import IndexOutOfRange
from .poly import MonomialOrder, Ring


def cell_name(i, j):
    return f"x[{i},{j}]"


def ladder_ring(cells, modulus=0, extra=(), order=None):
    """Ring with one variable per plus cell, row-major, then ``extra`` names."""
    names = [cell_name(i, j) for i, j in sorted(cells)] + list(extra)
    return Ring(names, order or MonomialOrder("degrevlex"), modulus)


def full_ring(n, modulus=0, extra=()):
    return ladder_ring([(i, j) for i in range(1, n + 1) for j in range(i, n + 1)],
                       modulus, extra)


def entry(ring, i, j):
    """Variable for matrix position (i, j); x_ij = x_ji."""
    if i > j:
        i, j = j, i
    return ring.var(cell_name(i, j))


def expand_minor(minor, n, ring=None):
    """Determinant of the symmetric submatrix on ``minor.rows`` x ``minor.cols``.

    Laplace expansion along the first row.  ``ring`` defaults to the ring of
    the full n x n symmetric matrix.
    """
    rows, cols = tuple(minor.rows), tuple(minor.cols)
    if len(rows) != len(cols) or not rows:
        raise IndexOutOfRange("rows and cols must have the same positive length")
    for x in rows + cols:
        if not 1 <= x <= n:
            raise IndexOutOfRange(f"index {x} outside 1..{n}")
    if ring is None:
        ring = full_ring(n)
    memo = {}

    def det(r, cs):
        if r == len(rows):
            return ring.one()
        key = (r, cs)
        if key in memo:
            return memo[key]
        total = ring.zero()
        for pos, c in enumerate(cs):
            sub = det(r + 1, cs[:pos] + cs[pos + 1:])
            if not sub:
                continue
            term = entry(ring, rows[r], c) * sub
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return det(0, cols)
