"""Closed-form cell counts for blocks, L-blocks and bounding relations.

All results are exact integers; the interior divisions of the block and
L-block formulas are checked to leave no remainder rather than assumed to.
Python integers do not overflow, so values are exact at any size.
"""

from __future__ import annotations

from math import comb
from typing import Callable, Iterable, Sequence, TypeVar

P = TypeVar("P")
B = TypeVar("B")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def c_bounding(i: int, j: int) -> int:
    """Number of i-cells bounding a j-cell: 2^(j-i) * C(j, i)."""
    _require(0 <= i < j, f"need 0 <= i < j, got i={i}, j={j}")
    return (1 << (j - i)) * comb(j, i)


def c_bounded(i: int, j: int, n: int) -> int:
    """Number of j-cells of the n-lattice bounded by an i-cell.

    Equals 2^(j-i) * C(n-i, j-i), which is c_bounding(n-j, n-i) read through
    duality.
    """
    _require(0 <= i < j <= n, f"need 0 <= i < j <= n, got i={i}, j={j}, n={n}")
    return (1 << (j - i)) * comb(n - i, j - i)


def b_in_voxel(i: int, j: int, n: int) -> int:
    """j-cells of one fixed voxel bounded by one of its i-cells: C(n-i, j-i)."""
    _require(0 <= i < j <= n, f"need 0 <= i < j <= n, got i={i}, j={j}, n={n}")
    return comb(n - i, j - i)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def _c_to_n(i: int, n: int) -> int:
    # extend c_bounding to i = n (a voxel "bounds" itself exactly once)
    return 1 if i == n else c_bounding(i, n)


def block_cell_count(i: int, n: int) -> int:
    """i-cells of a facet block (two voxels sharing an (n-1)-cell)."""
    _require(0 <= i <= n, f"need 0 <= i <= n, got i={i}, n={n}")
    return _exact_div((3 * n + i) * _c_to_n(i, n), 2 * n)


def lblock_cell_count(i: int, n: int) -> int:
    """i-cells of an L-block (three voxels of a 2x2 arrangement)."""
    _require(n >= 2, f"an L-block needs n >= 2, got n={n}")
    _require(0 <= i <= n, f"need 0 <= i <= n, got i={i}, n={n}")
    return _exact_div((2 * n + i) * _c_to_n(i, n), n)


def block_free_facets(n: int) -> int:
    """Free (n-1)-cells of a facet block: 2(2n - 1)."""
    _require(n >= 1, f"need n >= 1, got n={n}")
    return 2 * (2 * n - 1)


def lblock_free_facets(n: int) -> int:
    """Free (n-1)-cells of an L-block: 2(3n - 2)."""
    _require(n >= 2, f"an L-block needs n >= 2, got n={n}")
    return 2 * (3 * n - 2)


def incidence_sum_check(
    points_with_degrees: Iterable[tuple[P, int]],
    blocks_with_degrees: Iterable[tuple[B, int]],
) -> bool:
    """Fundamental identity of an incidence structure.

    The sum of point degrees must equal the sum of block degrees whenever
    both are computed from one shared relation.
    """
    return sum(d for _, d in points_with_degrees) == sum(
        d for _, d in blocks_with_degrees
    )


def degrees_from_relation(
    points: Sequence[P],
    blocks: Sequence[B],
    incident: Callable[[P, B], bool],
) -> tuple[list[tuple[P, int]], list[tuple[B, int]]]:
    """Degree lists of an explicit incidence relation, for the sum check."""
    point_degrees = [
        (p, sum(1 for b in blocks if incident(p, b))) for p in points
    ]
    block_degrees = [
        (b, sum(1 for p in points if incident(p, b))) for b in blocks
    ]
    return point_degrees, block_degrees
