"""Reference friezes and frozen grid windows used across the test suite.

Three infinite friezes recur in the tests:

* LINEAR: the constant-2 quiddity, whose frieze is t(i, j) = j - i.
* BUMPED: same f-row as LINEAR (row -1 is 0, 1, 2, ...) but with the single
  quiddity value a_{-1} = 3; the smallest example showing that an f-row
  alone does not determine the frieze.
* ZIGZAG: the frieze of the zigzag triangulation of the integer line (the
  lower boundary alone, no upper marked points), quiddity
  ..., 5, 1, 5, 1, 2, 3, 1, 5, 1, 5, ... with the core (2, 3) at index 0.
  It has enough ones.

The 11x11 windows below are frozen ground truth.  They were checked by hand
against the defining data (antisymmetry, and the recurrence
t(i, j+1) = a_j t(i, j) - t(i, j-1) row by row), so a test failure against
them means the evaluator is wrong, not the table.

HEPTAGON_* pins the rank-7 frieze pattern of a triangulated 7-gon with
per-vertex triangle counts (1, 2, 3, 1, 3, 1, 4), including its printed band
window and the label-propagation rows from vertices 1 and 2.
"""

from __future__ import annotations

from friezes import QuiddityDescriptor

LINEAR = QuiddityDescriptor.constant(2)
BUMPED = QuiddityDescriptor((2,), (3,), (2,), core_start=-1)
ZIGZAG = QuiddityDescriptor((5, 1), (2, 3), (1, 5), core_start=0)
MIXED_TAILS = QuiddityDescriptor((3,), (4, 2, 1, 6), (2,), core_start=-3)

GRID_WINDOW = ((-5, 5), (-5, 5))  # (rows, cols), inclusive

LINEAR_GRID = [[j - i for j in range(-5, 6)] for i in range(-5, 6)]

BUMPED_GRID = [
    [0, 1, 2, 3, 4, 9, 14, 19, 24, 29, 34],
    [-1, 0, 1, 2, 3, 7, 11, 15, 19, 23, 27],
    [-2, -1, 0, 1, 2, 5, 8, 11, 14, 17, 20],
    [-3, -2, -1, 0, 1, 3, 5, 7, 9, 11, 13],
    [-4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6],
    [-9, -7, -5, -3, -1, 0, 1, 2, 3, 4, 5],
    [-14, -11, -8, -5, -2, -1, 0, 1, 2, 3, 4],
    [-19, -15, -11, -7, -3, -2, -1, 0, 1, 2, 3],
    [-24, -19, -14, -9, -4, -3, -2, -1, 0, 1, 2],
    [-29, -23, -17, -11, -5, -4, -3, -2, -1, 0, 1],
    [-34, -27, -20, -13, -6, -5, -4, -3, -2, -1, 0],
]

ZIGZAG_GRID = [
    [0, 1, 5, 4, 15, 11, 7, 10, 3, 5, 2],
    [-1, 0, 1, 1, 4, 3, 2, 3, 1, 2, 1],
    [-5, -1, 0, 1, 5, 4, 3, 5, 2, 5, 3],
    [-4, -1, -1, 0, 1, 1, 1, 2, 1, 3, 2],
    [-15, -4, -5, -1, 0, 1, 2, 5, 3, 10, 7],
    [-11, -3, -4, -1, -1, 0, 1, 3, 2, 7, 5],
    [-7, -2, -3, -1, -2, -1, 0, 1, 1, 4, 3],
    [-10, -3, -5, -2, -5, -3, -1, 0, 1, 5, 4],
    [-3, -1, -2, -1, -3, -2, -1, -1, 0, 1, 1],
    [-5, -2, -5, -3, -10, -7, -4, -5, -1, 0, 1],
    [-2, -1, -3, -2, -7, -5, -3, -4, -1, -1, 0],
]


def grid_entry(grid: list[list[int]], i: int, j: int) -> int:
    """Entry t(i, j) of an 11x11 window table over rows/cols -5..5."""
    return grid[i + 5][j + 5]


HEPTAGON_QUIDDITY = [1, 2, 3, 1, 3, 1, 4]

# rank-7 band window: {(i, j): value} for the rows -1..8 of the printed grid
HEPTAGON_BAND = {}
for _i, _row in [
    (-1, {0: 1, 1: 4, 2: 3, 3: 2, 4: 3, 5: 1}),
    (0, {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 1}),
    (1, {2: 1, 3: 2, 4: 5, 5: 3, 6: 4, 7: 1}),
    (2, {3: 1, 4: 3, 5: 2, 6: 3, 7: 1, 8: 1}),
    (3, {4: 1, 5: 1, 6: 2, 7: 1, 8: 2, 9: 1}),
    (4, {5: 1, 6: 3, 7: 2, 8: 5, 9: 3}),
    (5, {6: 1, 7: 1, 8: 3, 9: 2}),
    (6, {7: 1, 8: 4, 9: 3}),
    (7, {8: 1, 9: 1}),
    (8, {9: 1}),
]:
    for _j, _v in _row.items():
        HEPTAGON_BAND[(_i, _j)] = _v

HEPTAGON_CC_FROM_1 = {2: 1, 3: 2, 4: 5, 5: 3, 6: 4, 7: 1}
HEPTAGON_CC_FROM_2 = {3: 1, 4: 3, 5: 2, 6: 3, 7: 1}
