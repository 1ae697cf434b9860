"""Vertex counts for the 3-row grid with two-by-two windows.

The two-window polytope on the 3x2 grid has 14 vertices; appending a column
pair of windows acts by a fixed 14x14 0/1 matrix on vertex classes, which a
symmetry reduction compresses to a 6x6 integer matrix whose powers give the
vertex counts V_n for every width n.  This module derives the 14x14 matrix
from the face criterion, carries both matrices, the generating function, the
2-row reduction, per-class vertex counts, and the growth rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import oracle, seq1d
from .errors import InvalidParamsError
from .faces import is_face, selection_from_word
from .model import windows_3xn
from .polyalg import (
    RationalGF,
    TransferMatrix,
    gf_equal,
    gf_from_matrix,
    mat_power_entry,
    rational_gf,
    series_coeffs,
    smallest_positive_root,
)

# the 14 vertices of the two-window (3x2) polytope, each as its chosen cell
# (row, col) in the upper and lower window; the fixed order below is the one
# the transfer matrices index by
Q2_VERTEX_PAIRS: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
    ((0, 0), (1, 0)),
    ((0, 0), (1, 1)),
    ((0, 0), (2, 0)),
    ((0, 0), (2, 1)),
    ((0, 1), (1, 0)),
    ((0, 1), (1, 1)),
    ((0, 1), (2, 0)),
    ((0, 1), (2, 1)),
    ((1, 0), (1, 0)),
    ((1, 0), (2, 0)),
    ((1, 0), (2, 1)),
    ((1, 1), (1, 1)),
    ((1, 1), (2, 0)),
    ((1, 1), (2, 1)),
)

# appending-a-column action on the 14 vertex classes: entry (i, j) = 1 when
# the j-th vertex of the left column pair plus the i-th vertex of the right
# column pair is a vertex of the width-3 polytope; derive_a14() recomputes
# this from the face criterion and must reproduce it exactly
A14_ENTRIES: tuple[tuple[int, ...], ...] = (
    (1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0),
    (1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0),
    (1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 1, 0),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 1),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0),
    (1, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1),
    (1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (1, 0, 1, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1, 1),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
)

# class-symmetry reduction of A14 to representatives (1, 2, 3, 4, 6, 9),
# 1-indexed; V_n is entry (5, 6) of the n-th power
B6_ENTRIES: tuple[tuple[int, ...], ...] = (
    (2, 2, 1, 1, 1, 1),
    (2, 3, 1, 1, 2, 1),
    (2, 2, 1, 2, 1, 1),
    (2, 3, 1, 2, 2, 1),
    (2, 4, 1, 2, 4, 1),
    (2, 2, 1, 0, 1, 1),
)

COUNT_METHODS = ("oracle", "a14", "b6", "gf")


def a14_matrix() -> TransferMatrix:
    return TransferMatrix(14, A14_ENTRIES)


def b6_matrix() -> TransferMatrix:
    return TransferMatrix(6, B6_ENTRIES)


def q2_vertices() -> tuple[tuple[int, ...], ...]:
    """The 14 vertices of the 3x2 polytope as words, in the fixed order."""
    fam = windows_3xn(2)
    words = tuple(
        (2 * up[0] + up[1], 2 * lo[0] + lo[1]) for up, lo in Q2_VERTEX_PAIRS
    )
    for w in words:
        if not is_face(selection_from_word(fam, w)):
            raise AssertionError(f"canonical q2 word {w} fails the face criterion")
    return words


def derive_a14() -> TransferMatrix:
    """Recompute the 14x14 appending matrix from the face criterion.

    Left vertices live in columns (0, 1) of the 3x3 grid, right vertices in
    columns (1, 2); the four singleton choices form a width-3 selection
    whose facehood decides the entry.
    """
    fam = windows_3xn(3)  # window order: (0,0), (0,1), (1,0), (1,1)

    def flat(cell, shift):
        i, j = cell
        return 3 * i + (j + shift)

    entries = []
    for right in Q2_VERTEX_PAIRS:
        row = []
        for left in Q2_VERTEX_PAIRS:
            word = (
                flat(left[0], 0),
                flat(right[0], 1),
                flat(left[1], 0),
                flat(right[1], 1),
            )
            row.append(1 if is_face(selection_from_word(fam, word)) else 0)
        entries.append(tuple(row))
    return TransferMatrix(14, tuple(entries))


def gf_2d() -> RationalGF:
    """Generating function x + sum_{n>=2} V_n x^n; recomputed from B6 as a check."""
    g = rational_gf((0, 1, 1, -1), (1, -13, 31, -20, 4))
    left = tuple(1 if i == 4 else 0 for i in range(6))
    right = tuple(1 if i == 5 else 0 for i in range(6))
    from_matrix = gf_from_matrix(b6_matrix(), left, right)
    if not gf_equal(g, from_matrix):
        raise AssertionError("closed generating function disagrees with the 6x6 matrix")
    return g


def count_2d(n: int, method: str = "b6", budget: int = oracle.DEFAULT_BUDGET) -> int:
    """Number of vertices V_n of the width-n polytope.

    Methods: `oracle` (full enumeration, n <= 4), `a14` (class-vector
    propagation; exact only for n <= 3, restricted accordingly), `b6`
    (entry (5, 6) of the n-th power), `gf` (series coefficient).
    """
    if n < 2:
        raise InvalidParamsError("need n >= 2")
    if method == "oracle":
        if n > 4:
            raise InvalidParamsError("oracle route is restricted to n <= 4")
        return len(oracle.enumerate_vertices(windows_3xn(n), budget))
    if method == "a14":
        # the plain matrix-vector propagation overcounts from n = 4 on
        # (appending can close cycles spanning more than one column pair)
        if n > 3:
            raise InvalidParamsError("a14 route is exact only for n <= 3")
        v = (1,) * 14
        a = a14_matrix()
        for _ in range(n - 2):
            v = tuple(sum(row[j] * v[j] for j in range(14)) for row in a.entries)
        return sum(v)
    if method == "b6":
        return mat_power_entry(b6_matrix(), n, 4, 5)
    if method == "gf":
        return series_coeffs(gf_2d(), n)[n]
    raise InvalidParamsError(f"unknown method {method!r}")


def count_2xn(n: int) -> int:
    """Vertices of the 2-row, n-column case, via the 1-D (k, s) = (4, 2) model."""
    if n < 2:
        raise InvalidParamsError("need n >= 2")
    value = seq1d.count_1d(n - 1, 4, 2, method="matrix")
    check = series_coeffs(rational_gf((0, 1), (1, -4, 2)), n)[n]
    if value != check:
        raise AssertionError("2-row reduction disagrees with its generating function")
    return value


@dataclass(frozen=True)
class ClassCounts:
    """Vertex counts of the width-n polytope keyed by rightmost column pair.

    counts[i] is the number of vertices whose last two windows choose the
    i-th canonical two-window vertex (0-indexed against Q2_VERTEX_PAIRS).
    """

    n: int
    counts: tuple[int, ...]

    def total(self) -> int:
        return sum(self.counts)


def class_counts(n: int, budget: int = oracle.DEFAULT_BUDGET) -> ClassCounts:
    """Classify every oracle vertex by its rightmost column-pair component."""
    if not 2 <= n <= 4:
        raise InvalidParamsError("oracle-backed class counts cover 2 <= n <= 4")
    fam = windows_3xn(n)
    pair_index = {pair: i for i, pair in enumerate(Q2_VERTEX_PAIRS)}
    counts = [0] * 14
    upper_ix, lower_ix = n - 2, 2 * n - 3  # windows (0, n-2) and (1, n-2)
    for word in oracle.enumerate_vertices(fam, budget):
        up = divmod(word[upper_ix], n)
        lo = divmod(word[lower_ix], n)
        shift = n - 2
        key = ((up[0], up[1] - shift), (lo[0], lo[1] - shift))
        counts[pair_index[key]] += 1
    return ClassCounts(n=n, counts=tuple(counts))


def growth_2d(tol: float = 1e-12) -> float:
    """Exponential growth rate lim (1/n) log V_n."""
    rho = smallest_positive_root(gf_2d().den, tol)
    return math.log(1 / rho)
