"""Max-pooling layer configurations and their window families.

A pooling layer of any dimension is materialized as a family of "windows":
subsets of a flattened coordinate set {0, ..., d-1}, one per output cell.
All downstream counting (vertices, faces, facets of the associated Minkowski
sum of simplices) works purely on these index subsets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidParamsError


@dataclass(frozen=True)
class PoolingLayer:
    """A max-pooling layer: input extents, window extents, shared stride.

    `input_dims` and `window_dims` list one extent per array axis
    (K_1..K_nu and k_1..k_nu); `stride` is a single scalar shared by all
    axes.
    """

    nu: int
    input_dims: tuple[int, ...]
    window_dims: tuple[int, ...]
    stride: int

    def __post_init__(self):
        object.__setattr__(self, "input_dims", tuple(self.input_dims))
        object.__setattr__(self, "window_dims", tuple(self.window_dims))
        if self.nu < 1:
            raise InvalidParamsError("nu must be a positive integer")
        if len(self.input_dims) != self.nu or len(self.window_dims) != self.nu:
            raise InvalidParamsError("need exactly nu input and window extents")
        if self.stride < 1:
            raise InvalidParamsError("stride must be >= 1")
        for K, k in zip(self.input_dims, self.window_dims):
            if k < 1 or K < 1:
                raise InvalidParamsError("all extents must be >= 1")
            if k > K:
                raise InvalidParamsError("window extent exceeds input extent")


@dataclass(frozen=True)
class WindowFamily:
    """An ordered family of nonempty windows over coordinates {0,...,d-1}.

    `ambient_size` is d.  Families produced from a PoolingLayer are trimmed:
    coordinates used by no window are dropped and the rest relabeled, so the
    windows cover {0,...,d-1} exactly.  Families built directly (spec_1d with
    k < s) may leave gaps; `covers_ambient` tells the two apart.
    """

    ambient_size: int
    windows: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "windows", tuple(frozenset(w) for w in self.windows))
        if self.ambient_size < 1:
            raise InvalidParamsError("ambient size must be >= 1")
        if not self.windows:
            raise InvalidParamsError("need at least one window")
        for w in self.windows:
            if not w:
                raise InvalidParamsError("windows must be nonempty")
            if min(w) < 0 or max(w) >= self.ambient_size:
                raise InvalidParamsError("window coordinate out of range")

    @property
    def covers_ambient(self) -> bool:
        return len(frozenset().union(*self.windows)) == self.ambient_size


def windows_from_layer(layer: PoolingLayer) -> WindowFamily:
    """Materialize a layer's windows as flattened, trimmed index sets.

    One window per valid placement r (lexicographic order over r); each is
    the row-major flattening of the base window shifted by stride*r.  Unused
    input coordinates are dropped and the remaining ones relabeled so the
    union of all windows is {0,...,d-1}.
    """
    K = layer.input_dims
    k = layer.window_dims
    s = layer.stride
    # row-major flat index: last axis varies fastest
    mult = [1] * layer.nu
    for ax in range(layer.nu - 2, -1, -1):
        mult[ax] = mult[ax + 1] * K[ax + 1]

    placements = itertools.product(*[range((K[ax] - k[ax]) // s + 1) for ax in range(layer.nu)])
    raw = []
    for r in placements:
        cells = itertools.product(*[range(s * r[ax], s * r[ax] + k[ax]) for ax in range(layer.nu)])
        raw.append(frozenset(sum(c * m for c, m in zip(cell, mult)) for cell in cells))

    used = sorted(frozenset().union(*raw))
    relabel = {old: new for new, old in enumerate(used)}
    windows = tuple(frozenset(relabel[a] for a in w) for w in raw)
    return WindowFamily(ambient_size=len(used), windows=windows)


def windows_1d(n: int, k: int, s: int) -> WindowFamily:
    """The n windows {s*i, ..., s*i+k-1} on {0, ..., s(n-1)+k-1}.

    Consecutive windows overlap in max(0, k-s) coordinates; for k < s the
    family leaves gap coordinates (kept, not trimmed).
    """
    if n < 1 or k < 1 or s < 1:
        raise InvalidParamsError("n, k, s must be positive")
    d = s * (n - 1) + k
    return WindowFamily(d, tuple(frozenset(range(s * i, s * i + k)) for i in range(n)))


def windows_3xn(n: int) -> WindowFamily:
    """The 2(n-1) two-by-two windows on the 3-row, n-column grid.

    Cell (i, j) flattens row-major to i*n + j.  Windows are ordered with the
    top row of placements first: (i=0, j=0..n-2) then (i=1, j=0..n-2).
    """
    if n < 2:
        raise InvalidParamsError("need n >= 2 columns")
    windows = []
    for i in (0, 1):
        for j in range(n - 1):
            windows.append(frozenset((i + di) * n + (j + dj) for di in (0, 1) for dj in (0, 1)))
    return WindowFamily(3 * n, tuple(windows))
