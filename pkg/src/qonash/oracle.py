"""Brute-force reference implementations for cross-checking.

These deliberately share no algorithmic code with the main path: membership
in the box scans runs through an adjugate computed here by plain
Gauss-Jordan elimination, faces are classified by counting points, and
minimality is raw pairwise comparison (layered by coordinate sum when the
candidate set is large, which changes nothing about what is compared).
Slow is fine; independent is the point.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from . import intlat
from .errors import DomainError
from .intlat import Lattice, RatVec

# Hard ceiling on scanned grid points; the oracle is a checking tool, not a
# production path, and anything bigger than this is a mistake.
MAX_SCAN = 10**8
_CHUNK = 1 << 20


def _adjugate(mat: list[list[int]]) -> tuple[list[list[int]], int]:
    """(det * inverse, det) of an integer matrix, by Gauss-Jordan."""
    d = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    inv = [[Fraction(1 if i == j else 0) for j in range(d)] for i in range(d)]
    det = Fraction(1)
    for col in range(d):
        piv = next(r for r in range(col, d) if a[r][col] != 0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            det = -det
        det *= a[col][col]
        f = 1 / a[col][col]
        a[col] = [x * f for x in a[col]]
        inv[col] = [x * f for x in inv[col]]
        for r in range(d):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    det_int = int(det)
    adj = [[x * det_int for x in row] for row in inv]
    assert all(x.denominator == 1 for row in adj for x in row)
    return [[x.numerator for x in row] for row in adj], det_int


def _require_integral(n: Lattice) -> list[list[int]]:
    if n.denom != 1:
        raise DomainError("NOT_SUBLATTICE", "oracle expects a sublattice of Z^d")
    return [list(row) for row in n.scaled_basis]


class _BoxScanner:
    """Exhaustive membership filter over integer boxes for one lattice."""

    def __init__(self, n: Lattice):
        self.dim = n.dim
        self.adj, det = _adjugate(_require_integral(n))
        self.det = abs(det)

    def _mask(self, points: np.ndarray) -> np.ndarray:
        big = (
            int(np.abs(points).max(initial=0))
            * max(abs(x) for row in self.adj for x in row)
            * self.dim
        )
        dtype = object if big >= 2**62 else np.int64
        prods = points.astype(dtype) @ np.array(self.adj, dtype=dtype)
        return np.all(prods % self.det == 0, axis=1)

    def scan(self, lows, highs, columns=None):
        """Yield lattice points x with lows[i] <= x_i <= highs[i].

        ``columns`` maps box axes onto coordinate positions (0-based); the
        remaining coordinates stay zero.  Chunked so memory stays flat.
        """
        if columns is None:
            columns = list(range(self.dim))
        shape = tuple(h - l + 1 for l, h in zip(lows, highs))
        total = 1
        for s in shape:
            total *= s
        if total > MAX_SCAN:
            raise DomainError(
                "LIMIT_EXCEEDED", f"box of {total} points exceeds the oracle cap"
            )
        for start in range(0, total, _CHUNK):
            linear = np.arange(start, min(start + _CHUNK, total))
            coords = np.unravel_index(linear, shape)
            pts = np.zeros((linear.size, self.dim), dtype=np.int64)
            for axis, col in enumerate(columns):
                pts[:, col] = coords[axis] + lows[axis]
            yield from (tuple(int(v) for v in row) for row in pts[self._mask(pts)])


def _axis_reach(n: Lattice, bound: int) -> list[int]:
    """Coordinate of the primitive lattice point on each axis, by scanning."""
    reach = []
    for k in range(1, n.dim + 1):
        found = None
        for t in range(1, bound + 1):
            if intlat.contains(n, RatVec.unit(n.dim, k).scale(t)):
                found = t
                break
        if found is None:
            raise DomainError(
                "BOUND_TOO_SMALL",
                f"no lattice point on axis {k} within bound {bound}",
            )
        reach.append(found)
    return reach


def _face_count(scanner: _BoxScanner, reach: list[int], idx: tuple[int, ...]) -> int:
    lows = [1] * len(idx)
    highs = [reach[i - 1] for i in idx]
    cols = [i - 1 for i in idx]
    return sum(1 for _ in scanner.scan(lows, highs, cols))


def brute_face_index(n: Lattice, indices) -> int:
    """Count lattice points in the half-open edge box of a face.

    Equals the lattice index underlying the face's regularity flag: the face
    is regular exactly when the count is 1.
    """
    idx = tuple(sorted(set(indices)))
    if not idx or any(not 1 <= i <= n.dim for i in idx):
        raise DomainError("BAD_FACE", f"face indices {idx} not within 1..{n.dim}")
    scanner = _BoxScanner(n)
    # The whole quotient Z^d / N is killed by |det|, so the axis scan is safe.
    reach = _axis_reach(n, scanner.det)
    return _face_count(scanner, reach, idx)


def _minimal_points(hits: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Componentwise-minimal elements of a set of distinct integer points.

    Scan in order of ascending coordinate sum: a strict dominator always has
    a strictly smaller sum, so comparing against the points already kept is
    exhaustive, and points of equal sum can never dominate one another.
    """
    if len(hits) <= 512:
        minimal = [
            x
            for x in hits
            if not any(y != x and all(a <= b for a, b in zip(y, x)) for y in hits)
        ]
        minimal.sort()
        return minimal
    by_sum: dict[int, list[tuple[int, ...]]] = {}
    for x in hits:
        by_sum.setdefault(sum(x), []).append(x)
    kept: list[tuple[int, ...]] = []
    kept_arr = None
    for s in sorted(by_sum):
        layer = by_sum[s]
        if kept_arr is None:
            survivors = layer
        else:
            block = np.array(layer, dtype=np.int64)
            dominated = np.any(
                np.all(kept_arr[None, :, :] <= block[:, None, :], axis=2), axis=1
            )
            survivors = [x for x, dom in zip(layer, dominated) if not dom]
        if survivors:
            kept.extend(survivors)
            kept_arr = np.array(kept, dtype=np.int64)
    kept.sort()
    return kept


def brute_minimal_S(n: Lattice, bound: int) -> list[RatVec]:
    """Minimal points of the union of singular-face interiors, by box search.

    Scans every lattice point of the box [0, bound]^d, keeps those whose
    support is a singular face, and filters minimality pairwise.  The bound
    must reach the primitive point on every axis (the result is then
    independent of the bound); otherwise an error is raised.
    """
    if bound < 1:
        raise DomainError("BOUND_TOO_SMALL", "bound must be a positive integer")
    scanner = _BoxScanner(n)
    reach = _axis_reach(n, bound)

    singular_support = {}
    for size in range(1, n.dim + 1):
        for idx in itertools.combinations(range(1, n.dim + 1), size):
            singular_support[idx] = _face_count(scanner, reach, idx) > 1

    hits = []
    for x in scanner.scan([0] * n.dim, [bound] * n.dim):
        support = tuple(i + 1 for i, c in enumerate(x) if c > 0)
        if support and singular_support[support]:
            hits.append(x)
    return [RatVec(x) for x in _minimal_points(hits)]
