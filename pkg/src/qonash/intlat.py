"""Exact integer and rational lattice arithmetic.

Everything here is bit-exact: vectors are tuples of ``fractions.Fraction``,
matrices are Python integers, and no floating point is ever allowed in.
Lattices are stored in a canonical form (scaled lower-triangular row Hermite
normal form), so two equal lattices compare equal as objects.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import DomainError

# Face enumeration downstream is 2**d, so the ambient dimension stays small.
MAX_DIM = 16

RatLike = int | str | Fraction


def _as_fraction(value: RatLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point is not allowed in exact lattice data")
    return Fraction(value)


class RatVec:
    """Immutable vector of exact rationals in ambient d-space."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(_as_fraction(c) for c in coords)
        if not 1 <= len(self.coords) <= MAX_DIM:
            raise DomainError(
                "DIMENSION_MISMATCH",
                f"vector dimension {len(self.coords)} outside 1..{MAX_DIM}",
            )

    @classmethod
    def zero(cls, dim: int) -> "RatVec":
        return cls([0] * dim)

    @classmethod
    def unit(cls, dim: int, k: int) -> "RatVec":
        """Standard basis vector e_k, 1-based k."""
        if not 1 <= k <= dim:
            raise DomainError("DIMENSION_MISMATCH", f"axis {k} outside 1..{dim}")
        return cls([1 if i == k - 1 else 0 for i in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, RatVec) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __lt__(self, other: "RatVec") -> bool:
        return self.coords < other.coords

    def __add__(self, other: "RatVec") -> "RatVec":
        self._check_dim(other)
        return RatVec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "RatVec") -> "RatVec":
        self._check_dim(other)
        return RatVec(a - b for a, b in zip(self.coords, other.coords))

    def scale(self, q: RatLike) -> "RatVec":
        q = _as_fraction(q)
        return RatVec(q * a for a in self.coords)

    def dot(self, other: "RatVec") -> Fraction:
        self._check_dim(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def support(self) -> tuple[int, ...]:
        """1-based indices of the nonzero coordinates."""
        return tuple(i + 1 for i, c in enumerate(self.coords) if c != 0)

    def denominator(self) -> int:
        """Least positive D with D * self integral."""
        return lcm(*(c.denominator for c in self.coords))

    def _check_dim(self, other: "RatVec") -> None:
        if len(self.coords) != len(other.coords):
            raise DomainError(
                "DIMENSION_MISMATCH",
                f"vector dimensions differ: {len(self.coords)} vs {len(other.coords)}",
            )

    def __repr__(self) -> str:
        return f"RatVec({', '.join(str(c) for c in self.coords)})"

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _to_int(value) -> int:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"integer expected, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    raise TypeError(f"integer expected, got {value!r}")


def _int_rows(rows) -> list[list[int]]:
    out = [[_to_int(c) for c in row] for row in rows]
    if not out:
        raise DomainError("DIMENSION_MISMATCH", "empty row list")
    width = len(out[0])
    if width == 0 or any(len(r) != width for r in out):
        raise DomainError("DIMENSION_MISMATCH", "rows of unequal length")
    return out


def _hnf_core(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Lower-triangular row HNF with unimodular transform tracking.

    Returns (pivot_rows, kernel_u_rows, pivot_cols).  pivot_rows are sorted by
    ascending pivot column, pivots positive, and for every earlier pivot
    column c the entries of later rows at c lie in [0, pivot_c).  The u-rows
    returned form a basis of the integer left kernel of the input.
    """
    work = [row[:] for row in rows]
    n, width = len(work), len(work[0])
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    free = list(range(n))
    pivot_of_col: dict[int, int] = {}

    for col in range(width - 1, -1, -1):
        live = [i for i in free if work[i][col] != 0]
        while len(live) > 1:
            live.sort(key=lambda i: abs(work[i][col]))
            p = live[0]
            for i in live[1:]:
                q = work[i][col] // work[p][col]
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[p])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[p])]
            live = [i for i in live if work[i][col] != 0]
        if not live:
            continue
        p = live[0]
        if work[p][col] < 0:
            work[p] = [-a for a in work[p]]
            u[p] = [-a for a in u[p]]
        pivot_of_col[col] = p
        free.remove(p)

    pivot_cols = sorted(pivot_of_col)
    # Reduce entries at earlier pivot columns; descending order keeps the
    # already-reduced later columns untouched.
    for col in pivot_cols:
        r = pivot_of_col[col]
        for col2 in sorted((c for c in pivot_cols if c < col), reverse=True):
            r2 = pivot_of_col[col2]
            q = work[r][col2] // work[r2][col2]
            if q:
                work[r] = [a - q * b for a, b in zip(work[r], work[r2])]
                u[r] = [a - q * b for a, b in zip(u[r], u[r2])]

    basis = [work[pivot_of_col[c]] for c in pivot_cols]
    kernel = [u[i] for i in free]
    assert all(all(x == 0 for x in work[i]) for i in free)
    return basis, kernel, pivot_cols


def hnf(rows) -> list[tuple[int, ...]]:
    """Row Hermite normal form of the integer row span.

    Lower-triangular convention: each returned row has its (positive) pivot as
    its last nonzero entry, pivot columns ascend, and entries under earlier
    pivot columns are reduced modulo that pivot.  Rank-deficient input yields
    fewer rows than columns.
    """
    basis, _, _ = _hnf_core(_int_rows(rows))
    return [tuple(r) for r in basis]


def integer_kernel(rows) -> list[tuple[int, ...]]:
    """Basis of {y integer : y . rows = 0}, canonicalized by hnf."""
    _, kernel, _ = _hnf_core(_int_rows(rows))
    if not kernel:
        return []
    return hnf(kernel)


def snf(mat) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix."""
    a = _int_rows(mat)
    m, n = len(a), len(a[0])
    if all(x == 0 for row in a for x in row):
        raise DomainError("ZERO_MATRIX", "Smith form of the zero matrix is undefined")

    factors: list[int] = []
    t = 0
    while t < min(m, n):
        entries = [
            (abs(a[i][j]), i, j)
            for i in range(t, m)
            for j in range(t, n)
            if a[i][j] != 0
        ]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]

        # Clear row and column t; each pass shrinks the pivot or finishes.
        while True:
            for i in range(t + 1, m):
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            col_left = [i for i in range(t + 1, m) if a[i][t] != 0]
            if col_left:
                i = min(col_left, key=lambda i: abs(a[i][t]))
                a[t], a[i] = a[i], a[t]
                continue
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                if q:
                    for row in a:
                        row[j] -= q * row[t]
            row_left = [j for j in range(t + 1, n) if a[t][j] != 0]
            if row_left:
                j = min(row_left, key=lambda j: abs(a[t][j]))
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            break

        pivot = abs(a[t][t])
        bad = [
            (i, j)
            for i in range(t + 1, m)
            for j in range(t + 1, n)
            if a[i][j] % pivot != 0
        ]
        if bad:
            i, _ = bad[0]
            a[t] = [x + y for x, y in zip(a[t], a[i])]
            continue
        factors.append(pivot)
        t += 1
    return tuple(factors)


def _lower_triangular_inverse(s: list[list[int]]) -> list[list[Fraction]]:
    """Exact inverse of a lower-triangular integer matrix with nonzero diagonal."""
    d = len(s)
    inv = [[Fraction(0)] * d for _ in range(d)]
    for j in range(d):
        inv[j][j] = Fraction(1, s[j][j])
        for i in range(j + 1, d):
            acc = sum((Fraction(s[i][k]) * inv[k][j] for k in range(j, i)), Fraction(0))
            inv[i][j] = -acc / s[i][i]
    return inv


class Lattice:
    """Full-rank rational lattice in d-space, canonically represented.

    ``denom`` is the least positive D with D*L inside Z^d and ``scaled_basis``
    is the lower-triangular HNF basis of the integer lattice D*L, so equal
    lattices have identical fields.  Not constructed directly; use
    :func:`lattice_from_generators`, :func:`standard_lattice`, or the lattice
    operations below.
    """

    __slots__ = ("dim", "denom", "scaled_basis", "_scaled_det", "_inv_cache", "_adj_cache")

    def __init__(self, dim: int, denom: int, scaled_basis: tuple[tuple[int, ...], ...]):
        self.dim = dim
        self.denom = denom
        self.scaled_basis = scaled_basis
        det = 1
        for i in range(dim):
            det *= scaled_basis[i][i]
        self._scaled_det = det  # positive: HNF pivots are positive
        self._inv_cache: list[list[Fraction]] | None = None
        self._adj_cache: list[list[int]] | None = None

    @property
    def basis(self) -> tuple[RatVec, ...]:
        """Rows generating the lattice, as exact rational vectors."""
        return tuple(
            RatVec(Fraction(x, self.denom) for x in row) for row in self.scaled_basis
        )

    @property
    def det(self) -> Fraction:
        """Positive determinant of the basis (covolume)."""
        return Fraction(self._scaled_det, self.denom**self.dim)

    def _inverse_scaled(self) -> list[list[Fraction]]:
        if self._inv_cache is None:
            self._inv_cache = _lower_triangular_inverse(
                [list(r) for r in self.scaled_basis]
            )
        return self._inv_cache

    def scaled_coords(self, v: RatVec) -> tuple[int, ...] | None:
        """Numerator tuple of denom*v, or None if v falls off the 1/denom grid."""
        out = []
        for c in v.coords:
            w = c * self.denom
            if w.denominator != 1:
                return None
            out.append(w.numerator)
        return tuple(out)

    def _adjugate_scaled(self) -> list[list[int]]:
        """det * inverse of scaled_basis, an integer matrix (cached)."""
        if self._adj_cache is None:
            inv = self._inverse_scaled()
            det = self._scaled_det
            adj = []
            for row in inv:
                scaled = [c * det for c in row]
                assert all(c.denominator == 1 for c in scaled)
                adj.append([c.numerator for c in scaled])
            self._adj_cache = adj
        return self._adj_cache

    def _contains_scaled(self, m) -> bool:
        """Membership test for a point given as numerators of denom*x."""
        adj = self._adjugate_scaled()
        det = self._scaled_det
        d = self.dim
        for j in range(d):
            # y_j = (sum_i m_i adj[i][j]) / det; adj is lower triangular.
            acc = 0
            for i in range(j, d):
                if m[i]:
                    acc += m[i] * adj[i][j]
            if acc % det:
                return False
        return True

    def solve(self, v: RatVec) -> tuple[Fraction, ...]:
        """Rational coefficients y with y . basis = v."""
        if v.dim != self.dim:
            raise DomainError(
                "DIMENSION_MISMATCH",
                f"vector of dimension {v.dim} against lattice of dimension {self.dim}",
            )
        inv = self._inverse_scaled()
        d = self.dim
        w = [c * self.denom for c in v.coords]
        return tuple(
            sum((w[i] * inv[i][j] for i in range(j, d)), Fraction(0)) for j in range(d)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Lattice)
            and self.dim == other.dim
            and self.denom == other.denom
            and self.scaled_basis == other.scaled_basis
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.denom, self.scaled_basis))

    def __repr__(self) -> str:
        rows = ", ".join(str(v) for v in self.basis)
        return f"Lattice(dim={self.dim}, basis=[{rows}])"


def standard_lattice(dim: int) -> Lattice:
    """The integer lattice Z^d."""
    if not 1 <= dim <= MAX_DIM:
        raise DomainError("DIMENSION_MISMATCH", f"dimension {dim} outside 1..{MAX_DIM}")
    rows = tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))
    return Lattice(dim, 1, rows)


def lattice_from_generators(gens) -> Lattice:
    """Canonical lattice equal to the integer span of the generators.

    Denominators are cleared to the least common D, the integer rows are put
    in HNF, and the result is rescaled; raises NOT_FULL_RANK if the
    generators do not span d-space over the rationals.
    """
    gens = [g if isinstance(g, RatVec) else RatVec(g) for g in gens]
    if not gens:
        raise DomainError("NOT_FULL_RANK", "no generators given")
    dim = gens[0].dim
    if any(g.dim != dim for g in gens):
        raise DomainError("DIMENSION_MISMATCH", "generators of mixed dimension")
    denom = lcm(*(g.denominator() for g in gens))
    int_rows = [[(c * denom).numerator for c in g.coords] for g in gens]
    basis, _, _ = _hnf_core(int_rows)
    if len(basis) < dim:
        raise DomainError(
            "NOT_FULL_RANK",
            f"generators span rank {len(basis)} < {dim}",
        )
    # Fractions arrive reduced, so this D is the least with D*L inside Z^d;
    # equivalently the HNF entries share no factor with D.
    assert gcd(gcd(*(x for row in basis for x in row)), denom) == 1
    return Lattice(dim, denom, tuple(tuple(r) for r in basis))


def lattice_sum(a: Lattice, b: Lattice) -> Lattice:
    """Smallest lattice containing both summands."""
    if a.dim != b.dim:
        raise DomainError(
            "DIMENSION_MISMATCH", f"lattice dimensions differ: {a.dim} vs {b.dim}"
        )
    return lattice_from_generators(list(a.basis) + list(b.basis))


def dual_lattice(l: Lattice) -> Lattice:
    """{v : <v, u> integral for all u in l}."""
    inv = l._inverse_scaled()
    d = l.dim
    # Rows of the inverse transpose of the basis, i.e. columns of basis^-1;
    # basis^-1 = denom * scaled_basis^-1.
    cols = [RatVec(l.denom * inv[i][j] for i in range(d)) for j in range(d)]
    return lattice_from_generators(cols)


def contains(l: Lattice, v: RatVec) -> bool:
    """True iff v is an integer combination of the basis rows."""
    if v.dim != l.dim:
        raise DomainError(
            "DIMENSION_MISMATCH",
            f"vector of dimension {v.dim} against lattice of dimension {l.dim}",
        )
    m = l.scaled_coords(v)
    if m is None:
        return False
    return l._contains_scaled(m)


def index(sub: Lattice, sup: Lattice) -> int:
    """Index [sup : sub] of a finite-index sublattice."""
    if sub.dim != sup.dim:
        raise DomainError(
            "DIMENSION_MISMATCH", f"lattice dimensions differ: {sub.dim} vs {sup.dim}"
        )
    for row in sub.basis:
        if not contains(sup, row):
            raise DomainError(
                "NOT_SUBLATTICE", f"basis vector {row} lies outside the big lattice"
            )
    ratio = sub.det / sup.det
    assert ratio.denominator == 1 and ratio.numerator >= 1
    return ratio.numerator


def primitive_on_ray(l: Lattice, k: int) -> RatVec:
    """Smallest positive multiple of e_k lying in the lattice (1-based k)."""
    if not 1 <= k <= l.dim:
        raise DomainError("DIMENSION_MISMATCH", f"axis {k} outside 1..{l.dim}")
    y = [c for c in l.solve(RatVec.unit(l.dim, k)) if c != 0]
    # Least positive t with t*y integral: lcm of denominators / gcd of numerators.
    t = Fraction(lcm(*(c.denominator for c in y)), gcd(*(c.numerator for c in y)))
    return RatVec.unit(l.dim, k).scale(t)
