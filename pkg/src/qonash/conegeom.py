"""Geometry of the nonnegative quadrant relative to a lattice N.

Faces of the quadrant are coordinate subsets; a face is regular when its
primitive edge generators form a basis of the lattice points in its span.
The lattice points in the relative interiors of the singular faces, and the
barycenters of the regular ones, label the divisors everything downstream
cares about.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import intlat
from .errors import DomainError
from .intlat import Lattice, RatVec

ORIGIN_TORIC_MINIMAL = "toric-minimal"
ORIGIN_BARYCENTER = "barycenter"


@dataclass(frozen=True)
class Face:
    """A face of the quadrant: coordinate subset, edge generators, regularity."""

    indices: tuple[int, ...]
    primgens: tuple[RatVec, ...]
    regular: bool


@dataclass(frozen=True, order=True)
class Divisor:
    """A divisorial label: lattice vector, its primitive part, multiplicity."""

    vector: RatVec
    primitive: RatVec
    multiplicity: int
    origin: str


def leq_sigma(u: RatVec, v: RatVec) -> bool:
    """Quadrant order: u <= v iff v - u has no negative coordinate."""
    return (v - u).is_nonnegative()


def _check_indices(dim: int, indices) -> tuple[int, ...]:
    idx = tuple(sorted(set(indices)))
    if any(not isinstance(i, int) or not 1 <= i <= dim for i in idx):
        raise DomainError("BAD_FACE", f"face indices {idx} not within 1..{dim}")
    return idx


def _solve_square(rows: list[list[Fraction]], rhs: list[list[Fraction]]):
    """Solve x . rows = r for each r in rhs (rows square nonsingular)."""
    m = len(rows)
    # Work on the transpose so each solution is a standard linear solve.
    aug = [[rows[j][i] for j in range(m)] + [r[i] for r in rhs] for i in range(m)]
    for col in range(m):
        piv = next(r for r in range(col, m) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [[aug[i][m + k] for i in range(m)] for k in range(len(rhs))]


def _section_basis(n: Lattice, indices: tuple[int, ...]) -> list[RatVec]:
    """Basis of the lattice points supported on the given coordinates."""
    d = n.dim
    complement = [j for j in range(d) if (j + 1) not in indices]
    if not complement:
        return list(n.basis)
    constraint = [[n.scaled_basis[i][j] for j in complement] for i in range(d)]
    kernel = intlat.integer_kernel(constraint)
    basis = n.basis
    out = []
    for y in kernel:
        vec = RatVec.zero(d)
        for yi, row in zip(y, basis):
            if yi:
                vec = vec + row.scale(yi)
        out.append(vec)
    assert len(out) == len(indices)
    return out


def face_index(n: Lattice, indices) -> int:
    """Index of the sublattice spanned by the edge generators of a face
    inside the lattice points of the face's span (1 means regular)."""
    idx = _check_indices(n.dim, indices)
    if not idx:
        raise DomainError("BAD_FACE", "the zero face has no lattice index")
    if len(idx) == 1:
        return 1
    primgens = [intlat.primitive_on_ray(n, i) for i in idx]
    section = _section_basis(n, idx)
    # Coordinates restricted to the face's support; the rest are zero.
    cols = [i - 1 for i in idx]
    rows = [[v.coords[c] for c in cols] for v in section]
    rhs = [[p.coords[c] for c in cols] for p in primgens]
    sols = _solve_square(rows, rhs)
    mat = []
    for sol in sols:
        assert all(x.denominator == 1 for x in sol)
        mat.append([x.numerator for x in sol])
    factors = intlat.snf(mat)
    out = 1
    for f in factors:
        out *= f
    return out


def face_data(n: Lattice, indices) -> Face:
    """Primitive edge generators and regularity flag of a quadrant face."""
    idx = _check_indices(n.dim, indices)
    primgens = tuple(intlat.primitive_on_ray(n, i) for i in idx)
    regular = True if len(idx) <= 1 else face_index(n, idx) == 1
    return Face(indices=idx, primgens=primgens, regular=regular)


def parallelepiped_points(
    n: Lattice, indices, *, max_points: int | None = None
) -> list[RatVec]:
    """Lattice points in the half-open edge parallelepiped of a face.

    These are the x in N with x_i in (0, c_i] on the face coordinates (c_i
    the positive coordinate of the primitive edge generator) and x_j = 0 off
    them, enumerated on the 1/denom grid and filtered by exact membership.
    """
    idx = _check_indices(n.dim, indices)
    if not idx:
        raise DomainError("BAD_FACE", "the zero face has no parallelepiped")
    d, denom = n.dim, n.denom
    reach = {}
    for i in idx:
        c = intlat.primitive_on_ray(n, i).coords[i - 1] * denom
        assert c.denominator == 1
        reach[i] = c.numerator
    total = 1
    for i in idx:
        total *= reach[i]
    if max_points is not None and total > max_points:
        raise DomainError(
            "LIMIT_EXCEEDED",
            f"face {idx} needs {total} candidate points, above the cap {max_points}",
        )
    hits = []
    for combo in itertools.product(*(range(1, reach[i] + 1) for i in idx)):
        m = [0] * d
        for i, value in zip(idx, combo):
            m[i - 1] = value
        if n._contains_scaled(m):
            hits.append(RatVec(Fraction(x, denom) for x in m))
    hits.sort()
    return hits


def minimal_elements(pts) -> list[RatVec]:
    """Minimal elements of a finite set for the quadrant order, sorted."""
    ordered = sorted(set(pts), key=lambda v: (sum(v.coords), v.coords))
    kept: list[RatVec] = []
    for v in ordered:
        # Any strict dominator has strictly smaller coordinate sum, so it is
        # either already kept or dominated by something kept.
        if not any(leq_sigma(u, v) for u in kept):
            kept.append(v)
    kept.sort()
    return kept


def singular_faces(n: Lattice) -> list[tuple[int, ...]]:
    """All nonempty faces of the quadrant that are singular for N, ordered."""
    d = n.dim
    out = []
    for size in range(2, d + 1):  # edges and the zero face are always regular
        for idx in itertools.combinations(range(1, d + 1), size):
            if not face_data(n, idx).regular:
                out.append(idx)
    return out


def divisor_on_ray(n: Lattice, v: RatVec, origin: str) -> Divisor:
    """Split a nonzero lattice vector as multiplicity times a primitive one."""
    coeffs = n.solve(v)
    assert all(c.denominator == 1 for c in coeffs)
    q = gcd(*(c.numerator for c in coeffs))
    return Divisor(
        vector=v,
        primitive=v.scale(Fraction(1, q)),
        multiplicity=q,
        origin=origin,
    )


def minimal_toric_divisors(
    n: Lattice, *, max_points: int | None = None
) -> list[Divisor]:
    """Divisors labelled by the minimal lattice points of the singular faces.

    The minimal elements of the union of relative interiors of singular faces
    are found inside the edge parallelepipeds: subtracting an edge generator
    moves any farther point strictly down while staying in the same face.
    """
    if n.denom != 1:
        raise DomainError(
            "NOT_SUBLATTICE", "expected a sublattice of Z^d (dual of a superlattice)"
        )
    candidates: set[RatVec] = set()
    for idx in singular_faces(n):
        candidates.update(parallelepiped_points(n, idx, max_points=max_points))
    return [
        divisor_on_ray(n, v, ORIGIN_TORIC_MINIMAL) for v in minimal_elements(candidates)
    ]


def barycenter(n: Lattice, indices) -> Divisor:
    """Sum of the primitive edge generators of a regular face."""
    idx = _check_indices(n.dim, indices)
    if not idx:
        raise DomainError("BAD_FACE", "the zero face has no barycenter")
    face = face_data(n, idx)
    if not face.regular:
        raise DomainError(
            "SINGULAR_FACE", f"face {idx} is singular; barycenters live on regular faces"
        )
    total = face.primgens[0]
    for p in face.primgens[1:]:
        total = total + p
    return divisor_on_ray(n, total, ORIGIN_BARYCENTER)


def monomial_valuation(v: RatVec, support) -> Fraction:
    """min over the support of the pairing <v, u>."""
    values = [v.dot(u) for u in support]
    if not values:
        raise DomainError("EMPTY_SUPPORT", "valuation of the zero series is undefined")
    return min(values)
