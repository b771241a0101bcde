"""Essential divisors and Nash-component counts per branch and per variety.

For one branch the relevant faces of the quadrant are assembled from the
singular-locus faces, any user-supplied extra faces, and the supports of the
contact monomials with the other branches.  The essential divisors are the
barycenters of the regular relevant faces together with the surviving minimal
lattice points of the singular faces; their number equals the number of Nash
components.  A reduced variety is the disjoint union of its branches'
relative problems, so counts simply add up.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import conegeom, qobranch
from .conegeom import Divisor, leq_sigma
from .errors import DomainError
from .intlat import Lattice, RatVec
from .qobranch import BranchLattices, BranchSpec


@dataclass(frozen=True)
class Contact:
    """Exponent of the monomial cutting out the meeting with another branch."""

    exponent: RatVec
    partner: str | None = None


@dataclass(frozen=True)
class RelevantFaces:
    """Inclusion-minimal faces whose orbit closures make up the target set B."""

    faces: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BranchInput:
    spec: BranchSpec
    sing_faces: tuple[tuple[int, ...], ...] = ()
    extra_faces: tuple[tuple[int, ...], ...] = ()
    contacts: tuple[Contact, ...] = ()


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str


@dataclass(frozen=True)
class BranchReport:
    label: str
    lattices: BranchLattices
    relevant: RelevantFaces
    singular_faces_of_sigma: tuple[tuple[int, ...], ...]
    E: tuple[Divisor, ...]
    V: tuple[Divisor, ...]
    nash_count: int
    diagnostics: tuple[Diagnostic, ...] = field(default=())


@dataclass(frozen=True)
class VarietyReport:
    branches: tuple[BranchReport, ...]
    total_nash: int
    total_essential: int


def contact_faces(m: RatVec) -> list[tuple[int]]:
    """Singleton faces cut out by a contact monomial: its support."""
    if not m.is_nonnegative():
        raise DomainError(
            "NEGATIVE_EXPONENT", f"contact exponent {m} has a negative coordinate"
        )
    if m.is_zero():
        raise DomainError(
            "ZERO_CONTACT",
            "zero contact exponent: a unit cuts out nothing, the branches do not meet",
        )
    return [(k,) for k in m.support()]


def componentize(raw) -> RelevantFaces:
    """Keep the inclusion-minimal faces; a face containing another lies in
    the other's orbit closure and is not a component."""
    faces = {tuple(sorted(set(i))) for i in raw}
    minimal = [
        i
        for i in faces
        if not any(j != i and set(j) <= set(i) for j in faces)
    ]
    minimal.sort(key=lambda i: (len(i), i))
    return RelevantFaces(faces=tuple(minimal))


def lemma_min_diagnostics(e_divisors, s_min) -> list[Diagnostic]:
    """Flag barycenters strictly dominated inside E union S_min.

    For consistent input (B contains the singular locus and the relevant
    faces are honest orbit-closure components) this can never fire; a hit
    means the supplied face data contradicts the lattice.
    """
    pool = [d.vector for d in e_divisors] + [d.vector for d in s_min]
    out = []
    for e in e_divisors:
        for x in pool:
            if x != e.vector and leq_sigma(x, e.vector):
                out.append(
                    Diagnostic(
                        "LEMMA_MIN_VIOLATION",
                        f"barycenter {e.vector} is dominated by {x}; "
                        f"the supplied faces are inconsistent with the lattice",
                    )
                )
                break
    return out


def essential_divisors(
    n: Lattice, relevant: RelevantFaces, *, max_points: int | None = None
) -> tuple[list[Divisor], list[Divisor], list[Diagnostic]]:
    """Split the essential divisors over the relevant faces into E and V.

    E holds the barycenters of the regular relevant faces; V holds the
    minimal singular-face lattice points not strictly dominated by a
    barycenter.  Their union is the full set of essential divisors relative
    to B, and equals the image of the Nash components.
    """
    s_min = conegeom.minimal_toric_divisors(n, max_points=max_points)
    e_divisors = []
    for idx in relevant.faces:
        if conegeom.face_data(n, idx).regular:
            e_divisors.append(conegeom.barycenter(n, idx))
    e_divisors.sort()
    v_divisors = [
        v
        for v in s_min
        if not any(
            e.vector != v.vector and leq_sigma(e.vector, v.vector) for e in e_divisors
        )
    ]
    diagnostics = lemma_min_diagnostics(e_divisors, s_min)
    if not diagnostics:
        combined = [d.vector for d in e_divisors] + [d.vector for d in v_divisors]
        assert not any(
            a != b and leq_sigma(a, b) for a in combined for b in combined
        ), "essential divisors must form an antichain"
    return e_divisors, v_divisors, diagnostics


def _check_face_list(dim: int, faces, *, kind: str, label: str) -> tuple[tuple[int, ...], ...]:
    out = []
    for raw in faces:
        idx = tuple(sorted(set(raw)))
        if not idx or any(not isinstance(i, int) or not 1 <= i <= dim for i in idx):
            raise DomainError(
                "BAD_FACE", f"{kind} face {tuple(raw)} not within 1..{dim}", branch=label or None
            )
        if kind == "singular-locus" and len(idx) > 2 and len(idx) != dim:
            raise DomainError(
                "BAD_FACE",
                f"singular-locus face {idx} must have one or two indices "
                f"(or all {dim} for a point singularity)",
                branch=label or None,
            )
        out.append(idx)
    return tuple(out)


def analyze_branch(
    branch: BranchInput, *, max_points: int | None = None
) -> BranchReport:
    """Relative Nash data of one branch.

    Raises B_MISSING_SING when the normalization is singular but no
    singular-locus faces were supplied, since B must contain the singular
    locus for the face picture to be meaningful.
    """
    label = branch.spec.label
    lattices = qobranch.build_tower(branch.spec)
    n = lattices.N
    d = branch.spec.dim

    sing_faces = _check_face_list(d, branch.sing_faces, kind="singular-locus", label=label)
    extra_faces = _check_face_list(d, branch.extra_faces, kind="extra", label=label)
    raw: list[tuple[int, ...]] = list(sing_faces) + list(extra_faces)
    for contact in branch.contacts:
        if contact.exponent.dim != d:
            raise DomainError(
                "DIMENSION_MISMATCH",
                f"contact exponent {contact.exponent} has dimension "
                f"{contact.exponent.dim}, expected {d}",
                branch=label or None,
            )
        try:
            raw.extend(contact_faces(contact.exponent))
        except DomainError as exc:
            raise DomainError(exc.code, exc.message, branch=label or None) from None
    relevant = componentize(raw)

    sigma_singular = tuple(conegeom.singular_faces(n))
    if sigma_singular and not sing_faces:
        raise DomainError(
            "B_MISSING_SING",
            "the normalization is singular but no singular-locus faces were "
            "supplied; B must contain the singular locus",
            branch=label or None,
        )

    e_divisors, v_divisors, diagnostics = essential_divisors(
        n, relevant, max_points=max_points
    )
    if not relevant.faces and not sigma_singular:
        diagnostics = diagnostics + [
            Diagnostic(
                "EMPTY_B",
                "smooth branch with empty B: no Nash components, no essential divisors",
            )
        ]
    return BranchReport(
        label=label,
        lattices=lattices,
        relevant=relevant,
        singular_faces_of_sigma=sigma_singular,
        E=tuple(e_divisors),
        V=tuple(v_divisors),
        nash_count=len(e_divisors) + len(v_divisors),
        diagnostics=tuple(diagnostics),
    )


def _check_contact_symmetry(branches) -> None:
    labels = [b.spec.label for b in branches]
    dupes = {l for l in labels if labels.count(l) > 1}
    if dupes:
        raise DomainError("DUPLICATE_LABEL", f"branch labels not unique: {sorted(dupes)}")
    by_label = {b.spec.label: b for b in branches}
    for b in branches:
        seen = set()
        for contact in b.contacts:
            partner = contact.partner
            if partner is None:
                raise DomainError(
                    "ASYMMETRIC_CONTACT",
                    "contact without a partner label cannot be matched",
                    branch=b.spec.label or None,
                )
            if partner == b.spec.label:
                raise DomainError(
                    "SELF_CONTACT", "a branch cannot meet itself", branch=b.spec.label
                )
            if partner not in by_label:
                raise DomainError(
                    "UNKNOWN_BRANCH",
                    f"contact names unknown branch {partner!r}",
                    branch=b.spec.label or None,
                )
            if partner in seen:
                raise DomainError(
                    "DUPLICATE_CONTACT",
                    f"more than one contact listed for branch {partner!r}",
                    branch=b.spec.label or None,
                )
            seen.add(partner)
            if not any(c.partner == b.spec.label for c in by_label[partner].contacts):
                raise DomainError(
                    "ASYMMETRIC_CONTACT",
                    f"branch {b.spec.label!r} lists a contact with {partner!r} "
                    f"but not conversely",
                )


def analyze_variety(
    branches, *, max_points: int | None = None
) -> VarietyReport:
    """Aggregate the per-branch relative problems of a reduced germ.

    The preimage of the singular locus splits as the disjoint union of the
    per-branch preimages of B_i, so Nash components and essential divisors
    are counted branch by branch and summed.
    """
    branches = list(branches)
    _check_contact_symmetry(branches)
    reports = tuple(analyze_branch(b, max_points=max_points) for b in branches)
    total = sum(r.nash_count for r in reports)
    return VarietyReport(branches=reports, total_nash=total, total_essential=total)
