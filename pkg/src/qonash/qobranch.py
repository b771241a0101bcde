"""Lattice tower of a quasi-ordinary branch.

A branch is described by its ordered characteristic exponents.  Each exponent
enlarges the previous lattice, M_j = M_{j-1} + Z*lambda_j starting from
M_0 = Z^d, and the dual N of the final lattice M drives all the cone
geometry downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import intlat
from .errors import DomainError
from .intlat import Lattice, RatVec


@dataclass(frozen=True)
class BranchSpec:
    """Input description of one branch: dimension and exponent chain."""

    dim: int
    char_exponents: tuple[RatVec, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "char_exponents", tuple(self.char_exponents))


@dataclass(frozen=True)
class BranchLattices:
    """The tower M_0 < M_1 < ... < M_g = M together with N = dual(M)."""

    tower: tuple[Lattice, ...]
    M: Lattice
    N: Lattice
    degree_n: int
    step_indices: tuple[int, ...] = field(default=())


def build_tower(spec: BranchSpec) -> BranchLattices:
    """Validate the exponents and build the lattice tower.

    Raises DomainError with code NEGATIVE_EXPONENT, CHAIN_ORDER (consecutive
    exponents not componentwise ordered), or NOT_CHARACTERISTIC (an exponent
    already lies in the lattice built so far).
    """
    d = spec.dim
    exps = spec.char_exponents
    for j, lam in enumerate(exps, start=1):
        if lam.dim != d:
            raise DomainError(
                "DIMENSION_MISMATCH",
                f"exponent {j} has dimension {lam.dim}, expected {d}",
                branch=spec.label or None,
            )
        if not lam.is_nonnegative():
            raise DomainError(
                "NEGATIVE_EXPONENT",
                f"exponent {j} = {lam} has a negative coordinate",
                branch=spec.label or None,
            )
    for j in range(len(exps) - 1):
        diff = exps[j + 1] - exps[j]
        if not diff.is_nonnegative():
            raise DomainError(
                "CHAIN_ORDER",
                f"exponents {j + 1} and {j + 2} are not componentwise ordered: "
                f"{exps[j]} vs {exps[j + 1]}",
                branch=spec.label or None,
            )

    tower = [intlat.standard_lattice(d)]
    step_indices = []
    for j, lam in enumerate(exps, start=1):
        prev = tower[-1]
        if intlat.contains(prev, lam):
            raise DomainError(
                "NOT_CHARACTERISTIC",
                f"exponent {j} = {lam} already lies in the lattice generated "
                f"by the earlier ones",
                branch=spec.label or None,
            )
        nxt = intlat.lattice_from_generators(list(prev.basis) + [lam])
        step_indices.append(intlat.index(prev, nxt))
        tower.append(nxt)

    M = tower[-1]
    N = intlat.dual_lattice(M)
    return BranchLattices(
        tower=tuple(tower),
        M=M,
        N=N,
        degree_n=intlat.index(tower[0], M),
        step_indices=tuple(step_indices),
    )
