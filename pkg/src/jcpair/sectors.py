"""Fixed-excitation bases and Hamiltonian assembly for the coupled pair.

The full Hamiltonian conserves the total number of quanta
``nu = n1 + n2 + [atom 1 excited] + [atom 2 excited]`` and is therefore
block diagonal over sectors of fixed ``nu``.  This module enumerates the
sector bases and assembles the dense symmetric matrix of each block.

Basis ordering is part of the public contract so emitted matrices are
reproducible byte for byte: states are ordered lexicographically in
``(n1, c1, n2, c2)`` with ``g < e``, except the one-excitation sector,
which keeps the conventional order ``|0e0g>, |1g0g>, |0g1g>, |0g0e>``.

Energy offset convention: diagonal entries are the sum of the two
single-cell energies including zero-point terms,
``omega_c*(n1+n2+1) + omega_a*(excited_count - 1)``, which puts the empty
sector at ``-delta`` and the one-excitation block at the matrix
``[[0, g, 0, 0], [g, -d, -k, 0], [0, -k, -d, g], [0, 0, g, 0]] + omega_c*I``
(``d = delta``, ``k = kappa``).  Absolute offsets cancel in all transition
frequencies.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .linalg import SymMatrix
from .model import SystemParams

__all__ = [
    "NU_CAP",
    "BasisState",
    "SectorBasis",
    "SectorMatrix",
    "enumerate_sector",
    "diagonal_energy",
    "coupling_element",
    "build_hamiltonian",
    "build_collective_hamiltonian",
]

# Keeps dense sector matrices at most 48 x 48, comfortable for the Jacobi solver.
NU_CAP = 12

_LEVELS = ("g", "e")


@dataclass(frozen=True, order=True)
class BasisState:
    """Product state ``|n1 c1 n2 c2>``: photon numbers and atomic levels."""

    n1: int
    c1: str
    n2: int
    c2: str

    def __post_init__(self) -> None:
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError(f"photon numbers must be >= 0, got {self.n1}, {self.n2}")
        if self.c1 not in _LEVELS or self.c2 not in _LEVELS:
            raise ValueError(f"atomic levels must be 'g' or 'e', got {self.c1!r}, {self.c2!r}")

    def excitation_number(self) -> int:
        return self.n1 + self.n2 + (self.c1 == "e") + (self.c2 == "e")

    @property
    def label(self) -> str:
        return f"{self.n1}{self.c1}{self.n2}{self.c2}"

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.n1, _LEVELS.index(self.c1), self.n2, _LEVELS.index(self.c2))


@dataclass(frozen=True)
class SectorBasis:
    """Ordered basis of the fixed-excitation sector ``nu``."""

    nu: int
    states: tuple[BasisState, ...]

    def __len__(self) -> int:
        return len(self.states)

    def index(self, state: BasisState) -> int:
        return self.states.index(state)


@dataclass(frozen=True, eq=False)
class SectorMatrix:
    """A sector basis together with the Hamiltonian block expressed in it."""

    basis: SectorBasis
    matrix: SymMatrix


def enumerate_sector(nu: int) -> SectorBasis:
    """All basis states with ``nu`` total quanta, canonically ordered.

    The sector has one state for nu = 0 and ``4*nu`` states for nu >= 1.
    ``nu`` above :data:`NU_CAP` is rejected.
    """
    if nu < 0:
        raise ValueError(f"excitation number must be >= 0, got {nu}")
    if nu > NU_CAP:
        raise ValueError(f"excitation number {nu} exceeds the cap of {NU_CAP}")
    if nu == 1:
        states = (
            BasisState(0, "e", 0, "g"),
            BasisState(1, "g", 0, "g"),
            BasisState(0, "g", 1, "g"),
            BasisState(0, "g", 0, "e"),
        )
        return SectorBasis(nu=1, states=states)

    found = []
    for e1 in (0, 1):
        for e2 in (0, 1):
            rest = nu - e1 - e2
            if rest < 0:
                continue
            for n1 in range(rest + 1):
                found.append(BasisState(n1, _LEVELS[e1], rest - n1, _LEVELS[e2]))
    found.sort(key=BasisState.sort_key)
    return SectorBasis(nu=nu, states=tuple(found))


def diagonal_energy(p: SystemParams, s: BasisState) -> float:
    """Diagonal matrix element of ``|s>`` (sum of the two cell energies)."""
    excited = (s.c1 == "e") + (s.c2 == "e")
    return p.omega_c * (s.n1 + s.n2 + 1) + p.omega_a * (excited - 1)


def coupling_element(p: SystemParams, a: BasisState, b: BasisState) -> float:
    """Off-diagonal matrix element ``<a|H|b>`` between distinct product states.

    Three processes contribute: the atom-photon exchange inside each cell
    (``g*sqrt(n+1)`` between ``|n,e>`` and ``|n+1,g>``) and photon hopping
    between the cavities (``-kappa*sqrt((n1+1)*n2)`` between
    ``|n1,n2>`` and ``|n1+1,n2-1>``).  Everything else vanishes, which is
    what makes the excitation number a conserved quantity.
    """
    if (a.n2, a.c2) == (b.n2, b.c2):
        lo, hi = (a, b) if a.n1 < b.n1 else (b, a)
        if hi.n1 == lo.n1 + 1 and lo.c1 == "e" and hi.c1 == "g":
            return p.g * sqrt(hi.n1)
    if (a.n1, a.c1) == (b.n1, b.c1):
        lo, hi = (a, b) if a.n2 < b.n2 else (b, a)
        if hi.n2 == lo.n2 + 1 and lo.c2 == "e" and hi.c2 == "g":
            return p.g * sqrt(hi.n2)
    if a.c1 == b.c1 and a.c2 == b.c2:
        lo, hi = (a, b) if a.n1 < b.n1 else (b, a)
        if hi.n1 == lo.n1 + 1 and hi.n2 == lo.n2 - 1:
            return -p.kappa * sqrt(hi.n1 * lo.n2)
    return 0.0


def build_hamiltonian(p: SystemParams, basis: SectorBasis) -> SectorMatrix:
    """Assemble the Hamiltonian block of ``basis`` as a dense symmetric matrix."""
    states = basis.states
    n = len(states)
    m = np.zeros((n, n))
    for i, si in enumerate(states):
        m[i, i] = diagonal_energy(p, si)
        for j in range(i + 1, n):
            element = coupling_element(p, si, states[j])
            if element != 0.0:
                m[i, j] = element
                m[j, i] = element
    return SectorMatrix(basis=basis, matrix=SymMatrix(m))


def build_collective_hamiltonian(p: SystemParams, nu: int) -> SectorMatrix:
    """One-excitation Hamiltonian in the collective (normal-mode) basis.

    The symmetric/antisymmetric combinations of the two cavity modes and of
    the two atomic operators decouple the pair into two independent
    atom-mode blocks with the same coupling ``g`` and mode energies shifted
    by ``+kappa`` and ``-kappa``.  For nu = 1 the returned matrix is block
    diagonal in the order

        (mode 1, symmetric atomic, mode 2, antisymmetric atomic)

    i.e. the collective combinations ``(e2 +/- e3)/sqrt(2)`` and
    ``(e1 +/- e4)/sqrt(2)`` of the product basis states attached to the
    result.  Note the sign pairing of the mode shifts versus the direct
    ``-kappa`` hopping convention of :func:`build_hamiltonian` is a pure
    relabelling of the two blocks: only the eigenvalue multiset is
    contractual, and it always matches the direct construction.

    Only nu in {0, 1} is supported; higher sectors are validated through
    the direct construction instead.
    """
    if nu not in (0, 1):
        raise ValueError(f"collective construction supports nu in {{0, 1}}, got {nu}")
    basis = enumerate_sector(nu)
    if nu == 0:
        m = np.array([[diagonal_energy(p, basis.states[0])]])
        return SectorMatrix(basis=basis, matrix=SymMatrix(m))

    atom = diagonal_energy(p, BasisState(0, "e", 0, "g"))
    photon = diagonal_energy(p, BasisState(1, "g", 0, "g"))
    g = p.g
    m = np.array(
        [
            [photon + p.kappa, g, 0.0, 0.0],
            [g, atom, 0.0, 0.0],
            [0.0, 0.0, photon - p.kappa, g],
            [0.0, 0.0, g, atom],
        ]
    )
    return SectorMatrix(basis=basis, matrix=SymMatrix(m))
