"""Full diagonalization of the sector blocks and degeneracy-grouped levels."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hamiltonian import BlockOperator
from .hilbert import ChainSpec
from .observables import QuantumState

DEGENERACY_TOL = 1e-9
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """Per-sector eigendecompositions plus the merged global energy list."""

    spec: ChainSpec
    sectors: list
    sector_eigenvalues: list  # real arrays, ascending within each sector
    sector_eigenvectors: list  # orthonormal columns, dense
    order: list  # (energy, sector index, sector-local index), globally sorted

    @property
    def energies(self) -> np.ndarray:
        return np.array([e for e, _, _ in self.order])

    @property
    def size(self) -> int:
        return len(self.order)

    def full_vector(self, sector_idx: int, local_idx: int) -> np.ndarray:
        """Embed a sector eigenvector into the d^L configuration basis."""
        out = np.zeros(self.spec.dim)
        out[self.sectors[sector_idx].configs] = self.sector_eigenvectors[sector_idx][:, local_idx]
        return out


@dataclass(frozen=True)
class EnergyLevel:
    """One degenerate level: energy, degeneracy, and a full-space eigenbasis."""

    index: int
    energy: float
    degeneracy: int
    vectors: np.ndarray  # (dim, degeneracy), orthonormal columns


def diagonalize(H: BlockOperator) -> Spectrum:
    """Dense symmetric diagonalization of every sector block."""
    eigenvalues, eigenvectors = [], []
    for basis, block in zip(H.sectors, H.blocks):
        try:
            evals, evecs = np.linalg.eigh(block.toarray())
        except np.linalg.LinAlgError as err:
            raise RuntimeError(f"eigensolver failed in sector m={basis.m}") from err
        # residual check against the sparse block
        resid = np.abs(block @ evecs - evecs * evals).max(initial=0.0)
        scale = max(1.0, np.abs(evals).max(initial=0.0))
        if resid > RESIDUAL_TOL * scale:
            raise RuntimeError(f"eigensolver residual {resid:.2e} in sector m={basis.m}")
        eigenvalues.append(evals)
        eigenvectors.append(evecs)
    order = sorted(
        (float(e), si, li)
        for si, evals in enumerate(eigenvalues)
        for li, e in enumerate(evals)
    )
    return Spectrum(spec=H.spec, sectors=H.sectors,
                    sector_eigenvalues=eigenvalues, sector_eigenvectors=eigenvectors,
                    order=order)


def group_levels(spectrum: Spectrum, tol: float = DEGENERACY_TOL) -> list[EnergyLevel]:
    """Merge near-equal eigenvalues into degenerate levels.

    Two adjacent sorted eigenvalues join the same level iff
    |E_a - E_b| <= tol * max(1, |E_a|); grouping is the transitive closure
    over the sorted list.
    """
    if tol <= 0:
        raise ValueError("degeneracy tolerance must be positive")
    levels = []
    group = []
    prev = None
    for entry in spectrum.order:
        e = entry[0]
        if prev is not None and abs(e - prev) > tol * max(1.0, abs(prev)):
            levels.append(group)
            group = []
        group.append(entry)
        prev = e
    if group:
        levels.append(group)
    out = []
    for k, members in enumerate(levels):
        vecs = np.column_stack([spectrum.full_vector(si, li) for _, si, li in members])
        energy = float(np.mean([e for e, _, _ in members]))
        out.append(EnergyLevel(index=k, energy=energy, degeneracy=len(members), vectors=vecs))
    return out


def level_state(levels: list[EnergyLevel], k: int) -> QuantumState:
    """Uniform mixture over the level's eigenspace (pure state when g = 1).

    Degenerate multiplets get equal observables in this mixture regardless of
    the eigensolver's arbitrary basis choice within the eigenspace.
    """
    if not (0 <= k < len(levels)):
        raise IndexError(f"level index {k} out of range (have {len(levels)} levels)")
    level = levels[k]
    g = level.degeneracy
    return QuantumState.mixture(np.full(g, 1.0 / g), level.vectors)
