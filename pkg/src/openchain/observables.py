"""States, bond-operator expectation values, and two-site reduced density matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hamiltonian import BlockOperator, bond_operators
from .hilbert import ChainSpec, local_spin_matrices


@dataclass(frozen=True)
class QuantumState:
    """Pure state or a convex mixture of orthonormal vectors.

    `vectors` has shape (dim, k); `weights` are nonnegative and sum to 1.
    Mixtures are never materialized as dim x dim density matrices.
    """

    weights: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        if np.any(self.weights < -1e-12):
            raise ValueError("mixture weights must be nonnegative")
        if abs(self.weights.sum() - 1.0) > 1e-12:
            raise ValueError("mixture weights must sum to 1")
        norms = np.linalg.norm(self.vectors, axis=0)
        if np.any(np.abs(norms - 1.0) > 1e-12):
            raise ValueError("state vectors must be unit norm")

    @classmethod
    def pure(cls, vec: np.ndarray) -> "QuantumState":
        return cls(weights=np.array([1.0]), vectors=np.asarray(vec).reshape(-1, 1))

    @classmethod
    def mixture(cls, weights, vectors) -> "QuantumState":
        return cls(weights=np.asarray(weights, dtype=float), vectors=np.asarray(vectors))

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    @property
    def rank(self) -> int:
        return self.vectors.shape[1]


@dataclass(frozen=True)
class BondExpectations:
    """The triple (<S_i.S_j>, <(S_i.S_j)^2>, <swap_ij>) for one site pair."""

    spin_kind: str
    h1: float
    h2: float
    swap: float

    def __post_init__(self):
        if self.spin_kind == "half":
            drift = abs(self.swap - (2 * self.h1 + 0.5))
        else:
            drift = abs(self.swap - (self.h1 + self.h2 - 1.0))
        assert drift < 1e-10, f"swap identity violated by {drift:.2e}"
        assert abs(self.swap) <= 1 + 1e-10


@dataclass(frozen=True)
class TwoSiteRDM:
    """Reduced density matrix of sites (i, j), a d^2 x d^2 Hermitian matrix."""

    matrix: np.ndarray
    sites: tuple
    local_dim: int

    def __post_init__(self):
        rho = self.matrix
        assert abs(rho - rho.conj().T).max() < 1e-12
        assert abs(np.trace(rho).real - 1.0) < 1e-12
        assert np.linalg.eigvalsh(rho).min() > -1e-10


def expectation(state: QuantumState, op: BlockOperator) -> float:
    """Tr[op rho] as a weighted sum over the mixture's constituent vectors."""
    if state.dim != op.dim:
        raise ValueError(f"dimension mismatch: state {state.dim}, operator {op.dim}")
    return float(sum(w * op.expect(state.vectors[:, k])
                     for k, w in enumerate(state.weights)))


def bond_expectations(state: QuantumState, spec: ChainSpec, i: int, j: int) -> BondExpectations:
    h1_op, h2_op, swap_op = bond_operators(spec, i, j)
    return BondExpectations(
        spin_kind=spec.spin_kind,
        h1=expectation(state, h1_op),
        h2=expectation(state, h2_op),
        swap=expectation(state, swap_op),
    )


def _pure_rdm(vec: np.ndarray, spec: ChainSpec, i: int, j: int) -> np.ndarray:
    d = spec.local_dim
    L = spec.length
    psi = vec.reshape([d] * L)  # axis 0 = site L (most significant digit)
    ai, aj = L - i, L - j
    m = np.moveaxis(psi, (ai, aj), (0, 1)).reshape(d * d, -1)
    return m @ m.conj().T


def reduced_density_matrix(state: QuantumState, spec: ChainSpec, i: int, j: int) -> TwoSiteRDM:
    """Partial trace over all sites except i and j (i < j).

    Row index of the result is q_i * d + q_j, matching np.kron(op_i, op_j)
    ordering for two-site operators.
    """
    if not (1 <= i < j <= spec.length):
        raise ValueError(f"invalid site pair ({i}, {j})")
    if state.dim != spec.dim:
        raise ValueError(f"dimension mismatch: state {state.dim}, spec {spec.dim}")
    rho = sum(w * _pure_rdm(state.vectors[:, k], spec, i, j)
              for k, w in enumerate(state.weights))
    rho = 0.5 * (rho + rho.conj().T)  # scrub rounding asymmetry
    return TwoSiteRDM(matrix=rho, sites=(i, j), local_dim=spec.local_dim)


def pair_matrices(spin_kind: str):
    """(S.S, (S.S)^2, swap) as dense d^2 x d^2 matrices on one site pair."""
    ops = local_spin_matrices(spin_kind)
    h1 = sum(np.kron(a, a) for a in (ops.sx, ops.sy, ops.sz))
    h1 = h1.real if abs(h1.imag).max() < 1e-14 else h1
    h2 = h1 @ h1
    d = h1.shape[0]
    if spin_kind == "half":
        swap = 2 * h1 + 0.5 * np.eye(d)
    else:
        swap = h1 + h2 - np.eye(d)
    return h1, h2, swap
