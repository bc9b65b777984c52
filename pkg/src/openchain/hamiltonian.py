"""Sector-blocked sparse assembly of the chain Hamiltonian and bond operators.

All operators conserve total Sz, so they are assembled directly inside each
magnetization sector.  The ladder form (S+S- + S-S+)/2 + SzSz keeps every
matrix real symmetric.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .hilbert import ChainSpec, SectorBasis, enumerate_basis

HERMITICITY_TOL = 1e-12


@dataclass(frozen=True)
class BlockOperator:
    """Hermitian operator stored as one sparse block per magnetization sector."""

    spec: ChainSpec
    sectors: list
    blocks: list  # scipy CSR, real symmetric, one per sector

    @property
    def dim(self) -> int:
        return self.spec.dim

    def expect(self, vec: np.ndarray) -> float:
        """<v|O|v> for a full-space vector, gathered sector by sector."""
        if vec.shape[0] != self.dim:
            raise ValueError(f"dimension mismatch: vector {vec.shape[0]}, operator {self.dim}")
        total = 0.0 + 0.0j
        for basis, block in zip(self.sectors, self.blocks):
            vs = vec[basis.configs]
            total += np.vdot(vs, block @ vs)
        assert abs(total.imag) < 1e-10
        return float(total.real)

    def apply(self, vec: np.ndarray) -> np.ndarray:
        out = np.zeros_like(vec)
        for basis, block in zip(self.sectors, self.blocks):
            out[basis.configs] = block @ vec[basis.configs]
        return out

    def full_matrix(self) -> np.ndarray:
        """Dense matrix in the unsectored configuration basis (small L only)."""
        mat = np.zeros((self.dim, self.dim))
        for basis, block in zip(self.sectors, self.blocks):
            mat[np.ix_(basis.configs, basis.configs)] = block.toarray()
        return mat


def _check_hermitian(blocks):
    for block in blocks:
        drift = abs(block - block.T).max() if block.nnz else 0.0
        if drift > HERMITICITY_TOL:
            raise AssertionError(f"assembled block not symmetric (max drift {drift:.2e})")


def _pair_coupling_blocks(spec: ChainSpec, sectors, i: int, j: int):
    """Sparse blocks of S_i . S_j, built term by term over configurations."""
    d = spec.local_dim
    s = spec.spin
    L = spec.length
    pi, pj = d ** (i - 1), d ** (j - 1)
    mvals = s - np.arange(d)
    # S+ amplitude taking local level q -> q-1; S- amplitude taking q -> q+1
    amp_up = np.zeros(d)
    amp_up[1:] = np.sqrt(s * (s + 1) - mvals[1:] * (mvals[1:] + 1))
    amp_dn = np.zeros(d)
    amp_dn[:-1] = np.sqrt(s * (s + 1) - mvals[:-1] * (mvals[:-1] - 1))
    blocks = []
    for basis in sectors:
        rows, cols, vals = [], [], []
        for k, c in enumerate(basis.configs):
            c = int(c)
            qi = (c // pi) % d
            qj = (c // pj) % d
            # diagonal: Sz_i Sz_j
            rows.append(k)
            cols.append(k)
            vals.append(mvals[qi] * mvals[qj])
            # (S+_i S-_j + h.c.)/2; only emit one direction, symmetrize after
            if qi > 0 and qj < d - 1:
                c2 = c - pi + pj
                k2 = basis.index.get(c2)
                assert k2 is not None, "pair coupling left the magnetization sector"
                rows.append(k2)
                cols.append(k)
                vals.append(0.5 * amp_up[qi] * amp_dn[qj])
            if qj > 0 and qi < d - 1:
                c2 = c + pi - pj
                k2 = basis.index.get(c2)
                assert k2 is not None, "pair coupling left the magnetization sector"
                rows.append(k2)
                cols.append(k)
                vals.append(0.5 * amp_up[qj] * amp_dn[qi])
        n = basis.size
        blocks.append(sp.csr_matrix((vals, (rows, cols)), shape=(n, n)))
    _check_hermitian(blocks)
    return blocks


def _identity_blocks(sectors):
    return [sp.identity(b.size, format="csr") for b in sectors]


def bond_operators(spec: ChainSpec, i: int, j: int, sectors=None):
    """(S_i.S_j, (S_i.S_j)^2, swap_ij) as BlockOperators.

    swap is 2*h1 + I/2 for spin-half and h1 + h2 - I for spin-one; in both
    cases it is the permutation of the two sites and squares to the identity.
    """
    if not (1 <= i < j <= spec.length):
        raise ValueError(f"invalid site pair ({i}, {j}) for length {spec.length}; need 1 <= i < j <= L")
    if sectors is None:
        return _default_bond_operators(spec, i, j)
    return _build_bond_operators(spec, sectors, i, j)


@functools.lru_cache(maxsize=256)
def _default_bond_operators(spec, i, j):
    return _build_bond_operators(spec, enumerate_basis(spec), i, j)


def _build_bond_operators(spec, sectors, i, j):
    h1_blocks = _pair_coupling_blocks(spec, sectors, i, j)
    # squared coupling by explicit sparse product, validated by the swap identity
    h2_blocks = [b @ b for b in h1_blocks]
    ident = _identity_blocks(sectors)
    if spec.spin_kind == "half":
        swap_blocks = [2 * b1 + 0.5 * one for b1, one in zip(h1_blocks, ident)]
    else:
        swap_blocks = [b1 + b2 - one for b1, b2, one in zip(h1_blocks, h2_blocks, ident)]
    make = lambda blocks: BlockOperator(spec=spec, sectors=sectors, blocks=blocks)
    return make(h1_blocks), make(h2_blocks), make(swap_blocks)


def build_hamiltonian(spec: ChainSpec, sectors=None) -> BlockOperator:
    """Open-chain Heisenberg Hamiltonian.

    Spin-half: H = sum_bonds J (2 S_i.S_{i+1} + 1/2), i.e. J times the sum of
    swap operators.  Spin-one: H = sum_bonds J S_i.S_{i+1}.
    """
    if sectors is None:
        sectors = enumerate_basis(spec)
    J = spec.coupling
    acc = [sp.csr_matrix((b.size, b.size)) for b in sectors]
    ident = _identity_blocks(sectors)
    for i in range(1, spec.length):
        h1_blocks = _pair_coupling_blocks(spec, sectors, i, i + 1)
        for k, b1 in enumerate(h1_blocks):
            if spec.spin_kind == "half":
                acc[k] = acc[k] + J * (2 * b1 + 0.5 * ident[k])
            else:
                acc[k] = acc[k] + J * b1
    _check_hermitian(acc)
    return BlockOperator(spec=spec, sectors=sectors, blocks=acc)
