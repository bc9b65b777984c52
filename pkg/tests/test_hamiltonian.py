import numpy as np
import pytest

from openchain.hamiltonian import bond_operators, build_hamiltonian
from openchain.hilbert import ChainSpec

from oracles import dense_hamiltonian, dense_pair_coupling, dense_swap


def sorted_eigs(op):
    return np.sort(np.linalg.eigvalsh(op.full_matrix()))


def test_half_l2_spectrum():
    eigs = sorted_eigs(build_hamiltonian(ChainSpec(2, "half")))
    assert np.allclose(eigs, [-1, 1, 1, 1], atol=1e-12)


def test_half_l3_spectrum():
    eigs = sorted_eigs(build_hamiltonian(ChainSpec(3, "half")))
    assert np.allclose(eigs, [-1, -1, 1, 1, 2, 2, 2, 2], atol=1e-12)


def test_one_l2_spectrum():
    eigs = sorted_eigs(build_hamiltonian(ChainSpec(2, "one")))
    assert np.allclose(eigs, [-2] + [-1] * 3 + [1] * 5, atol=1e-12)


@pytest.mark.parametrize("spin,L", [("half", 4), ("one", 3)])
def test_matches_unsectored_assembly(spin, L):
    spec = ChainSpec(L, spin)
    blocked = build_hamiltonian(spec).full_matrix()
    dense = dense_hamiltonian(spec)
    assert abs(dense.imag).max() < 1e-12
    assert abs(blocked - dense.real).max() < 1e-12


@pytest.mark.parametrize("spin,L", [("half", 4), ("one", 3)])
def test_bond_operators_match_dense(spin, L):
    spec = ChainSpec(L, spin)
    h1, h2, swap = bond_operators(spec, 1, 3)
    d1 = dense_pair_coupling(spec, 1, 3)
    assert abs(h1.full_matrix() - d1.real).max() < 1e-12
    assert abs(h2.full_matrix() - (d1 @ d1).real).max() < 1e-12
    assert abs(swap.full_matrix() - dense_swap(spec, 1, 3).real).max() < 1e-12


def test_swap_permutes_configurations():
    spec = ChainSpec(2, "half")
    _, _, swap = bond_operators(spec, 1, 2)
    # |01>: site 1 down (q=1), site 2 up (q=0) -> config 1; swap -> config 2
    e = np.zeros(4)
    e[1] = 1.0
    out = swap.apply(e)
    expect = np.zeros(4)
    expect[2] = 1.0
    assert np.allclose(out, expect, atol=1e-12)


@pytest.mark.parametrize("spin,L,i,j", [("half", 4, 2, 3), ("one", 3, 1, 3), ("one", 4, 2, 4)])
def test_swap_squares_to_identity(spin, L, i, j):
    spec = ChainSpec(L, spin)
    _, _, swap = bond_operators(spec, i, j)
    m = swap.full_matrix()
    assert abs(m @ m - np.eye(spec.dim)).max() < 1e-10


@pytest.mark.parametrize("spin,L", [("half", 3), ("half", 5), ("one", 4)])
def test_sum_rule(spin, L):
    spec = ChainSpec(L, spin)
    H = build_hamiltonian(spec).full_matrix()
    total = np.zeros_like(H)
    for i in range(1, L):
        h1, _, swap = bond_operators(spec, i, i + 1)
        total += swap.full_matrix() if spin == "half" else h1.full_matrix()
    assert abs(H - total).max() < 1e-12


@pytest.mark.parametrize("spin,L", [("half", 5), ("one", 4)])
def test_reflection_symmetry(spin, L):
    spec = ChainSpec(L, spin)
    d = spec.local_dim
    perm = np.empty(spec.dim, dtype=int)
    for c in range(spec.dim):
        digits = [(c // d ** k) % d for k in range(L)]
        perm[c] = sum(q * d ** (L - 1 - k) for k, q in enumerate(digits))
    H = build_hamiltonian(spec).full_matrix()
    assert abs(H - H[np.ix_(perm, perm)]).max() < 1e-12


def test_rejects_bad_site_pairs():
    spec = ChainSpec(4, "half")
    for i, j in [(2, 2), (3, 2), (0, 1), (1, 5)]:
        with pytest.raises(ValueError):
            bond_operators(spec, i, j)
