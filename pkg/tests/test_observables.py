import numpy as np
import pytest
import scipy.sparse as sp

from openchain.hamiltonian import BlockOperator, bond_operators
from openchain.hilbert import ChainSpec, enumerate_basis
from openchain.observables import (
    QuantumState,
    bond_expectations,
    expectation,
    pair_matrices,
    reduced_density_matrix,
)
from openchain.spectra import level_state

from oracles import dense_partial_trace


def identity_operator(spec):
    sectors = enumerate_basis(spec)
    return BlockOperator(spec=spec, sectors=sectors,
                         blocks=[sp.identity(b.size, format="csr") for b in sectors])


def test_ground_swap_half_l3(chain):
    data = chain("half", 3)
    state = level_state(data.levels, 0)
    _, _, swap = bond_operators(data.spec, 1, 2)
    assert expectation(state, swap) == pytest.approx(-0.5, abs=1e-10)


def test_ground_coupling_one_l3(chain):
    data = chain("one", 3)
    state = level_state(data.levels, 0)
    h1, _, _ = bond_operators(data.spec, 1, 2)
    assert expectation(state, h1) == pytest.approx(-1.5, abs=1e-10)


def test_identity_expectation(chain):
    data = chain("one", 4)
    state = level_state(data.levels, 2)
    assert expectation(state, identity_operator(data.spec)) == pytest.approx(1.0, abs=1e-12)


def test_bond_expectations_one_l3_levels(chain):
    data = chain("one", 3)
    ground = bond_expectations(level_state(data.levels, 0), data.spec, 1, 2)
    assert ground.swap == pytest.approx(1 / 6, abs=1e-9)
    assert ground.h1 == pytest.approx(-3 / 2, abs=1e-9)
    assert ground.h2 == pytest.approx(8 / 3, abs=1e-9)
    first = bond_expectations(level_state(data.levels, 1), data.spec, 1, 2)
    assert first.swap == pytest.approx(-1.0, abs=1e-9)
    assert first.h1 == pytest.approx(-1.0, abs=1e-9)
    assert first.h2 == pytest.approx(1.0, abs=1e-9)


def test_aligned_product_configuration():
    spec = ChainSpec(2, "half")
    e = np.zeros(4)
    e[0] = 1.0  # |00>, both spins up
    be = bond_expectations(QuantumState.pure(e), spec, 1, 2)
    assert be.h1 == pytest.approx(0.25, abs=1e-12)
    assert be.swap == pytest.approx(1.0, abs=1e-12)


def test_rdm_of_two_site_chain_is_projector(chain):
    data = chain("half", 2)
    state = level_state(data.levels, 0)  # singlet
    rdm = reduced_density_matrix(state, data.spec, 1, 2)
    singlet = np.zeros(4)
    singlet[1], singlet[2] = 1 / np.sqrt(2), -1 / np.sqrt(2)
    assert np.abs(rdm.matrix - np.outer(singlet, singlet)).max() < 1e-10


@pytest.mark.parametrize("spin,L,k,i,j", [
    ("half", 4, 0, 2, 3),
    ("half", 5, 1, 1, 2),
    ("one", 3, 0, 1, 2),
    ("one", 4, 1, 2, 3),
])
def test_rdm_consistent_with_full_space(spin, L, k, i, j, chain):
    data = chain(spin, L)
    state = level_state(data.levels, k)
    rdm = reduced_density_matrix(state, data.spec, i, j)
    h1m, h2m, swapm = pair_matrices(spin)
    be = bond_expectations(state, data.spec, i, j)
    assert np.trace(rdm.matrix @ h1m).real == pytest.approx(be.h1, abs=1e-10)
    assert np.trace(rdm.matrix @ h2m).real == pytest.approx(be.h2, abs=1e-10)
    assert np.trace(rdm.matrix @ swapm).real == pytest.approx(be.swap, abs=1e-10)


def test_rdm_matches_explicit_partial_trace(chain):
    data = chain("one", 3)
    state = level_state(data.levels, 1)  # pure
    rdm = reduced_density_matrix(state, data.spec, 1, 3)
    direct = dense_partial_trace(state.vectors[:, 0], data.spec, 1, 3)
    assert np.abs(rdm.matrix - direct).max() < 1e-12


@pytest.mark.parametrize("spin,L", [("half", 6), ("one", 4)])
def test_mirror_symmetry(spin, L, chain):
    data = chain(spin, L)
    for k in (0, 1):
        state = level_state(data.levels, k)
        for i in range(1, L):
            a = bond_expectations(state, data.spec, i, i + 1)
            b = bond_expectations(state, data.spec, L - i, L - i + 1)
            assert a.swap == pytest.approx(b.swap, abs=1e-9)
            assert a.h1 == pytest.approx(b.h1, abs=1e-9)


@pytest.mark.parametrize("spin,L", [("half", 5), ("one", 4)])
def test_bond_sum_equals_energy(spin, L, chain):
    data = chain(spin, L)
    for k, lv in enumerate(data.levels):
        state = level_state(data.levels, k)
        total = 0.0
        for i in range(1, L):
            be = bond_expectations(state, data.spec, i, i + 1)
            total += be.swap if spin == "half" else be.h1
        assert total == pytest.approx(lv.energy, abs=1e-9)


def test_dimension_mismatch_rejected(chain):
    data = chain("half", 3)
    other = chain("half", 4)
    state = level_state(other.levels, 0)
    _, _, swap = bond_operators(data.spec, 1, 2)
    with pytest.raises(ValueError):
        expectation(state, swap)
    with pytest.raises(ValueError):
        reduced_density_matrix(state, data.spec, 1, 2)
    with pytest.raises(ValueError):
        reduced_density_matrix(state, other.spec, 3, 2)
