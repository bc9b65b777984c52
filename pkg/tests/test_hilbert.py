import math

import numpy as np
import pytest

from openchain.hilbert import ChainSpec, config_digits, enumerate_basis, local_spin_matrices


def test_half_l2_sectors():
    sectors = enumerate_basis(ChainSpec(2, "half"))
    assert [s.m for s in sectors] == [-1.0, 0.0, 1.0]
    assert [s.size for s in sectors] == [1, 2, 1]


def test_one_l3_sectors():
    sectors = enumerate_basis(ChainSpec(3, "one"))
    assert [s.m for s in sectors] == [-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0]
    assert sectors[3].size == 7  # coefficient of x^0 in (1/x + 1 + x)^3


def test_half_l10_binomial_sizes():
    sectors = enumerate_basis(ChainSpec(10, "half"))
    assert len(sectors) == 11
    sizes = [s.size for s in sectors]
    assert sizes == [math.comb(10, k) for k in range(11)]
    assert sum(sizes) == 1024


@pytest.mark.parametrize("spin,L", [("half", 5), ("one", 4)])
def test_partition_and_roundtrip(spin, L):
    spec = ChainSpec(L, spin)
    sectors = enumerate_basis(spec)
    seen = np.concatenate([s.configs for s in sectors])
    assert sorted(seen) == list(range(spec.dim))
    for s in sectors:
        for k, c in enumerate(s.configs):
            assert s.index[int(c)] == k
        # every member really has total Sz = m
        for c in s.configs:
            digits = config_digits(int(c), L, spec.local_dim)
            assert sum(spec.spin - q for q in digits) == pytest.approx(s.m)


@pytest.mark.parametrize("spin,s", [("half", 0.5), ("one", 1.0)])
def test_spin_matrix_algebra(spin, s):
    ops = local_spin_matrices(spin)
    sx, sy, sz = ops.sx, ops.sy, ops.sz
    for a in (sx, sy, sz):
        assert abs(a - a.conj().T).max() < 1e-14
    assert abs(sx @ sy - sy @ sx - 1j * sz).max() < 1e-14
    assert abs(sy @ sz - sz @ sy - 1j * sx).max() < 1e-14
    assert abs(sz @ sx - sx @ sz - 1j * sy).max() < 1e-14
    casimir = sx @ sx + sy @ sy + sz @ sz
    assert abs(casimir - s * (s + 1) * np.eye(sx.shape[0])).max() < 1e-14


def test_sz_diagonals():
    assert np.allclose(np.diag(local_spin_matrices("half").sz), [0.5, -0.5])
    assert np.allclose(np.diag(local_spin_matrices("one").sz), [1.0, 0.0, -1.0])


def test_rejects_bad_specs():
    with pytest.raises(ValueError):
        ChainSpec(1, "half")
    with pytest.raises(ValueError):
        ChainSpec(4, "three_halves")
    with pytest.raises(ValueError):
        local_spin_matrices("two")
