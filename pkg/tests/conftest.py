import functools
import sys
from pathlib import Path
from types import SimpleNamespace

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from openchain.hamiltonian import build_hamiltonian
from openchain.hilbert import ChainSpec
from openchain.spectra import diagonalize, group_levels

SUPPORTED = [("half", L) for L in range(2, 11)] + [("one", L) for L in range(2, 7)]


@functools.lru_cache(maxsize=None)
def _chain(spin_kind: str, length: int):
    spec = ChainSpec(length=length, spin_kind=spin_kind)
    spectrum = diagonalize(build_hamiltonian(spec))
    return SimpleNamespace(spec=spec, spectrum=spectrum, levels=group_levels(spectrum))


@pytest.fixture(scope="session")
def chain():
    """chain(spin_kind, L) -> cached (spec, spectrum, levels) bundle."""
    return _chain
