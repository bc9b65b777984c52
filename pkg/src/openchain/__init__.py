"""Exact diagonalization of open-boundary Heisenberg chains (spin-1/2 and spin-1):
full spectra, pairwise entanglement of energy levels, and thermal entanglement."""

from .entanglement import (
    EntanglementProfile,
    bond_profile,
    concurrence_su2,
    negativity_su2,
    phase_relation,
    pt_negativity,
    wootters_concurrence,
)
from .hamiltonian import BlockOperator, bond_operators, build_hamiltonian
from .hilbert import ChainSpec, LocalSpinMatrices, SectorBasis, enumerate_basis, local_spin_matrices
from .observables import (
    BondExpectations,
    QuantumState,
    TwoSiteRDM,
    bond_expectations,
    expectation,
    reduced_density_matrix,
)
from .spectra import EnergyLevel, Spectrum, diagonalize, group_levels, level_state
from .thermal import (
    GibbsEnsemble,
    NoThresholdError,
    ThermalCurve,
    ThresholdResult,
    gibbs_ensemble,
    gibbs_expectation,
    thermal_concurrence,
    thermal_negativity,
    thermal_scan,
    threshold_temperature,
)

__all__ = [name for name in dir() if not name.startswith("_")]
