"""Gibbs-state expectations, thermal entanglement curves, threshold temperatures.

Temperatures are in coupling units with k_B = 1.  Boltzmann weights are
computed from energies shifted by the ground energy, so beta up to ~1e4 is
evaluable without overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hamiltonian import BlockOperator, bond_operators, build_hamiltonian
from .hilbert import ChainSpec
from .observables import QuantumState, TwoSiteRDM, _pure_rdm
from .spectra import Spectrum, diagonalize


@dataclass(frozen=True)
class GibbsEnsemble:
    """Boltzmann weights over the full spectrum at one temperature."""

    spectrum: Spectrum
    temperature: float
    weights: np.ndarray  # aligned with spectrum.order, sum to 1
    log_partition: float

    @property
    def partition_function(self) -> float:
        return float(np.exp(self.log_partition))


def boltzmann_weights(energies: np.ndarray, T: float):
    """(weights, logZ) with the max-shift trick; energies in any order."""
    if T <= 0:
        raise ValueError("temperature must be positive")
    shifted = np.exp(-(energies - energies.min()) / T)
    total = shifted.sum()
    return shifted / total, float(np.log(total) - energies.min() / T)


def gibbs_ensemble(spectrum: Spectrum, T: float) -> GibbsEnsemble:
    weights, logz = boltzmann_weights(spectrum.energies, T)
    return GibbsEnsemble(spectrum=spectrum, temperature=T, weights=weights, log_partition=logz)


def eigen_expectations(spectrum: Spectrum, op: BlockOperator) -> np.ndarray:
    """<v_n|op|v_n> for every eigenstate, in spectrum.order alignment.

    Computed sector-wise so threshold bisection can reuse the array across
    temperatures at dot-product cost per evaluation.
    """
    per_sector = []
    for si, vecs in enumerate(spectrum.sector_eigenvectors):
        block = op.blocks[si]
        per_sector.append(np.einsum("ij,ij->j", vecs, block @ vecs))
    return np.array([per_sector[si][li] for _, si, li in spectrum.order])


def gibbs_expectation(spectrum: Spectrum, T: float, op: BlockOperator) -> float:
    weights, _ = boltzmann_weights(spectrum.energies, T)
    return float(weights @ eigen_expectations(spectrum, op))


def thermal_state(spectrum: Spectrum, T: float) -> QuantumState:
    """Gibbs state as a mixture over the full eigenbasis (small chains only)."""
    weights, _ = boltzmann_weights(spectrum.energies, T)
    vecs = np.column_stack([spectrum.full_vector(si, li) for _, si, li in spectrum.order])
    return QuantumState.mixture(weights, vecs)


def eigen_rdms(spectrum: Spectrum, i: int, j: int) -> np.ndarray:
    """Per-eigenstate two-site RDMs; thermal RDMs are weight averages of these."""
    spec = spectrum.spec
    return np.array([_pure_rdm(spectrum.full_vector(si, li), spec, i, j)
                     for _, si, li in spectrum.order])


def thermal_rdm(spectrum: Spectrum, T: float, i: int, j: int,
                eigen: np.ndarray | None = None) -> TwoSiteRDM:
    if eigen is None:
        eigen = eigen_rdms(spectrum, i, j)
    weights, _ = boltzmann_weights(spectrum.energies, T)
    rho = np.tensordot(weights, eigen, axes=1)
    rho = 0.5 * (rho + rho.conj().T)
    return TwoSiteRDM(matrix=rho, sites=(i, j), local_dim=spectrum.spec.local_dim)


class ThermalBond:
    """Precomputed ingredients for one (spec, bond): spectrum and eigen values.

    Every temperature evaluation afterwards costs one weight vector and a few
    dot products.
    """

    def __init__(self, spec: ChainSpec, i: int, j: int, spectrum: Spectrum | None = None):
        self.spec = spec
        self.sites = (i, j)
        if spectrum is None:
            spectrum = diagonalize(build_hamiltonian(spec))
        self.spectrum = spectrum
        h1_op, h2_op, swap_op = bond_operators(spec, i, j, sectors=spectrum.sectors)
        self.h1_values = eigen_expectations(spectrum, h1_op)
        self.h2_values = eigen_expectations(spectrum, h2_op)
        self.swap_values = eigen_expectations(spectrum, swap_op)
        self.energies = spectrum.energies

    def averages(self, T: float):
        weights, _ = boltzmann_weights(self.energies, T)
        return (float(weights @ self.h1_values),
                float(weights @ self.h2_values),
                float(weights @ self.swap_values))

    def measure(self, T: float) -> float:
        h1, h2, swap = self.averages(T)
        if self.spec.spin_kind == "half":
            return max(0.0, -swap)
        return 0.5 * max(0.0, h2 - 2.0) + (1.0 / 3.0) * max(0.0, 1.0 - h1 - h2)

    def root_terms(self, T: float) -> dict:
        """Signed arguments of the max terms; the measure is 0 iff all are <= 0."""
        h1, h2, swap = self.averages(T)
        if self.spec.spin_kind == "half":
            return {"neg_swap": -swap}
        return {"h2_minus_2": h2 - 2.0, "one_minus_h1_minus_h2": 1.0 - h1 - h2}


def thermal_concurrence(spec: ChainSpec, i: int, j: int, T: float,
                        bond: ThermalBond | None = None) -> float:
    """max{0, -<swap>_T} for a spin-half pair."""
    if spec.spin_kind != "half":
        raise ValueError("thermal concurrence applies to spin-half chains only")
    if T <= 0:
        raise ValueError("temperature must be positive")
    if bond is None:
        bond = ThermalBond(spec, i, j)
    return bond.measure(T)


def thermal_negativity(spec: ChainSpec, i: int, j: int, T: float,
                       bond: ThermalBond | None = None) -> float:
    """Two-max-term thermal negativity for a spin-one pair."""
    if spec.spin_kind != "one":
        raise ValueError("thermal negativity applies to spin-one chains only")
    if T <= 0:
        raise ValueError("temperature must be positive")
    if bond is None:
        bond = ThermalBond(spec, i, j)
    return bond.measure(T)


@dataclass(frozen=True)
class ThermalCurve:
    spec: ChainSpec
    sites: tuple
    measure: str
    temperatures: np.ndarray
    values: np.ndarray


def thermal_scan(spec: ChainSpec, i: int, j: int, T_grid, measure: str | None = None) -> ThermalCurve:
    """Pointwise thermal entanglement on a strictly increasing temperature grid."""
    T_grid = np.asarray(T_grid, dtype=float)
    if T_grid.size == 0:
        raise ValueError("empty temperature grid")
    if np.any(T_grid <= 0) or np.any(np.diff(T_grid) <= 0):
        raise ValueError("temperature grid must be strictly increasing and positive")
    expected = "concurrence" if spec.spin_kind == "half" else "negativity"
    if measure is None:
        measure = expected
    if measure != expected:
        raise ValueError(f"measure {measure!r} is incompatible with spin_kind {spec.spin_kind!r}")
    bond = ThermalBond(spec, i, j)
    values = np.array([bond.measure(t) for t in T_grid])
    return ThermalCurve(spec=spec, sites=(i, j), measure=measure,
                        temperatures=T_grid, values=values)


@dataclass(frozen=True)
class ThresholdResult:
    t_th: float
    bracket_width: float
    iterations: int
    root_term: str  # which max-term's argument crosses zero at t_th


class NoThresholdError(RuntimeError):
    pass


def _bisect_root(f, t_lo: float, t_hi: float, tol: float):
    """Root of f on [t_lo, t_hi] with f(t_lo) > 0 >= f(t_hi)."""
    iters = 0
    while t_hi - t_lo > tol:
        mid = 0.5 * (t_lo + t_hi)
        if f(mid) > 0:
            t_lo = mid
        else:
            t_hi = mid
        iters += 1
    return 0.5 * (t_lo + t_hi), t_hi - t_lo, iters


def threshold_temperature(spec: ChainSpec, i: int, j: int, tol: float = 1e-7,
                          bond: ThermalBond | None = None) -> ThresholdResult:
    """Smallest temperature above which the pair's thermal entanglement vanishes.

    Bisection runs on the signed argument of the governing max-term (the
    clamped measure is identically zero above threshold and carries no sign
    information).  For spin-one the governing term is whichever argument is
    positive at low temperature and crosses zero last; its identity is
    recorded in the result.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if bond is None:
        bond = ThermalBond(spec, i, j)
    if bond.measure(1e-3) <= 0:
        raise NoThresholdError(f"no entanglement at any T for bond {(i, j)}")
    t_start = 0.1
    low_terms = bond.root_terms(t_start)
    if all(v <= 0 for v in low_terms.values()):
        t_start = 1e-3  # threshold sits below 0.1
        low_terms = bond.root_terms(t_start)
    best = None
    for name, value in low_terms.items():
        if value <= 0:
            continue
        # bracket by doubling until the term goes nonpositive
        t_lo, t_hi = t_start, 2 * t_start
        while bond.root_terms(t_hi)[name] > 0:
            t_lo, t_hi = t_hi, 2 * t_hi
            if t_hi > 100:
                raise NoThresholdError(f"no upper bracket: term {name} still positive at T=100")
        root, width, iters = _bisect_root(lambda t: bond.root_terms(t)[name], t_lo, t_hi, tol)
        if best is None or root > best.t_th:
            best = ThresholdResult(t_th=root, bracket_width=width, iterations=iters, root_term=name)
    if best is None:
        raise NoThresholdError(f"no max-term positive at T={t_start} for bond {(i, j)}")
    return best
