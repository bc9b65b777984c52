"""Chain Hilbert space: product basis and total-Sz magnetization sectors.

Configurations are encoded as integers in base d (d = 2 for spin-half,
d = 3 for spin-one).  Site 1 of the chain maps to the least significant
digit, so neighbor updates during Hamiltonian assembly are O(1).  Local
level q = 0 is the highest-Sz state (Sz eigenvalue s - q).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SPIN_KINDS = ("half", "one")

LOCAL_DIM = {"half": 2, "one": 3}
SPIN_VALUE = {"half": 0.5, "one": 1.0}


@dataclass(frozen=True)
class ChainSpec:
    """Physical problem definition: open chain of `length` spins."""

    length: int
    spin_kind: str
    coupling: float = 1.0

    def __post_init__(self):
        if self.spin_kind not in SPIN_KINDS:
            raise ValueError(f"unsupported spin_kind {self.spin_kind!r}; expected one of {SPIN_KINDS}")
        if self.length < 2:
            raise ValueError(f"chain length must be >= 2, got {self.length}")

    @property
    def local_dim(self) -> int:
        return LOCAL_DIM[self.spin_kind]

    @property
    def spin(self) -> float:
        return SPIN_VALUE[self.spin_kind]

    @property
    def dim(self) -> int:
        return self.local_dim ** self.length


@dataclass(frozen=True)
class LocalSpinMatrices:
    """Single-site spin matrices in the Sz eigenbasis (highest Sz first)."""

    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray

    @property
    def splus(self) -> np.ndarray:
        return self.sx + 1j * self.sy

    @property
    def sminus(self) -> np.ndarray:
        return self.sx - 1j * self.sy


def local_spin_matrices(spin_kind: str) -> LocalSpinMatrices:
    """Spin matrices for a single site, s = 1/2 or 1."""
    if spin_kind not in SPIN_KINDS:
        raise ValueError(f"unsupported spin_kind {spin_kind!r}")
    s = SPIN_VALUE[spin_kind]
    d = LOCAL_DIM[spin_kind]
    m = s - np.arange(d)  # Sz eigenvalues, descending
    # <s, m+1| S+ |s, m> = sqrt(s(s+1) - m(m+1))
    raise_amp = np.sqrt(s * (s + 1) - m[1:] * (m[1:] + 1))
    sp = np.diag(raise_amp, 1)
    sm = sp.T
    sx = 0.5 * (sp + sm)
    sy = -0.5j * (sp - sm)
    sz = np.diag(m)
    return LocalSpinMatrices(sx=sx, sy=sy, sz=sz.astype(complex))


@dataclass(frozen=True)
class SectorBasis:
    """All configurations with a fixed total Sz, with a bijective index map."""

    twice_m: int  # 2 * total Sz, always integer
    configs: np.ndarray  # configuration integers, ascending
    index: dict = field(repr=False)  # configuration -> sector-local index

    @property
    def m(self) -> float:
        return self.twice_m / 2

    @property
    def size(self) -> int:
        return len(self.configs)


def config_digits(config: int, length: int, d: int) -> np.ndarray:
    """Local levels q_1..q_L of a configuration (site 1 first)."""
    digits = np.empty(length, dtype=np.int64)
    for k in range(length):
        digits[k] = config % d
        config //= d
    return digits


def enumerate_basis(spec: ChainSpec) -> list[SectorBasis]:
    """Partition the d^L product configurations into total-Sz sectors.

    Sectors are returned ordered by magnetization m ascending, so all
    downstream artifacts are byte-reproducible.
    """
    d = spec.local_dim
    L = spec.length
    # 2*Sz of local level q is 2s - 2q; sum digit contributions per site
    twice_local = 2 * spec.spin - 2 * np.arange(d)
    configs = np.arange(d ** L)
    twice_m_total = np.zeros(d ** L, dtype=np.int64)
    rest = configs.copy()
    for _ in range(L):
        twice_m_total += np.rint(twice_local[rest % d]).astype(np.int64)
        rest //= d
    sectors = []
    for tm in np.unique(twice_m_total):
        members = configs[twice_m_total == tm]
        index = {int(c): k for k, c in enumerate(members)}
        sectors.append(SectorBasis(twice_m=int(tm), configs=members, index=index))
    return sectors
