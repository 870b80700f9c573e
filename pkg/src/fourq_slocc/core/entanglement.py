from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np
import pandas as pd

from fourq_slocc.core.errors import EmptySubset
from fourq_slocc.core.state import QUBIT_COUNT, QUBITS, PureState4, check_qubit, normalized_amplitudes

MAXIMALLY_MIXED_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class ReducedDensityMatrix:
    """Marginal of the normalized state on ``kept`` (ascending; lowest qubit = most significant bit)."""

    kept: tuple[int, ...]
    entries: np.ndarray
    dim: int = field(init=False)

    def __post_init__(self) -> None:
        rho = np.array(self.entries, dtype=complex)
        rho.setflags(write=False)
        object.__setattr__(self, "entries", rho)
        object.__setattr__(self, "dim", int(rho.shape[0]))

    @property
    def label(self) -> str:
        return "".join(str(q) for q in self.kept)


def normalize_subset(keep: Iterable[int]) -> tuple[int, ...]:
    kept = tuple(sorted({check_qubit(q) for q in keep}))
    if not kept:
        raise EmptySubset("At least one qubit must be kept.")
    return kept


def partial_trace(state: PureState4, keep: Iterable[int]) -> ReducedDensityMatrix:
    kept = normalize_subset(keep)
    env = tuple(q for q in QUBITS if q not in kept)
    psi = normalized_amplitudes(state).reshape((2,) * QUBIT_COUNT)
    axes = [q - 1 for q in kept] + [q - 1 for q in env]
    flat = np.transpose(psi, axes).reshape(2 ** len(kept), 2 ** len(env))
    # rho[r, c] = sum_e psi[r, e] * conj(psi[c, e])
    rho = flat @ flat.conj().T
    return ReducedDensityMatrix(kept=kept, entries=rho)


def purity(rdm: ReducedDensityMatrix) -> float:
    rho = rdm.entries
    # Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return float(np.real(np.sum(rho * rho.T)))


def marginal_purity(state: PureState4, keep: Iterable[int]) -> float:
    return purity(partial_trace(state, keep))


@dataclass(frozen=True)
class EntanglementReport:
    single: dict[str, float]
    pairs: dict[str, float]
    maximally_mixed_singles: bool


def marginal_table(state: PureState4) -> pd.DataFrame:
    """Purity of every one- and two-qubit marginal, one row per subset."""
    subsets = [(q,) for q in QUBITS] + list(combinations(QUBITS, 2))
    rows = []
    for keep in subsets:
        rdm = partial_trace(state, keep)
        rows.append({"subset": rdm.label, "size": len(keep), "dim": rdm.dim, "purity": purity(rdm)})
    return pd.DataFrame(rows)


def max_entanglement_report(state: PureState4) -> EntanglementReport:
    table = marginal_table(state)
    singles = table[table["size"] == 1]
    pairs = table[table["size"] == 2]
    mixed = bool(((singles["purity"] - 0.5).abs() <= MAXIMALLY_MIXED_TOL).all())
    return EntanglementReport(
        single={str(k): float(v) for k, v in zip(singles["subset"], singles["purity"])},
        pairs={str(k): float(v) for k, v in zip(pairs["subset"], pairs["purity"])},
        maximally_mixed_singles=mixed,
    )
