from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from fourq_slocc.core.errors import NonFinite, QubitOutOfRange, WrongLength, ZeroState

QUBIT_COUNT = 4
BASIS_SIZE = 16
QUBITS = (1, 2, 3, 4)


@dataclass(frozen=True)
class ComplexTolerance:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-9

    def __post_init__(self) -> None:
        for label, value in (("abs_tol", self.abs_tol), ("rel_tol", self.rel_tol)):
            if not math.isfinite(value) or value <= 0.0:
                raise ValueError(f"{label} must be positive and finite, got {value!r}.")


DEFAULT_TOLERANCE = ComplexTolerance()


@dataclass(frozen=True, eq=False)
class PureState4:
    """Sixteen complex amplitudes of a four-qubit pure state.

    ``amplitudes[k]`` multiplies ``|q1 q2 q3 q4>`` with
    ``k = 8*q1 + 4*q2 + 2*q3 + q4``; qubit 1 is the most significant bit.
    The vector is kept as given (no normalization) and is read-only.
    """

    amplitudes: np.ndarray
    norm: float = field(init=False)

    def __post_init__(self) -> None:
        try:
            arr = np.array(self.amplitudes, dtype=complex)
        except (TypeError, ValueError) as exc:
            raise NonFinite(f"Amplitudes must be complex numbers: {exc}") from exc
        if arr.ndim != 1 or arr.size != BASIS_SIZE:
            raise WrongLength(f"Expected {BASIS_SIZE} amplitudes, got shape {arr.shape}.")
        if not np.all(np.isfinite(arr)):
            bad = int(np.flatnonzero(~np.isfinite(arr))[0])
            raise NonFinite(f"Amplitude {bad} is not finite: {arr[bad]!r}.")
        norm = float(np.linalg.norm(arr))
        if norm == 0.0:
            raise ZeroState("The zero vector is not a state.")
        arr.setflags(write=False)
        object.__setattr__(self, "amplitudes", arr)
        object.__setattr__(self, "norm", norm)

    def __len__(self) -> int:
        return BASIS_SIZE

    def __getitem__(self, index: int) -> complex:
        return complex(self.amplitudes[index])

    def tensor(self) -> np.ndarray:
        """Amplitudes as a (2, 2, 2, 2) array indexed [q1, q2, q3, q4]."""
        return self.amplitudes.reshape((2,) * QUBIT_COUNT)

    def __repr__(self) -> str:
        terms = [
            f"{self.amplitudes[k]:.6g}|{k:04b}>"
            for k in range(BASIS_SIZE)
            if self.amplitudes[k] != 0
        ]
        return f"PureState4({' + '.join(terms)})"


def make_state(amplitudes: Iterable[complex] | np.ndarray) -> PureState4:
    if not isinstance(amplitudes, np.ndarray):
        amplitudes = list(amplitudes)
    return PureState4(amplitudes)


def basis_index(q1: int, q2: int, q3: int, q4: int) -> int:
    bits = (q1, q2, q3, q4)
    for bit in bits:
        if bit not in (0, 1):
            raise ValueError(f"Qubit values must be 0 or 1, got {bits}.")
    return 8 * q1 + 4 * q2 + 2 * q3 + q4


def basis_bits(index: int) -> tuple[int, int, int, int]:
    if not 0 <= index < BASIS_SIZE:
        raise ValueError(f"Basis index must lie in 0..15, got {index}.")
    return ((index >> 3) & 1, (index >> 2) & 1, (index >> 1) & 1, index & 1)


def check_qubit(qubit: int) -> int:
    if isinstance(qubit, bool) or qubit not in QUBITS:
        raise QubitOutOfRange(f"Qubit index must be one of 1..4, got {qubit!r}.")
    return int(qubit)


def state_from_terms(terms: Mapping[str, complex]) -> PureState4:
    """Build a state from ket labels, e.g. ``{"0000": 0.5, "1001": -0.5}``."""
    amps = np.zeros(BASIS_SIZE, dtype=complex)
    for label, value in terms.items():
        label = str(label).strip()
        if len(label) != QUBIT_COUNT or set(label) - {"0", "1"}:
            raise ValueError(f"Ket label must be four bits, got '{label}'.")
        amps[int(label, 2)] += value
    return PureState4(amps)


def inner_product(bra: PureState4, ket: PureState4) -> complex:
    return complex(np.vdot(bra.amplitudes, ket.amplitudes))


def equal_up_to_global_phase(
    a: PureState4,
    b: PureState4,
    tol: ComplexTolerance = DEFAULT_TOLERANCE,
) -> bool:
    """True when ``a = exp(i*theta) * b`` amplitude-wise within ``abs_tol * max|a|``.

    The phase is fixed from the largest-magnitude amplitude of ``b``.
    """
    x = a.amplitudes
    y = b.amplitudes
    k = int(np.argmax(np.abs(y)))
    if x[k] == 0:
        phase = 1.0 + 0.0j
    else:
        phase = (x[k] / abs(x[k])) / (y[k] / abs(y[k]))
    bound = tol.abs_tol * float(np.max(np.abs(x)))
    return bool(np.max(np.abs(x - phase * y)) <= bound)


def swap_qubits(state: PureState4, i: int, j: int) -> PureState4:
    """Exchange qubits ``i`` and ``j`` (1-based): ``a'[..qi..qj..] = a[..qj..qi..]``."""
    i = check_qubit(i)
    j = check_qubit(j)
    if i == j:
        return state
    swapped = np.swapaxes(state.tensor(), i - 1, j - 1)
    return PureState4(swapped.reshape(BASIS_SIZE))


def scale_state(state: PureState4, factor: complex) -> PureState4:
    return PureState4(complex(factor) * state.amplitudes)


def linear_combination(alpha: complex, a: PureState4, beta: complex, b: PureState4) -> PureState4:
    return PureState4(complex(alpha) * a.amplitudes + complex(beta) * b.amplitudes)


def normalized_amplitudes(state: PureState4) -> np.ndarray:
    return state.amplitudes / state.norm
