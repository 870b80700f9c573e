"""Polynomial SLOCC invariants of four-qubit states.

H has degree 2, L, M and N degree 4, Dxt degree 6.  Under a quartet of
determinant-one local operators all five are unchanged; under general
invertible operators with determinant product ``d`` they pick up
``d``, ``d**2`` and ``d**3`` respectively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from fourq_slocc.core.errors import NonFinite
from fourq_slocc.core.state import PureState4, swap_qubits

FINGERPRINT_KEYS = ("H", "L", "M", "Dxt")
FINGERPRINT_WEIGHTS = (1, 2, 2, 3)
INVARIANT_KEYS = ("H", "L", "M", "N", "Dxt")
INVARIANT_WEIGHTS = {"H": 1, "L": 2, "M": 2, "N": 2, "Dxt": 3}

# (-1)**popcount(k) for k = 0..7
_H_SIGNS = np.array([(-1) ** bin(k).count("1") for k in range(8)], dtype=float)

# M matrix layout: columns run over (q1, q3), rows over (q2, q4).
_M_LAYOUT = np.array(
    [
        [0, 8, 2, 10],
        [1, 9, 3, 11],
        [4, 12, 6, 14],
        [5, 13, 7, 15],
    ]
)


@dataclass(frozen=True)
class InvariantFingerprint:
    H: complex
    L: complex
    M: complex
    Dxt: complex
    # squared norm of the source state; 0 when unknown
    unit: float = field(default=0.0, compare=False)
    weights: tuple[int, int, int, int] = field(default=FINGERPRINT_WEIGHTS, init=False)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.unit) and self.unit >= 0.0):
            raise ValueError(f"Fingerprint unit must be finite and >= 0, got {self.unit!r}.")
        object.__setattr__(self, "unit", float(self.unit))
        for key in FINGERPRINT_KEYS:
            value = complex(getattr(self, key))
            if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                raise NonFinite(f"Fingerprint component {key} is not finite: {value!r}.")
            object.__setattr__(self, key, value)

    def values(self) -> tuple[complex, complex, complex, complex]:
        return (self.H, self.L, self.M, self.Dxt)

    def items(self) -> list[tuple[str, complex, int]]:
        return list(zip(FINGERPRINT_KEYS, self.values(), self.weights))

    def is_all_zero(self) -> bool:
        return all(v == 0 for v in self.values())


def determinant(matrix: np.ndarray) -> complex:
    """Determinant by Gaussian elimination with partial (row) pivoting."""
    a = np.array(matrix, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"Determinant needs a square matrix, got shape {a.shape}.")
    det = 1.0 + 0.0j
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if a[p, k] == 0:
            return 0j
        if p != k:
            a[[k, p]] = a[[p, k]]
            det = -det
        det *= a[k, k]
        if k + 1 < n:
            factors = a[k + 1 :, k] / a[k, k]
            a[k + 1 :, k:] -= np.outer(factors, a[k, k:])
    return complex(det)


def inv_H(state: PureState4) -> complex:
    a = state.amplitudes
    return complex(2.0 * np.sum(_H_SIGNS * a[:8] * a[15:7:-1]))


def l_matrix(state: PureState4) -> np.ndarray:
    # entry (r, c) = a[4c + r]
    return state.amplitudes.reshape(4, 4).T


def m_matrix(state: PureState4) -> np.ndarray:
    return state.amplitudes[_M_LAYOUT]


def inv_L(state: PureState4) -> complex:
    return determinant(l_matrix(state))


def inv_M(state: PureState4) -> complex:
    return determinant(m_matrix(state))


def inv_N(state: PureState4) -> complex:
    """L of the state with qubits 2 and 4 exchanged; not part of the fingerprint."""
    return inv_L(swap_qubits(state, 2, 4))


def _det2(x: np.ndarray) -> complex:
    return x[0, 0] * x[1, 1] - x[0, 1] * x[1, 0]


def _polar2(x: np.ndarray, y: np.ndarray) -> complex:
    # Polarization of det2: det2(x + y) - det2(x) - det2(y).
    return x[0, 0] * y[1, 1] + x[1, 1] * y[0, 0] - x[0, 1] * y[1, 0] - x[1, 0] * y[0, 1]


def dxt_matrix(state: PureState4) -> np.ndarray:
    """Coefficient matrix of the biquadratic form det(sum_ij x_i y_j A_ij).

    ``A_ij`` is the 2x2 block over qubits 2, 3 with qubit 1 = i and qubit 4 = j.
    Rows follow x0^2, x0*x1, x1^2 and columns y0^2, y0*y1, y1^2. The middle
    row collects both mixed terms x0*x1 in one row; row 1 is
    (a0a6 - a2a4, a0a7 + a1a6 - a2a5 - a3a4, a1a7 - a3a5).
    """
    t = state.tensor()
    a00, a01 = t[0, :, :, 0], t[0, :, :, 1]
    a10, a11 = t[1, :, :, 0], t[1, :, :, 1]
    return np.array(
        [
            [_det2(a00), _polar2(a00, a01), _det2(a01)],
            [_polar2(a00, a10), _polar2(a00, a11) + _polar2(a01, a10), _polar2(a01, a11)],
            [_det2(a10), _polar2(a10, a11), _det2(a11)],
        ],
        dtype=complex,
    )


def inv_Dxt(state: PureState4) -> complex:
    return determinant(dxt_matrix(state))


def fingerprint(state: PureState4) -> InvariantFingerprint:
    return InvariantFingerprint(
        H=inv_H(state),
        L=inv_L(state),
        M=inv_M(state),
        Dxt=inv_Dxt(state),
        unit=state.norm**2,
    )


def invariant_values(state: PureState4) -> dict[str, complex]:
    """All five invariants keyed by name, in INVARIANT_KEYS order."""
    return {
        "H": inv_H(state),
        "L": inv_L(state),
        "M": inv_M(state),
        "N": inv_N(state),
        "Dxt": inv_Dxt(state),
    }
