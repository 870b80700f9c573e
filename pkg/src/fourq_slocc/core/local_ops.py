from __future__ import annotations

from dataclasses import dataclass, field
from math import sqrt
from typing import Iterable, Sequence

import numpy as np

from fourq_slocc.core.errors import SingularOperator, UnknownGate, WrongLength
from fourq_slocc.core.state import BASIS_SIZE, QUBITS, PureState4, check_qubit

INVERTIBILITY_THRESHOLD = 1e-12
# Pre-scaling |det| below this is resampled in the SL and GL samplers.
CONDITIONING_GUARD = 0.1
GROUPS = ("su", "sl", "gl")

_SQRT2_INV = 1 / sqrt(2)
_GATES = {
    "I": np.array([[1, 0], [0, 1]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
}
GATE_NAMES = tuple(_GATES)


@dataclass(frozen=True, eq=False)
class LocalOperator:
    entries: np.ndarray
    label: str = ""
    det: complex = field(init=False)

    def __post_init__(self) -> None:
        m = np.array(self.entries, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"A local operator is a 2x2 matrix, got shape {m.shape}.")
        if not np.all(np.isfinite(m)):
            raise ValueError("Local operator entries must be finite.")
        det = complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
        if abs(det) < INVERTIBILITY_THRESHOLD:
            raise SingularOperator(f"Operator is not invertible (|det| = {abs(det):.3g}).")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)
        object.__setattr__(self, "det", det)

    def __matmul__(self, other: "LocalOperator") -> "LocalOperator":
        return compose(self, other)

    def __repr__(self) -> str:
        name = self.label or "op"
        return f"LocalOperator({name}, det={self.det:.6g})"


@dataclass(frozen=True, eq=False)
class LocalOperatorQuartet:
    """Operators for qubits 1..4 in order; ``det_product`` is the product of their determinants."""

    ops: tuple[LocalOperator, LocalOperator, LocalOperator, LocalOperator]
    det_product: complex = field(init=False)

    def __post_init__(self) -> None:
        ops = tuple(self.ops)
        if len(ops) != len(QUBITS):
            raise WrongLength(f"A quartet needs {len(QUBITS)} operators, got {len(ops)}.")
        for op in ops:
            if not isinstance(op, LocalOperator):
                raise TypeError(f"Expected LocalOperator, got {type(op).__name__}.")
        d = 1.0 + 0.0j
        for op in ops:
            d *= op.det
        object.__setattr__(self, "ops", ops)
        object.__setattr__(self, "det_product", complex(d))

    def labels(self) -> str:
        return ",".join(op.label or "?" for op in self.ops)


def gate(name: str) -> LocalOperator:
    key = str(name).strip().upper()
    if key not in _GATES:
        raise UnknownGate(f"Unknown gate '{name}'; expected one of {', '.join(GATE_NAMES)}.")
    return LocalOperator(_GATES[key], label=key)


def compose(a: LocalOperator, b: LocalOperator) -> LocalOperator:
    """Matrix product ``a @ b`` (``b`` acts first)."""
    label = f"{a.label}{b.label}" if a.label and b.label else ""
    return LocalOperator(a.entries @ b.entries, label=label)


def adjoint(op: LocalOperator) -> LocalOperator:
    return LocalOperator(op.entries.conj().T, label=f"{op.label}^+" if op.label else "")


def make_quartet(ops: Iterable[LocalOperator]) -> LocalOperatorQuartet:
    return LocalOperatorQuartet(tuple(ops))


def parse_ops(text: str) -> LocalOperatorQuartet:
    """Parse the gate string syntax, e.g. ``"H,H,H,I"`` (position = qubit)."""
    tokens = [tok.strip() for tok in str(text).split(",")]
    if len(tokens) != len(QUBITS) or any(not tok for tok in tokens):
        raise WrongLength(f"Expected four comma-separated gates, got '{text}'.")
    return make_quartet(gate(tok) for tok in tokens)


def apply_single(op: LocalOperator, qubit: int, state: PureState4) -> PureState4:
    axis = check_qubit(qubit) - 1
    t = np.tensordot(op.entries, state.tensor(), axes=([1], [axis]))
    return PureState4(np.moveaxis(t, 0, axis).reshape(BASIS_SIZE))


def apply_quartet(q: LocalOperatorQuartet, state: PureState4) -> PureState4:
    for qubit, op in zip(QUBITS, q.ops):
        state = apply_single(op, qubit, state)
    return state


def apply_in_order(q: LocalOperatorQuartet, state: PureState4, order: Sequence[int]) -> PureState4:
    """Apply the quartet's factors in a chosen qubit order."""
    if sorted(order) != list(QUBITS):
        raise ValueError(f"Order must be a permutation of 1..4, got {list(order)}.")
    for qubit in order:
        state = apply_single(q.ops[qubit - 1], qubit, state)
    return state


# --- random sampling -------------------------------------------------------


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(int(seed))))


def substream(seed: int, index: int) -> np.random.Generator:
    """Independent generator for sample ``index`` of a run seeded with ``seed``."""
    seq = np.random.SeedSequence(int(seed), spawn_key=(int(index),))
    return np.random.Generator(np.random.Philox(seq))


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) * _SQRT2_INV


def random_su2(rng: np.random.Generator) -> LocalOperator:
    alpha, beta = _complex_gaussian(rng, 2)
    r = sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
    alpha, beta = alpha / r, beta / r
    u = np.array([[alpha, -np.conj(beta)], [beta, np.conj(alpha)]], dtype=complex)
    return LocalOperator(u, label="su2")


def _sample_conditioned(rng: np.random.Generator) -> tuple[np.ndarray, complex]:
    while True:
        g = _complex_gaussian(rng, (2, 2))
        det = complex(g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0])
        if abs(det) >= CONDITIONING_GUARD:
            return g, det


def random_sl2(rng: np.random.Generator) -> LocalOperator:
    g, det = _sample_conditioned(rng)
    # principal branch; the sign ambiguity cancels in every even-degree invariant
    return LocalOperator(g / np.sqrt(det), label="sl2")


def random_gl2(rng: np.random.Generator) -> LocalOperator:
    g, _ = _sample_conditioned(rng)
    return LocalOperator(g, label="gl2")


_SAMPLERS = {"su": random_su2, "sl": random_sl2, "gl": random_gl2}


def random_quartet(rng: np.random.Generator, group: str = "sl") -> LocalOperatorQuartet:
    key = str(group).strip().lower()
    if key not in _SAMPLERS:
        raise ValueError(f"Unknown operator group '{group}'; expected one of {', '.join(GROUPS)}.")
    sampler = _SAMPLERS[key]
    return make_quartet(sampler(rng) for _ in QUBITS)
