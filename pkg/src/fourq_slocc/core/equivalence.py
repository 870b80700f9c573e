from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from enum import Enum
from multiprocessing import Pool
from typing import Optional

import numpy as np
import pandas as pd

from fourq_slocc.core.errors import ZeroDeterminant
from fourq_slocc.core.invariants import (
    FINGERPRINT_KEYS,
    INVARIANT_KEYS,
    INVARIANT_WEIGHTS,
    InvariantFingerprint,
    fingerprint,
    invariant_values,
)
from fourq_slocc.core.local_ops import (
    LocalOperatorQuartet,
    apply_quartet,
    random_quartet,
    substream,
)
from fourq_slocc.core.state import DEFAULT_TOLERANCE, ComplexTolerance, PureState4
from fourq_slocc.utils.log import log_event

# |c| below NOISE_FLOOR * unit**weight is rounding noise.
NOISE_FLOOR = 1e-12

GENERIC_CAVEAT = (
    "equal weighted invariants are necessary for SLOCC equivalence and sufficient only for generic states"
)


class VerdictKind(str, Enum):
    INVARIANT_EQUIVALENT = "InvariantEquivalent"
    NOT_EQUIVALENT = "NotEquivalent"
    DEGENERATE_INCONCLUSIVE = "DegenerateInconclusive"


@dataclass(frozen=True)
class EquivalenceVerdict:
    kind: VerdictKind
    lambda_witness: Optional[complex]
    reason: str

    @property
    def equivalent(self) -> bool:
        return self.kind is VerdictKind.INVARIANT_EQUIVALENT


def fingerprint_scale(f: InvariantFingerprint) -> float:
    """s(f) = max(|H|, |L|^(1/2), |M|^(1/2), |Dxt|^(1/3)); rescales like |lambda|."""
    return max(abs(value) ** (1.0 / weight) for _, value, weight in f.items())


def zero_pattern(f: InvariantFingerprint, tol: ComplexTolerance = DEFAULT_TOLERANCE) -> tuple[bool, ...]:
    """Per-component zero flags.

    A component is zero when |c| < abs_tol * s(f)**weight, or when it sits below
    the rounding floor NOISE_FLOOR * f.unit**weight of the state it came from.
    Both thresholds rescale like |lambda|**weight.
    """
    s = fingerprint_scale(f)
    if s == 0.0:
        return (True,) * len(FINGERPRINT_KEYS)
    return tuple(
        abs(value) < max(tol.abs_tol * s**weight, NOISE_FLOOR * f.unit**weight)
        for _, value, weight in f.items()
    )


def _roots(ratio: complex, weight: int) -> list[complex]:
    """All ``weight``-th roots of ``ratio``, principal root first."""
    principal = ratio ** (1.0 / weight) if weight > 1 else ratio
    return [principal * cmath.exp(2j * cmath.pi * k / weight) for k in range(weight)]


def _close(x: complex, y: complex, rel_tol: float) -> bool:
    return abs(x - y) <= rel_tol * max(abs(x), abs(y))


def compare_fingerprints(
    u: InvariantFingerprint,
    v: InvariantFingerprint,
    tol: ComplexTolerance = DEFAULT_TOLERANCE,
) -> EquivalenceVerdict:
    """Look for lambda != 0 with v = (lambda*H, lambda^2*L, lambda^2*M, lambda^3*Dxt) of u."""
    zu = zero_pattern(u, tol)
    zv = zero_pattern(v, tol)
    if zu != zv:
        detail = ", ".join(
            f"{key} {'zero' if a else 'nonzero'} vs {'zero' if b else 'nonzero'}"
            for key, a, b in zip(FINGERPRINT_KEYS, zu, zv)
            if a != b
        )
        return EquivalenceVerdict(
            VerdictKind.NOT_EQUIVALENT,
            None,
            f"zero-pattern mismatch ({detail}); {GENERIC_CAVEAT}",
        )
    if all(zu):
        return EquivalenceVerdict(
            VerdictKind.DEGENERATE_INCONCLUSIVE,
            None,
            f"both fingerprints are all-zero; {GENERIC_CAVEAT}",
        )

    live = [
        (key, a, b, w)
        for (key, a, w), (_, b, _), zero in zip(u.items(), v.items(), zu)
        if not zero
    ]
    key0, a0, b0, w0 = min(live, key=lambda item: item[3])
    for lam in _roots(b0 / a0, w0):
        if all(_close(b, lam**w * a, tol.rel_tol) for _, a, b, w in live):
            return EquivalenceVerdict(
                VerdictKind.INVARIANT_EQUIVALENT,
                complex(lam),
                f"weighted rescaling with lambda fixed by {key0}; {GENERIC_CAVEAT}",
            )
    return EquivalenceVerdict(
        VerdictKind.NOT_EQUIVALENT,
        None,
        f"scale inconsistency: no lambda from {key0} rescales every nonzero component; {GENERIC_CAVEAT}",
    )


def compare_states(
    a: PureState4,
    b: PureState4,
    tol: ComplexTolerance = DEFAULT_TOLERANCE,
) -> EquivalenceVerdict:
    return compare_fingerprints(fingerprint(a), fingerprint(b), tol)


def covariance_predict(f: InvariantFingerprint, det_product: complex) -> InvariantFingerprint:
    d = complex(det_product)
    if d == 0:
        raise ZeroDeterminant("Covariance prediction needs a nonzero determinant product.")
    return InvariantFingerprint(
        H=d * f.H, L=d**2 * f.L, M=d**2 * f.M, Dxt=d**3 * f.Dxt, unit=abs(d) * f.unit
    )


def verify_witness(
    a: PureState4,
    b: PureState4,
    q: LocalOperatorQuartet,
    tol: ComplexTolerance = DEFAULT_TOLERANCE,
) -> bool:
    """True when ``q`` maps ``a`` onto a nonzero multiple of ``b``."""
    image = apply_quartet(q, a).amplitudes
    target = b.amplitudes
    k = int(np.argmax(np.abs(image)))
    if target[k] == 0:
        return False
    scale = image[k] / target[k]
    bound = tol.abs_tol * float(np.abs(image[k]))
    return bool(np.max(np.abs(image - scale * target)) <= bound)


# --- orbit Monte Carlo -----------------------------------------------------


@dataclass(frozen=True)
class InvariantDeviation:
    max_rel_dev: float
    worst_sample: int


@dataclass(frozen=True)
class OrbitInvarianceReport:
    samples: int
    seed: int
    group: str
    invariants: dict[str, InvariantDeviation] = field(default_factory=dict)

    @property
    def max_deviation(self) -> float:
        return max(dev.max_rel_dev for dev in self.invariants.values())


def relative_deviation(x: complex, y: complex, scale: float = 1.0) -> float:
    """|x - y| / max(|x|, |y|).

    When both magnitudes are below NOISE_FLOOR * scale the values are treated as
    zero and the absolute error, in units of ``scale``, is returned instead.
    ``scale`` is the natural size of the quantity (state norms to the degree).
    """
    magnitude = max(abs(x), abs(y))
    if magnitude == 0.0:
        return 0.0
    if magnitude < NOISE_FLOOR * scale:
        return abs(x - y) / scale
    return abs(x - y) / magnitude


def _orbit_sample(args: tuple[PureState4, dict[str, complex], int, int, str]) -> list[float]:
    state, base, seed, index, group = args
    quartet = random_quartet(substream(seed, index), group)
    image = apply_quartet(quartet, state)
    moved = invariant_values(image)
    d = quartet.det_product if group == "gl" else 1.0
    nu = state.norm * image.norm
    devs = []
    for key in INVARIANT_KEYS:
        w = INVARIANT_WEIGHTS[key]
        devs.append(relative_deviation(moved[key], d**w * base[key], nu**w))
    return devs


def orbit_invariance_report(
    state: PureState4,
    samples: int,
    seed: int,
    *,
    group: str = "sl",
    workers: int = 1,
) -> OrbitInvarianceReport:
    """Monte Carlo check that H, L, M, N, Dxt are constant (sl) or covariant (gl) on the orbit.

    Sample ``i`` draws its quartet from ``substream(seed, i)``, so the report
    does not depend on ``workers``.
    """
    if int(samples) < 1:
        raise ValueError(f"samples must be >= 1, got {samples}.")
    group = str(group).strip().lower()
    if group not in ("sl", "gl"):
        raise ValueError(f"Orbit group must be 'sl' or 'gl', got '{group}'.")
    base = invariant_values(state)
    jobs = [(state, base, int(seed), i, group) for i in range(int(samples))]
    if workers > 1:
        with Pool(int(workers)) as pool:
            rows = pool.map(_orbit_sample, jobs)
    else:
        rows = [_orbit_sample(job) for job in jobs]

    table = pd.DataFrame(rows, columns=list(INVARIANT_KEYS))
    worst = table.idxmax()
    peak = table.max()
    invariants = {
        key: InvariantDeviation(max_rel_dev=float(peak[key]), worst_sample=int(worst[key]))
        for key in INVARIANT_KEYS
    }
    report = OrbitInvarianceReport(samples=int(samples), seed=int(seed), group=group, invariants=invariants)
    log_event(
        "equivalence.orbit_invariance_report",
        f"group={group} samples={samples} seed={seed} max_dev={report.max_deviation:.3e}",
    )
    return report
