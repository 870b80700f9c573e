"""End-to-end check of the chi-family claims.

Covers the invariant values of chi, phi_m1 and phi_m2, the two explicit
local-operator identities, the fingerprint verdicts, and the maximally mixed
single-qubit marginals of all three states.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from fourq_slocc.core.catalog import named_state
from fourq_slocc.core.entanglement import max_entanglement_report
from fourq_slocc.core.equivalence import compare_states, verify_witness
from fourq_slocc.core.invariants import FINGERPRINT_KEYS, fingerprint
from fourq_slocc.core.local_ops import apply_quartet, parse_ops
from fourq_slocc.core.state import DEFAULT_TOLERANCE, ComplexTolerance

CHI_FINGERPRINT = (0.0, -1.0 / 16.0, 1.0 / 16.0, 0.0)
VALUE_TOL = 1e-12
WITNESSES = {"phi_m1": "H,H,H,I", "phi_m2": "X,H,H,H"}
CHI_FAMILY = ("chi", "phi_m1", "phi_m2")


@dataclass(frozen=True)
class AuditCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class AuditReport:
    checks: list[AuditCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_payload(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


def _fingerprint_check(name: str) -> AuditCheck:
    values = fingerprint(named_state(name)).values()
    err = max(abs(v - e) for v, e in zip(values, CHI_FINGERPRINT))
    shown = ", ".join(f"{k}={v.real:.6g}{v.imag:+.3g}j" for k, v in zip(FINGERPRINT_KEYS, values))
    return AuditCheck(f"fingerprint:{name}", err <= VALUE_TOL, f"{shown}; max error {err:.3e}")


def _identity_check(target: str, ops: str, tol: ComplexTolerance) -> AuditCheck:
    quartet = parse_ops(ops)
    image = apply_quartet(quartet, named_state("chi"))
    err = float(np.max(np.abs(image.amplitudes - named_state(target).amplitudes)))
    witness = verify_witness(named_state("chi"), named_state(target), quartet, tol)
    return AuditCheck(
        f"identity:{ops}->{target}",
        err <= VALUE_TOL and witness,
        f"max amplitude error {err:.3e}; witness {'accepted' if witness else 'rejected'}",
    )


def _verdict_check(target: str, tol: ComplexTolerance) -> AuditCheck:
    verdict = compare_states(named_state("chi"), named_state(target), tol)
    lam = verdict.lambda_witness
    ok = verdict.equivalent and lam is not None and abs(lam - 1) <= tol.rel_tol
    return AuditCheck(f"verdict:chi~{target}", ok, f"{verdict.kind.value}, lambda={lam}")


def _marginal_check(name: str) -> AuditCheck:
    report = max_entanglement_report(named_state(name))
    shown = ", ".join(f"{q}:{p:.12g}" for q, p in report.single.items())
    return AuditCheck(f"marginals:{name}", report.maximally_mixed_singles, shown)


def chi_family_audit(tol: ComplexTolerance = DEFAULT_TOLERANCE) -> AuditReport:
    checks = [_fingerprint_check(name) for name in CHI_FAMILY]
    checks += [_identity_check(target, ops, tol) for target, ops in WITNESSES.items()]
    checks += [_verdict_check(target, tol) for target in WITNESSES]
    checks += [_marginal_check(name) for name in CHI_FAMILY]
    return AuditReport(checks=checks)
