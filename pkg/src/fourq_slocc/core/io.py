from __future__ import annotations

from pathlib import Path
from typing import Any, Optional

from fourq_slocc.core.entanglement import EntanglementReport
from fourq_slocc.core.equivalence import EquivalenceVerdict, OrbitInvarianceReport
from fourq_slocc.core.invariants import InvariantFingerprint
from fourq_slocc.data.loaders import complex_pair, dump_json_text

NAMED_INVARIANT_KEY = "N3"


def build_fingerprint_payload(f: InvariantFingerprint, n_value: Optional[complex] = None) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "H": complex_pair(f.H),
        "L": complex_pair(f.L),
        "M": complex_pair(f.M),
        "Dxt": complex_pair(f.Dxt),
    }
    if n_value is not None:
        payload[NAMED_INVARIANT_KEY] = complex_pair(n_value)
    return payload


def build_verdict_payload(verdict: EquivalenceVerdict) -> dict[str, Any]:
    lam = verdict.lambda_witness
    return {
        "kind": verdict.kind.value,
        "lambda": complex_pair(lam) if lam is not None else None,
        "reason": verdict.reason,
    }


def build_orbit_payload(report: OrbitInvarianceReport) -> dict[str, Any]:
    return {
        "samples": report.samples,
        "seed": report.seed,
        "group": report.group,
        "invariants": {
            key: {"max_rel_dev": dev.max_rel_dev, "worst_sample": dev.worst_sample}
            for key, dev in report.invariants.items()
        },
    }


def build_entanglement_payload(report: EntanglementReport) -> dict[str, Any]:
    return {
        "single": dict(report.single),
        "pairs": dict(report.pairs),
        "maximally_mixed_singles": report.maximally_mixed_singles,
    }


def write_payload(payload: Any, path: Optional[str | Path] = None) -> str:
    """Render a payload; also write it to ``path`` when given."""
    text = dump_json_text(payload)
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    return text
