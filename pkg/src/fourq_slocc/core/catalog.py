"""Named fixture states, written as exact amplitude expressions."""

from __future__ import annotations

import math
from dataclasses import dataclass

from fourq_slocc.core.errors import UnknownName
from fourq_slocc.core.state import PureState4, state_from_terms

_HALF = 0.5
_CHI = 1.0 / (2.0 * math.sqrt(2.0))
_ROOT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class NamedState:
    name: str
    state: PureState4
    provenance: str


def _entry(name: str, terms: dict[str, float], provenance: str) -> NamedState:
    return NamedState(name=name, state=state_from_terms(terms), provenance=provenance)


_CATALOG: dict[str, NamedState] = {
    entry.name: entry
    for entry in (
        _entry(
            "chi",
            {
                "0000": _CHI, "0011": -_CHI, "0101": -_CHI, "0110": _CHI,
                "1001": _CHI, "1010": _CHI, "1100": _CHI, "1111": _CHI,
            },
            "chi state: (|0000>-|0011>-|0101>+|0110>+|1001>+|1010>+|1100>+|1111>)/(2*sqrt 2)",
        ),
        _entry(
            "phi_m1",
            {"0000": _HALF, "0111": _HALF, "1001": -_HALF, "1110": _HALF},
            "simple chi-equivalent form: (|0000>+|0111>-|1001>+|1110>)/2",
        ),
        _entry(
            "phi_m2",
            {"0000": _HALF, "0111": -_HALF, "1001": _HALF, "1110": _HALF},
            "simple chi-equivalent form: (|0000>-|0111>+|1001>+|1110>)/2",
        ),
        _entry(
            "ghz4",
            {"0000": _ROOT_HALF, "1111": _ROOT_HALF},
            "contrast state: (|0000>+|1111>)/sqrt 2",
        ),
        _entry(
            "w4",
            {"0001": _HALF, "0010": _HALF, "0100": _HALF, "1000": _HALF},
            "contrast state: (|0001>+|0010>+|0100>+|1000>)/2",
        ),
        _entry(
            "cluster4",
            {"0000": _HALF, "0011": _HALF, "1100": _HALF, "1111": -_HALF},
            "contrast state: (|0000>+|0011>+|1100>-|1111>)/2",
        ),
        _entry("zero_ket", {"0000": 1.0}, "computational basis ket |0000>"),
    )
}


def catalog_names() -> list[str]:
    return list(_CATALOG)


def catalog_entry(name: str) -> NamedState:
    key = str(name).strip().lower()
    if key not in _CATALOG:
        raise UnknownName(f"Unknown state '{name}'; known: {', '.join(_CATALOG)}.")
    return _CATALOG[key]


def named_state(name: str) -> PureState4:
    return catalog_entry(name).state
