import json
import math
from pathlib import Path
from typing import Any, List

from fourq_slocc.core.errors import FormatError, FourQubitError
from fourq_slocc.core.state import BASIS_SIZE, PureState4
from fourq_slocc.utils.log import log_event

STATE_FORMAT = "fourq-state-v1"


def dump_json_text(obj: Any) -> str:
    """Render a document with stable key order and round-trip float text."""
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def complex_pair(value: complex) -> List[float]:
    value = complex(value)
    return [float(value.real), float(value.imag)]


def _parse_number(value: Any, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FormatError(f"Expected a number, got {type(value).__name__}", field=field)
    number = float(value)
    if not math.isfinite(number):
        raise FormatError("Amplitude component is not finite", field=field)
    return number


def extract_amplitudes(obj: Any) -> List[complex]:
    """
    Accepts the fourq-state-v1 object:
      { "format": "fourq-state-v1", "amplitudes": [[re, im], x16] }

    Returns: the 16 amplitudes in basis-index order.
    """
    if not isinstance(obj, dict):
        raise FormatError("State document must be a JSON object")
    fmt = obj.get("format")
    if fmt != STATE_FORMAT:
        raise FormatError(f"Unsupported format {fmt!r}, expected '{STATE_FORMAT}'", field="format")
    raw = obj.get("amplitudes")
    if not isinstance(raw, list):
        raise FormatError("Missing amplitude list", field="amplitudes")
    if len(raw) != BASIS_SIZE:
        raise FormatError(f"Expected {BASIS_SIZE} amplitudes, got {len(raw)}", field="amplitudes")

    out: List[complex] = []
    for k, pair in enumerate(raw):
        field = f"amplitudes[{k}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError("Expected a [re, im] pair", field=field)
        re = _parse_number(pair[0], f"{field}[0]")
        im = _parse_number(pair[1], f"{field}[1]")
        out.append(complex(re, im))
    return out


def parse_state(text: bytes | str) -> PureState4:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"State document is not UTF-8: {exc.reason}") from exc

    def _reject_constant(token: str) -> Any:
        raise FormatError(f"Non-finite literal {token} is not allowed")

    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise FormatError(f"Invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc

    amplitudes = extract_amplitudes(obj)
    try:
        return PureState4(amplitudes)
    except FourQubitError as exc:
        raise FormatError(str(exc), field="amplitudes") from exc


def state_document(state: PureState4) -> dict[str, Any]:
    return {
        "format": STATE_FORMAT,
        "amplitudes": [complex_pair(a) for a in state.amplitudes],
    }


def serialize_state(state: PureState4) -> bytes:
    return dump_json_text(state_document(state)).encode("utf-8")


def load_state_file(path: str | Path) -> PureState4:
    try:
        data = Path(path).read_bytes()
    except OSError:
        log_event("loaders.load_state_file", f"cannot read {path}")
        raise
    try:
        return parse_state(data)
    except FormatError as exc:
        log_event("loaders.load_state_file", f"{path}: {exc}")
        raise


def save_state_file(state: PureState4, path: str | Path) -> None:
    Path(path).write_bytes(serialize_state(state))
