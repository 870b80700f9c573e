import sys
import traceback
from datetime import datetime
from pathlib import Path
from typing import Any, Optional, TextIO

# None means standard error; stdout is reserved for the JSON document.
_LOG_PATH: Optional[Path] = None


def configure_log(path: Optional[Path | str]) -> None:
    """Send diagnostics to an append-mode file, or back to stderr with None."""
    global _LOG_PATH
    _LOG_PATH = Path(path) if path else None


def _safe_text(value: Any, max_len: int = 800) -> str:
    try:
        text = str(value)
    except Exception:
        text = repr(value)
    text = text.replace("\r", "\\r").replace("\n", "\\n")
    if len(text) > max_len:
        return text[: max_len - 3] + "..."
    return text


def _write(chunk: str, log_path: Optional[Path]) -> None:
    target = log_path if log_path is not None else _LOG_PATH
    if target is None:
        stream: TextIO = sys.stderr
        stream.write(chunk)
        stream.flush()
        return
    with open(target, "a", encoding="utf-8") as f:
        f.write(chunk)


def log_event(context: str, message: str, log_path: Optional[Path] = None) -> None:
    """Append a concise single-line diagnostic event."""
    try:
        _write(f"{datetime.now().isoformat()}  |  {context}  |  {_safe_text(message)}\n", log_path)
    except Exception:
        pass


def log_exception(context: str, log_path: Optional[Path] = None) -> None:
    """Append the current exception traceback."""
    try:
        chunk = "\n" + "=" * 80 + "\n" + f"{datetime.now().isoformat()}  |  {context}\n"
        chunk += traceback.format_exc()
        _write(chunk, log_path)
    except Exception:
        # Never crash the tool due to logging failures
        pass
