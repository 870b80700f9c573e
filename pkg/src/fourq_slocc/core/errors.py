"""Named failures raised across the toolkit.

Each class derives from the built-in exception callers would already catch
(``ValueError`` for bad values, ``KeyError`` for unknown names), so code that
only knows the built-ins keeps working.
"""

from __future__ import annotations

from typing import Optional


class FourQubitError(Exception):
    """Base class for every error raised by fourq_slocc."""


class WrongLength(FourQubitError, ValueError):
    pass


class NonFinite(FourQubitError, ValueError):
    pass


class ZeroState(FourQubitError, ValueError):
    pass


class QubitOutOfRange(FourQubitError, ValueError):
    pass


class EmptySubset(FourQubitError, ValueError):
    pass


class SingularOperator(FourQubitError, ValueError):
    pass


class ZeroDeterminant(FourQubitError, ValueError):
    pass


class UnknownGate(FourQubitError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class UnknownName(FourQubitError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class FormatError(FourQubitError, ValueError):
    """Malformed state document; carries the JSON position or offending field."""

    def __init__(
        self,
        message: str,
        *,
        line: Optional[int] = None,
        column: Optional[int] = None,
        field: Optional[str] = None,
    ) -> None:
        self.message = message
        self.line = line
        self.column = column
        self.field = field
        super().__init__(self._render())

    def _render(self) -> str:
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        if self.field:
            where.append(f"field '{self.field}'")
        if not where:
            return self.message
        return f"{self.message} ({', '.join(where)})"
