# errors.py
"""Exception hierarchy shared by the library and the command line.

Every error carries a machine-readable ``kind`` and the process ``exit_code``
the CLI uses for it: 1 for invalid input, 2 for internal consistency alarms.
"""
from typing import Any, Dict, Optional


class KashaevError(Exception):
    kind = "error"
    exit_code = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"error": self.kind, "message": self.message, "exit_code": self.exit_code}
        if self.details:
            payload["details"] = {key: _jsonable(value) for key, value in self.details.items()}
        return payload


def _jsonable(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


# --- Validation errors (exit code 1) ---

class DiagramError(KashaevError, ValueError):
    kind = "invalid_diagram"


class PDSyntaxError(DiagramError):
    kind = "pd_syntax"

    def __init__(self, message: str, line: Optional[int] = None, **details: Any):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, line=line, **details)


class OrientationError(DiagramError):
    kind = "orientation_inconsistency"


class ColoringError(DiagramError):
    kind = "invalid_coloring"


class MarkError(DiagramError):
    kind = "invalid_mark"


class DisconnectedDiagramError(DiagramError):
    kind = "disconnected_diagram"


class DegenerateMarkError(DiagramError):
    kind = "degenerate_mark"


class VariableMismatchError(KashaevError, ValueError):
    kind = "variable_mismatch"


class PoleError(KashaevError, ArithmeticError):
    kind = "pole"

    def __init__(self, message: str, residual: float):
        super().__init__(message, residual=residual)
        self.residual = residual


class InvalidPointError(KashaevError, ValueError):
    kind = "invalid_point"


class OracleInputError(KashaevError, ValueError):
    kind = "oracle_input"


class ConfigurationError(KashaevError, ValueError):
    kind = "invalid_configuration"


class CommandLineError(KashaevError, ValueError):
    kind = "usage"


# --- Consistency alarms (exit code 2) ---

class ConsistencyAlarm(KashaevError):
    kind = "consistency_alarm"
    exit_code = 2


class NonExactDivisionError(ConsistencyAlarm, ArithmeticError):
    kind = "non_exact_division"


class ParityViolationError(ConsistencyAlarm):
    kind = "parity_violation"


class RouteMismatchError(ConsistencyAlarm):
    kind = "route_mismatch"


class OracleInconclusiveError(ConsistencyAlarm):
    kind = "oracle_inconclusive"
