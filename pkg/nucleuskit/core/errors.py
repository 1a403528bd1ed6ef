"""
Error hierarchy shared by every NucleusKit subsystem.

Each error carries the process exit code the command line maps it to:
0 pass, 1 verification failure, 2 input error, 3 resource cap.
"""

from typing import Any, Dict, Optional


class NucleusKitError(Exception):
    """Base class for all NucleusKit errors"""

    exit_code = 1

    def to_dict(self) -> Dict[str, Any]:
        return {"error": type(self).__name__, "message": str(self)}


class InputError(NucleusKitError):
    """Malformed or out-of-range input"""

    exit_code = 2


class ParseError(InputError):
    """Input text could not be parsed"""

    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<input>"):
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{source}:{line}:{column}: {message}")

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({"line": self.line, "column": self.column})
        return data


class LawViolation(InputError):
    """An axiom, functor law or naturality square fails on user data"""

    def __init__(self, law: str, detail: str = "", witness: Optional[Dict[str, Any]] = None):
        self.law = law
        self.witness = witness or {}
        message = f"{law} violated"
        if detail:
            message += f": {detail}"
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({"law": self.law, "witness": self.witness})
        return data


class ContractViolation(InputError):
    """A precondition on an operation argument does not hold"""


class ConfigurationError(InputError):
    """Caps, tolerances or sub-carriers are unusable"""


class UnknownSuiteError(InputError):
    """Requested verification suite does not exist"""


class CapExceeded(NucleusKitError):
    """An enumeration or set size crossed its configured limit"""

    exit_code = 3

    def __init__(self, point: str, size: int, limit: int):
        self.point = point
        self.size = size
        self.limit = limit
        super().__init__(f"cap exceeded at {point}: {size} > {limit}")

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({"point": self.point, "size": self.size, "limit": self.limit})
        return data


class NonConvergence(CapExceeded):
    """A fixpoint iteration did not settle within the iteration cap"""

    def __init__(self, point: str, iterations: int, residual: float):
        self.residual = residual
        super().__init__(point, iterations, iterations)
        self.args = (f"no fixpoint at {point} after {iterations} iterations "
                     f"(last change {residual:.3e})",)


class VerificationFailure(NucleusKitError):
    """A verification report contains failing claims"""

    exit_code = 1


class InternalLawError(NucleusKitError):
    """A constructed object violates its own laws"""

    exit_code = 1
