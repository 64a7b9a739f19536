"""Exception types shared across the package."""


class VBackboneError(Exception):
    """Base class for all package-specific errors."""


class GenerationExhausted(VBackboneError):
    """Rejection sampling gave up: the spec is likely infeasible
    (e.g. transmission range too small for the requested connectivity)."""


class ParseError(VBackboneError):
    """Malformed input file; carries a line number when available."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedInput(VBackboneError):
    """Operation requires a connected graph."""


class NotBiconnectedInput(VBackboneError):
    """Operation requires a 2-connected graph."""


class TooSmall(VBackboneError):
    """Graph has too few nodes for the requested computation."""


class InfeasibleConnectivity(VBackboneError):
    """The host graph's own vertex connectivity is below the requested
    resilience level, so no dominator set can reach it."""


class InfeasibleGenome(VBackboneError):
    """Genome does not decode to a certified-feasible dominator set."""


class IrreparableGenome(VBackboneError):
    """Repair failed: even the full vertex set is not (m, k)-feasible."""


class TooLarge(VBackboneError):
    """Instance exceeds the exhaustive-search size cap."""


class Infeasible(VBackboneError):
    """No feasible dominator set exists for the instance."""
