"""Exception types shared across the kernel."""


class KernelError(Exception):
    """Base class for every error raised by ledgerkernel."""


class DomainError(KernelError, ValueError):
    """Argument outside the domain of a real-valued function."""


class IterationLimitError(KernelError):
    def __init__(self, message, last):
        super().__init__(message)
        self.last = last


class ValidationError(KernelError, ValueError):
    """Structurally malformed input (graphs, paths, forests, walks)."""


class TopologyError(KernelError):
    """An edge was referenced that the graph does not contain."""


class DegenerateEventError(KernelError):
    """A posting with zero magnitude, or outside strict-unit mode."""


class LedgerOverflowError(KernelError, OverflowError):
    """A balance left the signed 64-bit range."""


class ReplayError(KernelError):
    def __init__(self, tick, cause):
        super().__init__(f"tick {tick}: {cause}")
        self.tick = tick
        self.cause = cause


class BoundsError(KernelError, IndexError):
    pass


class SizeError(KernelError):
    """Input too large for an exponential-time oracle."""


class ClosureError(KernelError):
    """A flow is not closed; carries the offending cycle and its flux."""

    def __init__(self, cycle, flux):
        path = "->".join(str(u) for u, _ in cycle) + f"->{cycle[0][0]}" if cycle else ""
        super().__init__(f"cycle {path} has flux {flux}")
        self.cycle = cycle
        self.flux = flux


class TraceParseError(KernelError):
    """Parse failure with a 1-based line/column and a stable error code."""

    def __init__(self, line, column, code, message):
        super().__init__(f"{line}:{column}: {code}: {message}")
        self.line = line
        self.column = column
        self.code = code
        self.message = message
