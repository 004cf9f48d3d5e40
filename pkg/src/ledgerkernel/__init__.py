"""Deterministic verification kernel for quantized double-entry ledgers on graphs."""
from .cost import (
    bal,
    calibration_ratio,
    composition_residual,
    eval_cost,
    exists,
    fixed_point_phi,
    log_lift,
)
from .errors import (
    BoundsError,
    ClosureError,
    DegenerateEventError,
    DomainError,
    IterationLimitError,
    KernelError,
    LedgerOverflowError,
    ReplayError,
    SizeError,
    TopologyError,
    TraceParseError,
    ValidationError,
)
from .flows import (
    ClosureReport,
    EdgeFlow,
    Window,
    accumulate,
    check_cycle_closure,
    check_path_independence_bruteforce,
    cycle_flux,
    path_sum,
)
from .graph import (
    CycleBasis,
    RecognitionGraph,
    SpanningForest,
    build_graph,
    components,
    fundamental_cycles,
    spanning_forest,
)
from .ledger import (
    EMPTY,
    Empty,
    LedgerState,
    Post,
    Quantum,
    Trace,
    apply_tick,
    make_trace,
    per_tick_increment,
    replay,
    total_balance,
)
from .potential import Potential, differ_by_constant, gradient, solve_potential
from .scheduler import (
    Walk,
    WalkReport,
    dimension_scan,
    gray_code,
    gray_cycle,
    minimal_period,
    validate_walk,
    walk_to_trace,
)
from .traceio import emit_flow, emit_trace, emit_walk, parse_flow, parse_trace, parse_walk

__version__ = "0.1.0"
