"""Hierarchical physically feasible decomposition of block models and
assembly instruction generation."""

from .decomposition import (
    Ccg,
    CycleFound,
    Digraph,
    EdgeNotInDirection,
    EmptyRemoval,
    MaxPfdResult,
    WorkMeter,
    build_ccg,
    condense,
    is_2pfd,
    is_pfd,
    max_pfd,
    physically_removable_edges,
    project_along,
    strongly_connected_components,
    topological_order,
)
from .hierarchy import (
    BinaryPfdTree,
    NotADag,
    PfdTree,
    StuckComponent,
    TreeStats,
    h_max_pfd,
    kpfd_binary_tree,
    tree_stats,
)
from .instructions import (
    AssemblyStep,
    IncompleteTree,
    InstructionPlan,
    emit_plan,
    postorder,
    render_plan,
)
from .model import (
    Block,
    Connection,
    Diagnostic,
    Direction,
    ModelError,
    ModelGraph,
    canonicalize,
    partition_edges,
    validate_model,
    weak_components,
)
from .modelfile import ParseError, dump_model, load_model

__version__ = "0.1.0"
