"""Influence-weighted label propagation for integrated network structure
analysis: hierarchical and overlapping communities, hubs, and outliers."""

from .cover import Cover
from .graph import Graph, export_annotated, load_community_file, load_edge_list
from .harness import ExperimentSpec, baseline_lpa, planted_partition, run_experiment
from .hierarchy import Hierarchy, best_division, build_super_network, detect_hierarchy
from .influence import (
    InfluenceTable,
    adaptive_alpha,
    build_influence_table,
    encoreness,
    kshell_decomposition,
    neighborhood_coreness,
    node_influence,
)
from .metrics import enmi, extended_modularity_eq, modularity_q, nmi
from .pipeline import analyze, report_to_json
from .propagation import (
    OVERLAP_THRESHOLD,
    LabelState,
    init_labels,
    label_influences,
    propagate,
    select_labels,
)
from .roles import (
    StructureReport,
    build_report,
    find_hubs,
    find_outliers,
    participation_intensities,
    participation_intensity,
)

__version__ = "0.1.0"

__all__ = [
    "Cover",
    "Graph",
    "load_edge_list",
    "load_community_file",
    "export_annotated",
    "kshell_decomposition",
    "neighborhood_coreness",
    "encoreness",
    "node_influence",
    "adaptive_alpha",
    "InfluenceTable",
    "build_influence_table",
    "OVERLAP_THRESHOLD",
    "LabelState",
    "init_labels",
    "label_influences",
    "select_labels",
    "propagate",
    "Hierarchy",
    "build_super_network",
    "detect_hierarchy",
    "best_division",
    "find_hubs",
    "find_outliers",
    "participation_intensity",
    "participation_intensities",
    "StructureReport",
    "build_report",
    "analyze",
    "report_to_json",
    "modularity_q",
    "extended_modularity_eq",
    "nmi",
    "enmi",
    "planted_partition",
    "baseline_lpa",
    "ExperimentSpec",
    "run_experiment",
    "__version__",
]
