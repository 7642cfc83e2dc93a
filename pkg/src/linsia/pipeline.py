"""End-to-end analysis: detect, build the hierarchy, extract roles, report."""

import json

from .hierarchy import detect_hierarchy
from .propagation import OVERLAP_THRESHOLD
from .roles import build_report

__all__ = ["analyze", "report_to_json"]


def analyze(
    graph,
    mode="disjoint",
    max_sweeps=100,
    initial_influence=1.0,
    overlap_threshold=OVERLAP_THRESHOLD,
    freeze_alpha=False,
    hub_rule="text",
):
    """Run the full pipeline on a graph and return a StructureReport."""
    hierarchy = detect_hierarchy(
        graph,
        mode=mode,
        max_sweeps=max_sweeps,
        initial_influence=initial_influence,
        overlap_threshold=overlap_threshold,
        freeze_alpha=freeze_alpha,
    )
    return build_report(graph, hierarchy, hub_rule=hub_rule)


def _intensity_items(intensity):
    # Display shape {node: [(label, intensity), ...]}, strongest label first.
    out = {}
    for node in sorted(intensity):
        pairs = sorted(intensity[node].items(), key=lambda kv: (-kv[1], kv[0]))
        out[str(node)] = [[q, v] for q, v in pairs]
    return out


def report_to_json(report, indent=None):
    """Serialize a report deterministically (equal reports, equal bytes)."""
    payload = {
        "mode": report.mode,
        "alpha": report.alpha,
        "sweeps": report.sweeps,
        "converged": report.converged,
        "metrics": {k: report.metrics[k] for k in sorted(report.metrics)},
        "level_sizes": list(report.level_sizes),
        "level_scores": list(report.level_scores),
        "best": {
            "count": len(report.best_cover),
            "communities": [list(c) for c in report.best_cover.communities],
        },
        "subc": {
            "count": len(report.subc_cover),
            "communities": [list(c) for c in report.subc_cover.communities],
        },
        "hubs": list(report.hubs),
        "outliers": list(report.outliers),
        "intensity": _intensity_items(report.intensity),
    }
    return json.dumps(payload, indent=indent, separators=None if indent else (",", ":"))
