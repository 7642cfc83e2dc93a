"""Structural roles read off a converged label state: hubs, outliers,
participation intensities, and the assembled structure report."""

from dataclasses import dataclass, field

from .cover import Cover

__all__ = [
    "find_hubs",
    "find_outliers",
    "participation_intensity",
    "participation_intensities",
    "StructureReport",
    "build_report",
]


def find_hubs(state, rule="text"):
    """Nodes bridging communities: holders of at least two labels.

    The printed membership rule reads ">= 1", which would make every node a
    hub; the prose rule ("more than one label") is the default.  `rule`
    chooses: "text" -> >= 2 labels, "formula" -> >= 1 label.
    """
    if rule == "text":
        lo = 2
    elif rule == "formula":
        lo = 1
    else:
        raise ValueError(f"unknown hub rule {rule!r}")
    return {i for i, labs in state.labels.items() if len(labs) >= lo}


def find_outliers(state, graph):
    """Marginally connected nodes whose label never left their neighborhood.

    A node qualifies when it holds exactly one label, has degree <= 2, and
    that label is among the frozen initial labels of itself and its
    neighbors (so the label did not arrive from outside the immediate
    neighborhood).
    """
    out = set()
    initial = state.initial_label
    for i, labs in state.labels.items():
        if len(labs) != 1 or graph.degree(i) > 2:
            continue
        (label,) = labs
        local = {initial[j] for j in graph.neighbors(i)}
        local.add(initial[i])
        if label in local:
            out.add(i)
    return out


def participation_intensity(state, node):
    """Share of the node's influence held by each of its labels (sums to 1)."""
    labs = state.labels[node]
    total = sum(labs.values())
    return {q: v / total for q, v in labs.items()}


def participation_intensities(state):
    return {i: participation_intensity(state, i) for i in sorted(state.labels)}


@dataclass
class StructureReport:
    """Everything the pipeline reports about one graph."""

    best_cover: Cover
    subc_cover: Cover
    hubs: tuple
    outliers: tuple
    intensity: dict
    metrics: dict
    alpha: float
    sweeps: int
    mode: str
    converged: bool = True
    level_sizes: tuple = ()
    level_scores: tuple = ()


def build_report(graph, hierarchy, hub_rule="text"):
    """Assemble the structure report for a detected hierarchy.

    Hubs, outliers and intensities come from the level-0 label state (upper
    levels are disjoint over super-nodes and carry no multi-label nodes), so
    seeded hierarchies, which have no label state, cannot be reported on.
    Pure function of its inputs: rerunning yields identical output.
    """
    from .hierarchy import best_division

    state = hierarchy.base_state
    if state is None:
        raise ValueError("roles need a propagated hierarchy; seeded covers carry no label state")
    best, subc = best_division(hierarchy, graph)
    score_name = "EQ" if hierarchy.mode == "overlapping" else "Q"
    metrics = {
        score_name: hierarchy.scores[hierarchy.best_index],
        f"{score_name}_subc": hierarchy.scores[hierarchy.subc_index],
    }
    return StructureReport(
        best_cover=best,
        subc_cover=subc,
        hubs=tuple(sorted(find_hubs(state, hub_rule))),
        outliers=tuple(sorted(find_outliers(state, graph))),
        intensity=participation_intensities(state),
        metrics=metrics,
        alpha=hierarchy.alpha,
        sweeps=hierarchy.sweeps,
        mode=hierarchy.mode,
        converged=hierarchy.converged,
        level_sizes=tuple(len(level.cover) for level in hierarchy.levels),
        level_scores=tuple(hierarchy.scores),
    )
