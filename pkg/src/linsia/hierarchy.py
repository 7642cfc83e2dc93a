"""Bottom-up community hierarchy via weighted super-networks.

Each level coarsens the previous cover: communities become super-nodes,
crossing edges become weighted super-edges, and a disjoint propagation pass
on the super-network decides which communities merge.  Iteration stops when
nothing merges (or one community is left), and the best level is the one
maximizing modularity (disjoint) or extended modularity (overlapping).
"""

from dataclasses import dataclass, field

from .cover import Cover
from .graph import Graph
from .influence import build_influence_table
from .metrics import extended_modularity_eq, modularity_q
from .propagation import OVERLAP_THRESHOLD, propagate

__all__ = [
    "HierarchyLevel",
    "Hierarchy",
    "build_super_network",
    "detect_hierarchy",
    "best_division",
]


@dataclass
class HierarchyLevel:
    """One aggregation level: its primitive cover and, when another level
    was attempted above it, the super-network and the cover found on it."""

    cover: Cover
    super_graph: Graph = None
    super_cover: Cover = None
    alpha: float = None
    sweeps: int = 0


@dataclass
class Hierarchy:
    levels: list
    mode: str
    base_state: object = None  # LabelState of level 0; None for seeded runs
    converged: bool = True
    best_index: int = None
    subc_index: int = None
    scores: list = field(default_factory=list)

    @property
    def alpha(self):
        return self.levels[0].alpha if self.levels else None

    @property
    def sweeps(self):
        return self.levels[0].sweeps if self.levels else 0


def build_super_network(graph, cover):
    """Coarsen `graph` by a cover into a weighted super-network.

    Super-node k stands for community k (in the cover's canonical order).
    A super-edge joins two communities iff some primitive edge crosses them;
    its weight sums a_mn / (len(C_m) * len(C_n)) over crossing (m, n) pairs,
    divided by the number of distinct crossing-edge endpoints in the two
    communities.  Shared-membership pairs contribute once per ordered
    community pairing, which is what the double sum over com_i x com_j says.
    Returns (super_graph, supernode -> community index).
    """
    cover.require_covers(graph)
    membership = cover.membership
    sums = {}
    endpoints = {}
    for m, n, w in graph.edges():
        mk = membership[m]
        nk = membership[n]
        share = w / (len(mk) * len(nk))
        for ci in mk:
            for cj in nk:
                if ci == cj:
                    continue
                key = (ci, cj) if ci < cj else (cj, ci)
                sums[key] = sums.get(key, 0.0) + share
                pts = endpoints.get(key)
                if pts is None:
                    endpoints[key] = {m, n}
                else:
                    pts.add(m)
                    pts.add(n)
    edges = [(i, j, sums[(i, j)] / len(endpoints[(i, j)])) for (i, j) in sorted(sums)]
    return Graph(len(cover), edges), list(range(len(cover)))


def _project(super_cover, base_cover):
    """Map a cover over super-nodes back to primitive nodes."""
    merged = []
    for group in super_cover.communities:
        nodes = set()
        for k in group:
            nodes.update(base_cover.communities[k])
        merged.append(nodes)
    return Cover(merged)


def detect_hierarchy(
    graph,
    mode="disjoint",
    seed_cover=None,
    max_sweeps=100,
    initial_influence=1.0,
    overlap_threshold=OVERLAP_THRESHOLD,
    freeze_alpha=False,
):
    """Build the full aggregation hierarchy of a graph.

    Level 0 comes from propagation on the primitive graph, or from
    `seed_cover` when the community information is already known.  Every
    further level runs disjoint propagation on the super-network and projects
    the result back to primitive nodes.  `freeze_alpha` reuses the primitive
    graph's exponent on every super-network instead of re-adapting it.
    """
    if graph.num_nodes == 0:
        raise ValueError("cannot build a hierarchy over an empty graph")
    base_alpha = None
    base_state = None
    levels = []
    converged = True
    if seed_cover is not None:
        seed_cover.require_covers(graph)
        current = seed_cover
        if freeze_alpha:
            base_alpha = build_influence_table(graph).alpha
        levels.append(HierarchyLevel(cover=current, alpha=base_alpha))
    else:
        table = build_influence_table(graph)
        base_alpha = table.alpha
        base_state = propagate(
            graph,
            table,
            mode,
            max_sweeps=max_sweeps,
            initial_influence=initial_influence,
            overlap_threshold=overlap_threshold,
        )
        converged &= base_state.converged
        current = base_state.as_cover()
        levels.append(
            HierarchyLevel(cover=current, alpha=table.alpha, sweeps=base_state.sweep_count)
        )

    while len(current) > 1:
        level = levels[-1]
        super_graph, _ = build_super_network(graph, current)
        super_table = build_influence_table(
            super_graph, alpha=base_alpha if freeze_alpha else None
        )
        super_state = propagate(
            super_graph,
            super_table,
            "disjoint",
            max_sweeps=max_sweeps,
            initial_influence=initial_influence,
        )
        converged &= super_state.converged
        super_cover = super_state.as_cover()
        level.super_graph = super_graph
        level.super_cover = super_cover
        projected = _project(super_cover, current)
        if projected == current:
            break
        levels.append(
            HierarchyLevel(
                cover=projected, alpha=super_table.alpha, sweeps=super_state.sweep_count
            )
        )
        current = projected

    return Hierarchy(levels=levels, mode=mode, base_state=base_state, converged=converged)


def best_division(hierarchy, graph, mode=None):
    """Score every level and pick the best and sub-best primitive covers.

    Disjoint hierarchies score with modularity, overlapping ones with
    extended modularity.  Best is the argmax (ties prefer the coarser
    level); the sub-best is the strongest level strictly below the best,
    matching the idea of keeping the finer division that nearly won.  A
    single-level hierarchy returns the same cover twice.
    """
    if mode is None:
        mode = hierarchy.mode
    scores = []
    for level in hierarchy.levels:
        if mode == "overlapping":
            scores.append(extended_modularity_eq(graph, level.cover))
        else:
            scores.append(modularity_q(graph, level.cover))
    best = 0
    for t in range(1, len(scores)):
        if scores[t] >= scores[best]:
            best = t
    if best == 0:
        subc = best
    else:
        subc = 0
        for t in range(1, best):
            if scores[t] >= scores[subc]:
                subc = t
    hierarchy.scores = scores
    hierarchy.best_index = best
    hierarchy.subc_index = subc
    return hierarchy.levels[best].cover, hierarchy.levels[subc].cover
