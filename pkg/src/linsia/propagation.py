"""The label-propagation engine.

Every node starts with a unique label; sweeps walk nodes in ascending node
influence (periphery first, so weakly connected nodes can keep their own
label instead of being overrun by the cores) and update labels
asynchronously from the vote mass of neighboring labels.  Disjoint mode
keeps the single strongest label; overlapping mode keeps every label within
the same order of magnitude as the strongest.
"""

from dataclasses import dataclass, field

__all__ = [
    "OVERLAP_THRESHOLD",
    "LabelState",
    "init_labels",
    "label_influences",
    "select_labels",
    "propagate",
]

# A label survives overlapping selection when its influence exceeds the
# maximum times this ratio (same decade on a thirded log10 scale).
OVERLAP_THRESHOLD = 10.0 ** (-1.0 / 3.0)


@dataclass
class LabelState:
    """Per-node label -> influence maps plus the frozen initial labels.

    Inner maps are kept in ascending-label order and all stored influences
    are strictly positive.  `initial_label` never changes after init; the
    outlier rule needs it.
    """

    labels: dict
    initial_label: dict
    mode: str
    sweep_count: int = 0
    converged: bool = False
    initial_influence: float = 1.0

    def label_set(self, node):
        return set(self.labels[node])

    def as_cover(self):
        from .cover import Cover

        groups = {}
        for node, labs in self.labels.items():
            for q in labs:
                groups.setdefault(q, set()).add(node)
        return Cover(groups[q] for q in sorted(groups))


def init_labels(graph, initial_influence=1.0, mode="disjoint"):
    """Give node i the unique label i with the shared initial influence."""
    if not (initial_influence > 0.0):
        raise ValueError(f"initial influence must be positive, got {initial_influence}")
    if mode not in ("disjoint", "overlapping"):
        raise ValueError(f"unknown mode {mode!r}")
    influence = float(initial_influence)
    return LabelState(
        labels={i: {i: influence} for i in range(graph.num_nodes)},
        initial_label={i: i for i in range(graph.num_nodes)},
        mode=mode,
        initial_influence=influence,
    )


def label_influences(state, node, influence, graph, _factors=None):
    """Vote mass for every candidate label at `node`.

    Candidates are the union of the neighbors' label sets.  A neighbor j
    holding label q with share rho contributes NI(j)/degree(j)**alpha * rho
    * w_ij to q.  Reads the current state, so earlier updates in the same
    sweep are already visible.  Isolated nodes get an empty map.
    """
    li = {}
    nbrs, wts = graph.adjacency(node)
    if _factors is None:
        ni = influence.node_influence
        alpha = influence.alpha
        for j, w in zip(nbrs, wts):
            jl = state.labels[j]
            f = ni[j] / (graph.degree(j) ** alpha) * w / sum(jl.values())
            for q, v in jl.items():
                li[q] = li.get(q, 0.0) + f * v
    else:
        for j, w in zip(nbrs, wts):
            jl = state.labels[j]
            f = _factors[j] * w / sum(jl.values())
            for q, v in jl.items():
                li[q] = li.get(q, 0.0) + f * v
    return li


def select_labels(li, mode, current, overlap_threshold=OVERLAP_THRESHOLD):
    """Pick the node's new label set from its candidate influences.

    Disjoint: the single argmax (ties prefer a currently held label, then
    the smallest label id).  Overlapping: every label above max * threshold,
    always including the argmax.  Empty candidates leave `current` as is.
    """
    if not li:
        return set(current)
    mx = max(li.values())
    if mode == "disjoint":
        tied = [q for q in sorted(li) if li[q] == mx]
        for q in tied:
            if q in current:
                return {q}
        return {tied[0]}
    bound = mx * overlap_threshold
    selected = {q for q, v in li.items() if v > bound}
    selected.update(q for q, v in li.items() if v == mx)
    return selected


def propagate(
    graph,
    influence,
    mode="disjoint",
    max_sweeps=100,
    initial_influence=1.0,
    overlap_threshold=OVERLAP_THRESHOLD,
):
    """Run full sweeps until no node's label set changes (or the cap).

    The sweep order (ascending node influence, ties by node id) is fixed
    before the first sweep.  Updates are asynchronous.  On each update the
    selected labels are stored with their vote masses rescaled to preserve
    the node's total influence, so only ratios ever matter downstream.
    Hitting the sweep cap returns the state with converged=False rather
    than raising.
    """
    if max_sweeps < 1:
        raise ValueError("max_sweeps must be at least 1")
    state = init_labels(graph, initial_influence, mode)
    ni = influence.node_influence
    alpha = influence.alpha
    n = graph.num_nodes
    order = sorted(range(n), key=lambda i: (ni[i], i))
    factors = [
        ni[j] / (graph.degree(j) ** alpha) if graph.degree(j) > 0 else 0.0 for j in range(n)
    ]
    labels = state.labels
    adjacency = graph.adjacency

    for sweep in range(1, max_sweeps + 1):
        changed = False
        for i in order:
            li = {}
            nbrs, wts = adjacency(i)
            for j, w in zip(nbrs, wts):
                jl = labels[j]
                if len(jl) == 1:
                    # Hot path for disjoint sweeps; the float ops mirror the
                    # general branch exactly (sum of one value is that value).
                    ((q, v),) = jl.items()
                    li[q] = li.get(q, 0.0) + factors[j] * w / v * v
                else:
                    f = factors[j] * w / sum(jl.values())
                    for q, v in jl.items():
                        li[q] = li.get(q, 0.0) + f * v
            if not li:
                continue
            cur = labels[i]
            new = select_labels(li, mode, cur, overlap_threshold)
            if new != cur.keys():
                changed = True
            total = sum(cur.values())
            picked = sorted(new)
            scale = total / sum(li[q] for q in picked)
            labels[i] = {q: li[q] * scale for q in picked}
        state.sweep_count = sweep
        if not changed:
            state.converged = True
            break
    return state
