"""Reproduction harness: seeded planted-partition graphs, a classic
stochastic label-propagation baseline, and a small experiment runner that
emits CSV rows for parameter sweeps and repetition studies."""

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field

import numpy as np

from .cover import Cover
from .graph import Graph, load_community_file, load_edge_list
from .metrics import enmi, extended_modularity_eq, modularity_q, nmi
from .pipeline import analyze

__all__ = [
    "planted_partition",
    "baseline_lpa",
    "ExperimentSpec",
    "run_experiment",
    "write_csv",
    "CSV_COLUMNS",
]

CSV_COLUMNS = ("algorithm", "graph", "mode", "metric", "value", "seed", "runtime_ms")

_ALGORITHMS = ("linsia", "lpa")
_METRICS = ("q", "eq", "nmi", "enmi")


def _sample_pair_indices(rng, total, p):
    """Choose each of `total` items independently with probability p.

    Returns a sorted array of chosen indices.  Sampling draws a binomial
    count and then distinct indices, so sparse regimes never materialize the
    full index range.
    """
    if total == 0 or p <= 0.0:
        return np.empty(0, dtype=np.int64)
    if p >= 1.0:
        return np.arange(total, dtype=np.int64)
    count = int(rng.binomial(total, p))
    if count == 0:
        return np.empty(0, dtype=np.int64)
    if count > total // 2:
        return np.sort(rng.permutation(total)[:count]).astype(np.int64)
    chosen = set()
    while len(chosen) < count:
        draw = rng.integers(0, total, size=count - len(chosen))
        chosen.update(int(x) for x in draw)
    return np.array(sorted(chosen), dtype=np.int64)


def _unrank_triangular(indices, size):
    """Decode ranks of pairs (i, j), i < j < size, in lexicographic order."""
    pairs = []
    i = 0
    row_start = 0
    row_len = size - 1
    for k in indices:
        k = int(k)
        while k >= row_start + row_len:
            row_start += row_len
            row_len -= 1
            i += 1
        j = i + 1 + (k - row_start)
        pairs.append((i, j))
    return pairs


def planted_partition(n, communities, p_in, p_out, o_n=0, o_m=2, seed=0):
    """Equal-size planted blocks with optional overlapping memberships.

    Within-block pairs connect with p_in, cross-block pairs with p_out.
    `o_n` nodes additionally join `o_m - 1` extra blocks in the ground
    truth, realized by wiring them to the extra blocks' members at p_in.
    Fully determined by `seed`.  Returns (graph, ground_truth_cover).
    """
    if communities < 1:
        raise ValueError("communities must be >= 1")
    if n < communities or n % communities != 0:
        raise ValueError(f"n={n} does not split into {communities} equal non-empty blocks")
    for name, p in (("p_in", p_in), ("p_out", p_out)):
        if not (0.0 <= p <= 1.0):
            raise ValueError(f"{name}={p} outside [0, 1]")
    if o_n < 0 or o_n > n:
        raise ValueError(f"o_n={o_n} outside 0..{n}")
    if o_n > 0 and not (2 <= o_m <= communities):
        raise ValueError(f"o_m={o_m} must be in 2..{communities} when o_n > 0")

    rng = np.random.default_rng(seed)
    size = n // communities
    blocks = [list(range(b * size, (b + 1) * size)) for b in range(communities)]

    extra_members = {b: [] for b in range(communities)}
    if o_n > 0:
        overlap_nodes = sorted(int(x) for x in rng.choice(n, size=o_n, replace=False))
        for v in overlap_nodes:
            home = v // size
            others = [b for b in range(communities) if b != home]
            picked = rng.choice(len(others), size=o_m - 1, replace=False)
            for k in sorted(int(x) for x in picked):
                extra_members[others[k]].append(v)

    edges = set()
    for b in range(communities):
        members = blocks[b]
        idx = _sample_pair_indices(rng, size * (size - 1) // 2, p_in)
        for i, j in _unrank_triangular(idx, size):
            edges.add((members[i], members[j]))
    for a in range(communities):
        for b in range(a + 1, communities):
            idx = _sample_pair_indices(rng, size * size, p_out)
            base_a = blocks[a][0]
            base_b = blocks[b][0]
            for k in idx:
                k = int(k)
                edges.add((base_a + k // size, base_b + k % size))
    for b in range(communities):
        for v in extra_members[b]:
            idx = _sample_pair_indices(rng, size, p_in)
            for k in idx:
                u = blocks[b][int(k)]
                if u != v:
                    edges.add((v, u) if v < u else (u, v))

    graph = Graph(n, ((u, v, 1.0) for u, v in sorted(edges)))
    truth = Cover(
        [set(blocks[b]) | set(extra_members[b]) for b in range(communities)]
    )
    return graph, truth


def baseline_lpa(graph, seed=0, max_sweeps=100):
    """Classic asynchronous majority-vote label propagation.

    Random update order each sweep and uniform random tie-breaks, so results
    vary with the seed (by design: it is the stochastic comparison
    baseline).  Returns a disjoint cover.
    """
    rng = random.Random(seed)
    n = graph.num_nodes
    labels = list(range(n))
    nodes = list(range(n))
    for _ in range(max_sweeps):
        rng.shuffle(nodes)
        changed = False
        for i in nodes:
            counts = {}
            for j in graph.neighbors(i):
                lab = labels[j]
                counts[lab] = counts.get(lab, 0) + 1
            if not counts:
                continue
            top = max(counts.values())
            best = sorted(lab for lab, c in counts.items() if c == top)
            if labels[i] in best:
                continue
            labels[i] = best[rng.randrange(len(best))] if len(best) > 1 else best[0]
            changed = True
        if not changed:
            break
    return Cover.from_labels({i: labels[i] for i in range(n)})


@dataclass
class ExperimentSpec:
    """One experiment: a graph source, an algorithm, metrics, repetitions.

    `graph_file`/`graph_format`/`truth_file` name an on-disk network, or
    `generator` gives planted_partition keyword arguments (the generator is
    always seeded with the spec seed, so repetitions rerun the algorithm on
    the same graph).  `sweep` optionally varies one generator parameter over
    several values.
    """

    algorithm: str = "linsia"
    mode: str = "disjoint"
    metrics: tuple = ("nmi",)
    repetitions: int = 1
    seed: int = 0
    graph_file: str = None
    graph_format: str = "plain"
    truth_file: str = None
    generator: dict = None
    sweep: dict = None
    name: str = None

    @classmethod
    def from_json(cls, text):
        raw = json.loads(text)
        metrics = tuple(raw.pop("metrics", ("nmi",)))
        return cls(metrics=metrics, **raw)

    def validate(self):
        if self.algorithm not in _ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; expected one of {_ALGORITHMS}")
        for metric in self.metrics:
            if metric not in _METRICS:
                raise ValueError(f"unknown metric {metric!r}; expected one of {_METRICS}")
        if self.mode not in ("disjoint", "overlapping"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if (self.graph_file is None) == (self.generator is None):
            raise ValueError("spec needs exactly one of graph_file or generator")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.sweep is not None:
            if self.generator is None:
                raise ValueError("sweep requires a generator spec")
            if set(self.sweep) != {"param", "values"}:
                raise ValueError("sweep needs exactly the keys 'param' and 'values'")
        needs_truth = any(m in ("nmi", "enmi") for m in self.metrics)
        if needs_truth and self.generator is None and self.truth_file is None:
            raise ValueError("nmi/enmi need a ground-truth cover (truth_file or generator)")


def _spec_graph(spec, sweep_value=None):
    if spec.graph_file is not None:
        graph = load_edge_list(spec.graph_file, format=spec.graph_format)
        truth = load_community_file(spec.truth_file, graph) if spec.truth_file else None
        return graph, truth, spec.name or str(spec.graph_file)
    params = dict(spec.generator)
    if sweep_value is not None:
        params[spec.sweep["param"]] = sweep_value
    params.setdefault("seed", spec.seed)
    graph, truth = planted_partition(**params)
    desc = ",".join(f"{k}={params[k]}" for k in sorted(params))
    return graph, truth, spec.name or f"planted({desc})"


def _detect(spec, graph, rep_seed):
    start = time.monotonic()
    if spec.algorithm == "linsia":
        cover = analyze(graph, mode=spec.mode).best_cover
    else:
        cover = baseline_lpa(graph, seed=rep_seed)
    runtime_ms = (time.monotonic() - start) * 1000.0
    return cover, runtime_ms


def _evaluate(metric, graph, cover, truth):
    if metric == "q":
        return modularity_q(graph, cover)
    if metric == "eq":
        return extended_modularity_eq(graph, cover)
    if metric == "nmi":
        return nmi(cover, truth)
    return enmi(cover, truth)


def run_experiment(spec):
    """Run a validated spec and return result rows (dicts, CSV_COLUMNS keys)."""
    spec.validate()
    sweep_values = sorted(spec.sweep["values"]) if spec.sweep else [None]
    rows = []
    for value in sweep_values:
        graph, truth, name = _spec_graph(spec, value)
        if value is not None:
            name = f"{name}[{spec.sweep['param']}={value}]"
        for rep in range(spec.repetitions):
            rep_seed = spec.seed + rep
            cover, runtime_ms = _detect(spec, graph, rep_seed)
            for metric in spec.metrics:
                rows.append(
                    {
                        "algorithm": spec.algorithm,
                        "graph": name,
                        "mode": spec.mode,
                        "metric": metric,
                        "value": _evaluate(metric, graph, cover, truth),
                        "seed": rep_seed,
                        "runtime_ms": runtime_ms,
                    }
                )
    return rows


def write_csv(rows, out):
    """Write result rows with the fixed column set to a path or file object."""
    own = isinstance(out, (str, bytes)) or hasattr(out, "__fspath__")
    fh = open(out, "w", newline="", encoding="utf-8") if own else out
    try:
        writer = csv.DictWriter(fh, fieldnames=list(CSV_COLUMNS))
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    finally:
        if own:
            fh.close()
