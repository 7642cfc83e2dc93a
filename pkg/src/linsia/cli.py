"""Command-line front end: influence tables, detection, hierarchies, roles,
metrics, and experiment comparison runs."""

import argparse
import json
import sys
from pathlib import Path

from .graph import export_annotated, load_community_file, load_edge_list
from .harness import ExperimentSpec, run_experiment, write_csv
from .hierarchy import best_division, detect_hierarchy
from .influence import build_influence_table
from .metrics import enmi, extended_modularity_eq, modularity_q, nmi
from .pipeline import analyze, report_to_json
from .propagation import OVERLAP_THRESHOLD, propagate

__all__ = ["main"]


def _add_graph_arg(parser):
    parser.add_argument("graph", help="edge list file")
    parser.add_argument(
        "--format", choices=("plain", "lfr"), default="plain", help="edge list format"
    )


def _add_detect_args(parser):
    parser.add_argument("--mode", choices=("disjoint", "overlapping"), default="disjoint")
    parser.add_argument(
        "--init-influence", type=float, default=1.0, help="shared initial label influence"
    )
    parser.add_argument("--max-sweeps", type=int, default=100)
    parser.add_argument(
        "--overlap-threshold",
        type=float,
        default=OVERLAP_THRESHOLD,
        help="keep labels above max*threshold in overlapping mode",
    )


def _load(args):
    return load_edge_list(args.graph, format=args.format)


def _print_json(payload):
    print(json.dumps(payload, indent=2))


def _cmd_influence(args):
    graph = _load(args)
    table = build_influence_table(graph)
    print(json.dumps({"alpha": table.alpha, "r": table.r, "n_prime": table.n_prime}))
    print(f"{'node':>8} {'kshell':>7} {'encoreness':>12} {'influence':>14}")
    for i in range(graph.num_nodes):
        print(
            f"{graph.name_of(i):>8} {table.kshell[i]:>7d} "
            f"{table.encoreness[i]:>12.4f} {table.node_influence[i]:>14.4f}"
        )
    return 0


def _cmd_detect(args):
    graph = _load(args)
    table = build_influence_table(graph)
    state = propagate(
        graph,
        table,
        args.mode,
        max_sweeps=args.max_sweeps,
        initial_influence=args.init_influence,
        overlap_threshold=args.overlap_threshold,
    )
    cover = state.as_cover()
    _print_json(
        {
            "alpha": table.alpha,
            "mode": args.mode,
            "sweeps": state.sweep_count,
            "converged": state.converged,
            "count": len(cover),
            "communities": [list(c) for c in cover.communities],
        }
    )
    return 0


def _cmd_hierarchy(args):
    graph = _load(args)
    seed = None
    if args.seed_cover:
        seed = load_community_file(args.seed_cover, graph)
    hierarchy = detect_hierarchy(
        graph,
        mode=args.mode,
        seed_cover=seed,
        max_sweeps=args.max_sweeps,
        initial_influence=args.init_influence,
        overlap_threshold=args.overlap_threshold,
        freeze_alpha=args.freeze_alpha,
    )
    best, _subc = best_division(hierarchy, graph)
    _print_json(
        {
            "mode": args.mode,
            "levels": [
                {"communities": len(level.cover), "score": score}
                for level, score in zip(hierarchy.levels, hierarchy.scores)
            ],
            "best_index": hierarchy.best_index,
            "subc_index": hierarchy.subc_index,
            "best_communities": [list(c) for c in best.communities],
        }
    )
    if args.emit_levels:
        out = Path(args.emit_levels)
        out.mkdir(parents=True, exist_ok=True)
        for t, level in enumerate(hierarchy.levels):
            (out / f"level_{t}.communities").write_text(level.cover.to_lines(graph))
    return 0


def _cmd_roles(args):
    graph = _load(args)
    report = analyze(
        graph,
        mode=args.mode,
        max_sweeps=args.max_sweeps,
        initial_influence=args.init_influence,
        overlap_threshold=args.overlap_threshold,
        hub_rule=args.hub_rule,
    )
    print(report_to_json(report, indent=2))
    if args.export_graphml:
        Path(args.export_graphml).write_text(export_annotated(graph, report, "graphml"))
    if args.export_dot:
        Path(args.export_dot).write_text(export_annotated(graph, report, "dot"))
    return 0


def _cmd_metrics(args):
    graph = _load(args)
    cover = load_community_file(args.cover, graph)
    truth = load_community_file(args.truth, graph) if args.truth else None
    wanted = [m.strip() for m in args.metrics.split(",")] if args.metrics else None
    if wanted is None:
        wanted = ["eq"] if not cover.is_disjoint else ["q", "eq"]
        if truth is not None:
            wanted.append("enmi")
            if cover.is_disjoint and truth.is_disjoint:
                wanted.append("nmi")
    values = {}
    for metric in wanted:
        if metric == "q":
            values["q"] = modularity_q(graph, cover)
        elif metric == "eq":
            values["eq"] = extended_modularity_eq(graph, cover)
        elif metric == "nmi":
            if truth is None:
                raise SystemExit("nmi needs --truth")
            values["nmi"] = nmi(cover, truth)
        elif metric == "enmi":
            if truth is None:
                raise SystemExit("enmi needs --truth")
            values["enmi"] = enmi(cover, truth)
        else:
            raise SystemExit(f"unknown metric {metric!r}")
    _print_json(values)
    return 0


def _cmd_compare(args):
    spec = ExperimentSpec.from_json(Path(args.spec).read_text())
    rows = run_experiment(spec)
    write_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="linsia",
        description="Influence-weighted label propagation structure analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("influence", help="per-node influence table")
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_influence)

    p = sub.add_parser("detect", help="single-level community detection")
    _add_graph_arg(p)
    _add_detect_args(p)
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("hierarchy", help="multi-level detection")
    _add_graph_arg(p)
    _add_detect_args(p)
    p.add_argument("--seed-cover", help="known community file to coarsen from")
    p.add_argument("--emit-levels", metavar="DIR", help="write one cover file per level")
    p.add_argument("--freeze-alpha", action="store_true", help="reuse the primitive alpha per level")
    p.set_defaults(func=_cmd_hierarchy)

    p = sub.add_parser("roles", help="full report: communities, hubs, outliers")
    _add_graph_arg(p)
    _add_detect_args(p)
    p.add_argument("--hub-rule", choices=("text", "formula"), default="text")
    p.add_argument("--export-graphml", metavar="FILE")
    p.add_argument("--export-dot", metavar="FILE")
    p.set_defaults(func=_cmd_roles)

    p = sub.add_parser("metrics", help="score a cover (optionally against truth)")
    _add_graph_arg(p)
    p.add_argument("--cover", required=True, help="community file to score")
    p.add_argument("--truth", help="ground-truth community file")
    p.add_argument("--metrics", help="comma list from q,eq,nmi,enmi")
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("compare", help="run an experiment spec to CSV")
    p.add_argument("--spec", required=True, help="experiment spec JSON file")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_compare)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
