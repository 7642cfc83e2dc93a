"""Undirected weighted simple graphs and the file formats used around them.

The graph is the substrate every other module reads: dense integer node ids,
symmetric weighted adjacency, and no self-loops or parallel edges.  Input
files may name nodes with arbitrary tokens; the original tokens are kept as
aliases so community files and exports can refer back to them.
"""

import io
import os
from xml.etree import ElementTree
from xml.sax.saxutils import quoteattr

from .cover import Cover

__all__ = [
    "Graph",
    "load_edge_list",
    "load_community_file",
    "export_annotated",
]


class Graph:
    """Immutable undirected weighted simple graph with node ids 0..n-1.

    Duplicate edges passed to the constructor are merged by summing their
    weights, which is deterministic and order-independent.  Self-loops and
    non-positive weights are rejected outright so violations surface at
    construction time.  degree(i) is the neighbor count, not a weighted sum;
    weights only enter algorithms through explicit per-edge factors.
    """

    __slots__ = ("_n", "_nbrs", "_wts", "_m", "aliases", "_alias_to_id")

    def __init__(self, num_nodes, edges=(), aliases=None):
        if num_nodes < 0:
            raise ValueError("num_nodes must be non-negative")
        merged = {}
        for item in edges:
            if len(item) == 2:
                u, v = item
                w = 1.0
            else:
                u, v, w = item
            u = int(u)
            v = int(v)
            w = float(w)
            if u == v:
                raise ValueError(f"self-loop on node {u} rejected")
            if not (0 <= u < num_nodes and 0 <= v < num_nodes):
                raise ValueError(f"edge ({u}, {v}) outside node range 0..{num_nodes - 1}")
            if not (w > 0.0):
                raise ValueError(f"edge ({u}, {v}) has non-positive weight {w}")
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, 0.0) + w

        nbrs = [[] for _ in range(num_nodes)]
        wts = [[] for _ in range(num_nodes)]
        for (u, v) in sorted(merged):
            w = merged[(u, v)]
            nbrs[u].append(v)
            nbrs[v].append(u)
            wts[u].append(w)
            wts[v].append(w)
        # Freeze adjacency in ascending-neighbor order; all per-node sums in
        # the algorithms rely on this order for bit-identical results.
        order = [sorted(range(len(nbrs[i])), key=nbrs[i].__getitem__) for i in range(num_nodes)]
        self._nbrs = tuple(tuple(nbrs[i][k] for k in order[i]) for i in range(num_nodes))
        self._wts = tuple(tuple(wts[i][k] for k in order[i]) for i in range(num_nodes))
        self._n = num_nodes
        self._m = len(merged)
        if aliases is not None:
            aliases = tuple(str(a) for a in aliases)
            if len(aliases) != num_nodes:
                raise ValueError("aliases must have one entry per node")
        self.aliases = aliases
        self._alias_to_id = None

    @property
    def num_nodes(self):
        return self._n

    @property
    def num_edges(self):
        return self._m

    def __len__(self):
        return self._n

    def degree(self, i):
        return len(self._nbrs[i])

    def neighbors(self, i):
        return self._nbrs[i]

    def adjacency(self, i):
        """Neighbor ids and weights of node i as two parallel tuples."""
        return self._nbrs[i], self._wts[i]

    def has_edge(self, i, j):
        return j in self._nbrs[i]

    def weight(self, i, j):
        nbrs = self._nbrs[i]
        try:
            k = nbrs.index(j)
        except ValueError:
            raise KeyError(f"no edge ({i}, {j})") from None
        return self._wts[i][k]

    def edges(self):
        """Iterate undirected edges as (i, j, w) with i < j, ascending."""
        for i in range(self._n):
            nbrs, wts = self._nbrs[i], self._wts[i]
            for j, w in zip(nbrs, wts):
                if i < j:
                    yield i, j, w

    def name_of(self, i):
        return self.aliases[i] if self.aliases is not None else str(i)

    def id_of(self, token):
        """Resolve an input-file node token back to its dense id."""
        if self._alias_to_id is None:
            if self.aliases is None:
                self._alias_to_id = {str(i): i for i in range(self._n)}
            else:
                self._alias_to_id = {a: i for i, a in enumerate(self.aliases)}
        return self._alias_to_id[token]

    def to_edge_list(self):
        """Render the graph as plain `u v w` lines (loadable back)."""
        lines = []
        for i, j, w in self.edges():
            lines.append(f"{self.name_of(i)} {self.name_of(j)} {w!r}")
        return "\n".join(lines) + ("\n" if lines else "")

    def __repr__(self):
        return f"Graph(num_nodes={self._n}, num_edges={self._m})"


def _open_lines(source):
    """Yield (line_number, line) from a path, file object, or line iterable."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8") as fh:
            for k, line in enumerate(fh, 1):
                yield k, line
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        for k, line in enumerate(source, 1):
            yield k, line
    else:
        for k, line in enumerate(source, 1):
            yield k, line


def _assign_ids(tokens):
    """Map node tokens to dense ids 0..n-1.

    All-integer token sets sort numerically (so LFR's 1..n stays in order);
    anything else sorts lexicographically.  Aliases are dropped when the
    tokens already are exactly 0..n-1.
    """
    try:
        ordered = sorted(tokens, key=lambda t: int(t))
        numeric = True
    except ValueError:
        ordered = sorted(tokens)
        numeric = False
    ids = {tok: i for i, tok in enumerate(ordered)}
    if numeric and all(int(tok) == i for tok, i in ids.items()):
        return ids, None
    return ids, tuple(ordered)


def load_edge_list(source, format="plain"):
    """Parse an edge-list file into a Graph.

    `plain` lines are `u v [w]`, whitespace separated, `#` starting a comment
    line; duplicate edges merge by summing weights.  `lfr` is the network.dat
    convention: tab-separated directed duplicates of every undirected edge,
    collapsed on load (summing would double every weight, so duplicates must
    agree and are kept once).
    """
    if format not in ("plain", "lfr"):
        raise ValueError(f"unknown edge list format {format!r}")
    raw = []
    tokens = set()
    for lineno, line in _open_lines(source):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 'u v [w]', got {text!r}")
        u, v = parts[0], parts[1]
        if len(parts) == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise ValueError(f"line {lineno}: bad weight {parts[2]!r}") from None
        else:
            w = 1.0
        if w <= 0.0 or w != w:
            raise ValueError(f"line {lineno}: non-positive weight {w}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop on {u!r} rejected")
        raw.append((lineno, u, v, w))
        tokens.add(u)
        tokens.add(v)
    if not raw:
        raise ValueError("empty edge list")
    ids, aliases = _assign_ids(tokens)

    if format == "plain":
        edges = [(ids[u], ids[v], w) for _, u, v, w in raw]
        return Graph(len(ids), edges, aliases=aliases)

    # lfr: collapse directed duplicates, demanding consistent weights
    seen = {}
    for lineno, u, v, w in raw:
        key = (ids[u], ids[v]) if ids[u] < ids[v] else (ids[v], ids[u])
        if key in seen:
            prev = seen[key]
            if prev != w:
                raise ValueError(
                    f"line {lineno}: duplicate of edge ({u}, {v}) with conflicting "
                    f"weight {w} != {prev}"
                )
        else:
            seen[key] = w
    edges = [(u, v, w) for (u, v), w in seen.items()]
    return Graph(len(ids), edges, aliases=aliases)


def load_community_file(source, graph):
    """Parse a community.dat-style file into a Cover over `graph`.

    Each non-empty line is `node community [community ...]`; a node listed
    with k community ids belongs to k communities.  Node tokens resolve
    through the graph's alias map; unknown nodes and graph nodes never listed
    are errors, since every downstream metric needs a full cover.
    """
    groups = {}
    listed = set()
    for lineno, line in _open_lines(source):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) < 2:
            raise ValueError(f"line {lineno}: expected 'node community...', got {text!r}")
        try:
            node = graph.id_of(parts[0])
        except KeyError:
            raise ValueError(f"line {lineno}: node {parts[0]!r} absent from graph") from None
        listed.add(node)
        for tok in parts[1:]:
            groups.setdefault(tok, set()).add(node)
    missing = [i for i in range(graph.num_nodes) if i not in listed]
    if missing:
        names = ", ".join(graph.name_of(i) for i in missing[:5])
        raise ValueError(f"{len(missing)} graph node(s) missing from community file (e.g. {names})")
    return Cover(groups[key] for key in sorted(groups))


def _report_attributes(graph, report):
    """Per-node (labels, role, intensities) triples pulled out of a report."""
    membership = report.best_cover.membership
    hubs = set(report.hubs)
    outliers = set(report.outliers)
    rows = []
    for i in range(graph.num_nodes):
        if i not in membership:
            raise ValueError(f"node {graph.name_of(i)} missing from report cover")
        labels = ";".join(f"c{k}" for k in membership[i])
        role = "hub" if i in hubs else ("outlier" if i in outliers else "member")
        intensities = report.intensity.get(i, {})
        rows.append((labels, role, intensities))
    return rows


def export_annotated(graph, report, format="graphml"):
    """Render the graph with per-node structure annotations.

    Every node carries its community labels (best-cover ids `c<k>`), a role
    in {member, hub, outlier}, and one `intensity_<q>` attribute per held
    propagation label q.  Roles stand in for the usual red-hub/pink-outlier
    rendering so downstream tools can color however they like.
    """
    if format == "graphml":
        return _export_graphml(graph, report)
    if format == "dot":
        return _export_dot(graph, report)
    raise ValueError(f"unknown export format {format!r}")


def _export_graphml(graph, report):
    rows = _report_attributes(graph, report)
    intensity_keys = sorted({q for _, _, intens in rows for q in intens})

    root = ElementTree.Element("graphml", xmlns="http://graphml.graphdrawing.org/xmlns")
    keys = [("labels", "labels", "string"), ("role", "role", "string"), ("name", "name", "string")]
    keys += [(f"intensity_{q}", f"intensity_{q}", "double") for q in intensity_keys]
    for key_id, name, typ in keys:
        ElementTree.SubElement(
            root, "key", id=key_id, attrib={"for": "node", "attr.name": name, "attr.type": typ}
        )
    ElementTree.SubElement(
        root, "key", id="weight", attrib={"for": "edge", "attr.name": "weight", "attr.type": "double"}
    )
    ge = ElementTree.SubElement(root, "graph", id="G", edgedefault="undirected")
    for i in range(graph.num_nodes):
        labels, role, intens = rows[i]
        ne = ElementTree.SubElement(ge, "node", id=f"n{i}")
        for key_id, value in (("labels", labels), ("role", role), ("name", graph.name_of(i))):
            de = ElementTree.SubElement(ne, "data", key=key_id)
            de.text = value
        for q in sorted(intens):
            de = ElementTree.SubElement(ne, "data", key=f"intensity_{q}")
            de.text = repr(intens[q])
    for i, j, w in graph.edges():
        ee = ElementTree.SubElement(ge, "edge", source=f"n{i}", target=f"n{j}")
        de = ElementTree.SubElement(ee, "data", key="weight")
        de.text = repr(w)
    ElementTree.indent(root)
    return ElementTree.tostring(root, encoding="unicode", xml_declaration=True) + "\n"


def _export_dot(graph, report):
    rows = _report_attributes(graph, report)
    out = ["graph communities {"]
    for i in range(graph.num_nodes):
        labels, role, intens = rows[i]
        attrs = [f"label={quoteattr(graph.name_of(i))}", f"labels={quoteattr(labels)}", f"role={quoteattr(role)}"]
        attrs += [f"intensity_{q}={quoteattr(repr(intens[q]))}" for q in sorted(intens)]
        out.append(f"  n{i} [{', '.join(attrs)}];")
    for i, j, w in graph.edges():
        out.append(f"  n{i} -- n{j} [weight={quoteattr(repr(w))}];")
    out.append("}")
    return "\n".join(out) + "\n"
