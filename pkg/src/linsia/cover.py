"""Covers: divisions of a node set into possibly overlapping communities."""

__all__ = ["Cover"]


class Cover:
    """A set of communities, each a non-empty set of node ids.

    Communities are stored in a canonical order (lexicographic by sorted
    member tuple) so equal covers compare equal regardless of construction
    order.  Duplicate or empty communities are rejected.  Disjoint covers are
    partitions; overlapping covers list some node in more than one community.
    """

    __slots__ = ("communities", "_membership")

    def __init__(self, communities):
        comms = sorted(tuple(sorted(set(c))) for c in communities)
        if not comms:
            raise ValueError("a cover needs at least one community")
        if any(not c for c in comms):
            raise ValueError("empty community in cover")
        if len(set(comms)) != len(comms):
            raise ValueError("duplicate community in cover")
        self.communities = tuple(comms)
        membership = {}
        for k, comm in enumerate(self.communities):
            for node in comm:
                membership.setdefault(node, []).append(k)
        self._membership = {node: tuple(ks) for node, ks in membership.items()}

    @classmethod
    def from_labels(cls, labels):
        """Build a cover from a node -> label (or node -> label set) map."""
        groups = {}
        for node, lab in labels.items():
            labs = lab if isinstance(lab, (set, frozenset, list, tuple)) else (lab,)
            for q in labs:
                groups.setdefault(q, set()).add(node)
        return cls(groups[q] for q in sorted(groups))

    @property
    def membership(self):
        """node -> ascending tuple of community indices."""
        return self._membership

    @property
    def nodes(self):
        return frozenset(self._membership)

    @property
    def is_disjoint(self):
        return all(len(ks) == 1 for ks in self._membership.values())

    def overlap_count(self, node):
        return len(self._membership[node])

    def require_covers(self, graph):
        missing = [i for i in range(graph.num_nodes) if i not in self._membership]
        if missing:
            raise ValueError(f"cover misses {len(missing)} graph node(s), e.g. {missing[:5]}")

    def __len__(self):
        return len(self.communities)

    def __iter__(self):
        return iter(self.communities)

    def __eq__(self, other):
        if not isinstance(other, Cover):
            return NotImplemented
        return self.communities == other.communities

    def __hash__(self):
        return hash(self.communities)

    def __repr__(self):
        sizes = ", ".join(str(len(c)) for c in self.communities[:8])
        more = ", ..." if len(self.communities) > 8 else ""
        return f"Cover({len(self.communities)} communities; sizes [{sizes}{more}])"

    def to_lines(self, graph=None):
        """Render as community-file lines (`node c1 [c2 ...]` per node)."""
        name = (lambda i: graph.name_of(i)) if graph is not None else str
        nodes = sorted(self._membership)
        return "\n".join(
            f"{name(i)} " + " ".join(str(k) for k in self._membership[i]) for i in nodes
        ) + "\n"
