"""Division quality and agreement measures: Q, EQ, NMI, ENMI.

Q and EQ default to the unweighted skeleton of the graph (degree = neighbor
count, every edge counting 1) because the classic fixtures are unweighted;
pass weighted=True for the strength-based generalization.  NMI compares two
partitions; ENMI compares two possibly-overlapping covers via normalized
conditional entropies of per-community membership indicators.
"""

import math

__all__ = [
    "modularity_q",
    "extended_modularity_eq",
    "nmi",
    "enmi",
]


def _degrees_and_total(graph, weighted):
    if weighted:
        deg = [sum(graph.adjacency(i)[1]) for i in range(graph.num_nodes)]
        two_m = sum(deg)
    else:
        deg = [graph.degree(i) for i in range(graph.num_nodes)]
        two_m = 2 * graph.num_edges
    return deg, two_m


def modularity_q(graph, cover, weighted=False):
    """Newman-Girvan modularity of a disjoint cover.

    Q = (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j), evaluated per
    community as intra-edge fraction minus squared degree fraction.
    """
    if graph.num_edges == 0:
        raise ValueError("modularity is undefined on a graph with no edges")
    cover.require_covers(graph)
    if not cover.is_disjoint:
        raise ValueError("cover is overlapping; use extended_modularity_eq")
    deg, two_m = _degrees_and_total(graph, weighted)
    membership = cover.membership
    intra = [0.0] * len(cover)
    degsum = [0.0] * len(cover)
    for i, j, w in graph.edges():
        ci = membership[i][0]
        if ci == membership[j][0]:
            intra[ci] += w if weighted else 1.0
    for i in range(graph.num_nodes):
        degsum[membership[i][0]] += deg[i]
    q = 0.0
    for c in range(len(cover)):
        q += 2.0 * intra[c] / two_m - (degsum[c] / two_m) ** 2
    return q


def extended_modularity_eq(graph, cover, weighted=False):
    """Extended modularity of a possibly-overlapping cover.

    Every pair contribution [A_ij - k_i k_j / 2m] inside a community is
    divided by O_i * O_j, the counts of communities holding each endpoint.
    Reduces exactly to Q on disjoint covers.
    """
    if graph.num_edges == 0:
        raise ValueError("extended modularity is undefined on a graph with no edges")
    cover.require_covers(graph)
    deg, two_m = _degrees_and_total(graph, weighted)
    membership = cover.membership
    o = {i: float(len(ks)) for i, ks in membership.items()}

    # Edge term: an edge contributes 2*A_ij/(O_i O_j) for every community
    # holding both endpoints (the ordered pair (i,j) and (j,i)).
    edge_term = 0.0
    for i, j, w in graph.edges():
        shared = len(set(membership[i]) & set(membership[j]))
        if shared:
            a = w if weighted else 1.0
            edge_term += 2.0 * shared * a / (o[i] * o[j])

    # Null-model term: per community, (sum_i k_i/O_i)^2 over ordered pairs.
    null_term = 0.0
    for comm in cover.communities:
        s = 0.0
        for i in comm:
            s += deg[i] / o[i]
        null_term += s * s
    return edge_term / two_m - null_term / (two_m * two_m)


def _check_universe(cover_a, cover_b):
    if cover_a.nodes != cover_b.nodes:
        raise ValueError("covers are over different node universes")
    return len(cover_a.nodes)


def nmi(partition_a, partition_b):
    """Normalized mutual information between two partitions.

    2 I(A;B) / (H(A) + H(B)), with 0 log 0 = 0.  Two trivial single-cluster
    partitions agree perfectly and score 1 by convention.
    """
    n = _check_universe(partition_a, partition_b)
    if not (partition_a.is_disjoint and partition_b.is_disjoint):
        raise ValueError("nmi needs disjoint partitions; use enmi for overlapping covers")
    mem_b = partition_b.membership
    sizes_a = [len(c) for c in partition_a.communities]
    sizes_b = [len(c) for c in partition_b.communities]
    joint = {}
    for ka, comm in enumerate(partition_a.communities):
        for node in comm:
            key = (ka, mem_b[node][0])
            joint[key] = joint.get(key, 0) + 1
    h_a = -sum((s / n) * math.log(s / n) for s in sizes_a if s)
    h_b = -sum((s / n) * math.log(s / n) for s in sizes_b if s)
    if h_a + h_b == 0.0:
        return 1.0
    mutual = 0.0
    for (ka, kb), cnt in joint.items():
        mutual += (cnt / n) * math.log(n * cnt / (sizes_a[ka] * sizes_b[kb]))
    return 2.0 * mutual / (h_a + h_b)


def _h(p):
    return -p * math.log(p) if p > 0.0 else 0.0


def _membership_entropy(size, n):
    p = size / n
    return _h(p) + _h(1.0 - p)


def _conditional_entropy_norm(cover_x, cover_y, n):
    """Mean over X's communities of H(X_k | Y) / H(X_k).

    H(X_k | Y_l) (from the joint membership-indicator distribution) only
    counts when the agreement entropies dominate the disagreement ones;
    otherwise the candidate is unreliable and X_k falls back to its own
    entropy.  Communities with zero entropy contribute zero.
    """
    sets_x = [set(c) for c in cover_x.communities]
    sets_y = [set(c) for c in cover_y.communities]
    total = 0.0
    for xk in sets_x:
        h_xk = _membership_entropy(len(xk), n)
        best = None
        for yl in sets_y:
            p11 = len(xk & yl) / n
            p10 = len(xk - yl) / n
            p01 = len(yl - xk) / n
            p00 = 1.0 - p11 - p10 - p01
            if _h(p11) + _h(p00) < _h(p01) + _h(p10):
                continue
            h_joint = _h(p11) + _h(p10) + _h(p01) + _h(p00)
            h_yl = _membership_entropy(len(yl), n)
            cond = h_joint - h_yl
            if best is None or cond < best:
                best = cond
        if best is None:
            best = h_xk
        if h_xk > 0.0:
            total += best / h_xk
    return total / len(sets_x)


def enmi(cover_a, cover_b):
    """Overlap-aware normalized mutual information between two covers.

    Each community is a binary membership variable; the score is
    1 - (H(A|B)_norm + H(B|A)_norm) / 2 with best-match conditional
    entropies in both directions.  Identical covers score 1.
    """
    n = _check_universe(cover_a, cover_b)
    h_ab = _conditional_entropy_norm(cover_a, cover_b, n)
    h_ba = _conditional_entropy_norm(cover_b, cover_a, n)
    return 1.0 - 0.5 * (h_ab + h_ba)
