"""Pure-Python graph kernels.

Fallback backend for the compiled extension in ``_ckernels.pyx``; both
expose the same functions with identical outputs (the parity suite compares
them element-for-element).  Inputs are CSR adjacency arrays: ``indptr`` of
length n+1 and ``indices`` with each row's neighbors sorted ascending.
Node masks are ``bytes`` of length n (nonzero = active).  No argument
validation happens here; callers own that.

Traversal orders are fixed (roots ascending, neighbors in CSR order) so
results are deterministic and backend-independent.
"""

from collections import deque
from heapq import heappop, heappush

INF = float("inf")


def bfs_hops(n, indptr, indices, src):
    """Hop distances from ``src`` over the whole graph; -1 if unreachable."""
    hops = [-1] * n
    hops[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        d = hops[u] + 1
        for pos in range(indptr[u], indptr[u + 1]):
            v = indices[pos]
            if hops[v] < 0:
                hops[v] = d
                queue.append(v)
    return hops


def bfs_restricted(n, indptr, indices, sources, expand):
    """Multi-source BFS where a node's edges are traversed only if
    ``expand[node]`` is set (sources always expand).  Nodes outside
    ``expand`` can still be *reached*, which makes this usable for
    endpoint-in-set / interior-outside-set path searches from either
    direction."""
    hops = [-1] * n
    queue = deque()
    for s in sources:
        if hops[s] < 0:
            hops[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        if hops[u] > 0 and not expand[u]:
            continue
        d = hops[u] + 1
        for pos in range(indptr[u], indptr[u + 1]):
            v = indices[pos]
            if hops[v] < 0:
                hops[v] = d
                queue.append(v)
    return hops


def num_components(n, indptr, indices, member):
    """Connected components among nodes with ``member`` set."""
    seen = bytearray(n)
    count = 0
    stack = []
    for root in range(n):
        if seen[root] or not member[root]:
            continue
        count += 1
        seen[root] = 1
        stack.append(root)
        while stack:
            u = stack.pop()
            for pos in range(indptr[u], indptr[u + 1]):
                v = indices[pos]
                if member[v] and not seen[v]:
                    seen[v] = 1
                    stack.append(v)
    return count


def articulation_info(n, indptr, indices, member, skip):
    """(component count, cut-vertex count) of the graph induced by
    ``member`` minus node ``skip`` (pass -1 to remove nothing)."""
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    ptr = [0] * n
    cut = bytearray(n)
    ncomp = 0
    time = 0
    for root in range(n):
        if disc[root] >= 0 or not member[root] or root == skip:
            continue
        ncomp += 1
        disc[root] = low[root] = time
        time += 1
        ptr[root] = indptr[root]
        root_children = 0
        stack = [root]
        while stack:
            u = stack[-1]
            pos = ptr[u]
            if pos < indptr[u + 1]:
                ptr[u] = pos + 1
                v = indices[pos]
                if not member[v] or v == skip:
                    continue
                if disc[v] < 0:
                    parent[v] = u
                    disc[v] = low[v] = time
                    time += 1
                    ptr[v] = indptr[v]
                    stack.append(v)
                    if u == root:
                        root_children += 1
                elif v != parent[u] and disc[v] < low[u]:
                    low[u] = disc[v]
            else:
                stack.pop()
                p = parent[u]
                if p >= 0:
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if p != root and low[u] >= disc[p]:
                        cut[p] = 1
        if root_children > 1:
            cut[root] = 1
    return ncomp, sum(cut)


def bcc_decompose(n, indptr, indices, member):
    """Biconnected components of the member-induced graph.

    Returns (blocks, cut_mask): blocks is a list of sorted node lists in
    DFS completion order (isolated member nodes become singleton blocks);
    cut_mask marks cut vertices.
    """
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    ptr = [0] * n
    cut = bytearray(n)
    blocks = []
    estack = []
    time = 0
    for root in range(n):
        if disc[root] >= 0 or not member[root]:
            continue
        disc[root] = low[root] = time
        time += 1
        ptr[root] = indptr[root]
        root_children = 0
        had_edge = False
        stack = [root]
        while stack:
            u = stack[-1]
            pos = ptr[u]
            if pos < indptr[u + 1]:
                ptr[u] = pos + 1
                v = indices[pos]
                if not member[v]:
                    continue
                if disc[v] < 0:
                    had_edge = True
                    estack.append((u, v))
                    parent[v] = u
                    disc[v] = low[v] = time
                    time += 1
                    ptr[v] = indptr[v]
                    stack.append(v)
                    if u == root:
                        root_children += 1
                elif v != parent[u] and disc[v] < disc[u]:
                    had_edge = True
                    estack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            else:
                stack.pop()
                p = parent[u]
                if p >= 0:
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= disc[p]:
                        nodes = set()
                        while True:
                            a, b = estack.pop()
                            nodes.add(a)
                            nodes.add(b)
                            if a == p and b == u:
                                break
                        blocks.append(sorted(nodes))
                        if p != root:
                            cut[p] = 1
        if root_children > 1:
            cut[root] = 1
        else:
            cut[root] = 0
        if not had_edge:
            blocks.append([root])
    return blocks, bytes(cut)


def st_vertex_disjoint(n, indptr, indices, member, s, t, cap):
    """Maximum number of vertex-disjoint s-t paths within the member-induced
    graph (internal vertices disjoint; a direct edge counts as one path),
    computed by unit-capacity max-flow on the node-split digraph.  Stops
    early once ``cap`` paths are found."""
    # split nodes: in(v) = 2v, out(v) = 2v + 1; reverse arc of a is a ^ 1
    arc_head = []
    arc_cap = []
    adj = [[] for _ in range(2 * n)]

    def add_arc(u, v):
        a = len(arc_head)
        arc_head.append(v)
        arc_cap.append(1)
        adj[u].append(a)
        arc_head.append(u)
        arc_cap.append(0)
        adj[v].append(a + 1)

    for v in range(n):
        if member[v]:
            add_arc(2 * v, 2 * v + 1)
    for u in range(n):
        if not member[u]:
            continue
        for pos in range(indptr[u], indptr[u + 1]):
            w = indices[pos]
            if member[w]:
                add_arc(2 * u + 1, 2 * w)

    src = 2 * s + 1
    sink = 2 * t
    flow = 0
    pred = [-1] * (2 * n)
    while flow < cap:
        for i in range(2 * n):
            pred[i] = -1
        pred[src] = -2
        queue = deque([src])
        reached = False
        while queue and not reached:
            u = queue.popleft()
            for a in adj[u]:
                if arc_cap[a] > 0 and pred[arc_head[a]] < 0:
                    v = arc_head[a]
                    pred[v] = a
                    if v == sink:
                        reached = True
                        break
                    queue.append(v)
        if not reached:
            break
        v = sink
        while v != src:
            a = pred[v]
            arc_cap[a] -= 1
            arc_cap[a ^ 1] += 1
            v = arc_head[a ^ 1]
        flow += 1
    return flow


def member_neighbor_counts(n, indptr, indices, member):
    """For every node, the number of its neighbors inside ``member``."""
    counts = [0] * n
    for u in range(n):
        c = 0
        for pos in range(indptr[u], indptr[u + 1]):
            if member[indices[pos]]:
                c += 1
        counts[u] = c
    return counts


def dijkstra_pair(n, indptr, indices, weights, src):
    """Single-source shortest paths under lexicographic (cost, hops) keys.

    Returns (costs, hops); unreachable nodes get (inf, -1).  ``weights``
    aligns with CSR entries and must be symmetric and non-negative.
    """
    cost = [INF] * n
    hops = [-1] * n
    cost[src] = 0.0
    hops[src] = 0
    heap = [(0.0, 0, src)]
    while heap:
        c, h, u = heappop(heap)
        if c != cost[u] or h != hops[u]:
            continue
        for pos in range(indptr[u], indptr[u + 1]):
            v = indices[pos]
            nc = c + weights[pos]
            nh = h + 1
            if nc < cost[v] or (nc == cost[v] and nh < hops[v]):
                cost[v] = nc
                hops[v] = nh
                heappush(heap, (nc, nh, v))
    return cost, hops


def dijkstra_layered(n, indptr, indices, weights, src, max_hops):
    """Minimum cost from ``src`` using exactly h hops, for h = 0..max_hops.

    Returns a flat list of length (max_hops + 1) * n indexed h * n + v;
    unreachable states hold inf.  Layered DP (hops strictly increase), so
    no priority queue is needed.
    """
    size = (max_hops + 1) * n
    dist = [INF] * size
    dist[src] = 0.0
    for h in range(max_hops):
        base = h * n
        nxt = base + n
        for u in range(n):
            du = dist[base + u]
            if du == INF:
                continue
            for pos in range(indptr[u], indptr[u + 1]):
                v = indices[pos]
                nd = du + weights[pos]
                if nd < dist[nxt + v]:
                    dist[nxt + v] = nd
    return dist


# ---------------------------------------------------------------------------
# Bitmask micro-graphs (n <= 8), used for exhaustive sweeps over all labeled
# graphs of a given order.  Edge bit k encodes pair (i, j), i < j, in
# lexicographic order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
# ---------------------------------------------------------------------------


def _bm_adjacency(n, mask):
    adj = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (mask >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return adj


def _bm_connected(adj, vmask):
    if vmask == 0:
        return True
    reach = vmask & -vmask
    frontier = reach
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & vmask & ~reach
        reach |= frontier
    return reach == vmask


def _bm_biconnected(adj, vmask):
    if bin(vmask).count("1") < 3 or not _bm_connected(adj, vmask):
        return False
    m = vmask
    while m:
        b = m & -m
        m ^= b
        if not _bm_connected(adj, vmask ^ b):
            return False
    return True


def _bm_bad_count(adj, vmask):
    bad = 0
    m = vmask
    while m:
        b = m & -m
        m ^= b
        if not _bm_biconnected(adj, vmask ^ b):
            bad += 1
    return bad


def _bm_triconnected(adj, vmask):
    if bin(vmask).count("1") < 4 or not _bm_connected(adj, vmask):
        return False
    outer = vmask
    while outer:
        b1 = outer & -outer
        outer ^= b1
        inner = outer
        while inner:
            b2 = inner & -inner
            inner ^= b2
            if not _bm_connected(adj, vmask ^ b1 ^ b2):
                return False
    return True


def bitmask_graph_stats(n, mask):
    """(is_biconnected, bad_point_count, is_triconnected) of the labeled
    graph on n nodes encoded by edge bitmask ``mask``."""
    adj = _bm_adjacency(n, mask)
    vmask = (1 << n) - 1
    return (
        1 if _bm_biconnected(adj, vmask) else 0,
        _bm_bad_count(adj, vmask),
        1 if _bm_triconnected(adj, vmask) else 0,
    )


def badpoint_free_violations(n):
    """Sweep all labeled graphs on n nodes.  Returns (number of biconnected
    graphs, number of those with no bad point, number of the latter that are
    not 3-connected)."""
    vmask = (1 << n) - 1
    n_edges = n * (n - 1) // 2
    n_biconn = 0
    n_badfree = 0
    n_violations = 0
    for mask in range(1 << n_edges):
        adj = _bm_adjacency(n, mask)
        if not _bm_biconnected(adj, vmask):
            continue
        n_biconn += 1
        if _bm_bad_count(adj, vmask) == 0:
            n_badfree += 1
            if not _bm_triconnected(adj, vmask):
                n_violations += 1
    return n_biconn, n_badfree, n_violations
