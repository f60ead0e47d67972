"""Finite simple graphs and the orderings and decompositions the rest of the
package builds on.

Vertices are always 0..n-1 and edges are stored sorted as (lo, hi) pairs, so
every function that reports per-edge data does so in one canonical order.
"""

from dataclasses import dataclass

from .errors import BoundTooSmallError, DisconnectedGraphError


class Graph:
    """An undirected simple graph on vertices 0..num_vertices-1."""

    def __init__(self, num_vertices, edges):
        if num_vertices < 0:
            raise ValueError("vertex count must be non-negative")
        canon = []
        seen = set()
        for e in edges:
            u, v = e
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError(f"edge {e} out of range for {num_vertices} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            lo, hi = (u, v) if u < v else (v, u)
            if (lo, hi) in seen:
                raise ValueError(f"duplicate edge ({lo}, {hi})")
            seen.add((lo, hi))
            canon.append((lo, hi))
        canon.sort()
        self.num_vertices = num_vertices
        self.edges = tuple(canon)
        adj = [[] for _ in range(num_vertices)]
        for lo, hi in canon:
            adj[lo].append(hi)
            adj[hi].append(lo)
        self.adjacency = tuple(tuple(sorted(ns)) for ns in adj)

    @property
    def num_edges(self):
        return len(self.edges)

    def degree(self, v):
        return len(self.adjacency[v])

    def max_degree(self):
        if self.num_vertices == 0:
            return 0
        return max(len(ns) for ns in self.adjacency)

    def has_edge(self, u, v):
        lo, hi = (u, v) if u < v else (v, u)
        return (lo, hi) in self._edge_set()

    def _edge_set(self):
        cached = getattr(self, "_edge_set_cache", None)
        if cached is None:
            cached = frozenset(self.edges)
            self._edge_set_cache = cached
        return cached

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.num_vertices == other.num_vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.num_vertices, self.edges))

    def __repr__(self):
        return f"Graph({self.num_vertices}, {list(self.edges)})"


class OrderedGraph:
    """A graph together with a vertex elimination order.

    `order[i]` is the i-th vertex in the order; `position[v]` inverts it.
    The older neighbors of v are its neighbors that come later in the order.
    """

    def __init__(self, graph, order):
        if sorted(order) != list(range(graph.num_vertices)):
            raise ValueError("order must be a permutation of the vertices")
        self.graph = graph
        self.order = tuple(order)
        pos = [0] * graph.num_vertices
        for i, v in enumerate(self.order):
            pos[v] = i
        self.position = tuple(pos)

    def older_neighbors(self, v):
        pv = self.position[v]
        return tuple(u for u in self.graph.adjacency[v] if self.position[u] > pv)

    def younger_neighbors(self, v):
        pv = self.position[v]
        return tuple(u for u in self.graph.adjacency[v] if self.position[u] < pv)

    def width(self):
        """The largest older-neighbor count over all vertices."""
        if self.graph.num_vertices == 0:
            return 0
        return max(len(self.older_neighbors(v)) for v in range(self.graph.num_vertices))


def degeneracy_order(graph):
    """A degeneracy ordering, as (OrderedGraph, degeneracy).

    Repeatedly removes a vertex of minimum remaining degree (smallest index on
    ties).  The returned order lists vertices in removal order, so each
    vertex's older neighbors are the ones still present when it was removed,
    and the degeneracy is the largest such count.
    """
    n = graph.num_vertices
    remaining = set(range(n))
    deg = [graph.degree(v) for v in range(n)]
    order = []
    degeneracy = 0
    for _ in range(n):
        v = min(remaining, key=lambda u: (deg[u], u))
        degeneracy = max(degeneracy, deg[v])
        order.append(v)
        remaining.remove(v)
        for u in graph.adjacency[v]:
            if u in remaining:
                deg[u] -= 1
    og = OrderedGraph(graph, order)
    return og, degeneracy


@dataclass(frozen=True)
class BfsLayering:
    """Vertices grouped by breadth-first distance from a root."""

    root: int
    layers: tuple
    level: tuple

    @property
    def num_layers(self):
        return len(self.layers)


def bfs_layers(graph, root=0):
    """Breadth-first layers from `root`; the graph must be connected."""
    n = graph.num_vertices
    if n == 0:
        raise DisconnectedGraphError("cannot layer an empty graph")
    level = [-1] * n
    level[root] = 0
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for u in graph.adjacency[v]:
            if level[u] == -1:
                level[u] = level[v] + 1
                queue.append(u)
    if any(l == -1 for l in level):
        raise DisconnectedGraphError("graph is not connected")
    depth = max(level)
    layers = [[] for _ in range(depth + 1)]
    for v in range(n):
        layers[level[v]].append(v)
    return BfsLayering(
        root=root,
        layers=tuple(tuple(sorted(layer)) for layer in layers),
        level=tuple(level),
    )


def connected_components(graph):
    """Vertex sets of the connected components, each sorted, smallest head first."""
    n = graph.num_vertices
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in graph.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(graph):
    return len(connected_components(graph)) <= 1


def is_forest(graph):
    """True when the graph has no cycle."""
    return graph.num_edges == graph.num_vertices - len(connected_components(graph))


def induced_subgraph_with_map(graph, vertices):
    """The induced subgraph on `vertices`, plus old-to-new and new-to-old maps."""
    vs = sorted(set(vertices))
    old_to_new = {v: i for i, v in enumerate(vs)}
    edges = [
        (old_to_new[lo], old_to_new[hi])
        for lo, hi in graph.edges
        if lo in old_to_new and hi in old_to_new
    ]
    return Graph(len(vs), edges), old_to_new, tuple(vs)


def induced_subgraph(graph, vertices):
    return induced_subgraph_with_map(graph, vertices)[0]


def proper_vertex_numbering(graph, bound):
    """A map v -> {1..bound} where adjacent vertices get distinct numbers.

    Greedy first-fit over vertices in index order; needs max_degree < bound.
    """
    if graph.max_degree() >= bound:
        raise BoundTooSmallError(
            f"need at least {graph.max_degree() + 1} numbers, got {bound}"
        )
    numbers = [0] * graph.num_vertices
    for v in range(graph.num_vertices):
        taken = {numbers[u] for u in graph.adjacency[v] if numbers[u] > 0}
        c = 1
        while c in taken:
            c += 1
        if c > bound:
            raise BoundTooSmallError(f"greedy numbering exceeded bound {bound}")
        numbers[v] = c
    return tuple(numbers)


def biconnected_edge_components(graph):
    """Edge sets of the biconnected blocks, via an iterative DFS.

    Bridges come back as single-edge blocks.  Each block is a sorted tuple of
    (lo, hi) edges.
    """
    n = graph.num_vertices
    disc = [-1] * n
    low = [0] * n
    blocks = []
    edge_stack = []
    counter = [0]

    for root in range(n):
        if disc[root] != -1:
            continue
        # frame: (vertex, parent, iterator over neighbors)
        stack = [(root, -1, iter(graph.adjacency[root]))]
        disc[root] = low[root] = counter[0]
        counter[0] += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((min(v, u), max(v, u)))
                    disc[u] = low[u] = counter[0]
                    counter[0] += 1
                    stack.append((u, v, iter(graph.adjacency[u])))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((min(v, u), max(v, u)))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    block = []
                    mark = (min(pv, v), max(pv, v))
                    while edge_stack:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == mark:
                            break
                    if block:
                        blocks.append(tuple(sorted(set(block))))
    return blocks


def has_even_cycle(graph):
    """True when the graph contains a cycle of even length.

    Works block by block: a block with more edges than vertices contains two
    cycles sharing a path, and among the three cycle lengths so obtained not
    all can be odd.  A block that is exactly one cycle is even iff its length
    is.
    """
    for block in biconnected_edge_components(graph):
        if len(block) < 2:
            continue
        verts = {v for e in block for v in e}
        if len(block) > len(verts):
            return True
        if len(block) == len(verts) and len(block) % 2 == 0:
            return True
    return False


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def parse_edge_list(text):
    """Parse edge-list text into a Graph.

    One "u v" pair per line; '#' starts a comment; blank lines are skipped.
    A line holding a single integer declares an isolated vertex.  The vertex
    count is one more than the largest index mentioned.
    """
    edges = []
    singles = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            singles.append(int(parts[0]))
        elif len(parts) == 2:
            edges.append((int(parts[0]), int(parts[1])))
        else:
            raise ValueError(f"bad edge-list line {raw!r}")
    mentioned = singles + [v for e in edges for v in e]
    if any(v < 0 for v in mentioned):
        raise ValueError("vertex indices must be non-negative")
    n = max(mentioned) + 1 if mentioned else 0
    return Graph(n, edges)


def format_edge_list(graph):
    """Inverse of parse_edge_list; isolated vertices become single-index lines."""
    covered = {v for e in graph.edges for v in e}
    lines = [f"{lo} {hi}" for lo, hi in graph.edges]
    lines.extend(str(v) for v in range(graph.num_vertices) if v not in covered)
    return "\n".join(lines) + ("\n" if lines else "")
