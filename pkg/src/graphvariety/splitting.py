"""Splitting a graph into matchings through integer vertex weightings.

A vertex weighting assigns every vertex an integer vector indexed by a fixed
color list.  Every edge picks up the coordinate-wise sum of its endpoint
vectors, and the color where that sum is strictly largest claims the edge.
The goal is a weighting whose color classes are all matchings, using a palette
whose size is bounded by a function of the maximum degree D alone.

The construction works level by level:

1. BFS levels from a root; edges run inside a level or between consecutive
   levels.
2. Each level's induced graph has maximum degree at most D - 1 and is
   weighted recursively on a shared base palette.  A per-level constant is
   then added to every base coordinate so that base weights strictly grow
   level over level (each level's minimum clears the two previous levels'
   maxima plus 10); constants preserve argmaxes inside a level.
3. Edges between consecutive levels draw colors from fresh pools, one pool
   per (level parity, proper number of the upper endpoint), each of size D^2.
   A greedy pass gives conflicting edges distinct colors, where two edges of
   the same level pair and the same pool conflict when either lower endpoint
   is adjacent to the other edge's upper endpoint.
4. An inter-level edge puts a dominating weight on its color at the upper
   endpoint (that vertex's base maximum plus the lower level's base maximum
   plus 5) and a small tie-breaking weight 5 at the lower endpoint.

Base weights at least 10 everywhere keep untouched coordinates from ever
reaching an argmax, intra-level edges keep their recursive winner, and each
inter-level edge wins its own pool color with margin at least 5.  The
verifier `color_classes` re-checks the outcome from scratch on every run.
"""

from dataclasses import dataclass
from itertools import product

from .errors import (
    InternalConflictError,
    NotAForestError,
    SearchSpaceTooLargeError,
)
from .graphs import (
    bfs_layers,
    connected_components,
    induced_subgraph_with_map,
    is_forest,
    proper_vertex_numbering,
)

BRUTE_FORCE_CAP = 10**7


@dataclass(frozen=True)
class VertexWeighting:
    """An ordered color list and one aligned integer vector per vertex."""

    colors: tuple
    weights: dict

    def vector(self, v):
        return self.weights[v]


@dataclass(frozen=True)
class EdgeVerdict:
    edge: tuple
    argmax: tuple
    strict: bool


@dataclass(frozen=True)
class SplittingReport:
    """What the verifier found: argmaxes, classes, and the overall verdict."""

    per_edge: tuple
    classes: dict
    matching_flags: dict
    valid: bool
    color_count: int


def color_classes(graph, weighting):
    """Verify a weighting against a graph, from first principles.

    Every edge must attain its maximum summed weight at exactly one color,
    and each color's edge class must be a matching.  Ties are recorded (the
    edge lands in every tied class) and make the report invalid.  Only
    nonempty classes are reported; color_count counts them.
    """
    colors = weighting.colors
    for v in range(graph.num_vertices):
        if v not in weighting.weights:
            raise ValueError(f"no weight vector for vertex {v}")
        if len(weighting.weights[v]) != len(colors):
            raise ValueError(f"weight vector length mismatch at vertex {v}")
    per_edge = []
    classes = {}
    all_strict = True
    for lo, hi in graph.edges:
        sums = [a + b for a, b in zip(weighting.weights[lo], weighting.weights[hi])]
        if not sums:
            per_edge.append(EdgeVerdict(edge=(lo, hi), argmax=(), strict=False))
            all_strict = False
            continue
        top = max(sums)
        winners = tuple(colors[i] for i, s in enumerate(sums) if s == top)
        strict = len(winners) == 1
        all_strict = all_strict and strict
        per_edge.append(EdgeVerdict(edge=(lo, hi), argmax=winners, strict=strict))
        for c in winners:
            classes.setdefault(c, []).append((lo, hi))
    matching_flags = {}
    all_matching = True
    for c, edges in classes.items():
        covered = set()
        ok = True
        for lo, hi in edges:
            if lo in covered or hi in covered:
                ok = False
            covered.add(lo)
            covered.add(hi)
        matching_flags[c] = ok
        all_matching = all_matching and ok
    return SplittingReport(
        per_edge=tuple(per_edge),
        classes={c: tuple(es) for c, es in classes.items()},
        matching_flags=matching_flags,
        valid=all_strict and all_matching,
        color_count=len(classes),
    )


def color_budget(max_degree):
    """The palette size the construction needs: D^2 (D+1)^2 / 2 - 1."""
    d = max_degree
    return d * d * (d + 1) * (d + 1) // 2 - 1


def palette(max_degree):
    """The color list for graphs of the given maximum degree.

    One shared "base" color, extended per degree stage t by fresh pool colors
    a<t>.<parity>.<number>.<slot>.  Palettes nest: palette(t - 1) is a prefix
    of palette(t), which is what lets level graphs reuse their recursive
    weighting inside the bigger palette.  The length equals color_budget for
    every max_degree >= 1.
    """
    names = ["base"]
    for t in range(2, max_degree + 1):
        for parity in (0, 1):
            for k in range(1, t + 1):
                for j in range(t * t):
                    names.append(f"a{t}.{parity}.{k}.{j}")
    return tuple(names)


def split_into_matchings(graph):
    """A weighting splitting the graph into matchings on palette(D) colors.

    Components are processed independently on the shared palette.  If the
    greedy pool assignment of stage 3 runs out of colors for some root, the
    component is retried from every other root before giving up.
    """
    big_d = graph.max_degree()
    if big_d <= 1:
        return VertexWeighting(
            colors=("base",),
            weights={v: (10,) for v in range(graph.num_vertices)},
        )
    colors = palette(big_d)
    index = {c: i for i, c in enumerate(colors)}
    weights = {}
    for comp in connected_components(graph):
        sub, _, new_to_old = induced_subgraph_with_map(graph, comp)
        comp_weights = None
        failure = None
        for root in range(sub.num_vertices):
            try:
                comp_weights = _split_component(sub, big_d, colors, index, root)
                break
            except InternalConflictError as exc:
                failure = exc
        if comp_weights is None:
            raise InternalConflictError(
                f"no root admits a conflict-free pool assignment on a "
                f"{sub.num_vertices}-vertex component: {failure}"
            )
        for v, vec in comp_weights.items():
            weights[new_to_old[v]] = tuple(vec)
    return VertexWeighting(colors=colors, weights=weights)


def _split_component(sub, big_d, colors, index, root):
    """Stages 1-4 on one connected component; returns vertex -> weight list."""
    base_size = len(palette(big_d - 1))
    layering = bfs_layers(sub, root)
    levels = layering.layers
    weights = {v: [0] * len(colors) for v in range(sub.num_vertices)}

    # stage 2: recursive base weights per level, then cumulative shifts
    level_max = []
    numbering = [0] * sub.num_vertices
    for i, level in enumerate(levels):
        lg, _, back = induced_subgraph_with_map(sub, level)
        recursive = split_into_matchings(lg)
        rec_index = {c: index[c] for c in recursive.colors}
        for lv in range(lg.num_vertices):
            vec = recursive.weights[lv]
            for c, val in zip(recursive.colors, vec):
                weights[back[lv]][rec_index[c]] = val
        nums = proper_vertex_numbering(lg, big_d)
        for lv in range(lg.num_vertices):
            numbering[back[lv]] = nums[lv]
        pre_min = min(min(weights[v][:base_size]) for v in level)
        pre_max = max(max(weights[v][:base_size]) for v in level)
        if i == 0:
            required = 10
        elif i == 1:
            required = level_max[0] + 10
        else:
            required = level_max[i - 1] + level_max[i - 2] + 10
        shift = max(0, required - pre_min)
        for v in level:
            for c in range(base_size):
                weights[v][c] += shift
        level_max.append(pre_max + shift)

    # stage 3: greedy pool colors for edges between consecutive levels
    pools = {
        (parity, k): [index[f"a{big_d}.{parity}.{k}.{j}"] for j in range(big_d * big_d)]
        for parity in (0, 1)
        for k in range(1, big_d + 1)
    }
    level_of = layering.level
    adjacency = sub.adjacency
    edge_color = {}
    for i in range(len(levels) - 1):
        pair = []
        for lo, hi in sub.edges:
            if {level_of[lo], level_of[hi]} == {i, i + 1}:
                lower, upper = (lo, hi) if level_of[lo] == i else (hi, lo)
                pair.append((upper, lower))
        pair.sort()
        colored = []
        for upper, lower in pair:
            pool = pools[(i % 2, numbering[upper])]
            banned = set()
            for (u2, l2), c2 in colored:
                if numbering[u2] != numbering[upper]:
                    continue
                if l2 in adjacency[upper] or lower in adjacency[u2]:
                    banned.add(c2)
            chosen = next((c for c in pool if c not in banned), None)
            if chosen is None:
                raise InternalConflictError(
                    f"pool ({i % 2}, {numbering[upper]}) exhausted at edge "
                    f"({lower}, {upper}) between levels {i} and {i + 1}"
                )
            colored.append(((upper, lower), chosen))
            edge_color[(lower, upper)] = chosen

    # stage 4: dominating weights on the pool colors
    for (lower, upper), c in edge_color.items():
        i = level_of[lower]
        max_base_upper = max(weights[upper][:base_size])
        weights[upper][c] = max_base_upper + level_max[i] + 5
        weights[lower][c] = 5
    return weights


def _split_with_trace(graph):
    """split_into_matchings plus the level structure, for structural tests."""
    weighting = split_into_matchings(graph)
    big_d = graph.max_degree()
    trace = []
    if big_d <= 1:
        return weighting, trace
    for comp in connected_components(graph):
        sub, _, new_to_old = induced_subgraph_with_map(graph, comp)
        for root in range(sub.num_vertices):
            try:
                _split_component(sub, big_d, weighting.colors,
                                 {c: i for i, c in enumerate(weighting.colors)}, root)
                break
            except InternalConflictError:
                continue
        layering = bfs_layers(sub, root)
        kinds = {}
        for lo, hi in sub.edges:
            glo, ghi = new_to_old[lo], new_to_old[hi]
            same = layering.level[lo] == layering.level[hi]
            kinds[(min(glo, ghi), max(glo, ghi))] = "intra" if same else "inter"
        trace.append({"root": new_to_old[root], "edge_kinds": kinds})
    return weighting, trace


def split_forest_into_matchings(forest):
    """A splitting of a forest into at most D matchings.

    Leaves are peeled off one at a time; rebuilding in reverse, each leaf
    edge takes the smallest color still free at the attachment vertex and a
    weight one larger than everything the attachment vertex carries, which
    makes the new edge win exactly its own color.
    """
    if not is_forest(forest):
        raise NotAForestError("splitting with max_degree colors needs a forest")
    n = forest.num_vertices
    big_d = forest.max_degree()
    if big_d == 0:
        return VertexWeighting(colors=(), weights={v: () for v in range(n)})
    colors = tuple(f"c{k}" for k in range(1, big_d + 1))

    deg = [forest.degree(v) for v in range(n)]
    removed = [False] * n
    parent = [None] * n
    peel = []
    for _ in range(n):
        v = min(u for u in range(n) if not removed[u] and deg[u] <= 1)
        removed[v] = True
        peel.append(v)
        for u in forest.adjacency[v]:
            if not removed[u]:
                parent[v] = u
                deg[u] -= 1

    weights = {v: [0] * big_d for v in range(n)}
    used = {v: set() for v in range(n)}
    for v in reversed(peel):
        y = parent[v]
        if y is None:
            continue
        c = next(k for k in range(big_d) if k not in used[y])
        weights[v][c] = 1 + max(weights[y])
        used[y].add(c)
        used[v].add(c)
    return VertexWeighting(colors=colors, weights={v: tuple(w) for v, w in weights.items()})


def brute_force_min_colors(graph, max_colors, max_weight, cap=BRUTE_FORCE_CAP):
    """The least palette size admitting a valid splitting, by exhaustion.

    Tries every weighting with entries in 0..max_weight for each palette size
    up to max_colors; returns the first size with a valid splitting, or None
    when none exists in range.  The total search space is bounded up front.
    """
    n = graph.num_vertices
    space = sum((max_weight + 1) ** (m * n) for m in range(1, max_colors + 1))
    if space > cap:
        raise SearchSpaceTooLargeError(
            f"search space {space} exceeds cap {cap}"
        )
    edges = graph.edges
    for m in range(1, max_colors + 1):
        vectors = list(product(range(max_weight + 1), repeat=m))
        nv = len(vectors)
        # strict argmax color for every vector pair, -1 on ties
        table = []
        for va in vectors:
            row = []
            for vb in vectors:
                sums = [x + y for x, y in zip(va, vb)]
                top = max(sums)
                row.append(sums.index(top) if sums.count(top) == 1 else -1)
            table.append(row)
        for candidate in product(range(nv), repeat=n):
            seen = set()
            ok = True
            for lo, hi in edges:
                c = table[candidate[lo]][candidate[hi]]
                if c < 0 or (c, lo) in seen or (c, hi) in seen:
                    ok = False
                    break
                seen.add((c, lo))
                seen.add((c, hi))
            if ok:
                return m
    return None
