"""Graph values, constructors, composition, decomposition, and text formats.

Vertices are labeled 1..n and all values are immutable. Two families of
structured graphs are central here: level-regular rooted trees described by a
:class:`GeneralizedBetheTreeSpec`, and graphs obtained by attaching one copy
of a rooted graph to every vertex of a connected base graph (:func:`compose`).
:func:`decompose_unicyclic` inverts the cycle case: it splits a connected
graph with exactly one cycle into its cycle and the pendant trees hanging off
each cycle vertex.

The text format for graphs is a plain edge list: the first non-comment line
is the vertex count, each following non-empty line is one edge ``u v`` with
``1 <= u < v <= n``, and ``#`` starts a comment line.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .errors import ValidationError

__all__ = [
    "Graph",
    "RootedGraph",
    "GeneralizedBetheTreeSpec",
    "UnicyclicDecomposition",
    "build_cycle",
    "path_graph",
    "complete_graph",
    "build_bethe_tree",
    "build_generalized_bethe_tree",
    "root_last",
    "compose",
    "decompose_unicyclic",
    "parse_graph",
    "serialize_graph",
    "parse_bethe_spec",
    "serialize_bethe_spec",
    "random_connected_graph",
    "random_rooted_graph",
    "random_unicyclic",
    "unicyclic_corpus",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: a vertex count plus a canonical sorted edge list."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = self.n_vertices
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"vertex count must be a positive integer, got {n!r}")
        canon = []
        for edge in self.edges:
            u, v = int(edge[0]), int(edge[1])
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 1 or v > n:
                raise ValidationError(f"edge ({u}, {v}) out of range 1..{n}")
            canon.append((u, v))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValidationError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists indexed 1..n; index 0 is unused."""
        adj: list[list[int]] = [[] for _ in range(self.n_vertices + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def is_connected(self) -> bool:
        adj = self.adjacency()
        seen = [False] * (self.n_vertices + 1)
        seen[1] = True
        stack = [1]
        found = 1
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    found += 1
                    stack.append(u)
        return found == self.n_vertices


def _degrees(graph: Graph) -> list[int]:
    deg = [0] * (graph.n_vertices + 1)
    for u, v in graph.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


@dataclass(frozen=True)
class RootedGraph:
    """A connected graph with one distinguished vertex."""

    graph: Graph
    root: int

    def __post_init__(self) -> None:
        if not isinstance(self.root, int) or not 1 <= self.root <= self.graph.n_vertices:
            raise ValidationError(
                f"root {self.root!r} out of range 1..{self.graph.n_vertices}"
            )
        if not self.graph.is_connected():
            raise ValidationError("rooted graph must be connected")

    @property
    def order(self) -> int:
        return self.graph.n_vertices


@dataclass(frozen=True)
class GeneralizedBetheTreeSpec:
    """Level description of a rooted tree whose vertices share a degree per level.

    Levels are indexed bottom-up: level 1 holds the pendant vertices, level k
    the root. ``degrees[j-1]`` is the common degree of level-j vertices and
    ``counts[j-1]`` the number of vertices on level j. Consistency forces
    ``counts[j-1] == counts[j] * (degrees[j] - 1)`` below the root and
    ``counts[k-2] == degrees[k-1]`` just under it, so every count ratio
    between consecutive levels is a positive integer (see :meth:`branching`).
    """

    k: int
    degrees: tuple[int, ...]
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        k = self.k
        if not isinstance(k, int) or k < 1:
            raise ValidationError(f"level count must be a positive integer, got {k!r}")
        degrees = tuple(int(d) for d in self.degrees)
        counts = tuple(int(c) for c in self.counts)
        if len(degrees) != k:
            raise ValidationError(f"expected {k} level degrees, got {len(degrees)}")
        if len(counts) != k:
            raise ValidationError(f"expected {k} level counts, got {len(counts)}")
        if any(d < 1 for d in degrees):
            raise ValidationError("level degrees must be positive")
        if any(c < 1 for c in counts):
            raise ValidationError("level counts must be positive")
        if degrees[0] != 1:
            raise ValidationError(f"pendant level must have degree 1, got {degrees[0]}")
        if counts[k - 1] != 1:
            raise ValidationError(f"root level must have one vertex, got {counts[k - 1]}")
        for j in range(2, k):
            if degrees[j - 1] < 2:
                raise ValidationError(
                    f"interior level {j} must have degree >= 2, got {degrees[j - 1]}"
                )
        for j in range(1, k - 1):
            want = counts[j] * (degrees[j] - 1)
            if counts[j - 1] != want:
                raise ValidationError(
                    f"count mismatch at level {j}: expected "
                    f"counts[{j}] * (degrees[{j + 1}] - 1) = {want}, got {counts[j - 1]}"
                )
        if k >= 2 and counts[k - 2] != degrees[k - 1]:
            raise ValidationError(
                f"count mismatch at level {k - 1}: expected root degree "
                f"{degrees[k - 1]}, got {counts[k - 2]}"
            )
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_degrees(cls, degrees) -> "GeneralizedBetheTreeSpec":
        """Derive the level counts from the level degrees alone."""
        degrees = tuple(int(d) for d in degrees)
        k = len(degrees)
        if k < 1:
            raise ValidationError("need at least one level degree")
        counts = [0] * k
        counts[k - 1] = 1
        if k >= 2:
            counts[k - 2] = degrees[k - 1]
        for j in range(k - 2, 0, -1):
            counts[j - 1] = counts[j] * (degrees[j] - 1)
        return cls(k, degrees, tuple(counts))

    @property
    def total_vertices(self) -> int:
        return sum(self.counts)

    def branching(self) -> tuple[int, ...]:
        """Integer count ratios between consecutive levels, bottom-up."""
        return tuple(
            self.counts[j - 1] // self.counts[j] for j in range(1, self.k)
        )


@dataclass(frozen=True)
class UnicyclicDecomposition:
    """Cycle plus per-cycle-vertex pendant trees of a connected unicyclic graph.

    ``cycle`` lists the cycle vertices in traversal order starting at the
    smallest label and heading toward its smaller cycle neighbor. ``trees[i]``
    is the pendant tree hanging off ``cycle[i]``, compactly relabeled so that
    local label t corresponds to original label ``tree_vertices[i][t-1]``
    (original labels in increasing order); its root is the cycle vertex.
    ``heights[i]`` is the edge-depth of that tree (0 for a bare cycle vertex).
    """

    cycle: tuple[int, ...]
    trees: tuple[RootedGraph, ...]
    tree_vertices: tuple[tuple[int, ...], ...]
    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        r = len(self.cycle)
        if r < 3:
            raise ValidationError(f"cycle must have at least 3 vertices, got {r}")
        if not (len(self.trees) == len(self.tree_vertices) == len(self.heights) == r):
            raise ValidationError("per-cycle-vertex sequences must all have cycle length")

    @property
    def cycle_length(self) -> int:
        return len(self.cycle)


def build_cycle(r: int) -> Graph:
    """Cycle on vertices 1..r."""
    if not isinstance(r, int) or r < 3:
        raise ValidationError(f"cycle length must be an integer >= 3, got {r!r}")
    edges = [(i, i + 1) for i in range(1, r)] + [(1, r)]
    return Graph(r, tuple(edges))


def path_graph(n: int) -> Graph:
    """Path on vertices 1..n."""
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"path length must be a positive integer, got {n!r}")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def complete_graph(n: int) -> Graph:
    """Complete graph on vertices 1..n."""
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"order must be a positive integer, got {n!r}")
    edges = tuple((u, v) for u in range(1, n) for v in range(u + 1, n + 1))
    return Graph(n, edges)


def build_bethe_tree(d: int, k: int) -> GeneralizedBetheTreeSpec:
    """Spec of the uniform rooted tree: root degree d, interior degree d+1, k levels."""
    if not isinstance(d, int) or d < 2:
        raise ValidationError(f"branching degree must be an integer >= 2, got {d!r}")
    if not isinstance(k, int) or k < 2:
        raise ValidationError(f"level count must be an integer >= 2, got {k!r}")
    degrees = (1,) + (d + 1,) * (k - 2) + (d,)
    counts = tuple(d ** (k - j) for j in range(1, k + 1))
    return GeneralizedBetheTreeSpec(k, degrees, counts)


def build_generalized_bethe_tree(spec: GeneralizedBetheTreeSpec) -> RootedGraph:
    """Materialize a level spec as a rooted tree, labeled level by level.

    Level 1 (pendants) takes labels 1..counts[0], level 2 the next block, and
    so on; the root gets the last label. Vertex t of level j is attached to
    vertex ceil(t / m_j) of level j+1, where m_j is the branching ratio.
    """
    counts = spec.counts
    total = spec.total_vertices
    offsets = [0] * (spec.k + 1)
    for j in range(1, spec.k):
        offsets[j + 1] = offsets[j] + counts[j - 1]
    branching = spec.branching()
    edges = []
    for j in range(1, spec.k):
        m = branching[j - 1]
        for t in range(1, counts[j - 1] + 1):
            child = offsets[j] + t
            parent = offsets[j + 1] + (t + m - 1) // m
            edges.append((child, parent))
    return RootedGraph(Graph(total, tuple(edges)), root=total)


def root_last(rooted: RootedGraph) -> RootedGraph:
    """Relabel so the root becomes the last vertex, preserving the other order."""
    n = rooted.order
    if rooted.root == n:
        return rooted
    r = rooted.root

    def relabel(v: int) -> int:
        if v == r:
            return n
        return v - 1 if v > r else v

    edges = tuple((relabel(u), relabel(v)) for u, v in rooted.graph.edges)
    return RootedGraph(Graph(n, edges), root=n)


def compose(base: Graph, attachment: RootedGraph) -> Graph:
    """Attach one copy of ``attachment`` to every vertex of a connected base.

    Copy i (for base vertex i) occupies labels (i-1)*n+1 .. i*n with the copy
    root at i*n, where n is the attachment order; base edges join the copy
    roots. With a one-vertex attachment the result equals the base itself.
    """
    if not base.is_connected():
        raise ValidationError("base graph must be connected")
    h = root_last(attachment)
    n = h.order
    edges = []
    for i in range(base.n_vertices):
        off = i * n
        for u, v in h.graph.edges:
            edges.append((off + u, off + v))
    for u, v in base.edges:
        edges.append((u * n, v * n))
    return Graph(base.n_vertices * n, tuple(edges))


def decompose_unicyclic(graph: Graph) -> UnicyclicDecomposition:
    """Split a connected graph with exactly one cycle into cycle and pendant trees."""
    n = graph.n_vertices
    if not graph.is_connected():
        raise ValidationError("graph is disconnected; expected one connected cycle with trees")
    if graph.n_edges < n:
        raise ValidationError("graph has no cycle (edge count below vertex count)")
    if graph.n_edges > n:
        raise ValidationError("graph has more than one independent cycle")

    adj = graph.adjacency()
    deg = _degrees(graph)
    removed = [False] * (n + 1)
    stack = [v for v in range(1, n + 1) if deg[v] == 1]
    while stack:
        v = stack.pop()
        removed[v] = True
        for u in adj[v]:
            if not removed[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    on_cycle = [v for v in range(1, n + 1) if not removed[v]]

    start = min(on_cycle)
    cycle_neighbors = {
        v: sorted(u for u in adj[v] if not removed[u]) for v in on_cycle
    }
    order = [start]
    prev, cur = start, cycle_neighbors[start][0]
    while cur != start:
        order.append(cur)
        a, b = cycle_neighbors[cur]
        prev, cur = cur, (b if a == prev else a)
    cycle_edge_set = set()
    for a, b in zip(order, order[1:] + order[:1]):
        cycle_edge_set.add((min(a, b), max(a, b)))

    tree_adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in graph.edges:
        if (u, v) not in cycle_edge_set:
            tree_adj[u].append(v)
            tree_adj[v].append(u)

    trees = []
    vertex_maps = []
    heights = []
    for root in order:
        depth = {root: 0}
        queue = [root]
        while queue:
            v = queue.pop()
            for u in tree_adj[v]:
                if u not in depth:
                    depth[u] = depth[v] + 1
                    queue.append(u)
        members = sorted(depth)
        local = {orig: t + 1 for t, orig in enumerate(members)}
        local_edges = tuple(
            (local[u], local[v])
            for u, v in graph.edges
            if u in depth and v in depth and (u, v) not in cycle_edge_set
        )
        trees.append(RootedGraph(Graph(len(members), local_edges), root=local[root]))
        vertex_maps.append(tuple(members))
        heights.append(max(depth.values()))

    return UnicyclicDecomposition(
        tuple(order), tuple(trees), tuple(vertex_maps), tuple(heights)
    )


def parse_graph(text: str) -> Graph:
    """Read a graph from edge-list text; errors carry the offending line number."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ValidationError(
                    f"line {lineno}: expected vertex count, got {raw.strip()!r}"
                ) from None
            if n < 1:
                raise ValidationError(f"line {lineno}: vertex count must be positive, got {n}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValidationError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValidationError(
                f"line {lineno}: expected two integers, got {raw.strip()!r}"
            ) from None
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        if u > v:
            raise ValidationError(f"line {lineno}: expected u < v, got {u} {v}")
        if u < 1 or v > n:
            raise ValidationError(f"line {lineno}: edge ({u}, {v}) out of range 1..{n}")
        if (u, v) in seen:
            raise ValidationError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise ValidationError("empty input: missing vertex count line")
    return Graph(n, tuple(edges))


def serialize_graph(graph: Graph) -> str:
    """Canonical edge-list text; parse_graph(serialize_graph(g)) == g."""
    lines = [str(graph.n_vertices)]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_bethe_spec(text: str) -> GeneralizedBetheTreeSpec:
    """Read a level spec from JSON: {"k": ..., "degrees": [...], "counts": [...]?}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValidationError("spec must be a JSON object")
    if "k" not in data or "degrees" not in data:
        raise ValidationError("spec requires 'k' and 'degrees' fields")
    k = data["k"]
    degrees = data["degrees"]
    if not isinstance(k, int):
        raise ValidationError(f"'k' must be an integer, got {k!r}")
    if not isinstance(degrees, list) or not all(isinstance(d, int) for d in degrees):
        raise ValidationError("'degrees' must be a list of integers")
    if "counts" in data and data["counts"] is not None:
        counts = data["counts"]
        if not isinstance(counts, list) or not all(isinstance(c, int) for c in counts):
            raise ValidationError("'counts' must be a list of integers")
        spec = GeneralizedBetheTreeSpec(k, tuple(degrees), tuple(counts))
    else:
        spec = GeneralizedBetheTreeSpec.from_degrees(degrees)
        if spec.k != k:
            raise ValidationError(f"'k' is {k} but {len(degrees)} degrees were given")
    return spec


def serialize_bethe_spec(spec: GeneralizedBetheTreeSpec) -> str:
    return json.dumps(
        {"k": spec.k, "degrees": list(spec.degrees), "counts": list(spec.counts)},
        indent=2,
    ) + "\n"


def random_connected_graph(
    n: int, rng: random.Random, extra_edge_prob: float = 0.3
) -> Graph:
    """Random connected graph: a random spanning tree plus independent extras."""
    if n < 1:
        raise ValidationError(f"order must be positive, got {n}")
    edges = set()
    for v in range(2, n + 1):
        edges.add((rng.randint(1, v - 1), v))
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return Graph(n, tuple(sorted(edges)))


def random_rooted_graph(
    n: int, rng: random.Random, extra_edge_prob: float = 0.3
) -> RootedGraph:
    graph = random_connected_graph(n, rng, extra_edge_prob)
    return RootedGraph(graph, root=rng.randint(1, n))


def random_unicyclic(n: int, cycle_len: int, rng: random.Random) -> Graph:
    """Random connected unicyclic graph: a cycle plus random tree attachments."""
    if cycle_len < 3 or cycle_len > n:
        raise ValidationError(f"need 3 <= cycle length <= order, got {cycle_len} and {n}")
    edges = [(i, i + 1) for i in range(1, cycle_len)] + [(1, cycle_len)]
    for v in range(cycle_len + 1, n + 1):
        edges.append((rng.randint(1, v - 1), v))
    return Graph(n, tuple(edges))


def unicyclic_corpus(
    max_n: int, seed: int, samples: int = 6
) -> list[tuple[str, Graph]]:
    """Deterministic labeled corpus of small unicyclic graphs, bare cycles included."""
    if max_n < 3:
        raise ValidationError(f"corpus bound must be >= 3, got {max_n}")
    rng = random.Random(seed)
    out: list[tuple[str, Graph]] = []
    seen: set[tuple[int, tuple[tuple[int, int], ...]]] = set()
    for n in range(3, max_n + 1):
        out.append((f"cycle-{n}", build_cycle(n)))
        for r in range(3, n):
            for s in range(samples):
                g = random_unicyclic(n, r, rng)
                key = (n, g.edges)
                if key in seen:
                    continue
                seen.add(key)
                out.append((f"uni-n{n}-r{r}-s{s}", g))
    return out
