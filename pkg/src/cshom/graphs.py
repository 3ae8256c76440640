"""Finite graphs with 1-indexed vertices and lexicographically sorted edges.

The homology pipeline assumes simple graphs whose edge list is strictly
sorted; `Graph` itself also tolerates loops and duplicate edges so that
`normalize` can report what it removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A graph on vertices 1..n with an ordered edge tuple."""

    n: int
    edges: tuple[Edge, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, sorting each endpoint pair and the edge list."""
        es = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            es.append((u, v) if u <= v else (v, u))
        return Graph(n, tuple(sorted(es)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_canonical(self) -> bool:
        """True when the edge list is loop-free and strictly increasing."""
        prev = None
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                return False
            if prev is not None and (u, v) <= prev:
                return False
            prev = (u, v)
        return True

    def assert_canonical(self) -> None:
        if not self.is_canonical():
            raise ValueError("graph has loops, duplicate edges, or unsorted edge list")

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> dict[int, int]:
        return {v: len(nb) for v, nb in self.adjacency().items()}

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u <= v else (v, u)
        return e in set(self.edges)

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        """Relabel vertices by a bijection of 1..n."""
        if sorted(mapping) != list(range(1, self.n + 1)) or sorted(
            mapping.values()
        ) != list(range(1, self.n + 1)):
            raise ValueError("relabeling must be a bijection of 1..n")
        return Graph.from_edges(self.n, ((mapping[u], mapping[v]) for u, v in self.edges))


@dataclass(frozen=True)
class NormalizationReport:
    had_loop: bool
    collapsed_multiedges: int


def normalize(g: Graph) -> tuple[Graph, NormalizationReport]:
    """Drop loops, collapse duplicate edges, and sort the edge list."""
    had_loop = False
    seen: set[Edge] = set()
    collapsed = 0
    for u, v in g.edges:
        if u == v:
            had_loop = True
            continue
        e = (u, v) if u < v else (v, u)
        if e in seen:
            collapsed += 1
        else:
            seen.add(e)
    return Graph(g.n, tuple(sorted(seen))), NormalizationReport(had_loop, collapsed)


def connected_components(n: int, edges: Iterable[Edge]) -> list[list[int]]:
    """Components of the graph (1..n, edges), vertices sorted within each."""
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), []).append(v)
    return [sorted(c) for c in groups.values()]


def is_connected(g: Graph) -> bool:
    return len(connected_components(g.n, g.edges)) == 1


def edge_pairs_by_type(g: Graph) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Split index pairs i<j into (nonconsecutive, consecutive) edge pairs.

    A pair is consecutive when the two edges share an endpoint.  Both lists
    are lexicographic in (i, j); indices are 0-based.
    """
    noncons: list[tuple[int, int]] = []
    cons: list[tuple[int, int]] = []
    for i, j in combinations(range(g.m), 2):
        a, b = g.edges[i], g.edges[j]
        if set(a) & set(b):
            cons.append((i, j))
        else:
            noncons.append((i, j))
    return noncons, cons


def subdivide(g: Graph, e: Edge) -> Graph:
    """Replace edge e=(u,v) by a path u - (n+1) - v."""
    g.assert_canonical()
    e = (min(e), max(e))
    if e not in g.edges:
        raise ValueError(f"{e} is not an edge of the graph")
    w = g.n + 1
    new_edges = [x for x in g.edges if x != e]
    new_edges.append((e[0], w))
    new_edges.append((e[1], w))
    return Graph(g.n + 1, tuple(sorted(new_edges)))


# ---------------------------------------------------------------------------
# parsing and serialization


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header format; '#' starts a comment."""
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.extend(line.split())
    if len(tokens) < 2:
        raise ValueError("edge list needs an 'n m' header")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"bad edge-list token: {exc}") from None
    n, m = nums[0], nums[1]
    if n < 0 or m < 0 or len(nums) != 2 + 2 * m:
        raise ValueError(f"expected {m} edges after header, got {(len(nums) - 2) // 2}")
    raw = []
    for k in range(m):
        u, v = nums[2 + 2 * k], nums[3 + 2 * k]
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        raw.append((u, v) if u <= v else (v, u))
    # exact duplicates are dropped here; loops survive until normalize
    return Graph(n, tuple(sorted(set(raw))))


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (n <= 62 supported)."""
    s = line.strip()
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("graph6 characters out of range")
    if data[0] == 63:
        raise ValueError("graph6 n > 62 not supported")
    n = data[0]
    bits_needed = n * (n - 1) // 2
    expected = (bits_needed + 5) // 6
    if len(data) - 1 != expected:
        raise ValueError(
            f"graph6 length mismatch: n={n} needs {expected} data characters, got {len(data) - 1}"
        )
    bits: list[int] = []
    for b in data[1:]:
        bits.extend((b >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i + 1, j + 1))
            idx += 1
    return Graph(n, tuple(sorted(edges)))


def to_graph6(g: Graph) -> str:
    """Encode a simple graph as graph6 (n <= 62)."""
    g.assert_canonical()
    if g.n > 62:
        raise ValueError("graph6 n > 62 not supported")
    eset = set(g.edges)
    bits: list[int] = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i + 1, j + 1) in eset else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse a graph from edge-list or graph6 text."""
    if fmt not in ("auto", "edge-list", "graph6"):
        raise ValueError(f"unknown graph format {fmt!r}")
    if fmt == "auto":
        stripped = [
            ln.split("#", 1)[0].strip() for ln in text.splitlines()
        ]
        stripped = [ln for ln in stripped if ln]
        first = stripped[0] if stripped else ""
        parts = first.split()
        fmt = (
            "edge-list"
            if len(parts) >= 2 and all(p.isdigit() for p in parts[:2])
            else "graph6"
        )
    if fmt == "edge-list":
        return parse_edge_list(text)
    lines = [ln for ln in (l.split("#", 1)[0].strip() for l in text.splitlines()) if ln]
    if len(lines) != 1:
        raise ValueError("expected exactly one graph6 line")
    return parse_graph6(lines[0])


# ---------------------------------------------------------------------------
# standard constructions


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i, j in combinations(range(1, n + 1), 2)))


def complete_bipartite(part_a: Sequence[int], part_b: Sequence[int]) -> Graph:
    n = max(max(part_a), max(part_b))
    if sorted(list(part_a) + list(part_b)) != list(range(1, n + 1)):
        raise ValueError("parts must partition 1..n")
    return Graph.from_edges(n, ((a, b) for a in part_a for b in part_b))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def petersen_graph() -> Graph:
    """Kneser graph K(5,2): outer C5, inner pentagram, five spokes."""
    edges = [(i, i % 5 + 1) for i in range(1, 6)]
    edges += [(i, i + 5) for i in range(1, 6)]
    edges += [(6, 8), (7, 9), (8, 10), (6, 9), (7, 10)]
    return Graph.from_edges(10, edges)


# ---------------------------------------------------------------------------
# Kuratowski subdivisions

K5_MODEL_EDGES: tuple[tuple[int, int], ...] = tuple(combinations(range(5), 2))
K33_MODEL_EDGES: tuple[tuple[int, int], ...] = tuple(
    (i, j) for i in range(3) for j in range(3, 6)
)


@dataclass(frozen=True)
class SubdivisionWitness:
    """An explicit K5 or K3,3 subdivision inside a host graph.

    ``paths[k]`` joins ``branch_vertices[i]`` to ``branch_vertices[j]`` where
    (i, j) is the k-th model edge: all pairs for K5, and (position i, position
    j) with i in 0..2, j in 3..5 for K3,3 (positions 0..2 and 3..5 are the two
    sides).  Paths list their endpoints and are internally disjoint.
    """

    kind: str  # "K5" | "K33"
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def model_edges(self) -> tuple[tuple[int, int], ...]:
        return K5_MODEL_EDGES if self.kind == "K5" else K33_MODEL_EDGES

    def subgraph_edges(self) -> list[Edge]:
        out: set[Edge] = set()
        for p in self.paths:
            for a, b in zip(p, p[1:]):
                out.add((a, b) if a < b else (b, a))
        return sorted(out)

    def validate(self, g: Graph) -> None:
        kinds = {"K5": 5, "K33": 6}
        if self.kind not in kinds:
            raise ValueError(f"unknown witness kind {self.kind!r}")
        bv = self.branch_vertices
        if len(bv) != kinds[self.kind] or len(set(bv)) != len(bv):
            raise ValueError("branch vertices must be distinct")
        model = self.model_edges()
        if len(self.paths) != len(model):
            raise ValueError("one path per model edge required")
        eset = set(g.edges)
        interior_seen: set[int] = set()
        for (i, j), p in zip(model, self.paths):
            if len(p) < 2 or p[0] != bv[i] or p[-1] != bv[j]:
                raise ValueError("path endpoints do not match model edge")
            for a, b in zip(p, p[1:]):
                if ((a, b) if a < b else (b, a)) not in eset:
                    raise ValueError(f"path step ({a},{b}) is not an edge")
            interior = p[1:-1]
            if len(set(interior)) != len(interior):
                raise ValueError("path revisits a vertex")
            for v in interior:
                if v in bv or v in interior_seen:
                    raise ValueError("paths are not internally disjoint")
            interior_seen.update(interior)


def _paths_between(
    adj: dict[int, set[int]],
    start: int,
    goal: int,
    blocked: set[int],
    max_len: int,
) -> Iterator[tuple[int, ...]]:
    """Simple paths start->goal avoiding ``blocked`` internally, short first."""
    for target_len in range(1, max_len + 1):
        stack = [(start, (start,))]
        while stack:
            v, path = stack.pop()
            if len(path) - 1 > target_len:
                continue
            if v == goal:
                if len(path) - 1 == target_len:
                    yield path
                continue
            if len(path) - 1 == target_len:
                continue
            for w in sorted(adj[v], reverse=True):
                if w in path:
                    continue
                if w != goal and (w in blocked):
                    continue
                stack.append((w, path + (w,)))


def _complete_paths(
    g: Graph, branch: tuple[int, ...], model: Sequence[tuple[int, int]]
) -> tuple[tuple[int, ...], ...] | None:
    adj = g.adjacency()
    branch_set = set(branch)
    used: set[int] = set()
    paths: list[tuple[int, ...]] = []

    def bt(idx: int) -> bool:
        if idx == len(model):
            return True
        i, j = model[idx]
        u, v = branch[i], branch[j]
        for path in _paths_between(adj, u, v, branch_set | used, g.n):
            interior = set(path[1:-1])
            used.update(interior)
            paths.append(path)
            if bt(idx + 1):
                return True
            paths.pop()
            used.difference_update(interior)
        return False

    return tuple(paths) if bt(0) else None


def find_kuratowski_subdivision(g: Graph) -> SubdivisionWitness | None:
    """Exhaustive search for a K5 or K3,3 subdivision; None if planar."""
    g.assert_canonical()
    deg = g.degrees()
    if g.m >= 10:
        quads = sorted(v for v in deg if deg[v] >= 4)
        for branch in combinations(quads, 5):
            paths = _complete_paths(g, branch, K5_MODEL_EDGES)
            if paths is not None:
                return SubdivisionWitness("K5", branch, paths)
    if g.m >= 9:
        cubs = sorted(v for v in deg if deg[v] >= 3)
        for side_a in combinations(cubs, 3):
            rest = [v for v in cubs if v not in side_a]
            for side_b in combinations(rest, 3):
                if side_b[0] < side_a[0]:
                    continue  # unordered pair of sides: canonical orientation
                branch = side_a + side_b
                paths = _complete_paths(g, branch, K33_MODEL_EDGES)
                if paths is not None:
                    return SubdivisionWitness("K33", branch, paths)
    return None


def is_planar(g: Graph) -> bool:
    """Planarity by absence of a Kuratowski subdivision."""
    return find_kuratowski_subdivision(g) is None
