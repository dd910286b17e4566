"""Core graph model: simple graphs, subgraph selections, edge partitions."""

from __future__ import annotations

from typing import Iterable, Iterator

Edge = tuple[int, int]


def canon_edge(u: int, v: int) -> Edge:
    """Canonical form of an undirected edge: endpoints ascending."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on integer labels.

    Labels live in ``0..n-1``.  ``vertices`` may be a strict subset of that
    range: edge-induced subgraphs keep host labels so a coloring of a part
    can be merged back onto the host.  Degrees, maximum degree and normality
    quantify over ``vertices`` only.
    """

    __slots__ = ("n", "_vertices", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge] = (),
                 vertices: Iterable[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        es: set[Edge] = set()
        for u, v in edges:
            e = canon_edge(int(u), int(v))
            if e[0] < 0 or e[1] >= n:
                raise ValueError(f"edge {e} outside 0..{n - 1}")
            if e in es:
                raise ValueError(f"duplicate edge {e}")
            es.add(e)
        if vertices is None:
            verts = list(range(n))
        else:
            verts = sorted(set(int(v) for v in vertices))
            if verts and (verts[0] < 0 or verts[-1] >= n):
                raise ValueError("vertex label outside 0..n-1")
        vset = set(verts)
        adj: dict[int, set[int]] = {v: set() for v in verts}
        for u, v in es:
            if u not in vset or v not in vset:
                raise ValueError(f"edge {(u, v)} has endpoint outside vertex set")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = tuple(verts)
        self._edges = frozenset(es)
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return canon_edge(u, v) in self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(ns) for ns in self._adj.values()), default=0)

    def degree_sequence(self) -> list[int]:
        return sorted((len(ns) for ns in self._adj.values()), reverse=True)

    def is_regular(self) -> bool:
        degs = {len(ns) for ns in self._adj.values()}
        return len(degs) <= 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self._vertices == other._vertices
                and self._edges == other._edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self._edges)}, |V|={len(self._vertices)})"


def is_normal(g: Graph) -> bool:
    """True iff ``g`` has no isolated vertices and no isolated edges."""
    for v in g.vertices:
        if g.degree(v) == 0:
            return False
    for u, v in g.edges:
        if g.degree(u) == 1 and g.degree(v) == 1:
            return False
    return True


def edge_induced(g: Graph, s: Iterable[Edge]) -> Graph:
    """Subgraph with edge set ``s`` and vertex set the endpoints of ``s``."""
    es = [canon_edge(u, v) for u, v in s]
    for e in es:
        if e not in g.edges:
            raise ValueError(f"edge {e} not in host graph")
    verts = set()
    for u, v in es:
        verts.add(u)
        verts.add(v)
    return Graph(g.n, es, vertices=verts)


class SubgraphSelection:
    """A mutable subset H of a host graph's edges with degree bookkeeping.

    Maintains, incrementally under add/remove:
      * per-vertex selected degree (degree in H),
      * the isolated-edge sets of H and of its complement.

    Single-writer: one mutator at a time, no internal locking.  ``version``
    bumps on every mutation and protects against stale moves.
    """

    __slots__ = ("host", "_selected", "_deg", "_iso_sel", "_iso_unsel", "version")

    def __init__(self, host: Graph, edges: Iterable[Edge] = ()):
        self.host = host
        self._selected: set[Edge] = set()
        self._deg = {v: 0 for v in host.vertices}
        self._iso_sel: set[Edge] = set()
        self._iso_unsel: set[Edge] = set()
        self.version = 0
        for e in host.edges:
            self._update_isolation(e)
        for e in edges:
            self.add(canon_edge(*e))

    # -- queries ---------------------------------------------------------

    @property
    def selected(self) -> frozenset[Edge]:
        return frozenset(self._selected)

    def complement_edges(self) -> frozenset[Edge]:
        return frozenset(self.host.edges - self._selected)

    def is_selected(self, e: Edge) -> bool:
        return e in self._selected

    def deg(self, v: int) -> int:
        """Degree of v inside the selection."""
        return self._deg[v]

    def codeg(self, v: int) -> int:
        """Degree of v in the complement of the selection."""
        return self.host.degree(v) - self._deg[v]

    def selected_neighbors(self, v: int) -> list[int]:
        return [w for w in self.host.neighbors(v)
                if canon_edge(v, w) in self._selected]

    def unselected_neighbors(self, v: int) -> list[int]:
        return [w for w in self.host.neighbors(v)
                if canon_edge(v, w) not in self._selected]

    @property
    def isolated_selected(self) -> frozenset[Edge]:
        return frozenset(self._iso_sel)

    @property
    def isolated_unselected(self) -> frozenset[Edge]:
        return frozenset(self._iso_unsel)

    def potential(self) -> tuple[int, int]:
        """Lexicographic pair (isolated edges on both sides, |E(H)|)."""
        return (len(self._iso_sel) + len(self._iso_unsel), len(self._selected))

    def max_selected_degree(self) -> int:
        return max(self._deg.values(), default=0)

    def copy(self) -> "SubgraphSelection":
        dup = SubgraphSelection.__new__(SubgraphSelection)
        dup.host = self.host
        dup._selected = set(self._selected)
        dup._deg = dict(self._deg)
        dup._iso_sel = set(self._iso_sel)
        dup._iso_unsel = set(self._iso_unsel)
        dup.version = self.version
        return dup

    # -- mutation --------------------------------------------------------

    def add(self, e: Edge) -> None:
        if e not in self.host.edges:
            raise ValueError(f"edge {e} not in host graph")
        if e in self._selected:
            raise ValueError(f"edge {e} already selected")
        self._selected.add(e)
        self._deg[e[0]] += 1
        self._deg[e[1]] += 1
        self._refresh_around(e)
        self.version += 1

    def remove(self, e: Edge) -> None:
        if e not in self._selected:
            raise ValueError(f"edge {e} not selected")
        self._selected.remove(e)
        self._deg[e[0]] -= 1
        self._deg[e[1]] -= 1
        self._refresh_around(e)
        self.version += 1

    def _refresh_around(self, e: Edge) -> None:
        for v in e:
            for w in self.host.neighbors(v):
                self._update_isolation(canon_edge(v, w))

    def _update_isolation(self, e: Edge) -> None:
        u, v = e
        if e in self._selected:
            self._iso_unsel.discard(e)
            if self._deg[u] == 1 and self._deg[v] == 1:
                self._iso_sel.add(e)
            else:
                self._iso_sel.discard(e)
        else:
            self._iso_sel.discard(e)
            if self.codeg(u) == 1 and self.codeg(v) == 1:
                self._iso_unsel.add(e)
            else:
                self._iso_unsel.discard(e)


def complement_selection(sel: SubgraphSelection) -> SubgraphSelection:
    """Selection picking exactly the edges ``sel`` leaves out."""
    return SubgraphSelection(sel.host, sel.host.edges - sel.selected)


class EdgePartition:
    """Ordered list of disjoint, nonempty edge sets covering the host."""

    __slots__ = ("host", "parts")

    def __init__(self, host: Graph, parts: Iterable[Iterable[Edge]]):
        self.host = host
        self.parts: list[frozenset[Edge]] = []
        seen: set[Edge] = set()
        for i, p in enumerate(parts):
            pset = frozenset(canon_edge(u, v) for u, v in p)
            if not pset:
                raise ValueError(f"part {i} is empty")
            if pset & seen:
                raise ValueError(f"part {i} overlaps an earlier part")
            if not pset <= host.edges:
                raise ValueError(f"part {i} contains non-host edges")
            seen |= pset
            self.parts.append(pset)
        if seen != host.edges:
            raise ValueError("parts do not cover the host edge set")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[frozenset[Edge]]:
        return iter(self.parts)

    @property
    def k(self) -> int:
        """Index of the last part (parts are G_0 .. G_k)."""
        return len(self.parts) - 1

    def part_graph(self, i: int) -> Graph:
        return edge_induced(self.host, self.parts[i])

    def part_graphs(self) -> list[Graph]:
        return [self.part_graph(i) for i in range(len(self.parts))]
