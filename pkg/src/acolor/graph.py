"""Loopless multigraphs and multidigraphs, plus the transformations used by
parameter monotonicity (induced subgraphs, vertex deletion, tree contraction,
butterfly contraction, directed cuts)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    return list(_bits(mask))


@dataclass(frozen=True)
class MultiGraph:
    """Undirected loopless multigraph on vertices ``0..n-1``.

    ``edges`` is a sorted tuple of ``(u, v)`` pairs with ``u < v``; a pair
    appearing twice is a bigon.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    directed = False

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"negative vertex count {n}")
        norm = []
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @cached_property
    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbour bitmask of every vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def bigon_adj(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for (u, v), c in self.multiplicity.items():
            if c >= 2:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return tuple(adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def mult(self, u: int, v: int) -> int:
        return self.multiplicity.get((min(u, v), max(u, v)), 0)

    def neighbors(self, v: int) -> list[int]:
        return vertices_of(self.adj[v])

    @property
    def is_simple(self) -> bool:
        return all(c == 1 for c in self.multiplicity.values())

    def simplify(self) -> MultiGraph:
        return MultiGraph(self.n, sorted(self.multiplicity))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class MultiDigraph:
    """Loopless multidigraph on vertices ``0..n-1``; arcs are ``(tail, head)``.

    Parallel and antiparallel arcs are allowed; an antiparallel pair is a digon.
    """

    n: int
    arcs: tuple[tuple[int, int], ...] = ()

    directed = True

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"negative vertex count {n}")
        norm = []
        for u, v in arcs:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            norm.append((u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", tuple(sorted(norm)))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.arcs

    @cached_property
    def multiplicity(self) -> Counter:
        return Counter(self.arcs)

    @cached_property
    def out_adj(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.arcs:
            adj[u] |= 1 << v
        return tuple(adj)

    @cached_property
    def in_adj(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.arcs:
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def adj(self) -> tuple[int, ...]:
        return self.out_adj

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    has_edge = has_arc

    def out_degree(self, v: int) -> int:
        return sum(c for (u, _), c in self.multiplicity.items() if u == v)

    def in_degree(self, v: int) -> int:
        return sum(c for (_, w), c in self.multiplicity.items() if w == v)

    def underlying(self) -> MultiGraph:
        """Underlying multigraph; a digon becomes a bigon."""
        return MultiGraph(self.n, self.arcs)

    def __repr__(self) -> str:
        return f"MultiDigraph(n={self.n}, m={len(self.arcs)})"


Host = Union[MultiGraph, MultiDigraph]


@dataclass(frozen=True)
class CycleWitness:
    """A cycle given by its vertex sequence; it closes from the last vertex
    back to the first. Length 2 means a bigon (undirected) or digon."""

    vertices: tuple[int, ...]
    directed: bool

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise ValueError("a cycle needs at least two vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in cycle {self.vertices}")

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def consecutive_pairs(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_valid_in(self, host: Host) -> bool:
        if host.directed != self.directed:
            return False
        if any(not 0 <= v < host.n for v in self.vertices):
            return False
        if self.length == 2:
            u, v = self.vertices
            if self.directed:
                return host.has_arc(u, v) and host.has_arc(v, u)
            return host.mult(u, v) >= 2
        return all(host.has_edge(u, v) for u, v in self.consecutive_pairs())


def _check_subset(host: Host, S: Iterable[int]) -> int:
    mask = 0
    for v in S:
        if not 0 <= v < host.n:
            raise IndexError(f"vertex {v} out of range for n={host.n}")
        mask |= 1 << v
    return mask


def find_cycle(host: Host, S: Iterable[int] | None = None) -> CycleWitness | None:
    """First cycle closed by a depth-first search inside ``S``.

    Vertices and neighbours are explored in ascending order, so the witness is
    reproducible. Bigons and digons count as cycles of length two.
    """
    mask = (1 << host.n) - 1 if S is None else _check_subset(host, S)
    if host.directed:
        return _find_dicycle(host, mask)
    return _find_ucycle(host, mask)


def _find_ucycle(g: MultiGraph, mask: int) -> CycleWitness | None:
    adj = g.adj
    visited = 0
    for root in _bits(mask):
        if visited >> root & 1:
            continue
        visited |= 1 << root
        path = [root]
        parent = {root: -1}
        stack = [iter(vertices_of(adj[root] & mask))]
        while stack:
            v = path[-1]
            for w in stack[-1]:
                if w == parent[v]:
                    if g.mult(v, w) >= 2:
                        return CycleWitness((w, v), False)
                    continue
                if visited >> w & 1:
                    i = path.index(w)
                    return CycleWitness(tuple(path[i:]), False)
                visited |= 1 << w
                parent[w] = v
                path.append(w)
                stack.append(iter(vertices_of(adj[w] & mask)))
                break
            else:
                stack.pop()
                path.pop()
    return None


def _find_dicycle(d: MultiDigraph, mask: int) -> CycleWitness | None:
    out = d.out_adj
    done = 0
    for root in _bits(mask):
        if done >> root & 1:
            continue
        path = [root]
        on_path = 1 << root
        stack = [iter(vertices_of(out[root] & mask))]
        while stack:
            for w in stack[-1]:
                if on_path >> w & 1:
                    i = path.index(w)
                    return CycleWitness(tuple(path[i:]), True)
                if done >> w & 1:
                    continue
                path.append(w)
                on_path |= 1 << w
                stack.append(iter(vertices_of(out[w] & mask)))
                break
            else:
                stack.pop()
                v = path.pop()
                on_path &= ~(1 << v)
                done |= 1 << v
    return None


def induced_subgraph(host: Host, S: Iterable[int]) -> tuple[Host, dict[int, int]]:
    """Sub(di)graph induced by ``S``, reindexed by ascending original index.

    Returns the new host and the old->new index map.
    """
    mask = _check_subset(host, S)
    keep = vertices_of(mask)
    index = {v: i for i, v in enumerate(keep)}
    pairs = [(index[u], index[v]) for u, v in host.edges if u in index and v in index]
    return type(host)(len(keep), pairs), index


def delete_vertex(host: Host, v: int) -> tuple[Host, dict[int, int]]:
    if not 0 <= v < host.n:
        raise IndexError(f"vertex {v} out of range for n={host.n}")
    return induced_subgraph(host, [u for u in range(host.n) if u != v])


def _identify(host: Host, X: set[int], drop: set[tuple[int, int]] | None = None):
    """Identify the vertex set X into its smallest member; loops vanish."""
    target = min(X)
    keep = [v for v in range(host.n) if v not in X or v == target]
    index = {v: i for i, v in enumerate(keep)}
    for v in X:
        index[v] = index[target]
    pairs = []
    for e in host.edges:
        if drop is not None and e in drop:
            continue
        u, v = index[e[0]], index[e[1]]
        if u != v:
            pairs.append((u, v))
    return type(host)(len(keep), pairs), index


def is_tree(g: MultiGraph, X: Iterable[int]) -> bool:
    mask = _check_subset(g, X)
    size = mask.bit_count()
    if size == 0:
        return False
    sub, _ = induced_subgraph(g, vertices_of(mask))
    if len(sub.edges) != size - 1:
        return False
    return _component_count(sub.adj, (1 << size) - 1) == 1


def contract_tree(g: MultiGraph, X: Iterable[int]) -> tuple[MultiGraph, dict[int, int]]:
    """G/T: delete the edges of the induced tree G[X] and identify X.

    Edges from X to the rest survive with multiplicity, so parallel edges may
    appear. The merged vertex takes the position of ``min(X)``.
    """
    if g.directed:
        raise TypeError("contract_tree expects an undirected MultiGraph")
    X = set(X)
    if not is_tree(g, X):
        raise ValueError(f"vertex set {sorted(X)} does not induce a tree")
    return _identify(g, X)


def is_butterfly_contractible(d: MultiDigraph, arc: tuple[int, int]) -> bool:
    u, v = arc
    if d.multiplicity.get((u, v), 0) == 0:
        return False
    return d.out_degree(u) == 1 or d.in_degree(v) == 1


def butterfly_contract(d: MultiDigraph, arc: tuple[int, int]) -> tuple[MultiDigraph, dict[int, int]]:
    """Contract a butterfly-contractible arc; arising loops are dropped."""
    if not d.directed:
        raise TypeError("butterfly_contract expects a MultiDigraph")
    u, v = arc
    if not is_butterfly_contractible(d, arc):
        raise ValueError(f"arc {arc} is not butterfly-contractible")
    return _identify(d, {u, v})


def strong_components(d: MultiDigraph) -> list[list[int]]:
    """Strongly connected components in reverse topological order (Tarjan)."""
    out = d.out_adj
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[int] = []
    on_stack = set()
    comps: list[list[int]] = []
    counter = 0
    for root in range(d.n):
        if root in index:
            continue
        work = [(root, iter(vertices_of(out[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(vertices_of(out[w]))))
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(sorted(comp))
    return comps


def find_directed_cut(d: MultiDigraph) -> tuple[frozenset[int], tuple[tuple[int, int], ...]] | None:
    """A nontrivial (X, V-X) with no arc entering X, plus the cut arcs leaving X.

    X is the source strong component of the condensation (the one holding the
    smallest vertex among sources). None when ``d`` is strongly connected.
    """
    if not d.directed:
        raise TypeError("find_directed_cut expects a MultiDigraph")
    comps = strong_components(d)
    if len(comps) <= 1:
        return None
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    has_in = [False] * len(comps)
    for u, v in d.arcs:
        if comp_of[u] != comp_of[v]:
            has_in[comp_of[v]] = True
    sources = [c for i, c in enumerate(comps) if not has_in[i]]
    X = frozenset(min(sources, key=min))
    S = tuple(a for a in d.arcs if a[0] in X and a[1] not in X)
    return X, S


def delete_arcs(d: MultiDigraph, arcs: Iterable[tuple[int, int]]) -> MultiDigraph:
    """Remove one copy of each listed arc."""
    remaining = Counter(d.arcs)
    remaining.subtract(arcs)
    if any(c < 0 for c in remaining.values()):
        raise ValueError("deleting an arc that is not present")
    return MultiDigraph(d.n, remaining.elements())


def degeneracy(g: Host, multiplicity: bool = True) -> tuple[int, list[int]]:
    """Degeneracy and a min-degree elimination order.

    Every vertex has at most ``d`` neighbours later in the returned order.
    Digraphs are treated through their underlying graph. Parallel edges count
    with multiplicity; ``multiplicity=False`` gives the degeneracy of the
    simplification.
    """
    if g.directed:
        g = g.underlying()
    if multiplicity:
        weight = {}
        for (u, v), c in g.multiplicity.items():
            weight[u, v] = weight[v, u] = c
        deg = [sum(weight[v, w] for w in g.neighbors(v)) for v in range(g.n)]
    else:
        deg = [g.adj[v].bit_count() for v in range(g.n)]
    alive = set(range(g.n))
    order = []
    d = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        order.append(v)
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= weight[v, w] if multiplicity else 1
    return d, order


def bidirect(g: MultiGraph) -> MultiDigraph:
    if g.directed or not g.is_simple:
        raise ValueError("bidirect expects a simple undirected graph")
    return MultiDigraph(g.n, [a for u, v in g.edges for a in ((u, v), (v, u))])


def double(g: MultiGraph) -> MultiGraph:
    if g.directed or not g.is_simple:
        raise ValueError("double expects a simple undirected graph")
    return MultiGraph(g.n, list(g.edges) * 2)


def subdivide(g: MultiGraph, edge: tuple[int, int], times: int = 1) -> MultiGraph:
    """Replace one copy of ``edge`` by a path with ``times`` new inner vertices
    (numbered after the existing ones)."""
    u, v = sorted(edge)
    if g.mult(u, v) == 0:
        raise ValueError(f"no edge {edge}")
    rest = list(g.edges)
    rest.remove((u, v))
    chain = [u] + list(range(g.n, g.n + times)) + [v]
    rest += list(zip(chain, chain[1:]))
    return MultiGraph(g.n + times, rest)


def _component_count(adj, mask: int) -> int:
    count = 0
    while mask:
        frontier = mask & -mask
        seen = frontier
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & mask & ~seen
            seen |= frontier
        mask &= ~seen
        count += 1
    return count
