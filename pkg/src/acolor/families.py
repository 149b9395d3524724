"""Generators for the graph and digraph families with known parameter values.

Vertex numbering is deterministic: the classes of multipartite families are
contiguous index ranges in declaration order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .graph import CycleWitness, MultiDigraph, MultiGraph, bidirect, double

FAMILY_TAGS = ("kn", "kmn", "dn-matching", "turan-cycle", "disjoint-cycles", "transitive", "gnp")


def complete(n: int) -> MultiGraph:
    return MultiGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(m: int, n: int) -> MultiGraph:
    return MultiGraph(m + n, [(u, m + v) for u in range(m) for v in range(n)])


def path(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def dicycle(n: int) -> MultiDigraph:
    if n < 2:
        raise ValueError("a directed cycle needs at least 2 vertices")
    return MultiDigraph(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(spokes: int) -> MultiGraph:
    """Hub 0 joined to a rim cycle on 1..spokes."""
    rim = [(1 + i, 1 + (i + 1) % spokes) for i in range(spokes)]
    return MultiGraph(spokes + 1, rim + [(0, 1 + i) for i in range(spokes)])


def grid(rows: int, cols: int) -> MultiGraph:
    idx = lambda r, c: r * cols + c
    edges = [(idx(r, c), idx(r, c + 1)) for r in range(rows) for c in range(cols - 1)]
    edges += [(idx(r, c), idx(r + 1, c)) for r in range(rows - 1) for c in range(cols)]
    return MultiGraph(rows * cols, edges)


def matching_orientation(n: int) -> MultiDigraph:
    """D_n: K_{n,n} with the matching i -> n+i and every other edge
    leaving the second class."""
    if n < 1:
        raise ValueError("D_n needs n >= 1")
    arcs = [(i, n + i) for i in range(n)]
    arcs += [(n + j, i) for i in range(n) for j in range(n) if i != j]
    return MultiDigraph(2 * n, arcs)


def cyclic_turan(n: int, k: int) -> MultiDigraph:
    """D(n, k): k independent classes of size n, all arcs class i -> i+1 (mod k)."""
    if n < 1 or k < 3:
        raise ValueError(f"D(n,k) needs n >= 1 and k >= 3, got n={n}, k={k}")
    arcs = []
    for i in range(k):
        nxt = (i + 1) % k
        arcs += [(i * n + a, nxt * n + b) for a in range(n) for b in range(n)]
    return MultiDigraph(n * k, arcs)


def disjoint_cycles(count: int, length: int, directed: bool = False):
    """Vertex-disjoint union of ``count`` cycles; cycle c uses the vertex range
    ``c*length .. c*length+length-1``. Length 2 gives bigons or digons."""
    if count < 0:
        raise ValueError("negative cycle count")
    if length < 2:
        raise ValueError(f"cycle length {length} too short")
    pairs = []
    for c in range(count):
        base = c * length
        pairs += [(base + i, base + (i + 1) % length) for i in range(length)]
    n = count * length
    return MultiDigraph(n, pairs) if directed else MultiGraph(n, pairs)


def transitive_tournament(n: int) -> MultiDigraph:
    return MultiDigraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gnp(n: int, p: float, seed: int) -> MultiGraph:
    """Erdos-Renyi G(n, p).

    Stream: MT19937 seeded as ``random.Random(seed)``; one ``getrandbits(32)``
    draw per pair (u, v), u < v, in lexicographic order; the pair is an edge
    iff the draw is below ``floor(p * 2**32)``. Reproducible bit-for-bit.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    if n < 0:
        raise ValueError("negative vertex count")
    rng = random.Random(seed)
    threshold = int(p * (1 << 32))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.getrandbits(32) < threshold:
                edges.append((u, v))
    return MultiGraph(n, edges)


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: dict = field(default_factory=dict, hash=False)
    bidirect: bool = False
    double: bool = False


def generate(spec: FamilySpec):
    p = spec.params
    try:
        tag = spec.tag
        if tag == "kn":
            host = complete(p["n"])
        elif tag == "kmn":
            host = complete_bipartite(p["m"], p["n"])
        elif tag == "dn-matching":
            host = matching_orientation(p["n"])
        elif tag == "turan-cycle":
            host = cyclic_turan(p["n"], p["k"])
        elif tag == "disjoint-cycles":
            host = disjoint_cycles(p["count"], p["length"], p.get("directed", False))
        elif tag == "transitive":
            host = transitive_tournament(p["n"])
        elif tag == "gnp":
            host = gnp(p["n"], p["p"], p["seed"])
        else:
            raise ValueError(f"unknown family {tag!r}; expected one of {', '.join(FAMILY_TAGS)}")
    except KeyError as exc:
        raise ValueError(f"family {spec.tag!r} needs parameter {exc.args[0]!r}") from None
    if spec.bidirect:
        host = bidirect(host)
    elif spec.double:
        host = double(host)
    return host


def orient_outerplay(g: MultiGraph, packing: Sequence[Sequence[int] | CycleWitness],
                     full: bool = False) -> tuple[MultiDigraph, dict[int, int]]:
    """Orient a graph around a packing of disjoint chordless cycles.

    Each packed cycle becomes a directed cycle (in the given vertex order) and
    every edge between packed cycles i < j points towards cycle j, so each pair
    of packed cycles is separated by a directed cut. By default only the packed
    vertices are kept (reindexed ascending). With ``full=True`` every vertex is
    kept and the remaining edges point from packed cycles to unpacked vertices
    and from lower to higher unpacked index, which keeps the orientation of the
    packed part separated by directed cuts as well.

    Returns the digraph and the old->new vertex map.
    """
    from .guests import GuestClass, is_induced_member

    if g.directed:
        raise TypeError("orient_outerplay expects an undirected graph")
    cycles = [tuple(c.vertices if isinstance(c, CycleWitness) else c) for c in packing]
    level: dict[int, int] = {}
    for i, cyc in enumerate(cycles):
        w = CycleWitness(cyc, False)
        if not is_induced_member(GuestClass.CYCLES, g, w):
            raise ValueError(f"packing member {cyc} is not a chordless cycle of the graph")
        for v in cyc:
            if v in level:
                raise ValueError(f"vertex {v} lies on two packed cycles")
            level[v] = i
    arcs = []
    for cyc in cycles:
        k = len(cyc)
        arcs += [(cyc[i], cyc[(i + 1) % k]) for i in range(k)]
    unpacked = len(cycles)
    for (u, v), c in g.multiplicity.items():
        lu, lv = level.get(u), level.get(v)
        if lu is not None and lu == lv:
            continue
        if not full and (lu is None or lv is None):
            continue
        ku = (lu if lu is not None else unpacked, u)
        kv = (lv if lv is not None else unpacked, v)
        arcs += [(u, v) if ku < kv else (v, u)] * c
    keep = sorted(level) if not full else list(range(g.n))
    index = {v: i for i, v in enumerate(keep)}
    return MultiDigraph(len(keep), [(index[u], index[v]) for u, v in arcs]), index

