"""Exhaustive reference computations.

Nothing here touches the search code: H-freeness of a vertex set is decided
by networkx, set partitions are enumerated as restricted-growth strings and
subsets by plain counting. Only used to cross-check the solvers on small
hosts.
"""

from __future__ import annotations

from functools import lru_cache

import networkx as nx

from .coloring import Partition
from .graph import Host, MultiDigraph
from .guests import GuestClass, check_compatible
from .solvers import DacCertificate, ParamResult

ORACLE_LIMIT = 10


class OracleLimit(ValueError):
    pass


def _nx(host: Host):
    G = nx.MultiDiGraph() if host.directed else nx.MultiGraph()
    G.add_nodes_from(range(host.n))
    G.add_edges_from(host.edges)
    return G


@lru_cache(maxsize=64)
def free_table(H: GuestClass, host: Host) -> tuple[bool, ...]:
    """``table[mask]`` is True when the vertex set ``mask`` is H-free."""
    check_compatible(H, host)
    G = _nx(host)
    n = host.n
    table = [True] * (1 << n)
    for mask in range(1 << n):
        sub = G.subgraph([v for v in range(n) if mask >> v & 1])
        if H is GuestClass.EDGE:
            table[mask] = sub.number_of_edges() == 0
        elif H is GuestClass.DICYCLES:
            table[mask] = nx.is_directed_acyclic_graph(sub)
        else:
            table[mask] = sub.number_of_nodes() == 0 or nx.is_forest(sub)
    return tuple(table)


def _guard(host: Host, limit: int | None):
    limit = ORACLE_LIMIT if limit is None else limit
    if host.n > limit:
        raise OracleLimit(f"oracle limited to {limit} vertices, host has {host.n}")


def set_partitions(n: int, block_ok=None):
    """Restricted-growth enumeration of set partitions of ``0..n-1`` as lists
    of block masks. ``block_ok`` rejects a block as soon as it is infeasible."""
    blocks: list[int] = []

    def rec(i):
        if i == n:
            yield list(blocks)
            return
        bit = 1 << i
        for c in range(len(blocks)):
            if block_ok is None or block_ok(blocks[c] | bit):
                blocks[c] |= bit
                yield from rec(i + 1)
                blocks[c] &= ~bit
        blocks.append(bit)
        yield from rec(i + 1)
        blocks.pop()

    if n == 0:
        yield []
        return
    yield from rec(0)


def complete_counts(H: GuestClass, host: Host, limit: int | None = None) -> dict[int, list[int]]:
    """Map each k admitting a complete H-coloring with k classes to the first
    such partition (as block masks) in enumeration order."""
    _guard(host, limit)
    table = free_table(H, host)
    found: dict[int, list[int]] = {}
    for blocks in set_partitions(host.n, table.__getitem__):
        k = len(blocks)
        if k in found:
            continue
        if all(not table[blocks[a] | blocks[b]] for a in range(k) for b in range(a + 1, k)):
            found[k] = blocks
    if host.n == 0:
        return {0: []}
    return found


def _coloring_result(host, found, k):
    return ParamResult(k, Partition.from_masks(host.n, found[k]), method="oracle")


def oracle_psi(H: GuestClass, host: Host, limit: int | None = None) -> ParamResult:
    found = complete_counts(H, host, limit)
    return _coloring_result(host, found, max(found))


def oracle_chi(H: GuestClass, host: Host, limit: int | None = None) -> ParamResult:
    """Fewest classes in any proper coloring (no completeness required)."""
    _guard(host, limit)
    table = free_table(H, host)
    best = None
    for blocks in set_partitions(host.n, table.__getitem__):
        if best is None or len(blocks) < len(best):
            best = blocks
    return ParamResult(len(best), Partition.from_masks(host.n, best), method="oracle")


def oracle_tau(H: GuestClass, host: Host, limit: int | None = None) -> ParamResult:
    _guard(host, limit)
    table = free_table(H, host)
    full = (1 << host.n) - 1
    best = min(range(1 << host.n), key=lambda F: (bin(F).count("1"), F) if table[full ^ F] else (host.n + 1, F))
    return ParamResult(bin(best).count("1"), tuple(v for v in range(host.n) if best >> v & 1), method="oracle")


def oracle_nu(H: GuestClass, host: Host, limit: int | None = None) -> ParamResult:
    """Most pairwise disjoint non-free vertex sets (each holds a member of H)."""
    _guard(host, limit)
    table = free_table(H, host)
    memo: dict[int, tuple[int, tuple]] = {}

    def rec(S):
        if S in memo:
            return memo[S]
        if table[S]:
            memo[S] = (0, ())
            return memo[S]
        low = S & -S
        best = rec(S ^ low)
        rest = S ^ low
        sub = rest
        while True:
            T = sub | low
            if not table[T]:
                val, sets = rec(S & ~T)
                if val + 1 > best[0]:
                    best = (val + 1, (T,) + sets)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        memo[S] = best
        return best

    val, sets = rec((1 << host.n) - 1)
    return ParamResult(val, sets, method="oracle")


def oracle_dac(d: MultiDigraph, limit: int | None = None) -> ParamResult:
    _guard(d, limit)
    table = free_table(GuestClass.DICYCLES, d)
    best = None
    for blocks in set_partitions(d.n, table.__getitem__):
        if best is not None and len(blocks) <= len(best):
            continue
        cls = {}
        for i, b in enumerate(blocks):
            for v in range(d.n):
                if b >> v & 1:
                    cls[v] = i
        pairs = {(cls[u], cls[v]) for u, v in d.arcs if cls[u] != cls[v]}
        k = len(blocks)
        if len(pairs) == k * (k - 1):
            best = blocks
    if d.n == 0:
        return ParamResult(0, DacCertificate(Partition(0, []), {}), method="oracle")
    return ParamResult(len(best), Partition.from_masks(d.n, best), method="oracle")
