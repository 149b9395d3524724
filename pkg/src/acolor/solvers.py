"""Exact solvers for the coloring and covering parameters.

Every solver returns a :class:`ParamResult` whose witness can be re-checked
without trusting the search: a complete coloring with per-pair witnesses, a
feedback set, a packing, or a diachromatic arc table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .coloring import (
    CompletenessCertificate,
    Partition,
    _k_colorable,
    greedy_complete,
    verify_complete,
)
from .graph import Host, MultiDigraph, _bits, find_cycle, vertices_of
from .guests import FreeOracle, GuestClass, check_compatible


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, nodes: int):
        super().__init__(f"{what}: search budget of {nodes} nodes exhausted")
        self.nodes = nodes


@dataclass
class ParamResult:
    value: int
    witness: Any
    method: str = "search"
    nodes: int = 0


@dataclass(frozen=True)
class DacCertificate:
    """Acyclic partition plus, for every ordered class pair (i, j), an arc
    ``(tail, head)`` with head in class i and tail in class j."""

    partition: Partition
    arcs: dict = field(hash=False)


class _Counter:
    __slots__ = ("what", "limit", "nodes")

    def __init__(self, what: str, limit: int | None):
        self.what, self.limit, self.nodes = what, limit, 0

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded(self.what, self.limit)


def _empty_certificate() -> CompletenessCertificate:
    return CompletenessCertificate(Partition(0, []), {})


def chi_h(H: GuestClass, host: Host, budget: int | None = None) -> ParamResult:
    """H-chromatic number: fewest H-free classes covering the host."""
    check_compatible(H, host)
    if host.n == 0:
        return ParamResult(0, _empty_certificate())
    free = FreeOracle(H, host)
    counter = _Counter("chi", budget)

    def counted(mask):
        counter.tick()
        return free(mask)

    items = [1 << v for v in range(host.n)]
    for k in range(1, host.n + 1):
        found = _k_colorable(items, k, counted)
        if found is not None:
            P = Partition.from_masks(host.n, found)
            return ParamResult(k, verify_complete(H, host, P), nodes=counter.nodes)
    raise AssertionError("singletons are always H-free")


def tau_h(H: GuestClass, host: Host, budget: int | None = None) -> ParamResult:
    """Smallest vertex set whose removal leaves the host H-free.

    Candidate sets are tried by increasing size in lexicographic order,
    starting at the size of a greedily found disjoint packing.
    """
    check_compatible(H, host)
    n = host.n
    free = FreeOracle(H, host)
    full = (1 << n) - 1
    counter = _Counter("tau", budget)
    lower = len(_greedy_packing(free, full))
    for size in range(lower, n + 1):
        for F in combinations(range(n), size):
            counter.tick()
            rest = full
            for v in F:
                rest &= ~(1 << v)
            if free(rest):
                return ParamResult(size, tuple(F), nodes=counter.nodes)
    raise AssertionError("the empty host is H-free")


def _greedy_packing(free: FreeOracle, mask: int) -> list:
    found = []
    while not free(mask):
        w = free.witness(mask)
        found.append(w)
        mask &= ~w.mask
    return found


def nu_h(H: GuestClass, host: Host, induced: bool = True, budget: int | None = None) -> ParamResult:
    """Largest number of vertex-disjoint members of H.

    Memoised branching on the lowest remaining vertex: it is either left
    unused or covered by a minimal non-free set (a chordless cycle or an
    edge) containing it. Packing chordless members loses nothing, so the
    value does not depend on ``induced``; the flag only selects whether
    witnesses are chord-reduced.
    """
    check_compatible(H, host)
    n = host.n
    free = FreeOracle(H, host)
    counter = _Counter("nu", budget)
    by_low: dict[int, list[int]] = {}
    for c in free.circuits():
        by_low.setdefault((c & -c).bit_length() - 1, []).append(c)
    smallest = min((c.bit_count() for cs in by_low.values() for c in cs), default=1)
    memo: dict[int, tuple[int, int]] = {}

    def best(S: int) -> int:
        if S in memo:
            return memo[S][0]
        counter.tick()
        if free(S):
            memo[S] = (0, 0)
            return 0
        low = S & -S
        v = low.bit_length() - 1
        val, choice = best(S & ~low), 0
        cap = S.bit_count() // smallest
        for c in by_low.get(v, ()):
            if val >= cap:
                break
            if c & S == c:
                cand = 1 + best(S & ~c)
                if cand > val:
                    val, choice = cand, c
        memo[S] = (val, choice)
        return val

    S = (1 << n) - 1
    value = best(S)
    packing = []
    while S:
        val, choice = memo.get(S, (0, 0))
        if val == 0:
            break
        if choice:
            if induced:
                packing.append(free.witness(choice))
            else:
                packing.append(find_cycle(host, vertices_of(choice)) if H is not GuestClass.EDGE
                               else free.witness(choice))
            S &= ~choice
        else:
            S &= ~(S & -S)
    return ParamResult(value, tuple(packing), nodes=counter.nodes)


def psi_h(H: GuestClass, host: Host, budget: int | None = None) -> ParamResult:
    """H-achromatic number: most classes in a proper and complete H-coloring.

    Restricted-growth branch and bound. A node is cut when
      * it cannot beat the incumbent even if every unassigned vertex opens a
        class of its own;
      * some pair of classes stays H-free even after absorbing every
        unassigned vertex (heredity makes that pair permanently mergeable).
    The incumbent starts from a greedy completion of the singletons and the
    search stops early on reaching tau_H + 1, which no coloring can exceed.
    """
    check_compatible(H, host)
    n = host.n
    if n == 0:
        return ParamResult(0, _empty_certificate())
    free = FreeOracle(H, host)
    full = (1 << n) - 1
    if free(full):
        return ParamResult(1, verify_complete(H, host, Partition(n, [range(n)])))
    cap = tau_h(H, host).value + 1
    start = greedy_complete(H, host, Partition.singletons(n), free)
    best = [len(start), start.masks]
    counter = _Counter("psi", budget)
    if best[0] < cap:
        _psi_search(n, free, counter, best, cap)
    P = Partition.from_masks(n, best[1])
    return ParamResult(best[0], verify_complete(H, host, P), nodes=counter.nodes)


class _Done(Exception):
    pass


def _psi_search(n: int, free, counter: _Counter, best: list, cap: int) -> None:
    rest_after = [((1 << n) - 1) & ~((1 << (i + 1)) - 1) for i in range(n)]
    blocks: list[int] = []

    def viable(R: int) -> bool:
        k = len(blocks)
        for a in range(k):
            ba = blocks[a] | R
            for b in range(a + 1, k):
                if free(ba | blocks[b]):
                    return False
        return True

    def rec(i: int) -> None:
        counter.tick()
        if i == n:
            best[0] = len(blocks)
            best[1] = list(blocks)
            if best[0] >= cap:
                raise _Done
            return
        R = rest_after[i]
        bit = 1 << i
        # open a new class first: large colorings are found early
        if len(blocks) + (n - i) > best[0]:
            blocks.append(bit)
            if viable(R):
                rec(i + 1)
            blocks.pop()
        if len(blocks) + (n - i - 1) > best[0]:
            for c in range(len(blocks)):
                old = blocks[c]
                if free(old | bit):
                    blocks[c] = old | bit
                    if viable(R):
                        rec(i + 1)
                    blocks[c] = old

    blocks.append(1)
    try:
        if viable(rest_after[0]):
            rec(1)
    except _Done:
        pass


def _arc_between(out_adj, A: int, B: int) -> tuple[int, int] | None:
    """Lexicographically first arc with tail in A and head in B."""
    for u in _bits(A):
        hit = out_adj[u] & B
        if hit:
            return u, (hit & -hit).bit_length() - 1
    return None


def dac_table(d: MultiDigraph, P: Partition) -> dict | None:
    out = d.out_adj
    masks = P.masks
    table = {}
    for i, mi in enumerate(masks):
        for j, mj in enumerate(masks):
            if i != j:
                arc = _arc_between(out, mj, mi)
                if arc is None:
                    return None
                table[i, j] = arc
    return table


def dac(d: MultiDigraph, budget: int | None = None) -> ParamResult:
    """Diachromatic number: most acyclic classes such that every ordered pair
    of classes is joined by an arc."""
    if not d.directed:
        raise TypeError("dac expects a MultiDigraph")
    n = d.n
    if n == 0:
        return ParamResult(0, DacCertificate(Partition(0, []), {}))
    free = FreeOracle(GuestClass.DICYCLES, d)
    out = d.out_adj
    m = len(set(d.arcs))
    cap = min(n, int((1 + math.isqrt(1 + 4 * m)) // 2))
    counter = _Counter("dac", budget)
    rest_after = [((1 << n) - 1) & ~((1 << (i + 1)) - 1) for i in range(n)]
    best = [0, None]
    blocks: list[int] = []

    def arc(A, B):
        for u in _bits(A):
            if out[u] & B:
                return True
        return False

    def viable(R: int) -> bool:
        k = len(blocks)
        for a in range(k):
            ba = blocks[a] | R
            for b in range(a + 1, k):
                bb = blocks[b] | R
                if not (arc(ba, bb) and arc(bb, ba)):
                    return False
        return True

    def rec(i: int) -> None:
        counter.tick()
        if i == n:
            if len(blocks) > best[0]:
                best[0], best[1] = len(blocks), list(blocks)
                if best[0] >= cap:
                    raise _Done
            return
        R = rest_after[i]
        bit = 1 << i
        if len(blocks) + (n - i) > best[0]:
            blocks.append(bit)
            if viable(R):
                rec(i + 1)
            blocks.pop()
        if len(blocks) + (n - i - 1) > best[0]:
            for c in range(len(blocks)):
                old = blocks[c]
                if free(old | bit):
                    blocks[c] = old | bit
                    if viable(R):
                        rec(i + 1)
                    blocks[c] = old

    blocks.append(1)
    try:
        if viable(rest_after[0]):
            rec(1)
    except _Done:
        pass
    P = Partition.from_masks(n, best[1])
    return ParamResult(best[0], DacCertificate(P, dac_table(d, P)), nodes=counter.nodes)
