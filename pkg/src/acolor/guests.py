"""Guest classes: the forbidden patterns a color class must avoid.

``CYCLES`` (undirected cycles, bigons included) gives forests and the vertex
arboricity family, ``DICYCLES`` gives acyclic sets of a digraph, and ``EDGE``
(a single K2) gives independent sets, i.e. ordinary colorings.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Union

from .graph import CycleWitness, Host, _bits, _check_subset, find_cycle, mask_of


class GuestClass(enum.Enum):
    CYCLES = "cycles"
    DICYCLES = "dicycles"
    EDGE = "edge"

    @property
    def token(self) -> str:
        return self.value

    @property
    def directed_host(self) -> bool:
        return self is GuestClass.DICYCLES

    @classmethod
    def parse(cls, token: str) -> GuestClass:
        try:
            return cls(token)
        except ValueError:
            raise ValueError(f"unknown guest class {token!r}; expected one of "
                             + ", ".join(g.value for g in cls)) from None


@dataclass(frozen=True)
class EdgeWitness:
    u: int
    v: int

    @property
    def vertices(self) -> tuple[int, int]:
        return (self.u, self.v)

    @property
    def mask(self) -> int:
        return (1 << self.u) | (1 << self.v)

    def is_valid_in(self, host: Host) -> bool:
        if host.directed or not (0 <= self.u < host.n and 0 <= self.v < host.n):
            return False
        return self.u != self.v and host.has_edge(self.u, self.v)


HWitness = Union[CycleWitness, EdgeWitness]


def check_compatible(H: GuestClass, host: Host) -> None:
    if H.directed_host != host.directed:
        kind = "digraph" if host.directed else "graph"
        raise TypeError(f"guest class {H.token!r} does not apply to a {kind}")


def default_guest(host: Host) -> GuestClass:
    return GuestClass.DICYCLES if host.directed else GuestClass.CYCLES


def _chords(host: Host, cyc: CycleWitness) -> CycleWitness | None:
    """One step of chord reduction: a strictly shorter cycle on a subset of
    ``cyc``'s vertices, or None if ``cyc`` is already chordless."""
    vs = cyc.vertices
    k = len(vs)
    if k == 2:
        return None
    if cyc.directed:
        pos = {v: i for i, v in enumerate(vs)}
        for i, u in enumerate(vs):
            for w in _bits(host.out_adj[u] & cyc.mask):
                j = pos[w]
                if j == (i + 1) % k:
                    continue
                # chord u -> w closes with the cycle path w ... u
                if j < i:
                    return CycleWitness(vs[j:i + 1], True)
                return CycleWitness(vs[j:] + vs[:i + 1], True)
        return None
    for i in range(k):
        u, w = vs[i], vs[(i + 1) % k]
        if host.mult(u, w) >= 2:
            return CycleWitness((min(u, w), max(u, w)), False)
    pos = {v: i for i, v in enumerate(vs)}
    for i, u in enumerate(vs):
        for w in _bits(host.adj[u] & cyc.mask):
            j = pos[w]
            if j <= i + 1 or (i == 0 and j == k - 1):
                continue
            a = vs[i:j + 1]
            b = vs[j:] + vs[:i + 1]
            return CycleWitness(a if len(a) <= len(b) else b, False)
    return None


def chordless(host: Host, cyc: CycleWitness) -> CycleWitness:
    while True:
        nxt = _chords(host, cyc)
        if nxt is None:
            return cyc
        cyc = nxt


def is_induced_member(H: GuestClass, host: Host, w: HWitness) -> bool:
    if H is GuestClass.EDGE:
        return isinstance(w, EdgeWitness) and w.is_valid_in(host)
    if not isinstance(w, CycleWitness) or not w.is_valid_in(host):
        return False
    return _chords(host, w) is None


def find_h_witness(H: GuestClass, host: Host, S: Iterable[int] | None = None) -> HWitness | None:
    """An induced member of ``H`` inside ``S`` (chordless cycle or edge)."""
    check_compatible(H, host)
    if S is None:
        S = range(host.n)
    if H is GuestClass.EDGE:
        mask = _check_subset(host, S)
        for u in _bits(mask):
            later = host.adj[u] & mask & ~((1 << (u + 1)) - 1)
            if later:
                return EdgeWitness(u, (later & -later).bit_length() - 1)
        return None
    cyc = find_cycle(host, S)
    return None if cyc is None else chordless(host, cyc)


def is_h_free(H: GuestClass, host: Host, S: Iterable[int] | None = None) -> bool:
    return find_h_witness(H, host, S) is None


def _forest_checker(g) -> Callable[[int], bool]:
    adj, bigon = g.adj, g.bigon_adj

    def free(mask: int) -> bool:
        edges2 = 0
        for v in _bits(mask):
            if bigon[v] & mask:
                return False
            edges2 += (adj[v] & mask).bit_count()
        # forest iff |E| = |V| - components
        comps = 0
        rest = mask
        while rest:
            seen = frontier = rest & -rest
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= adj[v]
                frontier = nxt & rest & ~seen
                seen |= frontier
            rest &= ~seen
            comps += 1
        return edges2 // 2 == mask.bit_count() - comps

    return free


def _acyclic_checker(d) -> Callable[[int], bool]:
    in_adj = d.in_adj

    def free(mask: int) -> bool:
        rest = mask
        while rest:
            peeled = 0
            for v in _bits(rest):
                if not in_adj[v] & rest:
                    peeled |= 1 << v
            if not peeled:
                return False
            rest &= ~peeled
        return True

    return free


def _independent_checker(g) -> Callable[[int], bool]:
    adj = g.adj

    def free(mask: int) -> bool:
        for v in _bits(mask):
            if adj[v] & mask:
                return False
        return True

    return free


class FreeOracle:
    """Memoised ``mask -> H-free?`` test for one host; the search engines'
    inner loop. Heredity (subsets of free sets are free) is what makes
    every pruning rule built on it sound."""

    def __init__(self, H: GuestClass, host: Host):
        check_compatible(H, host)
        self.H = H
        self.host = host
        if H is GuestClass.CYCLES:
            self._check = _forest_checker(host)
        elif H is GuestClass.DICYCLES:
            self._check = _acyclic_checker(host)
        else:
            self._check = _independent_checker(host)
        self._cache: dict[int, bool] = {}

    def __call__(self, mask: int) -> bool:
        try:
            return self._cache[mask]
        except KeyError:
            r = self._cache[mask] = self._check(mask)
            return r

    def witness(self, mask: int) -> HWitness | None:
        return find_h_witness(self.H, self.host, _bits(mask))

    def circuits(self) -> list[int]:
        """Vertex masks of all minimal non-free sets, ascending.

        For the cycle classes these are exactly the vertex sets of chordless
        cycles; for ``EDGE`` they are the edges.
        """
        if self.H is GuestClass.EDGE:
            return sorted(mask_of(e) for e in set(self.host.edges))
        out = []
        for m in range(1, 1 << self.host.n):
            if self(m):
                continue
            if all(self(m & ~(1 << v)) for v in _bits(m)):
                out.append(m)
        return out
