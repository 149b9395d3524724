"""Colorings as vertex partitions: properness and completeness checks,
greedy merging, partition-constrained chromatic numbers and the
interpolation construction."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Host, mask_of, vertices_of
from .guests import FreeOracle, GuestClass, HWitness, check_compatible, find_h_witness

log = logging.getLogger(__name__)


class ColoringError(ValueError):
    pass


class ImproperColoring(ColoringError):
    def __init__(self, block: int, witness: HWitness):
        super().__init__(f"class {block} contains {witness}")
        self.block = block
        self.witness = witness


class IncompleteColoring(ColoringError):
    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"classes {pair[0]} and {pair[1]} can be merged")
        self.pair = pair


class RangeError(ValueError):
    """Requested number of colors lies outside [chi_H, Psi_H]."""

    def __init__(self, ell: int, lo: int, hi: int):
        super().__init__(f"no complete coloring with {ell} colors; legal range is [{lo},{hi}]")
        self.ell, self.lo, self.hi = ell, lo, hi


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering ``0..n-1``, ordered by least element."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        norm = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else -1)
        seen = set()
        for b in norm:
            if not b:
                raise ColoringError("empty block")
            for v in b:
                if not 0 <= v < n:
                    raise ColoringError(f"vertex {v} out of range for n={n}")
                if v in seen:
                    raise ColoringError(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise ColoringError(f"vertices {missing} are uncolored")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", tuple(norm))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> Partition:
        return cls(n, [vertices_of(m) for m in masks])

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Partition:
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(labels):
            groups.setdefault(c, []).append(v)
        return cls(len(labels), groups.values())

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls(n, [(v,) for v in range(n)])

    @property
    def masks(self) -> list[int]:
        return [mask_of(b) for b in self.blocks]

    def labels(self) -> list[int]:
        out = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                out[v] = i
        return out

    def __len__(self) -> int:
        return len(self.blocks)

    def coarsens(self, finer: Partition) -> bool:
        """True if every block of ``finer`` sits inside one block of self."""
        lab = self.labels()
        return all(len({lab[v] for v in b}) == 1 for b in finer.blocks)


@dataclass(frozen=True)
class CompletenessCertificate:
    partition: Partition
    witnesses: dict  # (i, j) with i < j -> HWitness inside blocks i and j

    def __hash__(self):
        return hash((self.partition, tuple(sorted(self.witnesses.items()))))


def _checked(H: GuestClass, host: Host, P: Partition) -> None:
    check_compatible(H, host)
    if P.n != host.n:
        raise ColoringError(f"partition covers {P.n} vertices, host has {host.n}")


def verify_proper(H: GuestClass, host: Host, P: Partition) -> None:
    """Raise ImproperColoring naming the first block that holds a member of H."""
    _checked(H, host, P)
    for i, b in enumerate(P.blocks):
        w = find_h_witness(H, host, b)
        if w is not None:
            raise ImproperColoring(i, w)


def verify_complete(H: GuestClass, host: Host, P: Partition) -> CompletenessCertificate:
    """Witness for every pair of blocks; raises if some pair merges freely."""
    verify_proper(H, host, P)
    witnesses = {}
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            w = find_h_witness(H, host, P.blocks[i] + P.blocks[j])
            if w is None:
                raise IncompleteColoring((i, j))
            witnesses[i, j] = w
    return CompletenessCertificate(P, witnesses)


def is_proper(H: GuestClass, host: Host, P: Partition) -> bool:
    try:
        verify_proper(H, host, P)
    except ImproperColoring:
        return False
    return True


def is_complete(H: GuestClass, host: Host, P: Partition) -> bool:
    try:
        verify_complete(H, host, P)
    except ColoringError:
        return False
    return True


def greedy_complete(H: GuestClass, host: Host, P: Partition, free: FreeOracle | None = None) -> Partition:
    """Merge the first pair (in canonical order) with an H-free union until
    no such pair remains."""
    verify_proper(H, host, P)
    free = free or FreeOracle(H, host)
    blocks = P.masks
    merged = True
    while merged:
        merged = False
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                if free(blocks[i] | blocks[j]):
                    blocks[i] |= blocks.pop(j)
                    blocks.sort(key=lambda m: m & -m)
                    merged = True
                    break
            if merged:
                break
    return Partition.from_masks(host.n, blocks)


def constrained_chi(H: GuestClass, host: Host, P: Partition,
                    free: FreeOracle | None = None) -> tuple[int, Partition]:
    """Fewest H-free color classes in a coloring constant on every block of P.

    Exact iterative deepening over block -> color assignments. Blocks are taken
    by decreasing size; block ``i`` may open at most color ``i`` (0-based).
    """
    _checked(H, host, P)
    free = free or FreeOracle(H, host)
    masks = P.masks
    for i, m in enumerate(masks):
        if not free(m):
            raise ImproperColoring(i, free.witness(m))
    if not masks:
        return 0, P
    order = sorted(range(len(masks)), key=lambda i: (-masks[i].bit_count(), i))
    items = [masks[i] for i in order]
    for k in range(1, len(items) + 1):
        found = _k_colorable(items, k, free)
        if found is not None:
            return k, Partition.from_masks(host.n, found)
    raise AssertionError("unreachable: the block partition itself is a coloring")


def _k_colorable(items: list[int], k: int, free) -> list[int] | None:
    classes: list[int] = []
    t = len(items)

    def rec(i: int) -> bool:
        if i == t:
            return True
        m = items[i]
        for c in range(len(classes)):
            merged = classes[c] | m
            if free(merged):
                old = classes[c]
                classes[c] = merged
                if rec(i + 1):
                    return True
                classes[c] = old
        if len(classes) < k:
            classes.append(m)
            if rec(i + 1):
                return True
            classes.pop()
        return False

    return list(classes) if rec(0) else None


def refinement_chain(P: Partition) -> list[Partition]:
    """P_r = P, ..., P_0 = singletons, each step splitting the largest vertex
    off the first largest block. Returned in order P_0 .. P_r."""
    chain = [P]
    while len(chain[-1]) < P.n:
        blocks = [list(b) for b in chain[-1].blocks]
        size = max(len(b) for b in blocks)
        big = min(b for b in blocks if len(b) == size)
        v = big.pop()
        blocks.append([v])
        chain.append(Partition(P.n, blocks))
    chain.reverse()
    return chain


def interpolate(H: GuestClass, host: Host, ell: int, budget: int | None = None) -> CompletenessCertificate:
    """A complete H-coloring with exactly ``ell`` classes.

    Walks the refinement chain from a maximum complete coloring down to the
    singletons; constrained chromatic numbers along it move in steps of at
    most one, so some link attains ``ell``.
    """
    from .solvers import chi_h, psi_h

    free = FreeOracle(H, host)
    lo = chi_h(H, host, budget=budget).value
    top = psi_h(H, host, budget=budget)
    hi = top.value
    if not lo <= ell <= hi:
        raise RangeError(ell, lo, hi)
    if host.n == 0:
        return top.witness
    for Q in refinement_chain(top.witness.partition):
        k, coloring = constrained_chi(H, host, Q, free)
        if k == ell:
            break
    else:
        raise AssertionError(f"no chain link reached {ell} colors")
    try:
        return verify_complete(H, host, coloring)
    except IncompleteColoring:
        log.warning("optimal constrained coloring with %d classes was not complete; "
                    "completing greedily", ell)
        done = greedy_complete(H, host, coloring, free)
        if len(done) != ell:
            raise AssertionError("greedy completion changed the class count")
        return verify_complete(H, host, done)
