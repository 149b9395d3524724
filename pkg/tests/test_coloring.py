import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acolor.coloring import (
    ColoringError,
    ImproperColoring,
    IncompleteColoring,
    Partition,
    RangeError,
    constrained_chi,
    greedy_complete,
    interpolate,
    refinement_chain,
    verify_complete,
    verify_proper,
)
from acolor.families import complete, dicycle, disjoint_cycles, transitive_tournament
from acolor.graph import MultiDigraph
from acolor.guests import GuestClass, is_induced_member
from acolor.oracle import complete_counts, free_table, oracle_chi, oracle_psi, set_partitions

from .test_graph import hosts
from .test_guests import guest_for

C, D, E = GuestClass.CYCLES, GuestClass.DICYCLES, GuestClass.EDGE
DIGON = dicycle(2)


class TestPartition:
    def test_canonical_order(self):
        assert Partition(4, [[3, 1], [2, 0]]).blocks == ((0, 2), (1, 3))

    def test_rejects_overlap(self):
        with pytest.raises(ColoringError):
            Partition(3, [[0, 1], [1, 2]])

    def test_rejects_uncovered(self):
        with pytest.raises(ColoringError, match="uncolored"):
            Partition(3, [[0, 1]])

    def test_labels_roundtrip(self):
        P = Partition.from_labels([2, 0, 2, 1])
        assert Partition.from_labels(P.labels()) == P


class TestVerify:
    def test_digon_singletons(self):
        verify_proper(D, DIGON, Partition.singletons(2))

    def test_digon_one_block(self):
        with pytest.raises(ImproperColoring) as info:
            verify_proper(D, DIGON, Partition(2, [[0, 1]]))
        assert info.value.block == 0 and info.value.witness.length == 2

    def test_k4_pairs_proper(self):
        verify_proper(C, complete(4), Partition(4, [[0, 1], [2, 3]]))

    def test_k4_pairs_complete(self):
        cert = verify_complete(C, complete(4), Partition(4, [[0, 1], [2, 3]]))
        w = cert.witnesses[0, 1]
        assert w.length in (3, 4) and is_induced_member(C, complete(4), w)

    def test_dag_singletons_incomplete(self):
        with pytest.raises(IncompleteColoring):
            verify_complete(D, transitive_tournament(3), Partition.singletons(3))

    def test_three_dicycles_pair_coloring(self):
        # cycle a gets colors {0,1}, b {0,2}, c {1,2}
        host = disjoint_cycles(3, 3, directed=True)
        labels = [0, 0, 1, 0, 0, 2, 1, 1, 2]
        cert = verify_complete(D, host, Partition.from_labels(labels))
        assert len(cert.partition) == 3 and len(cert.witnesses) == 3

    def test_size_mismatch(self):
        with pytest.raises(ColoringError):
            verify_proper(C, complete(3), Partition.singletons(4))


class TestGreedy:
    def test_dag(self):
        assert len(greedy_complete(D, transitive_tournament(4), Partition.singletons(4))) == 1

    def test_digon(self):
        assert greedy_complete(D, DIGON, Partition.singletons(2)) == Partition.singletons(2)

    def test_triangle(self):
        assert len(greedy_complete(D, dicycle(3), Partition.singletons(3))) == 2

    def test_improper_input(self):
        with pytest.raises(ImproperColoring):
            greedy_complete(D, DIGON, Partition(2, [[0, 1]]))

    @settings(max_examples=80, deadline=None)
    @given(hosts(max_n=7), st.data())
    def test_output_complete_and_in_range(self, host, data):
        H = guest_for(host, data)
        P = greedy_complete(H, host, Partition.singletons(host.n))
        verify_complete(H, host, P)
        if host.n:
            assert oracle_chi(H, host).value <= len(P) <= oracle_psi(H, host).value


class TestConstrainedChi:
    def test_digon_singletons(self):
        assert constrained_chi(D, DIGON, Partition.singletons(2))[0] == 2

    def test_one_block(self):
        P = Partition(4, [range(4)])
        assert constrained_chi(D, transitive_tournament(4), P) == (1, P)

    def test_improper_blocks_rejected(self):
        with pytest.raises(ImproperColoring):
            constrained_chi(D, DIGON, Partition(2, [[0, 1]]))

    @settings(max_examples=60, deadline=None)
    @given(hosts(max_n=8), st.data())
    def test_maximum_complete_is_rigid(self, host, data):
        H = guest_for(host, data)
        found = complete_counts(H, host)
        top = max(found)
        P = Partition.from_masks(host.n, found[top])
        k, Q = constrained_chi(H, host, P)
        assert k == top and Q == P

    @settings(max_examples=60, deadline=None)
    @given(hosts(max_n=6), st.data())
    def test_coarsening_and_optimality(self, host, data):
        H = guest_for(host, data)
        labels = data.draw(st.lists(st.integers(0, 3), min_size=host.n, max_size=host.n))
        P = Partition.from_labels(labels)
        try:
            k, Q = constrained_chi(H, host, P)
        except ImproperColoring:
            return
        assert Q.coarsens(P) and len(Q) == k
        verify_proper(H, host, Q)
        # brute force over colorings of the blocks
        table = free_table(H, host)
        masks = P.masks
        best = min(len(groups) for groups in set_partitions(
            len(masks), lambda g: table[sum(masks[i] for i in range(len(masks)) if g >> i & 1)]))
        assert k == best


def random_chain(P, rng):
    """Split off one vertex at a time, in random order, down to singletons."""
    chain = [P]
    blocks = [list(b) for b in P.blocks]
    while any(len(b) > 1 for b in blocks):
        b = rng.choice([b for b in blocks if len(b) > 1])
        v = b.pop(rng.randrange(len(b)))
        blocks.append([v])
        chain.append(Partition(P.n, blocks))
    return chain


class TestChain:
    def test_canonical_chain(self):
        chain = refinement_chain(Partition(5, [[0, 1, 2], [3, 4]]))
        assert [len(P) for P in chain] == [5, 4, 3, 2]
        assert chain[0] == Partition.singletons(5)
        assert chain[2] == Partition(5, [[0, 1], [2], [3, 4]])
        assert all(chain[i + 1].coarsens(chain[i]) for i in range(len(chain) - 1))

    @settings(max_examples=80, deadline=None)
    @given(hosts(max_n=7), st.data(), st.integers(0, 2**32 - 1))
    def test_change_by_at_most_one(self, host, data, seed):
        H = guest_for(host, data)
        found = complete_counts(H, host)
        start = Partition.from_masks(host.n, found[max(found)])
        values = [constrained_chi(H, host, Q)[0] for Q in random_chain(start, random.Random(seed))]
        assert all(abs(a - b) <= 1 for a, b in zip(values, values[1:]))


class TestInterpolate:
    host = disjoint_cycles(3, 3, directed=True)

    @pytest.mark.parametrize("ell", [2, 3])
    def test_three_dicycles(self, ell):
        cert = interpolate(D, self.host, ell)
        assert len(cert.partition) == ell
        verify_complete(D, self.host, cert.partition)

    def test_out_of_range(self):
        with pytest.raises(RangeError) as info:
            interpolate(D, self.host, 4)
        assert (info.value.lo, info.value.hi) == (2, 3)
        assert "[2,3]" in str(info.value)

    def test_empty_host(self):
        assert len(interpolate(D, MultiDigraph(0), 0).partition) == 0

    @settings(max_examples=50, deadline=None)
    @given(hosts(max_n=7), st.data())
    def test_totality(self, host, data):
        H = guest_for(host, data)
        exists = complete_counts(H, host)
        for ell in range(0, host.n + 2):
            if ell in exists:
                cert = interpolate(H, host, ell)
                assert len(cert.partition) == ell
                verify_complete(H, host, cert.partition)
            else:
                with pytest.raises(RangeError):
                    interpolate(H, host, ell)
