"""Exact complete colorings of graphs and digraphs: adichromatic number,
a-vertex arboricity, achromatic and diachromatic numbers, feedback vertex
sets and cycle packings, with re-checkable certificates."""

from .coloring import (
    CompletenessCertificate,
    IncompleteColoring,
    ImproperColoring,
    Partition,
    RangeError,
    constrained_chi,
    greedy_complete,
    interpolate,
    verify_complete,
    verify_proper,
)
from .graph import (
    CycleWitness,
    MultiDigraph,
    MultiGraph,
    bidirect,
    butterfly_contract,
    contract_tree,
    degeneracy,
    delete_vertex,
    double,
    find_cycle,
    find_directed_cut,
    induced_subgraph,
)
from .guests import EdgeWitness, GuestClass, find_h_witness, is_h_free
from .solvers import BudgetExceeded, DacCertificate, ParamResult, chi_h, dac, nu_h, psi_h, tau_h

__version__ = "0.1.0"
