"""Corpus sweeps: one solver run per instance, written as a tab-separated
table for scatter plots (tau vs ava, degeneracy vs ava) plus a short summary
of the largest observed ratios."""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import networkx as nx

from . import families as fam
from .graph import Host, MultiDigraph, MultiGraph, degeneracy
from .guests import GuestClass
from .solvers import BudgetExceeded, chi_h, dac, nu_h, psi_h, tau_h

COLUMNS = ("id", "kind", "n", "m", "simple", "planar", "chi_h", "psi_h", "tau_h", "nu_h",
           "chromatic", "achromatic", "degeneracy", "dac", "nodes", "budget")


@dataclass(frozen=True)
class Instance:
    id: str
    host: Host


def trial_seeds(seed: int, trials: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(32) for _ in range(trials)]


def gnp_corpus(n: int, p: float, trials: int, seed: int) -> list[Instance]:
    return [Instance(f"gnp-n{n}-p{p:g}-s{s}", fam.gnp(n, p, s)) for s in trial_seeds(seed, trials)]


def random_orientation(g: MultiGraph, seed: int, digon_rate: float = 0.1) -> MultiDigraph:
    """Orient each edge by a seeded coin; with probability ``digon_rate`` an
    edge becomes a digon instead."""
    rng = random.Random(seed)
    arcs = []
    for u, v in g.edges:
        r = rng.getrandbits(32) / 2**32
        if r < digon_rate:
            arcs += [(u, v), (v, u)]
        elif r < (1 + digon_rate) / 2:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return MultiDigraph(g.n, arcs)


def planar_fixtures() -> list[Instance]:
    out = [Instance(f"cycle-{k}", fam.cycle(k)) for k in (3, 5, 8)]
    out += [Instance(f"wheel-{k}", fam.wheel(k)) for k in (3, 4, 5, 6, 7, 8, 9)]
    out += [Instance(f"grid-{r}x{c}", fam.grid(r, c)) for r, c in ((2, 3), (2, 4), (3, 3), (2, 5), (3, 4))]
    out += [Instance("k4", fam.complete(4)), Instance("k24", fam.complete_bipartite(2, 4))]
    out.append(Instance("triangles-3", fam.disjoint_cycles(3, 3)))
    return out


def families_corpus() -> list[Instance]:
    out = [Instance(f"k{n}", fam.complete(n)) for n in range(1, 9)]
    out += [Instance(f"k{m},{n}", fam.complete_bipartite(m, n)) for m in range(1, 6) for n in range(m, 6)]
    out += [Instance(f"dn-{n}", fam.matching_orientation(n)) for n in range(1, 5)]
    out += [Instance(f"transitive-{n}", fam.transitive_tournament(n)) for n in range(1, 8)]
    out += [Instance(f"turan-{n},{k}", fam.cyclic_turan(n, k)) for n in range(1, 4) for k in (3, 4)]
    for n in (2, 3):
        c = n * (n - 1) // 2
        out.append(Instance(f"cycles-{c}x3", fam.disjoint_cycles(c, 3)))
        out.append(Instance(f"dicycles-{c}x3", fam.disjoint_cycles(c, 3, directed=True)))
    out += [Instance(f"dicycle-{k}", fam.dicycle(k)) for k in (2, 3, 5)]
    seen = {inst.id for inst in out}
    out += [inst for inst in planar_fixtures() if inst.id not in seen]
    return out


def mixed_corpus(size: int = 500, seed: int = 2024) -> list[Instance]:
    """Family grid topped up with G(n, p) graphs (n <= 10) and seeded
    orientations of them until ``size`` instances."""
    out = families_corpus()
    rng = random.Random(seed)
    i = 0
    while len(out) < size:
        n = rng.randint(3, 10)
        p = rng.choice((0.2, 0.3, 0.5, 0.8))
        s = rng.getrandbits(32)
        g = fam.gnp(n, p, s)
        if i % 3 == 2:
            out.append(Instance(f"orient-n{n}-p{p:g}-s{s}", random_orientation(g, s)))
        else:
            out.append(Instance(f"gnp-n{n}-p{p:g}-s{s}", g))
        i += 1
    return out[:size]


def is_planar(host: Host) -> bool:
    G = nx.Graph()
    G.add_nodes_from(range(host.n))
    G.add_edges_from(host.edges)
    return nx.check_planarity(G)[0]


def measure(inst: Instance, budget: int | None = None) -> dict:
    """All parameters of one instance as a table row (strings)."""
    host = inst.host
    row = dict.fromkeys(COLUMNS, "-")
    row.update(id=inst.id, kind="digraph" if host.directed else "graph",
               n=str(host.n), m=str(len(host.edges)), budget="0")
    row["planar"] = "1" if is_planar(host) else "0"
    if not host.directed:
        row["simple"] = "1" if host.is_simple else "0"
    H = GuestClass.DICYCLES if host.directed else GuestClass.CYCLES
    nodes = 0
    try:
        for col, fn in (("chi_h", chi_h), ("psi_h", psi_h), ("tau_h", tau_h), ("nu_h", nu_h)):
            r = fn(H, host, budget=budget)
            row[col] = str(r.value)
            nodes += r.nodes
        if host.directed:
            r = dac(host, budget=budget)
            row["dac"] = str(r.value)
            nodes += r.nodes
        else:
            for col, fn in (("chromatic", chi_h), ("achromatic", psi_h)):
                r = fn(GuestClass.EDGE, host, budget=budget)
                row[col] = str(r.value)
                nodes += r.nodes
            row["degeneracy"] = str(degeneracy(host)[0])
    except BudgetExceeded:
        row["budget"] = "1"
    row["nodes"] = str(nodes)
    return row


def _timed(args):
    inst, budget = args
    t = time.perf_counter()
    row = measure(inst, budget)
    row["runtime_s"] = f"{time.perf_counter() - t:.4f}"
    return row


def run(instances: list[Instance], budget: int | None = None, jobs: int = 1) -> list[dict]:
    work = [(inst, budget) for inst in instances]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_timed, work, chunksize=4))
    return [_timed(w) for w in work]


def format_table(rows: list[dict], timing: bool = False) -> str:
    cols = COLUMNS + (("runtime_s",) if timing else ())
    out = ["\t".join(cols)]
    out += ["\t".join(r[c] for c in cols) for r in rows]
    return "\n".join(out) + "\n"


def summarize(rows: list[dict]) -> dict:
    """Largest ratios tau/ava and degeneracy/ava over simple graphs, and
    tau/(ava^2 log ava) over planar ones with ava >= 2.

    ``fitted_F`` is the smallest F with tau <= F * ava on every row and
    ``violations`` counts rows breaking that fitted bound.
    """
    def num(r, c):
        return int(r[c]) if r[c] != "-" else None

    graphs = [r for r in rows if r["kind"] == "graph" and r["budget"] == "0"
              and r["simple"] == "1" and num(r, "psi_h")]
    tau_ratio = [(num(r, "tau_h") / num(r, "psi_h"), r["id"]) for r in graphs]
    deg_ratio = [(num(r, "degeneracy") / num(r, "psi_h"), r["id"]) for r in graphs]
    planar = [(num(r, "tau_h") / (num(r, "psi_h") ** 2 * math.log(num(r, "psi_h"))), r["id"])
              for r in graphs if r["planar"] == "1" and num(r, "psi_h") >= 2]
    F = max((x for x, _ in tau_ratio), default=0.0)
    violations = sum(1 for r in graphs if num(r, "tau_h") > F * num(r, "psi_h") + 1e-12)
    best = lambda xs: max(xs, default=(float("nan"), "-"))
    return {
        "graphs": len(graphs),
        "fitted_F": F,
        "violations": violations,
        "max_tau_over_ava": best(tau_ratio),
        "max_deg_over_ava": best(deg_ratio),
        "max_tau_over_ava2logava_planar": best(planar),
    }


def format_summary(s: dict) -> str:
    out = [f"graphs\t{s['graphs']}", f"fitted_F\t{s['fitted_F']:.6f}", f"violations\t{s['violations']}"]
    for key in ("max_tau_over_ava", "max_deg_over_ava", "max_tau_over_ava2logava_planar"):
        val, inst = s[key]
        out.append(f"{key}\t{val:.6f}\t{inst}")
    return "\n".join(out) + "\n"
