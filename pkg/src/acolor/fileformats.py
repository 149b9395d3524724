"""Plain-text graph and certificate files.

Graph file::

    digraph 3          # or: graph <n>
    0 1                # one edge/arc per line, repeated lines = multiplicity
    1 2
    2 0

Certificate file (coloring)::

    coloring 2
    class 0: 0 1
    class 1: 2
    witness 0 1: 0 1 2          # cycle through the listed vertices
    witness 0 1: digon 0 2      # or bigon u v / edge u v
    arc 0 1: 2 0                # diachromatic only: arc 2 -> 0, head in
                                # class 0, tail in class 1

Other certificate kinds: ``fvs <k>`` with ``vertices: ...``; ``packing <k>``
with ``member <i>: ...`` lines; ``degeneracy <d>`` with ``counting:
multiplicity|simple`` and ``order: ...``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import CompletenessCertificate, Partition
from .graph import CycleWitness, Host, MultiDigraph, MultiGraph, mask_of, vertices_of
from .guests import EdgeWitness, GuestClass, check_compatible, find_h_witness
from .solvers import DacCertificate


class FormatError(ValueError):
    def __init__(self, msg: str, lineno: int | None = None):
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)
        self.lineno = lineno


class VerificationError(ValueError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text: str) -> Host:
    lines = iter(_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty graph file") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] not in ("graph", "digraph"):
        raise FormatError(f"bad header {header!r}; expected 'graph <n>' or 'digraph <n>'", lineno)
    n = _int(parts[1], lineno)
    if n < 0:
        raise FormatError("negative vertex count", lineno)
    pairs = []
    for lineno, line in lines:
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(f"expected two vertex indices, got {line!r}", lineno)
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise FormatError(f"vertex {x} out of range 0..{n - 1}", lineno)
        if u == v:
            raise FormatError(f"loop at vertex {u}", lineno)
        pairs.append((u, v))
    return MultiDigraph(n, pairs) if parts[0] == "digraph" else MultiGraph(n, pairs)


def format_graph(host: Host) -> str:
    out = [f"{'digraph' if host.directed else 'graph'} {host.n}"]
    out += [f"{u} {v}" for u, v in host.edges]
    return "\n".join(out) + "\n"


def read_graph(path) -> Host:
    with open(path) as fh:
        return parse_graph(fh.read())


# -- certificates --------------------------------------------------------------

@dataclass
class Certificate:
    kind: str  # coloring | fvs | packing | degeneracy
    value: int
    classes: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)  # (i, j) -> (form, vertices)
    arcs: dict = field(default_factory=dict)  # (i, j) -> (tail, head)
    vertices: list = field(default_factory=list)
    members: list = field(default_factory=list)  # [(form, vertices)]
    counting: str = "multiplicity"


def _witness_form(w) -> tuple[str, tuple[int, ...]]:
    if isinstance(w, EdgeWitness):
        return "edge", w.vertices
    if w.length == 2:
        return ("digon" if w.directed else "bigon"), w.vertices
    return "cycle", w.vertices


def _format_form(form: str, vs) -> str:
    body = " ".join(map(str, vs))
    return body if form == "cycle" else f"{form} {body}"


def format_coloring(cert: CompletenessCertificate | DacCertificate) -> str:
    P = cert.partition
    out = [f"coloring {len(P)}"]
    out += [f"class {i}: " + " ".join(map(str, b)) for i, b in enumerate(P.blocks)]
    if isinstance(cert, DacCertificate):
        out += [f"arc {i} {j}: {u} {v}" for (i, j), (u, v) in sorted(cert.arcs.items())]
    else:
        for (i, j), w in sorted(cert.witnesses.items()):
            out.append(f"witness {i} {j}: " + _format_form(*_witness_form(w)))
    return "\n".join(out) + "\n"


def format_fvs(vertices) -> str:
    vs = sorted(vertices)
    return f"fvs {len(vs)}\nvertices: {' '.join(map(str, vs))}\n".replace(": \n", ":\n")


def format_packing(members) -> str:
    out = [f"packing {len(members)}"]
    out += [f"member {i}: " + _format_form(*_witness_form(w)) for i, w in enumerate(members)]
    return "\n".join(out) + "\n"


def format_degeneracy(d: int, order, multiplicity: bool = True) -> str:
    counting = "multiplicity" if multiplicity else "simple"
    body = f"degeneracy {d}\ncounting: {counting}\norder: {' '.join(map(str, order))}\n"
    return body.replace(": \n", ":\n")


def _parse_form(toks: list[str], lineno: int) -> tuple[str, tuple[int, ...]]:
    if toks and toks[0] in ("bigon", "digon", "edge"):
        vs = tuple(_int(t, lineno) for t in toks[1:])
        if len(vs) != 2:
            raise FormatError(f"{toks[0]} needs exactly two vertices", lineno)
        return toks[0], vs
    vs = tuple(_int(t, lineno) for t in toks)
    if len(vs) < 2:
        raise FormatError("a cycle needs at least two vertices", lineno)
    return "cycle", vs


def _labelled(line: str, keyword: str, nlabels: int, lineno: int):
    head, sep, body = line.partition(":")
    if not sep:
        raise FormatError(f"missing ':' in {keyword} line", lineno)
    toks = head.split()
    if len(toks) != nlabels + 1:
        raise FormatError(f"{keyword} line needs {nlabels} index(es) before ':'", lineno)
    return tuple(_int(t, lineno) for t in toks[1:]), body.split()


def parse_certificate(text: str) -> Certificate:
    lines = iter(_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty certificate file") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] not in ("coloring", "fvs", "packing", "degeneracy"):
        raise FormatError(f"bad certificate header {header!r}", lineno)
    cert = Certificate(parts[0], _int(parts[1], lineno))
    for lineno, line in lines:
        keyword = line.split()[0].rstrip(":")
        if cert.kind == "coloring" and keyword == "class":
            (i,), toks = _labelled(line, "class", 1, lineno)
            if i != len(cert.classes):
                raise FormatError(f"class {i} out of sequence", lineno)
            cert.classes.append([_int(t, lineno) for t in toks])
        elif cert.kind == "coloring" and keyword == "witness":
            (i, j), toks = _labelled(line, "witness", 2, lineno)
            cert.witnesses[min(i, j), max(i, j)] = _parse_form(toks, lineno)
        elif cert.kind == "coloring" and keyword == "arc":
            (i, j), toks = _labelled(line, "arc", 2, lineno)
            if len(toks) != 2:
                raise FormatError("arc line needs tail and head", lineno)
            cert.arcs[i, j] = (_int(toks[0], lineno), _int(toks[1], lineno))
        elif cert.kind == "fvs" and keyword == "vertices":
            cert.vertices = [_int(t, lineno) for t in line.partition(":")[2].split()]
        elif cert.kind == "degeneracy" and keyword == "counting":
            cert.counting = line.partition(":")[2].strip()
            if cert.counting not in ("multiplicity", "simple"):
                raise FormatError(f"unknown counting {cert.counting!r}", lineno)
        elif cert.kind == "degeneracy" and keyword == "order":
            cert.vertices = [_int(t, lineno) for t in line.partition(":")[2].split()]
        elif cert.kind == "packing" and keyword == "member":
            (_,), toks = _labelled(line, "member", 1, lineno)
            cert.members.append(_parse_form(toks, lineno))
        else:
            raise FormatError(f"unexpected line {line!r} in {cert.kind} certificate", lineno)
    return cert


def _to_witness(form: str, vs, host: Host):
    if form == "edge":
        return EdgeWitness(*vs)
    if form == "bigon" and host.directed or form == "digon" and not host.directed:
        raise VerificationError(f"{form} witness on a {'digraph' if host.directed else 'graph'}")
    return CycleWitness(tuple(vs), host.directed)


def _member_ok(H: GuestClass, host: Host, form: str, vs) -> bool:
    if any(not 0 <= v < host.n for v in vs):
        return False
    if (H is GuestClass.EDGE) != (form == "edge"):
        return False
    try:
        w = _to_witness(form, vs, host)
    except (ValueError, VerificationError):
        return False
    if form in ("bigon", "digon") and len(vs) != 2:
        return False
    return w.is_valid_in(host)


def _partition(cert: Certificate, host: Host) -> Partition:
    try:
        P = Partition(host.n, cert.classes)
    except ValueError as exc:
        raise VerificationError(f"classes do not partition the vertices: {exc}") from None
    if [list(b) for b in P.blocks] != [sorted(c) for c in cert.classes]:
        raise VerificationError("classes must be listed in order of their least vertex")
    if cert.value != len(P):
        raise VerificationError(f"header claims {cert.value} classes, found {len(P)}")
    return P


def verify_certificate(host: Host, cert: Certificate, mode: str | None = None,
                       guest: GuestClass | None = None) -> str:
    """Check a parsed certificate against ``host``; returns a one-line report
    or raises VerificationError naming the first violated clause."""
    if mode is None:
        mode = {"fvs": "fvs", "packing": "packing", "degeneracy": "degeneracy"}.get(cert.kind)
        mode = mode or ("dac" if cert.arcs else "complete")
    H = guest or (GuestClass.DICYCLES if host.directed else GuestClass.CYCLES)
    if mode == "dac":
        H = GuestClass.DICYCLES
    try:
        check_compatible(H, host)
    except TypeError as exc:
        raise VerificationError(str(exc)) from None
    if mode in ("proper", "complete", "dac"):
        if cert.kind != "coloring":
            raise VerificationError(f"mode {mode!r} needs a coloring certificate")
        P = _partition(cert, host)
        for i, b in enumerate(P.blocks):
            w = find_h_witness(H, host, b)
            if w is not None:
                raise VerificationError(f"class {i} is not {H.token}-free: contains {w.vertices}")
        k = len(P)
        if mode == "complete":
            for i in range(k):
                for j in range(i + 1, k):
                    if (i, j) not in cert.witnesses:
                        raise VerificationError(f"pair ({i}, {j}): missing witness")
                    form, vs = cert.witnesses[i, j]
                    if not _member_ok(H, host, form, vs):
                        raise VerificationError(f"pair ({i}, {j}): witness {vs} is not a {H.token} member of the host")
                    union = set(P.blocks[i]) | set(P.blocks[j])
                    if not set(vs) <= union:
                        raise VerificationError(f"pair ({i}, {j}): witness {vs} leaves classes {i} and {j}")
        elif mode == "dac":
            lab = P.labels()
            for i in range(k):
                for j in range(k):
                    if i == j:
                        continue
                    if (i, j) not in cert.arcs:
                        raise VerificationError(f"arc entry ({i}, {j}): missing")
                    u, v = cert.arcs[i, j]
                    if not (0 <= u < host.n and 0 <= v < host.n and host.has_arc(u, v)):
                        raise VerificationError(f"arc entry ({i}, {j}): {u}->{v} is not an arc")
                    if lab[v] != i or lab[u] != j:
                        raise VerificationError(f"arc entry ({i}, {j}): {u}->{v} does not run from class {j} to class {i}")
        return f"ok: {mode} coloring with {k} classes"
    if mode == "fvs":
        if cert.kind != "fvs":
            raise VerificationError("mode 'fvs' needs an fvs certificate")
        F = set(cert.vertices)
        if any(not 0 <= v < host.n for v in F) or len(F) != len(cert.vertices):
            raise VerificationError("feedback set has repeated or out-of-range vertices")
        if len(F) != cert.value:
            raise VerificationError(f"header claims {cert.value} vertices, found {len(F)}")
        w = find_h_witness(H, host, [v for v in range(host.n) if v not in F])
        if w is not None:
            raise VerificationError(f"removing the set leaves {w.vertices}")
        return f"ok: {H.token} feedback set of size {len(F)}"
    if mode == "packing":
        if cert.kind != "packing":
            raise VerificationError("mode 'packing' needs a packing certificate")
        used: set[int] = set()
        for i, (form, vs) in enumerate(cert.members):
            if not _member_ok(H, host, form, vs):
                raise VerificationError(f"member {i}: {vs} is not a {H.token} member of the host")
            if used & set(vs):
                raise VerificationError(f"member {i}: overlaps an earlier member")
            used |= set(vs)
        if len(cert.members) != cert.value:
            raise VerificationError(f"header claims {cert.value} members, found {len(cert.members)}")
        return f"ok: packing of {len(cert.members)} disjoint {H.token} members"
    if mode == "degeneracy":
        if cert.kind != "degeneracy":
            raise VerificationError("mode 'degeneracy' needs a degeneracy certificate")
        order = cert.vertices
        if sorted(order) != list(range(host.n)):
            raise VerificationError("order is not a permutation of the vertices")
        g = host.underlying() if host.directed else host
        later = mask_of(order)
        for v in order:
            later &= ~(1 << v)
            if cert.counting == "simple":
                count = (g.adj[v] & later).bit_count()
            else:
                count = sum(g.mult(v, w) for w in vertices_of(g.adj[v] & later))
            if count > cert.value:
                raise VerificationError(f"vertex {v} has more than {cert.value} later neighbours")
        return f"ok: elimination order certifies degeneracy <= {cert.value}"
    raise VerificationError(f"unknown mode {mode!r}")
