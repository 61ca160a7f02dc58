"""Exhaustive small-graph enumeration and the theorem verification harness.

Connected graphs are generated one representative per isomorphism class
by canonical vertex augmentation: a child produced by attaching a new
vertex is kept only when the new vertex lies in the canonical deletion
orbit of the child, and children of one parent are deduplicated by
canonical label.  The theorem scans then test every graph in range
against the hypotheses and record exception/counterexample certificates
as graph6 strings.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .graphcore import (
    Graph,
    bits,
    canonical_form,
    canonical_label,
    from_graph6,
    is_connected,
    marked_label,
    subset_connected,
    to_graph6,
)
from .predicates import (
    exception_witness,
    independence_number,
    is_hamiltonian,
    is_hamiltonian_connected,
    is_petersen,
    is_st_graph,
    join_witness,
    min_induced_edges,
    vertex_connectivity,
)

ENUM_MAX = 10
BRUTE_MAX = 7

_level_cache: dict[int, tuple[str, ...]] = {}


def _canonical_augmentation(child: Graph) -> bool:
    """Accept the child (new vertex = last index) iff the new vertex is a
    canonical choice among deletable vertices.

    Deletable means non-cut.  The canonical choice minimizes, over
    deletable vertices, first the refinement cell index (an isomorphism
    invariant) and then the vertex-marked canonical label, so isomorphic
    children accept exactly one deletion orbit.
    """
    from .graphcore import _refine

    n = child.n
    z = n - 1
    full = (1 << n) - 1
    deletable = [
        v for v in range(n) if subset_connected(child.adj, full & ~(1 << v))
    ]
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(child.adj[v].bit_count(), []).append(v)
    cells = _refine(child.adj, [by_deg[d] for d in sorted(by_deg)])
    cell_of = {}
    for idx, cell in enumerate(cells):
        for v in cell:
            cell_of[v] = idx
    cmin = min(cell_of[v] for v in deletable)
    if cell_of[z] != cmin:
        return False
    rivals = [v for v in deletable if cell_of[v] == cmin and v != z]
    if not rivals:
        return True
    lz = marked_label(child, z)
    return all(marked_label(child, v) >= lz for v in rivals)


def _grow_level(parents: tuple[str, ...]) -> tuple[str, ...]:
    out: list[str] = []
    for parent_g6 in parents:
        parent = from_graph6(parent_g6)
        m = parent.n
        children: dict[bytes, str] = {}
        for smask in range(1, 1 << m):
            rows = [parent.adj[v] | (((smask >> v) & 1) << m) for v in range(m)]
            rows.append(smask)
            child = Graph(m + 1, rows)
            if _canonical_augmentation(child):
                lbl = canonical_label(child)
                if lbl not in children:
                    children[lbl] = to_graph6(canonical_form(child))
        out.extend(children[lbl] for lbl in sorted(children))
    return tuple(out)


def _connected_level(n: int) -> tuple[str, ...]:
    if n not in _level_cache:
        if n == 1:
            _level_cache[1] = (to_graph6(Graph(1, [0])),)
        else:
            _level_cache[n] = _grow_level(_connected_level(n - 1))
    return _level_cache[n]


def enumerate_connected(n: int):
    """One representative per isomorphism class of connected graphs of
    order n, in a deterministic order."""
    if not 1 <= n <= ENUM_MAX:
        raise ValueError(f"order must be within 1..{ENUM_MAX}")
    for g6 in _connected_level(n):
        yield from_graph6(g6)


def brute_force_connected(n: int):
    """Independent oracle: scan all labeled graphs of order n and
    deduplicate the connected ones by canonical label."""
    if not 1 <= n <= BRUTE_MAX:
        raise ValueError(f"order must be within 1..{BRUTE_MAX} for the full scan")
    pair_list = [(i, j) for j in range(1, n) for i in range(j)]
    seen: set[bytes] = set()
    for code in range(1 << len(pair_list)):
        rows = [0] * n
        c = code
        while c:
            b = c & -c
            i, j = pair_list[b.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            c ^= b
        g = Graph(n, rows)
        if not is_connected(g):
            continue
        lbl = canonical_label(g)
        if lbl not in seen:
            seen.add(lbl)
            yield g


def _graph_stream(n_max: int, graphs=None) -> list[str]:
    """Graph6 work items: the built-in generator for orders 1..n_max, or
    the caller-supplied iterable of Graph/graph6 entries."""
    if graphs is not None:
        out = []
        for item in graphs:
            out.append(item if isinstance(item, str) else to_graph6(item))
        return out
    items: list[str] = []
    for n in range(1, n_max + 1):
        items.extend(_connected_level(n))
    return items


def read_graph6_lines(lines):
    """Graphs from an iterable of graph6 lines; blanks and headers tolerated."""
    out = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        out.append(from_graph6(line))
    return out


# -- theorem reports -----------------------------------------------------


@dataclass(frozen=True)
class TheoremReport:
    theorem: str  # main | chvatal-erdos | wang-mou | edge-bound
    n_range: tuple[int, int]
    params: tuple[tuple[str, int], ...]
    scanned: int
    hypothesis_hits: int
    exceptions: tuple[tuple[str, str], ...]  # (graph6, witness kind)
    counterexamples: tuple[str, ...]

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    def machine_lines(self):
        params = " ".join(f"{k}={v}" for k, v in self.params)
        head = f"REPORT theorem={self.theorem}"
        if params:
            head += f" {params}"
        yield head
        yield (
            f"scanned={self.scanned} hypothesis_hits={self.hypothesis_hits}"
            f" n_min={self.n_range[0]} n_max={self.n_range[1]}"
            f" exceptions={len(self.exceptions)}"
            f" counterexamples={len(self.counterexamples)}"
            f" verified={'true' if self.verified else 'false'}"
        )
        for g6, kind in self.exceptions:
            yield f"EXCEPTION {g6} {kind}"
        for g6 in self.counterexamples:
            yield f"COUNTEREXAMPLE {g6}"

    def summary(self) -> str:
        what = {
            "main": "hamiltonian-connectivity of k-connected [k+1,2]-graphs",
            "chvatal-erdos": "hamiltonian-connectivity under connectivity > independence",
            "wang-mou": "hamiltonicity of k-connected [k+2,2]-graphs",
            "edge-bound": "the [s,t] edge lower bound",
        }[self.theorem]
        status = "verified" if self.verified else "REFUTED"
        return (
            f"{status}: {what}; scanned {self.scanned} graphs"
            f" (orders {self.n_range[0]}..{self.n_range[1]}),"
            f" {self.hypothesis_hits} hypothesis hits,"
            f" {len(self.exceptions)} exceptions,"
            f" {len(self.counterexamples)} counterexamples"
        )


def _merge_reports(theorem, params, parts) -> TheoremReport:
    scanned = sum(p["scanned"] for p in parts)
    hits = sum(p["hits"] for p in parts)
    n_lo = min((p["n_lo"] for p in parts if p["n_lo"]), default=0)
    n_hi = max((p["n_hi"] for p in parts if p["n_hi"]), default=0)
    exceptions = tuple(sorted(set(e for p in parts for e in p["exceptions"])))
    counters = tuple(sorted(set(c for p in parts for c in p["counterexamples"])))
    return TheoremReport(theorem, (n_lo, n_hi), params, scanned, hits, exceptions, counters)


def _scan_main(args):
    k, items = args
    part = {"scanned": 0, "hits": 0, "n_lo": 0, "n_hi": 0,
            "exceptions": [], "counterexamples": []}
    for g6 in items:
        g = from_graph6(g6)
        part["scanned"] += 1
        part["n_lo"] = min(part["n_lo"] or g.n, g.n)
        part["n_hi"] = max(part["n_hi"], g.n)
        if g.n < k + 1:
            continue
        if not is_st_graph(g, k + 1, 2):
            continue
        if vertex_connectivity(g) < k:
            continue
        part["hits"] += 1
        witness = exception_witness(g, k)
        hc = is_hamiltonian_connected(g)
        cg6 = to_graph6(canonical_form(g))
        if hc == (witness is not None):
            part["counterexamples"].append(cg6)
        elif witness is not None:
            part["exceptions"].append((cg6, "join-witness"))
    return part


def _scan_ce(args):
    k, items = args
    part = {"scanned": 0, "hits": 0, "n_lo": 0, "n_hi": 0,
            "exceptions": [], "counterexamples": []}
    for g6 in items:
        g = from_graph6(g6)
        part["scanned"] += 1
        part["n_lo"] = min(part["n_lo"] or g.n, g.n)
        part["n_hi"] = max(part["n_hi"], g.n)
        if g.n < k + 1:
            continue
        if independence_number(g) > k - 1:
            continue
        if vertex_connectivity(g) < k:
            continue
        part["hits"] += 1
        if not is_hamiltonian_connected(g):
            part["counterexamples"].append(to_graph6(canonical_form(g)))
    return part


def _scan_wang_mou(args):
    k, items = args
    part = {"scanned": 0, "hits": 0, "n_lo": 0, "n_hi": 0,
            "exceptions": [], "counterexamples": []}
    for g6 in items:
        g = from_graph6(g6)
        part["scanned"] += 1
        part["n_lo"] = min(part["n_lo"] or g.n, g.n)
        part["n_hi"] = max(part["n_hi"], g.n)
        if g.n < max(3, k + 1):
            continue
        if not is_st_graph(g, k + 2, 2):
            continue
        if vertex_connectivity(g) < k:
            continue
        part["hits"] += 1
        petersen = is_petersen(g)
        witness = None
        if g.n == 2 * k + 1:
            witness = join_witness(g, k + 1)
        exceptional = petersen or witness is not None
        ham = is_hamiltonian(g)
        cg6 = to_graph6(canonical_form(g))
        if ham == exceptional:
            part["counterexamples"].append(cg6)
        elif petersen:
            part["exceptions"].append((cg6, "petersen"))
        elif witness is not None:
            part["exceptions"].append((cg6, "join-witness"))
    return part


def _scan_bound(args):
    _, items = args
    part = {"scanned": 0, "hits": 0, "n_lo": 0, "n_hi": 0,
            "exceptions": [], "counterexamples": []}
    for g6 in items:
        g = from_graph6(g6)
        part["scanned"] += 1
        part["n_lo"] = min(part["n_lo"] or g.n, g.n)
        part["n_hi"] = max(part["n_hi"], g.n)
        n, e = g.n, g.edge_count
        bad = False
        for s in range(2, n + 1):
            t_star = min_induced_edges(g, s)
            part["hits"] += 1
            # integer comparison of e >= t*.n(n-1)/(s(s-1))
            if s * (s - 1) * e < t_star * n * (n - 1):
                bad = True
        if bad:
            part["counterexamples"].append(to_graph6(canonical_form(g)))
    return part


_SCANNERS = {
    "main": _scan_main,
    "chvatal-erdos": _scan_ce,
    "wang-mou": _scan_wang_mou,
    "edge-bound": _scan_bound,
}


def _run_scan(theorem, params, k, n_max, graphs, jobs) -> TheoremReport:
    items = _graph_stream(n_max, graphs)
    scan = _SCANNERS[theorem]
    if jobs <= 1 or len(items) < 2 * jobs:
        parts = [scan((k, items))]
    else:
        slices = [items[i::jobs] for i in range(jobs)]
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(scan, [(k, s) for s in slices])
    return _merge_reports(theorem, params, parts)


def verify_main_theorem(n_max: int, k: int, graphs=None, jobs: int = 1) -> TheoremReport:
    """Scan: every k-connected [k+1,2]-graph is hamiltonian-connected
    exactly unless it splits as an independent k-set joined to the rest."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return _run_scan("main", (("k", k), ("nmax", n_max)), k, n_max, graphs, jobs)


def verify_chvatal_erdos(n_max: int, k: int, graphs=None, jobs: int = 1) -> TheoremReport:
    """Scan: k-connected graphs with independence number below k are
    hamiltonian-connected, with no exceptions allowed."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return _run_scan(
        "chvatal-erdos", (("k", k), ("nmax", n_max)), k, n_max, graphs, jobs
    )


def verify_wang_mou(n_max: int, k: int, graphs=None, jobs: int = 1) -> TheoremReport:
    """Scan: every k-connected [k+2,2]-graph is hamiltonian except the
    Petersen graph and an independent (k+1)-set joined to k vertices."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return _run_scan("wang-mou", (("k", k), ("nmax", n_max)), k, n_max, graphs, jobs)


def verify_edge_bound(n_max: int, graphs=None, jobs: int = 1) -> TheoremReport:
    """Scan: for every graph and order s, the size is at least
    t*.n(n-1)/(s(s-1)) where t* is the exact induced-subgraph minimum."""
    if graphs is None and n_max > 9:
        raise ValueError("full-range bound scans cover orders up to 9")
    return _run_scan("edge-bound", (("nmax", n_max),), 0, n_max, graphs, jobs)


def revalidate_report(report: TheoremReport) -> bool:
    """Re-run every exception certificate on its decoded graph."""
    params = dict(report.params)
    k = params.get("k", 0)
    for g6, kind in report.exceptions:
        g = from_graph6(g6)
        if kind == "petersen":
            if not is_petersen(g):
                return False
        elif kind == "join-witness":
            if report.theorem == "main":
                w = exception_witness(g, k)
            else:  # wang-mou: independent part k+1, rest k
                w = join_witness(g, k + 1) if g.n == 2 * k + 1 else None
            if w is None or not w.validate(g):
                return False
        else:
            return False
    return True


# -- minimum-size search ---------------------------------------------------


@dataclass(frozen=True)
class MinSizeResult:
    n: int
    s: int
    t: int
    lower_bound: int
    minimum: int | None
    witness: str | None  # graph6 of a minimizer

    def summary(self) -> str:
        if self.minimum is None:
            return (
                f"no connected [{self.s},{self.t}]-graph of order {self.n}"
                f" (lower bound {self.lower_bound})"
            )
        return (
            f"minimum size of a connected [{self.s},{self.t}]-graph of order"
            f" {self.n} is {self.minimum} (lower bound {self.lower_bound},"
            f" witness {self.witness})"
        )


def min_size_search(n: int, s: int, t: int) -> MinSizeResult:
    """Exact minimum size over connected [s,t]-graphs of order n, with
    the double-counting lower bound reported alongside."""
    if not 1 <= n <= 9:
        raise ValueError("order must be within 1..9")
    if s < 2 or t < 1:
        raise ValueError("need s >= 2 and t >= 1")
    lower = -(-t * n * (n - 1) // (s * (s - 1)))
    best: int | None = None
    witness: str | None = None
    for g in enumerate_connected(n):
        if not is_st_graph(g, s, t):
            continue
        e = g.edge_count
        if best is None or e < best:
            best, witness = e, to_graph6(canonical_form(g))
    return MinSizeResult(n, s, t, lower, best, witness)
