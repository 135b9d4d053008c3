"""The soluble group of order 5^6·36 whose normalising and permuting graphs both
have diameter 6.

``N = GF(5)^6`` and ``H = <t1, t2, x> <= GL(6, 5)`` with ``|H| = 36``. The
local phase checks the matrix facts and the absence of permuting edges
between ``H`` and ``H^w`` (``w`` the all-ones vector); the diameter phase
builds both collapsed graphs and measures them exactly.
"""

from __future__ import annotations

import time
from importlib import resources
from dataclasses import asdict, dataclass, field

import numpy as np

from . import group_core as gc
from .cyclic_collapse import build_table, orbits
from .graph_engine import (
    GraphKind,
    bfs,
    build_collapsed_graph,
    connected_components,
    diameter,
    subgroups_adjacent,
)
from .representations import (
    SemidirectGroup,
    build,
    fixed_space,
    matrix_order,
    parse_group_spec,
    semidirect_product,
)

P, DIM = 5, 6
M1 = P - 1

T1 = np.diag([1, 1, M1, M1, M1, M1])
T2 = np.diag([M1, M1, M1, M1, 1, 1])
X = np.array(
    [
        [0, 0, M1, 1, 0, 0],
        [0, 0, M1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
    ]
)
X_CUBED_PRINTED = np.array(
    [
        [M1, 1, 0, 0, 0, 0],
        [M1, 0, 0, 0, 0, 0],
        [0, 0, M1, 1, 0, 0],
        [0, 0, M1, 0, 0, 0],
        [0, 0, 0, 0, M1, 1],
        [0, 0, 0, 0, M1, 0],
    ]
)

# First verified run; any change here means the construction changed.
REGRESSION = {
    "cyclic_subgroups": 142031,
    "orbits": 128,
    "normalising_edges": 10745215,
    "permuting_edges": 19452715,
}


class PaperClaimError(AssertionError):
    def __init__(self, claim: str, witness):
        super().__init__(f"{claim} failed; witness: {witness}")
        self.claim, self.witness = claim, witness


@dataclass
class PaperExampleResult:
    group_order: int | None = None
    order_t1: int | None = None
    order_t2: int | None = None
    order_x: int | None = None
    order_H: int | None = None
    fixed_dim_x: int | None = None
    fixed_dim_x3: int | None = None
    x3_matches_printed: bool | None = None
    involutions_normalising_x: int | None = None
    order6_normalising_x: int | None = None
    psi_edges_H_Hw: int | None = None
    psi_edges_x_N: int | None = None
    cyclic_subgroups: int | None = None
    orbits: int | None = None
    normalising_edges: int | None = None
    permuting_edges: int | None = None
    normalising_connected: bool | None = None
    permuting_connected: bool | None = None
    diam_normalising: int | None = None
    diam_permuting: int | None = None
    witness: dict = field(default_factory=dict)
    seconds: dict = field(default_factory=dict)

    def to_dict(self, timings: bool = True) -> dict:
        d = asdict(self)
        if not timings:
            d.pop("seconds")
        return d

    def local_ok(self) -> bool:
        return (
            self.group_order == 562500
            and self.order_t1 == 2
            and self.order_t2 == 2
            and self.order_x == 9
            and self.order_H == 36
            and self.fixed_dim_x == 0
            and self.fixed_dim_x3 == 0
            and bool(self.x3_matches_printed)
            and self.involutions_normalising_x == 0
            and self.psi_edges_H_Hw == 0
            and self.psi_edges_x_N == 0
        )

    def diameters_ok(self) -> bool:
        return self.diam_normalising == 6 and self.diam_permuting == 6


def paper_spec_text() -> str:
    return resources.files("normgraphs").joinpath("data/paper_section6.spec").read_text(encoding="utf-8")


def build_paper_group(from_spec: bool = True) -> SemidirectGroup:
    """The group ``N ⋊ H``, read from the shipped spec file by default."""
    if not from_spec:
        return semidirect_product(P, DIM, [T1, T2, X], name="paper-section6")
    G = build(parse_group_spec(paper_spec_text()))
    G.name = G.name or "paper-section6"
    return G


def all_ones(G: SemidirectGroup) -> int:
    """``w``: the sum of the standard basis vectors of ``N``."""
    return G.element(np.ones(DIM, dtype=np.int64), 0)


def h_element(G: SemidirectGroup, M) -> int:
    return G.element(np.zeros(DIM, dtype=np.int64), G.matrix_index(M))


def verify_local_claims(G: SemidirectGroup | None = None, result: PaperExampleResult | None = None, strict: bool = True) -> PaperExampleResult:
    """Matrix orders, fixed-point-freeness and the two 'no permuting edge' checks."""
    t0 = time.perf_counter()
    G = build_paper_group() if G is None else G
    r = PaperExampleResult() if result is None else result
    r.group_order = G.order
    r.order_t1, r.order_t2, r.order_x = (matrix_order(P, M) for M in (T1, T2, X))
    r.order_H = G.h_order
    x3 = np.linalg.matrix_power(X % P, 3) % P
    r.fixed_dim_x = len(fixed_space(P, X))
    r.fixed_dim_x3 = len(fixed_space(P, x3))
    r.x3_matches_printed = bool(np.array_equal(x3, X_CUBED_PRINTED % P))

    hx = h_element(G, X)
    Hids = G.complement_ids()
    Hnt = Hids[Hids != gc.IDENTITY]
    X_sub = gc.cyclic_subgroup(G, hx)
    normalises = np.array([X_sub.contains_all(G.conj(X_sub.elements, h)) for h in Hnt.tolist()])
    orders = G.element_orders[Hnt]
    r.involutions_normalising_x = int(np.sum(normalises & (orders == 2)))
    r.order6_normalising_x = int(np.sum(normalises & (orders == 6)))

    w = all_ones(G)
    Hw = G.conj(Hnt, w)
    cyc_H = [gc.cyclic_subgroup(G, a) for a in Hnt.tolist()]
    cyc_Hw = [gc.cyclic_subgroup(G, b) for b in Hw.tolist()]
    edges = []
    for A, a in zip(cyc_H, Hnt.tolist()):
        for B, b in zip(cyc_Hw, Hw.tolist()):
            if subgroups_adjacent(GraphKind.PERMUTING, G, A, B):
                edges.append((a, b))
    r.psi_edges_H_Hw = len(edges)

    # <x>^# meets only <x> and <x^3>; N^# collapses to its cyclic subgroups
    Nids = G.normal_subgroup_ids()
    n_reps = _cyclic_reps(G, Nids[1:])
    x_edges = []
    for a in (hx, G.power(hx, 3)):
        A = gc.cyclic_subgroup(G, a)
        for b in n_reps.tolist():
            if subgroups_adjacent(GraphKind.PERMUTING, G, A, gc.cyclic_subgroup(G, b)):
                x_edges.append((int(a), b))
    # each subgroup pair stands for phi(|A|) * phi(|B|) element pairs
    r.psi_edges_x_N = len(x_edges)
    r.seconds["local"] = time.perf_counter() - t0
    if strict:
        if edges:
            raise PaperClaimError("no permuting edge between H and H^w", edges[0])
        if x_edges:
            raise PaperClaimError("no permuting edge between <x> and N", x_edges[0])
        if not r.local_ok():
            raise PaperClaimError("local claims", r.to_dict())
    return r


def _cyclic_reps(G, ids: np.ndarray) -> np.ndarray:
    """One generator per cyclic subgroup among ``ids`` (all of prime order p here)."""
    seen = np.zeros(G.order, dtype=bool)
    reps = []
    for g in ids.tolist():
        if seen[g]:
            continue
        reps.append(g)
        seen[gc.cyclic_subgroup(G, g).elements] = True
    return np.asarray(reps, dtype=np.int64)


def compute_diameters(
    G: SemidirectGroup | None = None,
    result: PaperExampleResult | None = None,
    threads: int = 1,
    checkpoint: str | None = None,
    progress=None,
) -> PaperExampleResult:
    """Exact diameters of Γ(G) and Ψ(G) on the collapsed graphs."""
    G = build_paper_group() if G is None else G
    r = PaperExampleResult(group_order=G.order) if result is None else result
    t0 = time.perf_counter()
    table = build_table(G)
    od = orbits(table, G)
    r.cyclic_subgroups, r.orbits = table.count, od.count
    r.seconds["table"] = time.perf_counter() - t0
    hx = h_element(G, X)
    w = all_ones(G)
    x_w = G.conj(hx, w)
    for kind in (GraphKind.NORMALISING, GraphKind.PERMUTING):
        t1 = time.perf_counter()
        ck = None if checkpoint is None else f"{checkpoint}.{kind.value}"
        g = build_collapsed_graph(kind, G, table, od, threads=threads, checkpoint=ck, progress=progress)
        t2 = time.perf_counter()
        connected = len(connected_components(g)) == 1
        d = diameter(g, od)
        src, dst = table.id_of(hx), table.id_of(x_w)
        res = bfs(g, src, with_parents=True)
        path = res.path_to(dst)
        # re-validate every step with the raw oracle
        valid = all(
            subgroups_adjacent(kind, G, table.element_set(u), table.element_set(v)) for u, v in zip(path, path[1:])
        )
        gens = [int(table.canonical_generator[v]) for v in path]
        r.witness[kind.value] = {
            "x": int(hx),
            "x_w": int(x_w),
            "distance": int(res.distances[dst]),
            "path_generators": gens,
            "path_valid": bool(valid),
        }
        if kind is GraphKind.NORMALISING:
            r.normalising_edges, r.normalising_connected, r.diam_normalising = g.edge_count, connected, _int(d)
        else:
            r.permuting_edges, r.permuting_connected, r.diam_permuting = g.edge_count, connected, _int(d)
        r.seconds[f"{kind.value}_edges"] = t2 - t1
        r.seconds[f"{kind.value}_diameter"] = time.perf_counter() - t2
        del g
    return r


def _int(d):
    return None if d == float("inf") else int(d)


def run(phase: str = "all", threads: int = 1, checkpoint: str | None = None, progress=None) -> PaperExampleResult:
    if phase not in ("local", "diameters", "all"):
        raise ValueError(f"unknown phase {phase!r}")
    t0 = time.perf_counter()
    G = build_paper_group()
    r = PaperExampleResult(group_order=G.order)
    r.seconds["build"] = time.perf_counter() - t0
    if phase in ("local", "all"):
        verify_local_claims(G, r, strict=False)
    if phase in ("diameters", "all"):
        compute_diameters(G, r, threads=threads, checkpoint=checkpoint, progress=progress)
    return r


def summary(r: PaperExampleResult) -> str:
    rows = [
        ("|G|", r.group_order, 562500),
        ("o(t1)", r.order_t1, 2),
        ("o(t2)", r.order_t2, 2),
        ("o(x)", r.order_x, 9),
        ("|H|", r.order_H, 36),
        ("dim C_N(x)", r.fixed_dim_x, 0),
        ("dim C_N(x^3)", r.fixed_dim_x3, 0),
        ("x^3 as printed", r.x3_matches_printed, True),
        ("involutions in N_H(<x>)", r.involutions_normalising_x, 0),
        ("Psi edges H - H^w", r.psi_edges_H_Hw, 0),
        ("Psi edges <x> - N", r.psi_edges_x_N, 0),
        ("diam Gamma", r.diam_normalising, 6),
        ("diam Psi", r.diam_permuting, 6),
    ]
    out = []
    for label, got, want in rows:
        if got is None:
            out.append(f"  {label:<26} -")
        else:
            out.append(f"  {label:<26} {str(got):<8} {'ok' if got == want else 'MISMATCH (expected ' + str(want) + ')'}")
    return "\n".join(out)
