"""Executable theorem checks over a corpus of groups.

Each suite returns a :class:`VerificationReport` whose claims are ``pass``,
``fail`` (always with a witness) or ``skipped`` (hypothesis not met). Both
directions of every equivalence are checked.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from typing import Any, Callable, Iterable

import numpy as np
import yaml

from . import group_core as gc
from .cyclic_collapse import CyclicSubgroupTable, build_table, orbits
from .frobenius import (
    ComplementSearchError,
    FrobeniusStructure,
    detect_frobenius,
    disconnection_criterion,
    find_complement,
    predicted_components,
)
from .graph_engine import (
    INF,
    CollapsedGraph,
    GraphKind,
    bfs,
    build_collapsed_graph,
    component_diameters,
    connected_components,
    diameter,
    distances_to_subset,
    element_level_distances,
    subgroups_adjacent,
)
from .group_core import IDENTITY, FiniteGroup, SubgroupSet
from .representations import GroupSpec, SpecError, build, spec_from_dict

EXHAUSTIVE_BOUND = 100
ORACLE_BOUND = 500
CORPUS_BOUND = 20_000

SUITES = (
    "hierarchy",
    "theorem1",
    "frobenius-bound",
    "norm-distance",
    "corollary",
    "frobenius-lemmas",
    "collapse-equivalence",
)

ANCHORS = {
    "hierarchy": "graph hierarchy: K(G) ⊆ Γ(G) ⊆ Ψ(G) ⊆ Σ(G), Γ(G) ⊆ E(G)",
    "theorem1": "Theorem 'Diam 6' (i), (ii)",
    "frobenius-bound": "Proposition 'disconnected': connected Γ of a Frobenius group has diameter ≤ 4",
    "norm-distance": "Theorem 'norm distance': d(x,N) ≤ 3 or G is Frobenius",
    "corollary": "Corollary 'permuting graphs'",
    "frobenius-lemmas": "Lemma 'Frobenius' (i)-(vi), Lemma 'odd sol frobenius'",
    "collapse-equivalence": "cyclic-subgroup collapse and conjugation-orbit reduction",
}


def _jsonable(v):
    if isinstance(v, float) and v == INF:
        return "inf"
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating, float)):
        f = float(v)
        return int(f) if f.is_integer() else f
    if isinstance(v, np.ndarray):
        return [_jsonable(x) for x in v.tolist()]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class Claim:
    id: str
    anchor: str
    status: str
    witness: Any = None
    values: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"id": self.id, "anchor": self.anchor, "status": self.status}
        if self.witness is not None:
            d["witness"] = _jsonable(self.witness)
        if self.values:
            d["values"] = _jsonable(self.values)
        return d


@dataclass
class VerificationReport:
    suite: str
    group: str
    claims: list[Claim] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.status != "fail" for c in self.claims)

    def add(self, cid: str, ok: bool | None, witness=None, anchor: str | None = None, **values) -> Claim:
        status = "skipped" if ok is None else ("pass" if ok else "fail")
        if status == "fail" and witness is None:
            witness = {"note": "no witness recorded"}
        c = Claim(cid, anchor or ANCHORS.get(self.suite, self.suite), status, witness if status == "fail" else None, values)
        self.claims.append(c)
        return c

    def to_dict(self) -> dict:
        d = {"suite": self.suite, "group": self.group, "passed": self.passed, "claims": [c.to_dict() for c in self.claims]}
        if self.error is not None:
            d["error"] = self.error
        return d


class GroupContext:
    """Lazily computed, shared data for all suites on one group."""

    def __init__(self, G: FiniteGroup, name: str | None = None, threads: int = 1):
        self.G = G
        self.name = name or G.name
        self.threads = threads
        self._graphs: dict[GraphKind, CollapsedGraph] = {}

    @cached_property
    def table(self) -> CyclicSubgroupTable:
        return build_table(self.G)

    @cached_property
    def orbits(self):
        return orbits(self.table, self.G)

    def graph(self, kind) -> CollapsedGraph:
        kind = GraphKind.parse(kind)
        if kind not in self._graphs:
            self._graphs[kind] = build_collapsed_graph(kind, self.G, self.table, self.orbits, threads=self.threads)
        return self._graphs[kind]

    @cached_property
    def soluble(self) -> bool:
        return gc.is_soluble(self.G)

    @cached_property
    def fitting(self) -> SubgroupSet:
        return gc.fitting_subgroup(self.G)

    @cached_property
    def frobenius(self) -> FrobeniusStructure:
        return detect_frobenius(self.G, self.fitting)

    def components(self, kind) -> list[np.ndarray]:
        return connected_components(self.graph(kind))

    def diameter(self, kind) -> float:
        return diameter(self.graph(kind), self.orbits)


def _ctx(G, threads=1) -> GroupContext:
    return G if isinstance(G, GroupContext) else GroupContext(G, threads=threads)


def _edge_sample(ctx: GroupContext, graph: CollapsedGraph) -> np.ndarray:
    """Edges to test against a costlier oracle: all of them for small groups,
    otherwise those at orbit representatives (every edge is conjugate to one)."""
    E = graph.edges()
    if ctx.G.order <= EXHAUSTIVE_BOUND:
        return E
    reps = ctx.orbits.representatives
    out = []
    for r in reps.tolist():
        nb = graph.neighbours(r)
        out.append(np.stack([np.full(nb.size, r), nb], axis=1))
    return np.concatenate(out) if out else np.zeros((0, 2), dtype=np.int64)


def _pair_witness(ctx: GroupContext, i: int, j: int) -> dict:
    t = ctx.table
    return {"vertices": [int(i), int(j)], "generators": [int(t.canonical_generator[i]), int(t.canonical_generator[j])]}


# ---------------------------------------------------------------------------
# suites


def verify_hierarchy(G) -> VerificationReport:
    ctx = _ctx(G)
    rep = VerificationReport("hierarchy", ctx.name)
    if ctx.G.order < 2:
        rep.add("nontrivial", None)
        return rep
    graphs = {k: ctx.graph(k) for k in (GraphKind.COMMUTING, GraphKind.NORMALISING, GraphKind.PERMUTING)}
    sets = {k: g.edge_set() for k, g in graphs.items()}
    counts = {k.value: len(s) for k, s in sets.items()}
    for small, big in ((GraphKind.COMMUTING, GraphKind.NORMALISING), (GraphKind.NORMALISING, GraphKind.PERMUTING)):
        extra = sorted(sets[small] - sets[big])
        strict = sorted(sets[big] - sets[small])
        rep.add(
            f"{small.value}-in-{big.value}",
            not extra,
            witness=_pair_witness(ctx, *extra[0]) if extra else None,
            edges_small=len(sets[small]),
            edges_big=len(sets[big]),
            strict=bool(strict),
            strict_witness=list(strict[0]) if strict else None,
        )
    sets_sets = {k: ctx.table.element_set(k) for k in range(ctx.table.count)} if ctx.table.count <= 5000 else None

    def eset(i):
        return sets_sets[i] if sets_sets is not None else ctx.table.element_set(i)

    bad = None
    psi_edges = _edge_sample(ctx, graphs[GraphKind.PERMUTING])
    for i, j in psi_edges.tolist():
        if not subgroups_adjacent(GraphKind.SOLUBLE, ctx.G, eset(i), eset(j)):
            bad = (i, j)
            break
    rep.add("permuting-in-soluble", bad is None, witness=_pair_witness(ctx, *bad) if bad else None, edges_checked=len(psi_edges))
    bad = None
    gam_edges = _edge_sample(ctx, graphs[GraphKind.NORMALISING])
    for i, j in gam_edges.tolist():
        if not subgroups_adjacent(GraphKind.ENGEL, ctx.G, eset(i), eset(j)):
            bad = (i, j)
            break
    rep.add("normalising-in-engel", bad is None, witness=_pair_witness(ctx, *bad) if bad else None, edges_checked=len(gam_edges))
    # Ito: <a, b> soluble for every permuting pair, by a direct derived series
    bad = None
    for i, j in psi_edges.tolist():
        a, b = ctx.table.canonical_generator[[i, j]].tolist()
        if not gc.is_soluble(ctx.G, gc.closure(ctx.G, [a, b])):
            bad = (i, j)
            break
    rep.add("ito-permuting-pair-soluble", bad is None, witness=_pair_witness(ctx, *bad) if bad else None, anchor="Ito's theorem: permuting pairs generate metacyclic, hence soluble, subgroups")
    rep.claims[0].values["edge_counts"] = counts
    return rep


def _component_sets(ctx: GroupContext, comps: list[np.ndarray]) -> list[np.ndarray]:
    t = ctx.table
    order = np.argsort(t.member_index, kind="stable")
    mi = t.member_index[order]
    out = []
    for c in comps:
        lo = np.searchsorted(mi, c, side="left")
        hi = np.searchsorted(mi, c, side="right")
        out.append(np.sort(np.concatenate([order[a:b] for a, b in zip(lo.tolist(), hi.tolist())])))
    out.sort(key=lambda a: int(a[0]))
    return out


def verify_theorem1(G) -> VerificationReport:
    ctx = _ctx(G)
    rep = VerificationReport("theorem1", ctx.name)
    if ctx.G.order < 2 or not ctx.soluble:
        rep.add("soluble-hypothesis", None, reason="group not soluble" if ctx.G.order > 1 else "trivial group")
        return rep
    g = ctx.graph(GraphKind.NORMALISING)
    comps = ctx.components(GraphKind.NORMALISING)
    fs = ctx.frobenius
    crit = disconnection_criterion(fs) if fs.is_frobenius else False
    connected = len(comps) == 1
    if connected:
        d = ctx.diameter(GraphKind.NORMALISING)
        rep.add("connected-diameter-le-6", d <= 6, witness=None if d <= 6 else _diameter_witness(ctx, g), diameter=d, components=1)
        rep.add("disconnected-implies-frobenius-criterion", None, reason="graph connected")
    else:
        ok = fs.is_frobenius and crit
        rep.add(
            "disconnected-implies-frobenius-criterion",
            ok,
            witness=None if ok else {"components": len(comps), "frobenius": fs.is_frobenius, "criterion": crit},
            components=len(comps),
        )
        diams = component_diameters(g, ctx.orbits)
        worst = int(np.argmax(diams))
        rep.add(
            "component-diameter-le-2",
            max(diams) <= 2,
            witness={"component": worst, "diameter": diams[worst], "vertices": comps[worst][:10].tolist()} if max(diams) > 2 else None,
            max_component_diameter=max(diams),
            components=len(comps),
        )
        if ok:
            try:
                pred = predicted_components(ctx.G, fs)
            except ComplementSearchError as exc:
                rep.add("components-match-prediction", False, witness={"error": str(exc)})
            else:
                actual = _component_sets(ctx, comps)
                same = len(pred) == len(actual) and all(np.array_equal(a, b) for a, b in zip(pred, actual))
                mism = None
                if not same:
                    mism = {"predicted": len(pred), "actual": len(actual)}
                rep.add(
                    "components-match-prediction",
                    same,
                    witness=mism,
                    predicted=len(pred),
                    expected=1 + fs.kernel.order,
                )
    if fs.is_frobenius and crit:
        rep.add(
            "frobenius-criterion-implies-disconnected",
            not connected,
            witness=None if not connected else {"kernel_primes": fs.kernel_primes, "complement_primes": fs.complement_primes},
        )
    else:
        rep.add("frobenius-criterion-implies-disconnected", None, reason="not Frobenius" if not fs.is_frobenius else "criterion false")
    if fs.is_frobenius and not crit:
        rep.add("frobenius-no-criterion-implies-connected", connected, witness=None if connected else {"components": len(comps)})
    return rep


def _diameter_witness(ctx: GroupContext, g: CollapsedGraph) -> dict:
    best = (-1, None, None)
    for r in ctx.orbits.representatives.tolist():
        res = bfs(g, r, with_parents=True)
        d = res.distances
        if d.max() > best[0]:
            far = int(np.argmax(d))
            best = (int(d.max()), r, res.path_to(far))
    return {"distance": best[0], "path": best[2]}


def verify_frobenius_bound(G) -> VerificationReport:
    ctx = _ctx(G)
    rep = VerificationReport("frobenius-bound", ctx.name)
    if ctx.G.order < 2 or not ctx.frobenius.is_frobenius:
        rep.add("frobenius-connected-diameter-le-4", None, reason="not Frobenius")
        return rep
    comps = ctx.components(GraphKind.NORMALISING)
    if len(comps) > 1:
        rep.add("frobenius-connected-diameter-le-4", None, reason="graph disconnected", components=len(comps))
        return rep
    d = ctx.diameter(GraphKind.NORMALISING)
    g = ctx.graph(GraphKind.NORMALISING)
    rep.add("frobenius-connected-diameter-le-4", d <= 4, witness=None if d <= 4 else _diameter_witness(ctx, g), diameter=d)
    return rep


def verify_norm_distance(G) -> VerificationReport:
    ctx = _ctx(G)
    rep = VerificationReport("norm-distance", ctx.name)
    if ctx.G.order < 2 or not ctx.soluble:
        rep.add("distance-to-minimal-normal-le-3", None, reason="not soluble or trivial")
        return rep
    if ctx.frobenius.is_frobenius:
        rep.add("distance-to-minimal-normal-le-3", None, reason="Frobenius group")
        return rep
    g = ctx.graph(GraphKind.NORMALISING)
    worst = 0
    witness = None
    Ns = gc.minimal_normal_subgroups(ctx.G)
    for N in Ns:
        d = distances_to_subset(g, ctx.table, N)
        d_eff = np.where(d < 0, np.iinfo(np.int64).max, d)
        x = int(np.argmax(d_eff))
        m = float(INF) if d[x] < 0 else int(d[x])
        if m > worst:
            worst = m
        if m > 3 and witness is None:
            witness = {"element": x, "minimal_normal_order": N.order, "distance": m}
    rep.add(
        "distance-to-minimal-normal-le-3",
        witness is None,
        witness=witness,
        max_distance=worst,
        minimal_normal_orders=[N.order for N in Ns],
    )
    return rep


def verify_corollary(G) -> VerificationReport:
    ctx = _ctx(G)
    rep = VerificationReport("corollary", ctx.name)
    if ctx.G.order < 2 or not ctx.soluble:
        rep.add("connectivity-agrees", None, reason="not soluble or trivial")
        return rep
    cg = len(ctx.components(GraphKind.NORMALISING))
    cp = len(ctx.components(GraphKind.PERMUTING))
    agree = (cg == 1) == (cp == 1)
    rep.add("connectivity-agrees", agree, witness=None if agree else {"normalising_components": cg, "permuting_components": cp}, normalising_components=cg, permuting_components=cp)
    if cp == 1:
        dp = ctx.diameter(GraphKind.PERMUTING)
        dg = ctx.diameter(GraphKind.NORMALISING) if cg == 1 else INF
        rep.add("permuting-diameter-le-6", dp <= 6, witness=None if dp <= 6 else _diameter_witness(ctx, ctx.graph(GraphKind.PERMUTING)), diameter=dp)
        rep.add("permuting-diameter-le-normalising", dp <= dg, witness=None if dp <= dg else {"permuting": dp, "normalising": dg}, permuting=dp, normalising=dg)
    else:
        rep.add("permuting-diameter-le-6", None, reason="disconnected")
    return rep


# ---------------------------------------------------------------------------
# Frobenius oracle and Lemma 'Frobenius' property suite


def enumerate_subgroups(G: FiniteGroup, within: SubgroupSet | None = None, limit: int = 20_000) -> list[SubgroupSet]:
    """Every subgroup of ``within`` (default ``G``), by joining cyclic subgroups."""
    table = build_table(G) if G.order > 1 else None
    if table is None:
        return [gc.trivial_subgroup(G)]
    ids = np.arange(table.count)
    if within is not None:
        ids = ids[within.mask(table.canonical_generator)]
    cyc = [table.element_set(i) for i in ids.tolist()]
    gens = table.canonical_generator[ids].tolist()
    found = {gc.trivial_subgroup(G).elements.tobytes(): gc.trivial_subgroup(G)}
    frontier = []
    for c in cyc:
        key = c.elements.tobytes()
        if key not in found:
            found[key] = SubgroupSet(c.elements)
            frontier.append(found[key])
    while frontier:
        nxt = []
        for S in frontier:
            for g in gens:
                if g in S:
                    continue
                J = gc.join(G, S, [g])
                key = J.elements.tobytes()
                if key not in found:
                    found[key] = J
                    nxt.append(J)
                    if len(found) > limit:
                        raise gc.GroupError("subgroup enumeration limit exceeded")
        frontier = nxt
    return sorted(found.values(), key=lambda S: (S.order, S.elements.tolist()))


def frobenius_by_complement_search(G: FiniteGroup, subgroups: list[SubgroupSet] | None = None) -> FrobeniusStructure:
    """Independent oracle: look for a malnormal proper nontrivial subgroup ``C``.

    The kernel is rebuilt as the identity plus everything outside the
    conjugates of ``C`` and must be a subgroup.
    """
    subs = enumerate_subgroups(G) if subgroups is None else subgroups
    allg = G.elements()
    for C in subs:
        if not 1 < C.order < G.order:
            continue
        outside = allg[~C.mask(allg)]
        # C ∩ C^g = 1 for all g outside C
        malnormal = True
        nontriv = C.elements[C.elements != IDENTITY]
        for g in outside.tolist():
            if np.any(C.mask(G.conj(nontriv, g))):
                malnormal = False
                break
        if not malnormal:
            continue
        covered = np.zeros(G.order, dtype=bool)
        covered[np.unique(G.conj(nontriv[None, :], allg[:, None]))] = True
        kernel = allg[~covered]
        if gc.is_subgroup(G, kernel):
            K = SubgroupSet(kernel)
            return FrobeniusStructure(True, K, gc.prime_factors(K.order), gc.prime_factors(C.order), SubgroupSet(C.elements))
    return FrobeniusStructure(False)


def _is_generalised_quaternion(G: FiniteGroup, P: SubgroupSet) -> bool:
    orders = G.element_orders[P.elements]
    cyclic = orders.max() == P.order
    return P.order >= 8 and not cyclic and int(np.sum(orders == 2)) == 1


def frobenius_lemma_checks(G: FiniteGroup, fs: FrobeniusStructure, C: SubgroupSet, rep: VerificationReport) -> None:
    K = fs.kernel
    anchor = "Lemma 'Frobenius'"
    # (i) C acts regularly (fixed-point-freely) on K
    fixed = None
    for c in C.elements[C.elements != IDENTITY].tolist():
        comm = K.elements[(G.mul(K.elements, c) == G.mul(c, K.elements)) & (K.elements != IDENTITY)]
        if comm.size:
            fixed = {"complement_element": c, "fixed_kernel_element": int(comm[0])}
            break
    rep.add("lemma-i-regular-action", fixed is None, witness=fixed, anchor=anchor + " (i)")
    ok = (K.order - 1) % C.order == 0
    rep.add("lemma-ii-order-divides", ok, witness=None if ok else {"C": C.order, "K": K.order}, anchor=anchor + " (ii)", complement_order=C.order, kernel_order=K.order)
    nil = gc.is_nilpotent(G, K)
    ab = gc.is_abelian(G, K)
    ok = nil and (ab or C.order % 2 == 1)
    rep.add("lemma-iii-kernel-nilpotent", ok, witness=None if ok else {"nilpotent": nil, "abelian": ab}, anchor=anchor + " (iii)")
    subs = enumerate_subgroups(G, within=C)
    bad = None
    for p in gc.prime_factors(C.order):
        psubs = [S for S in subs if gc.is_p_group_order(S.order, p)]
        P = max(psubs, key=lambda S: S.order)
        cyc = int(G.element_orders[P.elements].max()) == P.order
        if not (cyc or (p == 2 and _is_generalised_quaternion(G, P))):
            bad = {"prime": p, "sylow_order": P.order}
            break
    rep.add("lemma-iv-sylow-cyclic-or-quaternion", bad is None, witness=bad, anchor=anchor + " (iv)")
    bad = None
    for S in subs:
        f = gc.prime_factors(S.order)
        is_pq = (len(f) == 2 and S.order == f[0] * f[1]) or (len(f) == 1 and S.order == f[0] ** 2)
        if is_pq and int(G.element_orders[S.elements].max()) != S.order:
            bad = {"subgroup_order": S.order, "elements": S.elements.tolist()}
            break
    rep.add("lemma-v-pq-subgroups-cyclic", bad is None, witness=bad, anchor=anchor + " (v)")
    if C.order % 2:
        bad = None
        for s in C.elements.tolist():
            o = int(G.element_orders[s])
            if o in gc.prime_factors(C.order) and not gc.is_normal_in(G, gc.cyclic_subgroup(G, s), C):
                bad = {"element": s, "order": o}
                break
        rep.add("odd-complement-prime-order-normal", bad is None, witness=bad, anchor="Lemma 'odd sol frobenius'")
    else:
        invs = C.elements[G.element_orders[C.elements] == 2]
        central = invs.size == 1 and bool(np.all(G.mul(C.elements, invs[0]) == G.mul(invs[0], C.elements)))
        rep.add("lemma-vi-unique-central-involution", central, witness=None if central else {"involutions": invs.tolist()}, anchor=anchor + " (vi)")


def verify_frobenius_lemmas(G, oracle_bound: int = ORACLE_BOUND) -> VerificationReport:
    ctx = _ctx(G)
    rep = VerificationReport("frobenius-lemmas", ctx.name)
    if ctx.G.order < 2:
        rep.add("oracle-agreement", None, reason="trivial group")
        return rep
    fs = ctx.frobenius
    if ctx.G.order <= oracle_bound:
        orc = frobenius_by_complement_search(ctx.G)
        agree = orc.is_frobenius == fs.is_frobenius and (not fs.is_frobenius or orc.kernel == fs.kernel)
        rep.add(
            "oracle-agreement",
            agree,
            witness=None if agree else {"detected": fs.to_dict(), "oracle": orc.to_dict()},
            is_frobenius=fs.is_frobenius,
        )
    else:
        rep.add("oracle-agreement", None, reason=f"order above oracle bound {oracle_bound}")
    if not fs.is_frobenius:
        return rep
    try:
        C = find_complement(ctx.G, fs)
    except ComplementSearchError as exc:
        rep.add("complement-found", False, witness={"error": str(exc)})
        return rep
    ok = C.order * fs.kernel.order == ctx.G.order
    rep.add("complement-found", ok, witness=None if ok else {"complement_order": C.order}, complement_order=C.order)
    frobenius_lemma_checks(ctx.G, fs, C, rep)
    return rep


# ---------------------------------------------------------------------------
# collapse soundness


def verify_collapse_equivalence(G, bound: int = EXHAUSTIVE_BOUND, kinds: Iterable = tuple(GraphKind)) -> VerificationReport:
    """Element-level BFS versus the collapsed graph, for every kind."""
    ctx = _ctx(G)
    rep = VerificationReport("collapse-equivalence", ctx.name)
    if not 2 <= ctx.G.order <= bound:
        rep.add("element-distances-match", None, reason=f"order outside 2..{bound}")
        return rep
    t = ctx.table
    verts = np.arange(1, ctx.G.order)
    cid = t.member_index[verts]
    for kind in kinds:
        kind = GraphKind.parse(kind)
        g = ctx.graph(kind)
        _, D = element_level_distances(kind, ctx.G)
        C = np.full((t.count, t.count), -1, dtype=np.int64)
        for i in range(t.count):
            C[i] = bfs(g, i).distances
        pred = C[cid[:, None], cid[None, :]]
        same_sub = cid[:, None] == cid[None, :]
        pred = np.where(same_sub, 1, pred)
        np.fill_diagonal(pred, 0)
        mism = np.argwhere(pred != D)
        w = None
        if mism.size:
            a, b = mism[0].tolist()
            w = {"x": int(verts[a]), "y": int(verts[b]), "element_distance": int(D[a, b]), "collapsed": int(pred[a, b])}
        rep.add(f"{kind.value}-distances-match", w is None, witness=w)
        ecc = np.where((C < 0).any(axis=1), -1, C.max(axis=1))
        bad = None
        for label in range(ctx.orbits.count):
            vals = np.unique(ecc[ctx.orbits.orbit_of == label])
            if vals.size > 1:
                bad = {"orbit": label, "eccentricities": vals.tolist()}
                break
        rep.add(f"{kind.value}-eccentricity-orbit-constant", bad is None, witness=bad)
    return rep


SUITE_FUNCS: dict[str, Callable[[Any], VerificationReport]] = {
    "hierarchy": verify_hierarchy,
    "theorem1": verify_theorem1,
    "frobenius-bound": verify_frobenius_bound,
    "norm-distance": verify_norm_distance,
    "corollary": verify_corollary,
    "frobenius-lemmas": verify_frobenius_lemmas,
    "collapse-equivalence": verify_collapse_equivalence,
}


# ---------------------------------------------------------------------------
# corpus


@dataclass
class CorpusEntry:
    spec: GroupSpec | None
    name: str
    tags: tuple[str, ...] = ()
    error: str | None = None


def load_corpus(text: str) -> list[CorpusEntry]:
    """Corpus document: ``groups: [spec, ...]``; each spec may carry ``name`` and ``tags``.

    Specs that fail to parse become entries with ``error`` set.
    """
    data = yaml.safe_load(text) or {}
    items = data.get("groups", []) if isinstance(data, dict) else data
    out = []
    for k, item in enumerate(items or []):
        name = str(item.get("name", f"group{k}")) if isinstance(item, dict) else f"group{k}"
        try:
            spec = spec_from_dict(item)
        except SpecError as exc:
            out.append(CorpusEntry(None, name, error=str(exc)))
            continue
        out.append(CorpusEntry(spec, spec.name or name, spec.tags))
    return out


def default_corpus_text() -> str:
    return resources.files("normgraphs").joinpath("data/default_corpus.yaml").read_text(encoding="utf-8")


def default_corpus() -> list[CorpusEntry]:
    return load_corpus(default_corpus_text())


def _run_entry(entry: CorpusEntry, suites: list[str], bound: int) -> list[VerificationReport]:
    if entry.error is not None:
        return [VerificationReport("build", entry.name, error=entry.error)]
    try:
        G = build(entry.spec)
    except (SpecError, gc.GroupError) as exc:
        return [VerificationReport("build", entry.name, error=str(exc))]
    if G.order > bound:
        r = VerificationReport("build", entry.name)
        r.add("within-corpus-bound", None, reason=f"order {G.order} above {bound}")
        return [r]
    ctx = GroupContext(G, name=entry.name)
    reports = []
    if "soluble" in entry.tags:
        r = VerificationReport("corpus-tags", entry.name)
        r.add("tagged-soluble", ctx.soluble, witness=None if ctx.soluble else {"soluble": False}, anchor="corpus invariant")
        if "frobenius-expected" in entry.tags:
            r.add("tagged-frobenius", ctx.frobenius.is_frobenius, witness=None if ctx.frobenius.is_frobenius else {"frobenius": False}, anchor="corpus invariant")
        if "disconnected-expected" in entry.tags:
            nc = len(ctx.components(GraphKind.NORMALISING))
            crit = ctx.frobenius.is_frobenius and disconnection_criterion(ctx.frobenius)
            r.add("tagged-disconnected", nc > 1 and crit, witness=None if nc > 1 and crit else {"components": nc, "criterion": crit}, anchor="corpus invariant", components=nc)
        reports.append(r)
    for s in suites:
        try:
            reports.append(SUITE_FUNCS[s](ctx))
        except Exception as exc:  # a crashing suite is a failed suite, not a crashed run
            reports.append(VerificationReport(s, entry.name, error=f"{type(exc).__name__}: {exc}"))
    return reports


def run_corpus(corpus: list[CorpusEntry], suites: Iterable[str] = SUITES, threads: int = 1, bound: int = CORPUS_BOUND) -> list[VerificationReport]:
    """Run suites over a corpus; report order follows corpus then suite order."""
    suites = list(suites)
    unknown = [s for s in suites if s not in SUITE_FUNCS]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            nested = list(pool.map(lambda e: _run_entry(e, suites, bound), corpus))
    else:
        nested = [_run_entry(e, suites, bound) for e in corpus]
    return [r for rs in nested for r in rs]


def all_passed(reports: list[VerificationReport]) -> bool:
    return all(r.passed for r in reports)


def reports_to_json(reports: list[VerificationReport], timestamp: bool = False) -> str:
    doc: dict[str, Any] = {"passed": all_passed(reports), "reports": [r.to_dict() for r in reports]}
    if timestamp:
        doc["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S")
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False)


def summary_table(reports: list[VerificationReport]) -> str:
    lines = [f"{'group':<28} {'suite':<22} {'pass':>4} {'fail':>4} {'skip':>4}  status"]
    for r in reports:
        n = {s: sum(c.status == s for c in r.claims) for s in ("pass", "fail", "skipped")}
        status = "ERROR" if r.error else ("ok" if r.passed else "FAIL")
        lines.append(f"{r.group:<28} {r.suite:<22} {n['pass']:>4} {n['fail']:>4} {n['skipped']:>4}  {status}")
    total_fail = sum(not r.passed for r in reports)
    lines.append(f"{len(reports)} reports, {total_fail} failing")
    return "\n".join(lines)
