"""Edge oracles for the five graphs on ``G^#`` and exact distance computations.

Graphs are built on cyclic subgroups (see :mod:`normgraphs.cyclic_collapse`).
Element-level distances follow from the collapsed ones:
``d(x, y) = d(<x>, <y>)`` when ``<x> != <y>``, and ``d(x, y) = 1`` for distinct
generators of one cyclic subgroup.
"""

from __future__ import annotations

import enum
import math
import os
import struct
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _cc

from . import group_core as gc
from .cyclic_collapse import CyclicSubgroupTable, OrbitDecomposition, build_table, conjugate_subgroup_id, orbits
from .group_core import IDENTITY, FiniteGroup, SubgroupSet

INF = math.inf


class GraphKind(str, enum.Enum):
    COMMUTING = "commuting"
    NORMALISING = "normalising"
    PERMUTING = "permuting"
    ENGEL = "engel"
    SOLUBLE = "soluble"

    @classmethod
    def parse(cls, value) -> "GraphKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().replace("normalizing", "normalising"))
        except ValueError:
            raise ValueError(f"unknown graph kind {value!r}; expected one of {[k.value for k in cls]}") from None


class ResourceBudgetExceeded(RuntimeError):
    """An edge enumeration would exceed the configured budget."""

    def __init__(self, message: str, partial: dict | None = None):
        super().__init__(message)
        self.partial = partial or {}


# ---------------------------------------------------------------------------
# scalar oracles on cyclic subgroups


def _engel_chain_trivial(G: FiniteGroup, A: SubgroupSet, B: SubgroupSet) -> bool:
    """Whether ``[B, A; n] = 1`` for some ``n >= 1``."""
    X = B
    seen = {X}
    while True:
        X = gc.subgroup_commutator(G, X, A)
        if X.order == 1:
            return True
        if X in seen:
            return False
        seen.add(X)


def subgroups_adjacent(kind: GraphKind, G: FiniteGroup, A: SubgroupSet, B: SubgroupSet) -> bool:
    """Adjacency of two cyclic subgroups (``generator`` must be set on both)."""
    a, b = int(A.generator), int(B.generator)
    if kind is GraphKind.COMMUTING:
        return G.commutator(a, b) == IDENTITY
    if kind is GraphKind.NORMALISING:
        return G.conj(b, a) in B or G.conj(a, b) in A
    if kind is GraphKind.PERMUTING:
        ab = np.unique(G.mul(A.elements[:, None], B.elements[None, :]))
        ba = np.unique(G.mul(B.elements[:, None], A.elements[None, :]))
        return bool(np.array_equal(ab, ba))
    if kind is GraphKind.ENGEL:
        if G.commutator(a, b) == IDENTITY:
            return True
        return _engel_chain_trivial(G, A, B) or _engel_chain_trivial(G, B, A)
    if kind is GraphKind.SOLUBLE:
        if G.commutator(a, b) == IDENTITY:
            return True
        return gc.is_soluble(G, gc.closure(G, [a, b]))
    raise ValueError(kind)


def adjacent(kind, G: FiniteGroup, table: CyclicSubgroupTable, i: int, j: int) -> bool:
    """Adjacency of cyclic-subgroup vertices ``i != j``."""
    if i == j:
        raise ValueError("adjacency is only defined for distinct vertices")
    kind = GraphKind.parse(kind)
    return subgroups_adjacent(kind, G, table.element_set(i), table.element_set(j))


def element_adjacent(kind, G: FiniteGroup, x: int, y: int) -> bool:
    """Element-level oracle, straight from the definitions (no collapse)."""
    if x == y or x == IDENTITY or y == IDENTITY:
        raise ValueError("vertices must be distinct non-identity elements")
    kind = GraphKind.parse(kind)
    if kind is GraphKind.COMMUTING:
        return G.mul(x, y) == G.mul(y, x)
    if kind is GraphKind.SOLUBLE:
        return gc.is_soluble(G, gc.closure(G, [x, y]))
    return subgroups_adjacent(kind, G, gc.cyclic_subgroup(G, x), gc.cyclic_subgroup(G, y))


# ---------------------------------------------------------------------------
# vectorised neighbourhoods


def _normalising_mask(G, table, i):
    canon = table.canonical_generator
    a = canon[i]
    ids = np.arange(table.count)
    c1 = table.member_index[G.conj(canon, a)] == ids
    c2 = table.member_index[G.conj(a, canon)] == i
    return c1 | c2


def _commuting_mask(G, table, i):
    canon = table.canonical_generator
    a = canon[i]
    return G.mul(a, canon) == G.mul(canon, a)


def _permuting_mask(G, table, i):
    mask = _normalising_mask(G, table, i)
    a_pows = table.powers[i, : table.order[i]]
    m = a_pows.size
    a_inv_pows = a_pows[(-np.arange(m)) % m]
    cand = np.flatnonzero(~mask)
    b = table.canonical_generator[cand]
    # <a><b> = <b><a>  iff  b a^s lies in <a><b> for every s
    for s in range(1, m):
        if cand.size == 0:
            break
        right = G.mul(b, a_pows[s])
        ok = np.zeros(cand.size, dtype=bool)
        for k in range(m):
            todo = ~ok
            if not np.any(todo):
                break
            x = G.mul(a_inv_pows[k], right[todo])
            ok[todo] = table.contains(cand[todo], x)
        cand, b = cand[ok], b[ok]
    mask[cand] = True
    return mask


def neighbourhood(kind, G: FiniteGroup, table: CyclicSubgroupTable, i: int) -> np.ndarray:
    """Sorted neighbour ids of vertex ``i``."""
    kind = GraphKind.parse(kind)
    if kind is GraphKind.NORMALISING:
        mask = _normalising_mask(G, table, i)
    elif kind is GraphKind.COMMUTING:
        mask = _commuting_mask(G, table, i)
    elif kind is GraphKind.PERMUTING:
        mask = _permuting_mask(G, table, i)
    else:
        mask = _commuting_mask(G, table, i)
        A = table.element_set(i)
        for j in np.flatnonzero(~mask).tolist():
            mask[j] = subgroups_adjacent(kind, G, A, table.element_set(j))
    mask[i] = False
    return np.flatnonzero(mask)


# ---------------------------------------------------------------------------
# collapsed graph


@dataclass
class CollapsedGraph:
    """Graph on nontrivial cyclic subgroups in CSR form.

    ``multiplicity[v]`` is the number of elements collapsed into vertex ``v``.
    """

    kind: GraphKind
    indptr: np.ndarray
    indices: np.ndarray
    multiplicity: np.ndarray
    stats: dict = field(default_factory=dict)

    @property
    def vertex_count(self) -> int:
        return int(self.indptr.size - 1)

    @property
    def edge_count(self) -> int:
        return int(self.indices.size // 2)

    def neighbours(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self) -> np.ndarray:
        return np.diff(self.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbours(u)
        k = np.searchsorted(nb, v)
        return bool(k < nb.size and nb[k] == v)

    def edges(self) -> np.ndarray:
        """Edge list ``(i, j)`` with ``i < j``, sorted."""
        rows = np.repeat(np.arange(self.vertex_count), self.degree())
        keep = rows < self.indices
        return np.stack([rows[keep], self.indices[keep]], axis=1)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(map(tuple, self.edges().tolist()))

    def to_scipy(self) -> csr_matrix:
        n = self.vertex_count
        data = np.ones(self.indices.size, dtype=np.int8)
        return csr_matrix((data, self.indices, self.indptr), shape=(n, n))

    def is_symmetric(self) -> bool:
        M = self.to_scipy()
        return (M != M.T).nnz == 0 and not np.any(M.diagonal())


def _from_rows(kind, rows: Sequence[np.ndarray], multiplicity) -> CollapsedGraph:
    deg = np.array([r.size for r in rows], dtype=np.int64)
    indptr = np.concatenate([[0], np.cumsum(deg)])
    indices = np.concatenate(rows).astype(np.int32) if rows else np.zeros(0, dtype=np.int32)
    return CollapsedGraph(GraphKind.parse(kind), indptr, indices, np.asarray(multiplicity))


def build_graph_all_pairs(kind, G: FiniteGroup, table: CyclicSubgroupTable) -> CollapsedGraph:
    """Reference construction: the scalar oracle on every pair."""
    kind = GraphKind.parse(kind)
    n = table.count
    sets = [table.element_set(i) for i in range(n)]
    rows: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if subgroups_adjacent(kind, G, sets[i], sets[j]):
                rows[i].append(j)
                rows[j].append(i)
    return _from_rows(kind, [np.array(sorted(r), dtype=np.int64) for r in rows], _multiplicity(table))


def _multiplicity(table: CyclicSubgroupTable) -> np.ndarray:
    return np.diff(table._gen_offsets)


CHECKPOINT_MAGIC = b"NGCKPT01"


def _write_checkpoint(path, header: dict, done: np.ndarray, rows: dict[int, np.ndarray]) -> None:
    """Layout: magic, u32 header length, JSON header, completion bitmap over row
    blocks, then for each finished representative: i64 rep, i64 length, i32 ids."""
    tmp = f"{path}.tmp"
    hdr = json.dumps(header, sort_keys=True).encode()
    with open(tmp, "wb") as fh:
        fh.write(CHECKPOINT_MAGIC)
        fh.write(struct.pack("<I", len(hdr)))
        fh.write(hdr)
        fh.write(np.packbits(done).tobytes())
        for r in sorted(rows):
            arr = rows[r].astype("<i4")
            fh.write(struct.pack("<qq", r, arr.size))
            fh.write(arr.tobytes())
    os.replace(tmp, path)


class CheckpointError(ValueError):
    pass


def _read_checkpoint(path, header: dict, nblocks: int):
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:8] != CHECKPOINT_MAGIC:
        raise CheckpointError(f"{path}: bad checkpoint magic")
    try:
        (hl,) = struct.unpack_from("<I", data, 8)
        stored = json.loads(data[12 : 12 + hl])
        if stored != header:
            raise CheckpointError(f"{path}: checkpoint belongs to a different computation")
        pos = 12 + hl
        nbytes = (nblocks + 7) // 8
        if len(data) < pos + nbytes:
            raise CheckpointError(f"{path}: truncated checkpoint")
        done = np.unpackbits(np.frombuffer(data[pos : pos + nbytes], dtype=np.uint8))[:nblocks].astype(bool)
        pos += nbytes
        rows = {}
        while pos < len(data):
            r, n = struct.unpack_from("<qq", data, pos)
            pos += 16
            if n < 0 or pos + 4 * n > len(data):
                raise CheckpointError(f"{path}: truncated checkpoint")
            rows[r] = np.frombuffer(data[pos : pos + 4 * n], dtype="<i4").astype(np.int64)
            pos += 4 * n
    except (struct.error, ValueError) as exc:
        if isinstance(exc, CheckpointError):
            raise
        raise CheckpointError(f"{path}: corrupt checkpoint") from exc
    return done, rows


def build_collapsed_graph(
    kind,
    G: FiniteGroup,
    table: CyclicSubgroupTable,
    orbit_data: OrbitDecomposition | None = None,
    threads: int = 1,
    max_edges: int = 400_000_000,
    checkpoint: str | os.PathLike | None = None,
    block_size: int = 8,
    progress: Callable[[int, int], None] | None = None,
) -> CollapsedGraph:
    """Build the collapsed graph of ``kind``.

    Neighbourhoods are computed for one representative per conjugation orbit
    (in parallel blocks) and transported to the rest of the orbit by
    conjugation, which is a graph automorphism.
    """
    kind = GraphKind.parse(kind)
    od = orbits(table, G) if orbit_data is None else orbit_data
    reps = od.representatives
    nblocks = (reps.size + block_size - 1) // block_size
    rep_rows: dict[int, np.ndarray] = {}
    done = np.zeros(nblocks, dtype=bool)
    header = {"kind": kind.value, "group_order": G.order, "vertex_count": table.count, "representatives": int(reps.size), "block_size": block_size}
    if checkpoint is not None and os.path.exists(checkpoint):
        done, rep_rows = _read_checkpoint(checkpoint, header, nblocks)
        for b in np.flatnonzero(done).tolist():
            if any(int(r) not in rep_rows for r in reps[b * block_size : (b + 1) * block_size]):
                raise CheckpointError(f"{checkpoint}: block {b} marked done but its rows are missing")
    sizes = np.bincount(od.orbit_of, minlength=reps.size)

    def run_block(b: int) -> dict[int, np.ndarray]:
        return {int(r): neighbourhood(kind, G, table, int(r)) for r in reps[b * block_size : (b + 1) * block_size]}

    todo = [b for b in range(nblocks) if not done[b]]
    projected = sum(rep_rows[int(r)].size * int(sizes[k]) for k, r in enumerate(reps) if int(r) in rep_rows)

    def absorb(b, res):
        nonlocal projected
        rep_rows.update(res)
        done[b] = True
        for r, row in res.items():
            projected += row.size * int(sizes[od.orbit_of[r]])
        if projected > 2 * max_edges:
            raise ResourceBudgetExceeded(
                f"{kind.value} graph needs more than {max_edges} edges",
                partial={"representatives_done": int(done.sum()) * block_size, "edges_so_far": projected // 2},
            )
        if checkpoint is not None:
            _write_checkpoint(checkpoint, header, done, rep_rows)
        if progress is not None:
            progress(int(done.sum()), nblocks)

    if threads > 1 and len(todo) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for b, res in zip(todo, pool.map(run_block, todo)):
                absorb(b, res)
    else:
        for b in todo:
            absorb(b, run_block(b))

    n = table.count
    deg = np.zeros(n, dtype=np.int64)
    rep_of_orbit = reps
    deg[:] = np.array([rep_rows[int(r)].size for r in rep_of_orbit])[od.orbit_of]
    indptr = np.concatenate([[0], np.cumsum(deg)])
    indices = np.empty(int(indptr[-1]), dtype=np.int32)
    canon = table.canonical_generator
    for label, r in enumerate(rep_of_orbit.tolist()):
        row = rep_rows[r]
        members = np.flatnonzero(od.orbit_of == label)
        d = row.size
        if d == 0:
            continue
        chunk = max(1, 4_000_000 // d)
        base = canon[row]
        for s in range(0, members.size, chunk):
            ms = members[s : s + chunk]
            t = od.transversal[ms]
            imgs = table.member_index[G.conj(base[None, :], t[:, None])]
            imgs.sort(axis=1)
            pos = indptr[ms][:, None] + np.arange(d)[None, :]
            indices[pos] = imgs
    graph = CollapsedGraph(kind, indptr, indices, _multiplicity(table))
    graph.stats = {"orbits": int(reps.size), "vertices": n, "edges": graph.edge_count}
    return graph


# ---------------------------------------------------------------------------
# traversal


@dataclass
class DistanceResult:
    """BFS distances from ``source`` (a vertex or a set); ``-1`` is unreachable."""

    source: object
    distances: np.ndarray
    parents: np.ndarray | None = None

    @property
    def all_reachable(self) -> bool:
        return bool(np.all(self.distances >= 0))

    @property
    def eccentricity(self) -> float:
        return INF if not self.all_reachable else int(self.distances.max())

    def distance(self, v: int) -> float:
        d = int(self.distances[v])
        return INF if d < 0 else d

    def path_to(self, v: int) -> list[int]:
        if self.parents is None or self.distances[v] < 0:
            raise ValueError("no path recorded")
        path = [int(v)]
        while self.parents[path[-1]] >= 0:
            path.append(int(self.parents[path[-1]]))
        return path[::-1]


def bfs(graph: CollapsedGraph, source, with_parents: bool = False) -> DistanceResult:
    """Level-synchronous BFS from a vertex or an iterable of vertices."""
    n = graph.vertex_count
    dist = np.full(n, -1, dtype=np.int64)
    parents = np.full(n, -1, dtype=np.int64) if with_parents else None
    frontier = np.unique(np.atleast_1d(np.asarray(source, dtype=np.int64)))
    dist[frontier] = 0
    level = 0
    indptr, indices = graph.indptr, graph.indices
    while frontier.size:
        starts, ends = indptr[frontier], indptr[frontier + 1]
        lens = ends - starts
        total = int(lens.sum())
        if total == 0:
            break
        offs = np.repeat(starts - np.concatenate([[0], np.cumsum(lens)[:-1]]), lens)
        nb = indices[np.arange(total) + offs].astype(np.int64)
        fresh = dist[nb] < 0
        if with_parents:
            src = np.repeat(frontier, lens)[fresh]
        nb = nb[fresh]
        nb, first = np.unique(nb, return_index=True)
        level += 1
        dist[nb] = level
        if with_parents:
            parents[nb] = src[first]
        frontier = nb
    return DistanceResult(source=source, distances=dist, parents=parents)


def eccentricity(graph: CollapsedGraph, source: int) -> float:
    """Collapsed-graph eccentricity; ``inf`` if some vertex is unreachable."""
    return bfs(graph, source).eccentricity


def connected_components(graph: CollapsedGraph) -> list[np.ndarray]:
    """Vertex sets of the components, ordered by smallest vertex."""
    if graph.vertex_count == 0:
        return []
    ncomp, labels = _cc(graph.to_scipy(), directed=False)
    order = np.argsort(labels, kind="stable")
    splits = np.flatnonzero(np.diff(labels[order])) + 1
    comps = np.split(order, splits)
    comps.sort(key=lambda c: int(c[0]))
    return comps


def element_eccentricity(graph: CollapsedGraph, v: int, collapsed_ecc: float | None = None) -> float:
    """Eccentricity in the element graph of any generator of vertex ``v``."""
    e = eccentricity(graph, v) if collapsed_ecc is None else collapsed_ecc
    return max(e, 1 if graph.multiplicity[v] > 1 else 0)


def representative_eccentricities(graph: CollapsedGraph, orbit_data: OrbitDecomposition) -> np.ndarray:
    """Element-level eccentricity per orbit (``inf`` where disconnected)."""
    out = np.zeros(orbit_data.count, dtype=float)
    for k, r in enumerate(orbit_data.representatives.tolist()):
        out[k] = element_eccentricity(graph, r)
    return out


def diameter(graph: CollapsedGraph, orbit_data: OrbitDecomposition | None = None) -> float:
    """Diameter of the element graph on ``G^#``; ``inf`` when disconnected.

    Only orbit representatives are used as BFS sources, since conjugation
    preserves distances.
    """
    if graph.vertex_count == 0:
        return 0
    if len(connected_components(graph)) > 1:
        return INF
    reps = np.arange(graph.vertex_count) if orbit_data is None else orbit_data.representatives
    best = 0
    for r in reps.tolist():
        best = max(best, element_eccentricity(graph, r))
    return best


def component_diameters(graph: CollapsedGraph, orbit_data: OrbitDecomposition | None = None) -> list[float]:
    """Element-level diameter of each component, in :func:`connected_components` order."""
    comps = connected_components(graph)
    label = np.empty(graph.vertex_count, dtype=np.int64)
    for k, c in enumerate(comps):
        label[c] = k
    if orbit_data is None:
        reps = np.arange(graph.vertex_count)
        orbit_of = reps
    else:
        reps, orbit_of = orbit_data.representatives, orbit_data.orbit_of
    ecc_by_orbit = np.array([_within_component_ecc(graph, int(r)) for r in reps.tolist()])
    out = np.zeros(len(comps), dtype=float)
    # eccentricity is constant on orbits, so every vertex inherits its orbit's value
    np.maximum.at(out, label, ecc_by_orbit[orbit_of])
    return out.tolist()


def _within_component_ecc(graph: CollapsedGraph, v: int) -> float:
    d = bfs(graph, v).distances
    return max(int(d.max()), 1 if graph.multiplicity[v] > 1 else 0)


def element_distance(graph: CollapsedGraph, table: CyclicSubgroupTable, x: int, y: int) -> float:
    """``d(x, y)`` in the element graph, read off the collapsed graph."""
    if x == y:
        return 0
    i, j = table.id_of(x), table.id_of(y)
    if i == j:
        return 1
    return bfs(graph, i).distance(j)


def distance_to_subset(graph: CollapsedGraph, table: CyclicSubgroupTable, x: int, H: SubgroupSet) -> float:
    """``d(x, H) = min d(x, h)`` over non-identity ``h`` in ``H``; 0 when ``x`` is in ``H``."""
    if H.order <= 1:
        raise ValueError("H must be nontrivial")
    if x in H:
        return 0
    return bfs(graph, table.subgroups_inside(H)).distance(table.id_of(x))


def distances_to_subset(graph: CollapsedGraph, table: CyclicSubgroupTable, H: SubgroupSet) -> np.ndarray:
    """``d(x, H)`` for every non-identity ``x``, indexed by element id (entry 0 unused).

    Unreachable elements get ``-1``.
    """
    if H.order <= 1:
        raise ValueError("H must be nontrivial")
    d = bfs(graph, table.subgroups_inside(H)).distances
    out = np.full(table.group.order, -1, dtype=np.int64)
    nz = table.member_index >= 0
    out[nz] = d[table.member_index[nz]]
    out[IDENTITY] = 0
    return out


def export_edge_list(graph: CollapsedGraph, path) -> None:
    """Write ``kind vertex_count edge_count`` then one ``i j`` (``i < j``) per line."""
    E = graph.edges()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{graph.kind.value} {graph.vertex_count} {E.shape[0]}\n")
        for i, j in E.tolist():
            fh.write(f"{i} {j}\n")


def read_edge_list(path) -> tuple[str, int, np.ndarray]:
    with open(path, encoding="utf-8") as fh:
        kind, n, m = fh.readline().split()
        E = np.loadtxt(fh, dtype=np.int64, ndmin=2) if int(m) else np.zeros((0, 2), dtype=np.int64)
    return kind, int(n), E.reshape(-1, 2)


# ---------------------------------------------------------------------------
# element-level reference graphs (small groups only)


def element_level_graph(kind, G: FiniteGroup) -> tuple[np.ndarray, csr_matrix]:
    """Adjacency matrix on ``G^#`` from :func:`element_adjacent`; returns (vertex ids, matrix)."""
    kind = GraphKind.parse(kind)
    verts = np.arange(1, G.order)
    n = verts.size
    A = np.zeros((n, n), dtype=np.int8)
    cyc = {int(x): gc.cyclic_subgroup(G, int(x)) for x in verts}
    for a in range(n):
        for b in range(a + 1, n):
            x, y = int(verts[a]), int(verts[b])
            if kind is GraphKind.COMMUTING:
                e = G.mul(x, y) == G.mul(y, x)
            elif kind is GraphKind.SOLUBLE:
                e = element_adjacent(kind, G, x, y)
            else:
                e = subgroups_adjacent(kind, G, cyc[x], cyc[y])
            if e:
                A[a, b] = A[b, a] = 1
    return verts, csr_matrix(A)


def element_level_distances(kind, G: FiniteGroup) -> tuple[np.ndarray, np.ndarray]:
    """All-pairs element-level distances by BFS; ``-1`` for unreachable."""
    from scipy.sparse.csgraph import shortest_path

    verts, A = element_level_graph(kind, G)
    D = shortest_path(A, unweighted=True, directed=False)
    D = np.where(np.isinf(D), -1, D).astype(np.int64)
    return verts, D


def collapsed_graph(kind, G: FiniteGroup, threads: int = 1, **kw) -> tuple[CollapsedGraph, CyclicSubgroupTable, OrbitDecomposition]:
    """Convenience: table, orbits and graph in one call."""
    table = build_table(G)
    od = orbits(table, G)
    return build_collapsed_graph(kind, G, table, od, threads=threads, **kw), table, od
