"""Nontrivial cyclic subgroups as graph vertices, and their conjugation orbits.

All five graphs on ``G^#`` only see ``<x>`` and ``<y>``, so they are computed
on the cyclic subgroups and lifted back to elements when needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .group_core import IDENTITY, FiniteGroup, GroupError, SubgroupSet


@dataclass
class CyclicSubgroupTable:
    """Nontrivial cyclic subgroups of ``G`` with ids ordered by canonical generator.

    Attributes
    ----------
    canonical_generator : ndarray
        Smallest element id generating each subgroup.
    order : ndarray
        Order of each subgroup.
    member_index : ndarray
        ``member_index[g]`` is the id of ``<g>``; ``-1`` for the identity.
    powers : ndarray
        ``powers[i, k]`` is ``canonical_generator[i]**k`` for ``k < order[i]``,
        padded with ``-1``.
    """

    group: FiniteGroup
    canonical_generator: np.ndarray
    order: np.ndarray
    member_index: np.ndarray
    powers: np.ndarray
    _gen_offsets: np.ndarray
    _gen_elements: np.ndarray

    @property
    def count(self) -> int:
        return int(self.canonical_generator.size)

    def generators(self, i: int) -> np.ndarray:
        """All elements generating subgroup ``i``."""
        return self._gen_elements[self._gen_offsets[i] : self._gen_offsets[i + 1]]

    def elements(self, i: int) -> np.ndarray:
        row = self.powers[i]
        return np.sort(row[row >= 0])

    def element_set(self, i: int) -> SubgroupSet:
        return SubgroupSet(self.elements(i), generator=int(self.canonical_generator[i]))

    def id_of(self, g: int) -> int:
        i = int(self.member_index[int(g)])
        if i < 0:
            raise GroupError("the identity generates no vertex")
        return i

    def contains(self, ids, x) -> np.ndarray:
        """Vectorised ``x in <canonical_generator[ids]>``."""
        ids = np.asarray(ids, dtype=np.int64)
        x = np.asarray(x, dtype=np.int64)
        ox = self.group.element_orders[x]
        ob = self.order[ids]
        divides = ob % ox == 0
        step = np.where(divides & (x != IDENTITY), ob // ox, 0)
        root = self.powers[ids, step]
        same = self.member_index[root] == self.member_index[x]
        return (x == IDENTITY) | (divides & same)

    def subgroups_inside(self, H: SubgroupSet) -> np.ndarray:
        """Ids of the cyclic subgroups contained in ``H``."""
        els = H.elements[H.elements != IDENTITY]
        return np.unique(self.member_index[els])


def build_table(G: FiniteGroup) -> CyclicSubgroupTable:
    """Enumerate the nontrivial cyclic subgroups of ``G``."""
    if G.order < 2:
        raise GroupError("the trivial group has no nontrivial cyclic subgroups")
    orders = G.element_orders
    g = np.arange(G.order, dtype=np.int64)
    g = g[g != IDENTITY]
    og = orders[g]
    canon = g.copy()
    cur = g.copy()
    maxo = int(og.max())
    for k in range(2, maxo):
        cur = G.mul(cur, g)
        coprime = (k < og) & (np.gcd(k, og) == 1)
        canon = np.where(coprime, np.minimum(canon, cur), canon)
    reps = np.unique(canon)
    member_index = np.full(G.order, -1, dtype=np.int64)
    member_index[g] = np.searchsorted(reps, canon)
    sub_orders = orders[reps]
    powers = np.full((reps.size, maxo), -1, dtype=np.int64)
    powers[:, 0] = IDENTITY
    cur = reps.copy()
    for k in range(1, maxo):
        live = k < sub_orders
        powers[live, k] = cur[live]
        cur = G.mul(cur, reps)
    sort = np.argsort(member_index[g], kind="stable")
    counts = np.bincount(member_index[g], minlength=reps.size)
    offsets = np.concatenate([[0], np.cumsum(counts)])
    return CyclicSubgroupTable(
        group=G,
        canonical_generator=reps,
        order=sub_orders,
        member_index=member_index,
        powers=powers,
        _gen_offsets=offsets,
        _gen_elements=g[sort],
    )


def conjugate_subgroup_id(table: CyclicSubgroupTable, ids, g):
    """Id of ``<a^g>`` where ``a`` generates subgroup ``ids``; vectorised."""
    G = table.group
    a = table.canonical_generator[np.asarray(ids, dtype=np.int64)]
    out = table.member_index[G.conj(a, g)]
    return int(out) if np.ndim(out) == 0 else out


@dataclass
class OrbitDecomposition:
    """Orbits of cyclic subgroups under conjugation.

    ``transversal[i]`` is an element ``t`` with ``representative(i)^t = i``.
    """

    orbit_of: np.ndarray
    representatives: np.ndarray
    transversal: np.ndarray

    @property
    def count(self) -> int:
        return int(self.representatives.size)

    def members(self, label: int) -> np.ndarray:
        return np.flatnonzero(self.orbit_of == label)


def orbits(table: CyclicSubgroupTable, G: FiniteGroup | None = None) -> OrbitDecomposition:
    """Conjugation orbits, found by closing under the group's generators."""
    G = table.group if G is None else G
    n = table.count
    orbit_of = np.full(n, -1, dtype=np.int64)
    transversal = np.zeros(n, dtype=np.int64)
    reps: list[int] = []
    gens = list(G.generators)
    # conjugation by each generator as a permutation of subgroup ids
    moves = [conjugate_subgroup_id(table, np.arange(n), x) for x in gens]
    for start in range(n):
        if orbit_of[start] >= 0:
            continue
        label = len(reps)
        reps.append(start)
        orbit_of[start] = label
        transversal[start] = IDENTITY
        frontier = np.array([start], dtype=np.int64)
        while frontier.size:
            nxt = []
            for x, mv in zip(gens, moves):
                img = mv[frontier]
                fresh = orbit_of[img] < 0
                if not np.any(fresh):
                    continue
                img, src = img[fresh], frontier[fresh]
                img, first = np.unique(img, return_index=True)
                src = src[first]
                orbit_of[img] = label
                transversal[img] = G.mul(transversal[src], x)
                nxt.append(img)
            frontier = np.concatenate(nxt) if nxt else np.zeros(0, dtype=np.int64)
    return OrbitDecomposition(orbit_of=orbit_of, representatives=np.asarray(reps, dtype=np.int64), transversal=transversal)


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
