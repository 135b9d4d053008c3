"""Representation-independent finite group primitives.

Every concrete group exposes vectorised ``mul`` and ``inv`` on integer element
ids (plain ints or numpy integer arrays). Identity is always id ``0``.
Everything here is written against that contract only.
"""

from __future__ import annotations

from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint

IDENTITY = 0

# Build a full Cayley table only for groups up to this order.
TABLE_LIMIT = 2048
CLOSURE_CHUNK = 2_000_000  # products per vectorised closure step


class GroupError(ValueError):
    """Raised for invalid group-theoretic requests (e.g. trivial group)."""


class FiniteGroup:
    """Abstract finite group on element ids ``0 .. order-1``.

    Subclasses implement :meth:`_mul` on numpy arrays and may override
    :meth:`_inv`. The identity is always id 0.
    """

    representation = "abstract"

    def __init__(self, order: int, generators: Sequence[int], name: str = ""):
        if order < 1:
            raise GroupError("group order must be positive")
        self.order = int(order)
        self.identity = IDENTITY
        self.generators = tuple(int(g) for g in generators if int(g) != IDENTITY)
        self.name = name or f"{self.representation}[{order}]"

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} order={self.order}>"

    # -- arithmetic -------------------------------------------------------
    def _mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _inv(self, a: np.ndarray) -> np.ndarray:
        # generic fallback: a^(o(a)-1)
        orders = self.element_orders[a]
        return self.power(a, orders - 1)

    @cached_property
    def table(self) -> np.ndarray | None:
        if self.order > TABLE_LIMIT:
            return None
        ids = np.arange(self.order, dtype=np.int64)
        return self._mul(np.repeat(ids, self.order), np.tile(ids, self.order)).reshape(
            self.order, self.order
        )

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.asarray(self._inv(np.arange(self.order, dtype=np.int64)), dtype=np.int64)

    def mul(self, a, b):
        """Product ``a*b``; broadcasts over numpy arrays."""
        scalar = np.ndim(a) == 0 and np.ndim(b) == 0
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        t = self.table
        if t is not None:
            out = t[a, b]
        else:
            a, b = np.broadcast_arrays(a, b)
            out = self._mul(a.ravel(), b.ravel()).reshape(a.shape)
        return int(out) if scalar else out

    def inv(self, a):
        out = self.inverses[np.asarray(a, dtype=np.int64)]
        return int(out) if np.ndim(a) == 0 else out

    def conj(self, g, h):
        """``g^h = h^-1 g h``."""
        return self.mul(self.mul(self.inv(h), g), h)

    def commutator(self, a, b):
        """``[a, b] = a^-1 b^-1 a b``."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def power(self, g, k):
        """``g^k`` for ``k >= 0``; ``g`` and ``k`` broadcast."""
        g = np.asarray(g, dtype=np.int64)
        k = np.asarray(k, dtype=np.int64)
        g, k = np.broadcast_arrays(g, k)
        result = np.zeros(g.shape, dtype=np.int64)
        base = g.copy()
        k = k.copy()
        while np.any(k > 0):
            odd = (k & 1) == 1
            if np.any(odd):
                result[odd] = self.mul(result[odd], base[odd])
            k >>= 1
            live = k > 0
            if np.any(live):
                base[live] = self.mul(base[live], base[live])
        return int(result) if result.ndim == 0 else result

    @cached_property
    def element_orders(self) -> np.ndarray:
        ids = np.arange(self.order, dtype=np.int64)
        orders = np.zeros(self.order, dtype=np.int64)
        orders[IDENTITY] = 1
        pending = ids[ids != IDENTITY]
        cur = pending.copy()
        k = 1
        while pending.size:
            done = cur == IDENTITY
            orders[pending[done]] = k
            pending, cur = pending[~done], cur[~done]
            cur = self.mul(cur, pending)
            k += 1
            if k > self.order + 1:
                raise GroupError("element of infinite order; table is not a group")
        return orders

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    @cached_property
    def primes(self) -> list[int]:
        return sorted(factorint(self.order))


class SubgroupSet:
    """Explicit element set of a subgroup: a sorted id array plus a lookup set.

    Equality is equality of the sorted element lists.
    """

    __slots__ = ("elements", "generator", "_members")

    def __init__(self, elements: Iterable[int], generator: int | None = None):
        arr = np.unique(np.asarray(list(elements) if not isinstance(elements, np.ndarray) else elements, dtype=np.int64))
        self.elements = arr
        self.generator = generator
        self._members = None

    @property
    def order(self) -> int:
        return int(self.elements.size)

    def __len__(self):
        return int(self.elements.size)

    def __iter__(self):
        return iter(self.elements.tolist())

    @property
    def members(self) -> frozenset:
        if self._members is None:
            self._members = frozenset(self.elements.tolist())
        return self._members

    def __contains__(self, g) -> bool:
        return int(g) in self.members

    def contains_all(self, ids) -> bool:
        ids = np.asarray(ids, dtype=np.int64).ravel()
        pos = np.searchsorted(self.elements, ids)
        pos[pos >= self.elements.size] = 0
        return bool(np.all(self.elements[pos] == ids))

    def mask(self, ids) -> np.ndarray:
        ids = np.asarray(ids, dtype=np.int64)
        pos = np.searchsorted(self.elements, ids)
        pos = np.where(pos >= self.elements.size, 0, pos)
        return self.elements[pos] == ids

    def issubset(self, other: "SubgroupSet") -> bool:
        return self.order <= other.order and other.contains_all(self.elements)

    def __le__(self, other):
        return self.issubset(other)

    def __lt__(self, other):
        return self.order < other.order and self.issubset(other)

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupSet)
            and self.order == other.order
            and bool(np.array_equal(self.elements, other.elements))
        )

    def __hash__(self):
        return hash(self.elements.tobytes())

    def __repr__(self):
        if self.order <= 12:
            return f"SubgroupSet({self.elements.tolist()})"
        return f"SubgroupSet(order={self.order})"

    @property
    def is_trivial(self) -> bool:
        return self.order == 1


# ---------------------------------------------------------------------------
# element-level operations


def element_order(G: FiniteGroup, g: int) -> int:
    """Least ``m >= 1`` with ``g^m = 1``."""
    return int(G.element_orders[int(g)])


def cyclic_subgroup(G: FiniteGroup, g: int) -> SubgroupSet:
    """The cyclic subgroup ``<g>``; ``generator`` is set to ``g``."""
    g = int(g)
    m = element_order(G, g)
    powers = G.power(np.full(m, g, dtype=np.int64), np.arange(m))
    return SubgroupSet(powers, generator=g)


def conjugate(G: FiniteGroup, g: int, h: int) -> int:
    """``g^h = h^-1 g h``."""
    return int(G.conj(int(g), int(h)))


def _closure_ids(G: FiniteGroup, seed: np.ndarray, gens: np.ndarray) -> np.ndarray:
    if gens.size == 0:
        return np.unique(np.append(seed, IDENTITY))
    mask = np.zeros(G.order, dtype=bool)
    mask[IDENTITY] = True
    start = np.unique(np.append(seed, IDENTITY))
    mask[start] = True
    frontier = start
    step = max(1, CLOSURE_CHUNK // gens.size)
    while frontier.size:
        found = []
        for k in range(0, frontier.size, step):
            prods = G.mul(frontier[k : k + step, None], gens[None, :]).ravel()
            fresh = np.unique(prods[~mask[prods]])
            mask[fresh] = True
            found.append(fresh)
        frontier = np.concatenate(found)
    return np.flatnonzero(mask)


def closure(G: FiniteGroup, generators: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing ``generators``; empty input gives ``{1}``."""
    gens = np.unique(np.asarray(list(generators), dtype=np.int64))
    gens = gens[gens != IDENTITY]
    return SubgroupSet(_closure_ids(G, gens, gens))


def join(G: FiniteGroup, H: SubgroupSet, extra: Iterable[int]) -> SubgroupSet:
    """``<H, extra>``.

    Extra elements are added one at a time and skipped once already inside,
    so the generator list stays logarithmic in ``|G|``.
    """
    extra = np.unique(np.asarray(list(extra), dtype=np.int64))
    gens = [int(g) for g in generating_set(G, H)]
    cur = H.elements
    inside = np.zeros(G.order, dtype=bool)
    inside[cur] = True
    for x in extra.tolist():
        if inside[x]:
            continue
        gens.append(x)
        cur = _closure_ids(G, cur, np.asarray(gens, dtype=np.int64))
        inside[cur] = True
    return SubgroupSet(cur)


def generating_set(G: FiniteGroup, H: SubgroupSet) -> np.ndarray:
    """A small (greedy, not minimal) generating set of ``H``."""
    if H.order == 1:
        return np.zeros(0, dtype=np.int64)
    orders = G.element_orders[H.elements]
    candidates = H.elements[np.argsort(-orders, kind="stable")]
    gens: list[int] = []
    have = np.zeros(G.order, dtype=bool)
    have[IDENTITY] = True
    size = 1
    for c in candidates.tolist():
        if have[c]:
            continue
        gens.append(c)
        sub = _closure_ids(G, np.asarray(gens), np.asarray(gens))
        have[sub] = True
        size = sub.size
        if size == H.order:
            break
    return np.asarray(gens, dtype=np.int64)


def whole_group(G: FiniteGroup) -> SubgroupSet:
    return SubgroupSet(np.arange(G.order, dtype=np.int64))


def trivial_subgroup(G: FiniteGroup) -> SubgroupSet:
    return SubgroupSet([IDENTITY])


def is_subgroup(G: FiniteGroup, elements: Iterable[int]) -> bool:
    """Whether an element set is closed under products and contains 1."""
    S = SubgroupSet(elements)
    if IDENTITY not in S:
        return False
    prods = G.mul(S.elements[:, None], S.elements[None, :])
    return S.contains_all(prods)


def is_normal(G: FiniteGroup, H: SubgroupSet) -> bool:
    """``h^g`` in ``H`` for all ``h`` in ``H``, ``g`` in ``G``."""
    for g in G.generators:
        if not H.contains_all(G.conj(H.elements, g)):
            return False
    return True


def is_normal_in(G: FiniteGroup, H: SubgroupSet, K: SubgroupSet) -> bool:
    """Whether ``H`` is normalised by every element of ``K``."""
    for g in generating_set(G, K).tolist():
        if not H.contains_all(G.conj(H.elements, g)):
            return False
    return True


def _cyclic_generator(G: FiniteGroup, B: SubgroupSet) -> int:
    if B.generator is not None:
        return int(B.generator)
    orders = G.element_orders[B.elements]
    best = int(np.argmax(orders))
    if orders[best] != B.order:
        raise GroupError("subgroup is not cyclic")
    return int(B.elements[best])


def normaliser_membership(G: FiniteGroup, a: int, B: SubgroupSet) -> bool:
    """Whether ``a`` normalises the cyclic subgroup ``B`` (``b^a`` in ``B``)."""
    b = _cyclic_generator(G, B)
    return G.conj(b, int(a)) in B


def normaliser(G: FiniteGroup, H: SubgroupSet) -> SubgroupSet:
    """``N_G(H)`` by testing every element against a generating set of ``H``."""
    allg = G.elements()
    keep = np.ones(G.order, dtype=bool)
    for h in generating_set(G, H).tolist():
        keep &= H.mask(G.conj(h, allg))
    return SubgroupSet(allg[keep])


def centralizer(G: FiniteGroup, S) -> SubgroupSet:
    """``C_G(S)`` for a subgroup or a single element."""
    if isinstance(S, SubgroupSet):
        gens = generating_set(G, S).tolist()
    else:
        gens = [int(S)]
    allg = G.elements()
    keep = np.ones(G.order, dtype=bool)
    for s in gens:
        keep &= G.mul(allg, s) == G.mul(s, allg)
    return SubgroupSet(allg[keep])


def center(G: FiniteGroup) -> SubgroupSet:
    allg = G.elements()
    keep = np.ones(G.order, dtype=bool)
    for s in G.generators:
        keep &= G.mul(allg, s) == G.mul(s, allg)
    return SubgroupSet(allg[keep])


def conjugacy_class(G: FiniteGroup, g: int) -> np.ndarray:
    return np.unique(G.conj(int(g), G.elements()))


def normal_closure_of(G: FiniteGroup, H: SubgroupSet) -> SubgroupSet:
    """Smallest normal subgroup of ``G`` containing ``H``."""
    while True:
        new = [G.conj(H.elements, g) for g in G.generators]
        if not new:
            return H
        cand = np.unique(np.concatenate(new))
        outside = cand[~H.mask(cand)]
        if outside.size == 0:
            return H
        H = join(G, H, outside)


def normal_closure(G: FiniteGroup, g: int) -> SubgroupSet:
    """``<g^G>``."""
    return normal_closure_of(G, cyclic_subgroup(G, g))


def subgroup_commutator(G: FiniteGroup, A: SubgroupSet, B: SubgroupSet) -> SubgroupSet:
    """``[A, B]``, generated by all commutators ``[a, b]``.

    Small inputs use every element pair. Large ones use the normal closure in
    ``<A, B>`` of commutators of generators, which gives the same subgroup.
    """
    if A.order == 1 or B.order == 1:
        return trivial_subgroup(G)
    if A.order * B.order <= 250_000:
        comms = G.commutator(A.elements[:, None], B.elements[None, :]).ravel()
        return closure(G, np.unique(comms))
    ga, gb = generating_set(G, A), generating_set(G, B)
    comms = np.unique(G.commutator(ga[:, None], gb[None, :]).ravel())
    ambient_gens = np.concatenate([ga, gb])
    C = closure(G, comms)
    while True:
        cand = np.unique(np.concatenate([G.conj(C.elements, x) for x in ambient_gens.tolist()]))
        outside = cand[~C.mask(cand)]
        if outside.size == 0:
            return C
        C = join(G, C, outside)


def derived_subgroup(G: FiniteGroup, H: SubgroupSet) -> SubgroupSet:
    return subgroup_commutator(G, H, H)


def derived_series(G: FiniteGroup, H: SubgroupSet | None = None) -> list[SubgroupSet]:
    """``H > H' > H'' > ...`` until it stabilises (last entry repeats no term)."""
    H = whole_group(G) if H is None else H
    series = [H]
    while True:
        D = derived_subgroup(G, series[-1])
        if D == series[-1]:
            return series
        series.append(D)
        if D.order == 1:
            return series


def is_soluble(G: FiniteGroup, H: SubgroupSet | None = None) -> bool:
    return derived_series(G, H)[-1].order == 1


def lower_central_series(G: FiniteGroup, H: SubgroupSet | None = None) -> list[SubgroupSet]:
    """``gamma_1 = H``, ``gamma_{i+1} = [gamma_i, H]`` until it stabilises."""
    H = whole_group(G) if H is None else H
    series = [H]
    while True:
        D = subgroup_commutator(G, series[-1], H)
        if D == series[-1]:
            return series
        series.append(D)
        if D.order == 1:
            return series


def is_nilpotent(G: FiniteGroup, H: SubgroupSet | None = None) -> bool:
    return lower_central_series(G, H)[-1].order == 1


def is_abelian(G: FiniteGroup, H: SubgroupSet | None = None) -> bool:
    H = whole_group(G) if H is None else H
    gens = generating_set(G, H)
    return bool(np.all(G.mul(gens[:, None], gens[None, :]) == G.mul(gens[None, :], gens[:, None])))


def is_p_group_order(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def largest_normal_p_subgroup(G: FiniteGroup, p: int) -> SubgroupSet:
    """``O_p(G)``: closure of the p-elements whose normal closure is a p-group."""
    if G.order % p:
        return trivial_subgroup(G)
    orders = G.element_orders
    ppowers = [p**k for k in range(1, int(np.log(G.order) / np.log(p)) + 2)]
    pelts = np.flatnonzero(np.isin(orders, ppowers))
    O = trivial_subgroup(G)
    bad = np.zeros(G.order, dtype=bool)
    for x in pelts.tolist():
        if x in O or bad[x]:
            continue
        cand = normal_closure_of(G, join(G, O, [x]))
        if is_p_group_order(cand.order, p):
            O = cand
        else:
            bad[conjugacy_class(G, x)] = True
    return O


def fitting_subgroup(G: FiniteGroup) -> SubgroupSet:
    """``F(G)``, the product of the ``O_p(G)``."""
    F = trivial_subgroup(G)
    for p in G.primes:
        Op = largest_normal_p_subgroup(G, p)
        if Op.order > 1:
            F = join(G, F, generating_set(G, Op))
    return F


def minimal_normal_subgroups(G: FiniteGroup) -> list[SubgroupSet]:
    """All minimal normal subgroups, from normal closures of prime-order elements."""
    if G.order == 1:
        raise GroupError("the trivial group has no minimal normal subgroups")
    orders = G.element_orders
    prime_order = np.flatnonzero(np.isin(orders, prime_factors(G.order)))
    closures: list[SubgroupSet] = []
    seen = np.zeros(G.order, dtype=bool)
    for x in prime_order.tolist():
        if seen[x]:
            continue
        seen[conjugacy_class(G, x)] = True
        N = normal_closure(G, x)
        if N not in closures:
            closures.append(N)
    closures.sort(key=lambda S: (S.order, S.elements.tolist()))
    minimal = [N for N in closures if not any(M < N for M in closures)]
    return minimal


def is_elementary_abelian(G: FiniteGroup, H: SubgroupSet) -> bool:
    if H.order == 1:
        return True
    orders = set(G.element_orders[H.elements].tolist()) - {1}
    return len(orders) == 1 and orders.pop() in prime_factors(G.order) and is_abelian(G, H)


def prime_factors(n: int) -> list[int]:
    return sorted(factorint(n))


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
