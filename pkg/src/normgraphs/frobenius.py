"""Frobenius kernel detection and the disconnection criterion for Γ(G)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import group_core as gc
from .group_core import IDENTITY, FiniteGroup, GroupError, SubgroupSet


class NotFrobeniusError(GroupError):
    pass


class ComplementSearchError(GroupError):
    """No Frobenius complement was found within the search budget."""


@dataclass
class FrobeniusStructure:
    is_frobenius: bool
    kernel: SubgroupSet | None = None
    kernel_primes: list[int] = field(default_factory=list)
    complement_primes: list[int] = field(default_factory=list)
    complement: SubgroupSet | None = None

    def to_dict(self) -> dict:
        d = {"is_frobenius": self.is_frobenius}
        if self.is_frobenius:
            d.update(
                kernel_order=self.kernel.order,
                kernel_primes=self.kernel_primes,
                complement_primes=self.complement_primes,
            )
            if self.complement is not None:
                d["complement_order"] = self.complement.order
        return d


def kernel_condition(G: FiniteGroup, K: SubgroupSet) -> bool:
    """``1 < K < G`` and ``C_G(k) <= K`` for all ``k`` in ``K^#``.

    Centralisers only grow on passing to powers, and ``K`` is normal, so it is
    enough to test one prime-order element per conjugacy class.
    """
    if not 1 < K.order < G.order:
        return False
    orders = G.element_orders[K.elements]
    prime_elts = K.elements[np.isin(orders, gc.prime_factors(K.order))]
    allg = G.elements()
    outside = allg[~K.mask(allg)]
    seen = np.zeros(G.order, dtype=bool)
    for k in prime_elts.tolist():
        if seen[k]:
            continue
        seen[gc.conjugacy_class(G, k)] = True
        if np.any(G.mul(outside, k) == G.mul(k, outside)):
            return False
    return True


def detect_frobenius(G: FiniteGroup, fitting: SubgroupSet | None = None) -> FrobeniusStructure:
    """Kernel-first detection: ``G`` is Frobenius iff ``F(G)`` passes :func:`kernel_condition`."""
    if G.order < 2:
        raise GroupError("the trivial group is not a Frobenius group")
    F = gc.fitting_subgroup(G) if fitting is None else fitting
    if not kernel_condition(G, F):
        return FrobeniusStructure(is_frobenius=False)
    return FrobeniusStructure(
        is_frobenius=True,
        kernel=F,
        kernel_primes=gc.prime_factors(F.order),
        complement_primes=gc.prime_factors(G.order // F.order),
    )


def disconnection_criterion(fs: FrobeniusStructure) -> bool:
    """True iff no complement prime ``p`` divides ``r - 1`` for a kernel prime ``r``."""
    if not fs.is_frobenius:
        raise NotFrobeniusError("criterion only applies to Frobenius groups")
    return all((r - 1) % p for p in fs.complement_primes for r in fs.kernel_primes)


def find_complement(G: FiniteGroup, fs: FrobeniusStructure, budget: int = 200_000) -> SubgroupSet:
    """A complement to the kernel, generated by at most two elements outside it.

    Every element outside the kernel lies in some complement, so one element of
    largest order is fixed and a second generator is searched for.
    """
    if not fs.is_frobenius:
        raise NotFrobeniusError("no kernel to complement")
    if fs.complement is not None:
        return fs.complement
    K = fs.kernel
    index = G.order // K.order
    allg = G.elements()
    outside = allg[~K.mask(allg)]
    orders = G.element_orders[outside]
    ok = index % orders == 0
    outside, orders = outside[ok], orders[ok]
    g = int(outside[np.argmax(orders)])
    C = gc.cyclic_subgroup(G, g)
    if C.order == index:
        fs.complement = SubgroupSet(C.elements)
        return fs.complement
    tried = 0
    for h in outside.tolist():
        if h in C:
            continue
        tried += 1
        if tried > budget:
            break
        J = gc.closure(G, [g, h])
        if J.order == index:
            fs.complement = J
            return J
    raise ComplementSearchError(f"no 2-generated complement of order {index} found")


def predicted_components(G: FiniteGroup, fs: FrobeniusStructure, complement: SubgroupSet | None = None) -> list[np.ndarray]:
    """Components of a disconnected Γ(G): ``K^#`` and every ``(C^k)^#``, ``k`` in ``K``.

    Returned as sorted element arrays, ordered by smallest element.
    """
    if not fs.is_frobenius:
        raise NotFrobeniusError("no Frobenius structure")
    if not disconnection_criterion(fs):
        raise GroupError("criterion predicts a connected graph; no component prediction")
    C = find_complement(G, fs) if complement is None else complement
    K = fs.kernel
    parts = [K.elements[K.elements != IDENTITY]]
    cnt = C.elements[C.elements != IDENTITY]
    conj = G.conj(cnt[None, :], K.elements[:, None])
    conj.sort(axis=1)
    parts.extend(conj)
    parts.sort(key=lambda a: int(a[0]))
    return parts
