"""Concrete group constructors and the group-spec file format.

Four element encodings are provided:

* ``TableGroup``: an explicit Cayley table (validated on construction);
* ``PermutationGroup``: permutations of ``0..degree-1``, composed left to
  right, so ``(g*h)(i) = h(g(i))``;
* ``SemidirectGroup``: ``GF(p)^dim ⋊ H`` for an enumerated matrix group ``H``
  acting on row vectors from the right;
* ``DirectProductGroup``: pairs of ids.

Cyclic and dihedral groups get closed-form arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial, gcd
from typing import Any, Sequence

import numpy as np
import yaml

from .group_core import IDENTITY, FiniteGroup, GroupError

# ---------------------------------------------------------------------------
# matrices over GF(p)


def _as_matrix(p: int, A) -> np.ndarray:
    M = np.asarray(A, dtype=np.int64) % p
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise GroupError(f"matrix must be square, got shape {M.shape}")
    return M


def matrix_mul(p: int, A, B) -> np.ndarray:
    A, B = _as_matrix(p, A), _as_matrix(p, B)
    if A.shape != B.shape:
        raise GroupError("matrix dimensions differ")
    return (A @ B) % p


def row_reduce(p: int, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``A`` over GF(p) and its pivot columns."""
    M = np.asarray(A, dtype=np.int64) % p
    M = M.copy()
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            M[[r, k]] = M[[k, r]]
        M[r] = (M[r] * pow(int(M[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] = (M[i] - M[i, c] * M[r]) % p
        pivots.append(c)
        r += 1
    return M, pivots


def rank_mod_p(p: int, A) -> int:
    return len(row_reduce(p, A)[1])


def det_mod_p(p: int, A) -> int:
    M = _as_matrix(p, A).copy()
    n = M.shape[0]
    det = 1
    for c in range(n):
        nz = np.flatnonzero(M[c:, c])
        if nz.size == 0:
            return 0
        k = c + int(nz[0])
        if k != c:
            M[[c, k]] = M[[k, c]]
            det = -det
        det = det * int(M[c, c]) % p
        inv = pow(int(M[c, c]), -1, p)
        for i in range(c + 1, n):
            if M[i, c]:
                M[i] = (M[i] - M[i, c] * inv * M[c]) % p
    return det % p


def matrix_inverse(p: int, A) -> np.ndarray:
    M = _as_matrix(p, A)
    n = M.shape[0]
    R, piv = row_reduce(p, np.hstack([M, np.eye(n, dtype=np.int64)]))
    if piv[:n] != list(range(n)):
        raise GroupError("matrix is singular mod p")
    return R[:, n:] % p


def matrix_order(p: int, A, limit: int = 10**6) -> int:
    """Multiplicative order of an invertible matrix over GF(p)."""
    M = _as_matrix(p, A)
    if det_mod_p(p, M) == 0:
        raise GroupError("matrix is singular mod p")
    eye = np.eye(M.shape[0], dtype=np.int64)
    P = M.copy()
    k = 1
    while not np.array_equal(P, eye):
        P = (P @ M) % p
        k += 1
        if k > limit:
            raise GroupError("matrix order exceeds search limit")
    return k


def fixed_space(p: int, A) -> list[np.ndarray]:
    """Basis of ``{v : v A = v}`` (row vectors), i.e. the left kernel of ``A - I``."""
    M = _as_matrix(p, A)
    n = M.shape[0]
    # v (A - I) = 0  <=>  (A - I)^T v^T = 0
    R, piv = row_reduce(p, (M - np.eye(n, dtype=np.int64)).T)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = (-R[i, f]) % p
        basis.append(v)
    return basis


def close_matrix_group(p: int, generators: Sequence) -> list[np.ndarray]:
    """All products of the generators: identity first, the rest entry-lexicographic."""
    gens = [_as_matrix(p, g) for g in generators]
    if not gens:
        raise GroupError("need at least one matrix")
    dim = gens[0].shape[0]
    for g in gens:
        if g.shape != (dim, dim):
            raise GroupError("inconsistent matrix dimensions")
        if det_mod_p(p, g) == 0:
            raise GroupError(f"singular matrix mod {p}: {g.tolist()}")
    eye = np.eye(dim, dtype=np.int64)
    seen = {eye.tobytes(): eye}
    frontier = [eye]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                q = (m @ g) % p
                key = q.tobytes()
                if key not in seen:
                    seen[key] = q
                    nxt.append(q)
        frontier = nxt
    rest = sorted((m for k, m in seen.items() if k != eye.tobytes()), key=lambda m: m.ravel().tolist())
    return [eye] + rest


# ---------------------------------------------------------------------------
# group classes


class TableGroup(FiniteGroup):
    """Group given by a Cayley table with identity at index 0."""

    representation = "multiplication-table"

    def __init__(self, table, name: str = "", generators: Sequence[int] | None = None):
        t = np.asarray(table, dtype=np.int64)
        validate_table(t)
        n = t.shape[0]
        self.__dict__["table"] = t
        if generators is None:
            generators = _greedy_generators(t)
        super().__init__(n, generators, name=name)

    def _mul(self, a, b):
        return self.table[a, b]

    def _inv(self, a):
        inv = np.argmax(self.table == IDENTITY, axis=1)
        return inv[a]


def validate_table(t: np.ndarray, exhaustive_limit: int = 200, samples: int = 20000) -> None:
    """Raise :class:`GroupError` unless ``t`` is a group table with identity 0."""
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
        raise GroupError("table must be a non-empty square array")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise GroupError("table entries out of range")
    ids = np.arange(n)
    if not (np.array_equal(t[0], ids) and np.array_equal(t[:, 0], ids)):
        raise GroupError("element 0 is not a two-sided identity")
    for axis in (0, 1):
        if not np.all(np.sort(t, axis=axis) == (ids[:, None] if axis == 0 else ids[None, :])):
            raise GroupError("table is not a Latin square")
    if n <= exhaustive_limit:
        lhs = t[t[:, :, None], ids[None, None, :]]
        rhs = t[ids[:, None, None], t[None, :, :]]
        bad = np.argwhere(lhs != rhs)
    else:
        rng = np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, samples))
        bad = np.flatnonzero(t[t[a, b], c] != t[a, t[b, c]])
        bad = [(a[i], b[i], c[i]) for i in bad]
    if len(bad):
        raise GroupError(f"table is not associative, e.g. at {tuple(int(v) for v in bad[0])}")


def _greedy_generators(t: np.ndarray) -> list[int]:
    n = t.shape[0]
    have = np.zeros(n, dtype=bool)
    have[0] = True
    gens: list[int] = []
    for c in range(1, n):
        if have[c]:
            continue
        gens.append(c)
        frontier = np.flatnonzero(have)
        while frontier.size:
            prods = t[frontier[:, None], np.asarray(gens)[None, :]].ravel()
            fresh = np.unique(prods[~have[prods]])
            have[fresh] = True
            frontier = fresh
        if have.all():
            break
    return gens


class CyclicGroup(FiniteGroup):
    """``Z/n`` written additively; id ``k`` is the generator to the power ``k``."""

    representation = "multiplication-table"

    def __init__(self, n: int):
        if n < 1:
            raise GroupError("cyclic group needs n >= 1")
        self.n = n
        super().__init__(n, [1] if n > 1 else [], name=f"C{n}")

    def _mul(self, a, b):
        return (a + b) % self.n

    def _inv(self, a):
        return (-a) % self.n


class DihedralGroup(FiniteGroup):
    """Dihedral group of order ``2n``; id ``j*n + i`` is ``r^i s^j``."""

    representation = "multiplication-table"

    def __init__(self, n: int):
        if n < 1:
            raise GroupError("dihedral group needs n >= 1")
        self.n = n
        gens = [n] if n == 1 else [1, n]
        super().__init__(2 * n, gens, name=f"D{2 * n}")

    def _mul(self, a, b):
        n = self.n
        i, j = a % n, a // n
        k, l = b % n, b // n
        sign = np.where(j == 1, -1, 1)
        return ((j + l) % 2) * n + (i + sign * k) % n


def cycles_to_perm(degree: int, cycles: Sequence[Sequence[int]], one_based: bool = True) -> tuple[int, ...]:
    perm = list(range(degree))
    off = 1 if one_based else 0
    used: set[int] = set()
    for cyc in cycles:
        pts = [int(c) - off for c in cyc]
        for q in pts:
            if not 0 <= q < degree:
                raise GroupError(f"point {q + off} outside degree {degree}")
            if q in used:
                raise GroupError(f"point {q + off} repeated in cycle notation")
            used.add(q)
        for x, y in zip(pts, pts[1:] + pts[:1]):
            perm[x] = y
    return tuple(perm)


def perm_to_cycles(perm: Sequence[int], one_based: bool = True) -> list[tuple[int, ...]]:
    off = 1 if one_based else 0
    seen: set[int] = set()
    out = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        out.append(tuple(c + off for c in cyc))
    return out


class PermutationGroup(FiniteGroup):
    """Permutation group on ``0..degree-1``; elements sorted lexicographically."""

    representation = "permutation"

    def __init__(self, degree: int, generators: Sequence[Sequence[int]], name: str = "", max_order: int = 10**6):
        if degree < 1:
            raise GroupError("degree must be positive")
        gens = [tuple(int(x) for x in g) for g in generators]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise GroupError(f"not a permutation of degree {degree}: {g}")
        ident = tuple(range(degree))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = tuple(g[a[i]] for i in range(degree))
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
                        if len(seen) > max_order:
                            raise GroupError("permutation group too large")
            frontier = nxt
        perms = np.asarray(sorted(seen), dtype=np.int64).reshape(len(seen), degree)
        self.degree = degree
        self.perms = perms
        self._weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
        self._codes = perms @ self._weights  # sorted, since perms are lexicographic
        gen_ids = [self.index_of(g) for g in gens]
        super().__init__(len(perms), gen_ids, name=name)

    def index_of(self, perm: Sequence[int]) -> int:
        code = int(np.asarray(perm, dtype=np.int64) @ self._weights)
        pos = int(np.searchsorted(self._codes, code))
        if pos >= len(self._codes) or self._codes[pos] != code:
            raise GroupError(f"{tuple(perm)} is not in the group")
        return pos

    def element_from_cycles(self, cycles: Sequence[Sequence[int]]) -> int:
        return self.index_of(cycles_to_perm(self.degree, cycles))

    def _mul(self, a, b):
        pa, pb = self.perms[a], self.perms[b]
        prod = np.take_along_axis(pb, pa, axis=1)
        return np.searchsorted(self._codes, prod @ self._weights)

    def _inv(self, a):
        pa = self.perms[a]
        inv = np.argsort(pa, axis=1)
        return np.searchsorted(self._codes, inv @ self._weights)

    def cycles(self, g: int) -> list[tuple[int, ...]]:
        return perm_to_cycles(self.perms[int(g)].tolist())


class SemidirectGroup(FiniteGroup):
    """``N ⋊ H`` with ``N = GF(p)^dim`` and ``H`` an enumerated matrix group.

    Element id ``h * p**dim + code(v)`` encodes ``(v, h)``, where ``code`` reads
    ``v`` as a base-``p`` numeral with ``v[0]`` most significant. Multiplication
    is ``(v1, h1)(v2, h2) = (v1 M(h2) + v2, h1 h2)``. The ids ``0 .. p**dim-1``
    are exactly the normal subgroup ``N``.
    """

    representation = "matrix-semidirect"

    def __init__(self, p: int, dim: int, matrices: Sequence, name: str = ""):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise GroupError(f"modulus {p} is not prime")
        if dim < 1:
            raise GroupError("dimension must be positive")
        mats = [_as_matrix(p, m) for m in matrices] or [np.eye(dim, dtype=np.int64)]
        for m in mats:
            if m.shape != (dim, dim):
                raise GroupError(f"matrix shape {m.shape} does not match dim {dim}")
        self.p, self.dim = p, dim
        self.input_matrices = mats
        self.H = close_matrix_group(p, mats)
        nh = len(self.H)
        self.h_order = nh
        self.n_order = p**dim
        key = {m.tobytes(): i for i, m in enumerate(self.H)}
        self.h_table = np.array(
            [[key[((a @ b) % p).tobytes()] for b in self.H] for a in self.H], dtype=np.int64
        )
        self.h_inv = np.argmax(self.h_table == 0, axis=1)
        self._weights = p ** np.arange(dim - 1, -1, -1, dtype=np.int64)
        codes = np.arange(self.n_order, dtype=np.int64)
        self.digits = (codes[:, None] // self._weights[None, :]) % p
        # act[h, code(v)] = code(v M(h))
        self.act = np.stack([((self.digits @ m) % p) @ self._weights for m in self.H])
        gens = [self.element(np.zeros(dim, dtype=np.int64), key[m.tobytes()]) for m in mats]
        gens += [self.element(np.eye(dim, dtype=np.int64)[i], 0) for i in range(dim)]
        super().__init__(self.n_order * nh, gens, name=name or f"GF({p})^{dim}:H{nh}")

    def vec_code(self, v) -> int:
        return int((np.asarray(v, dtype=np.int64) % self.p) @ self._weights)

    def element(self, v, h: int = 0) -> int:
        return int(h) * self.n_order + self.vec_code(v)

    def matrix_index(self, M) -> int:
        M = _as_matrix(self.p, M)
        for i, m in enumerate(self.H):
            if np.array_equal(m, M):
                return i
        raise GroupError("matrix not in H")

    def split(self, g):
        g = np.asarray(g, dtype=np.int64)
        return g % self.n_order, g // self.n_order

    def _vadd(self, c1, c2):
        return ((self.digits[c1] + self.digits[c2]) % self.p) @ self._weights

    def _mul(self, a, b):
        v1, h1 = a % self.n_order, a // self.n_order
        v2, h2 = b % self.n_order, b // self.n_order
        v = self._vadd(self.act[h2, v1], v2)
        return self.h_table[h1, h2] * self.n_order + v

    def _inv(self, a):
        v, h = a % self.n_order, a // self.n_order
        hi = self.h_inv[h]
        # (v, h)^-1 = (-v M(h)^-1, h^-1)
        w = self.act[hi, v]
        neg = ((-self.digits[w]) % self.p) @ self._weights
        return hi * self.n_order + neg

    def normal_subgroup_ids(self) -> np.ndarray:
        return np.arange(self.n_order, dtype=np.int64)

    def complement_ids(self) -> np.ndarray:
        return np.arange(self.h_order, dtype=np.int64) * self.n_order


class DirectProductGroup(FiniteGroup):
    """``A × B`` with id ``a * |B| + b``."""

    representation = "direct-product"

    def __init__(self, A: FiniteGroup, B: FiniteGroup):
        self.A, self.B = A, B
        nb = B.order
        gens = [a * nb for a in A.generators] + list(B.generators)
        super().__init__(A.order * nb, gens, name=f"{A.name}x{B.name}")

    def _mul(self, x, y):
        nb = self.B.order
        return self.A.mul(x // nb, y // nb) * nb + self.B.mul(x % nb, y % nb)

    def _inv(self, x):
        nb = self.B.order
        return self.A.inv(x // nb) * nb + self.B.inv(x % nb)


# ---------------------------------------------------------------------------
# named constructors


def make_cyclic(n: int) -> FiniteGroup:
    return CyclicGroup(n)


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order ``2n``."""
    return DihedralGroup(n)


def make_symmetric(n: int) -> PermutationGroup:
    if not 1 <= n <= 5:
        raise GroupError("symmetric groups are supported for 1 <= n <= 5")
    if n == 1:
        return PermutationGroup(1, [], name="S1")
    gens = [cycles_to_perm(n, [list(range(1, n + 1))]), cycles_to_perm(n, [[1, 2]])]
    G = PermutationGroup(n, gens, name=f"S{n}")
    assert G.order == factorial(n)
    return G


def make_alternating(n: int) -> PermutationGroup:
    if not 3 <= n <= 5:
        raise GroupError("alternating groups are supported for 3 <= n <= 5")
    gens = [cycles_to_perm(n, [[1, 2, k]]) for k in range(3, n + 1)]
    return PermutationGroup(n, gens, name=f"A{n}")


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    return DirectProductGroup(A, B)


def semidirect_product(p: int, dim: int, H_matrices: Sequence, name: str = "") -> SemidirectGroup:
    return SemidirectGroup(p, dim, H_matrices, name=name)


# ---------------------------------------------------------------------------
# group-spec documents

KINDS = ("cyclic", "dihedral", "symmetric", "permutation", "matrix-semidirect", "direct-product", "table")


class SpecError(ValueError):
    """Malformed or invalid group spec; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line, self.field = line, field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


@dataclass
class GroupSpec:
    kind: str
    params: dict[str, Any] = field(default_factory=dict)
    name: str = ""
    tags: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"kind": self.kind}
        if self.name:
            d["name"] = self.name
        if self.tags:
            d["tags"] = list(self.tags)
        for k, v in self.params.items():
            d[k] = [f.to_dict() for f in v] if k == "factors" else v
        return d


def _need_int(d: dict, key: str, lo: int = 1) -> int:
    if key not in d:
        raise SpecError("missing required field", field=key)
    v = d[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"expected an integer, got {v!r}", field=key)
    if v < lo:
        raise SpecError(f"must be >= {lo}", field=key)
    return v


def spec_from_dict(d: Any) -> GroupSpec:
    if not isinstance(d, dict):
        raise SpecError("group spec must be a mapping")
    kind = d.get("kind")
    if kind not in KINDS:
        raise SpecError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", field="kind")
    name = str(d.get("name", ""))
    tags = tuple(str(t) for t in d.get("tags", []) or [])
    params: dict[str, Any] = {}
    if kind in ("cyclic", "dihedral", "symmetric"):
        params["n"] = _need_int(d, "n")
    elif kind == "permutation":
        params["degree"] = _need_int(d, "degree")
        gens = d.get("generators")
        if not isinstance(gens, list):
            raise SpecError("expected a list of generators (each a list of cycles)", field="generators")
        for g in gens:
            if not isinstance(g, list) or not all(isinstance(c, list) and all(isinstance(x, int) for x in c) for c in g):
                raise SpecError(f"generator {g!r} is not a list of integer cycles", field="generators")
        params["generators"] = gens
    elif kind == "matrix-semidirect":
        p = _need_int(d, "p", 2)
        dim = _need_int(d, "dim")
        mats = d.get("matrices")
        if not isinstance(mats, list):
            raise SpecError("expected a list of matrices", field="matrices")
        clean = []
        for m in mats:
            if not (isinstance(m, list) and len(m) == dim and all(isinstance(r, list) and len(r) == dim and all(isinstance(x, int) for x in r) for r in m)):
                raise SpecError(f"expected a {dim}x{dim} integer matrix, got {m!r}", field="matrices")
            clean.append([[x % p for x in r] for r in m])
        params.update(p=p, dim=dim, matrices=clean)
    elif kind == "direct-product":
        facs = d.get("factors")
        if not isinstance(facs, list) or not facs:
            raise SpecError("expected a non-empty list of factor specs", field="factors")
        params["factors"] = [spec_from_dict(f) for f in facs]
    elif kind == "table":
        t = d.get("table")
        if not isinstance(t, list) or not t:
            raise SpecError("expected a square list of rows", field="table")
        params["table"] = t
    return GroupSpec(kind=kind, params=params, name=name, tags=tags)


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a YAML (or JSON) group-spec document."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise SpecError(str(getattr(exc, "problem", exc)), line=mark.line + 1 if mark else None) from exc
    try:
        return spec_from_dict(data)
    except SpecError as exc:
        if exc.line is None and exc.field is not None and isinstance(data, dict):
            exc = SpecError(exc.args[0].split(": ", 1)[-1], line=_field_line(text, exc.field), field=exc.field)
        raise exc


def _field_line(text: str, key: str) -> int | None:
    for i, line in enumerate(text.splitlines(), 1):
        if line.lstrip().startswith(f"{key}:") or f'"{key}"' in line:
            return i
    return None


def build(spec: GroupSpec) -> FiniteGroup:
    """Construct the group a spec describes. Errors surface as :class:`SpecError`."""
    try:
        G = _build(spec)
    except GroupError as exc:
        raise SpecError(str(exc)) from exc
    if spec.name:
        G.name = spec.name
    return G


def _build(spec: GroupSpec) -> FiniteGroup:
    k, P = spec.kind, spec.params
    if k == "cyclic":
        return make_cyclic(P["n"])
    if k == "dihedral":
        return make_dihedral(P["n"])
    if k == "symmetric":
        return make_symmetric(P["n"])
    if k == "permutation":
        deg = P["degree"]
        gens = [cycles_to_perm(deg, g) for g in P["generators"]]
        return PermutationGroup(deg, gens)
    if k == "matrix-semidirect":
        return semidirect_product(P["p"], P["dim"], P["matrices"])
    if k == "direct-product":
        factors = [build(f) for f in P["factors"]]
        G = factors[0]
        for F in factors[1:]:
            G = direct_product(G, F)
        return G
    if k == "table":
        return TableGroup(P["table"])
    raise SpecError(f"unknown kind {k!r}")


def load_group(path) -> FiniteGroup:
    with open(path, encoding="utf-8") as fh:
        return build(parse_group_spec(fh.read()))


def order_statistics(G: FiniteGroup) -> dict[int, int]:
    vals, counts = np.unique(G.element_orders, return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, counts)}


def exponent(G: FiniteGroup) -> int:
    e = 1
    for o in np.unique(G.element_orders).tolist():
        e = e * o // gcd(e, o)
    return e


def brute_force_associative(G: FiniteGroup, limit: int = 2000, samples: int = 20000) -> bool:
    """Exhaustive associativity check up to ``limit`` elements, sampled above."""
    n = G.order
    if n <= 60:
        trip = np.array(list(itertools.product(range(n), repeat=3)), dtype=np.int64).T
    elif n <= limit:
        rng = np.random.default_rng(1)
        trip = rng.integers(0, n, size=(3, max(samples, 4 * n)))
    else:
        rng = np.random.default_rng(1)
        trip = rng.integers(0, n, size=(3, samples))
    a, b, c = trip
    return bool(np.all(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))))
