"""Finite subgroups of GL_n(Z): closure, subgroup lattice, Sylow theory.

Groups are materialized as the full set of elements in a canonical order
(lexicographic on row-major entries), which makes every "first subgroup"
style choice deterministic and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundExceededError, NonUnimodularError
from .intlinalg import (
    fixed_lattice,
    identity_matrix,
    intmat,
    is_unimodular,
    mat_key,
    rank,
)

DEFAULT_MAX_ORDER = 10000
DEFAULT_SUBGROUP_BOUND = 200
# finite-order integer matrices have bounded powers; runaway growth is a
# fast certificate of infinite order
_ENTRY_GUARD = 10**60


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class ElementProfile:
    """Order of a finite-order element together with rank(g - 1)."""

    order: int
    rank_drop: int
    is_reflection: bool
    is_bireflection: bool


@dataclass(frozen=True)
class GroupTable:
    """Abstract multiplication table: mult[i][j] is the index of g_i * g_j."""

    order: int
    mult: tuple[tuple[int, ...], ...]
    identity: int

    @classmethod
    def cyclic(cls, m: int) -> "GroupTable":
        return cls(m, tuple(tuple((i + j) % m for j in range(m)) for i in range(m)), 0)

    def validate(self) -> None:
        n = self.order
        assert len(self.mult) == n and all(len(r) == n for r in self.mult)
        assert all(self.mult[self.identity][j] == j for j in range(n))
        assert all(self.mult[i][self.identity] == i for i in range(n))


class MatGroup:
    """A finite subgroup of GL_n(Z), stored as all elements in canonical order."""

    def __init__(self, n: int, elements: tuple[np.ndarray, ...],
                 generator_indices: tuple[int, ...]):
        self.n = n
        self.elements = elements
        self.generator_indices = generator_indices
        self._keys = tuple(mat_key(m) for m in elements)
        self._index = {k: i for i, k in enumerate(self._keys)}
        self._table: tuple[tuple[int, ...], ...] | None = None
        self._inverses: tuple[int, ...] | None = None
        self._orders: tuple[int, ...] | None = None
        self._subgroups: list["MatGroup"] | None = None

    # -- construction -------------------------------------------------------

    @classmethod
    def _from_matrices(cls, n: int, mats: list[np.ndarray],
                       generators: list[np.ndarray]) -> "MatGroup":
        ordered = sorted(mats, key=mat_key)
        keys = [mat_key(m) for m in ordered]
        gidx = tuple(keys.index(mat_key(g)) for g in generators)
        return cls(n, tuple(ordered), gidx)

    # -- basic structure ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def generators(self) -> list[np.ndarray]:
        return [self.elements[i] for i in self.generator_indices]

    def key(self, i: int) -> tuple:
        return self._keys[i]

    def index_of(self, mat: np.ndarray) -> int:
        return self._index[mat_key(mat)]

    @property
    def identity_index(self) -> int:
        return self._index[mat_key(identity_matrix(self.n))]

    def canonical_key(self) -> tuple:
        return self._keys

    def mult_table(self) -> tuple[tuple[int, ...], ...]:
        if self._table is None:
            idx = self._index
            table = []
            for a in self.elements:
                row = []
                for b in self.elements:
                    row.append(idx[mat_key(a @ b)])
                table.append(tuple(row))
            self._table = tuple(table)
        return self._table

    def inverse_indices(self) -> tuple[int, ...]:
        if self._inverses is None:
            table = self.mult_table()
            e = self.identity_index
            inv = [0] * self.order
            for i in range(self.order):
                inv[i] = table[i].index(e)
            self._inverses = tuple(inv)
        return self._inverses

    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            table = self.mult_table()
            e = self.identity_index
            orders = []
            for i in range(self.order):
                k, o = i, 1
                while k != e:
                    k = table[k][i]
                    o += 1
                orders.append(o)
            self._orders = tuple(orders)
        return self._orders

    def to_table(self) -> GroupTable:
        return GroupTable(self.order, self.mult_table(), self.identity_index)

    # -- subgroup plumbing ---------------------------------------------------

    def subgroup_from_indices(self, indices, generator_indices=()) -> "MatGroup":
        idx = sorted(set(indices))
        mats = [self.elements[i] for i in idx]
        gens = [self.elements[i] for i in generator_indices]
        return MatGroup._from_matrices(self.n, mats, gens or mats[:1])

    def closure_indices(self, seed) -> frozenset[int]:
        """Indices of the subgroup generated by the given element indices."""
        table = self.mult_table()
        found = {self.identity_index} | set(seed)
        frontier = list(found)
        gens = list(set(seed))
        while frontier:
            new = []
            for g in gens:
                for b in frontier:
                    c = table[g][b]
                    if c not in found:
                        found.add(c)
                        new.append(c)
            frontier = new
        return frozenset(found)

    def contains_subgroup(self, H: "MatGroup") -> bool:
        return self.n == H.n and all(k in self._index for k in H._keys)

    def indices_of_subgroup(self, H: "MatGroup") -> frozenset[int]:
        return frozenset(self._index[k] for k in H._keys)

    def conjugate_indices(self, g: int, indices) -> frozenset[int]:
        table = self.mult_table()
        ginv = self.inverse_indices()[g]
        return frozenset(table[table[g][h]][ginv] for h in indices)

    def small_generating_indices(self, indices=None) -> tuple[int, ...]:
        """A short generating list found greedily in canonical order."""
        target = frozenset(indices) if indices is not None else frozenset(range(self.order))
        gens: list[int] = []
        span = self.closure_indices(())
        for i in sorted(target):
            if i not in span:
                gens.append(i)
                span = self.closure_indices(gens)
                if span == target:
                    break
        return tuple(gens)

    # -- identity/equality ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatGroup) and self.n == other.n
                and self._keys == other._keys)

    def __hash__(self):
        return hash((self.n, self._keys))

    def __repr__(self):
        return f"MatGroup(n={self.n}, order={self.order})"

    def validate(self) -> None:
        """Re-check the group axioms and element invariants (used in tests)."""
        table = self.mult_table()
        assert len(set(self._keys)) == self.order, "duplicate elements"
        assert all(is_unimodular(m) for m in self.elements), "non-unimodular element"
        found = set()
        for row in table:
            found.update(row)
        assert found <= set(range(self.order)), "not closed under products"
        self.inverse_indices()
        for o in self.element_orders():
            assert self.order % o == 0, "element order does not divide group order"


def trivial_group(n: int) -> MatGroup:
    return MatGroup._from_matrices(n, [identity_matrix(n)], [identity_matrix(n)])


def generate(gens, max_order: int = DEFAULT_MAX_ORDER) -> MatGroup:
    """Close a list of unimodular matrices under multiplication.

    Raises NonUnimodularError for a generator outside GL_n(Z) and
    BoundExceededError when the closure passes ``max_order`` (the group is
    infinite or larger than requested).
    """
    mats = [intmat(g) for g in gens]
    if not mats:
        raise ValueError("need at least one generator (use trivial_group(n) otherwise)")
    n = mats[0].shape[0]
    for g in mats:
        if g.shape != (n, n):
            raise ValueError("generators of mixed dimensions")
        if not is_unimodular(g):
            raise NonUnimodularError("generator has |det| != 1")
    elements = {mat_key(identity_matrix(n)): identity_matrix(n)}
    frontier = [identity_matrix(n)]
    while frontier:
        new = []
        for g in mats:
            for b in frontier:
                c = g @ b
                k = mat_key(c)
                if k not in elements:
                    elements[k] = c
                    new.append(c)
                    if len(elements) > max_order:
                        raise BoundExceededError(
                            f"closure exceeded max_order={max_order}")
        frontier = new
    return MatGroup._from_matrices(n, list(elements.values()), mats)


def subgroups(G: MatGroup, bound: int = DEFAULT_SUBGROUP_BOUND) -> list[MatGroup]:
    """All subgroups of G, canonically ordered by (order, element keys).

    Enumeration closes unions of cyclic subgroups, which is feasible well past
    the group orders this package targets.
    """
    if G.order > bound:
        raise BoundExceededError(f"subgroup enumeration bound {bound} exceeded")
    if G._subgroups is not None:
        return list(G._subgroups)
    table = G.mult_table()
    e = G.identity_index
    cyclics = set()
    for i in range(G.order):
        cyc = {e}
        k = i
        while k != e:
            cyc.add(k)
            k = table[k][i]
        cyclics.add(frozenset(cyc))
    found = set(cyclics)
    found.add(frozenset({e}))
    work = list(found)
    cyclics = sorted(cyclics, key=sorted)
    while work:
        S = work.pop()
        for C in cyclics:
            if C <= S:
                continue
            J = G.closure_indices(S | C)
            if J not in found:
                found.add(J)
                work.append(J)
    subs = [G.subgroup_from_indices(s) for s in found]
    subs.sort(key=lambda H: (H.order, H.canonical_key()))
    G._subgroups = subs
    return list(subs)


def subgroup_conjugacy_classes(G: MatGroup,
                               bound: int = DEFAULT_SUBGROUP_BOUND) -> list[list[MatGroup]]:
    """Partition of the subgroup list into conjugacy classes.

    Each class is sorted canonically, classes ordered by their first member.
    """
    subs = subgroups(G, bound)
    by_indices = {G.indices_of_subgroup(H): H for H in subs}
    seen = set()
    classes = []
    for H in subs:
        idx = G.indices_of_subgroup(H)
        if idx in seen:
            continue
        orbit = {G.conjugate_indices(g, idx) for g in range(G.order)}
        seen |= orbit
        cls = sorted((by_indices[o] for o in orbit),
                     key=lambda K: (K.order, K.canonical_key()))
        classes.append(cls)
    return classes


def _p_part(m: int, p: int) -> int:
    q = 1
    while m % p == 0:
        m //= p
        q *= p
    return q


def sylow(G: MatGroup, p: int) -> MatGroup:
    """A deterministic Sylow p-subgroup of G.

    One Sylow subgroup is grown through normalizers; since all Sylow
    p-subgroups are conjugate, taking the canonical minimum over the
    conjugates of the result gives the first Sylow subgroup in canonical
    subgroup order without enumerating the full subgroup lattice.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = _p_part(G.order, p)
    if q == 1:
        return G.subgroup_from_indices([G.identity_index])
    table = G.mult_table()
    e = G.identity_index
    orders = G.element_orders()

    def p_power_part(i: int) -> int:
        o = orders[i]
        k = i
        step = o // _p_part(o, p)
        # i ** step has order equal to the p-part of o
        out = e
        for _ in range(step):
            out = table[out][i]
        return out

    seed = next(i for i in range(G.order) if orders[i] % p == 0)
    P = G.closure_indices([p_power_part(seed)])
    while len(P) < q:
        normalizer = [g for g in range(G.order)
                      if G.conjugate_indices(g, P) == P]
        grown = False
        for h in normalizer:
            if h in P:
                continue
            hp = p_power_part(h)
            if hp in P:
                continue
            J = G.closure_indices(P | {hp})
            if len(J) == _p_part(len(J), p):
                P = J
                grown = True
                break
        if not grown:  # cannot happen for a correct table
            raise AssertionError("Sylow growth stalled")
    conjugates = {G.conjugate_indices(g, P) for g in range(G.order)}
    best = min((G.subgroup_from_indices(c) for c in conjugates),
               key=lambda H: H.canonical_key())
    return best


def subgroup_structure(G: MatGroup, H: MatGroup) -> tuple[MatGroup, MatGroup, int]:
    """Normalizer, centralizer, and the index [N_G(H) : C_G(H)]."""
    if not G.contains_subgroup(H):
        raise ValueError("H is not a subgroup of G")
    table = G.mult_table()
    hidx = sorted(G.indices_of_subgroup(H))
    hset = frozenset(hidx)
    normalizer = [g for g in range(G.order) if G.conjugate_indices(g, hset) == hset]
    centralizer = [g for g in range(G.order)
                   if all(table[g][h] == table[h][g] for h in hidx)]
    N = G.subgroup_from_indices(normalizer)
    C = G.subgroup_from_indices(centralizer)
    return N, C, N.order // C.order


def op_core(G: MatGroup, p: int) -> MatGroup:
    """The smallest normal subgroup with p-group quotient.

    It is generated by the elements of order prime to p; the p-power index is
    re-checked after closure.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    orders = G.element_orders()
    seeds = [i for i in range(G.order) if orders[i] % p != 0]
    core = G.closure_indices(seeds)
    quotient = G.order // len(core)
    assert quotient == _p_part(quotient, p), "core index is not a p-power"
    return G.subgroup_from_indices(core)


def element_order(g: np.ndarray, max_order: int = DEFAULT_MAX_ORDER) -> int:
    mat = intmat(g)
    n = mat.shape[0]
    ident = identity_matrix(n)
    power = mat
    for o in range(1, max_order + 1):
        if mat_key(power) == mat_key(ident):
            return o
        if any(abs(int(x)) > _ENTRY_GUARD for x in power.flat):
            raise BoundExceededError("entry growth certifies infinite order")
        power = power @ mat
    raise BoundExceededError(f"element order exceeds {max_order}")


def classify_element(g, max_order: int = DEFAULT_MAX_ORDER) -> ElementProfile:
    """Order and rank(g - 1) of a finite-order unimodular matrix."""
    mat = intmat(g)
    if not is_unimodular(mat):
        raise NonUnimodularError("element has |det| != 1")
    n = mat.shape[0]
    order = element_order(mat, max_order)
    diff = [[int(mat[i, j]) - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    drop = rank(intmat(diff))
    return ElementProfile(order, drop, drop <= 1, drop <= 2)


def is_fixed_point_free(H: MatGroup) -> bool:
    """True when no nonidentity element fixes a nonzero lattice vector."""
    e = H.identity_index
    for i, h in enumerate(H.elements):
        if i == e:
            continue
        if fixed_lattice([h]).rank != 0:
            return False
    return True
