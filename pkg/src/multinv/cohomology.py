"""Mod-p group cohomology of small finite groups via truncated free resolutions.

A free resolution of the trivial module over F_p[G] is built degree by
degree: the kernel of each boundary map is computed as an F_p subspace, a
short list of module generators is extracted (preferring generators outside
span + I*ker, where I is the augmentation ideal, which yields the minimal
resolution whenever G is a p-group), and the next free module maps onto them.

Cohomology dimensions are read from the induced complex Hom(F_*, F_p): the
differential of that complex is the entry-wise augmentation of the boundary
matrices, so dim H^r is computed from the free ranks and the F_p ranks of two
augmented boundaries.  For p-groups the augmented boundaries vanish and the
dimensions coincide with the free ranks; for groups that are not p-groups a
free resolution with that property does not exist (projective covers are not
free), and the Hom complex is the honest route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BoundExceededError
from .fparith import SpanFp, nullspace_fp, rank_fp
from .matgroup import GroupTable, MatGroup, is_prime, subgroup_structure, sylow

INFINITY = math.inf

DEFAULT_MAX_GROUP_ORDER = 48
DEFAULT_MAX_DEPTH = 10
DEFAULT_MU_SEARCH_LIMIT = 9


@dataclass(frozen=True)
class MuValue:
    """Least positive degree with nonvanishing cohomology.

    ``value`` is that degree, or INFINITY exactly when p does not divide the
    group order, or ``search_limit + 1`` as an inexact marker meaning the true
    value exceeds the searched range.
    """

    value: int | float
    exact: bool

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITY


def _as_table(group) -> GroupTable:
    if isinstance(group, GroupTable):
        return group
    if isinstance(group, MatGroup):
        return group.to_table()
    raise TypeError("expected a MatGroup or a GroupTable")


class FpResolution:
    """Truncated free resolution of the trivial module over F_p[G].

    ``ranks[r]`` is the rank of the free module in homological degree r;
    ``boundaries[r-1]`` is the full F_p matrix of the boundary map from degree
    r to degree r-1 in the group-element basis; ``generator_images[r-1]``
    holds only the columns for the module generators (the images of the free
    basis before translation by group elements).
    """

    def __init__(self, p: int, table: GroupTable, ranks: list[int],
                 boundaries: list[np.ndarray], generator_images: list[np.ndarray]):
        self.p = p
        self.group_order = table.order
        self.table = table
        self.ranks = ranks
        self.boundaries = boundaries
        self.generator_images = generator_images

    @property
    def depth(self) -> int:
        return len(self.ranks) - 1

    def augmented_boundary(self, r: int) -> np.ndarray:
        """Entry-wise augmentation of the degree-r boundary map.

        Shape (ranks[r-1], ranks[r]); entry (j, i) is the coefficient sum of
        the j-th module-entry of the i-th generator image.
        """
        if not 1 <= r <= self.depth:
            raise ValueError(f"no boundary in degree {r}")
        gi = self.generator_images[r - 1]
        m = self.ranks[r - 1]
        t = self.ranks[r]
        out = np.zeros((m, t), dtype=np.int64)
        if t and m:
            n = self.group_order
            for i in range(t):
                out[:, i] = gi[:, i].reshape(m, n).sum(axis=1) % self.p
        return out

    def cohomology_dim(self, r: int) -> int:
        """dim H^r(G, F_p); requires depth >= r + 1."""
        if r < 0:
            raise ValueError("negative degree")
        if self.depth < r + 1:
            raise ValueError(f"resolution depth {self.depth} too shallow for H^{r}")
        rk_out = rank_fp(self.augmented_boundary(r + 1), self.p)
        rk_in = rank_fp(self.augmented_boundary(r), self.p) if r >= 1 else 0
        return self.ranks[r] - rk_out - rk_in

    def is_minimal(self) -> bool:
        """All boundary entries lie in the augmentation ideal."""
        return all(not self.augmented_boundary(r).any() for r in range(1, self.depth + 1))

    def check_complex(self) -> None:
        """Assert that consecutive boundaries compose to zero."""
        for r in range(1, self.depth):
            prod = (self.boundaries[r - 1] @ self.boundaries[r]) % self.p
            assert not prod.any(), f"d_{r} . d_{r + 1} != 0"


def _module_generators(kernel_rows: np.ndarray, perms: list[np.ndarray],
                       blocks: int, p: int) -> list[np.ndarray]:
    """Pick a short list of module generators of the kernel.

    Candidates outside span + I*kernel are preferred; for p-groups the
    augmentation ideal is the radical, so this choice is exactly minimal.
    """
    k, width = kernel_rows.shape
    if k == 0:
        return []
    order = len(perms)

    def translate(g: int, vec: np.ndarray) -> np.ndarray:
        out = np.empty_like(vec)
        out.reshape(blocks, order)[:, perms[g]] = vec.reshape(blocks, order)
        return out

    span = SpanFp(p, width)
    preferred = SpanFp(p, width)  # tracks span + I*kernel
    for row in kernel_rows:
        for g in range(order):
            preferred.add((translate(g, row) - row) % p)
    gens: list[np.ndarray] = []
    while True:
        remaining = [row for row in kernel_rows if not span.contains(row)]
        if not remaining:
            return gens
        pick = next((row for row in remaining if not preferred.contains(row)),
                    remaining[0])
        gens.append(pick)
        for g in range(order):
            w = translate(g, pick)
            span.add(w)
            preferred.add(w)


def resolution(group, p: int, depth: int,
               max_group_order: int = DEFAULT_MAX_GROUP_ORDER,
               max_depth: int = DEFAULT_MAX_DEPTH,
               _reverse_pivots: bool = False) -> FpResolution:
    """Free resolution of the trivial F_p[G]-module, truncated at ``depth``.

    ``_reverse_pivots`` flips the pivoting order of the kernel computations;
    cohomology dimensions are independent of it.
    """
    table = _as_table(group)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if table.order > max_group_order:
        raise BoundExceededError(
            f"group order {table.order} exceeds bound {max_group_order}")
    if depth > max_depth:
        raise BoundExceededError(f"depth {depth} exceeds bound {max_depth}")
    n = table.order
    perms = [np.array(table.mult[g], dtype=np.intp) for g in range(n)]

    def order_for(width: int):
        return list(range(width - 1, -1, -1)) if _reverse_pivots else None

    ranks = [1]
    boundaries: list[np.ndarray] = []
    generator_images: list[np.ndarray] = []
    # degree 0: F_0 = F_p[G] with the augmentation onto the trivial module
    augmentation = np.ones((1, n), dtype=np.int64)
    kernel = nullspace_fp(augmentation, p, order_for(n))
    blocks = 1
    for r in range(1, depth + 1):
        gens = _module_generators(kernel, perms, blocks, p)
        t = len(gens)
        ranks.append(t)
        width = blocks * n
        gi = np.zeros((width, t), dtype=np.int64)
        big = np.zeros((width, t * n), dtype=np.int64)
        for i, v in enumerate(gens):
            gi[:, i] = v
            for g in range(n):
                col = np.empty(width, dtype=np.int64)
                col.reshape(blocks, n)[:, perms[g]] = v.reshape(blocks, n)
                big[:, i * n + g] = col
        boundaries.append(big)
        generator_images.append(gi)
        if r < depth:
            if t == 0:
                kernel = np.zeros((0, 0), dtype=np.int64)
            else:
                kernel = nullspace_fp(big, p, order_for(t * n))
            blocks = t
    return FpResolution(p, table, ranks, boundaries, generator_images)


def h_dim(group, p: int, r: int,
          max_group_order: int = DEFAULT_MAX_GROUP_ORDER,
          max_depth: int = DEFAULT_MAX_DEPTH) -> int:
    """dim_{F_p} H^r(G, F_p)."""
    res = resolution(group, p, r + 1, max_group_order, max_depth)
    return res.cohomology_dim(r)


def mu_p(group, p: int, search_limit: int = DEFAULT_MU_SEARCH_LIMIT,
         max_group_order: int = DEFAULT_MAX_GROUP_ORDER,
         max_depth: int = DEFAULT_MAX_DEPTH) -> MuValue:
    """inf { r > 0 : H^r(G, F_p) != 0 }.

    Exactly INFINITY when p does not divide |G| (positive-degree cohomology
    of a p'-group vanishes); otherwise the least degree up to
    ``search_limit``, or the inexact marker ``search_limit + 1``.
    """
    table = _as_table(group)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if table.order % p != 0:
        return MuValue(INFINITY, True)
    res = resolution(table, p, search_limit + 1, max_group_order, max_depth)
    for r in range(1, search_limit + 1):
        if res.cohomology_dim(r) != 0:
            return MuValue(r, True)
    return MuValue(search_limit + 1, False)


def mu_p_formula(G: MatGroup, p: int) -> int:
    """Closed form 2*[N_G(P):C_G(P)] - 1, valid when the Sylow subgroup has
    order exactly p."""
    P = sylow(G, p)
    if P.order != p:
        raise ValueError(
            f"Sylow {p}-subgroup has order {P.order}, formula needs order {p}")
    _, _, nc = subgroup_structure(G, P)
    return 2 * nc - 1
