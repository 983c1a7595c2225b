"""Sparse Laurent polynomials over F_p with a matrix-group action on monomials.

A polynomial is a finite map from exponent vectors in Z^n to nonzero
coefficients in F_p.  A unimodular matrix g acts by sending the monomial with
exponent a to the monomial with exponent g a; the action permutes monomials,
so orbit sums of distinct orbits have disjoint supports and span the
invariants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import BoundExceededError
from .intlinalg import intmat, is_unimodular
from .fparith import nullspace_fp, rank_fp
from .matgroup import MatGroup, generate


class LaurentPoly:
    """Finitely supported map Z^n -> F_p, no stored zero coefficients."""

    __slots__ = ("n", "p", "terms")

    def __init__(self, n: int, p: int, terms=None):
        self.n = n
        self.p = p
        clean: dict[tuple[int, ...], int] = {}
        for expo, coeff in (terms or {}).items():
            e = tuple(int(x) for x in expo)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {n}")
            c = int(coeff) % p
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def zero(cls, n: int, p: int) -> "LaurentPoly":
        return cls(n, p)

    @classmethod
    def one(cls, n: int, p: int) -> "LaurentPoly":
        return cls(n, p, {(0,) * n: 1})

    @classmethod
    def monomial(cls, n: int, p: int, exponents, coeff: int = 1) -> "LaurentPoly":
        return cls(n, p, {tuple(exponents): coeff})

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if self.n != other.n or self.p != other.p:
            raise ValueError("polynomials over different rings")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = (out.get(e, 0) + c) % self.p
        return LaurentPoly(self.n, self.p, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = (out.get(e, 0) - c) % self.p
        return LaurentPoly(self.n, self.p, out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % self.p
        return LaurentPoly(self.n, self.p, out)

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self.n, self.p, {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, LaurentPoly) and self.n == other.n
                and self.p == other.p and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.p, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in self.support():
            c = self.terms[e]
            mono = "*".join(f"X{i}^{v}" for i, v in enumerate(e) if v) or "1"
            bits.append(mono if c == 1 and mono != "1" else f"{c}*{mono}" if mono != "1" else str(c))
        return " + ".join(bits)


def _matrix_rows(g) -> list[list[int]]:
    mat = intmat(g)
    if not is_unimodular(mat):
        raise ValueError("action matrices must be unimodular")
    return [[int(x) for x in row] for row in mat.tolist()]


def _apply_rows(rows: list[list[int]], pt: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(r[j] * pt[j] for j in range(len(pt))) for r in rows)


def act(g, f: LaurentPoly) -> LaurentPoly:
    """The ring automorphism sending the monomial at a to the monomial at g a."""
    rows = _matrix_rows(g)
    if len(rows) != f.n:
        raise ValueError(f"matrix is {len(rows)}x{len(rows)}, polynomial lives in rank {f.n}")
    return LaurentPoly(f.n, f.p, {_apply_rows(rows, e): c for e, c in f.terms.items()})


def orbit_sum(G: MatGroup, a, p: int) -> LaurentPoly:
    """Sum of the distinct monomials in the orbit of the exponent a."""
    pt = tuple(int(x) for x in a)
    if len(pt) != G.n:
        raise ValueError("exponent vector has wrong length")
    orbit = {_apply_rows([[int(x) for x in row] for row in el.tolist()], pt)
             for el in G.elements}
    return LaurentPoly(G.n, p, {e: 1 for e in orbit})


def is_invariant(f: LaurentPoly, G: MatGroup) -> bool:
    gens = G.generators or list(G.elements)
    return all(act(g, f) == f for g in gens)


def _group_rows(G: MatGroup) -> list[list[list[int]]]:
    return [[[int(x) for x in row] for row in el.tolist()] for el in G.elements]


def _ball(n: int, radius: int):
    return itertools.product(range(-radius, radius + 1), repeat=n)


def _norm(pt: tuple[int, ...]) -> int:
    return max((abs(x) for x in pt), default=0)


def invariant_dim_in_ball(G: MatGroup, p: int, B: int,
                          norm_guard: int | None = None) -> tuple[int, int]:
    """Dimension of the invariants supported on the orbit closure of a box.

    Let S be the G-closure of { a : |a|_inf <= B }.  The orbit sums of the
    orbits in S are a basis of the invariants supported on S, so the
    dimension equals the orbit count; it is recomputed independently by the
    averaged fixed-point count over the group and both counts are asserted
    equal before returning the pair.
    """
    guard = 8 * B if norm_guard is None else norm_guard
    rows = _group_rows(G)
    visited: set[tuple[int, ...]] = set()
    orbit_count = 0
    for pt in _ball(G.n, B):
        if pt in visited:
            continue
        orbit = {_apply_rows(r, pt) for r in rows}
        for q in orbit:
            if _norm(q) > guard:
                raise BoundExceededError(
                    f"orbit point {q} escapes the norm guard {guard}")
        visited |= orbit
        orbit_count += 1
    fixed_total = 0
    for r in rows:
        fixed_total += sum(1 for s in visited if _apply_rows(r, s) == s)
    assert fixed_total % G.order == 0
    burnside = fixed_total // G.order
    assert orbit_count == burnside, (orbit_count, burnside)
    return orbit_count, burnside


# ---------------------------------------------------------------------------
# decomposition of the order-2 sign-and-swap invariants over the Klein-four
# invariant ring, in characteristic 2

_FLIP_SWAP = ((-1, 0, 0), (0, 0, 1), (0, 1, 0))
_FLIP_FIRST = ((-1, 0, 0), (0, 1, 0), (0, 0, 1))
# the invariant monomial pair X0 X1 + X0^-1 X2, stable under the flip-swap
_TWIST_EXPONENTS = ((1, 1, 0), (-1, 0, 1))


@dataclass(frozen=True)
class BallDecomposition:
    """Dimension bookkeeping for one truncation ball.

    dim_invariants: invariants of the order-2 group inside the ball;
    dim_base: invariants of the Klein four overgroup inside the ball;
    dim_twisted: the part of (twist monomial) * (overgroup invariants) that
    lands inside the ball.  ``holds`` records dim_invariants ==
    dim_base + dim_twisted with the sum direct.
    """

    ball: int
    dim_invariants: int
    dim_base: int
    dim_twisted: int
    is_direct_sum: bool
    holds: bool


def _orbits_within(G: MatGroup, radius: int) -> list[list[tuple[int, ...]]]:
    rows = _group_rows(G)
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for pt in _ball(G.n, radius):
        if pt in seen:
            continue
        orbit = {_apply_rows(r, pt) for r in rows}
        seen |= orbit
        if all(_norm(q) <= radius for q in orbit):
            orbits.append(sorted(orbit))
    return orbits


def check_g1_decomposition(p: int, B: int) -> BallDecomposition:
    """Verify, inside one truncation ball, that the invariants of the order-2
    sign-and-swap action split as (Klein-four invariants) plus the twist
    monomial times Klein-four invariants, as a direct sum over F_2.

    Only characteristic 2 is supported; the split is specific to it.
    """
    if p != 2:
        raise ValueError("decomposition check is stated for characteristic 2 only")
    group = generate([_FLIP_SWAP])
    overgroup = generate([_FLIP_SWAP, _FLIP_FIRST])
    twist = LaurentPoly(3, 2, {e: 1 for e in _TWIST_EXPONENTS})

    dim_invariants = len(_orbits_within(group, B))
    base_orbits = _orbits_within(overgroup, B)
    dim_base = len(base_orbits)

    # products of the twist with overgroup orbit sums from a margin-1 ball;
    # any invariant whose twist-product stays inside ball B is supported in
    # ball B (extreme-exponent argument), so the margin is already generous
    source_orbits = _orbits_within(overgroup, B + 1)
    big = B + 2  # twist shifts exponents by at most 1
    mono_index = {pt: i for i, pt in enumerate(_ball(3, big))}
    inside = [i for pt, i in mono_index.items() if _norm(pt) <= B]
    outside = [i for pt, i in mono_index.items() if _norm(pt) > B]

    prod_rows = np.zeros((len(source_orbits), len(mono_index)), dtype=np.int64)
    for k, orbit in enumerate(source_orbits):
        s = LaurentPoly(3, 2, {e: 1 for e in orbit})
        prod = twist * s
        for e, c in prod.terms.items():
            prod_rows[k, mono_index[e]] = c

    rk_all = rank_fp(prod_rows, 2)
    rk_out = rank_fp(prod_rows[:, outside], 2)
    dim_twisted = rk_all - rk_out

    # explicit basis of the twisted part that lies inside the ball
    combos = nullspace_fp(prod_rows[:, outside].T, 2)
    twisted_vecs = (combos @ prod_rows[:, inside]) % 2 if combos.size else \
        np.zeros((0, len(inside)), dtype=np.int64)
    assert rank_fp(twisted_vecs, 2) == dim_twisted

    inside_pos = {mono_index_key: col for col, mono_index_key in enumerate(inside)}
    base_vecs = np.zeros((dim_base, len(inside)), dtype=np.int64)
    for k, orbit in enumerate(base_orbits):
        for e in orbit:
            base_vecs[k, inside_pos[mono_index[e]]] = 1

    stacked = np.vstack([base_vecs, twisted_vecs]) if dim_twisted else base_vecs
    is_direct = rank_fp(stacked, 2) == dim_base + dim_twisted
    holds = is_direct and dim_invariants == dim_base + dim_twisted
    return BallDecomposition(B, dim_invariants, dim_base, dim_twisted, is_direct, holds)
