"""Exact integer linear algebra: Smith/Hermite normal forms and sublattices of Z^n.

Matrices are numpy arrays with ``dtype=object`` holding Python ints, so all
arithmetic is arbitrary precision; Smith-form intermediates can grow far past
any fixed width.  The hot loops work on plain lists of lists, which is faster
than per-element object-array indexing.

Conventions:

* Smith normal form: ``snf(M) -> (S, U, V)`` with ``U @ M @ V == S``,
  ``S`` diagonal with nonnegative entries satisfying d1 | d2 | ..., and
  ``U``, ``V`` unimodular.
* Sublattice bases are kept in *column* Hermite normal form: pivot rows
  strictly increase down the matrix, pivots are positive, and within a pivot
  row every entry left of the pivot lies in ``[0, pivot)``.  One canonical
  form per lattice, so equality is entry-wise comparison.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .errors import BoundExceededError, NonUnimodularError

# Quotient enumeration inside `covers` visits one representative per coset;
# refuse lattices of larger index rather than looping for minutes.
MAX_QUOTIENT_ENUMERATION = 1_000_000

# Shell-by-shell witness searches are dense (they always succeed at a small
# radius); this guard only trips on internal errors.
_MAX_SEARCH_RADIUS = 64


# ---------------------------------------------------------------------------
# matrix construction and basic helpers


def intmat(data) -> np.ndarray:
    """Build a validated integer matrix (2-d numpy array of Python ints).

    Accepts nested sequences or an existing array.  Every entry must be an
    integer; rows must have equal length.
    """
    if isinstance(data, np.ndarray) and data.dtype == object and data.ndim == 2:
        rows = data.tolist()
    else:
        rows = [list(r) for r in data]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows in matrix data")
    else:
        width = 0
    out = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise ValueError(f"non-integer entry {x!r} at ({i}, {j})")
            out[i, j] = int(x)
    out.setflags(write=False)
    return out


def identity_matrix(n: int) -> np.ndarray:
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = 1 if i == j else 0
    out.setflags(write=False)
    return out


def zero_matrix(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out[...] = 0
    out.setflags(write=False)
    return out


def mat_key(M: np.ndarray) -> tuple:
    """Hashable row-major key; also the canonical comparison order."""
    return (M.shape[0], M.shape[1]) + tuple(int(x) for x in M.flat)


def mats_equal(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and all(int(x) == int(y) for x, y in zip(A.flat, B.flat))


def _to_lists(M) -> list[list[int]]:
    if isinstance(M, np.ndarray):
        return [[int(x) for x in row] for row in M.tolist()]
    return [[int(x) for x in row] for row in M]


def _from_lists(rows: list[list[int]], width: int | None = None) -> np.ndarray:
    if rows:
        return intmat(rows)
    return zero_matrix(0, width or 0)


def _eye_lists(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# determinants and inverses


def det(M: np.ndarray) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = _to_lists(M)
    n = len(A)
    if n == 0:
        return 1
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def is_unimodular(M: np.ndarray) -> bool:
    return M.shape[0] == M.shape[1] and abs(det(M)) == 1


def unimodular_inverse(M: np.ndarray) -> np.ndarray:
    """Exact inverse of an integer matrix with integer inverse (|det| = 1)."""
    n = M.shape[0]
    if M.shape[1] != n:
        raise ValueError("inverse of a non-square matrix")
    aug = [[Fraction(int(M[i, j])) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise NonUnimodularError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = [[x for x in row[n:]] for row in aug]
    if any(x.denominator != 1 for row in out for x in row):
        raise NonUnimodularError("matrix has no integer inverse")
    return intmat([[int(x) for x in row] for row in out])


# ---------------------------------------------------------------------------
# Smith normal form


def _row_sub(A: list[list[int]], i: int, t: int, q: int) -> None:
    Ai, At = A[i], A[t]
    for k in range(len(Ai)):
        Ai[k] -= q * At[k]


def _col_sub(A: list[list[int]], j: int, t: int, q: int) -> None:
    for row in A:
        row[j] -= q * row[t]


def _swap_cols(A: list[list[int]], a: int, b: int) -> None:
    for row in A:
        row[a], row[b] = row[b], row[a]


def snf(M) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Smith normal form.

    Returns ``(S, U, V)`` with ``U @ M @ V == S``, ``U`` and ``V`` unimodular,
    and ``S`` diagonal with nonnegative diagonal satisfying d1 | d2 | ...
    """
    Mm = M if isinstance(M, np.ndarray) and M.dtype == object else intmat(M)
    m, n = Mm.shape
    A = _to_lists(Mm)
    U = _eye_lists(m)
    V = _eye_lists(n)
    for t in range(min(m, n)):
        # move a smallest-magnitude nonzero of the trailing block to (t, t)
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                v = Ai[j]
                if v != 0 and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            A[t], A[bi] = A[bi], A[t]
            U[t], U[bi] = U[bi], U[t]
        if bj != t:
            _swap_cols(A, t, bj)
            _swap_cols(V, t, bj)
        while True:
            piv = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // piv
                    if q:
                        _row_sub(A, i, t, q)
                        _row_sub(U, i, t, q)
            rem = [i for i in range(t + 1, m) if A[i][t]]
            if rem:
                i = min(rem, key=lambda r: abs(A[r][t]))
                A[t], A[i] = A[i], A[t]
                U[t], U[i] = U[i], U[t]
                continue
            piv = A[t][t]
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // piv
                    if q:
                        _col_sub(A, j, t, q)
                        _col_sub(V, j, t, q)
            rem = [j for j in range(t + 1, n) if A[t][j]]
            if rem:
                j = min(rem, key=lambda c: abs(A[t][c]))
                _swap_cols(A, t, j)
                _swap_cols(V, t, j)
                continue
            # cross is clear; force the divisibility chain
            piv = A[t][t]
            bad = None
            for i in range(t + 1, m):
                Ai = A[i]
                if any(Ai[j] % piv for j in range(t + 1, n)):
                    bad = i
                    break
            if bad is None:
                break
            _row_sub(A, t, bad, -1)
            _row_sub(U, t, bad, -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    S = _from_lists(A, n) if m else zero_matrix(0, n)
    return S, _from_lists(U, m) if m else zero_matrix(0, 0), _from_lists(V, n)


def diagonal_of(S: np.ndarray) -> list[int]:
    return [int(S[i, i]) for i in range(min(S.shape))]


def rank(M) -> int:
    """Integer rank: the number of nonzero diagonal entries of the Smith form."""
    S, _, _ = snf(M)
    return sum(1 for d in diagonal_of(S) if d != 0)


def kernel_basis(M) -> np.ndarray:
    """Basis of {x in Z^cols : M x = 0}, in canonical column Hermite form.

    The kernel of an integer matrix is saturated (Z^cols / ker embeds in the
    image, which is torsion free), so the returned basis spans a saturated
    sublattice.
    """
    Mm = intmat(M)
    m, n = Mm.shape
    S, _, V = snf(Mm)
    diag = diagonal_of(S)
    cols = [j for j in range(n) if j >= len(diag) or diag[j] == 0]
    if not cols:
        return zero_matrix(n, 0)
    return hnf_columns(V[:, cols])


def hnf_columns(M) -> np.ndarray:
    """Canonical column Hermite form of the lattice spanned by the columns.

    Zero columns are dropped; the result has one column per basis vector,
    pivot rows strictly increasing, positive pivots, and entries left of each
    pivot reduced into ``[0, pivot)``.
    """
    Mm = intmat(M) if not (isinstance(M, np.ndarray) and M.dtype == object) else M
    n, m = Mm.shape
    cols = [[int(Mm[i, j]) for i in range(n)] for j in range(m)]
    r = 0
    for i in range(n):
        while True:
            nz = [j for j in range(r, len(cols)) if cols[j][i] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(cols[j][i]))
            cols[r], cols[j0] = cols[j0], cols[r]
            done = True
            for j in range(r + 1, len(cols)):
                if cols[j][i]:
                    q = cols[j][i] // cols[r][i]
                    if q:
                        cj, cr = cols[j], cols[r]
                        for k in range(n):
                            cj[k] -= q * cr[k]
                    if cols[j][i]:
                        done = False
            if done:
                break
        if r < len(cols) and cols[r][i] != 0:
            if cols[r][i] < 0:
                cols[r] = [-x for x in cols[r]]
            piv = cols[r][i]
            for k in range(r):
                q = cols[k][i] // piv
                if q:
                    ck, cr = cols[k], cols[r]
                    for t in range(n):
                        ck[t] -= q * cr[t]
            r += 1
    out = np.empty((n, r), dtype=object)
    for j in range(r):
        for i in range(n):
            out[i, j] = cols[j][i]
    out.setflags(write=False)
    return out


# ---------------------------------------------------------------------------
# sublattices


class Sublattice:
    """A subgroup of Z^n presented by a canonical column-Hermite basis.

    ``saturated`` records whether Z^n / L is torsion free; it is computed at
    construction from the invariant factors of the basis.
    """

    __slots__ = ("ambient_rank", "basis", "saturated", "_snf")

    def __init__(self, ambient_rank: int, basis: np.ndarray, saturated: bool):
        self.ambient_rank = ambient_rank
        self.basis = basis
        self.saturated = saturated
        self._snf = None

    @classmethod
    def from_columns(cls, ambient_rank: int, columns) -> "Sublattice":
        cols = intmat(columns)
        if cols.shape[0] != ambient_rank:
            raise ValueError(
                f"columns live in Z^{cols.shape[0]}, expected Z^{ambient_rank}")
        basis = hnf_columns(cols)
        S, _, _ = snf(basis) if basis.shape[1] else (zero_matrix(0, 0), None, None)
        saturated = all(d == 1 for d in diagonal_of(S)) if basis.shape[1] else True
        return cls(ambient_rank, basis, saturated)

    @classmethod
    def zero(cls, ambient_rank: int) -> "Sublattice":
        return cls(ambient_rank, zero_matrix(ambient_rank, 0), True)

    @classmethod
    def full(cls, ambient_rank: int) -> "Sublattice":
        return cls(ambient_rank, identity_matrix(ambient_rank), True)

    @property
    def rank(self) -> int:
        return self.basis.shape[1]

    def _basis_snf(self):
        if self._snf is None:
            self._snf = snf(self.basis)
        return self._snf

    def coordinates(self, v) -> list[int] | None:
        """x with basis @ x = v, or None when v is outside the lattice."""
        vec = [int(x) for x in v]
        if len(vec) != self.ambient_rank:
            raise ValueError("vector has wrong length")
        r = self.rank
        if r == 0:
            return [] if all(x == 0 for x in vec) else None
        S, U, V = self._basis_snf()
        w = [sum(int(U[i, k]) * vec[k] for k in range(self.ambient_rank))
             for i in range(self.ambient_rank)]
        diag = diagonal_of(S)
        y = []
        for i in range(self.ambient_rank):
            d = diag[i] if i < len(diag) else 0
            if d == 0:
                if w[i] != 0:
                    return None
            else:
                if w[i] % d:
                    return None
                y.append(w[i] // d)
        y += [0] * (r - len(y))
        return [sum(int(V[i, k]) * y[k] for k in range(r)) for i in range(r)]

    def contains(self, v) -> bool:
        return self.coordinates(v) is not None

    def point(self, coords) -> tuple[int, ...]:
        """The ambient vector basis @ coords."""
        cs = [int(c) for c in coords]
        if len(cs) != self.rank:
            raise ValueError("coordinate vector has wrong length")
        return tuple(
            sum(int(self.basis[i, j]) * cs[j] for j in range(self.rank))
            for i in range(self.ambient_rank))

    def is_subset_of(self, other: "Sublattice") -> bool:
        if self.ambient_rank != other.ambient_rank:
            return False
        return all(other.contains(self.basis[:, j]) for j in range(self.rank))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Sublattice)
                and self.ambient_rank == other.ambient_rank
                and mats_equal(self.basis, other.basis))

    def __hash__(self):
        return hash((self.ambient_rank, mat_key(self.basis)))

    def __repr__(self):
        cols = [tuple(int(x) for x in self.basis[:, j]) for j in range(self.rank)]
        return f"Sublattice(Z^{self.ambient_rank}, basis={cols}, saturated={self.saturated})"


def fixed_lattice(elems) -> Sublattice:
    """The saturated sublattice of vectors fixed by every matrix in ``elems``.

    This is the kernel of the stacked maps (h - 1), so it depends only on the
    group the elements generate.
    """
    mats = [intmat(h) for h in elems]
    if not mats:
        raise ValueError("need at least one matrix to infer the ambient rank")
    n = mats[0].shape[0]
    for h in mats:
        if h.shape != (n, n):
            raise ValueError("matrices of mixed dimensions")
    stacked = []
    for h in mats:
        for i in range(n):
            stacked.append([int(h[i, j]) - (1 if i == j else 0) for j in range(n)])
    basis = kernel_basis(intmat(stacked))
    return Sublattice(n, basis, True)


def moved_lattice(elems) -> Sublattice:
    """The sublattice generated by the columns of (h - 1) for h in ``elems``.

    Unlike the fixed lattice this one is in general *not* saturated
    (inversion on Z^2 moves by 2Z^2).
    """
    mats = [intmat(h) for h in elems]
    if not mats:
        raise ValueError("need at least one matrix to infer the ambient rank")
    n = mats[0].shape[0]
    for h in mats:
        if h.shape != (n, n):
            raise ValueError("matrices of mixed dimensions")
    cols = [[int(h[i, j]) - (1 if i == j else 0) for h in mats for j in range(n)]
            for i in range(n)]
    return Sublattice.from_columns(n, cols)


def quotient_invariants(L: Sublattice) -> tuple[int, list[int]]:
    """Invariant factors of Z^n / L: (free rank, nontrivial torsion factors)."""
    if L.rank == 0:
        return L.ambient_rank, []
    S, _, _ = snf(L.basis)
    diag = diagonal_of(S)
    return L.ambient_rank - L.rank, [d for d in diag if d > 1]


def intersect(L1: Sublattice, L2: Sublattice) -> Sublattice:
    if L1.ambient_rank != L2.ambient_rank:
        raise ValueError("lattices in different ambient spaces")
    n = L1.ambient_rank
    r1, r2 = L1.rank, L2.rank
    if r1 == 0 or r2 == 0:
        return Sublattice.zero(n)
    stacked = np.empty((n, r1 + r2), dtype=object)
    stacked[:, :r1] = L1.basis
    for i in range(n):
        for j in range(r2):
            stacked[i, r1 + j] = -int(L2.basis[i, j])
    K = kernel_basis(stacked)
    if K.shape[1] == 0:
        return Sublattice.zero(n)
    cols = L1.basis @ K[:r1, :]
    return Sublattice.from_columns(n, cols)


def _coordinate_shells(r: int):
    """Yield coordinate vectors of Z^r grouped by increasing infinity norm."""
    if r == 0:
        yield [()]
        return
    for radius in itertools.count():
        shell = [c for c in itertools.product(range(-radius, radius + 1), repeat=r)
                 if max((abs(x) for x in c), default=0) == radius]
        yield shell
        if radius >= _MAX_SEARCH_RADIUS:
            raise BoundExceededError("witness search radius exceeded")


def _best_witness(candidates: list[tuple[int, ...]]) -> tuple[int, ...]:
    # minimal infinity norm, then fewest nonzero coordinates, then the
    # lexicographically greatest vector; fully deterministic
    def shape(v):
        return (max((abs(x) for x in v), default=0), sum(1 for x in v if x))

    m = min(shape(v) for v in candidates)
    return max(v for v in candidates if shape(v) == m)


def covers(ambient: Sublattice, parts) -> tuple[bool, tuple[int, ...] | None]:
    """Decide whether the set union of ``parts`` equals ``ambient``.

    Parts of rank below the ambient rank are discarded for the covering
    decision (a finite union of zero-density subgroups cannot complete a
    cover), then the remaining full-rank parts are tested exhaustively on the
    finite quotient modulo their intersection.  When uncovered, the returned
    witness is a point of ``ambient`` lying in no part at all, chosen with
    minimal infinity norm among the candidates inspected.
    """
    parts = list(parts)
    for P in parts:
        if not isinstance(P, Sublattice) or not P.is_subset_of(ambient):
            raise ValueError("every part must be a sublattice of the ambient lattice")
    ra = ambient.rank
    full = [P for P in parts if P.rank == ra]
    thin = [P for P in parts if P.rank < ra]
    if any(P == ambient for P in full):
        return True, None

    def valid(point: tuple[int, ...]) -> bool:
        return not any(P.contains(point) for P in parts)

    if not full:
        # no full-rank part: never covered; search outward for a clean point
        for shell in _coordinate_shells(ra):
            found = [p for p in (ambient.point(c) for c in shell) if valid(p)]
            if found:
                return False, _best_witness(found)
        raise AssertionError("unreachable")

    K = full[0]
    for P in full[1:]:
        K = intersect(K, P)
    # coordinates of K inside the ambient basis; lower triangular with
    # positive diagonal since K has full rank
    coord_cols = [ambient.coordinates(K.basis[:, j]) for j in range(K.rank)]
    H = hnf_columns(intmat(coord_cols).T) if ra else zero_matrix(0, 0)
    diag = [int(H[i, i]) for i in range(ra)]
    index = 1
    for d in diag:
        index *= d
    if index > MAX_QUOTIENT_ENUMERATION:
        raise BoundExceededError(
            f"quotient of index {index} is too large to enumerate")

    uncovered = []
    for c in itertools.product(*(range(d) for d in diag)):
        point = ambient.point(c)
        if not any(P.contains(point) for P in full):
            uncovered.append(point)
    if not uncovered:
        return True, None

    # perturb uncovered coset representatives by K to dodge the thin parts
    kcols = [tuple(int(K.basis[i, j]) for i in range(K.ambient_rank))
             for j in range(K.rank)]
    for shell in _coordinate_shells(K.rank):
        found = []
        for c in shell:
            for rep in uncovered:
                cand = tuple(rep[i] + sum(k * kcols[j][i] for j, k in enumerate(c))
                             for i in range(ambient.ambient_rank))
                if valid(cand):
                    found.append(cand)
        if found:
            return False, _best_witness(found)
    raise AssertionError("unreachable")
