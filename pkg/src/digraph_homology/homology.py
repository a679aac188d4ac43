"""Betti numbers of ordered complexes over a prime field.

The main path computes beta_j = #j-simplices - rank(d_j) - rank(d_{j+1}) with
Gaussian elimination: bitset-packed rows over GF(2), dense numpy elimination
for other primes. betti_oracle recomputes the same numbers from explicit
kernel and image bases using pure-Python row echelon on the transpose; it is
deliberately guarded to desk scale and shares no elimination code with the
main path.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import OrderedComplex
from .errors import GuardExceeded

__all__ = [
    "FieldMatrix",
    "BettiVector",
    "boundary_matrix",
    "betti",
    "betti_oracle",
    "ORACLE_SIMPLEX_GUARD",
]

ORACLE_SIMPLEX_GUARD = 200


def _check_prime(p: int) -> int:
    p = int(p)
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    return p


@dataclass(frozen=True)
class FieldMatrix:
    """Dense matrix with entries reduced modulo a prime."""

    p: int
    data: np.ndarray  # shape (rows, cols), dtype int64, entries in [0, p)

    def __init__(self, p: int, data):
        p = _check_prime(p)
        arr = np.asarray(data, dtype=np.int64) % p
        if arr.ndim != 2:
            raise ValueError("FieldMatrix requires a 2-d array")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "data", arr)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def rank(self) -> int:
        if self.p == 2:
            return rank_gf2(pack_gf2_rows(self.data))
        return rank_mod_p(self.data, self.p)


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers by degree; degrees that were never computed read as 0."""

    by_degree: dict[int, int]

    def __getitem__(self, degree: int) -> int:
        return self.by_degree.get(degree, 0)

    def __eq__(self, other):
        if isinstance(other, BettiVector):
            other = other.by_degree
        return {d: b for d, b in self.by_degree.items() if b} == {
            d: b for d, b in dict(other).items() if b
        }


def pack_gf2_rows(data: np.ndarray) -> list[int]:
    """Pack the rows of a 0/1 (mod 2) matrix into Python integers."""
    bits = (np.asarray(data) % 2).astype(np.uint8)
    if bits.shape[1] == 0:
        return [0] * bits.shape[0]
    packed = np.packbits(bits, axis=1)
    return [int.from_bytes(row.tobytes(), "big") for row in packed]


def rank_gf2(rows: list[int]) -> int:
    """Rank over GF(2) of a matrix given as bitset rows."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            bit = cur.bit_length() - 1
            pivot = pivots.get(bit)
            if pivot is None:
                pivots[bit] = cur
                rank += 1
                break
            cur ^= pivot
    return rank


def rank_mod_p(data: np.ndarray, p: int) -> int:
    """Rank modulo an odd prime via column-major pivoting elimination."""
    a = (np.asarray(data, dtype=np.int64) % p).copy()
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1:, c]
        mask = below != 0
        if mask.any():
            a[r + 1:][mask] = (a[r + 1:][mask] - np.outer(below[mask], a[r])) % p
        r += 1
    return r


def _simplex_index(simplices) -> dict:
    return {s: i for i, s in enumerate(simplices)}


def boundary_matrix(complex_: OrderedComplex, j: int, p: int = 2) -> FieldMatrix:
    """Boundary d_j as a dense matrix: rows are (j-1)-simplices, columns are
    j-simplices, and the column of a tuple carries (-1)^i at the face that
    deletes position i."""
    if j < 1 or j > complex_.max_dim:
        raise ValueError(f"degree {j} outside 1..{complex_.max_dim}")
    p = _check_prime(p)
    rows = complex_.simplices(j - 1)
    cols = complex_.simplices(j)
    index = _simplex_index(rows)
    data = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, simplex in enumerate(cols):
        for i in range(j + 1):
            face = simplex[:i] + simplex[i + 1:]
            data[index[face], c] += -1 if i % 2 else 1
    return FieldMatrix(p, data)


def _boundary_rank(complex_: OrderedComplex, j: int, p: int) -> int:
    """rank(d_j) without materializing a dense matrix on the GF(2) path."""
    if j < 1 or j > complex_.max_dim:
        return 0
    rows = complex_.simplices(j - 1)
    cols = complex_.simplices(j)
    if not rows or not cols:
        return 0
    if p != 2:
        return boundary_matrix(complex_, j, p).rank()
    index = _simplex_index(rows)
    bits = [0] * len(rows)
    for c, simplex in enumerate(cols):
        mask = 1 << c
        for i in range(j + 1):
            face = simplex[:i] + simplex[i + 1:]
            bits[index[face]] ^= mask
    return rank_gf2(bits)


def betti(complex_: OrderedComplex, degrees, p: int = 2) -> BettiVector:
    """Betti numbers beta_j = #j-simplices - rank(d_j) - rank(d_{j+1}).

    d_0 is the zero map. Requires max(degrees) + 1 <= max_dim so that the
    enumeration cap cannot silently hide (j+1)-simplices.
    """
    degrees = sorted(set(int(j) for j in degrees))
    if not degrees:
        return BettiVector({})
    if degrees[0] < 0:
        raise ValueError("degrees must be nonnegative")
    p = _check_prime(p)
    if degrees[-1] + 1 > complex_.max_dim:
        raise ValueError(
            f"betti in degree {degrees[-1]} needs max_dim >= {degrees[-1] + 1}, "
            f"complex has {complex_.max_dim}"
        )
    needed = sorted({j for d in degrees for j in (d, d + 1) if j >= 1})
    ranks = {j: _boundary_rank(complex_, j, p) for j in needed}
    result = {}
    for j in degrees:
        value = len(complex_.simplices(j)) - ranks.get(j, 0) - ranks.get(j + 1, 0)
        if value < 0:
            raise AssertionError(f"negative betti {value} in degree {j}")
        result[j] = value
    return BettiVector(result)


# ---------------------------------------------------------------------------
# Independent oracle: explicit kernel/image bases via row echelon on the
# transpose, pure Python arithmetic.
# ---------------------------------------------------------------------------


def _dense_boundary_rows(complex_: OrderedComplex, j: int, p: int) -> list[list[int]]:
    """d_j as a list of rows (pure Python ints mod p)."""
    rows = complex_.simplices(j - 1)
    cols = complex_.simplices(j)
    index = _simplex_index(rows)
    mat = [[0] * len(cols) for _ in rows]
    for c, simplex in enumerate(cols):
        for i in range(j + 1):
            face = simplex[:i] + simplex[i + 1:]
            mat[index[face]][c] = (mat[index[face]][c] + (-1) ** i) % p
    return mat


def _echelon(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Row echelon form; returns (reduced rows, pivot column per nonzero row)."""
    mat = [row[:] for row in rows]
    pivot_cols: list[int] = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] % p != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % p != 0:
                factor = mat[i][c]
                mat[i] = [(a - factor * b) % p for a, b in zip(mat[i], mat[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivot_cols


def _kernel_basis(mat: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Explicit basis of the null space from the reduced echelon form."""
    reduced, pivot_cols = _echelon(mat, p) if mat else ([], [])
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        vec = [0] * ncols
        vec[f] = 1
        for row, pc in zip(reduced, pivot_cols):
            vec[pc] = (-row[f]) % p
        basis.append(vec)
    return basis


def _transpose(mat: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*mat)] if mat and mat[0] else []


def _mat_vec(mat: list[list[int]], vec: list[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) % p for row in mat]


def betti_oracle(complex_: OrderedComplex, degrees, p: int = 2) -> BettiVector:
    """Recompute Betti numbers as dim ker(d_j) - dim im(d_{j+1}) from explicit
    bases. Image bases come from row echelon on the transposed boundary; every
    kernel basis vector is verified to map to zero. Guarded to small complexes."""
    degrees = sorted(set(int(j) for j in degrees))
    p = _check_prime(p)
    total = sum(complex_.counts())
    if total > ORACLE_SIMPLEX_GUARD:
        raise GuardExceeded(
            f"oracle limited to {ORACLE_SIMPLEX_GUARD} simplices, complex has {total}"
        )
    if degrees and degrees[-1] + 1 > complex_.max_dim:
        raise ValueError("insufficient max_dim for requested degrees")
    result = {}
    for j in degrees:
        n_j = len(complex_.simplices(j))
        if j == 0:
            kernel = [[1 if i == k else 0 for i in range(n_j)] for k in range(n_j)]
            d_j = None
        else:
            d_j = _dense_boundary_rows(complex_, j, p)
            kernel = _kernel_basis(d_j, n_j, p)
            for vec in kernel:
                if any(x % p for x in _mat_vec(d_j, vec, p)):
                    raise AssertionError("kernel basis vector not in kernel")
        if len(complex_.simplices(j + 1)) > 0:
            d_next = _dense_boundary_rows(complex_, j + 1, p)
            image_rows, _ = _echelon(_transpose(d_next), p)
            image = [row for row in image_rows if any(row)]
        else:
            image = []
        if d_j is not None:
            for vec in image:
                if any(x % p for x in _mat_vec(d_j, vec, p)):
                    raise AssertionError("boundary image not contained in kernel")
        result[j] = len(kernel) - len(image)
    return BettiVector(result)
