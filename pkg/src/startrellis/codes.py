"""Reed-Solomon codes over GF(2^m), their binary BCH subcodes, a 24-bit
extended Golay generator matrix, and small exact GF(2) analytics (rank,
reduced row echelon form, weight enumerators) used to validate them.

Binary words and matrices are numpy uint8 arrays of 0/1 values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import galois
from .galois import GF

ENUMERATION_CAP = 25  # max rank for exhaustive codeword enumeration


@dataclass(frozen=True)
class RSCode:
    """A (n, k, d) Reed-Solomon code of length n = 2^m - 1 with d = n - k + 1."""

    field: GF
    n: int
    k: int
    d: int
    generator_poly: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class BCHCode:
    """Binary cyclic code sharing the RS parity-check roots (the subfield subcode)."""

    n: int
    k: int
    d_design: int
    generator_poly: tuple[int, ...]
    generator_matrix: np.ndarray


def rs_generator_poly(field: GF, k: int) -> list[int]:
    """Monic generator with roots alpha, alpha^2, ..., alpha^(d-1), d = n - k + 1."""
    n = field.q - 1
    if not 1 <= k <= n:
        raise ValueError(f"dimension k={k} outside [1, {n}]")
    d = n - k + 1
    return galois.poly_from_roots(field, [field.alpha_pow(i) for i in range(1, d)])


def rs_code(field: GF, k: int) -> RSCode:
    n = field.q - 1
    g = rs_generator_poly(field, k)
    return RSCode(field=field, n=n, k=k, d=n - k + 1, generator_poly=tuple(g))


def rs_encode(code: RSCode, message) -> np.ndarray:
    """Systematic encoding: the message fills the k high-order symbol positions.

    Parity symbols occupy positions 0 .. d-2 so that c(alpha^i) = 0 for
    i in [1, d-1].
    """
    message = list(message)
    if len(message) != code.k:
        raise ValueError(f"message length {len(message)} != k={code.k}")
    field = code.field
    shifted = [0] * (code.d - 1) + message
    _, rem = galois.poly_divmod(field, shifted, list(code.generator_poly))
    word = np.zeros(code.n, dtype=np.int64)
    for i, c in enumerate(rem):
        word[i] = c
    word[code.d - 1:] = message
    return word


def bch_generator_poly(field: GF, d: int) -> list[int]:
    """LCM of the minimal polynomials of alpha, ..., alpha^(d-1) over GF(2)."""
    if d < 1:
        raise ValueError(f"designed distance d={d} must be >= 1")
    covered: set[int] = set()
    g = [1]
    for i in range(1, d):
        if i % (field.q - 1) in covered:
            continue
        coset = galois.cyclotomic_coset(i % (field.q - 1), field.m)
        covered |= coset
        g = galois.poly_mul(field, g, galois.minimal_polynomial(field, field.alpha_pow(i)))
    return g


def bch_generator_matrix(g: list[int], n: int) -> np.ndarray:
    """(n - deg g) x n matrix whose rows are the shifts x^i * g(x)."""
    g = galois.poly_trim(g)
    deg = len(g) - 1
    if deg >= n:
        raise ValueError(f"degenerate code: deg g = {deg} >= n = {n}")
    k = n - deg
    mat = np.zeros((k, n), dtype=np.uint8)
    for i in range(k):
        mat[i, i:i + deg + 1] = g
    return mat


def bch_code(field: GF, d: int) -> BCHCode:
    n = field.q - 1
    g = bch_generator_poly(field, d)
    return BCHCode(
        n=n,
        k=n - (len(g) - 1),
        d_design=d,
        generator_poly=tuple(g),
        generator_matrix=bch_generator_matrix(g, n),
    )


_GOLAY_ROWS = """
111100000000000011110000
010110100000000001011010
001111000000000000111100
000000001111000011110000
000000000101101001011010
000000000011110000111100
111111110000000000000000
000000001111111100000000
000000000000000011111111
100110101001101010011010
110010011100100111001001
011110000111100001111000
"""


def golay_generator_matrix() -> np.ndarray:
    """12 x 24 generator of the extended binary Golay code, in star-sectioned form:

    three 8-column sections, rows 7-9 confined to one section each and the
    remaining rows coupling sections.
    """
    rows = [[int(c) for c in line] for line in _GOLAY_ROWS.split()]
    return np.array(rows, dtype=np.uint8)


# ----------------------------------------------------------------------------
# GF(2) matrix utilities


def rref(mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2); returns (matrix, pivot columns)."""
    out = np.array(mat, dtype=np.uint8, copy=True) & 1
    if out.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    nrows, ncols = out.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        hits = np.nonzero(out[row:, col])[0]
        if hits.size == 0:
            continue
        pivot = row + hits[0]
        if pivot != row:
            out[[row, pivot]] = out[[pivot, row]]
        others = np.nonzero(out[:, col])[0]
        for i in others:
            if i != row:
                out[i] ^= out[row]
        pivots.append(col)
        row += 1
    return out[:row], pivots


def matrix_rank(mat: np.ndarray) -> int:
    return rref(mat)[0].shape[0]


def left_nullspace(mat: np.ndarray) -> np.ndarray:
    """Basis of {u : u @ mat = 0 over GF(2)}, one vector per row."""
    mat = np.asarray(mat, dtype=np.uint8) & 1
    nrows = mat.shape[0]
    aug = np.hstack([mat, np.eye(nrows, dtype=np.uint8)])
    reduced, pivots = rref(aug)
    keep = [i for i, _ in enumerate(reduced) if not reduced[i, : mat.shape[1]].any()]
    basis = reduced[keep, mat.shape[1]:]
    # rows of rref that never touched the original columns still need covering
    if len(keep) + matrix_rank(mat) != nrows:
        missing = nrows - matrix_rank(mat) - len(keep)
        raise AssertionError(f"nullspace extraction lost {missing} vectors")
    return basis


def row_reduce_against(rows: np.ndarray, word: np.ndarray) -> np.ndarray:
    """Reduce a word by an echelonized row set (leftmost pivots), returning the residue."""
    w = np.array(word, dtype=np.uint8, copy=True)
    leads = [int(np.argmax(r)) if r.any() else -1 for r in rows]
    for r, lead in zip(rows, leads):
        if lead >= 0 and w[lead]:
            w ^= r
    return w


def in_row_space(rows: np.ndarray, word: np.ndarray) -> bool:
    """Whether word lies in the GF(2) span of rows."""
    base = rref(rows)[0]
    return not row_reduce_against(base, word).any()


def _message_block(lo: int, hi: int, k: int, order: str) -> np.ndarray:
    idx = np.arange(lo, hi, dtype=np.int64)
    if order == "gray":
        idx = idx ^ (idx >> 1)
    return ((idx[:, None] >> np.arange(k)[None, :]) & 1).astype(np.uint8)


def weight_enumerator(mat: np.ndarray) -> dict[int, int]:
    """Exhaustive weight distribution of the row space (2^rank codewords)."""
    mat = np.asarray(mat, dtype=np.uint8) & 1
    if mat.shape[0] > ENUMERATION_CAP:
        raise ValueError(f"{mat.shape[0]} rows exceed enumeration cap {ENUMERATION_CAP}")
    basis, _ = rref(mat)
    k = basis.shape[0]
    if k > ENUMERATION_CAP:
        raise ValueError(f"rank {k} exceeds enumeration cap {ENUMERATION_CAP}")
    counts = np.zeros(mat.shape[1] + 1, dtype=np.int64)
    chunk = 1 << 16
    basis16 = basis.astype(np.uint16)
    for lo in range(0, 1 << k, chunk):
        hi = min(lo + chunk, 1 << k)
        msgs = _message_block(lo, hi, k, "counter").astype(np.uint16)
        words = (msgs @ basis16) & 1
        counts += np.bincount(words.sum(axis=1), minlength=counts.size)
    return {int(w): int(c) for w, c in enumerate(counts) if c}
