"""Binary image of a Reed-Solomon code and its block-diagonal decomposition.

Each GF(2^m) symbol expands into m bits over a basis (default: the standard
basis 1, alpha, ..., alpha^(m-1)).  A column permutation then gathers bit i
of every symbol into one contiguous block, exposing the generator as m
block-diagonal copies of the binary subcode plus m*(K-k) "glue" rows that
couple the blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import codes, galois
from .codes import BCHCode, RSCode, bch_code, rref, row_reduce_against
from .galois import GF


@dataclass(frozen=True, eq=False)
class Basis:
    """A GF(2)-basis of GF(2^m), with the change-of-coordinates matrix cached."""

    field: GF
    elements: tuple[int, ...]
    to_standard: np.ndarray = dc_field(init=False)   # column i = bits of elements[i]
    from_standard: np.ndarray = dc_field(init=False)

    def __post_init__(self):
        m = self.field.m
        if len(self.elements) != m:
            raise ValueError(f"basis needs {m} elements, got {len(self.elements)}")
        mat = np.zeros((m, m), dtype=np.uint8)
        for i, beta in enumerate(self.elements):
            mat[:, i] = [(beta >> j) & 1 for j in range(m)]
        aug = np.hstack([mat, np.eye(m, dtype=np.uint8)])
        reduced, pivots = rref(aug)
        if pivots[:m] != list(range(m)):
            raise ValueError("basis elements are linearly dependent over GF(2)")
        object.__setattr__(self, "to_standard", mat)
        object.__setattr__(self, "from_standard", reduced[:, m:])


def standard_basis(field: GF) -> Basis:
    return Basis(field, tuple(1 << i for i in range(field.m)))


def im_element(basis: Basis, beta: int) -> np.ndarray:
    """Coordinates of beta over the basis, as m bits."""
    std = np.array([(beta >> j) & 1 for j in range(basis.field.m)], dtype=np.uint8)
    return (basis.from_standard @ std) & 1


def im_inverse(basis: Basis, bits) -> int:
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.shape != (basis.field.m,):
        raise ValueError(f"expected {basis.field.m} bits, got shape {bits.shape}")
    std = (basis.to_standard @ bits) & 1
    return int(sum(int(b) << j for j, b in enumerate(std)))


def im_word(basis: Basis, symbols) -> np.ndarray:
    """Concatenated per-symbol images: symbol t occupies bits [t*m, (t+1)*m)."""
    m = basis.field.m
    out = np.empty(m * len(symbols), dtype=np.uint8)
    for t, s in enumerate(symbols):
        out[t * m:(t + 1) * m] = im_element(basis, int(s))
    return out


def per_permutation(n: int, m: int) -> np.ndarray:
    """forward[t*m + i] = i*n + t: bit i of symbol t lands in block i, column t."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    forward = np.empty(n * m, dtype=np.int64)
    for t in range(n):
        for i in range(m):
            forward[t * m + i] = i * n + t
    return forward


def permute_word(forward: np.ndarray, word: np.ndarray) -> np.ndarray:
    out = np.empty_like(word)
    out[forward] = word
    return out


def unpermute_word(forward: np.ndarray, word: np.ndarray) -> np.ndarray:
    return np.asarray(word)[forward]


@dataclass(eq=False)
class ImageCode:
    """Generator of the permuted binary image: m BCH blocks plus glue rows."""

    rs: RSCode
    bch: BCHCode
    basis: Basis
    permutation: np.ndarray
    generator: np.ndarray   # (m*K, m*N)
    glue: np.ndarray        # (m*(K-k), m*N)

    @property
    def n_bits(self) -> int:
        return self.rs.n * self.rs.field.m

    @property
    def k_bits(self) -> int:
        return self.rs.k * self.rs.field.m

    def image_bits(self, symbols) -> np.ndarray:
        """Permuted binary image of an RS word: bit i of symbol t at column i*N + t."""
        return permute_word(self.permutation, im_word(self.basis, symbols))

    def symbols_from_bits(self, word) -> np.ndarray:
        m, n = self.rs.field.m, self.rs.n
        flat = unpermute_word(self.permutation, np.asarray(word, dtype=np.uint8))
        return np.array(
            [im_inverse(self.basis, flat[t * m:(t + 1) * m]) for t in range(n)],
            dtype=np.int64,
        )


def _rs_generator_rows(rs: RSCode) -> list[list[int]]:
    """K rows x^j * G(x) spanning the RS code over GF(2^m)."""
    g = list(rs.generator_poly)
    rows = []
    for j in range(rs.k):
        row = [0] * rs.n
        for i, c in enumerate(g):
            row[j + i] = c
        rows.append(row)
    return rows


def derive_glue_vectors(rs: RSCode, bch: BCHCode, basis: Basis | None = None) -> np.ndarray:
    """Rows completing the m block-diagonal BCH copies to a basis of the image.

    The full m*K-row image of the basis-scaled RS generator rows is reduced
    modulo the block rows by leftmost-pivot-first elimination; the m*(K-k)
    survivors are the glue vectors.
    """
    basis = basis or standard_basis(rs.field)
    m, n = rs.field.m, rs.n
    forward = per_permutation(n, m)

    pivot_rows: dict[int, np.ndarray] = {}
    for b in range(m):
        for row in bch.generator_matrix:
            full = np.zeros(m * n, dtype=np.uint8)
            full[b * n:(b + 1) * n] = row
            pivot_rows[int(np.argmax(full))] = full

    glue = []
    for gamma in basis.elements:
        for rs_row in _rs_generator_rows(rs):
            scaled = [rs.field.mul(gamma, c) for c in rs_row]
            w = permute_word(forward, im_word(basis, scaled))
            while w.any():
                lead = int(np.argmax(w))
                if lead in pivot_rows:
                    w = w ^ pivot_rows[lead]
                else:
                    pivot_rows[lead] = w
                    glue.append(w)
                    break
    expected = m * (rs.k - bch.k)
    if len(glue) != expected:
        raise AssertionError(f"glue row count {len(glue)} != m(K-k) = {expected}")
    return np.array(glue, dtype=np.uint8).reshape(expected, m * n)


def image_generator(rs: RSCode, bch: BCHCode | None = None,
                    basis: Basis | None = None) -> ImageCode:
    """Block-diagonal BCH copies stacked over the derived glue rows."""
    bch = bch or bch_code(rs.field, rs.d)
    basis = basis or standard_basis(rs.field)
    m, n = rs.field.m, rs.n
    blocks = np.kron(np.eye(m, dtype=np.uint8), bch.generator_matrix)
    glue = derive_glue_vectors(rs, bch, basis)
    generator = np.vstack([blocks, glue]) if glue.size else blocks
    return ImageCode(
        rs=rs,
        bch=bch,
        basis=basis,
        permutation=per_permutation(n, m),
        generator=generator,
        glue=glue,
    )


def membership_check(image: ImageCode, word) -> bool:
    """True iff the word, mapped back through the permutation and the basis,
    has zero syndromes at alpha, ..., alpha^(d-1)."""
    word = np.asarray(word, dtype=np.uint8)
    if word.shape != (image.n_bits,):
        raise ValueError(f"expected {image.n_bits} bits, got shape {word.shape}")
    symbols = image.symbols_from_bits(word)
    f = image.rs.field
    for i in range(1, image.rs.d):
        if galois.poly_eval(f, [int(s) for s in symbols], f.alpha_pow(i)) != 0:
            return False
    return True
