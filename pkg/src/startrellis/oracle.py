"""Brute-force references: exhaustive codeword enumeration and
maximum-likelihood decoding by full search, used to certify the trellis
decoder on small codes.

Metric convention (shared project-wide): the correlation sum(s_t * llr_t)
with s_t = +1 for bit 0 and -1 for bit 1.  Floating-point evaluation order
is pinned so exact-equality certification is well defined: positions
accumulate left to right within a section, and section subtotals add left
to right.  With no section list the whole word is one section.
"""

from __future__ import annotations

import numpy as np

from .codes import matrix_rank

ML_RANK_CAP = 21      # <= 2M codewords
ENUM_RANK_CAP = 25


def _messages(k: int, lo: int, hi: int, order: str) -> np.ndarray:
    idx = np.arange(lo, hi, dtype=np.int64)
    if order == "gray":
        idx = idx ^ (idx >> 1)
    elif order != "counter":
        raise ValueError(f"unknown enumeration order {order!r}")
    return ((idx[:, None] >> np.arange(k)[None, :]) & 1).astype(np.uint8)


def enumerate_codewords(gen: np.ndarray, order: str = "counter"):
    """Yield every message combination of the rows: counter bits, LSB first.

    Yields 2^rows words; they are distinct exactly when the rows are
    independent.
    """
    gen = np.asarray(gen, dtype=np.uint8) & 1
    k = gen.shape[0]
    if k > ENUM_RANK_CAP:
        raise ValueError(f"{k} rows exceed enumeration cap {ENUM_RANK_CAP}")
    gen16 = gen.astype(np.uint16)
    chunk = 1 << 16
    for lo in range(0, 1 << k, chunk):
        hi = min(lo + chunk, 1 << k)
        words = (_messages(k, lo, hi, order).astype(np.uint16) @ gen16) & 1
        yield from words.astype(np.uint8)


def codebook(gen: np.ndarray, order: str = "counter") -> np.ndarray:
    """All 2^rows codewords as one (2^rows, n) array, in enumeration order."""
    gen = np.asarray(gen, dtype=np.uint8) & 1
    k = gen.shape[0]
    if k > ML_RANK_CAP:
        raise ValueError(f"{k} rows exceed ML enumeration cap {ML_RANK_CAP}")
    msgs = _messages(k, 0, 1 << k, order).astype(np.uint16)
    return ((msgs @ gen.astype(np.uint16)) & 1).astype(np.uint8)


def min_distance(gen: np.ndarray) -> int:
    """Exact minimum nonzero weight of the row space."""
    best = None
    for w in enumerate_codewords(np.asarray(gen)):
        wt = int(w.sum())
        if wt and (best is None or wt < best):
            best = wt
    if best is None:
        raise ValueError("row space is trivial")
    return best


def _lex_keys(words: np.ndarray) -> np.ndarray:
    """Per-word integer whose order equals lexicographic order of the bits."""
    n = words.shape[1]
    if n > 62:
        raise ValueError("lexicographic keys support up to 62 columns")
    weights = (1 << np.arange(n - 1, -1, -1, dtype=np.int64))
    return words.astype(np.int64) @ weights


class MLOracle:
    """Exhaustive max-correlation decoder over a precomputed codebook."""

    def __init__(self, gen: np.ndarray, sections=None, order: str = "counter"):
        self.words = codebook(gen, order)
        self.signs = 1.0 - 2.0 * self.words.astype(np.float64)
        self.keys = _lex_keys(self.words)
        n = self.words.shape[1]
        self.sections = [(0, n)] if sections is None else [tuple(s) for s in sections]
        covered = sorted(self.sections)
        if covered[0][0] != 0 or covered[-1][1] != n or any(
            covered[i][1] != covered[i + 1][0] for i in range(len(covered) - 1)
        ):
            raise ValueError("sections must partition the columns")

    def metrics(self, llrs: np.ndarray) -> np.ndarray:
        """(words, instances) correlation metrics in the pinned float order."""
        llrs = np.atleast_2d(np.asarray(llrs, dtype=np.float64))
        total = None
        for lo, hi in self.sections:
            acc = np.zeros((self.words.shape[0], llrs.shape[0]), dtype=np.float64)
            for t in range(lo, hi):
                acc += self.signs[:, t:t + 1] * llrs[:, t][None, :]
            total = acc if total is None else total + acc
        return total

    def decode_batch(self, llrs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Per instance: the metric-maximizing codeword, lex-smallest on ties."""
        llrs = np.atleast_2d(np.asarray(llrs, dtype=np.float64))
        totals = self.metrics(llrs)
        best = totals.max(axis=0)
        chosen = np.empty(llrs.shape[0], dtype=np.int64)
        for b in range(llrs.shape[0]):
            cand = np.flatnonzero(totals[:, b] == best[b])
            chosen[b] = cand[np.argmin(self.keys[cand])]
        return self.words[chosen], best


def ml_bruteforce(gen: np.ndarray, llr, sections=None) -> tuple[np.ndarray, float]:
    """One-shot exhaustive ML decode; see MLOracle for the batched form."""
    oracle = MLOracle(gen, sections=sections)
    words, metrics = oracle.decode_batch(np.asarray(llr, dtype=np.float64)[None, :])
    return words[0], float(metrics[0])
