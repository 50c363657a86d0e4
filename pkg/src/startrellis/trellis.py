"""Sectioned (star) trellises for binary linear block codes.

The column axis is split into sections meeting at a single junction.  Rows
of the generator are sorted into rows confined to one section ("local")
and rows crossing sections ("shared").  Each section gets a conventional
trellis with one start state; its end states are labeled by cosets of the
local subcode, indexed by shared-row coefficients.  A word is a codeword
exactly when one path per section ends in the class a common shared
coefficient vector selects.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .codes import left_nullspace, matrix_rank, rref


@dataclass(frozen=True)
class SectionSpec:
    """Ordered, disjoint, covering column ranges [start, stop)."""

    ranges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        r = self.ranges
        if not r or any(lo >= hi for lo, hi in r):
            raise ValueError("each section must be a nonempty [start, stop) range")
        if r[0][0] != 0 or any(r[i][1] != r[i + 1][0] for i in range(len(r) - 1)):
            raise ValueError("sections must tile the columns contiguously from 0")

    @property
    def total(self) -> int:
        return self.ranges[-1][1]


def uniform_sections(total: int, count: int) -> SectionSpec:
    if total % count:
        raise ValueError(f"{total} columns do not split into {count} equal sections")
    w = total // count
    return SectionSpec(tuple((j * w, (j + 1) * w) for j in range(count)))


def partition_rows(G: np.ndarray, spec: SectionSpec):
    """Split the row space into per-section local bases and shared rows.

    The local basis of a section spans every codeword supported inside it
    (the support-confined subcode), which maximizes the local row count;
    the shared rows complete the bases to the full row space, reduced
    leftmost-pivot-first against the locals.

    Returns (list of local row arrays, shared row array), all full-width.
    """
    G = np.asarray(G, dtype=np.uint8) & 1
    if G.shape[1] != spec.total:
        raise ValueError(f"generator has {G.shape[1]} columns, sections cover {spec.total}")

    locals_per_section = []
    pivot_rows: dict[int, np.ndarray] = {}
    for lo, hi in spec.ranges:
        outside = np.concatenate([np.arange(0, lo), np.arange(hi, spec.total)])
        null = left_nullspace(G[:, outside])
        words = (null.astype(np.uint16) @ G.astype(np.uint16)) & 1
        basis, _ = rref(words.astype(np.uint8))
        locals_per_section.append(basis)
        for row in basis:
            pivot_rows[int(np.argmax(row))] = row

    shared = []
    for row in G:
        w = row.copy()
        while w.any():
            lead = int(np.argmax(w))
            if lead in pivot_rows:
                w = w ^ pivot_rows[lead]
            else:
                pivot_rows[lead] = w
                shared.append(w)
                break
    shared_arr = (np.array(shared, dtype=np.uint8) if shared
                  else np.zeros((0, spec.total), dtype=np.uint8))
    return locals_per_section, shared_arr


def _span(row: np.ndarray) -> tuple[int, int]:
    nz = np.nonzero(row)[0]
    return int(nz[0]), int(nz[-1])


def _span_reduce(rows: np.ndarray, is_shared: np.ndarray) -> np.ndarray:
    """Greedy span form: all starts distinct; ends distinct among local rows.

    Row operations never add a shared row into a local one, so local rows
    stay inside the local span and shared rows remain a complement basis.
    """
    rows = rows.copy()
    n = rows.shape[0]

    def starts():
        return [_span(r)[0] for r in rows]

    changed = True
    while changed:
        changed = False
        s = starts()
        for i in range(n):
            for j in range(i + 1, n):
                if s[i] != s[j]:
                    continue
                # pick the row allowed (and preferred) to change
                if is_shared[i] == is_shared[j]:
                    a, b = (i, j) if _span(rows[i])[1] >= _span(rows[j])[1] else (j, i)
                else:
                    a = i if is_shared[i] else j   # shared row absorbs the local one
                    b = j if a == i else i
                rows[a] ^= rows[b]
                changed = True
                break
            if changed:
                break

    changed = True
    while changed:
        changed = False
        loc = [i for i in range(n) if not is_shared[i]]
        for ii in range(len(loc)):
            for jj in range(ii + 1, len(loc)):
                i, j = loc[ii], loc[jj]
                si, ei = _span(rows[i])
                sj, ej = _span(rows[j])
                if ei != ej:
                    continue
                a, b = (i, j) if si < sj else (j, i)   # earlier start keeps its start
                rows[a] ^= rows[b]
                changed = True
                break
            if changed:
                break
    return rows


def _solve_coefficients(rows: np.ndarray, word: np.ndarray) -> np.ndarray:
    """Coefficients x with x @ rows = word, for independent rows spanning word."""
    n = rows.shape[0]
    work = rows.copy()
    combo = np.eye(n, dtype=np.uint8)
    pivots = []
    for i in range(n):
        lead = int(np.argmax(work[i])) if work[i].any() else -1
        if lead < 0:
            raise ValueError("rows are dependent")
        for j in range(n):
            if j != i and work[j][lead]:
                work[j] ^= work[i]
                combo[j] ^= combo[i]
        pivots.append(lead)
    w = np.array(word, dtype=np.uint8, copy=True)
    x = np.zeros(n, dtype=np.uint8)
    for i, lead in enumerate(pivots):
        if w[lead]:
            w = w ^ work[i]
            x ^= combo[i]
    if w.any():
        raise ValueError("word is outside the row span")
    return x


@dataclass(eq=False)
class SectionTrellis:
    """Conventional trellis of one section, end states labeled by glue cosets.

    States at boundary t are the coefficient assignments of the rows whose
    span crosses t; shared-row coefficients stay active through the last
    boundary, so the final states enumerate the 2^class_rank coset classes.
    """

    start: int
    stop: int
    rows: np.ndarray                # trellis generator, section-local columns
    row_is_shared: np.ndarray       # bool per row; shared rows carry the class label
    shared_to_class: np.ndarray     # (r, class_rank): glue coefficients -> class bits
    active: list[list[int]] = dc_field(default_factory=list)
    edges: list[list[tuple[int, int, int]]] = dc_field(default_factory=list)

    @property
    def depth(self) -> int:
        return self.stop - self.start

    @property
    def n_local(self) -> int:
        return int((~self.row_is_shared).sum())

    @property
    def class_rank(self) -> int:
        return int(self.row_is_shared.sum())

    @property
    def n_end_classes(self) -> int:
        return 1 << self.class_rank

    @property
    def state_counts(self) -> list[int]:
        return [1 << len(a) for a in self.active]

    def enumerate_paths(self):
        """Yield (bits, class_index) over all distinct paths."""
        nrows = self.rows.shape[0]
        shared_idx = np.flatnonzero(self.row_is_shared)
        for msg in range(1 << nrows):
            coeffs = np.array([(msg >> i) & 1 for i in range(nrows)], dtype=np.uint8)
            bits = (coeffs @ self.rows) & 1
            cls = 0
            for pos, i in enumerate(shared_idx):
                cls |= int(coeffs[i]) << pos
            yield bits.astype(np.uint8), cls


def build_section_trellis(local_rows: np.ndarray, shared_rows: np.ndarray,
                          start: int = 0) -> SectionTrellis:
    """Build the section trellis from local rows and shared-row restrictions.

    Both inputs use section-local columns.  Shared restrictions may be
    dependent modulo the locals; the end-state classes quotient them, and
    shared_to_class records where each of the r input rows lands.
    """
    local_rows = np.asarray(local_rows, dtype=np.uint8) & 1
    shared_rows = np.asarray(shared_rows, dtype=np.uint8) & 1
    depth = local_rows.shape[1] if local_rows.size else shared_rows.shape[1]
    r = shared_rows.shape[0]

    L, _ = rref(local_rows) if local_rows.size else (np.zeros((0, depth), np.uint8), [])

    # quotient basis of the shared restrictions modulo the locals
    pivot_rows = {int(np.argmax(row)): row for row in L}
    B = []
    for v in shared_rows:
        w = v.copy()
        while w.any():
            lead = int(np.argmax(w))
            if lead in pivot_rows:
                w = w ^ pivot_rows[lead]
            else:
                pivot_rows[lead] = w
                B.append(w)
                break
    B = np.array(B, dtype=np.uint8) if B else np.zeros((0, depth), dtype=np.uint8)

    rows = np.vstack([L, B]) if (L.size or B.size) else np.zeros((0, depth), np.uint8)
    is_shared = np.array([False] * L.shape[0] + [True] * B.shape[0])
    if rows.shape[0]:
        rows = _span_reduce(rows, is_shared)

    # express each original shared restriction over the final rows
    rho = int(is_shared.sum())
    shared_to_class = np.zeros((r, rho), dtype=np.uint8)
    if r and rows.shape[0]:
        shared_pos = np.flatnonzero(is_shared)
        for t, v in enumerate(shared_rows):
            x = _solve_coefficients(rows, v)
            shared_to_class[t] = x[shared_pos]

    trellis = SectionTrellis(
        start=start, stop=start + depth, rows=rows,
        row_is_shared=is_shared, shared_to_class=shared_to_class,
    )
    _build_edges(trellis)
    return trellis


def _build_edges(t: SectionTrellis) -> None:
    depth = t.depth
    nrows = t.rows.shape[0]
    spans = [_span(r) for r in t.rows]
    # shared rows stay active through the final boundary
    ends = [depth - 1 if t.row_is_shared[i] else spans[i][1] for i in range(nrows)]
    starts = [spans[i][0] for i in range(nrows)]

    active = [[i for i in range(nrows) if starts[i] < b <= ends[i]]
              for b in range(depth + 1)]
    t.active = active

    edges: list[list[tuple[int, int, int]]] = []
    for pos in range(depth):
        cur, nxt = active[pos], active[pos + 1]
        entering = [i for i in range(nrows) if starts[i] == pos]
        assert len(entering) <= 1, "span reduction left duplicate starts"
        bit_rows = [i for i in range(nrows) if t.rows[i][pos]]
        pos_edges = []
        for state in range(1 << len(cur)):
            coeff = {row: (state >> k) & 1 for k, row in enumerate(cur)}
            for choice in ((0, 1) if entering else (0,)):
                if entering:
                    coeff[entering[0]] = choice
                bit = 0
                for i in bit_rows:
                    bit ^= coeff[i]
                to = 0
                for k, row in enumerate(nxt):
                    to |= coeff[row] << k
                pos_edges.append((state, to, bit))
        edges.append(pos_edges)
    t.edges = edges


@dataclass(eq=False)
class StarTrellis:
    """Union of section trellises joined at the junction.

    A word is a codeword iff some shared coefficient vector u in F_2^r puts
    every section path in the end class projections[j] maps u to.
    """

    sections: list[SectionTrellis]
    spec: SectionSpec
    r: int

    @property
    def n(self) -> int:
        return self.spec.total

    @property
    def projections(self) -> list[np.ndarray]:
        return [s.shared_to_class for s in self.sections]

    def class_luts(self) -> list[np.ndarray]:
        """Per section: array mapping shared-coefficient index u to class index."""
        if self.r > 20:
            raise ValueError(f"shared rank r={self.r} too large to tabulate")
        u_bits = ((np.arange(1 << self.r)[:, None] >> np.arange(self.r)[None, :]) & 1)
        luts = []
        for s in self.sections:
            cls_bits = (u_bits.astype(np.uint8) @ s.shared_to_class) & 1
            weights = 1 << np.arange(s.class_rank, dtype=np.int64)
            luts.append(cls_bits.astype(np.int64) @ weights)
        return luts


def build_star_trellis(G: np.ndarray, spec: SectionSpec) -> StarTrellis:
    G = np.asarray(G, dtype=np.uint8) & 1
    if matrix_rank(G) != G.shape[0]:
        raise ValueError("generator must have full row rank")
    locals_per_section, shared = partition_rows(G, spec)
    sections = []
    for j, (lo, hi) in enumerate(spec.ranges):
        sections.append(build_section_trellis(
            locals_per_section[j][:, lo:hi], shared[:, lo:hi], start=lo,
        ))
    return StarTrellis(sections=sections, spec=spec, r=shared.shape[0])
