"""The (n-1)-lexical and n-lexical matchings M, N and the 2-factor M u N.

The string functions below are the reference definitions. ``build_two_factor``
runs the same rules vectorized over integer-encoded vertices (bit position 1 is
the most significant bit, so integer order equals lexicographic order).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from .dyck import check_bits
from .errors import DomainError, SizeLimitError

TWO_FACTOR_CAP = 10
# vertices are packed into int64
WORD_LIMIT_N = 30


def _middle_n(x: str) -> int:
    check_bits(x)
    if len(x) % 2 != 1:
        raise DomainError(f"middle-levels vertex must have odd length: {x!r}")
    return (len(x) - 1) // 2


def _require_weight(x: str, upper: bool) -> None:
    n = _middle_n(x)
    want = n + 1 if upper else n
    if x.count("1") != want:
        raise DomainError(f"{x!r} has weight {x.count('1')}, expected {want}")


def _flip(x: str, p: int) -> str:
    return x[: p - 1] + ("1" if x[p - 1] == "0" else "0") + x[p:]


def ordered_prefixes(x: str) -> list[int]:
    """Lengths of the prefixes of ``x`` ending in 0, in lexical-matching order.

    Sorted by decreasing surplus of 0s over 1s, ties by increasing length.
    """
    _require_weight(x, upper=False)
    keys = []
    surplus = 0
    for j, c in enumerate(x, 1):
        surplus += 1 if c == "0" else -1
        if c == "0":
            keys.append((-surplus, j))
    return [j for _, j in sorted(keys)]


def _inverse_order(y: str) -> list[int]:
    _require_weight(y, upper=True)
    keys = []
    surplus = 0
    for j, c in enumerate(y, 1):
        surplus += 1 if c == "0" else -1
        if c == "1":
            keys.append((-surplus, -j))
    return [-j for _, j in sorted(keys)]


def match_M(x: str) -> str:
    return _flip(x, ordered_prefixes(x)[1])


def match_N(x: str) -> str:
    return _flip(x, ordered_prefixes(x)[0])


def match_M_inv(y: str) -> str:
    return _flip(y, _inverse_order(y)[1])


def match_N_inv(y: str) -> str:
    return _flip(y, _inverse_order(y)[0])


MAPS = {"M": match_M, "N": match_N, "Minv": match_M_inv, "Ninv": match_N_inv}


# -- integer-encoded bulk engine ---------------------------------------------


def to_int(x: str) -> int:
    return int(x, 2) if x else 0


def to_str(v: int, width: int) -> str:
    return format(v, f"0{width}b")


def middle_vertices(n: int) -> np.ndarray:
    """All vertices of G_n as a sorted int64 array."""
    if n > WORD_LIMIT_N:
        raise SizeLimitError(f"n={n} does not fit the 64-bit vertex encoding")
    w = 2 * n + 1
    if w <= 22:
        v = np.arange(1 << w, dtype=np.int64)
        pop = np.zeros_like(v)
        for k in range(w):
            pop += (v >> k) & 1
        return v[(pop == n) | (pop == n + 1)]
    out = []
    for k in (n, n + 1):
        for ones in combinations(range(w), k):
            out.append(sum(1 << (w - 1 - p) for p in ones))
    return np.array(sorted(out), dtype=np.int64)


def _bit_matrix(v: np.ndarray, w: int) -> np.ndarray:
    shifts = np.arange(w - 1, -1, -1, dtype=np.int64)
    return ((v[:, None] >> shifts) & 1).astype(np.int8)


def _flip_columns(v: np.ndarray, cols: np.ndarray, w: int) -> np.ndarray:
    return v ^ (np.int64(1) << (w - 1 - cols).astype(np.int64))


def bulk_match(v: np.ndarray, w: int, which: str) -> np.ndarray:
    """Apply one of M, N (to weight-n rows) or Minv, Ninv (weight n+1 rows)."""
    bits = _bit_matrix(v, w)
    surplus = np.cumsum(1 - 2 * bits.astype(np.int16), axis=1)
    floor = np.int16(-4 * w)
    rows = np.arange(len(v))
    if which in ("M", "N"):
        score = np.where(bits == 0, surplus, floor)
        first = np.argmax(score, axis=1)
        if which == "N":
            return _flip_columns(v, first, w)
        score[rows, first] = floor
        return _flip_columns(v, np.argmax(score, axis=1), w)
    if which in ("Minv", "Ninv"):
        # ties go to the longest prefix: search the reversed columns
        score = np.where(bits == 1, surplus, floor)[:, ::-1]
        first = np.argmax(score, axis=1)
        if which == "Ninv":
            return _flip_columns(v, w - 1 - first, w)
        score[rows, first] = floor
        return _flip_columns(v, w - 1 - np.argmax(score, axis=1), w)
    raise DomainError(f"unknown matching {which!r}")


def _check_n(n: int, max_n: int | None) -> None:
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    cap = TWO_FACTOR_CAP if max_n is None else max_n
    if n > cap:
        raise SizeLimitError(f"n={n} exceeds the size cap {cap}")


@dataclass
class TwoFactor:
    """The 2-factor C_n as two index involutions over the sorted vertex array.

    ``mate_m[i]`` is the M-partner of vertex ``i`` (``M(v)`` or ``M^-1(v)``
    depending on the side), likewise ``mate_n`` for N.
    """

    n: int
    vertices: np.ndarray = field(repr=False)
    mate_m: np.ndarray = field(repr=False)
    mate_n: np.ndarray = field(repr=False)

    @property
    def width(self) -> int:
        return 2 * self.n + 1

    def index_of(self, v: int | np.ndarray):
        idx = np.searchsorted(self.vertices, v)
        if np.any(self.vertices[np.minimum(idx, len(self.vertices) - 1)] != v):
            raise DomainError("not a vertex of G_n")
        return idx

    @cached_property
    def cycle_indices(self) -> list[list[int]]:
        """Cycles as index lists.

        Each cycle starts at its smallest vertex and steps to its M-partner
        first; cycles are ordered by their smallest vertex.
        """
        mm = self.mate_m.tolist()
        mn = self.mate_n.tolist()
        seen = bytearray(len(mm))
        cycles = []
        for start in range(len(mm)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = 1
            cur, use_m = mm[start], False
            while cur != start:
                cyc.append(cur)
                seen[cur] = 1
                cur = mm[cur] if use_m else mn[cur]
                use_m = not use_m
            cycles.append(cyc)
        return cycles

    def cycles(self) -> list[list[str]]:
        w = self.width
        verts = self.vertices.tolist()
        return [[to_str(verts[i], w) for i in c] for c in self.cycle_indices]

    def neighbors(self) -> dict[str, tuple[str, str]]:
        w = self.width
        verts = self.vertices.tolist()
        return {
            to_str(v, w): (to_str(verts[a], w), to_str(verts[b], w))
            for v, a, b in zip(verts, self.mate_m.tolist(), self.mate_n.tolist())
        }


def build_two_factor(n: int, max_n: int | None = None) -> TwoFactor:
    _check_n(n, max_n)
    w = 2 * n + 1
    verts = middle_vertices(n)
    weight = np.zeros(len(verts), dtype=np.int64)
    for k in range(w):
        weight += (verts >> k) & 1
    lower = weight == n
    lo_idx = np.flatnonzero(lower)
    lo = verts[lo_idx]
    mate_m = np.empty(len(verts), dtype=np.int64)
    mate_n = np.empty(len(verts), dtype=np.int64)
    m_img = np.searchsorted(verts, bulk_match(lo, w, "M"))
    n_img = np.searchsorted(verts, bulk_match(lo, w, "N"))
    mate_m[lo_idx] = m_img
    mate_m[m_img] = lo_idx
    mate_n[lo_idx] = n_img
    mate_n[n_img] = lo_idx
    return TwoFactor(n, verts, mate_m, mate_n)
