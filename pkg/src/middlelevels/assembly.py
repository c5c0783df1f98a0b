"""Join the 2-factor into a Hamilton cycle of the middle levels graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .errors import StructuralError
from .forest import build_aux_graph, spanning_tree
from .gadgets import FlippablePair, six_cycle
from .matching import TwoFactor, _check_n, build_two_factor, to_int, to_str


@dataclass
class CycleCover:
    """A 2-regular spanning subgraph; ``nbr[i]`` holds the two neighbor indices."""

    n: int
    vertices: np.ndarray = field(repr=False)
    nbr: list[list[int]] = field(repr=False)

    def cycles(self) -> list[list[int]]:
        seen = bytearray(len(self.nbr))
        out = []
        for start in range(len(self.nbr)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = 1
            prev, cur = start, self.nbr[start][0]
            while cur != start:
                cyc.append(cur)
                seen[cur] = 1
                a, b = self.nbr[cur]
                prev, cur = cur, (b if a == prev else a)
            out.append(cyc)
        return out

    def component_count(self) -> int:
        return len(self.cycles())

    def edge_set(self) -> set[tuple[int, int]]:
        return {(min(i, j), max(i, j)) for i, pair in enumerate(self.nbr) for j in pair}


def apply_six_cycles(tf: TwoFactor, pairs: Iterable[FlippablePair]) -> CycleCover:
    """Toggle the gadget edges of every pair in the adjacency of ``tf``."""
    nbr = [list(p) for p in zip(tf.mate_m.tolist(), tf.mate_n.tolist())]
    cover = CycleCover(tf.n, tf.vertices, nbr)
    for p in pairs:
        toggle_gadget(cover, tf, p)
    return cover


def toggle_gadget(cover: CycleCover, tf: TwoFactor, p: FlippablePair) -> None:
    verts = six_cycle(p).vertices
    idx = tf.index_of(np.array([to_int(v) for v in verts], dtype=np.int64)).tolist()
    edges = [(idx[k], idx[(k + 1) % 6]) for k in range(6)]
    nbr = cover.nbr
    present, absent = [], []
    for i, j in edges:
        fwd, back = j in nbr[i], i in nbr[j]
        if fwd != back:
            raise StructuralError(f"adjacency of gadget {p.label} is inconsistent")
        (present if fwd else absent).append((i, j))
    for i, j in present:
        nbr[i][nbr[i].index(j)] = -1
        nbr[j][nbr[j].index(i)] = -1
    for i, j in absent:
        for s, t in ((i, j), (j, i)):
            if -1 not in nbr[s]:
                raise StructuralError(f"gadget {p.label} overloads a vertex")
            nbr[s][nbr[s].index(-1)] = t
    if any(-1 in nbr[i] for i in idx):
        raise StructuralError(f"gadget {p.label} leaves a vertex with degree < 2")


@dataclass
class HamiltonCycle:
    n: int
    vertices: np.ndarray = field(repr=False)

    @property
    def width(self) -> int:
        return 2 * self.n + 1

    def __len__(self) -> int:
        return len(self.vertices)

    def bit_lines(self, closed: bool = False) -> Iterator[str]:
        w = self.width
        for v in self.vertices.tolist():
            yield to_str(v, w)
        if closed:
            yield to_str(int(self.vertices[0]), w)

    def flip_positions(self) -> list[int]:
        """Position flipped to reach the next vertex, wrapping around at the end."""
        v = self.vertices
        diff = v ^ np.roll(v, -1)
        return [self.width - d.bit_length() + 1 for d in diff.tolist()]


def start_vertex(n: int) -> str:
    return "1" * n + "0" * (n + 1)


def traverse(cover: CycleCover, start: int) -> list[int]:
    """Walk the cycle through ``start``.

    The first step goes to the neighbor differing at the smaller bit
    position, i.e. the one with the larger xor.
    """
    verts = cover.vertices.tolist()
    a, b = cover.nbr[start]
    first = a if (verts[a] ^ verts[start]) > (verts[b] ^ verts[start]) else b
    order = [start]
    prev, cur = start, first
    while cur != start:
        order.append(cur)
        x, y = cover.nbr[cur]
        prev, cur = cur, (y if x == prev else x)
    return order


def selected_pairs(n: int, max_n: int | None = None) -> list[FlippablePair]:
    return spanning_tree(build_aux_graph(n, max_n))


def assemble(n: int, max_n: int | None = None) -> HamiltonCycle:
    _check_n(n, max_n)
    tf = build_two_factor(n, max_n)
    cover = apply_six_cycles(tf, selected_pairs(n, max_n))
    start = int(tf.index_of(to_int(start_vertex(n))))
    order = traverse(cover, start)
    if len(order) != len(tf.vertices):
        raise StructuralError(
            f"joined cover for n={n} is not a single cycle "
            f"({len(order)} of {len(tf.vertices)} vertices reached)"
        )
    return HamiltonCycle(n, tf.vertices[np.array(order, dtype=np.int64)])
