"""Plane trees as rotation orbits, the auxiliary graph H_n and its spanning tree."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .dyck import DYCK_CAP, _check_cap, heights, is_dyck, iter_dyck, rotate
from .errors import DomainError, StructuralError
from .gadgets import FlippablePair, enumerate_flippable_pairs, make_pair


def rotation_orbit(x: str) -> list[str]:
    if not x or not is_dyck(x):
        raise DomainError(f"expected a non-empty Dyck word, got {x!r}")
    orbit = [x]
    y = rotate(x)
    while y != x:
        orbit.append(y)
        y = rotate(y)
    return orbit


def canonical_representative(x: str) -> str:
    return min(rotation_orbit(x))


def star(n: int) -> str:
    """The star with ``n`` rays rooted at a leaf."""
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    return "1" + "10" * (n - 1) + "0"


@dataclass(frozen=True)
class PlaneTreeClass:
    canonical: str
    orbit: tuple[str, ...]


@dataclass
class AuxGraph:
    n: int
    nodes: dict[str, PlaneTreeClass]
    # (class of x, class of y, pair); loops and parallel edges allowed
    edges: list[tuple[str, str, FlippablePair]] = field(default_factory=list)
    class_of: dict[str, str] = field(default_factory=dict, repr=False)

    @property
    def loops(self) -> int:
        return sum(1 for cx, cy, _ in self.edges if cx == cy)

    def to_dot(self) -> str:
        lines = ["digraph H {"]
        for c in sorted(self.nodes):
            lines.append(f'  "{c}";')
        for cx, cy, p in sorted(self.edges, key=lambda e: e[2]):
            lines.append(f'  "{cx}" -> "{cy}" [label="{p.label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def rotation_classes(n: int, max_n: int | None = None) -> dict[str, str]:
    """Map every word of D_n to the canonical member of its rotation orbit."""
    _check_cap(n, max_n, DYCK_CAP)
    class_of: dict[str, str] = {}
    for x in iter_dyck(n):
        if x in class_of:
            continue
        orbit = rotation_orbit(x) if x else [x]
        c = min(orbit)
        for y in orbit:
            class_of[y] = c
    return class_of


def build_aux_graph(n: int, max_n: int | None = None) -> AuxGraph:
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    class_of = rotation_classes(n, max_n)
    members: dict[str, list[str]] = {}
    for x, c in class_of.items():
        members.setdefault(c, []).append(x)
    nodes = {c: PlaneTreeClass(c, tuple(rotation_orbit(c))) for c in members}
    edges = [
        (class_of[p.x], class_of[p.y], p)
        for p in enumerate_flippable_pairs(n, max_n)
    ]
    return AuxGraph(n, nodes, edges, class_of)


def spanning_tree(g: AuxGraph) -> list[FlippablePair]:
    """Breadth-first spanning tree rooted at the star's class.

    Incident edges of each class are scanned in increasing (x, a) order,
    so the result does not depend on the order of ``g.edges``.
    """
    incident: dict[str, list[tuple[FlippablePair, str]]] = {c: [] for c in g.nodes}
    for cx, cy, p in g.edges:
        if cx == cy:
            continue
        incident[cx].append((p, cy))
        incident[cy].append((p, cx))
    for lst in incident.values():
        lst.sort()
    root = g.class_of[star(g.n)]
    seen = {root}
    queue = deque([root])
    chosen = []
    while queue:
        c = queue.popleft()
        for p, other in incident[c]:
            if other not in seen:
                seen.add(other)
                chosen.append(p)
                queue.append(other)
    if len(seen) != len(g.nodes):
        raise StructuralError(
            f"auxiliary graph for n={g.n} is disconnected "
            f"({len(seen)} of {len(g.nodes)} classes reached)"
        )
    return chosen


class Move(NamedTuple):
    kind: str  # "rotate" or "pull"
    a: int = 0

    def apply(self, x: str) -> str:
        return rotate(x) if self.kind == "rotate" else make_pair(x, self.a).y


def path_to_star(x: str) -> list[Move]:
    """Rotations and pulls transforming ``x`` into the star.

    Rotate until the root is a leaf, then repeatedly pull the leftmost
    deepest leaf one level up.
    """
    orbit = rotation_orbit(x)
    n = len(x) // 2
    target = star(n)
    moves = []
    k = next(i for i, y in enumerate(orbit) if _root_is_leaf(y))
    moves.extend([Move("rotate")] * k)
    y = orbit[k]
    while y != target:
        h = heights(y)
        deepest = max(h)
        p = h.index(deepest)  # opening bit of the leftmost deepest leaf
        move = Move("pull", p - 1)
        moves.append(move)
        y = move.apply(y)
    return moves


def _root_is_leaf(x: str) -> bool:
    # 1 u 0 with v empty: the root has a single child
    h = heights(x)
    return all(v > 0 for v in h[1:-1])


def apply_moves(x: str, moves: list[Move]) -> str:
    for m in moves:
        x = m.apply(x)
    return x
