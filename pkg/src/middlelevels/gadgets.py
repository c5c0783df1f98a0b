"""Flippable pairs and the 6-cycles used to join cycles of the 2-factor."""

from __future__ import annotations

from dataclasses import dataclass, field

from .dyck import DYCK_CAP, _check_cap, heights, is_dyck, iter_dyck, match_close
from .errors import ConsistencyError, DomainError
from .sigma import nesting_partition, sigma

# star substitutions for positions (a+1, a+2, b), in cyclic adjacency order;
# (1,0,0) is where P_sigma(x) meets the gadget, (0,1,0) where P_sigma(y) does
STAR_ORDER = ("100", "110", "010", "011", "001", "101")


@dataclass(frozen=True, order=True)
class FlippablePair:
    x: str
    a: int
    y: str = field(compare=False)
    b: int = field(compare=False)
    d: int = field(compare=False)

    @property
    def label(self) -> str:
        return f"{self.x}->{self.y}"


@dataclass(frozen=True)
class SixCycle:
    pattern: str
    vertices: tuple[str, ...]

    def edges(self) -> list[frozenset[str]]:
        vs = self.vertices
        return [frozenset((vs[i], vs[(i + 1) % 6])) for i in range(6)]


def flippable_positions(x: str) -> list[int]:
    """Start positions ``a`` of all flippable substrings ``110..`` of ``x``."""
    if not is_dyck(x):
        raise DomainError(f"not a Dyck word: {x!r}")
    if not x:
        return []
    # the prefix before a must stay strictly positive: a lies inside the first hill
    first_return = match_close(x, 1)
    return [a for a in range(1, first_return - 1) if x[a - 1 : a + 2] == "110"]


def _is_flippable(x: str, a: int) -> bool:
    h = heights(x)
    return x[a - 1 : a + 2] == "110" and min(h[1:a], default=1) >= 1


def make_pair(x: str, a: int) -> FlippablePair:
    if not is_dyck(x) or not 1 <= a <= len(x) - 2 or not _is_flippable(x, a):
        raise DomainError(f"position {a} is not flippable in {x!r}")
    y = x[:a] + "01" + x[a + 2 :]
    return FlippablePair(x=x, a=a, y=y, b=match_close(x, a), d=heights(x)[a - 1])


def pull(x: str, a: int) -> str:
    """Swap positions ``a+1`` and ``a+2`` of a flippable ``110``."""
    return make_pair(x, a).y


def enumerate_flippable_pairs(n: int, max_n: int | None = None) -> list[FlippablePair]:
    _check_cap(n, max_n, DYCK_CAP)
    return [make_pair(x, a) for x in iter_dyck(n) for a in flippable_positions(x)]


def six_cycle(p: FlippablePair) -> SixCycle:
    us, inner, vs, v0 = nesting_partition(p.x, p.a, p.b)
    w = inner[2:]
    head = "".join(u + "0" for u in us)
    tail = "".join(vi + "1" for vi in reversed(vs)) + v0
    pattern = head + "1**" + w + "*" + tail + "0"
    s1, s2, s3 = p.a + 1, p.a + 2, p.b
    verts = []
    for sub in STAR_ORDER:
        chars = list(pattern)
        chars[s1 - 1], chars[s2 - 1], chars[s3 - 1] = sub
        verts.append("".join(chars))
    return SixCycle(pattern, tuple(verts))


def tau_sequences(p: FlippablePair) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Flip sequences of the two paths after resplicing with the 6-cycle.

    The common prefix and the tails are sliced out of sigma(x) and sigma(y)
    and their expected shapes are asserted.
    """
    a, b = p.a, p.b
    sx, sy = sigma(p.x), sigma(p.y)
    k = 2 * a - 2
    alpha = sx[:k]
    if sx[k : k + 6] != (b, a, a + 2, a + 1, a, a + 2):
        raise ConsistencyError(f"unexpected sigma({p.x}) around position {k}")
    if sy[:k] != alpha or sy[k : k + 2] != (a + 1, a):
        raise ConsistencyError(f"sigma({p.y}) does not share the expected prefix")
    gamma = sx[k + 6 :]
    delta = sy[k + 2 :]
    wlen = 2 * (b - a - 3)  # |sigma_{a+3}(w)| = 2|w|
    if p.d == 0:
        if delta or len(gamma) != wlen:
            raise ConsistencyError(f"bad tail shape for {p.label}")
    else:
        sw, beta = gamma[:wlen], gamma[wlen + 2 :]
        if (
            gamma[wlen : wlen + 2] != (a - 1, b)
            or delta != (a - 1, a + 1, b, a + 2, *sw, a + 1, b, *beta)
        ):
            raise ConsistencyError(f"bad tail shape for {p.label}")
    tau_x = (*alpha, a + 2, a, *delta)
    tau_y = (*alpha, b, a, a + 1, a + 2, a, a + 1, *gamma)
    return tau_x, tau_y


def intersection_edge_indices(p: FlippablePair) -> tuple[tuple[int, int], int]:
    """1-based indices of the path edges shared with the gadget.

    Edge ``k`` joins entries ``k`` and ``k+1`` of the path.
    """
    return (2 * p.a - 1, 2 * p.a + 4), 2 * p.a - 1
