"""Bitflip sequences sigma(x) and the paths they trace from Dyck words."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .dyck import canonic_decompose, is_dyck
from .errors import DomainError


@dataclass(frozen=True, order=True)
class BasePair:
    a: int
    b: int


def _match_table(x: str) -> list[int]:
    """``m[p]`` is the partner of position ``p`` (1-based; ``m[0]`` unused)."""
    m = [0] * (len(x) + 1)
    opens = []
    for p, c in enumerate(x, 1):
        if c == "1":
            opens.append(p)
        else:
            q = opens.pop()
            m[p], m[q] = q, p
    return m


def _require_dyck(x: str) -> None:
    if not x or not is_dyck(x):
        raise DomainError(f"expected a non-empty Dyck word, got {x!r}")


def _walk(match: list[int], a: int, end: int, out: list[int], pairs: list[BasePair]) -> None:
    # Iterative form of sigma_a over the region a..end; the stack holds
    # pending ("emit", p, q) and ("sub", start, stop) items in reverse order.
    stack: list[tuple[str, int, int]] = [("sub", a, end)]
    while stack:
        kind, p, q = stack.pop()
        if kind == "emit":
            out.append(p)
            out.append(q)
            continue
        if p > q:
            continue
        b = match[p]
        pairs.append(BasePair(p, b))
        out.append(b)
        out.append(p)
        stack.append(("sub", b + 1, q))
        stack.append(("emit", p - 1, b))
        stack.append(("sub", p + 1, b - 1))


def _sigma_with_pairs(x: str) -> tuple[list[int], list[BasePair]]:
    _require_dyck(x)
    match = _match_table(x)
    b = match[1]
    out = [b, 1]
    pairs = [BasePair(1, b)]
    _walk(match, 2, b - 1, out, pairs)
    return out, pairs


def sigma(x: str) -> tuple[int, ...]:
    """Bitflip sequence of the 2-factor path starting at ``x`` (1-based)."""
    return tuple(_sigma_with_pairs(x)[0])


def sigma_sub(a: int, xp: str) -> tuple[int, ...]:
    """sigma_a for the Dyck word ``xp`` sitting at absolute position ``a``."""
    if a < 2:
        raise DomainError(f"sigma_a needs a >= 2, got a={a}")
    if not is_dyck(xp):
        raise DomainError(f"not a Dyck word: {xp!r}")
    # embed xp at positions a..a+|xp|-1 of a balanced host word
    match = _match_table("1" * (a - 1) + xp + "0" * (a - 1))
    out: list[int] = []
    _walk(match, a, a + len(xp) - 1, out, [])
    return tuple(out)


def iter_path_vertices(x: str) -> Iterator[str]:
    bits = list(x)
    yield x
    for p in sigma(x):
        bits[p - 1] = "1" if bits[p - 1] == "0" else "0"
        yield "".join(bits)


def path_vertices(x: str) -> list[str]:
    """The vertex sequence P_sigma(x): ``x`` followed by one vertex per flip."""
    return list(iter_path_vertices(x))


def last_vertex(x: str) -> str:
    u, v = canonic_decompose(x)
    return u + "01" + v


def base_pairs(x: str) -> list[BasePair]:
    """Base pairs visited by the sigma recursion, in visiting order."""
    return _sigma_with_pairs(x)[1]


def prefix_vertex(x: str, p: BasePair, which: str) -> str:
    """Entry ``2a-1`` (``which='first'``) or ``2b-1`` (``'second'``) of P_sigma(x)."""
    if p not in base_pairs(x):
        raise DomainError(f"{p} is not a base pair of {x!r}")
    if which == "first":
        k = 2 * p.a - 1
    elif which == "second":
        k = 2 * p.b - 1
    else:
        raise DomainError(f"which must be 'first' or 'second', got {which!r}")
    return path_vertices(x)[k - 1]


def nesting_partition(x: str, a: int, b: int) -> tuple[list[str], str, list[str], str]:
    """Split ``x`` around the hill at ``a..b`` as ``1 u1 .. 1 ud 1 w 0 vd 0 .. v1 0 v``.

    Returns ``(us, w, vs, v)`` with ``us = [u1..ud]`` and ``vs = [v1..vd]``.
    """
    match = _match_table(x)
    enclosing = [p for p in range(1, a) if x[p - 1] == "1" and match[p] > b]
    stops = enclosing[1:] + [a]
    us = [x[e : s - 1] for e, s in zip(enclosing, stops)]
    w = x[a : b - 1]
    closes = [match[e] for e in enclosing]  # f_1 > f_2 > ... > f_d
    inner = [b] + closes[::-1]  # b, f_d, ..., f_1
    vs_rev = [x[lo : hi - 1] for lo, hi in zip(inner, inner[1:])]  # vd .. v1
    v = x[inner[-1] :]
    return us, w, vs_rev[::-1], v


def prefix_vertex_closed_form(x: str, p: BasePair, which: str) -> str:
    """Closed form of the path vertex at entry ``2a-1`` / ``2b-1``.

    first:  u1 0 .. ud 0 1 w 0 vd 1 .. v1 1 v
    second: u1 0 .. ud 0 w 0 1 vd 1 .. v1 1 v
    """
    us, w, vs, v = nesting_partition(x, p.a, p.b)
    head = "".join(u + "0" for u in us)
    tail = "".join(vi + "1" for vi in reversed(vs)) + v
    mid = "1" + w + "0" if which == "first" else w + "01"
    return head + mid + tail
