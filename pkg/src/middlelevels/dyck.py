"""Bitstring and Dyck word primitives.

Bitstrings are plain ``str`` values over ``'0'``/``'1'``. Positions are
1-based with position 1 the leftmost character, so ``x[p - 1]`` is bit ``p``.
"""

from __future__ import annotations

from itertools import accumulate
from typing import Iterator

from .errors import DomainError, SizeLimitError

DYCK_CAP = 14

_COMPLEMENT = str.maketrans("01", "10")


def check_bits(x: str) -> str:
    if any(c not in "01" for c in x):
        raise DomainError(f"not a bitstring: {x!r}")
    return x


def heights(x: str) -> list[int]:
    """Height profile ``h[0..len(x)]`` with ``h[0] = 0`` and +1/-1 steps."""
    return [0, *accumulate(1 if c == "1" else -1 for c in x)]


def is_dyck(x: str) -> bool:
    h = 0
    for c in x:
        h += 1 if c == "1" else -1
        if h < 0:
            return False
    return h == 0


def is_dyck_minus(x: str) -> bool:
    """Balanced, and exactly one prefix has more 0s than 1s."""
    h = 0
    negative = 0
    for c in x:
        h += 1 if c == "1" else -1
        if h < 0:
            negative += 1
    return h == 0 and negative == 1


def _check_cap(n: int, max_n: int | None, default: int) -> None:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    cap = default if max_n is None else max_n
    if n > cap:
        raise SizeLimitError(f"n={n} exceeds the size cap {cap}")


def iter_dyck(n: int) -> Iterator[str]:
    """Yield D_n in lexicographic order ('0' < '1') without a size check."""
    length = 2 * n
    buf = []

    def rec(ones: int, zeros: int) -> Iterator[str]:
        if ones + zeros == length:
            yield "".join(buf)
            return
        if zeros < ones:
            buf.append("0")
            yield from rec(ones, zeros + 1)
            buf.pop()
        if ones < n:
            buf.append("1")
            yield from rec(ones + 1, zeros)
            buf.pop()

    yield from rec(0, 0)


def enumerate_dyck(n: int, max_n: int | None = None) -> list[str]:
    """All Dyck words of semilength ``n`` in lexicographic order."""
    _check_cap(n, max_n, DYCK_CAP)
    return list(iter_dyck(n))


def match_close(x: str, a: int) -> int:
    """Position of the 0 matching the 1 at position ``a`` (1-based)."""
    if x[a - 1] != "1":
        raise DomainError(f"position {a} of {x!r} is not an opening bit")
    h = 0
    for p in range(a, len(x) + 1):
        h += 1 if x[p - 1] == "1" else -1
        if h == 0:
            return p
    raise DomainError(f"opening bit at {a} of {x!r} is unmatched")


def canonic_decompose(x: str) -> tuple[str, str]:
    """Split a non-empty Dyck word as ``x = 1 u 0 v`` with ``u, v`` Dyck."""
    if not x:
        raise DomainError("canonic decomposition of the empty word")
    if not is_dyck(x):
        raise DomainError(f"not a Dyck word: {x!r}")
    b = match_close(x, 1)
    return x[1 : b - 1], x[b:]


def complement(x: str) -> str:
    return x.translate(_COMPLEMENT)


def rev_complement(x: str) -> str:
    return x[::-1].translate(_COMPLEMENT)


def rotate(x: str) -> str:
    """Move the root to its leftmost child: ``1 u 0 v -> u 1 v 0``."""
    u, v = canonic_decompose(x)
    return u + "1" + v + "0"
