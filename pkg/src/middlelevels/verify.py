"""Independent Hamilton-cycle checker for the middle levels graph.

Works from the textual vertex list only and shares nothing with the
generator beyond reading '0'/'1' strings.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb
from typing import Iterable

from .errors import ParseError


@dataclass
class VerifyReport:
    vertex_count: int
    expected_count: int
    duplicates: int
    bad_steps: int
    closes: bool

    @property
    def passed(self) -> bool:
        return (
            self.duplicates == 0
            and self.bad_steps == 0
            and self.closes
            and self.vertex_count == self.expected_count
        )

    def as_dict(self) -> dict:
        return {**asdict(self), "pass": self.passed}


def parse_vertices(lines: Iterable[str], n: int) -> list[int]:
    """Parse one vertex per line; blank lines are skipped."""
    width = 2 * n + 1
    out = []
    for lineno, raw in enumerate(lines, 1):
        s = raw.strip()
        if not s:
            continue
        if len(s) != width or s.strip("01"):
            raise ParseError(lineno, f"expected {width} characters of 0/1, got {s!r}")
        ones = s.count("1")
        if ones not in (n, n + 1):
            raise ParseError(lineno, f"weight {ones} is not {n} or {n + 1}")
        out.append(int(s, 2))
    return out


def verify_cycle(seq: Iterable[str], n: int, closed: bool = False) -> VerifyReport:
    """Check that ``seq`` lists a Hamilton cycle of G_n.

    With ``closed=True`` the input repeats its first vertex at the end; the
    repeat is dropped before checking.
    """
    verts = parse_vertices(seq, n)
    if closed and len(verts) >= 2 and verts[0] == verts[-1]:
        verts.pop()
    duplicates = len(verts) - len(set(verts))
    bad_steps = sum(
        1 for a, b in zip(verts, verts[1:]) if bin(a ^ b).count("1") != 1
    )
    closes = len(verts) >= 2 and bin(verts[0] ^ verts[-1]).count("1") == 1
    return VerifyReport(
        vertex_count=len(verts),
        expected_count=2 * comb(2 * n + 1, n),
        duplicates=duplicates,
        bad_steps=bad_steps,
        closes=closes,
    )
