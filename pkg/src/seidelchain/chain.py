"""Block binary strings and the chain graphs they encode.

A block string 0^s1 1^t1 0^s2 ... 0^sk 1^tk (all exponents >= 1) describes a
bipartite graph on n = sum(s_i + t_i) vertices: the i-th 0-block contributes an
independent cell V_si, the j-th 1-block a cell V_tj, and a 0-vertex of block i
is adjacent to a 1-vertex of block j exactly when i <= j.  Neighborhoods of
the 1-cells are therefore nested, which characterizes these graphs as the
{C3, C5, 2K2}-free graphs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph

_ATOM = re.compile(r"\s*([01])(?:\^(\d+))?")


@dataclass(frozen=True)
class BlockString:
    """Run-length form of an alternating block binary string.

    blocks[i] = (s_i, t_i): the sizes of the i-th 0-block and 1-block.
    """

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("block string needs at least one (0-block, 1-block) pair")
        for s, t in self.blocks:
            if s < 1 or t < 1:
                raise ValueError("block sizes must be positive")

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(s + t for s, t in self.blocks)

    def caret(self) -> str:
        """Canonical rendering `0^s1 1^t1 ...` with ^1 omitted."""
        parts = []
        for s, t in self.blocks:
            parts.append("0" if s == 1 else f"0^{s}")
            parts.append("1" if t == 1 else f"1^{t}")
        return " ".join(parts)

    def literal(self) -> str:
        """Expanded 0/1 rendering."""
        return "".join("0" * s + "1" * t for s, t in self.blocks)

    def cells(self) -> tuple[tuple[str, int, int], ...]:
        """The 2k cells as (label, start index, size), in string order."""
        out = []
        pos = 0
        for s, t in self.blocks:
            out.append(("0", pos, s))
            pos += s
            out.append(("1", pos, t))
            pos += t
        return tuple(out)

    def __str__(self) -> str:
        return self.caret()


def parse_block_string(text: str) -> BlockString:
    """Parse caret form ("0^3 1^7"), literal form ("0001111111"), or a mix.

    The string must start with a 0-block and end with a 1-block; exponents
    must be positive; characters outside {0, 1, ^, digits, whitespace} are
    rejected.
    """
    if not text or not text.strip():
        raise ValueError("empty block string")
    runs: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        m = _ATOM.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"invalid character at position {pos}: {text[pos:]!r}")
        digit, exp = m.group(1), m.group(2)
        count = 1 if exp is None else int(exp)
        if count < 1:
            raise ValueError("zero exponent not allowed")
        if runs and runs[-1][0] == digit:
            runs[-1] = (digit, runs[-1][1] + count)
        else:
            runs.append((digit, count))
        pos = m.end()
    if not runs:
        raise ValueError("empty block string")
    if runs[0][0] != "0":
        raise ValueError("block string must start with a 0-block")
    if runs[-1][0] != "1":
        raise ValueError("block string must end with a 1-block")
    # Runs alternate by construction, so they pair up as (0-block, 1-block).
    blocks = tuple(
        (runs[i][1], runs[i + 1][1]) for i in range(0, len(runs), 2)
    )
    return BlockString(blocks)


@dataclass(frozen=True)
class ChainGraph(Graph):
    """A chain graph together with the block string that generated it.

    Vertices are indexed cell by cell in string order, so matrices and
    switching witnesses derived from the graph are reproducible bit for bit.
    """

    block_string: BlockString

    def cells(self) -> tuple[tuple[str, int, int], ...]:
        return self.block_string.cells()


def build_chain_graph(b: BlockString) -> ChainGraph:
    """Construct the chain graph of a block string.

    Edge rule: a vertex of the i-th 0-cell is adjacent to a vertex of the
    j-th 1-cell iff i <= j.  The result is connected: every 1-cell sees the
    first 0-cell and every 0-cell is seen by the last 1-cell.
    """
    n = b.n
    cells = b.cells()
    rows = [0] * n
    zero_cells = [(idx // 2 + 1, start, size) for idx, (lab, start, size) in enumerate(cells) if lab == "0"]
    one_cells = [(idx // 2 + 1, start, size) for idx, (lab, start, size) in enumerate(cells) if lab == "1"]
    for i, s_start, s_size in zero_cells:
        for j, t_start, t_size in one_cells:
            if i <= j:
                t_mask = ((1 << t_size) - 1) << t_start
                s_mask = ((1 << s_size) - 1) << s_start
                for v in range(s_start, s_start + s_size):
                    rows[v] |= t_mask
                for w in range(t_start, t_start + t_size):
                    rows[w] |= s_mask
    return ChainGraph(n, tuple(rows), b)


def chain_graph(text: str) -> ChainGraph:
    """Parse a block string and build its chain graph in one step."""
    return build_chain_graph(parse_block_string(text))


def is_chain_graph(g: Graph) -> bool:
    """Brute-force test that g has no induced C3, 2K2, or C5.

    Desk-scale oracle only: checks all 3-, 4- and 5-vertex subsets, capped at
    n <= 64.
    """
    if g.n > 64:
        raise ValueError("is_chain_graph is capped at 64 vertices")
    rows = g.rows
    verts = range(g.n)
    for a, b, c in combinations(verts, 3):
        if (rows[a] >> b) & (rows[b] >> c) & (rows[a] >> c) & 1:
            return False
    for quad in combinations(verts, 4):
        mask = 0
        for v in quad:
            mask |= 1 << v
        degs = sorted((rows[v] & mask).bit_count() for v in quad)
        if degs == [1, 1, 1, 1]:
            # Two disjoint induced edges.
            return False
    for quint in combinations(verts, 5):
        mask = 0
        for v in quint:
            mask |= 1 << v
        if all((rows[v] & mask).bit_count() == 2 for v in quint):
            # 2-regular on 5 vertices is necessarily a 5-cycle.
            return False
    return True
