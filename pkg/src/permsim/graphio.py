"""Graph and matrix ingestion: graph6, DIMACS edge lists, plain matrix text.

graph6 follows the nauty format description: one byte ``n + 63`` (short
form only, n <= 62), then the upper triangle of the adjacency matrix in
column order (0,1), (0,2), (1,2), (0,3), ... packed six bits per byte,
most significant bit first, each byte offset by 63.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .matrix import Matrix
from .oracle import brute_force_similar
from .ring import EXACT, RingConfig

GRAPH6_HEADER = ">>graph6<<"
ENUMERATION_CEILING = 7


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n, edges) -> "Graph":
        return cls(n, frozenset(map(tuple, edges)))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def _triangle_pairs(n: int):
    return ((i, j) for j in range(1, n) for i in range(j))


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    values = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise FormatError(f"character {ch!r} outside graph6 range")
        values.append(v)
    n = values[0]
    if n == 63:
        raise FormatError("long-form graph6 (n >= 63) is not supported")
    nbits = n * (n - 1) // 2
    body = values[1:]
    if len(body) != -(-nbits // 6):
        raise FormatError(f"graph6 body has {len(body)} bytes, n={n} needs {-(-nbits // 6)}")
    bits = []
    for v in body:
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits")
    edges = [pair for pair, bit in zip(_triangle_pairs(n), bits) if bit]
    return Graph.from_edges(n, edges)


def to_graph6(G: Graph) -> str:
    bits = [1 if pair in G.edges else 0 for pair in _triangle_pairs(G.n)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(G.n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return "".join(chars)


def parse_matrix_text(text: str) -> Matrix:
    """First line n, then n rows of n integers; returns an exact matrix."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty matrix text")
    try:
        (n,) = map(int, lines[0])
    except ValueError:
        raise FormatError(f"bad dimension line: {' '.join(lines[0])!r}") from None
    if n <= 0:
        raise FormatError(f"dimension must be positive, got {n}")
    rows = lines[1:]
    if len(rows) != n:
        raise FormatError(f"expected {n} rows, got {len(rows)}")
    out = []
    for r, toks in enumerate(rows):
        if len(toks) != n:
            raise FormatError(f"row {r} has {len(toks)} entries, expected {n}")
        try:
            out.append([int(t) for t in toks])
        except ValueError:
            raise FormatError(f"non-integer token in row {r}") from None
    return Matrix(out, EXACT)


def parse_dimacs(text: str) -> Graph:
    """DIMACS edge format: ``p edge n m`` header then ``e u v`` (1-indexed)."""
    n = m = None
    edges = set()
    for lineno, ln in enumerate(text.splitlines(), 1):
        toks = ln.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if n is not None or len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise FormatError(f"line {lineno}: bad problem line")
            n, m = int(toks[2]), int(toks[3])
        elif toks[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            u, v = int(toks[1]) - 1, int(toks[2]) - 1
            key = (min(u, v), max(u, v))
            if key in edges:
                raise FormatError(f"line {lineno}: duplicate edge")
            edges.add(key)
        else:
            raise FormatError(f"line {lineno}: unknown record {toks[0]!r}")
    if n is None:
        raise FormatError("missing 'p edge' line")
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def adjacency_matrix(G: Graph, ring: RingConfig = EXACT) -> Matrix:
    a = np.zeros((G.n, G.n), dtype=np.int64)
    for u, v in G.edges:
        a[u, v] = a[v, u] = 1
    return Matrix(a, ring)


def graph_from_mask(n: int, mask: int) -> Graph:
    """Labeled graph whose bit k is the k-th pair in graph6 order."""
    return Graph.from_edges(n, [pair for k, pair in enumerate(_triangle_pairs(n))
                                if mask >> k & 1])


def enumerate_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices in mask order.

    With ``dedup`` only the first graph of each isomorphism class is kept;
    membership is decided by the brute-force oracle, after a sorted degree
    sequence check that only skips pairs which cannot be isomorphic.
    """
    if not 1 <= n <= ENUMERATION_CEILING:
        raise ValueError(f"enumeration supports 1 <= n <= {ENUMERATION_CEILING}")
    reps: dict[tuple[int, ...], list[Matrix]] = {}
    for mask in range(1 << (n * (n - 1) // 2)):
        G = graph_from_mask(n, mask)
        if not dedup:
            yield G
            continue
        key = tuple(sorted(G.degrees()))
        A = adjacency_matrix(G)
        bucket = reps.setdefault(key, [])
        if any(brute_force_similar(R, A) is not None for R in bucket):
            continue
        bucket.append(A)
        yield G


def isomorphism_classes(n: int) -> list[Graph]:
    return list(enumerate_graphs(n, dedup=True))


def dedup_graphs(graphs: list[Graph]) -> list[Graph]:
    """Keep the first graph of each isomorphism class, preserving order."""
    kept: list[tuple[Graph, Matrix]] = []
    for G in graphs:
        A = adjacency_matrix(G)
        if any(H.n == G.n and sorted(H.degrees()) == sorted(G.degrees())
               and brute_force_similar(R, A) is not None for H, R in kept):
            continue
        kept.append((G, A))
    return [G for G, _ in kept]


def read_graph6_file(text: str) -> list[Graph]:
    return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]


def detect_format(text: str) -> str:
    """'dimacs' for a ``p edge`` header, 'matrix' for a leading integer, else 'graph6'."""
    for ln in text.splitlines():
        toks = ln.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            return "dimacs"
        if len(toks) == 1 and toks[0].lstrip("-").isdigit():
            return "matrix"
        return "graph6"
    return "graph6"
