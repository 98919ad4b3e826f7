"""Labeled simple graphs on the vertex set {1, ..., n}.

Two text formats are read: a line-oriented edge list::

    # optional comments
    n 3
    e 1 2
    e 2 3

and graph6 (short form, n <= 62), whose 0-based vertices are shifted to
1..n. Only the edge list is written back; it is emitted in canonical form
with edges sorted, so parse -> emit is a fixed point on canonical input.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from urep.errors import BadSize, BadVertexSet, DuplicateEdge, ParseError, RangeError

Edge = tuple[int, int]

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise BadSize(f"graph needs n >= 1, got {self.n!r}")
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if not 1 <= i < j <= self.n:
                raise BadVertexSet(f"edge ({i},{j}) must satisfy 1 <= i < j <= {self.n}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> LabeledGraph:
        """Build from unordered pairs in either orientation."""
        return cls(n, frozenset((min(p), max(p)) for p in pairs))

    def has_edge(self, x: int, y: int) -> bool:
        return (min(x, y), max(x, y)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * (self.n + 1)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg[1:]

    def relabel(self, labels: tuple[int, ...]) -> LabeledGraph:
        """Give vertex v the label ``labels[v - 1]``."""
        if sorted(labels) != list(range(1, self.n + 1)):
            raise BadVertexSet(f"labels must be a permutation of 1..{self.n}")
        return LabeledGraph.from_pairs(self.n, ((labels[i - 1], labels[j - 1]) for i, j in self.edges))


def all_pairs(n: int) -> list[Edge]:
    return list(combinations(range(1, n + 1), 2))


def complete_graph(n: int) -> LabeledGraph:
    if not isinstance(n, int) or n < 1:
        raise BadSize(f"complete graph needs n >= 1, got {n!r}")
    return LabeledGraph(n, frozenset(all_pairs(n)))


def empty_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, frozenset())


def supplement(g: LabeledGraph) -> LabeledGraph:
    """Relabel every vertex x as n + 1 - x."""
    m = g.n + 1
    return LabeledGraph(g.n, frozenset((m - j, m - i) for i, j in g.edges))


def non_edges(g: LabeledGraph) -> list[Edge]:
    return [p for p in all_pairs(g.n) if p not in g.edges]


def induced_subgraph(g: LabeledGraph, vertices: Iterable[int]) -> tuple[LabeledGraph, dict[int, int]]:
    """Induced subgraph on ``vertices``, relabeled 1..|B| in numeric order.

    Returns the subgraph together with the map old label -> new label.
    """
    keep = sorted(set(vertices))
    if not keep:
        raise BadVertexSet("vertex set must be nonempty")
    if keep[0] < 1 or keep[-1] > g.n:
        raise BadVertexSet(f"vertex set {keep} is not a subset of 1..{g.n}")
    mapping = {v: r for r, v in enumerate(keep, start=1)}
    edges = frozenset((mapping[i], mapping[j]) for i, j in g.edges if i in mapping and j in mapping)
    return LabeledGraph(len(keep), edges), mapping


def graphs_on(n: int) -> Iterator[LabeledGraph]:
    """Every labeled graph on [n], in order of the edge-subset bitmask."""
    pairs = all_pairs(n)
    for mask in range(1 << len(pairs)):
        yield LabeledGraph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


# -- edge-list format ----------------------------------------------------------


def _int_token(tok: str, lineno: int, col: int) -> int:
    if not (tok.isascii() and tok.isdigit()):
        raise ParseError(f"expected a non-negative integer, got {tok!r}", lineno, col)
    return int(tok)


def _tokens(line: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based start columns."""
    out = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def parse_edge_list(text: str) -> LabeledGraph:
    n = None
    edges: set[Edge] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _tokens(line)
        head, head_col = toks[0]
        if head == "n":
            if n is not None:
                raise ParseError("duplicate 'n' header", lineno, head_col)
            if len(toks) != 2:
                raise ParseError("header must be 'n <N>'", lineno, head_col)
            n = _int_token(toks[1][0], lineno, toks[1][1])
            if n < 1:
                raise RangeError(f"vertex count must be >= 1, got {n}", lineno, toks[1][1])
        elif head == "e":
            if n is None:
                raise ParseError("edge line before 'n <N>' header", lineno, head_col)
            if len(toks) != 3:
                raise ParseError("edge line must be 'e <i> <j>'", lineno, head_col)
            (ti, ci), (tj, cj) = toks[1], toks[2]
            i = _int_token(ti, lineno, ci)
            j = _int_token(tj, lineno, cj)
            for v, c in ((i, ci), (j, cj)):
                if not 1 <= v <= n:
                    raise RangeError(f"vertex {v} outside 1..{n}", lineno, c)
            if i >= j:
                raise ParseError(f"edge ({i},{j}) must satisfy i < j", lineno, ci)
            if (i, j) in edges:
                raise DuplicateEdge(f"duplicate edge ({i},{j})", lineno, head_col)
            edges.add((i, j))
        else:
            raise ParseError(f"unknown line type {head!r}; expected 'n', 'e' or '#'", lineno, head_col)
    if n is None:
        raise ParseError("missing 'n <N>' header")
    return LabeledGraph(n, frozenset(edges))


def to_edge_list(g: LabeledGraph) -> str:
    lines = [f"n {g.n}"] + [f"e {i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# -- graph6 --------------------------------------------------------------------


def decode_graph6(line: str, lineno: int | None = None) -> LabeledGraph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise ParseError("empty graph6 string", lineno)
    for col, ch in enumerate(s, start=1):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", lineno, col)
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise RangeError(f"only graph6 short form (n <= {GRAPH6_MAX_N}) is supported", lineno, 1)
    if n < 1:
        raise RangeError("graph6 graph has no vertices", lineno, 1)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    need = (len(pairs) + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ParseError(f"graph6 body for n={n} needs {need} characters, got {len(body)}", lineno, 2)
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[len(pairs) :]):
        raise ParseError("nonzero padding bits in graph6 body", lineno, len(s))
    edges = frozenset((i + 1, j + 1) for (i, j), b in zip(pairs, bits) if b)
    return LabeledGraph(n, edges)


def encode_graph6(g: LabeledGraph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise RangeError(f"only graph6 short form (n <= {GRAPH6_MAX_N}) is supported")
    bits = [int(g.has_edge(i + 1, j + 1)) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for p in range(0, len(bits), 6):
        v = 0
        for b in bits[p : p + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return "".join(chars)


def iter_graph6(text: str) -> Iterator[LabeledGraph]:
    """Decode a graph6 corpus, one graph per non-blank line."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            yield decode_graph6(line, lineno)


def parse_graph(text: str, fmt: str = "edges") -> LabeledGraph:
    if fmt in ("edges", "edge-list"):
        return parse_edge_list(text)
    if fmt == "graph6":
        graphs = list(iter_graph6(text))
        if len(graphs) != 1:
            raise ParseError(f"expected exactly one graph6 line, found {len(graphs)}")
        return graphs[0]
    raise ValueError(f"unknown graph format {fmt!r}")
