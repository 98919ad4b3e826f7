"""Verifying and constructing words that u-represent labeled graphs.

A word w with alphabet exactly [n] u-represents G = ([n], E) when, for every
pair x < y, the restriction of w to {x, y} contains a u-match exactly when
xy is *not* an edge.

For |u| >= 3 every labeled graph is u-representable. ``construct`` builds a
witness by starting from 12...n, which represents K_n, and deleting the
non-edges one at a time; each deletion prepends a prefix to the current word.
Which prefix is used depends on the shape of u (after possibly complementing
and reversing it), see ``plan``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from urep.errors import AlphabetMismatch, BadEdgeOrder, UnsupportedPattern, WrongCore
from urep.graphs import Edge, LabeledGraph, all_pairs, complete_graph, non_edges, supplement
from urep.words import (
    Pattern,
    Word,
    complement,
    initial_permutation,
    power,
    reverse,
    substitute,
)

# -- verification --------------------------------------------------------------


class ViolationKind(str, enum.Enum):
    EDGE_WITH_MATCH = "edge-with-match"
    NON_EDGE_WITHOUT_MATCH = "non-edge-without-match"


@dataclass(frozen=True)
class Violation:
    pair: Edge
    kind: ViolationKind
    position: int | None = None  # first u-match start in the pair restriction

    def __str__(self) -> str:
        x, y = self.pair
        s = f"pair ({x},{y}) {self.kind.value}"
        if self.position is not None:
            s += f" at {self.position}"
        return s


@dataclass(frozen=True)
class VerifyReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _pair_codes(w: Sequence[int], n: int) -> dict[Edge, list[str]]:
    """For each pair x < y, the restriction of w to {x, y} as '1'/'2' codes."""
    codes: dict[Edge, list[str]] = {p: [] for p in all_pairs(n)}
    for z in w:
        for y in range(1, n + 1):
            if y < z:
                codes[(y, z)].append("2")
            elif y > z:
                codes[(z, y)].append("1")
    return codes


def _first_match(s: str, u: str, constant: bool) -> int:
    """0-based start of the first u-match in a pair restriction coded over '1'/'2'.

    A window over a two-letter alphabet reduces to itself when both letters
    occur in it and to all 1s otherwise, so for a non-constant pattern only
    literal occurrences count, and for 1^k any run of k equal letters does.
    """
    if not constant:
        return s.find(u)
    hits = [p for p in (s.find(u), s.find(u.replace("1", "2"))) if p >= 0]
    return min(hits) if hits else -1


def verify(w: Sequence[int], g: LabeledGraph, u: Pattern) -> VerifyReport:
    """Check that ``w`` u-represents ``g``; report every failing pair."""
    expected = set(range(1, g.n + 1))
    present = set(w)
    if present != expected:
        missing = sorted(expected - present)
        extra = sorted(present - expected)
        raise AlphabetMismatch(
            f"word alphabet must be exactly 1..{g.n} (A(w)=[n]); missing {missing}, unexpected {extra}"
        )
    target = str(u)
    constant = u.is_constant()
    violations = []
    for pair, code in _pair_codes(w, g.n).items():
        p = _first_match("".join(code), target, constant)
        if pair in g.edges:
            if p >= 0:
                violations.append(Violation(pair, ViolationKind.EDGE_WITH_MATCH, p + 1))
        elif p < 0:
            violations.append(Violation(pair, ViolationKind.NON_EDGE_WITHOUT_MATCH))
    return VerifyReport(tuple(sorted(violations, key=lambda v: v.pair)))


def represents(w: Sequence[int], g: LabeledGraph, u: Pattern) -> bool:
    return verify(w, g, u).ok


# -- construction plans --------------------------------------------------------


class Transform(str, enum.Enum):
    SUPPLEMENT_GRAPH = "supplement"
    COMPLEMENT_WORD = "complement"
    REVERSE_WORD = "reverse"


@dataclass(frozen=True)
class OneK:
    """u = 1^k: prefix i^(k-1) pi i p(w)."""

    k: int

    def __str__(self) -> str:
        return f"OneK(k={self.k})"


@dataclass(frozen=True)
class BlockReturn:
    """u = 1^a 2^b 1 tail: prefix u[i,j] 1^(b+1) 2^(b+1) ... n^(b+1)."""

    a: int
    b: int
    tail: tuple[int, ...]

    def __str__(self) -> str:
        tail = "".join(map(str, self.tail))
        return f"BlockReturn(a={self.a}, b={self.b}, tail={tail or '-'})"


@dataclass(frozen=True)
class OnesTwo:
    """u = 1^(k-1) 2: prefix built from increasing runs above i and j."""

    k: int

    def __str__(self) -> str:
        return f"OnesTwo(k={self.k})"


@dataclass(frozen=True)
class OnesTwos:
    """u = 1^a 2^b with a, b >= 2: prefix u[i,j] 12...n 12...n."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"OnesTwos(a={self.a}, b={self.b})"


Core = OneK | BlockReturn | OnesTwo | OnesTwos


@dataclass(frozen=True)
class ConstructionPlan:
    pre_transforms: tuple[Transform, ...]
    core: Core
    post_transforms: tuple[Transform, ...]
    effective_pattern: Pattern

    def summary(self) -> str:
        pre = ", ".join(t.value for t in self.pre_transforms)
        post = ", ".join(t.value for t in self.post_transforms)
        return f"plan: pre=[{pre}] core={self.core} pattern={self.effective_pattern} post=[{post}]"


def _runs(u: Sequence[int]) -> list[tuple[int, int]]:
    """Run-length encoding as (letter, length) pairs."""
    out: list[tuple[int, int]] = []
    for x in u:
        if out and out[-1][0] == x:
            out[-1] = (x, out[-1][1] + 1)
        else:
            out.append((x, 1))
    return out


def _core_for(u: Pattern) -> Core | None:
    """The core for a 1-leading pattern, or None for 1 2^(k-1)."""
    k = len(u)
    runs = _runs(u.letters)
    if len(runs) == 1:
        return OneK(k)
    (_, a), (_, b) = runs[0], runs[1]
    if len(runs) > 2:
        return BlockReturn(a, b, tuple(u.letters[a + b + 1 :]))
    if b == 1:
        return OnesTwo(k)
    if a == 1:
        return None
    return OnesTwos(a, b)


def plan(u: Pattern) -> ConstructionPlan:
    """Choose the construction for ``u``.

    2-leading patterns are handled by supplementing the graph, planning for
    the complemented pattern, and complementing the final word. 1 2^(k-1) is
    handled through 1^(k-1) 2 by a supplement plus complement and reverse.
    Chains are not simplified.
    """
    if len(u) < 3:
        raise UnsupportedPattern(
            f"no universal construction for |u| = {len(u)}; "
            "use bounded search ('urep search') to decide small cases"
        )
    if u[0] == 2:
        inner = plan(u.complemented())
        return ConstructionPlan(
            (Transform.SUPPLEMENT_GRAPH,) + inner.pre_transforms,
            inner.core,
            inner.post_transforms + (Transform.COMPLEMENT_WORD,),
            inner.effective_pattern,
        )
    core = _core_for(u)
    if core is None:
        k = len(u)
        return ConstructionPlan(
            (Transform.SUPPLEMENT_GRAPH,),
            OnesTwo(k),
            (Transform.COMPLEMENT_WORD, Transform.REVERSE_WORD),
            Pattern((1,) * (k - 1) + (2,)),
        )
    return ConstructionPlan((), core, (), u)


# -- prefixes ------------------------------------------------------------------


def _check_edge(i: int, j: int, n: int) -> None:
    if not 1 <= i < j <= n:
        raise BadEdgeOrder(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")


def prefix_one_k(i: int, j: int, k: int, n: int, w: Sequence[int]) -> Word:
    """i^(k-1) pi i p(w), with pi the ascending order of [n] minus {i, j}."""
    _check_edge(i, j, n)
    if k < 3:
        raise WrongCore(f"1^k construction needs k >= 3, got {k}")
    others = tuple(v for v in range(1, n + 1) if v not in (i, j))
    return power(i, k - 1) + others + (i,) + initial_permutation(w)


def prefix_block_return(i: int, j: int, u: Pattern, n: int) -> Word:
    _check_edge(i, j, n)
    core = _core_for(u) if u[0] == 1 else None
    if not isinstance(core, BlockReturn):
        raise WrongCore(f"pattern {u} is not of the form 1^a 2^b 1 ...")
    blocks = tuple(v for v in range(1, n + 1) for _ in range(core.b + 1))
    return substitute(u, i, j) + blocks


def prefix_ones_two(i: int, j: int, k: int, n: int) -> Word:
    _check_edge(i, j, n)
    if k < 3:
        raise WrongCore(f"1^(k-1) 2 construction needs k >= 3, got {k}")
    return (
        power(i, k - 2)
        + tuple(range(i + 1, j))
        + tuple(range(j + 1, n + 1))
        + (i, j)
        + tuple(range(j + 1, n + 1))
        + tuple(range(i + 1, n + 1))
    )


def prefix_ones_twos(i: int, j: int, u: Pattern, n: int) -> Word:
    _check_edge(i, j, n)
    core = _core_for(u) if u[0] == 1 else None
    if not isinstance(core, OnesTwos):
        raise WrongCore(f"pattern {u} is not of the form 1^a 2^b with a, b >= 2")
    ident = tuple(range(1, n + 1))
    return substitute(u, i, j) + ident + ident


def core_prefix(core: Core, u: Pattern, i: int, j: int, n: int, w: Sequence[int]) -> Word:
    if isinstance(core, OneK):
        return prefix_one_k(i, j, core.k, n, w)
    if isinstance(core, BlockReturn):
        return prefix_block_return(i, j, u, n)
    if isinstance(core, OnesTwo):
        return prefix_ones_two(i, j, core.k, n)
    return prefix_ones_twos(i, j, u, n)


# -- construction --------------------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    removed_edge: Edge
    prefix: Word
    cumulative_length: int


@dataclass(frozen=True)
class ConstructionTrace:
    plan: ConstructionPlan
    graph: LabeledGraph  # the input graph after pre-transforms
    initial_word: Word
    steps: tuple[TraceStep, ...]
    core_word: Word  # before post-transforms
    final_word: Word

    def intermediates(self) -> Iterator[tuple[LabeledGraph, Word]]:
        """(graph, word) after each step, under the effective pattern.

        Words are rebuilt from the recorded prefixes, so this also checks
        that the steps account for the whole core word.
        """
        n = self.graph.n
        g = complete_graph(n)
        w = self.initial_word
        yield g, w
        removed: set[Edge] = set()
        for step in self.steps:
            removed.add(step.removed_edge)
            g = LabeledGraph(n, g.edges - removed)
            w = step.prefix + w
            yield g, w


def _apply_post(w: Word, transforms: Sequence[Transform], n: int) -> Word:
    for t in transforms:
        w = complement(w, n) if t is Transform.COMPLEMENT_WORD else reverse(w)
    return w


def construct(g: LabeledGraph, u: Pattern) -> tuple[Word, ConstructionTrace]:
    """Build a word that u-represents ``g`` (requires |u| >= 3)."""
    p = plan(u)
    h = g
    for _ in p.pre_transforms:
        h = supplement(h)
    n = h.n
    initial = tuple(range(1, n + 1))
    w = initial
    steps = []
    for i, j in non_edges(h):
        prefix = core_prefix(p.core, p.effective_pattern, i, j, n, w)
        w = prefix + w
        steps.append(TraceStep((i, j), prefix, len(w)))
    # 12...n represents K_n for every pattern of length >= 3, so it is
    # returned as is rather than pushed through the word transforms
    final = _apply_post(w, p.post_transforms, n) if steps else w
    return final, ConstructionTrace(p, h, initial, tuple(steps), w, final)


def length_bound(n: int, removed: int, k: int) -> int:
    """Upper bound on |construct(G, u)| with ``removed`` non-edges."""
    return n + removed * k * (n + 1)
