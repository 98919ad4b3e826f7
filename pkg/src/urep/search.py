"""Bounded exhaustive search for u-representing words.

Candidates are words over [n] containing every letter, enumerated by length
and then lexicographically. The first candidate that u-represents the graph
is returned, so results are reproducible and do not depend on the budget
beyond it being large enough.

The enumeration is a depth-first walk that tracks, for every pair of
letters, the tail of the pair restriction. Two prunes are applied, neither
of which can skip a representing word: a prefix whose restriction to an
edge pair already contains a u-match (a consecutive factor of a prefix
stays a factor of every extension), and a prefix too short to still fit the
letters it is missing.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from urep.errors import BudgetTooSmall, TooManyLabelings
from urep.graphs import LabeledGraph, graphs_on
from urep.represent import construct, verify
from urep.words import Pattern, Word

MAX_SWEEP_N = 8
THREADS_ENV = "UREP_THREADS"


@dataclass(frozen=True)
class SearchConfig:
    max_len: int
    stop_at_first: bool = True
    labeling_sweep: bool = False
    threads: int | None = None  # None reads UREP_THREADS, defaulting to 1


@dataclass(frozen=True)
class SearchOutcome:
    found: Word | None
    words_examined: int
    budget: int
    hits: int = 0  # representing words seen; > 1 only when stop_at_first is off


def default_budget(u: Pattern, n: int) -> int | None:
    """2n for u = 12 (and its complement 21); no default for other patterns."""
    if u.letters in ((1, 2), (2, 1)):
        return 2 * n
    return None


def _threads(cfg: SearchConfig) -> int:
    if cfg.threads is not None:
        return max(1, cfg.threads)
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _window_matches(window: str, u: str, constant: bool) -> bool:
    if constant:
        return window == u or window == u.replace("1", "2")
    return window == u


def _scan(g: LabeledGraph, u: Pattern, length: int, first: int, stop_at_first: bool) -> tuple[Word | None, int, int]:
    """Walk all candidates of ``length`` starting with letter ``first``.

    Returns (first hit, leaves examined up to and including it, total hits).
    Leaves are candidates that survive pruning and contain every letter.
    """
    n = g.n
    k = len(u)
    target = str(u)
    constant = u.is_constant()
    is_edge = [[False] * (n + 1) for _ in range(n + 1)]
    for i, j in g.edges:
        is_edge[i][j] = is_edge[j][i] = True
    # per ordered pair (x, y): tail of restriction to {x, y} coded '1' for the
    # smaller letter and '2' for the larger, at most k - 1 long
    tail = [[""] * (n + 1) for _ in range(n + 1)]
    matched = [[False] * (n + 1) for _ in range(n + 1)]
    count = [0] * (n + 1)
    word = [0] * length
    state = {"missing": n, "unmatched": n * (n - 1) // 2 - len(g.edges)}
    found: Word | None = None
    examined = 0
    hits = 0

    def push(x: int) -> list | None:
        undo = []
        for y in range(1, n + 1):
            if y == x:
                continue
            t = tail[x][y] + ("1" if x < y else "2")
            hit = len(t) >= k and _window_matches(t[-k:], target, constant)
            undo.append((y, tail[x][y], matched[x][y]))
            new_tail = t[-(k - 1):]
            tail[x][y] = tail[y][x] = new_tail
            if hit and not matched[x][y]:
                if is_edge[x][y]:
                    _pop(x, undo)
                    return None
                matched[x][y] = matched[y][x] = True
                state["unmatched"] -= 1
        count[x] += 1
        if count[x] == 1:
            state["missing"] -= 1
        return undo

    def _pop(x: int, undo: list) -> None:
        for y, old_tail, old_matched in undo:
            tail[x][y] = tail[y][x] = old_tail
            if matched[x][y] and not old_matched:
                state["unmatched"] += 1
            matched[x][y] = matched[y][x] = old_matched

    def pop(x: int, undo: list) -> None:
        _pop(x, undo)
        count[x] -= 1
        if count[x] == 0:
            state["missing"] += 1

    def walk(pos: int) -> bool:
        nonlocal found, examined, hits
        if pos == length:
            examined += 1
            if state["unmatched"] == 0:
                hits += 1
                if found is None:
                    found = tuple(word)
                return stop_at_first
            return False
        letters = (first,) if pos == 0 else range(1, n + 1)
        for x in letters:
            undo = push(x)
            if undo is None:
                continue
            if state["missing"] <= length - pos - 1:
                word[pos] = x
                if walk(pos + 1):
                    pop(x, undo)
                    return True
            pop(x, undo)
        return False

    walk(0)
    return found, examined, hits


def _scan_args(args):
    return _scan(*args)


def find_representation(g: LabeledGraph, u: Pattern, cfg: SearchConfig) -> SearchOutcome:
    """First word (by length, then lexicographically) that u-represents ``g``.

    The candidate space of each length is split by first letter; with
    several workers the partitions run concurrently and are merged in
    letter order, so the result equals the sequential one.
    """
    n = g.n
    if cfg.max_len < n:
        raise BudgetTooSmall(f"budget {cfg.max_len} is below n = {n}; every letter must occur")
    workers = min(_threads(cfg), n)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    found: Word | None = None
    examined = 0
    hits = 0
    try:
        for length in range(n, cfg.max_len + 1):
            jobs = [(g, u, length, first, cfg.stop_at_first) for first in range(1, n + 1)]
            results = pool.map(_scan_args, jobs) if pool else map(_scan_args, jobs)
            for hit, seen, nhits in results:
                if found is None or not cfg.stop_at_first:
                    examined += seen
                hits += nhits
                if found is None and hit is not None:
                    found = hit
                    if cfg.stop_at_first:
                        break
            if found is not None and cfg.stop_at_first:
                break
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    if found is not None and not verify(found, g, u).ok:
        raise RuntimeError(f"search returned a word that does not verify: {found}")
    return SearchOutcome(found, examined, cfg.max_len, hits)


def classify_labelings(h: LabeledGraph, u: Pattern, cfg: SearchConfig) -> list[tuple[tuple[int, ...], SearchOutcome]]:
    """Search every relabeling of ``h``; vertex v gets label ``perm[v - 1]``."""
    if h.n > MAX_SWEEP_N:
        raise TooManyLabelings(f"{h.n}! labelings is too many; sweeps are limited to n <= {MAX_SWEEP_N}")
    return [(perm, find_representation(h.relabel(perm), u, cfg)) for perm in permutations(range(1, h.n + 1))]


@dataclass(frozen=True)
class Discrepancy:
    graph: LabeledGraph
    construct_ok: bool
    search_found: bool


@dataclass(frozen=True)
class CrossCheckReport:
    pattern: Pattern
    graphs_checked: int
    discrepancies: tuple[Discrepancy, ...]

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def oracle_cross_check(n_max: int, u: Pattern, cfg: SearchConfig | None = None) -> CrossCheckReport:
    """Run construct and bounded search on every graph with at most ``n_max`` vertices.

    Without ``cfg`` the search budget for each graph is the length of the
    constructed word, which the construction proves sufficient.
    """
    if n_max > 4:
        raise ValueError(f"full graph enumeration is limited to n_max <= 4, got {n_max}")
    checked = 0
    bad = []
    for n in range(1, n_max + 1):
        for g in graphs_on(n):
            w, _ = construct(g, u)
            ok = verify(w, g, u).ok
            budget = len(w) if cfg is None else max(cfg.max_len, n)
            sub = SearchConfig(budget, threads=None if cfg is None else cfg.threads)
            outcome = find_representation(g, u, sub)
            checked += 1
            if not ok or outcome.found is None:
                bad.append(Discrepancy(g, ok, outcome.found is not None))
    return CrossCheckReport(u, checked, tuple(bad))
