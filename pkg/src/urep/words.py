"""Words over positive-integer alphabets and consecutive pattern matching.

Words are plain tuples of ints. Letters are 1-based; the empty word is
allowed. Patterns are reduced words over {1, 2} of length at least two and
get their own small type because they are validated once and reused.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from urep.errors import AlphabetTooSmall, BadEdgeOrder, InvalidPattern, InvalidWord, ParseError

Word = tuple[int, ...]


def as_word(letters: Iterable[int]) -> Word:
    w = tuple(letters)
    for x in w:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise InvalidWord(f"letters must be positive integers, got {x!r}")
    return w


def power(letter: int, k: int) -> Word:
    """The word made of ``k`` copies of ``letter``."""
    return (letter,) * k


def alphabet(w: Sequence[int]) -> frozenset[int]:
    return frozenset(w)


def reduce(w: Sequence[int]) -> Word:
    """Replace the i-th smallest distinct letter of ``w`` by i."""
    rank = {x: r for r, x in enumerate(sorted(set(w)), start=1)}
    return tuple(rank[x] for x in w)


def restrict(w: Sequence[int], letters: Iterable[int]) -> Word:
    keep = set(letters)
    return tuple(x for x in w if x in keep)


def initial_permutation(w: Sequence[int]) -> Word:
    """Keep only the leftmost occurrence of each letter."""
    return tuple(dict.fromkeys(w))


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def complement(w: Sequence[int], n: int) -> Word:
    """Map each letter x to n + 1 - x for a declared alphabet size ``n``.

    ``n`` is explicit rather than taken from ``max(w)`` so that the
    result agrees with complementing a graph on [n] even when ``w`` is a
    restriction that lost its largest letters.
    """
    if w and max(w) > n:
        raise AlphabetTooSmall(f"letter {max(w)} exceeds declared alphabet size {n}")
    return tuple(n + 1 - x for x in w)


@dataclass(frozen=True)
class Pattern:
    """A reduced word over {1, 2} of length >= 2."""

    letters: Word

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if len(letters) < 2:
            raise InvalidPattern(f"pattern must have length >= 2, got {len(letters)}")
        if any(x not in (1, 2) for x in letters):
            raise InvalidPattern(f"pattern letters must be 1 or 2: {letters}")
        if reduce(letters) != letters:
            raise InvalidPattern(f"pattern is not reduced: {letters}")

    @classmethod
    def parse(cls, text: str) -> Pattern:
        s = text.strip()
        if not (s.isascii() and s.isdigit()):
            raise ParseError(f"pattern must be a string of digits 1 and 2, got {text!r}")
        try:
            return cls(tuple(int(c) for c in s))
        except InvalidPattern as exc:
            raise ParseError(str(exc)) from exc

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, idx):
        return self.letters[idx]

    def __str__(self) -> str:
        return "".join(map(str, self.letters))

    def __repr__(self) -> str:
        return f"Pattern('{self}')"

    @property
    def k(self) -> int:
        return len(self.letters)

    def reversed(self) -> Pattern:
        return Pattern(self.letters[::-1])

    def complemented(self) -> Pattern:
        # relative to the pattern's own largest letter, so 1^k is fixed
        return Pattern(complement(self.letters, max(self.letters)))

    def is_constant(self) -> bool:
        return 2 not in self.letters


def substitute(u: Pattern | Sequence[int], i: int, j: int) -> Word:
    """The word u[i, j]: every 1 becomes ``i`` and every 2 becomes ``j``."""
    if i >= j:
        raise BadEdgeOrder(f"substitution needs i < j, got i={i}, j={j}")
    return tuple(i if x == 1 else j for x in u)


def find_matches(w: Sequence[int], u: Pattern) -> list[int]:
    """1-based start positions of every (possibly overlapping) u-match in ``w``."""
    k = len(u)
    target = u.letters
    return [p + 1 for p in range(len(w) - k + 1) if reduce(w[p : p + k]) == target]


def has_match(w: Sequence[int], u: Pattern) -> bool:
    k = len(u)
    target = u.letters
    return any(reduce(w[p : p + k]) == target for p in range(len(w) - k + 1))


def parse_word(text: str, compact: bool = False) -> Word:
    """Parse space-separated letters, or single digits with ``compact``."""
    tokens = [c for c in text if not c.isspace()] if compact else text.split()
    letters = []
    for pos, tok in enumerate(tokens, start=1):
        if not (tok.isascii() and tok.isdigit()) or int(tok) < 1:
            raise ParseError(f"bad letter {tok!r} at token {pos}; letters are positive integers")
        letters.append(int(tok))
    return tuple(letters)


def format_word(w: Sequence[int]) -> str:
    return " ".join(map(str, w))
