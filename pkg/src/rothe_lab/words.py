"""Graded binary words: weights, prefix structure, enumeration, inversions.

A word is a plain ``str`` over the alphabet ``{'a', 'b'}``. A :class:`Grading`
fixes the letter weights: ``a`` weighs 1 and ``b`` weighs ``m + 1`` for an
integer ``m >= 0``; the weight of a word is the sum of its letter weights.
``enumerate_gamma(p, k, g)`` lists every word of weight ``p`` containing
exactly ``k`` letters ``b``, in lexicographic order (``a`` before ``b``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceededError

Word = str

MAX_WORD_LENGTH = 26
"""Hard bound on enumerated word length; class sizes grow binomially."""


@dataclass(frozen=True)
class Grading:
    """Letter weights ``a -> 1`` and ``b -> m + 1``."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"grading parameter m must be >= 0, got {self.m}")

    def letter_weight(self, letter: str) -> int:
        if letter == "a":
            return 1
        if letter == "b":
            return self.m + 1
        raise ValueError(f"letter {letter!r} is not 'a' or 'b'")


def _check_word(w: Word) -> None:
    if w.count("a") + w.count("b") != len(w):
        raise ValueError(f"word {w!r} contains letters other than 'a'/'b'")


def b_count(w: Word) -> int:
    """Number of letters ``b`` in ``w``."""
    _check_word(w)
    return w.count("b")


def weight(w: Word, g: Grading) -> int:
    """Total weight of ``w``: one per letter plus ``m`` per ``b``."""
    _check_word(w)
    return len(w) + g.m * w.count("b")


def prefix_weights(w: Word, g: Grading) -> list[int]:
    """Weights of the nonempty prefixes of ``w``, shortest first.

    Letter weights are positive, so the sequence is strictly increasing and
    its last entry (when ``w`` is nonempty) equals ``weight(w, g)``.
    """
    _check_word(w)
    out: list[int] = []
    acc = 0
    for letter in w:
        acc += g.letter_weight(letter)
        out.append(acc)
    return out


def prefix_length_of_weight(w: Word, r: int, g: Grading) -> int | None:
    """Length of the prefix of ``w`` with weight exactly ``r``, or ``None``.

    The empty prefix covers ``r == 0``. Prefix weights strictly increase, so
    the prefix is unique when it exists.
    """
    _check_word(w)
    if r == 0:
        return 0
    acc = 0
    for i, letter in enumerate(w):
        acc += g.letter_weight(letter)
        if acc == r:
            return i + 1
        if acc > r:
            return None
    return None


def has_prefix_of_weight(w: Word, r: int, g: Grading) -> bool:
    """True iff some prefix of ``w`` (the empty one included) has weight ``r``."""
    return prefix_length_of_weight(w, r, g) is not None


def enumerate_gamma(
    p: int, k: int, g: Grading, *, max_length: int = MAX_WORD_LENGTH
) -> list[Word]:
    """All words of weight ``p`` with exactly ``k`` letters ``b``, lex order.

    Such a word has ``p - (m + 1) * k`` letters ``a`` and length ``p - m * k``;
    the class is empty when the letter counts go negative. Raises
    :class:`CapExceededError` if the word length would exceed ``max_length``.
    """
    if k < 0:
        return []
    a_count = p - (g.m + 1) * k
    if a_count < 0:
        return []
    length = a_count + k
    if length > max_length:
        raise CapExceededError(
            f"enumerating words of length {length} exceeds the cap of {max_length}"
        )
    base = ["a"] * length
    out: list[Word] = []
    for positions in itertools.combinations(range(length), k):
        chars = base.copy()
        for i in positions:
            chars[i] = "b"
        out.append("".join(chars))
    # combinations yield b-position tuples in lex order, which is exactly the
    # reverse of lex order on the words themselves (a < b)
    out.reverse()
    return out


def enumerate_gamma_prefix(
    p: int, k: int, r: int, g: Grading, *, max_length: int = MAX_WORD_LENGTH
) -> list[Word]:
    """The part of ``enumerate_gamma(p, k, g)`` having a prefix of weight ``r``."""
    return [
        w
        for w in enumerate_gamma(p, k, g, max_length=max_length)
        if has_prefix_of_weight(w, r, g)
    ]


def inversions(w: Word) -> int:
    """Number of index pairs ``i < j`` with ``w[i] == 'b'`` and ``w[j] == 'a'``."""
    _check_word(w)
    seen_b = 0
    inv = 0
    for letter in w:
        if letter == "b":
            seen_b += 1
        else:
            inv += seen_b
    return inv


def reverse(w: Word) -> Word:
    """The word read right to left."""
    _check_word(w)
    return w[::-1]


def word_json(w: Word, g: Grading) -> dict:
    """JSON-ready description of ``w`` under the grading ``g``."""
    return {"word": w, "weight": weight(w, g), "b_count": b_count(w)}
