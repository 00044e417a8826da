"""Constructive bijections on graded binary words.

Two families. The prefix-shift maps (``theorem1_forward`` and its inverse)
carry words that have a prefix of weight ``p`` to words that have a prefix of
weight ``p + 1``, preserving total weight and b-count. The factorization maps
(``decompose`` / ``compose``) split a word at its shortest prefix of weight at
least ``p``, sorting it into one of two branches.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolationError, NoMatchError, NotInDomainError
from .words import (
    Grading,
    Word,
    b_count,
    has_prefix_of_weight,
    prefix_length_of_weight,
    prefix_weights,
    reverse,
    weight,
)


@dataclass(frozen=True)
class PrefixMatch:
    """Nonempty prefixes of two words sharing the same (minimal) weight."""

    u_prefix_len: int
    v_prefix_len: int
    common_weight: int


@dataclass(frozen=True)
class BranchA:
    """Factorization hit the target weight exactly; the word is kept whole."""

    w: Word


@dataclass(frozen=True)
class BranchB:
    """Factorization overshot by ``j``; the splitting ``b`` is removed.

    ``u_prime`` is the part before that ``b``, ``v`` the part after, and ``k``
    counts the letters ``b`` up to and including the removed one.
    """

    j: int
    k: int
    u_prime: Word
    v: Word


Decomposition = BranchA | BranchB


def equal_weight_prefixes(u: Word, v: Word, g: Grading) -> PrefixMatch:
    """Find nonempty prefixes of ``u`` and ``v`` of equal, minimal weight.

    Two-pointer merge over the strictly increasing prefix-weight sequences,
    O(|u| + |v|). A match is guaranteed whenever both words have weight at
    least ``m * n + 1`` with ``n = b_count(u + v)``; :class:`NoMatchError` is
    raised otherwise and signals a caller bug inside the bijections.
    """
    wu = prefix_weights(u, g)
    wv = prefix_weights(v, g)
    i = j = 0
    while i < len(wu) and j < len(wv):
        if wu[i] == wv[j]:
            return PrefixMatch(i + 1, j + 1, wu[i])
        if wu[i] < wv[j]:
            i += 1
        else:
            j += 1
    raise NoMatchError(
        f"words {u!r} and {v!r} have no nonempty prefixes of equal weight (m={g.m})"
    )


def _split_at_weight(w: Word, r: int, g: Grading) -> tuple[Word, Word]:
    cut = prefix_length_of_weight(w, r, g)
    if cut is None:
        raise NotInDomainError(f"word {w!r} has no prefix of weight {r} (m={g.m})")
    return w[:cut], w[cut:]


def _check_shift_params(w: Word, p: int, q: int, g: Grading) -> int:
    n = b_count(w)
    if p < g.m * n:
        raise NotInDomainError(f"need p >= m*n, got p={p}, m={g.m}, n={n}")
    if q < 1:
        raise NotInDomainError(f"need q >= 1, got q={q}")
    total = p + q + g.m * n
    if weight(w, g) != total:
        raise NotInDomainError(
            f"word {w!r} has weight {weight(w, g)}, expected {total}"
        )
    return n


def theorem1_forward(w: Word, p: int, q: int, g: Grading) -> Word:
    """Carry a word with a weight-``p`` prefix to one with a weight-``p + 1`` prefix.

    Split ``w = u . v`` at the unique prefix ``u`` of weight ``p``; take the
    suffix ``x`` of ``u`` (possibly empty) and the nonempty prefix ``y`` of
    ``v`` with ``weight(x) = weight(y) - 1`` and ``weight(y)`` minimal; return
    ``u' . rev(y) . rev(x) . v'`` where ``u = u'x`` and ``v = yv'``. Total
    weight and b-count are preserved.
    """
    _check_shift_params(w, p, q, g)
    u, v = _split_at_weight(w, p, g)
    # prefixes of rev(u + 'a') are a leading 'a' plus suffixes of u, so a
    # weight-t prefix encodes a suffix of weight t - 1, the empty one included
    try:
        match = equal_weight_prefixes(v, reverse(u + "a"), g)
    except NoMatchError as exc:
        raise AssertionError(
            "equal-weight prefixes must exist once the domain checks pass"
        ) from exc
    y_len = match.u_prefix_len
    x_len = match.v_prefix_len - 1
    y, v_rest = v[:y_len], v[y_len:]
    u_rest, x = u[: len(u) - x_len], u[len(u) - x_len :]
    return u_rest + reverse(y) + reverse(x) + v_rest


def theorem1_inverse(w: Word, p: int, q: int, g: Grading) -> Word:
    """Inverse of :func:`theorem1_forward` on words with a weight-``p + 1`` prefix.

    Split ``w = U . V`` at the prefix ``U`` of weight ``p + 1``; take the
    nonempty suffix ``s`` of ``U`` and the prefix ``t`` of ``V`` (possibly
    empty) with ``weight(s) = weight(t) + 1`` and ``weight(s)`` minimal;
    return ``U' . rev(t) . rev(s) . V'``.
    """
    _check_shift_params(w, p, q, g)
    big_u, big_v = _split_at_weight(w, p + 1, g)
    # symmetric trick: prefixes of 'a' + V encode prefixes of V shifted up by 1
    try:
        match = equal_weight_prefixes(reverse(big_u), "a" + big_v, g)
    except NoMatchError as exc:
        raise AssertionError(
            "equal-weight prefixes must exist once the domain checks pass"
        ) from exc
    s_len = match.u_prefix_len
    t_len = match.v_prefix_len - 1
    u_rest, s = big_u[: len(big_u) - s_len], big_u[len(big_u) - s_len :]
    t, v_rest = big_v[:t_len], big_v[t_len:]
    return u_rest + reverse(t) + reverse(s) + v_rest


def factorize_at_least(w: Word, p: int, g: Grading) -> tuple[Word, Word]:
    """Split ``w`` at its shortest prefix of weight at least ``p``.

    Requires ``0 <= p <= weight(w)``. The overshoot ``weight(u) - p`` lies in
    ``[0, m]``, and when it is positive the last letter of ``u`` is ``b``.
    """
    if p < 0:
        raise NotInDomainError(f"target weight must be >= 0, got {p}")
    if p == 0:
        return "", w
    acc = 0
    for i, letter in enumerate(w):
        acc += g.letter_weight(letter)
        if acc >= p:
            return w[: i + 1], w[i + 1 :]
    raise NotInDomainError(f"word {w!r} has weight {acc} < {p}")


def decompose(w: Word, p: int, q: int, g: Grading) -> Decomposition:
    """Sort ``w`` into :class:`BranchA` or :class:`BranchB` by factorization.

    With ``u`` the shortest prefix of weight >= ``p``: an exact hit keeps the
    word whole (branch A); an overshoot by ``j`` in ``[1, m]`` removes the
    final ``b`` of ``u`` and returns the two remaining pieces (branch B).
    """
    _check_shift_params(w, p, q, g)
    u, v = factorize_at_least(w, p, g)
    overshoot = weight(u, g) - p
    if overshoot == 0:
        return BranchA(w)
    # the letter that crossed the target weighs more than 1, so it is a 'b'
    assert u.endswith("b"), "overshoot requires a final b"
    return BranchB(j=overshoot, k=b_count(u), u_prime=u[:-1], v=v)


def _check_branch_b(d: BranchB, p: int, q: int, g: Grading) -> None:
    m = g.m
    n = b_count(d.u_prime) + 1 + b_count(d.v)
    if not 1 <= d.j <= m:
        raise InvariantViolationError(f"j={d.j} outside [1, {m}]")
    if not 1 <= d.k <= n:
        raise InvariantViolationError(f"k={d.k} outside [1, {n}]")
    if weight(d.u_prime, g) != p + d.j - m - 1 or b_count(d.u_prime) != d.k - 1:
        raise InvariantViolationError(
            f"u'={d.u_prime!r} is not in the class of weight {p + d.j - m - 1} "
            f"with {d.k - 1} letters b"
        )
    if weight(d.v, g) != q + m * n - d.j or b_count(d.v) != n - d.k:
        raise InvariantViolationError(
            f"v={d.v!r} is not in the class of weight {q + m * n - d.j} "
            f"with {n - d.k} letters b"
        )


def compose(d: Decomposition, p: int, q: int, g: Grading) -> Word:
    """Rebuild the word from a decomposition; inverse of :func:`decompose`."""
    if isinstance(d, BranchA):
        n = b_count(d.w)
        if weight(d.w, g) != p + q + g.m * n:
            raise InvariantViolationError(
                f"word {d.w!r} is not in the class for p={p}, q={q}, m={g.m}"
            )
        if not has_prefix_of_weight(d.w, p, g):
            raise InvariantViolationError(
                f"word {d.w!r} has no prefix of weight {p}"
            )
        return d.w
    _check_branch_b(d, p, q, g)
    return d.u_prime + "b" + d.v
