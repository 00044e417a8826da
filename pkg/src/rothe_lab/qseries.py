"""Exact Laurent polynomials in ``q`` and the q-binomial identity checks.

Polynomials are stored sparsely as ``exponent -> integer coefficient`` with
arbitrary-precision coefficients and possibly negative exponents; ``q`` stays
symbolic throughout (the only numeric specialization offered is ``q = 1``).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import ParameterError, UnsupportedArgumentError
from .identities import VerificationReport
from .words import MAX_WORD_LENGTH, Grading, enumerate_gamma, inversions


class LaurentPolynomial:
    """Immutable integer-coefficient polynomial in ``q`` with integer exponents.

    Zero coefficients are never stored, so equality is term-by-term on the
    canonical form. Arithmetic accepts plain ints as constants.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None,
    ) -> None:
        data: dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exponent, coeff in items:
                if coeff:
                    data[exponent] = data.get(exponent, 0) + coeff
        object.__setattr__(self, "_terms", {e: c for e, c in data.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def q_power(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def _coerce(cls, value) -> "LaurentPolynomial | None":
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, int):
            return cls({0: value})
        return None

    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def min_exponent(self) -> int | None:
        return min(self._terms) if self._terms else None

    def max_exponent(self) -> int | None:
        return max(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def value_at_one(self) -> int:
        """The integer obtained by setting ``q = 1``."""
        return sum(self._terms.values())

    def shift(self, exponent: int) -> "LaurentPolynomial":
        """Multiply by ``q ** exponent``."""
        return LaurentPolynomial({e + exponent: c for e, c in self._terms.items()})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self.sorted_terms()))

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[tuple[str, str]] = []
        for exponent, coeff in self.sorted_terms():
            mag = abs(coeff)
            if exponent == 0:
                body = str(mag)
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                body = power if mag == 1 else f"{mag}{power}"
            pieces.append(("-" if coeff < 0 else "+", body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"LaurentPolynomial({dict(self.sorted_terms())!r})"

    def to_json_dict(self) -> dict:
        """Canonical JSON form: ascending exponents, coefficients as strings."""
        return {"terms": [[e, str(c)] for e, c in self.sorted_terms()]}


def lp_add(a, b) -> LaurentPolynomial:
    """Exact sum of two Laurent polynomials (ints coerce to constants)."""
    return _as_poly(a) + _as_poly(b)


def lp_mul(a, b) -> LaurentPolynomial:
    """Exact product of two Laurent polynomials (ints coerce to constants)."""
    return _as_poly(a) * _as_poly(b)


def lp_shift(p, exponent: int) -> LaurentPolynomial:
    """Multiply ``p`` by ``q ** exponent``."""
    return _as_poly(p).shift(exponent)


def _as_poly(value) -> LaurentPolynomial:
    out = LaurentPolynomial._coerce(value)
    if out is None:
        raise TypeError(f"expected LaurentPolynomial or int, got {type(value).__name__}")
    return out


@lru_cache(maxsize=None)
def gaussian_binomial(a: int, k: int) -> LaurentPolynomial:
    """Gaussian binomial coefficient as a polynomial in ``q``.

    Zero for ``k < 0`` or ``k > a``, one for ``k == 0``, otherwise built by
    the Pascal recurrence ``[a, k] = [a-1, k-1] + q^k * [a-1, k]``. At
    ``q = 1`` it evaluates to ``C(a, k)``. Negative upper arguments are not
    supported.
    """
    if k < 0:
        return LaurentPolynomial.zero()
    if a < 0:
        raise UnsupportedArgumentError(
            f"gaussian_binomial needs a >= 0 (or k < 0), got a={a}, k={k}"
        )
    if k > a:
        return LaurentPolynomial.zero()
    if k == 0:
        return LaurentPolynomial.one()
    return gaussian_binomial(a - 1, k - 1) + gaussian_binomial(a - 1, k).shift(k)


def inv_generating_function(
    p: int, k: int, g: Grading, *, max_length: int = MAX_WORD_LENGTH
) -> LaurentPolynomial:
    """Sum of ``q ** inversions(w)`` over all words of weight ``p`` with ``k``
    letters ``b``, by brute-force enumeration."""
    counts: Counter[int] = Counter()
    for w in enumerate_gamma(p, k, g, max_length=max_length):
        counts[inversions(w)] += 1
    return LaurentPolynomial(counts)


def check_invw(p: int, k: int, m: int) -> VerificationReport:
    """Inversion statistic oracle: the enumerated generating function equals
    the Gaussian binomial ``[p - k*m, k]``. Requires ``p >= k*m``."""
    lhs = inv_generating_function(p, k, Grading(m))
    rhs = gaussian_binomial(p - k * m, k)
    return VerificationReport.from_sides("invw", {"p": p, "k": k, "m": m}, lhs, rhs)


def qchu_term(x: int, y: int, m: int, n: int, k: int) -> LaurentPolynomial:
    """The ``k``-th summand of the double-sum q-Chu-Vandermonde extension."""
    total = gaussian_binomial(x - k * m, k) * gaussian_binomial(y + k * m, n - k)
    for j in range(1, m + 1):
        left = gaussian_binomial(x - k * m + j - 1, k - 1)
        if left.is_zero():
            # at k = 0 the j-terms vanish; skipping also avoids evaluating
            # the partner bracket at a negative upper argument
            continue
        total = total + (left * gaussian_binomial(y + k * m - j, n - k)).shift(-k * j)
    return total.shift(k * (k * m + k + y - n))


def check_qchu(x: int, y: int, m: int, n: int) -> VerificationReport:
    """Double-sum extension of the q-Chu-Vandermonde formula:

    ``sum_k q^{k(km+k+y-n)} ([x-km, k] [y+km, n-k]
        + sum_{j=1}^{m} [x-km+j-1, k-1] [y+km-j, n-k] q^{-kj}) == [x+y, n]``.

    Requires ``x >= m*n``, ``y >= 1`` and ``n >= 0``. The inner sum is empty
    at ``m = 0``, which leaves the classical q-Chu-Vandermonde sum.
    """
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if m < 0:
        raise ParameterError(f"m must be >= 0, got {m}")
    if x < m * n:
        raise ParameterError(f"need x >= m*n, got x={x}, m={m}, n={n}")
    if y < 1:
        raise ParameterError(f"need y >= 1, got y={y}")
    lhs = LaurentPolynomial.zero()
    for k in range(n + 1):
        lhs = lhs + qchu_term(x, y, m, n, k)
    rhs = gaussian_binomial(x + y, n)
    return VerificationReport.from_sides(
        "qchu", {"x": x, "y": y, "m": m, "n": n}, lhs, rhs
    )


def qchu_m1_term(x: int, y: int, n: int, k: int) -> LaurentPolynomial:
    """The ``k``-th summand of the ``m = 1`` specialization."""
    total = gaussian_binomial(x - k, k) * gaussian_binomial(y + k, n - k)
    left = gaussian_binomial(x - k, k - 1)
    if not left.is_zero():
        total = total + (left * gaussian_binomial(y + k - 1, n - k)).shift(-k)
    return total.shift(k * (2 * k + y - n))


def check_qchu_m1(x: int, y: int, n: int) -> VerificationReport:
    """``m = 1`` form: ``sum_k q^{k(2k+y-n)} ([x-k, k] [y+k, n-k]
    + [x-k, k-1] [y+k-1, n-k] q^{-k}) == [x+y, n]``; term by term this is
    :func:`check_qchu` at ``m = 1``."""
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if x < n:
        raise ParameterError(f"need x >= n, got x={x}, n={n}")
    if y < 1:
        raise ParameterError(f"need y >= 1, got y={y}")
    lhs = LaurentPolynomial.zero()
    for k in range(n + 1):
        lhs = lhs + qchu_m1_term(x, y, n, k)
    rhs = gaussian_binomial(x + y, n)
    return VerificationReport.from_sides(
        "qchu-m1", {"x": x, "y": y, "n": n}, lhs, rhs
    )


def qweighted_bijection_check(
    p: int, q: int, m: int, n: int, *, max_length: int = MAX_WORD_LENGTH
) -> VerificationReport:
    """Tie the word model to the algebra: the enumerated inversion generating
    function over the full weight class equals ``[p+q, n]`` and equals the
    structured double sum of :func:`check_qchu`."""
    if m < 0 or n < 0:
        raise ParameterError(f"need m, n >= 0, got m={m}, n={n}")
    if p < m * n:
        raise ParameterError(f"need p >= m*n, got p={p}, m={m}, n={n}")
    if q < 1:
        raise ParameterError(f"need q >= 1, got q={q}")
    enumerated = inv_generating_function(
        p + q + m * n, n, Grading(m), max_length=max_length
    )
    bracket = gaussian_binomial(p + q, n)
    structured = LaurentPolynomial.zero()
    for k in range(n + 1):
        structured = structured + qchu_term(p, q, m, n, k)
    params = {"p": p, "q": q, "m": m, "n": n}
    if enumerated == bracket == structured:
        return VerificationReport("qword", params, enumerated, bracket, "pass")
    counterexample = dict(params)
    counterexample["structured_sum"] = str(structured)
    return VerificationReport(
        "qword", params, enumerated, bracket, "fail", counterexample
    )
