"""Exact checkers for the classical binomial convolution identities.

All arithmetic is exact: parameters are ints or :class:`fractions.Fraction`,
never floats. The convolution coefficient ``rothe_coeff`` replaces the
quotient form ``x / (x - k*z) * C(x - k*z, k)``, which is undefined on the
lines ``x = k*z``, by the polynomial form ``(x / k!) * prod_{i=1}^{k-1}
(x - k*z - i)``; the two agree everywhere else, so every rational point is a
legal evaluation point and grid certification is sound.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ParameterError

RationalLike = int | Fraction


def _as_fraction(value: RationalLike, name: str = "value") -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise ParameterError(f"{name} must be an int or Fraction, got {type(value).__name__}")


def _json_value(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return str(value)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check: parameters, both sides, verdict.

    ``lhs`` and ``rhs`` are exact values (Fraction for the rational checks,
    Laurent polynomials for the q checks); ``status`` is ``"pass"`` exactly
    when they are equal. ``counterexample`` names the failing parameter point
    when present.
    """

    identity: str
    params: dict
    lhs: object
    rhs: object
    status: str
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @classmethod
    def from_sides(cls, identity, params, lhs, rhs, counterexample=None):
        if lhs == rhs:
            return cls(identity, dict(params), lhs, rhs, "pass")
        if counterexample is None:
            counterexample = dict(params)
        return cls(identity, dict(params), lhs, rhs, "fail", dict(counterexample))

    def to_json_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": {k: _json_value(v) for k, v in self.params.items()},
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "status": self.status,
        }
        if self.counterexample is not None:
            out["counterexample"] = {
                k: _json_value(v) for k, v in self.counterexample.items()
            }
        return out


def gen_binomial(t: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient ``prod_{i=0}^{k-1} (t - i) / k!``.

    Zero for ``k < 0``. For integer ``t`` the result is an integer-valued
    Fraction (negative upper arguments included).
    """
    if k < 0:
        return Fraction(0)
    t = _as_fraction(t, "t")
    if t.denominator == 1:
        ti = t.numerator
        num = 1
        for i in range(k):
            num *= ti - i
        return Fraction(num, math.factorial(k))
    num = Fraction(1)
    for i in range(k):
        num *= t - i
    return num / math.factorial(k)


def rothe_coeff(x: RationalLike, z: RationalLike, k: int) -> Fraction:
    """Singularity-free convolution coefficient ``B_k(x, z)``.

    ``B_0 = 1`` and ``B_k(x, z) = (x / k!) * prod_{i=1}^{k-1} (x - k*z - i)``
    for ``k >= 1``; zero for ``k < 0``. Agrees with
    ``x / (x - k*z) * gen_binomial(x - k*z, k)`` whenever ``x != k*z``, and
    satisfies ``B_k(x, z) * (x - k*z) == x * gen_binomial(x - k*z, k)``
    identically.
    """
    if k < 0:
        return Fraction(0)
    if k == 0:
        return Fraction(1)
    x = _as_fraction(x, "x")
    z = _as_fraction(z, "z")
    base = x - k * z
    prod = x
    for i in range(1, k):
        prod *= base - i
    return prod / math.factorial(k)


def _require_n(n: int) -> None:
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")


def check_rothe1(
    x: RationalLike, y: RationalLike, z: RationalLike, n: int
) -> VerificationReport:
    """Convolution of two coefficient families against the combined one:
    ``sum_k B_k(x, z) * B_{n-k}(y, z) == B_n(x + y, z)``."""
    _require_n(n)
    x, y, z = _as_fraction(x, "x"), _as_fraction(y, "y"), _as_fraction(z, "z")
    lhs = sum(rothe_coeff(x, z, k) * rothe_coeff(y, z, n - k) for k in range(n + 1))
    rhs = rothe_coeff(x + y, z, n)
    return VerificationReport.from_sides(
        "rothe1", {"x": x, "y": y, "z": z, "n": n}, lhs, rhs
    )


def check_rothe2(
    x: RationalLike, y: RationalLike, z: RationalLike, n: int
) -> VerificationReport:
    """Mixed convolution ``sum_k B_k(x, z) * C(y + k*z, n - k) == C(x + y, n)``
    (Rothe's identity in polynomial form; ``z = 0`` is Chu-Vandermonde)."""
    _require_n(n)
    x, y, z = _as_fraction(x, "x"), _as_fraction(y, "y"), _as_fraction(z, "z")
    lhs = sum(
        rothe_coeff(x, z, k) * gen_binomial(y + k * z, n - k) for k in range(n + 1)
    )
    rhs = gen_binomial(x + y, n)
    return VerificationReport.from_sides(
        "rothe2", {"x": x, "y": y, "z": z, "n": n}, lhs, rhs
    )


def check_gould(
    x: RationalLike,
    y: RationalLike,
    z: RationalLike,
    eps: RationalLike,
    n: int,
) -> VerificationReport:
    """Shift invariance of the plain binomial convolution:
    ``sum_k C(x - k*z, k) * C(y + k*z, n - k)`` is unchanged by
    ``x -> x + eps``, ``y -> y - eps``."""
    _require_n(n)
    x, y = _as_fraction(x, "x"), _as_fraction(y, "y")
    z, eps = _as_fraction(z, "z"), _as_fraction(eps, "eps")
    lhs = sum(
        gen_binomial(x - k * z, k) * gen_binomial(y + k * z, n - k)
        for k in range(n + 1)
    )
    rhs = sum(
        gen_binomial(x + eps - k * z, k) * gen_binomial(y - eps + k * z, n - k)
        for k in range(n + 1)
    )
    return VerificationReport.from_sides(
        "gould", {"x": x, "y": y, "z": z, "eps": eps, "n": n}, lhs, rhs
    )


def check_pqkm(p: int, q: int, m: int, n: int) -> VerificationReport:
    """Integer shift identity
    ``sum_k C(p - k*m, k) * C(q + k*m, n - k)
      == sum_k C(p + 1 - k*m, k) * C(q - 1 + k*m, n - k)``."""
    lhs = sum(
        gen_binomial(p - k * m, k) * gen_binomial(q + k * m, n - k)
        for k in range(max(n + 1, 0))
    )
    rhs = sum(
        gen_binomial(p + 1 - k * m, k) * gen_binomial(q - 1 + k * m, n - k)
        for k in range(max(n + 1, 0))
    )
    return VerificationReport.from_sides(
        "pqkm", {"p": p, "q": q, "m": m, "n": n}, Fraction(lhs), Fraction(rhs)
    )


def check_kmx(p: int, q: int, m: int, n: int) -> VerificationReport:
    """Two-branch counting identity
    ``sum_k [C(p - k*m, k) * C(q + k*m, n - k)
             + sum_{j=1}^{m} C(p - k*m + j - 1, k - 1) * C(q + k*m - j, n - k)]
      == C(p + q, n)``."""
    _require_n(n)
    if p < m * n:
        raise ParameterError(f"need p >= m*n, got p={p}, m={m}, n={n}")
    if q < 1:
        raise ParameterError(f"need q >= 1, got q={q}")
    lhs = Fraction(0)
    for k in range(n + 1):
        lhs += gen_binomial(p - k * m, k) * gen_binomial(q + k * m, n - k)
        for j in range(1, m + 1):
            lhs += gen_binomial(p - k * m + j - 1, k - 1) * gen_binomial(
                q + k * m - j, n - k
            )
    rhs = gen_binomial(p + q, n)
    return VerificationReport.from_sides(
        "kmx", {"p": p, "q": q, "m": m, "n": n}, lhs, rhs
    )


def check_kmpink(p: int, q: int, m: int, n: int, j: int) -> VerificationReport:
    """Inner-shift identity, for ``1 <= j <= m``:
    ``sum_k C(p - k*m + j - 1, k - 1) * C(q + k*m - j, n - k)
      == sum_k C(p - k*m - 1, k - 1) * C(q + k*m, n - k)``."""
    if not 1 <= j <= m:
        raise ParameterError(f"j must lie in [1, m] = [1, {m}], got {j}")
    lhs = sum(
        gen_binomial(p - k * m + j - 1, k - 1) * gen_binomial(q + k * m - j, n - k)
        for k in range(max(n + 1, 0))
    )
    rhs = sum(
        gen_binomial(p - k * m - 1, k - 1) * gen_binomial(q + k * m, n - k)
        for k in range(max(n + 1, 0))
    )
    return VerificationReport.from_sides(
        "kmpink",
        {"p": p, "q": q, "m": m, "n": n, "j": j},
        Fraction(lhs),
        Fraction(rhs),
    )


_GRID_CHECKERS = {
    "rothe1": (check_rothe1, ("x", "y", "z")),
    "rothe2": (check_rothe2, ("x", "y", "z")),
    "gould": (check_gould, ("x", "y", "z", "eps")),
}


def grid_variables(identity: str) -> tuple[str, ...]:
    """Free variables of a grid-certifiable identity, in evaluation order."""
    if identity not in _GRID_CHECKERS:
        raise ParameterError(
            f"grid certification supports {sorted(_GRID_CHECKERS)}, got {identity!r}"
        )
    return _GRID_CHECKERS[identity][1]


def grid_prove(
    identity: str, n: int, offsets: Sequence[int] | None = None
) -> VerificationReport:
    """Certify an identity as a polynomial identity by exhaustive grid evaluation.

    Both sides have degree at most ``n`` in each free variable, so exact
    agreement on an integer grid of ``n + 1`` points per variable proves the
    identity over the rationals. ``offsets`` shifts the per-variable grids
    ``{off, ..., off + n}``; the default grid starts at 0 (any grid works, the
    polynomial forms have no singular points). On failure the report carries
    the first counterexample point.
    """
    variables = grid_variables(identity)
    checker = _GRID_CHECKERS[identity][0]
    _require_n(n)
    if offsets is None:
        offsets = (0,) * len(variables)
    if len(offsets) != len(variables):
        raise ParameterError(
            f"{identity} needs {len(variables)} offsets {variables}, got {len(offsets)}"
        )
    count = 0
    last = None
    for point in itertools.product(*(range(off, off + n + 1) for off in offsets)):
        report = checker(*point, n)
        count += 1
        if not report.passed:
            return VerificationReport(
                identity,
                {"n": n, "offsets": list(offsets), "grid_points": count},
                report.lhs,
                report.rhs,
                "fail",
                dict(zip(variables, point)),
            )
        last = report
    assert last is not None
    return VerificationReport(
        identity,
        {"n": n, "offsets": list(offsets), "grid_points": count},
        last.lhs,
        last.rhs,
        "pass",
    )
