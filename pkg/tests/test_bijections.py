import itertools

import pytest

from rothe_lab import (
    BranchA,
    BranchB,
    Grading,
    InvariantViolationError,
    NoMatchError,
    NotInDomainError,
    PrefixMatch,
    b_count,
    compose,
    decompose,
    enumerate_gamma,
    equal_weight_prefixes,
    factorize_at_least,
    has_prefix_of_weight,
    prefix_weights,
    theorem1_forward,
    theorem1_inverse,
    weight,
)


def all_words(max_len):
    for length in range(max_len + 1):
        for letters in itertools.product("ab", repeat=length):
            yield "".join(letters)


def test_equal_weight_prefixes_examples():
    # weight sets {1,3} and {2,3}: minimal common value 3
    assert equal_weight_prefixes("ab", "ba", Grading(1)) == PrefixMatch(2, 2, 3)
    assert equal_weight_prefixes("a", "ab", Grading(0)) == PrefixMatch(1, 1, 1)
    # no common value at all: {2} vs {1}
    with pytest.raises(NoMatchError):
        equal_weight_prefixes("b", "a", Grading(1))


def test_equal_weight_prefixes_outside_guarantee():
    # the weight hypotheses fail here (weight 2 < m*n + 1 = 3) yet a common
    # prefix weight happens to exist; the matcher still reports the minimum
    assert equal_weight_prefixes("b", "ba", Grading(1)).common_weight == 2


def test_equal_weight_prefixes_minimality_exhaustive():
    for m in range(3):
        g = Grading(m)
        for u in all_words(5):
            wu = set(prefix_weights(u, g))
            for v in all_words(4):
                common = wu & set(prefix_weights(v, g))
                if common:
                    match = equal_weight_prefixes(u, v, g)
                    assert match.common_weight == min(common)
                    assert prefix_weights(u, g)[match.u_prefix_len - 1] == min(common)
                    assert prefix_weights(v, g)[match.v_prefix_len - 1] == min(common)
                else:
                    with pytest.raises(NoMatchError):
                        equal_weight_prefixes(u, v, g)


def test_equal_weight_prefixes_guaranteed_under_hypotheses():
    # whenever both weights reach m*n + 1, a match must exist
    for m in range(3):
        g = Grading(m)
        for u in all_words(5):
            if not u:
                continue
            for v in all_words(5):
                if not v:
                    continue
                n = b_count(u + v)
                if weight(u, g) >= m * n + 1 and weight(v, g) >= m * n + 1:
                    equal_weight_prefixes(u, v, g)  # must not raise


def test_theorem1_forward_examples():
    g = Grading(1)
    assert theorem1_forward("ab", 1, 1, g) == "ba"
    assert theorem1_forward("bba", 2, 1, g) == "abb"
    assert theorem1_forward("bab", 2, 1, g) == "bab"


def test_theorem1_inverse_examples():
    g = Grading(1)
    assert theorem1_inverse("ba", 1, 1, g) == "ab"
    assert theorem1_inverse("abb", 2, 1, g) == "bba"
    assert theorem1_inverse("bab", 2, 1, g) == "bab"


def test_theorem1_domain_errors():
    g = Grading(1)
    with pytest.raises(NotInDomainError):
        theorem1_forward("ba", 1, 1, g)  # no prefix of weight 1
    with pytest.raises(NotInDomainError):
        theorem1_forward("ab", 0, 1, g)  # p < m*n
    with pytest.raises(NotInDomainError):
        theorem1_forward("ab", 1, 0, g)  # q < 1
    with pytest.raises(NotInDomainError):
        theorem1_forward("ab", 2, 1, g)  # wrong total weight
    with pytest.raises(NotInDomainError):
        theorem1_inverse("ab", 1, 1, g)  # no prefix of weight p + 1 = 2


def test_theorem1_roundtrip_invariant_ranges():
    for m in range(4):
        g = Grading(m)
        for n in range(5):
            for p in range(m * n, m * n + 6):
                for q in range(1, 6):
                    total = p + q + m * n
                    if p + q > 18:
                        continue
                    everything = enumerate_gamma(total, n, g)
                    domain = [w for w in everything if has_prefix_of_weight(w, p, g)]
                    codomain = {w for w in everything if has_prefix_of_weight(w, p + 1, g)}
                    images = set()
                    for w in domain:
                        out = theorem1_forward(w, p, q, g)
                        assert out in codomain
                        assert theorem1_inverse(out, p, q, g) == w
                        images.add(out)
                    assert images == codomain
                    for w in codomain:
                        assert theorem1_forward(theorem1_inverse(w, p, q, g), p, q, g) == w


def test_factorize_at_least_examples():
    g = Grading(1)
    assert factorize_at_least("ba", 1, g) == ("b", "a")
    assert factorize_at_least("ab", 1, g) == ("a", "b")
    assert factorize_at_least("abba", 0, g) == ("", "abba")


def test_factorize_at_least_properties():
    for m in range(4):
        g = Grading(m)
        for w in all_words(6):
            for p in range(weight(w, g) + 1):
                u, v = factorize_at_least(w, p, g)
                assert u + v == w
                overshoot = weight(u, g) - p
                assert 0 <= overshoot <= m
                if overshoot > 0:
                    assert u.endswith("b")
                # u is the shortest such prefix
                if u:
                    assert weight(u[:-1], g) < p


def test_factorize_at_least_errors():
    with pytest.raises(NotInDomainError):
        factorize_at_least("ab", 5, Grading(1))
    with pytest.raises(NotInDomainError):
        factorize_at_least("ab", -1, Grading(1))


def test_decompose_examples():
    g = Grading(1)
    assert decompose("ab", 1, 1, g) == BranchA("ab")
    assert decompose("ba", 1, 1, g) == BranchB(j=1, k=1, u_prime="", v="a")
    # prefix weights of "bba" are [2, 4, 5]; the shortest prefix of weight
    # >= 2 is "b" and it hits 2 exactly, so the word stays whole
    assert decompose("bba", 2, 1, g) == BranchA("bba")


def test_compose_examples():
    g1 = Grading(1)
    assert compose(BranchB(j=1, k=1, u_prime="", v="a"), 1, 1, g1) == "ba"
    assert compose(BranchA("ab"), 1, 1, g1) == "ab"
    g2 = Grading(2)
    composed = compose(BranchB(j=2, k=1, u_prime="", v="aa"), 1, 2, g2)
    assert composed == "baa"
    assert weight(composed, g2) == 5 and b_count(composed) == 1


def test_compose_invariant_violations():
    g = Grading(1)
    with pytest.raises(InvariantViolationError):
        compose(BranchB(j=2, k=1, u_prime="", v="a"), 1, 1, g)  # j > m
    with pytest.raises(InvariantViolationError):
        compose(BranchB(j=1, k=1, u_prime="a", v="a"), 1, 1, g)  # wrong u' weight
    with pytest.raises(InvariantViolationError):
        compose(BranchA("ba"), 1, 1, g)  # no prefix of weight 1
    with pytest.raises(InvariantViolationError):
        compose(BranchA("ab"), 1, 0, g)  # q < 1


def test_decompose_compose_roundtrip_invariant_ranges():
    for m in range(4):
        g = Grading(m)
        for n in range(5):
            for p in range(m * n, m * n + 6):
                for q in range(1, 6):
                    if p + q > 18:
                        continue
                    total = p + q + m * n
                    seen = set()
                    for w in enumerate_gamma(total, n, g):
                        d = decompose(w, p, q, g)
                        assert compose(d, p, q, g) == w
                        assert d not in seen
                        seen.add(d)
                        if isinstance(d, BranchB):
                            assert 1 <= d.j <= m
                            assert 1 <= d.k <= n
                            assert weight(d.u_prime, g) == p + d.j - m - 1
                            assert b_count(d.u_prime) == d.k - 1
                            assert weight(d.v, g) == q + m * n - d.j
                            assert b_count(d.v) == n - d.k
                        else:
                            assert has_prefix_of_weight(d.w, p, g)


def test_bijections_preserve_weight_and_bcount():
    g = Grading(2)
    p, q, n = 4, 3, 2
    total = p + q + g.m * n
    for w in enumerate_gamma(total, n, g):
        if has_prefix_of_weight(w, p, g):
            out = theorem1_forward(w, p, q, g)
            assert weight(out, g) == weight(w, g)
            assert b_count(out) == b_count(w)
