import itertools
import math
import random

import pytest

from chebypa.constructions import (
    ExplicitCode,
    build_chain_binary,
    build_chain_qary,
    chain_branches,
    explicit_code,
    explicit_decode,
    extend,
    first_recursive,
    phi,
)
from chebypa.core import PermutationArray, identity, is_permutation, min_distance, validate_pa
from chebypa.codec import encode_binary
from chebypa.errors import InvalidArgumentError, PreconditionError, RangeError, ResourceLimitError

import oracles


# --- explicit construction ---------------------------------------------------

def test_explicit_n_equals_d():
    code = explicit_code(5, 5)
    assert code.cardinality == 1
    assert list(code.enumerate()) == [identity(5)]


def test_explicit_4_2_members():
    code = explicit_code(4, 2)
    assert code.cardinality == 4
    expected = {(1, 2, 3, 4), (3, 2, 1, 4), (1, 4, 3, 2), (3, 4, 1, 2)}
    assert set(code.enumerate()) == expected == set(oracles.residue_members(4, 2))


def test_explicit_30_2_ratio():
    code = explicit_code(30, 2)
    assert code.cardinality == math.factorial(15) ** 2
    assert code.cardinality / 2**28 == pytest.approx(6.37e15, rel=1e-3)
    assert isinstance(code.cardinality, int)


@pytest.mark.parametrize("n", range(1, 9))
def test_explicit_matches_brute_force(n):
    for d in range(1, n + 1):
        code = explicit_code(n, d)
        members = list(code.enumerate())
        assert len(members) == code.cardinality == oracles.explicit_formula(n, d)
        assert set(members) == set(oracles.residue_members(n, d))
        if d == 1:
            assert len(set(members)) == len(members)  # distance >= 1 means distinct
        elif len(members) > 1:
            assert min_distance(members) >= d


def test_explicit_unrank_rank():
    code = explicit_code(7, 3)
    listed = list(code.enumerate())
    assert [code.unrank(k) for k in range(code.cardinality)] == listed
    assert all(code.rank(w) == k for k, w in enumerate(listed))
    assert code.unrank(0) == identity(7)
    big = explicit_code(30, 2)
    rng = random.Random(1)
    for _ in range(50):
        k = rng.randrange(big.cardinality)
        w = big.unrank(k)
        assert big.contains(w)
        assert big.rank(w) == k
    with pytest.raises(RangeError):
        code.unrank(code.cardinality)
    with pytest.raises(RangeError):
        code.unrank(-1)


def test_explicit_contains():
    code = explicit_code(4, 2)
    assert code.contains((3, 4, 1, 2))
    assert not code.contains((2, 1, 3, 4))
    assert not code.contains((1, 2, 3))
    assert not code.contains((1, 1, 3, 3))


def test_explicit_errors():
    with pytest.raises(InvalidArgumentError):
        explicit_code(3, 4)
    with pytest.raises(InvalidArgumentError):
        explicit_code(3, 0)
    with pytest.raises(ResourceLimitError):
        list(explicit_code(30, 2).enumerate())


def test_explicit_decode_examples():
    code = explicit_code(6, 3)
    sent = code.unrank(5)
    assert explicit_decode(6, 3, sent).word == sent
    # coordinate 2 sent 5, received 4: a = 2 - 4 = 1 (mod 3)
    word = (1, 5, 3, 4, 2, 6)
    assert code.contains(word)
    received = list(word)
    received[1] = 4
    res = explicit_decode(6, 3, received)
    assert res.word[1] == 5
    assert res.word == word and res.is_permutation and res.radius == 1


def test_explicit_decode_all_unit_error_patterns():
    code = explicit_code(6, 3)
    for k in (0, 7, code.cardinality - 1):
        sent = code.unrank(k)
        for signs in itertools.product((-1, 1), repeat=6):
            received = [v + s for v, s in zip(sent, signs)]
            assert explicit_decode(6, 3, received).word == sent


def test_explicit_decode_even_and_flag():
    res = explicit_decode(4, 2, (1, 2, 3, 4))
    assert res.radius == 0
    # t = d/2 - 1 = 1 for d = 4: all errors of size 1 corrected
    code = explicit_code(8, 4)
    sent = code.unrank(3)
    for signs in itertools.product((-1, 1), repeat=8):
        assert explicit_decode(8, 4, [v + s for v, s in zip(sent, signs)]).word == sent
    bad = explicit_decode(6, 3, (1, 2, 3, 4, 5, 9))
    assert not bad.is_permutation
    with pytest.raises(InvalidArgumentError):
        explicit_decode(6, 3, (1, 2, 3))


# --- first recursive construction --------------------------------------------

def test_first_recursive_example():
    c = PermutationArray(2, 1, ((1, 2), (2, 1)))
    out = first_recursive(c, 2)
    assert len(out) == 4 and out.n == 4 and out.d == 2
    assert out.words[0] == (2, 4, 1, 3)
    assert min_distance(out.words) == 2


def test_first_recursive_singleton():
    for n in range(1, 5):
        for r in range(2, 4):
            out = first_recursive(PermutationArray(n, n, (identity(n),)), r)
            assert len(out) == 1 and is_permutation(out.words[0]) and len(out.words[0]) == r * n


def test_first_recursive_explicit():
    c = explicit_code(4, 2).materialize()
    out = first_recursive(c, 2)
    assert len(out) == 16
    assert min_distance(out.words) == 4
    assert oracles.min_pairwise(list(out.words)) == 4


def test_first_recursive_rejects_invalid():
    with pytest.raises(InvalidArgumentError):
        first_recursive(PermutationArray(3, 2, ((1, 2, 3), (1, 3, 2))), 2)
    with pytest.raises(InvalidArgumentError):
        first_recursive(PermutationArray(2, 1, ((1, 2),)), 1)


# --- phi and extend ----------------------------------------------------------

def test_phi_examples():
    p = (2, 4, 1, 3)
    assert phi(p, 5) == (5,) + p
    assert phi((1, 3, 2), 2) == (2, 1, 4, 3)
    assert phi((1, 2), 1) == (1, 2, 3)
    with pytest.raises(InvalidArgumentError):
        phi((1, 2), 4)
    with pytest.raises(InvalidArgumentError):
        phi((1, 2), 0)


def test_phi_is_permutation_and_injective():
    for n in range(1, 6):
        for m in range(1, n + 2):
            images = [phi(p, m) for p in itertools.permutations(range(1, n + 1))]
            assert all(is_permutation(w) for w in images)
            assert len(set(images)) == len(images)


def test_extend_examples():
    out = extend(PermutationArray(2, 2, ((1, 2),)), [1, 3])
    assert out.words == ((1, 2, 3), (3, 1, 2))
    assert min_distance(out.words) == 2
    out = extend(PermutationArray(3, 2, ((1, 2, 3),)), [2])
    assert out.words == ((2, 1, 3, 4),) and (out.n, out.d) == (4, 3)
    c = explicit_code(5, 2).materialize()
    out = extend(c, [6])
    assert all(w[0] == 6 and w[1:] == p for w, p in zip(out.words, c.words))


def test_extend_preconditions():
    c = PermutationArray(3, 2, ((1, 2, 3), (3, 1, 2)))
    with pytest.raises(PreconditionError, match="tc21"):
        extend(c, [1, 2])
    with pytest.raises(PreconditionError, match="tc22"):
        extend(c, [1], mode="tc22")
    with pytest.raises(InvalidArgumentError):
        extend(c, [3, 1])


def _random_pa(rng, n, d, tries=60):
    words = []
    for _ in range(tries):
        w = tuple(rng.sample(range(1, n + 1), n))
        if all(max(abs(a - b) for a, b in zip(w, u)) >= d for u in words):
            words.append(w)
    return PermutationArray(n, d, tuple(words))


def _random_spacing(rng, n, d):
    s, v = [], rng.randint(1, n + 1)
    s.append(v)
    while True:
        v += d + rng.randint(0, 2)
        if v > n + 1:
            return s
        s.append(v)


def test_tc21_property_randomized():
    rng = random.Random(21)
    for _ in range(1000):
        n = rng.randint(2, 7)
        d = rng.randint(1, n - 1)
        c = _random_pa(rng, n, d, tries=rng.randint(2, 30))
        s = _random_spacing(rng, n, d)
        out = extend(c, s, mode="tc21")
        assert len(out) == len(s) * len(c)
        assert len(set(out.words)) == len(out.words)
        assert validate_pa(out).valid


def test_tc22_property_randomized():
    rng = random.Random(22)
    for _ in range(1000):
        d = rng.randint(1, 5)
        n = rng.randint(d + 1, 2 * d) if d > 1 else 2
        c = _random_pa(rng, n, d, tries=rng.randint(2, 30))
        s = [d] if n < 2 * d and rng.random() < 0.5 else [d + 1]
        out = extend(c, s, mode="tc22")
        assert out.d == d + 1 and len(out) == len(c)
        assert validate_pa(out).valid


def test_tc22_boundary_counterexample():
    # at n == 2d the point s = [d] shifts the value d too, so no distance is gained
    c = PermutationArray(2, 1, ((1, 2), (2, 1)))
    assert min_distance([(1, 2, 3), (1, 3, 2)]) == 1
    assert extend(c, [1], mode="tc21").words == ((1, 2, 3), (1, 3, 2))
    with pytest.raises(PreconditionError, match="tc22"):
        extend(c, [1], mode="tc22")
    out = extend(c, [2], mode="tc22")
    assert out.d == 2 and min_distance(out.words) >= 2


def test_first_recursive_property_randomized():
    rng = random.Random(3)
    for _ in range(1000):
        n = rng.randint(2, 5)
        d = rng.randint(1, n - 1)
        c = _random_pa(rng, n, d, tries=rng.randint(1, 6))
        r = rng.choice((2, 2, 3))
        out = first_recursive(c, r)
        assert len(out) == len(c) ** r
        assert validate_pa(out).valid


# --- chain codes -------------------------------------------------------------

def test_chain_binary_examples():
    assert build_chain_binary(4, 4).words == (identity(4),)
    chain = build_chain_binary(5, 3)
    assert set(chain.words) == {(1, 2, 3, 4, 5), (1, 5, 2, 3, 4), (5, 1, 2, 3, 4), (5, 4, 1, 2, 3)}
    assert min_distance(chain.words) == 3
    chain = build_chain_binary(8, 3)
    assert chain.size == 32
    assert min_distance(chain.words) == 3


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_chain_binary_equals_encoder_image(d):
    for k in range(0, 13 if d > 1 else 10):
        n = d + k
        chain = build_chain_binary(n, d)
        image = {encode_binary(x, n, d) for x in itertools.product((0, 1), repeat=k)}
        assert set(chain.words) == image
        assert chain.size == 2**k


def test_chain_qary_examples():
    for q, d in [(3, 2), (4, 1), (3, 3)]:
        assert build_chain_qary((q - 1) * d, d, q).words == (identity((q - 1) * d),)
    c = build_chain_qary(5, 2, 3)
    assert c.size == 3 and min_distance(c.words) >= 2
    c = build_chain_qary(6, 2, 3)
    assert c.size == 9 and min_distance(c.words) >= 2


def test_chain_qary_sizes_and_distance():
    for q in (2, 3, 4):
        for d in (1, 2, 3):
            start = (q - 1) * d
            for n in range(start, start + 5):
                if q ** (n - start) > 5000:
                    continue
                c = build_chain_qary(n, d, q)
                assert c.size == q ** (n - start) == len(set(c.words))
                assert validate_pa(c.as_pa()).valid


def test_chain_branches_spacing():
    for q in (2, 3, 5):
        for d in (1, 2, 4):
            for nu in range((q - 1) * d, (q - 1) * d + 10):
                s = chain_branches(nu, q)
                assert s[0] == 1 and s[-1] == nu + 1
                assert all(b - a >= d for a, b in zip(s, s[1:]))


def test_chain_limits():
    with pytest.raises(ResourceLimitError, match="codec"):
        build_chain_binary(40, 2)
    with pytest.raises(InvalidArgumentError):
        build_chain_qary(3, 2, 3)
