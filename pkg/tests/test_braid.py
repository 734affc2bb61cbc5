"""Handle reduction and the braid word problem."""

import random

import pytest

from bvwords.braid import (
    braid_to_word,
    braid_word,
    equal_braid,
    exponent_sum,
    free_reduce_braid,
    handle_reduce,
    invert_braid,
    is_trivial_braid,
    permutation_image,
    word_to_braid,
)
from bvwords.limits import Budget, StepLimitExceeded
from bvwords.perms import Permutation
from bvwords.words import sig


def _random_braid(rng, max_index, max_len):
    n = rng.randrange(max_len + 1)
    return tuple((rng.randrange(max_index + 1), rng.choice((1, -1))) for _ in range(n))


def _insert_relator(b, rng):
    """Splice a defining relator of the braid group into b at a random spot."""
    i = rng.randrange(7)
    if rng.random() < 0.5:
        j = i + 2 + rng.randrange(3)
        rel = ((i, 1), (j, 1), (i, -1), (j, -1))
    else:
        rel = ((i, 1), (i + 1, 1), (i, 1), (i + 1, -1), (i, -1), (i + 1, -1))
    pos = rng.randrange(len(b) + 1)
    return b[:pos] + rel + b[pos:]


def test_braid_word_validation():
    assert braid_word([(0, 1), (3, -1)]) == ((0, 1), (3, -1))
    with pytest.raises(ValueError):
        braid_word([(-1, 1)])
    with pytest.raises(ValueError):
        braid_word([(0, 2)])


def test_word_conversion_round_trip():
    w = (sig(0), sig(2, -1), sig(1))
    assert braid_to_word(word_to_braid(w)) == w


def test_free_reduce_and_invert():
    b = ((0, 1), (1, 1), (1, -1), (0, -1), (2, 1))
    assert free_reduce_braid(b) == ((2, 1),)
    assert free_reduce_braid(b + invert_braid(b)) == ()


def test_exponent_sum():
    assert exponent_sum(()) == 0
    assert exponent_sum(((0, 1), (3, 1), (0, -1), (5, 1))) == 2


def test_permutation_image():
    b = ((0, 1), (1, -1))
    p = permutation_image(b)
    assert p == Permutation({0: 1, 1: 2, 2: 0})


def test_defining_relators_are_trivial():
    far = ((0, 1), (2, 1), (0, -1), (2, -1))
    braid = ((1, 1), (2, 1), (1, 1), (2, -1), (1, -1), (2, -1))
    assert is_trivial_braid(far)
    assert is_trivial_braid(braid)
    assert handle_reduce(far) == ()
    assert handle_reduce(braid) == ()


def test_generators_are_not_trivial():
    assert not is_trivial_braid(((0, 1),))
    # order matters: squares survive in the braid group
    assert not is_trivial_braid(((0, 1), (0, 1)))
    assert not is_trivial_braid(((0, 1), (1, 1), (0, 1), (1, 1)))


def test_inverse_pairs_are_trivial():
    rng = random.Random(41)
    for _ in range(200):
        b = _random_braid(rng, 6, 20)
        assert is_trivial_braid(b + invert_braid(b))


def test_verdict_invariant_under_relator_insertion():
    rng = random.Random(43)
    for _ in range(300):
        b = _random_braid(rng, 6, 12)
        verdict = is_trivial_braid(b)
        assert is_trivial_braid(_insert_relator(b, rng)) == verdict


def test_trivial_implies_invariants_vanish():
    rng = random.Random(47)
    for _ in range(500):
        b = _random_braid(rng, 6, 20)
        if is_trivial_braid(b):
            assert exponent_sum(b) == 0
            assert permutation_image(b).is_identity()


def test_equal_braid():
    lhs = ((0, 1), (1, 1), (0, 1))
    rhs = ((1, 1), (0, 1), (1, 1))
    assert equal_braid(lhs, rhs)
    assert not equal_braid(lhs, rhs[:-1])


def test_handle_reduce_preserves_element():
    rng = random.Random(53)
    for _ in range(100):
        b = _random_braid(rng, 5, 14)
        assert equal_braid(b, handle_reduce(b))


def test_budget_cap_raises():
    b = ((0, 1), (1, 1), (0, -1)) * 10
    with pytest.raises(StepLimitExceeded):
        handle_reduce(b, Budget(limit=2))
