from hypothesis import given
from hypothesis import strategies as st

from fcword import perm
from fcword.coxeter import AffineA, FiniteA


def test_identity_windows():
    assert perm.identity(FiniteA(3)).window == (1, 2, 3, 4)
    assert perm.identity(AffineA(2)).window == (1, 2, 3)


def test_apply_word_frozen_finite():
    # s2 then s1 acting on positions: 1234 -> 1324 -> 3124, window offsets
    x = perm.word_to_element(FiniteA(2), (2, 1))
    assert x.window == (3, 1, 2)
    assert perm.length(x) == 2


def test_apply_word_frozen_affine():
    ct = AffineA(2)
    assert perm.word_to_element(ct, (3,)).window == (0, 2, 4)
    assert perm.word_to_element(ct, (1, 3)).window == (0, 1, 5)
    assert perm.word_to_element(ct, (2, 3, 2)).window == (-1, 4, 3)
    assert perm.word_to_element(AffineA(3), (1, 3, 4)).window == (-1, 1, 4, 6)


def test_affine_window_shift_values():
    # window entries are defined mod period up to the total shift staying 0
    ct = AffineA(3)
    x = perm.word_to_element(ct, (4,))
    assert x.window == (0, 2, 3, 5)
    assert sum(x.window) == sum((1, 2, 3, 4))


def test_value_at_periodicity():
    ct = AffineA(2)
    x = perm.word_to_element(ct, (1, 3))
    for i in range(-5, 6):
        assert perm.value_at(x, i + 3) == perm.value_at(x, i) + 3


words_finite = st.lists(st.integers(1, 3), max_size=12).map(tuple)
words_affine = st.lists(st.integers(1, 4), max_size=12).map(tuple)


@given(words_finite)
def test_length_matches_inversions_finite(w):
    x = perm.word_to_element(FiniteA(3), w)
    assert perm.length(x) == perm.length_by_inversions(x)


@given(words_affine)
def test_length_matches_inversions_affine(w):
    x = perm.word_to_element(AffineA(3), w)
    assert perm.length(x) == perm.length_by_inversions(x)


@given(words_affine)
def test_canonical_word_is_reduced_and_round_trips(w):
    ct = AffineA(3)
    x = perm.word_to_element(ct, w)
    cw = perm.canonical_reduced_word(x)
    assert len(cw) == perm.length(x) <= len(w)
    assert perm.word_to_element(ct, cw) == x


@given(words_affine, words_affine)
def test_multiply_matches_concatenation(u, v):
    ct = AffineA(3)
    x = perm.word_to_element(ct, u)
    y = perm.word_to_element(ct, v)
    assert perm.multiply(x, y) == perm.word_to_element(ct, u + v)


@given(words_affine)
def test_invert(w):
    ct = AffineA(3)
    x = perm.word_to_element(ct, w)
    assert perm.multiply(x, perm.invert(x)) == perm.identity(ct)
    assert perm.length(perm.invert(x)) == perm.length(x)


def test_descents_are_length_drops():
    ct = AffineA(2)
    for w in ((), (1,), (1, 2), (1, 2, 3), (3, 1), (2, 3, 2, 1)):
        x = perm.word_to_element(ct, w)
        for s in (1, 2, 3):
            drops = perm.length(perm.apply_word(x, (s,))) < perm.length(x)
            assert (s in perm.right_descents(x)) == drops
            lx = perm.word_to_element(ct, (s,) + perm.canonical_reduced_word(x))
            assert (s in perm.left_descents(x)) == (perm.length(lx) < perm.length(x))
