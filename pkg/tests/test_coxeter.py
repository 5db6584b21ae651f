import doctest

import pytest

import fcword.coxeter
import fcword.perm
from fcword.coxeter import (
    AffineA,
    FiniteA,
    InputError,
    affine_letter,
    commutes,
    coxeter_matrix_entry,
    describe,
    num_generators,
    parse_word,
    render_word,
    type_from_string,
)


def test_doctests():
    for mod in (fcword.coxeter, fcword.perm):
        assert doctest.testmod(mod).failed == 0


def test_type_round_trip():
    for text in ("finite-a:1", "finite-a:6", "affine-a:2", "affine-a:5"):
        assert describe(type_from_string(text)) == text


def test_rank_bounds():
    with pytest.raises(InputError):
        FiniteA(0)
    with pytest.raises(InputError):
        AffineA(1)  # the rank-1 cycle would need an infinite bond
    with pytest.raises(InputError):
        type_from_string("finite-a:x")
    with pytest.raises(InputError):
        type_from_string("affine")


def test_generator_counts():
    assert num_generators(FiniteA(4)) == 4
    assert num_generators(AffineA(4)) == 5
    assert affine_letter(FiniteA(4)) is None
    assert affine_letter(AffineA(4)) == 5


def test_matrix_entries_finite():
    ct = FiniteA(4)
    assert coxeter_matrix_entry(ct, 2, 2) == 1
    assert coxeter_matrix_entry(ct, 2, 3) == 3
    assert coxeter_matrix_entry(ct, 1, 3) == 2
    assert commutes(ct, 1, 4)
    assert not commutes(ct, 3, 4)


def test_matrix_entries_affine_wrap():
    # the cycle letter braids with both ends and commutes with the middle
    ct = AffineA(4)
    a = affine_letter(ct)
    assert coxeter_matrix_entry(ct, a, 1) == 3
    assert coxeter_matrix_entry(ct, a, 4) == 3
    assert coxeter_matrix_entry(ct, a, 2) == 2
    assert coxeter_matrix_entry(ct, a, 3) == 2


def test_affine_rank2_all_bonds_braid():
    ct = AffineA(2)
    for s in (1, 2, 3):
        for t in (1, 2, 3):
            if s != t:
                assert coxeter_matrix_entry(ct, s, t) == 3


def test_parse_render_words():
    ct = AffineA(3)
    assert parse_word(ct, "2 1 a") == (2, 1, 4)
    assert render_word(ct, (2, 1, 4)) == "2 1 a"
    assert parse_word(ct, "") == ()
    assert render_word(ct, ()) == ""
    assert parse_word(FiniteA(5), "5 4 5") == (5, 4, 5)


def test_parse_word_rejects_bad_letters():
    with pytest.raises(InputError):
        parse_word(FiniteA(3), "1 a")
    with pytest.raises(InputError):
        parse_word(FiniteA(3), "4")
    with pytest.raises(InputError):
        parse_word(AffineA(3), "0")
    with pytest.raises(InputError):
        parse_word(AffineA(3), "1 b")
