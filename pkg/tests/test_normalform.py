import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fcword import fc, normalform as nfm, perm
from fcword.coxeter import AffineA, DomainError, FiniteA, parse_word


def elt(ct, text):
    return perm.word_to_element(ct, parse_word(ct, text))


# --- word fragments -------------------------------------------------------


def test_run_builders():
    assert nfm.desc_run(4, 2) == (4, 3, 2)
    assert nfm.desc_run(2, 4) == ()
    assert nfm.asc_run(2, 4) == (2, 3, 4)
    assert nfm.segment_word(3, 2, 3) == (2, 1, 3)
    assert nfm.segment_word(3, 0, 4) == ()
    assert nfm.hook_word(3, 2) == (2, 1, 3)
    assert nfm.hook_word(3, 3) == (3, 2, 1)
    assert nfm.hook_word(3, 1) == (1, 2, 3)


def test_split_maximal_runs():
    assert nfm.split_maximal_runs((2, 1, 3, 2)) == ((2, 1), (3, 2))
    assert nfm.split_maximal_runs(()) == ()
    assert nfm.split_maximal_runs((1, 3)) == ((1, 1), (3, 3))


# --- finite normal form ---------------------------------------------------


def test_finite_nf_frozen():
    x = elt(FiniteA(3), "2 1 3 2")
    nf = nfm.finite_nf(x)
    assert nf.runs == ((2, 1), (3, 2))
    assert nfm.finite_nf_to_word(nf) == (2, 1, 3, 2)
    assert nfm.lexmin_class_word(x) == (2, 1, 3, 2)
    assert json.dumps(nfm.finite_nf_record(nf)) == (
        '{"type": "finite_nf", "n": 3, "runs": [[2, 1], [3, 2]], "word": "2 1 3 2"}'
    )


def test_finite_nf_identity():
    nf = nfm.finite_nf(perm.identity(FiniteA(2)))
    assert nf.runs == ()
    assert nfm.finite_nf_to_word(nf) == ()


def test_finite_nf_rejects_non_fc():
    with pytest.raises(DomainError):
        nfm.finite_nf(elt(FiniteA(2), "1 2 1"))


def test_finite_run_rules():
    assert nfm.validate_finite_runs(3, ((2, 1), (3, 2))) == []
    assert nfm.validate_finite_runs(3, ((3, 1), (2, 2)))  # heads must increase
    assert nfm.validate_finite_runs(3, ((2, 2), (3, 1)))  # feet must increase
    assert nfm.validate_finite_runs(2, ((3, 1),))  # out of range
    assert nfm.parse_finite_word(3, (2, 1, 3, 2)).runs == ((2, 1), (3, 2))
    assert nfm.parse_finite_word(3, (1, 2)) is not None
    assert nfm.parse_finite_word(3, (2, 1, 1)) is None


def test_finite_uniqueness_rank4():
    ct = FiniteA(4)
    for entry in fc.enumerate_fc(ct, 10):
        matches = nfm.finite_nf_matches(entry.element)
        assert len(matches) == 1
        assert matches[0] == nfm.finite_nf_to_word(nfm.finite_nf(entry.element))


# --- affine normal form: frozen examples ----------------------------------


def test_affine_record_frozen_exact():
    x = elt(AffineA(3), "1 3 a")
    rec = nfm.affine_nf_record(nfm.affine_nf(x))
    assert json.dumps(rec) == (
        '{"type": "affine_nf", "n": 3, "short": [[1, 3]], "j": 2, "k": 0, '
        '"residue": {"kind": "finite", "runs": []}, "word": "1 3 a"}'
    )


def test_affine_bare_cycle_letter():
    nf = nfm.affine_nf(elt(AffineA(2), "a"))
    assert nf.segments == () and nf.k == 0 and nf.has_residue_a
    rec = nfm.affine_nf_record(nf)
    assert rec["hasResidueA"] is True
    assert rec["word"] == "a"
    assert "j" not in rec  # no hook is involved at k=0 with no segments


def test_affine_staircase_frozen():
    x = elt(AffineA(3), "a 2 1 3 a 2 1 3 a")
    nf = nfm.affine_nf(x)
    assert (nf.p, nf.j, nf.k, nf.has_residue_a) == (0, 2, 2, True)
    assert nfm.affine_nf_record(nf)["residue"] == {"kind": "staircase", "j": 2, "d": []}


def test_affine_staircase_with_feet():
    x = elt(AffineA(3), "a 2 1 3 a 2 1 3 a 2 1 3 2")
    rec = nfm.affine_nf_record(nfm.affine_nf(x))
    assert rec["residue"] == {"kind": "staircase", "j": 2, "d": [1, 2]}
    assert rec["k"] == 2


def test_affine_single_segment_families():
    # one ascending segment, then the same thing repeated once
    nf = nfm.affine_nf(elt(AffineA(2), "1 2 a"))
    assert (nf.segments, nf.j, nf.k) == (((1, 2),), 1, 0)
    nf2 = nfm.affine_nf(elt(AffineA(2), "1 2 a 1 2 a"))
    assert (nf2.segments, nf2.j, nf2.k) == (((1, 2),), 1, 1)


def test_affine_leading_empty_segment():
    # a bare leading cycle letter reads as the (0, n+1) segment, allowed
    # only at the head of a multi-segment prefix
    nf = nfm.affine_nf(elt(AffineA(3), "a 1 3 a"))
    assert nf.segments == ((0, 4), (1, 3))
    assert (nf.j, nf.k) == (2, 0)


def test_affine_finite_residue():
    rec = nfm.affine_nf_record(nfm.affine_nf(elt(AffineA(3), "2 1 3 a 2 1")))
    assert rec["short"] == [[2, 3]]
    assert rec["residue"] == {"kind": "finite", "runs": [[2, 1]]}


def test_affine_nf_rejects():
    with pytest.raises(DomainError):
        nfm.affine_nf(elt(AffineA(2), "1 2"))  # support avoids the cycle letter
    with pytest.raises(DomainError):
        nfm.affine_nf(elt(AffineA(2), "1 2 1 a"))  # not fully commutative
    with pytest.raises(DomainError):
        nfm.affine_nf(elt(FiniteA(3), "1 3"))


# --- affine grammar: validation modes --------------------------------------


def test_lenient_accepts_what_strict_bans():
    # the empty segment alone spells the same word as the bare cycle letter
    nf = nfm.AffineNF(3, ((0, 4),), None, 0, nfm.FiniteTail(()))
    assert nfm.validate_affine_nf(nf, "lenient") == []
    assert nfm.validate_affine_nf(nf, "strict")
    assert nfm.affine_nf_to_word(nf, "lenient") == (4,)


def test_strict_rules_fire():
    ft = nfm.FiniteTail(())
    # (0, 1) must read as (1, 2): banned outright
    assert nfm.validate_affine_nf(nfm.AffineNF(3, ((0, 1),), 0, 0, ft), "lenient")
    # segment i strictly increasing, r strictly decreasing
    two = nfm.AffineNF(3, ((2, 3), (2, 2)), 1, 0, ft)
    assert nfm.validate_affine_nf(two, "strict")
    # unit last segment needs p == 1
    unit2 = nfm.AffineNF(3, ((1, 4), (2, 3)), 2, 1, nfm.StaircaseTail(2, ()))
    assert any("one-hook" in m for m in nfm.validate_affine_nf(unit2, "strict"))
    assert nfm.validate_affine_nf(unit2, "lenient") == []
    # k=0 convention pins j to the window top
    k0 = nfm.AffineNF(3, ((1, 3),), 1, 0, ft)
    assert nfm.validate_affine_nf(k0, "strict")
    assert nfm.validate_affine_nf(k0, "lenient") == []


def test_mode_name_checked():
    nf = nfm.AffineNF(2, (), None, 0, nfm.FiniteTail(()))
    with pytest.raises(Exception):
        nfm.validate_affine_nf(nf, "loose")


# --- oracle agreement and canonicity ---------------------------------------


def test_fast_parse_equals_oracle_head_rank2():
    ct = AffineA(2)
    for entry in fc.enumerate_fc(ct, 9):
        if 3 not in entry.word:
            continue
        fast = nfm.affine_nf(entry.element)
        parses = nfm.affine_nf_parses(entry.element, "strict")
        assert parses == [fast]
        lenient = nfm.affine_nf_parses(entry.element, "lenient")
        assert fast in lenient


def test_canonical_word_round_trips_rank3():
    ct = AffineA(3)
    for entry in fc.enumerate_fc(ct, 8):
        if 4 not in entry.word:
            continue
        nf = nfm.affine_nf(entry.element)
        w = nfm.affine_nf_to_word(nf)
        assert perm.word_to_element(ct, w) == entry.element
        assert len(w) == perm.length(entry.element)


def test_battery_codes_known():
    ct = AffineA(3)
    for entry in fc.enumerate_fc(ct, 9):
        if 4 not in entry.word:
            continue
        for code in nfm.measured_rules(nfm.affine_nf(entry.element)):
            assert code in nfm.BATTERY_CODES


@settings(deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=11).map(tuple))
def test_affine_nf_random_words_rank2(w):
    ct = AffineA(2)
    x = perm.word_to_element(ct, w)
    cw = perm.canonical_reduced_word(x)
    if 3 not in cw or not fc.element_is_fc(x):
        return
    nf = nfm.affine_nf(x)
    assert nfm.validate_affine_nf(nf, "strict") == []
    assert perm.word_to_element(ct, nfm.affine_nf_to_word(nf)) == x


# --- block decomposition ----------------------------------------------------


def test_block_decomposition_splits_word():
    for n, text in ((2, "1 2 a 1 2 a"), (3, "a 2 1 3 a 2 1 3 a 2 1 3 2"),
                    (3, "2 1 3 a 2 1"), (2, "a")):
        ct = AffineA(n)
        x = elt(ct, text)
        nf = nfm.affine_nf(x)
        dec = nfm.block_decomposition(nf)
        assert dec.short + dec.period * dec.k + dec.residue == nfm.affine_nf_to_word(nf)
        if dec.k:
            assert len(dec.period) == n + 1


# --- rank-2 tree forms ------------------------------------------------------


def test_tree_tiling_and_duplicates():
    ct = AffineA(2)
    seen = {}
    for form in nfm.a2_tree_words(4):
        w = form.word()
        if len(w) > 14:
            continue
        x = perm.word_to_element(ct, w)
        assert perm.length(x) == len(w)  # every tree word is reduced
        seen.setdefault(x, []).append(form)
    fcset = {e.element for e in fc.enumerate_fc(ct, 14)}
    assert set(seen) == fcset
    dupes = {perm.canonical_reduced_word(x): len(v) for x, v in seen.items() if len(v) > 1}
    assert dupes == {(): 2, (3,): 2}


def test_tree_form_prefers_first_family():
    ct = AffineA(2)
    ident = perm.identity(ct)
    form = nfm.a2_tree_form(ident)
    assert (form.tree, form.prefix, form.k, form.suffix) == ("T1", (), 0, ())
    cyc = elt(ct, "a")
    assert nfm.a2_tree_form(cyc).tree == "T1"
    deep = elt(ct, "2 1 3 2 1 3 2 1 3")
    got = nfm.a2_tree_form(deep)
    assert got.word() and perm.word_to_element(ct, got.word()) == deep


def test_tree_form_rejects_wrong_system():
    with pytest.raises(DomainError):
        nfm.a2_tree_form(perm.identity(AffineA(3)))
