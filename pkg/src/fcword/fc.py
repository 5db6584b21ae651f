"""Fully commutative elements: reduced words whose commutation class
exhausts all reduced expressions, equivalently no class word contains a
braid factor s t s.

Two decision paths are provided on purpose.  The fast one checks the gap
condition on a single reduced word (between consecutive occurrences of a
generator there must be at least two letters it does not commute with);
the oracle materializes the commutation class and searches for braid
factors.  They are compared against each other in the test suite over
exhaustive ranges.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .coxeter import (
    CoxeterType,
    DomainError,
    FiniteA,
    InputError,
    commutes,
    render_word,
)
from . import perm
from .perm import Element

DEFAULT_CLASS_CAP = 10**6


def class_cap() -> int:
    """Commutation-class size bound; FCWORD_CAP overrides the default."""
    raw = os.environ.get("FCWORD_CAP")
    if raw is None:
        return DEFAULT_CLASS_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise InputError(f"FCWORD_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise InputError(f"FCWORD_CAP must be positive, got {cap}")
    return cap


def is_reduced(ctype: CoxeterType, letters) -> bool:
    return perm.length(perm.word_to_element(ctype, letters)) == len(letters)


def commutation_class(
    ctype: CoxeterType, letters, cap: int | None = None
) -> tuple[set[tuple[int, ...]], bool]:
    """All words reachable by swapping adjacent commuting letters.

    Returns (words, truncated).  When the class would exceed ``cap`` the
    search stops and truncated is True; callers that need the full class
    must treat that as an error.
    """
    if cap is None:
        cap = class_cap()
    start = tuple(letters)
    seen = {start}
    frontier = [start]
    truncated = False
    while frontier and not truncated:
        next_frontier = []
        for word in frontier:
            for i in range(len(word) - 1):
                s, t = word[i], word[i + 1]
                if s != t and commutes(ctype, s, t):
                    flipped = word[:i] + (t, s) + word[i + 2 :]
                    if flipped not in seen:
                        if len(seen) >= cap:
                            truncated = True
                            break
                        seen.add(flipped)
                        next_frontier.append(flipped)
            if truncated:
                break
        frontier = next_frontier
    return seen, truncated


def full_commutation_class(ctype: CoxeterType, letters, cap: int | None = None):
    words, truncated = commutation_class(ctype, letters, cap)
    if truncated:
        raise DomainError(
            f"commutation class of {render_word(ctype, letters)!r} exceeds cap "
            f"{cap if cap is not None else class_cap()}"
        )
    return words


def _gap_condition(ctype: CoxeterType, word) -> bool:
    last_seen: dict[int, int] = {}
    for pos, s in enumerate(word):
        prev = last_seen.get(s)
        if prev is not None:
            blockers = sum(
                1 for t in word[prev + 1 : pos] if not commutes(ctype, s, t)
            )
            if blockers < 2:
                return False
        last_seen[s] = pos
    return True


def _class_has_braid_factor(ctype: CoxeterType, letters, cap) -> bool:
    for word in full_commutation_class(ctype, letters, cap):
        for i in range(len(word) - 2):
            s, t = word[i], word[i + 1]
            if word[i + 2] == s and s != t and not commutes(ctype, s, t):
                return True
    return False


def is_fully_commutative(
    ctype: CoxeterType, letters, method: str = "fast", cap: int | None = None
) -> bool:
    """Decide full commutativity of the element spelled by a reduced word.

    Raises DomainError on non-reduced input: the criterion only makes
    sense for reduced expressions.
    """
    letters = tuple(letters)
    if not is_reduced(ctype, letters):
        raise DomainError(f"word {render_word(ctype, letters)!r} is not reduced")
    if method == "fast":
        return _gap_condition(ctype, letters)
    if method == "class":
        return not _class_has_braid_factor(ctype, letters, cap)
    raise InputError(f"unknown method {method!r}, expected 'fast' or 'class'")


def element_is_fc(x: Element) -> bool:
    """FC test on an element via its canonical reduced word."""
    return _gap_condition(x.ctype, perm.canonical_reduced_word(x))


@dataclass(frozen=True)
class FCEntry:
    element: Element
    word: tuple[int, ...]  # canonical reduced word


def enumerate_fc(ctype: CoxeterType, max_len: int) -> list[FCEntry]:
    """All FC elements of length <= max_len, ordered by length then by
    canonical word.  Works for both types; the affine groups are infinite
    so max_len is what keeps this finite.

    Fully commutative elements are closed under passing to prefixes, so a
    breadth-first search that only extends FC elements is exhaustive.
    """
    if max_len < 0:
        raise InputError(f"max_len must be >= 0, got {max_len}")
    ident = perm.identity(ctype)
    out = [FCEntry(ident, ())]
    frontier = {ident}
    for _ in range(max_len):
        nxt = {}
        for x in frontier:
            taken = set(perm.right_descents(x))
            for s in range(1, (ctype.n if isinstance(ctype, FiniteA) else ctype.n + 1) + 1):
                if s in taken:
                    continue
                y = perm.apply_word(x, (s,))
                if y in nxt:
                    continue
                if element_is_fc(y):
                    nxt[y] = perm.canonical_reduced_word(y)
        frontier = set(nxt)
        out.extend(
            FCEntry(y, w) for y, w in sorted(nxt.items(), key=lambda kv: kv[1])
        )
    return out


def count_fc_finite(n: int) -> int:
    """Number of FC elements of the rank-n finite system.  Matches the
    Catalan numbers (OEIS A000108, shifted): 2, 5, 14, 42, 132, 429, ...
    """
    if not 1 <= n <= 8:
        raise DomainError(f"count_fc_finite supports 1 <= n <= 8, got {n}")
    longest = n * (n + 1) // 2
    return len(enumerate_fc(FiniteA(n), longest))


def support_profile(ctype: CoxeterType, letters) -> tuple[tuple[int, int], ...]:
    """Multiset of letter multiplicities, as sorted (letter, count) pairs."""
    counts: dict[int, int] = {}
    for s in letters:
        counts[s] = counts.get(s, 0) + 1
    return tuple(sorted(counts.items()))


def all_reduced_words(x: Element, _memo=None) -> set[tuple[int, ...]]:
    """Every reduced expression, by descent recursion.  Exponential in
    general; meant for the bounded sweeps in the verification suite."""
    if _memo is None:
        _memo = {}
    got = _memo.get(x)
    if got is not None:
        return got
    if perm.is_identity(x):
        result = {()}
    else:
        result = set()
        for s in perm.right_descents(x):
            shorter = perm.apply_word(x, (s,))
            for w in all_reduced_words(shorter, _memo):
                result.add(w + (s,))
    _memo[x] = result
    return result


def reduced_word_count(ctype: CoxeterType, max_len: int) -> int:
    """Number of reduced words of length <= max_len (all elements)."""
    total = 0
    for _word, _x in iter_reduced_words(ctype, max_len):
        total += 1
    return total


def iter_reduced_words(ctype: CoxeterType, max_len: int):
    """Depth-first stream of (word, element) over all reduced words of
    length <= max_len, including the empty word."""
    gens = range(1, (ctype.n if isinstance(ctype, FiniteA) else ctype.n + 1) + 1)
    ident = perm.identity(ctype)

    def walk(word, x):
        yield word, x
        if len(word) == max_len:
            return
        for s in gens:
            if s not in perm.right_descents(x):
                y = perm.apply_word(x, (s,))
                yield from walk(word + (s,), y)

    yield from walk((), ident)
