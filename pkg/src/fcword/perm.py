"""Window model for finite and affine permutations.

An affine permutation w of rank n is a bijection of the integers with
w(i + N) = w(i) + N for N = n+1, pinned down by its window
[w(1), ..., w(N)]: the entries hit every residue class mod N exactly once
and sum to N(N+1)/2.  Finite permutations use the same window storage
with plain 1..N entries.

Words act on the right: letter i < N swaps window positions i and i+1,
and the affine letter N replaces (w(1), w(N)) by (w(N)-N, w(1)+N).

>>> x = word_to_element(AffineA(2), (3,))
>>> x.window
(0, 2, 4)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .coxeter import (
    AffineA,
    CoxeterType,
    FiniteA,
    InputError,
    describe,
    num_generators,
)


@dataclass(frozen=True)
class Element:
    ctype: CoxeterType
    window: tuple[int, ...]

    def __repr__(self):
        return f"Element({describe(self.ctype)}, {list(self.window)})"


def identity(ctype: CoxeterType) -> Element:
    N = ctype.n + 1
    return Element(ctype, tuple(range(1, N + 1)))


def from_window(ctype: CoxeterType, values) -> Element:
    """Validated constructor.

    >>> from_window(AffineA(2), [0, 2, 4]).window
    (0, 2, 4)
    """
    N = ctype.n + 1
    vals = tuple(int(v) for v in values)
    if len(vals) != N:
        raise InputError(f"window needs {N} entries, got {len(vals)}")
    if isinstance(ctype, FiniteA):
        if sorted(vals) != list(range(1, N + 1)):
            raise InputError(f"window {list(vals)} is not a permutation of 1..{N}")
    else:
        if len({v % N for v in vals}) != N:
            raise InputError(f"window {list(vals)} repeats a residue mod {N}")
        if sum(vals) != N * (N + 1) // 2:
            raise InputError(
                f"window {list(vals)} sums to {sum(vals)}, expected {N * (N + 1) // 2}"
            )
    return Element(ctype, vals)


def is_identity(x: Element) -> bool:
    return x == identity(x.ctype)


def _check_letters(ctype: CoxeterType, letters) -> None:
    g = num_generators(ctype)
    for s in letters:
        if not 1 <= s <= g:
            raise InputError(f"letter {s} out of range for {describe(ctype)}")


def apply_word(x: Element, letters) -> Element:
    """x times the word, one letter at a time."""
    _check_letters(x.ctype, letters)
    return Element(x.ctype, tuple(kernels.apply_word(x.window, letters, x.ctype.n)))


def word_to_element(ctype: CoxeterType, letters) -> Element:
    return apply_word(identity(ctype), letters)


def value_at(x: Element, i: int) -> int:
    """w(i) for any integer i, via periodicity."""
    N = x.ctype.n + 1
    q, r = divmod(i - 1, N)
    return x.window[r] + q * N


def multiply(x: Element, y: Element) -> Element:
    if x.ctype != y.ctype:
        raise InputError("cannot multiply elements of different types")
    N = x.ctype.n + 1
    return Element(x.ctype, tuple(value_at(x, y.window[i]) for i in range(N)))


def invert(x: Element) -> Element:
    N = x.ctype.n + 1
    pos = {x.window[r] % N: r for r in range(N)}
    out = []
    for j in range(1, N + 1):
        r = pos[j % N]
        q = (j - x.window[r]) // N
        out.append(r + 1 + q * N)
    return Element(x.ctype, tuple(out))


def right_descents(x: Element) -> tuple[int, ...]:
    """Letters s with length(x*s) < length(x), ascending."""
    N = x.ctype.n + 1
    W = x.window
    out = [i + 1 for i in range(N - 1) if W[i] > W[i + 1]]
    if isinstance(x.ctype, AffineA) and W[N - 1] > W[0] + N:
        out.append(N)
    return tuple(out)


def left_descents(x: Element) -> tuple[int, ...]:
    return right_descents(invert(x))


@lru_cache(maxsize=200_000)
def canonical_reduced_word(x: Element) -> tuple[int, ...]:
    """Reduced word found by stripping the smallest right descent until
    the identity remains.  Deterministic, so usable as a dictionary key
    for the element."""
    affine = isinstance(x.ctype, AffineA)
    return tuple(kernels.strip_word(x.window, x.ctype.n, affine))


def length(x: Element) -> int:
    return len(canonical_reduced_word(x))


def length_by_inversions(x: Element) -> int:
    """Independent length formula used to cross-check the stripping loop:
    finite inversion count, or its affine refinement
    sum over i<j of |floor((w(j) - w(i)) / N)|."""
    N = x.ctype.n + 1
    W = x.window
    if isinstance(x.ctype, FiniteA):
        return sum(1 for i in range(N) for j in range(i + 1, N) if W[i] > W[j])
    total = 0
    for i in range(N):
        for j in range(i + 1, N):
            total += abs((W[j] - W[i]) // N)
    return total
