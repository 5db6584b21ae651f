"""Coxeter systems of type A: the finite path diagram on generators
``1..n`` and the affine cycle diagram on ``1..n+1``.

Generators are plain 1-based integers.  In the affine system the extra
cycle-closing generator has index ``n+1`` and is written ``a`` in word
text, so the word ``(2, 1, 4)`` over the rank-3 affine system renders as
``"2 1 a"``.
"""

from __future__ import annotations

from dataclasses import dataclass


class InputError(ValueError):
    """Malformed input: unknown tokens, out-of-range letters, bad windows."""


class DomainError(ValueError):
    """Structurally valid input that violates an operation's precondition."""


@dataclass(frozen=True)
class FiniteA:
    """Path diagram: generators 1..n, neighbours differ by one."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"finite type needs n >= 1, got {self.n}")


@dataclass(frozen=True)
class AffineA:
    """Cycle diagram: generators 1..n+1, adjacency wraps around.

    Rank 1 is excluded: a two-node cycle would need an infinite bond,
    which nothing here models.
    """

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise InputError(f"affine type needs n >= 2, got {self.n}")


CoxeterType = FiniteA | AffineA


def num_generators(ctype: CoxeterType) -> int:
    return ctype.n if isinstance(ctype, FiniteA) else ctype.n + 1


def generators(ctype: CoxeterType) -> range:
    return range(1, num_generators(ctype) + 1)


def affine_letter(ctype: CoxeterType) -> int | None:
    """Index of the cycle-closing generator, or None for the finite type."""
    return ctype.n + 1 if isinstance(ctype, AffineA) else None


def _check_letter(ctype: CoxeterType, s: int) -> None:
    if not 1 <= s <= num_generators(ctype):
        raise InputError(f"letter {s} out of range for {describe(ctype)}")


def coxeter_matrix_entry(ctype: CoxeterType, s: int, t: int) -> int:
    """Order of s*t: 1 on the diagonal, 3 for neighbours, 2 otherwise.

    >>> coxeter_matrix_entry(FiniteA(3), 1, 2)
    3
    >>> coxeter_matrix_entry(AffineA(3), 1, 4)
    3
    >>> coxeter_matrix_entry(AffineA(3), 2, 4)
    2
    """
    _check_letter(ctype, s)
    _check_letter(ctype, t)
    if s == t:
        return 1
    if isinstance(ctype, FiniteA):
        return 3 if abs(s - t) == 1 else 2
    m = ctype.n + 1
    d = (s - t) % m
    return 3 if d in (1, m - 1) else 2


def commutes(ctype: CoxeterType, s: int, t: int) -> bool:
    return coxeter_matrix_entry(ctype, s, t) == 2


def describe(ctype: CoxeterType) -> str:
    kind = "finite-a" if isinstance(ctype, FiniteA) else "affine-a"
    return f"{kind}:{ctype.n}"


def type_from_string(text: str) -> CoxeterType:
    """Parse "finite-a:3" / "affine-a:2" as used by the CLI --type flag."""
    kind, sep, rank = text.strip().partition(":")
    if not sep or not rank.lstrip("-").isdigit():
        raise InputError(f"bad type {text!r}, expected finite-a:N or affine-a:N")
    n = int(rank)
    if kind == "finite-a":
        return FiniteA(n)
    if kind == "affine-a":
        return AffineA(n)
    raise InputError(f"unknown type kind {kind!r}")


def parse_word(ctype: CoxeterType, text: str) -> tuple[int, ...]:
    """Space-separated letters; the affine generator is spelled "a".

    >>> parse_word(AffineA(3), "2 1 a")
    (2, 1, 4)
    """
    letters = []
    for tok in text.split():
        if tok == "a":
            idx = affine_letter(ctype)
            if idx is None:
                raise InputError("letter 'a' is only valid for affine types")
            letters.append(idx)
        elif tok.isdigit():
            s = int(tok)
            _check_letter(ctype, s)
            letters.append(s)
        else:
            raise InputError(f"bad letter token {tok!r}")
    return tuple(letters)


def render_word(ctype: CoxeterType, letters) -> str:
    """Inverse of parse_word.

    >>> render_word(AffineA(3), (2, 1, 4))
    '2 1 a'
    """
    aff = affine_letter(ctype)
    parts = []
    for s in letters:
        _check_letter(ctype, s)
        parts.append("a" if s == aff else str(s))
    return " ".join(parts)
