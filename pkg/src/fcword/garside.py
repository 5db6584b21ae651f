"""Greedy normal forms in the braid groups B_m (m <= 8 strands).

Every braid word over sigma_1..sigma_{m-1} and their inverses is put
into the form delta^d x_1 x_2 ... x_l where delta is the positive half
twist, each x_i is a permutation braid (identified with its image in the
symmetric group), and consecutive factors are left-weighted.  That form
is unique, so it gives an exact equality test for braid identities.

The symmetric group is small enough here that we tabulate it outright:
flat multiplication tables and descent bitmasks, shared by the compiled
and pure-Python normalization kernels.

The affine braid group on n+1 generators (the braid version of the
cyclic diagram, n >= 2) embeds into B_{n+2}: picture one extra axis
strand, send generator i to the crossing sigma_{i+1}, and send the cycle
generator to a conjugate of sigma_{n+1} that carries the last strand
around the axis.  ``affine_embedding`` builds the map and refuses to
hand it out until every defining relation of the source group has been
checked through the normal form, so a wrong rotation word cannot
silently corrupt downstream results.
"""

from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .coxeter import AffineA, InputError, coxeter_matrix_entry

MAX_STRANDS = 8


@dataclass(frozen=True)
class SymTables:
    m: int
    perms: tuple
    index: dict
    rmul: array
    lmul: array
    rdesc: array
    ldesc: array
    inv: array
    tau: array
    id_idx: int
    w0: int
    gen: tuple  # gen[g] = index of the transposition (g, g+1), 0-based g
    lc: tuple  # lc[g] = index of w0 * s_g, the inverse-letter factor


@lru_cache(maxsize=None)
def sym_tables(m: int) -> SymTables:
    if not 2 <= m <= MAX_STRANDS:
        raise InputError(f"strand count {m} outside 2..{MAX_STRANDS}")
    perms = tuple(sorted(itertools.permutations(range(m))))
    index = {p: i for i, p in enumerate(perms)}
    fan = m - 1
    total = len(perms)
    rmul = array("i", bytes(4 * total * fan))
    lmul = array("i", bytes(4 * total * fan))
    rdesc = array("Q", bytes(8 * total))
    ldesc = array("Q", bytes(8 * total))
    inv = array("i", bytes(4 * total))
    tau = array("i", bytes(4 * total))
    w0_tuple = tuple(reversed(range(m)))
    for idx, p in enumerate(perms):
        q = [0] * m
        for i, v in enumerate(p):
            q[v] = i
        inv[idx] = index[tuple(q)]
        tau[idx] = index[tuple(m - 1 - p[m - 1 - i] for i in range(m))]
        mask = 0
        for g in range(fan):
            if p[g] > p[g + 1]:
                mask |= 1 << g
            lst = list(p)
            lst[g], lst[g + 1] = lst[g + 1], lst[g]
            rmul[idx * fan + g] = index[tuple(lst)]
            lmul[idx * fan + g] = index[
                tuple(g + 1 if v == g else g if v == g + 1 else v for v in p)
            ]
        rdesc[idx] = mask
    for idx in range(total):
        ldesc[idx] = rdesc[inv[idx]]
    id_idx = index[tuple(range(m))]
    w0 = index[w0_tuple]
    gen = []
    for g in range(fan):
        lst = list(range(m))
        lst[g], lst[g + 1] = lst[g + 1], lst[g]
        gen.append(index[tuple(lst)])
    lc = tuple(rmul[w0 * fan + g] for g in range(fan))
    return SymTables(
        m, perms, index, rmul, lmul, rdesc, ldesc, inv, tau, id_idx, w0, tuple(gen), lc
    )


@dataclass(frozen=True)
class BraidNF:
    """delta^delta_power followed by left-weighted permutation braids,
    stored as table indices (never the identity, never the half twist)."""

    m: int
    delta_power: int
    factors: tuple[int, ...]

    def is_trivial(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def canonical_length(self) -> int:
        return len(self.factors)


def normal_form(m: int, letters) -> BraidNF:
    """Normalize a signed word: letter +s is sigma_s, -s its inverse."""
    tb = sym_tables(m)
    fan = m - 1
    pre = []
    for s in letters:
        g = abs(s) - 1
        if not 0 <= g < fan:
            raise InputError(f"braid letter {s} outside 1..{fan}")
        if s > 0:
            pre.append((0, tb.gen[g]))
        else:
            pre.append((-1, tb.lc[g]))
    dsum = 0
    factors = []
    for d, f in reversed(pre):
        if dsum % 2:
            f = tb.tau[f]
        factors.append(f)
        dsum += d
    factors.reverse()
    extra, fs = kernels.normalize_factors(
        factors, tb.rmul, tb.lmul, tb.rdesc, tb.ldesc, fan, tb.id_idx, tb.w0
    )
    return BraidNF(m, dsum + extra, tuple(fs))


def braids_equal(m: int, word_a, word_b) -> bool:
    return normal_form(m, word_a) == normal_form(m, word_b)


def factor_letters(m: int, idx: int) -> tuple[int, ...]:
    """One positive word spelling a permutation braid (descent stripping)."""
    tb = sym_tables(m)
    fan = m - 1
    out = []
    while idx != tb.id_idx:
        mask = tb.rdesc[idx]
        g = (mask & -mask).bit_length() - 1
        out.append(g + 1)
        idx = tb.rmul[idx * fan + g]
    out.reverse()
    return tuple(out)


def delta_letters(m: int) -> tuple[int, ...]:
    return factor_letters(m, sym_tables(m).w0)


def nf_letters(nf: BraidNF) -> tuple[int, ...]:
    """A signed word spelling the normal form back out."""
    dw = delta_letters(nf.m)
    out: list[int] = []
    if nf.delta_power >= 0:
        out.extend(dw * nf.delta_power)
    else:
        out.extend(tuple(-g for g in reversed(dw)) * (-nf.delta_power))
    for f in nf.factors:
        out.extend(factor_letters(nf.m, f))
    return tuple(out)


# ---------------------------------------------------------------------------
# the affine-to-finite braid embedding


@dataclass(frozen=True)
class AffineEmbedding:
    n: int
    strands: int
    images: tuple[tuple[int, ...], ...]  # source letter s -> images[s-1]


def _conjugate(rho, letter: int) -> tuple[int, ...]:
    return tuple(rho) + (letter,) + tuple(-g for g in reversed(rho))


def build_embedding(n: int) -> AffineEmbedding:
    """Candidate embedding; use affine_embedding() for the checked one."""
    if n < 2:
        raise InputError("affine systems start at rank 2")
    rho = (1, 1) + tuple(range(2, n + 2))
    images = [(i + 1,) for i in range(1, n + 1)]
    images.append(_conjugate(rho, n + 1))
    return AffineEmbedding(n, n + 2, tuple(images))


def embed_letters(emb: AffineEmbedding, letters) -> tuple[int, ...]:
    """Push a signed affine braid word through the embedding."""
    out: list[int] = []
    for s in letters:
        g = abs(s)
        if not 1 <= g <= emb.n + 1:
            raise InputError(f"affine braid letter {s} outside 1..{emb.n + 1}")
        img = emb.images[g - 1]
        if s > 0:
            out.extend(img)
        else:
            out.extend(-t for t in reversed(img))
    return tuple(out)


def validate_embedding(emb: AffineEmbedding) -> list[str]:
    """Check every defining relation of the source group in B_strands."""
    ctype = AffineA(emb.n)
    bad = []
    gens = range(1, emb.n + 2)
    for s in gens:
        for t in gens:
            if s >= t:
                continue
            if coxeter_matrix_entry(ctype, s, t) == 3:
                lhs, rhs = (s, t, s), (t, s, t)
            else:
                lhs, rhs = (s, t), (t, s)
            if not braids_equal(
                emb.strands, embed_letters(emb, lhs), embed_letters(emb, rhs)
            ):
                bad.append(f"relation on ({s},{t}) broken")
    # injectivity smoke check: no generator image may be trivial
    for s in gens:
        if normal_form(emb.strands, embed_letters(emb, (s,))).is_trivial():
            bad.append(f"generator {s} maps to the identity")
    return bad


@lru_cache(maxsize=None)
def affine_embedding(n: int) -> AffineEmbedding:
    emb = build_embedding(n)
    bad = validate_embedding(emb)
    if bad:
        raise RuntimeError(
            "affine braid embedding failed validation: " + "; ".join(bad)
        )
    return emb


def affine_braids_equal(n: int, word_a, word_b) -> bool:
    """Equality in the affine braid group via the checked embedding."""
    emb = affine_embedding(n)
    return braids_equal(
        emb.strands, embed_letters(emb, word_a), embed_letters(emb, word_b)
    )


# --- plain-text description of the embedding -------------------------------


def embedding_lines(emb: AffineEmbedding) -> list[str]:
    lines = [f"strands {emb.strands}"]
    for s in range(1, emb.n + 2):
        name = "a" if s == emb.n + 1 else str(s)
        image = " ".join(
            str(abs(t)) + ("'" if t < 0 else "") for t in emb.images[s - 1]
        )
        lines.append(f"gen {name} -> {image}")
    return lines


def embedding_from_lines(n: int, lines) -> AffineEmbedding:
    strands = None
    images: dict[int, tuple[int, ...]] = {}
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("strands "):
            strands = int(line.split()[1])
            continue
        if not line.startswith("gen ") or "->" not in line:
            raise InputError(f"unreadable embedding line: {raw!r}")
        head, _, tail = line.partition("->")
        name = head.split()[1]
        src = n + 1 if name == "a" else int(name)
        letters = []
        for tok in tail.split():
            sign = 1
            if tok.endswith("'"):
                sign = -1
                tok = tok[:-1]
            letters.append(sign * int(tok))
        images[src] = tuple(letters)
    if strands is None or set(images) != set(range(1, n + 2)):
        raise InputError("embedding description incomplete")
    return AffineEmbedding(n, strands, tuple(images[s] for s in range(1, n + 2)))
