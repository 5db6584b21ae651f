"""Canonical words for fully commutative elements.

Finite type: every FC element has exactly one commutation-class word that
factors into descending runs s_l s_{l-1} ... s_g whose heads l and feet g
are both strictly increasing (with g <= l).  That word is also the
lexicographically smallest member of the class, which is how the fast
extractor finds it.

Affine type, for elements whose support contains the cycle generator
(written N = n+1 internally, "a" in word text): the canonical word is

    S_1 N  S_2 N ... S_p N  (H N)^k  T        when p >= 1, or
    N (H N)^k T                               when p = 0,

where S_t = D(i_t) A(r_t) with D(i) = s_i..s_1 and A(r) = s_r..s_n,
H = hook_j = D(j) A(j+1) is an n-letter word repeated as a convergent
period, and the residue T is either a sequence of descending runs (k = 0)
or a staircase of runs headed j, j+1, ... (k >= 1).  In the p = 0 form
the cycle letters sit in front of the periods and residue instead of
behind the segments; serialization marks that with hasResidueA.

Structural constraints keep the parameterization unambiguous: segment
starts i_t strictly increase while ends r_t strictly decrease, the empty
segment (0, n+1) is allowed only in front of at least one more segment,
the full ascending run is always read as (1, 2) rather than (0, 1), a
one-hook-wide last segment (r = i+1) is allowed only when it is the only
segment (with p >= 2 it folds into the periods), and k >= 1 forces j into
the last segment's window.  Further inequalities that the source material
attaches to these parses are NOT enforced; `measured_rules` measures
them and the verification sweep reports every violation with a reason
code, because several reachable FC elements (e.g. the ascending hook
family s_1 s_2 .. s_n N and certain short residues) contradict them.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fc, perm
from .coxeter import (
    AffineA,
    DomainError,
    FiniteA,
    InputError,
    render_word,
)
from .perm import Element

# ---------------------------------------------------------------------------
# word fragments


def desc_run(l: int, g: int) -> tuple[int, ...]:
    """s_l s_{l-1} ... s_g; empty when l < g."""
    return tuple(range(l, g - 1, -1))


def asc_run(lo: int, hi: int) -> tuple[int, ...]:
    """s_lo s_{lo+1} ... s_hi; empty when lo > hi."""
    return tuple(range(lo, hi + 1))


def segment_word(n: int, i: int, r: int) -> tuple[int, ...]:
    """D(i) A(r) = s_i..s_1 s_r..s_n."""
    return desc_run(i, 1) + asc_run(r, n)


def hook_word(n: int, j: int) -> tuple[int, ...]:
    """The n-letter period word s_j..s_1 s_{j+1}..s_n."""
    return desc_run(j, 1) + asc_run(j + 1, n)


def split_maximal_runs(word) -> tuple[tuple[int, int], ...]:
    """Factor a word into maximal descending-by-one runs (head, foot)."""
    runs = []
    word = tuple(word)
    pos = 0
    while pos < len(word):
        head = word[pos]
        foot = head
        pos += 1
        while pos < len(word) and word[pos] == foot - 1:
            foot -= 1
            pos += 1
        runs.append((head, foot))
    return tuple(runs)


def lexmin_class_word(x: Element) -> tuple[int, ...]:
    """Lexicographically smallest reduced word of an FC element, computed
    by greedily taking the smallest left descent."""
    letters = []
    cur = x
    while not perm.is_identity(cur):
        s = min(perm.left_descents(cur))
        letters.append(s)
        cur = perm.multiply(perm.word_to_element(cur.ctype, (s,)), cur)
    return tuple(letters)


# ---------------------------------------------------------------------------
# finite normal form


@dataclass(frozen=True)
class FiniteNF:
    n: int
    runs: tuple[tuple[int, int], ...]


def validate_finite_runs(n: int, runs) -> list[str]:
    out = []
    heads = [l for l, _ in runs]
    feet = [g for _, g in runs]
    for l, g in runs:
        if not 1 <= g <= l <= n:
            out.append(f"run ({l},{g}) out of range 1..{n}")
    if any(a >= b for a, b in zip(heads, heads[1:])):
        out.append("run heads must strictly increase")
    if any(a >= b for a, b in zip(feet, feet[1:])):
        out.append("run feet must strictly increase")
    return out


def finite_nf_to_word(nf: FiniteNF) -> tuple[int, ...]:
    bad = validate_finite_runs(nf.n, nf.runs)
    if bad:
        raise DomainError("; ".join(bad))
    return tuple(s for l, g in nf.runs for s in desc_run(l, g))


def parse_finite_word(n: int, word) -> FiniteNF | None:
    """Read a word as the run grammar; None when it does not match."""
    if any(not 1 <= s <= n for s in word):
        return None
    runs = split_maximal_runs(word)
    nf = FiniteNF(n, runs)
    return nf if not validate_finite_runs(n, runs) else None


def finite_nf(x: Element) -> FiniteNF:
    """Canonical run factorization of an FC element of the finite system
    (or of an affine element whose support avoids the cycle generator)."""
    word = perm.canonical_reduced_word(x)
    aff = x.ctype.n + 1 if isinstance(x.ctype, AffineA) else None
    if aff is not None and aff in word:
        raise DomainError("element touches the cycle generator; use affine_nf")
    if not fc.element_is_fc(x):
        raise DomainError("element is not fully commutative")
    lex = lexmin_class_word(x)
    nf = parse_finite_word(x.ctype.n, lex)
    if nf is None:
        raise RuntimeError(
            f"lexmin word {lex} of an FC element failed the run grammar"
        )
    return nf


def finite_nf_matches(x: Element) -> list[tuple[int, ...]]:
    """All commutation-class words of x matching the run grammar.  The
    uniqueness sweep asserts this has exactly one entry."""
    word = perm.canonical_reduced_word(x)
    cls = fc.full_commutation_class(x.ctype, word)
    return sorted(w for w in cls if parse_finite_word(x.ctype.n, w) is not None)


# ---------------------------------------------------------------------------
# affine normal form: data types


@dataclass(frozen=True)
class FiniteTail:
    runs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class StaircaseTail:
    j: int
    feet: tuple[int, ...]  # run c is desc_run(j + c, feet[c])


@dataclass(frozen=True)
class AffineNF:
    n: int
    segments: tuple[tuple[int, int], ...]
    j: int | None
    k: int
    tail: FiniteTail | StaircaseTail

    @property
    def p(self) -> int:
        return len(self.segments)

    @property
    def has_residue_a(self) -> bool:
        """True exactly in the p = 0 (cycle-letter-led) form."""
        return not self.segments


def residue_word(nf: AffineNF) -> tuple[int, ...]:
    """Letters of the residue part alone (no cycle letter)."""
    t = nf.tail
    if isinstance(t, FiniteTail):
        return tuple(s for l, g in t.runs for s in desc_run(l, g))
    return tuple(s for c, d in enumerate(t.feet) for s in desc_run(t.j + c, d))


def affine_nf_to_word(nf: AffineNF, mode: str = "strict") -> tuple[int, ...]:
    bad = validate_affine_nf(nf, mode)
    if bad:
        raise DomainError("; ".join(bad))
    n = nf.n
    N = n + 1
    out: list[int] = []
    if nf.segments:
        for i, r in nf.segments:
            out.extend(segment_word(n, i, r))
            out.append(N)
        for _ in range(nf.k):
            out.extend(hook_word(n, nf.j))
            out.append(N)
    else:
        out.append(N)
        for _ in range(nf.k):
            out.extend(hook_word(n, nf.j))
            out.append(N)
    out.extend(residue_word(nf))
    return tuple(out)


def validate_affine_nf(nf: AffineNF, mode: str = "strict") -> list[str]:
    """Constraint check; returns human-readable violations (empty = ok).

    mode="lenient" checks only that the parameters spell a word of the
    right shape; mode="strict" adds the structural rules that make the
    parameterization canonical.
    """
    if mode not in ("strict", "lenient"):
        raise InputError(f"unknown mode {mode!r}")
    n = nf.n
    N = n + 1
    out = []
    if n < 2:
        out.append("rank must be >= 2")
        return out
    for i, r in nf.segments:
        if not (0 <= i <= n and 1 <= r <= N and i < r):
            out.append(f"segment ({i},{r}) out of shape (0<=i<r<={N})")
    if nf.k < 0:
        out.append("k must be >= 0")
    if nf.k >= 1:
        if nf.j is None or not 1 <= nf.j <= n:
            out.append(f"k={nf.k} needs a hook index j in 1..{n}")
    elif nf.j is not None and not 1 <= nf.j <= n:
        out.append(f"j={nf.j} out of range")
    t = nf.tail
    if nf.k == 0 and not isinstance(t, FiniteTail):
        out.append("k=0 residue must be descending runs")
    if nf.k >= 1 and not isinstance(t, StaircaseTail):
        out.append("k>=1 residue must be a staircase")
    if isinstance(t, FiniteTail):
        for l, g in t.runs:
            if not 1 <= g <= l <= n:
                out.append(f"residue run ({l},{g}) out of range")
    else:
        if nf.j is not None and t.j != nf.j:
            out.append("staircase must start at the hook index")
        for c, d in enumerate(t.feet):
            if not 1 <= d <= t.j + c:
                out.append(f"staircase run {c} foot {d} empties the run")
            if t.j + c > n:
                out.append(f"staircase head {t.j + c} exceeds {n}")
    if out or mode == "lenient":
        return out

    # structural rules
    segs = nf.segments
    p = len(segs)
    starts = [i for i, _ in segs]
    ends = [r for _, r in segs]
    if any(a >= b for a, b in zip(starts, starts[1:])):
        out.append("segment starts must strictly increase")
    if any(a <= b for a, b in zip(ends, ends[1:])):
        out.append("segment ends must strictly decrease")
    if (0, 1) in segs:
        out.append("full ascending run must be encoded (1,2), not (0,1)")
    if (0, N) in segs and p == 1:
        out.append("empty segment (0,%d) cannot stand alone" % N)
    if p >= 1:
        ip, rp = segs[-1]
        if rp == ip + 1:
            if p >= 2:
                out.append("one-hook segment folds into the periods when p >= 2")
            if nf.k >= 1 and nf.j != ip:
                out.append("periods after a one-hook segment must reuse its hook")
        elif nf.k >= 1 and not (ip < nf.j <= rp - 1):
            out.append(f"hook index {nf.j} outside window ({ip},{rp - 1}]")
        if nf.k == 0 and nf.j is not None and nf.j != rp - 1:
            out.append(f"k=0 hook convention is j = {rp - 1}")
    else:
        if nf.k == 0 and nf.j is not None:
            out.append("j is meaningless with no segments and no periods")
    if isinstance(t, FiniteTail):
        heads = [l for l, _ in t.runs]
        feet = [g for _, g in t.runs]
        if any(a >= b for a, b in zip(heads, heads[1:])):
            out.append("residue run heads must strictly increase")
        if any(a >= b for a, b in zip(feet, feet[1:])):
            out.append("residue run feet must strictly increase")
    else:
        if any(a >= b for a, b in zip(t.feet, t.feet[1:])):
            out.append("staircase feet must strictly increase")
    return out


# measured constraints from the source derivations; violations are data,
# not errors.  Keys are the reason codes used by the discrepancy report.
BATTERY_CODES = (
    "last-width",  # r_p - i_p >= 2
    "hook-window",  # i_p < j <= r_p - 1 when k >= 1
    "tail-bound-g",  # finite residue feet < r_p
    "tail-bound-l",  # first residue head > i_p
    "w1-width",  # r_p - i_p >= 3 with periods, empty staircase
    "w1-j",  # j + 1 < r_p with periods, empty staircase
    "w2-width",  # r_p - i_p >= 4 with periods, staircase present
    "w2-j",  # j + 2 < r_p with periods, staircase present
    "p-lt-half",  # p < n/2
    "p-le-half",  # p <= n/2
)


def measured_rules(nf: AffineNF) -> list[str]:
    """Check the finer inequalities claimed for canonical parses.  The
    verification sweep counts these per reason code; see BATTERY_CODES."""
    out = []
    p = nf.p
    if p == 0:
        return out
    n = nf.n
    ip, rp = nf.segments[-1]
    if rp - ip < 2:
        out.append("last-width")
    if nf.k >= 1 and not (ip < nf.j <= rp - 1):
        out.append("hook-window")
    t = nf.tail
    if isinstance(t, FiniteTail):
        if t.runs and not all(g < rp for _, g in t.runs):
            out.append("tail-bound-g")
        if t.runs and not t.runs[0][0] > ip:
            out.append("tail-bound-l")
    else:
        if not t.feet:
            if rp - ip < 3:
                out.append("w1-width")
            if not nf.j + 1 < rp:
                out.append("w1-j")
        else:
            if rp - ip < 4:
                out.append("w2-width")
            if not nf.j + 2 < rp:
                out.append("w2-j")
    if not (p < n / 2):
        out.append("p-lt-half")
    if not (p <= n / 2):
        out.append("p-le-half")
    return out


# ---------------------------------------------------------------------------
# parsing literal words against the affine grammar


def _read_segment_block(n: int, block) -> tuple[int, int] | None:
    """Recognize a cycle-free block as D(i) A(r).  The empty block reads
    as (0, n+1); the full ascending run reads as (1, 2)."""
    N = n + 1
    block = tuple(block)
    if not block:
        return (0, N)
    pos = 0
    while pos + 1 < len(block) and block[pos + 1] == block[pos] - 1:
        pos += 1
    if block[pos] == 1:
        i = block[0]
        rest = block[pos + 1 :]
    else:
        i = 0
        rest = block
    if rest:
        if rest[-1] != n or any(b != a + 1 for a, b in zip(rest, rest[1:])):
            return None
        r = rest[0]
    else:
        r = N
    if segment_word(n, i, r) != block:
        return None
    return (i, r)


def _blocks(n: int, word) -> list[tuple[int, ...]] | None:
    N = n + 1
    if any(not 1 <= s <= N for s in word):
        return None
    blocks: list[tuple[int, ...]] = []
    cur: list[int] = []
    for s in word:
        if s == N:
            blocks.append(tuple(cur))
            cur = []
        else:
            cur.append(s)
    blocks.append(tuple(cur))
    return blocks


def _staircase_from_runs(n, j, runs) -> StaircaseTail | None:
    heads = [l for l, _ in runs]
    if heads != [j + c for c in range(len(runs))]:
        return None
    if heads and heads[-1] > n:
        return None
    return StaircaseTail(j, tuple(g for _, g in runs))


def parse_affine_word(n: int, word, mode: str = "strict") -> list[AffineNF]:
    """All readings of this exact letter sequence under the affine
    grammar, filtered by the given validation mode."""
    blocks = _blocks(n, word)
    if blocks is None:
        return []
    L = len(blocks) - 1
    if L < 1:
        return []
    out = []
    tail_runs = split_maximal_runs(blocks[L])

    # p = 0 reading: leading cycle letter, all middle blocks are hooks
    if not blocks[0]:
        k = L - 1
        if k == 0:
            cand = AffineNF(n, (), None, 0, FiniteTail(tail_runs))
            if not validate_affine_nf(cand, mode):
                out.append(cand)
        else:
            readings = [_read_segment_block(n, b) for b in blocks[1:L]]
            hooks = {rd for rd in readings}
            if len(hooks) == 1:
                rd = readings[0]
                if rd is not None and rd[1] == rd[0] + 1 and 1 <= rd[0] <= n:
                    j = rd[0]
                    st = _staircase_from_runs(n, j, tail_runs)
                    if st is not None:
                        cand = AffineNF(n, (), j, k, st)
                        if not validate_affine_nf(cand, mode):
                            out.append(cand)

    # p >= 1 readings
    for p in range(1, L + 1):
        k = L - p
        segs = []
        ok = True
        for t in range(p):
            if t > 0 and not blocks[t]:
                ok = False
                break
            rd = _read_segment_block(n, blocks[t])
            if rd is None:
                ok = False
                break
            segs.append(rd)
        if not ok:
            continue
        if k > 0:
            readings = {_read_segment_block(n, b) for b in blocks[p:L]}
            if len(readings) != 1:
                continue
            rd = readings.pop()
            if rd is None or rd[1] != rd[0] + 1 or not 1 <= rd[0] <= n:
                continue
            j = rd[0]
            st = _staircase_from_runs(n, j, tail_runs)
            if st is None:
                continue
            cand = AffineNF(n, tuple(segs), j, k, st)
        else:
            j = segs[-1][1] - 1 if 1 <= segs[-1][1] - 1 <= n else None
            cand = AffineNF(n, tuple(segs), j, 0, FiniteTail(tail_runs))
        if not validate_affine_nf(cand, mode):
            out.append(cand)
    return out


# ---------------------------------------------------------------------------
# extraction


def _canonical_sort_key(nf: AffineNF):
    """Orders parses: larger k first, then fewer segments, then lex."""
    if isinstance(nf.tail, FiniteTail):
        tail_key = (0, nf.tail.runs)
    else:
        tail_key = (1, nf.tail.j, nf.tail.feet)
    return (-nf.k, nf.p, nf.segments, nf.j if nf.j is not None else 0, tail_key)


def affine_nf_parses(x: Element, mode: str = "strict") -> list[AffineNF]:
    """Oracle path: scan the whole commutation class for grammar matches,
    sorted canonically (the head of the list is the canonical parse)."""
    word = _require_affine_fc(x)
    cls = fc.full_commutation_class(x.ctype, word)
    found = set()
    for w in sorted(cls):
        found.update(parse_affine_word(x.ctype.n, w, mode))
    return sorted(found, key=_canonical_sort_key)


def _require_affine_fc(x: Element) -> tuple[int, ...]:
    if not isinstance(x.ctype, AffineA):
        raise DomainError("affine normal forms need an affine element")
    word = perm.canonical_reduced_word(x)
    if x.ctype.n + 1 not in word:
        raise DomainError(
            "support avoids the cycle generator; use the finite run form"
        )
    if not fc.element_is_fc(x):
        raise DomainError("element is not fully commutative")
    return word


def _left_quotient(x: Element, letters) -> Element | None:
    """x = (word) * y with lengths adding, else None."""
    head = perm.word_to_element(x.ctype, letters)
    y = perm.multiply(perm.invert(head), x)
    if perm.length(y) == perm.length(x) - len(letters):
        return y
    return None


def _finite_tail_of(y: Element) -> FiniteTail | None:
    word = perm.canonical_reduced_word(y)
    if y.ctype.n + 1 in word:
        return None
    lex = lexmin_class_word(y)
    nf = parse_finite_word(y.ctype.n, lex)
    return FiniteTail(nf.runs) if nf is not None else None


def _staircase_tail_of(y: Element, j: int) -> StaircaseTail | None:
    t = _finite_tail_of(y)
    if t is None:
        return None
    return _staircase_from_runs(y.ctype.n, j, t.runs)


def affine_nf(x: Element) -> AffineNF:
    """Fast extraction: guided search over the parameter space, trying
    larger period counts first, verifying every candidate by quotient
    lengths so the result is exact.  Agrees with the class-scan oracle
    (that agreement is one of the acceptance sweeps)."""
    word = _require_affine_fc(x)
    n = x.ctype.n
    N = n + 1
    L = word.count(N)

    for k in range(L - 1, -1, -1):
        # the cycle-led form, preferred at equal k
        if k == L - 1:
            got = _try_lead(x, n, k)
            if got is not None:
                return got
        got = _try_trail(x, n, L - k, k)
        if got is not None:
            return got
    raise RuntimeError(
        f"no structural parse for FC word {render_word(x.ctype, word)!r}; "
        "this belongs in the discrepancy report"
    )


def _try_lead(x: Element, n: int, k: int) -> AffineNF | None:
    N = n + 1
    if k == 0:
        y = _left_quotient(x, (N,))
        if y is None:
            return None
        tail = _finite_tail_of(y)
        if tail is None:
            return None
        cand = AffineNF(n, (), None, 0, tail)
        return cand if not validate_affine_nf(cand) else None
    for j in range(1, n + 1):
        prefix = (N,) + (hook_word(n, j) + (N,)) * k
        y = _left_quotient(x, prefix)
        if y is None:
            continue
        st = _staircase_tail_of(y, j)
        if st is None:
            continue
        cand = AffineNF(n, (), j, k, st)
        if not validate_affine_nf(cand):
            return cand
    return None


def _try_trail(x: Element, n: int, p: int, k: int) -> AffineNF | None:
    N = n + 1

    def finish(xcur: Element, segs: tuple) -> AffineNF | None:
        ip, rp = segs[-1]
        if k == 0:
            tail = _finite_tail_of(xcur)
            if tail is None:
                return None
            j = rp - 1 if 1 <= rp - 1 <= n else None
            cand = AffineNF(n, segs, j, 0, tail)
            return cand if not validate_affine_nf(cand) else None
        js = (ip,) if rp == ip + 1 else range(ip + 1, rp)
        for j in js:
            if not 1 <= j <= n:
                continue
            y = _left_quotient(xcur, (hook_word(n, j) + (N,)) * k)
            if y is None:
                continue
            st = _staircase_tail_of(y, j)
            if st is None:
                continue
            cand = AffineNF(n, segs, j, k, st)
            if not validate_affine_nf(cand):
                return cand
        return None

    def rec(xcur: Element, t: int, prev_i: int, prev_r: int, segs: tuple):
        if t == p:
            return finish(xcur, segs)
        lo_i = 0 if t == 0 else prev_i + 1
        for i in range(lo_i, n + 1):
            for r in range(i + 1, min(prev_r - 1, N) + 1) if t else range(i + 1, N + 1):
                if (i, r) == (0, 1):
                    continue
                if (i, r) == (0, N) and (t > 0 or p < 2):
                    continue
                if r == i + 1 and not (t == p - 1 and p == 1):
                    continue
                y = _left_quotient(xcur, segment_word(n, i, r) + (N,))
                if y is None:
                    continue
                got = rec(y, t + 1, i, r, segs + ((i, r),))
                if got is not None:
                    return got
        return None

    return rec(x, 0, -1, N + 1, ())


# ---------------------------------------------------------------------------
# block view and serialization


@dataclass(frozen=True)
class BlockDecomposition:
    short: tuple[int, ...]
    period: tuple[int, ...]
    k: int
    residue: tuple[int, ...]

    @property
    def is_short(self) -> bool:
        """No convergent part at all."""
        return self.k == 0


def block_decomposition(nf: AffineNF) -> BlockDecomposition:
    """Word-level split: canonical word == short + period * k + residue."""
    n = nf.n
    N = n + 1
    if nf.segments:
        short = tuple(
            s for i, r in nf.segments for s in segment_word(n, i, r) + (N,)
        )
        period = hook_word(n, nf.j) + (N,) if nf.k else ()
        residue = residue_word(nf)
    else:
        short = ()
        period = (N,) + hook_word(n, nf.j) if nf.k else ()
        residue = (N,) + residue_word(nf)
    return BlockDecomposition(short, period, nf.k, residue)


def affine_nf_record(nf: AffineNF) -> dict:
    """JSON-ready record; field order is part of the output format."""
    rec: dict = {
        "type": "affine_nf",
        "n": nf.n,
        "short": [[i, r] for i, r in nf.segments],
    }
    if nf.j is not None:
        rec["j"] = nf.j
    rec["k"] = nf.k
    t = nf.tail
    if isinstance(t, FiniteTail):
        rec["residue"] = {"kind": "finite", "runs": [[l, g] for l, g in t.runs]}
    else:
        rec["residue"] = {"kind": "staircase", "j": t.j, "d": list(t.feet)}
    if nf.has_residue_a:
        rec["hasResidueA"] = True
    rec["word"] = render_word(AffineA(nf.n), affine_nf_to_word(nf))
    return rec


def finite_nf_record(nf: FiniteNF) -> dict:
    return {
        "type": "finite_nf",
        "n": nf.n,
        "runs": [[l, g] for l, g in nf.runs],
        "word": render_word(FiniteA(nf.n), finite_nf_to_word(nf)),
    }


# ---------------------------------------------------------------------------
# rank-2 affine tree forms


@dataclass(frozen=True)
class TreeForm:
    tree: str  # "T1" or "T2"
    prefix: tuple[int, ...]
    k: int
    suffix: tuple[int, ...]

    def word(self) -> tuple[int, ...]:
        core = _A2_CORES[self.tree]
        return self.prefix + core * self.k + self.suffix


_A2_CORES = {"T1": (2, 1, 3), "T2": (1, 2, 3)}
_A2_PREFIXES = {"T1": ((), (3,), (1, 3)), "T2": ((), (3,), (2, 3))}
_A2_SUFFIXES = {"T1": ((), (2,), (2, 1)), "T2": ((), (1,), (1, 2))}


def a2_tree_words(k_max: int):
    """Every (tree, prefix, k, suffix) form with k <= k_max, in the
    preference order T1 before T2, smaller k first, shorter affixes."""
    for k in range(k_max + 1):
        for tree in ("T1", "T2"):
            for prefix in _A2_PREFIXES[tree]:
                for suffix in _A2_SUFFIXES[tree]:
                    yield TreeForm(tree, prefix, k, suffix)


def a2_tree_form(x: Element) -> TreeForm:
    """Match an FC element of the rank-2 affine system against the two
    tree families.  Preference: T1 over T2, then smaller k, then shorter
    prefix/suffix."""
    if not isinstance(x.ctype, AffineA) or x.ctype.n != 2:
        raise DomainError("tree forms exist only for the rank-2 affine system")
    if not fc.element_is_fc(x):
        raise DomainError("element is not fully commutative")
    ell = perm.length(x)
    k_bound = ell // 3 + 1
    best = None
    for form in a2_tree_words(k_bound):
        w = form.word()
        if len(w) != ell:
            continue
        if perm.word_to_element(x.ctype, w) == x:
            key = (form.tree != "T1", form.k, len(form.prefix), len(form.suffix))
            if best is None or key < best[0]:
                best = (key, form)
    if best is None:
        raise RuntimeError(f"FC element {x} matched neither tree family")
    return best[1]
