"""Pure-Python implementations of the hot loops.

Signature-compatible with the compiled module ``fcword._kernels``; the
selection between the two happens in ``fcword.kernels``.  Windows are
1-based in the public API but stored 0-based here: position i holds w(i+1).
"""


def apply_word(window, letters, n):
    """Right-multiply a window by a word.  Letter n+1 is the affine one."""
    W = list(window)
    N = n + 1
    for s in letters:
        if s == N:
            first = W[0]
            W[0] = W[N - 1] - N
            W[N - 1] = first + N
        else:
            i = s - 1
            W[i], W[i + 1] = W[i + 1], W[i]
    return W


def strip_word(window, n, affine):
    """Canonical reduced word read off by repeatedly removing the
    smallest-index right descent.  Returns letters in word order; the
    word length is the element's length."""
    W = list(window)
    N = n + 1
    rev = []
    while True:
        s = 0
        for i in range(N - 1):
            if W[i] > W[i + 1]:
                s = i + 1
                break
        if s == 0 and affine and W[N - 1] > W[0] + N:
            s = N
        if s == 0:
            rev.reverse()
            return rev
        if s == N:
            first = W[0]
            W[0] = W[N - 1] - N
            W[N - 1] = first + N
        else:
            i = s - 1
            W[i], W[i + 1] = W[i + 1], W[i]
        rev.append(s)


def normalize_factors(factors, rmul, lmul, rdesc, ldesc, fan, id_idx, w0_idx):
    """Left-weighting sweep over a sequence of permutation-braid factors.

    Tables are flat: rmul[x*fan + s] multiplies factor x by generator s+1
    on the right, lmul on the left; rdesc/ldesc are descent bitmasks.
    Returns (number of full twists absorbed from the front, new factors).
    """
    fs = list(factors)
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            w = fs[i]
            z = fs[i + 1]
            if z == id_idx or w == w0_idx:
                continue
            avail = ldesc[z] & ~rdesc[w]
            if not avail:
                continue
            while avail:
                s = (avail & -avail).bit_length() - 1
                w = rmul[w * fan + s]
                z = lmul[z * fan + s]
                avail = ldesc[z] & ~rdesc[w]
            fs[i] = w
            fs[i + 1] = z
            changed = True
    delta = 0
    while delta < len(fs) and fs[delta] == w0_idx:
        delta += 1
    fs = fs[delta:]
    while fs and fs[-1] == id_idx:
        fs.pop()
    return delta, fs
