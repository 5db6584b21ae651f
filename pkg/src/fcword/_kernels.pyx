# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops: window word application, canonical
word stripping, and the left-weighting sweep behind the braid normal form.
Kept signature-compatible with fcword._purekernels."""

from libc.stdlib cimport free, malloc


def apply_word(window, letters, int n):
    cdef int N = n + 1
    cdef Py_ssize_t L = len(letters)
    cdef Py_ssize_t t
    cdef int s, i
    cdef long long first
    cdef long long *W = <long long *> malloc(N * sizeof(long long))
    if W == NULL:
        raise MemoryError()
    try:
        for i in range(N):
            W[i] = window[i]
        for t in range(L):
            s = letters[t]
            if s == N:
                first = W[0]
                W[0] = W[N - 1] - N
                W[N - 1] = first + N
            else:
                i = s - 1
                W[i], W[i + 1] = W[i + 1], W[i]
        return [W[i] for i in range(N)]
    finally:
        free(W)


def strip_word(window, int n, bint affine):
    cdef int N = n + 1
    cdef int s, i
    cdef long long first, tmp
    cdef long long *W = <long long *> malloc(N * sizeof(long long))
    if W == NULL:
        raise MemoryError()
    rev = []
    try:
        for i in range(N):
            W[i] = window[i]
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
                tmp = W[i]
                W[i] = W[i + 1]
                W[i + 1] = tmp
            rev.append(s)
    finally:
        free(W)


def normalize_factors(factors, int[::1] rmul, int[::1] lmul,
                      unsigned long long[::1] rdesc, unsigned long long[::1] ldesc,
                      int fan, int id_idx, int w0_idx):
    cdef Py_ssize_t L = len(factors)
    cdef Py_ssize_t i, end
    cdef int w, z, s
    cdef unsigned long long avail
    cdef bint changed
    cdef int delta = 0
    cdef int *fs = <int *> malloc(L * sizeof(int)) if L else NULL
    if L and fs == NULL:
        raise MemoryError()
    try:
        for i in range(L):
            fs[i] = factors[i]
        changed = True
        while changed:
            changed = False
            for i in range(L - 1):
                w = fs[i]
                z = fs[i + 1]
                if z == id_idx or w == w0_idx:
                    continue
                avail = ldesc[z] & ~rdesc[w]
                if avail == 0:
                    continue
                while avail != 0:
                    s = 0
                    while not (avail >> s) & 1:
                        s += 1
                    w = rmul[w * fan + s]
                    z = lmul[z * fan + s]
                    avail = ldesc[z] & ~rdesc[w]
                fs[i] = w
                fs[i + 1] = z
                changed = True
        i = 0
        while i < L and fs[i] == w0_idx:
            i += 1
            delta += 1
        end = L
        while end > i and fs[end - 1] == id_idx:
            end -= 1
        out = []
        while i < end:
            out.append(fs[i])
            i += 1
        return delta, out
    finally:
        if fs != NULL:
            free(fs)
