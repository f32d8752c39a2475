# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled word kernel; behavioural twin of parabolic._kernel_py.

Same three entry points (canonical, left_descents, act) plus reduce; see the
pure module for the contract.  Words stay small (a few dozen letters, rank
<= 10 or so), so everything runs on stack-friendly C buffers.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

DEF MAX_RANK = 32

cdef double EPS_SIGN = 1e-9
cdef double EPS_ROOT = 1e-6


cdef class WordKernel:
    cdef double* _gram
    cdef public int rank
    cdef public object gram

    def __cinit__(self, gram):
        cdef int n = len(gram)
        if n > MAX_RANK:
            raise ValueError("rank too large for compiled kernel")
        self.rank = n
        self._gram = <double*> malloc(n * n * sizeof(double))
        cdef int i, j
        for i in range(n):
            row = gram[i]
            for j in range(n):
                self._gram[i * n + j] = row[j]
        self.gram = [tuple(float(x) for x in row) for row in gram]

    def __dealloc__(self):
        if self._gram != NULL:
            free(self._gram)

    cdef void _reflect(self, int s, double* v) noexcept:
        cdef int j, n = self.rank
        cdef double ip = 0.0
        for j in range(n):
            ip += self._gram[s * n + j] * v[j]
        v[s] -= 2.0 * ip

    cdef void _apply(self, int* word, int k, double* v) noexcept:
        cdef int j
        for j in range(k - 1, -1, -1):
            self._reflect(word[j], v)

    cdef bint _is_simple(self, double* v, int s) noexcept:
        cdef int j
        cdef double target
        for j in range(self.rank):
            target = 1.0 if j == s else 0.0
            if v[j] - target > EPS_ROOT or target - v[j] > EPS_ROOT:
                return False
        return True

    cdef int _mult_right(self, int* word, int k, int s) except -2:
        """In place w*s on the reduced buffer `word`; returns the new length."""
        cdef double v[MAX_RANK]
        cdef int j, n = self.rank
        cdef double mn
        for j in range(n):
            v[j] = 0.0
        v[s] = 1.0
        self._apply(word, k, v)
        mn = v[0]
        for j in range(1, n):
            if v[j] < mn:
                mn = v[j]
        if mn >= -EPS_SIGN:
            word[k] = s
            return k + 1
        for j in range(n):
            v[j] = 0.0
        v[s] = 1.0
        for j in range(k - 1, -1, -1):
            if self._is_simple(v, word[j]):
                memcpy(word + j, word + j + 1, (k - j - 1) * sizeof(int))
                return k - 1
            self._reflect(word[j], v)
        raise AssertionError("exchange condition failed on a reduced word")

    cdef int _reduce(self, object word, int* buf) except -2:
        cdef int k = 0
        for s in word:
            k = self._mult_right(buf, k, <int> s)
        return k

    # -- public API ---------------------------------------------------------

    def reflect(self, int s, v):
        cdef double buf[MAX_RANK]
        cdef int j
        for j in range(self.rank):
            buf[j] = v[j]
        self._reflect(s, buf)
        return tuple(buf[j] for j in range(self.rank))

    def act(self, word, v):
        if len(v) != self.rank:
            raise ValueError("vector dimension does not match rank")
        cdef double buf[MAX_RANK]
        cdef int j, k = len(word)
        cdef int* w = <int*> malloc((k + 1) * sizeof(int))
        try:
            for j in range(k):
                w[j] = word[j]
            for j in range(self.rank):
                buf[j] = v[j]
            self._apply(w, k, buf)
            return tuple(buf[j] for j in range(self.rank))
        finally:
            free(w)

    def reduce(self, word):
        cdef int k = len(word)
        cdef int* buf = <int*> malloc((k + 1) * sizeof(int))
        try:
            k = self._reduce(word, buf)
            return tuple(buf[j] for j in range(k))
        finally:
            free(buf)

    def canonical(self, word):
        cdef int total = len(word)
        cdef int* buf = <int*> malloc((total + 2) * sizeof(int))
        cdef int* inv = <int*> malloc((total + 2) * sizeof(int))
        cdef int* out = <int*> malloc((total + 2) * sizeof(int))
        cdef double v[MAX_RANK]
        cdef int j, s, k, m = 0, n = self.rank
        cdef bint found
        cdef double mx
        try:
            k = self._reduce(word, buf)
            for j in range(k):
                inv[j] = buf[k - 1 - j]
            while k > 0:
                found = False
                for s in range(n):
                    for j in range(n):
                        v[j] = 0.0
                    v[s] = 1.0
                    self._apply(inv, k, v)
                    mx = v[0]
                    for j in range(1, n):
                        if v[j] > mx:
                            mx = v[j]
                    if mx <= EPS_SIGN:
                        out[m] = s
                        m += 1
                        k = self._mult_right(inv, k, s)
                        found = True
                        break
                if not found:
                    raise AssertionError("nontrivial element without left descent")
            return tuple(out[j] for j in range(m))
        finally:
            free(buf)
            free(inv)
            free(out)

    def left_descents(self, word):
        cdef int total = len(word)
        cdef int* buf = <int*> malloc((total + 2) * sizeof(int))
        cdef int* inv = <int*> malloc((total + 2) * sizeof(int))
        cdef double v[MAX_RANK]
        cdef int j, s, k, n = self.rank
        cdef double mx
        out = []
        try:
            k = self._reduce(word, buf)
            for j in range(k):
                inv[j] = buf[k - 1 - j]
            for s in range(n):
                for j in range(n):
                    v[j] = 0.0
                v[s] = 1.0
                self._apply(inv, k, v)
                mx = v[0]
                for j in range(1, n):
                    if v[j] > mx:
                        mx = v[j]
                if mx <= EPS_SIGN:
                    out.append(s)
            return tuple(out)
        finally:
            free(buf)
            free(inv)
