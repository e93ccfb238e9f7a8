# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled permutation kernels; same contract as ``_kernel_py``."""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.string cimport memcpy, memcmp

IMPLEMENTATION = "cython"

cdef enum:
    MAXN = 64


cdef inline bytes _mk(const unsigned char* buf, Py_ssize_t n):
    return PyBytes_FromStringAndSize(<const char*>buf, n)


cdef inline unsigned long long _rdesc(const unsigned char* a, Py_ssize_t n) noexcept nogil:
    cdef unsigned long long mask = 0
    cdef Py_ssize_t i
    for i in range(n - 1):
        if a[i] > a[i + 1]:
            mask |= (<unsigned long long>1) << i
    return mask


cdef inline unsigned long long _ldesc(const unsigned char* a, Py_ssize_t n) noexcept nogil:
    cdef unsigned char pos[MAXN]
    cdef unsigned long long mask = 0
    cdef Py_ssize_t i
    for i in range(n):
        pos[a[i]] = <unsigned char>i
    for i in range(n - 1):
        if pos[i] > pos[i + 1]:
            mask |= (<unsigned long long>1) << i
    return mask


cdef inline int _lowbit(unsigned long long m) noexcept nogil:
    cdef int i = 0
    while not (m & 1):
        m >>= 1
        i += 1
    return i


cdef inline void _swap_values(unsigned char* r, Py_ssize_t n, int i) noexcept nogil:
    cdef Py_ssize_t k
    for k in range(n):
        if r[k] == i:
            r[k] = <unsigned char>(i + 1)
        elif r[k] == i + 1:
            r[k] = <unsigned char>i


cdef inline int _lw(const unsigned char* a, const unsigned char* b, Py_ssize_t n) noexcept nogil:
    return (_ldesc(b, n) & ~_rdesc(a, n)) == 0


cdef inline void _slide(unsigned char* pa, unsigned char* pb, Py_ssize_t n) noexcept nogil:
    cdef unsigned long long movable
    cdef int i
    cdef unsigned char t
    while True:
        movable = _ldesc(pb, n) & ~_rdesc(pa, n)
        if not movable:
            return
        i = _lowbit(movable)
        t = pa[i]
        pa[i] = pa[i + 1]
        pa[i + 1] = t
        _swap_values(pb, n, i)


cdef inline int _length(const unsigned char* a, Py_ssize_t n) noexcept nogil:
    cdef int c = 0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] > a[j]:
                c += 1
    return c


def identity(int n):
    cdef unsigned char buf[MAXN]
    cdef int i
    for i in range(n):
        buf[i] = <unsigned char>i
    return _mk(buf, n)


def delta(int n):
    cdef unsigned char buf[MAXN]
    cdef int i
    for i in range(n):
        buf[i] = <unsigned char>(n - 1 - i)
    return _mk(buf, n)


def atom(int n, int i):
    cdef unsigned char buf[MAXN]
    cdef int k
    for k in range(n):
        buf[k] = <unsigned char>k
    buf[i] = <unsigned char>(i + 1)
    buf[i + 1] = <unsigned char>i
    return _mk(buf, n)


def compose(bytes a, bytes b):
    cdef Py_ssize_t n = len(a), i
    cdef const unsigned char* pa = <const unsigned char*>PyBytes_AS_STRING(a)
    cdef const unsigned char* pb = <const unsigned char*>PyBytes_AS_STRING(b)
    cdef unsigned char buf[MAXN]
    for i in range(n):
        buf[i] = pa[pb[i]]
    return _mk(buf, n)


def inverse(bytes a):
    cdef Py_ssize_t n = len(a), i
    cdef const unsigned char* pa = <const unsigned char*>PyBytes_AS_STRING(a)
    cdef unsigned char buf[MAXN]
    for i in range(n):
        buf[pa[i]] = <unsigned char>i
    return _mk(buf, n)


def length(bytes a):
    return _length(<const unsigned char*>PyBytes_AS_STRING(a), len(a))


def right_descents(bytes a):
    return _rdesc(<const unsigned char*>PyBytes_AS_STRING(a), len(a))


def left_descents(bytes a):
    return _ldesc(<const unsigned char*>PyBytes_AS_STRING(a), len(a))


def flip(bytes a):
    cdef Py_ssize_t n = len(a), i
    cdef const unsigned char* pa = <const unsigned char*>PyBytes_AS_STRING(a)
    cdef unsigned char buf[MAXN]
    for i in range(n):
        buf[i] = <unsigned char>(n - 1 - pa[n - 1 - i])
    return _mk(buf, n)


def complement(bytes a):
    cdef Py_ssize_t n = len(a), i
    cdef const unsigned char* pa = <const unsigned char*>PyBytes_AS_STRING(a)
    cdef unsigned char inv[MAXN]
    cdef unsigned char buf[MAXN]
    for i in range(n):
        inv[pa[i]] = <unsigned char>i
    for i in range(n):
        buf[i] = inv[n - 1 - i]
    return _mk(buf, n)


def is_prefix(bytes a, bytes b):
    cdef Py_ssize_t n = len(a), i
    cdef const unsigned char* pa = <const unsigned char*>PyBytes_AS_STRING(a)
    cdef const unsigned char* pb = <const unsigned char*>PyBytes_AS_STRING(b)
    cdef unsigned char inv[MAXN]
    cdef unsigned char q[MAXN]
    for i in range(n):
        inv[pa[i]] = <unsigned char>i
    for i in range(n):
        q[i] = inv[pb[i]]
    return _length(q, n) == _length(pb, n) - _length(pa, n)


cdef inline void _meet(const unsigned char* a, const unsigned char* b, unsigned char* c, Py_ssize_t n) noexcept nogil:
    cdef unsigned char ra[MAXN]
    cdef unsigned char rb[MAXN]
    cdef unsigned long long common
    cdef int i
    cdef unsigned char t
    cdef Py_ssize_t k
    for k in range(n):
        c[k] = <unsigned char>k
    memcpy(ra, a, n)
    memcpy(rb, b, n)
    while True:
        common = _ldesc(ra, n) & _ldesc(rb, n)
        if not common:
            return
        i = _lowbit(common)
        t = c[i]
        c[i] = c[i + 1]
        c[i + 1] = t
        _swap_values(ra, n, i)
        _swap_values(rb, n, i)


def meet(bytes a, bytes b):
    cdef Py_ssize_t n = len(a)
    cdef unsigned char buf[MAXN]
    _meet(<const unsigned char*>PyBytes_AS_STRING(a), <const unsigned char*>PyBytes_AS_STRING(b), buf, n)
    return _mk(buf, n)


def join(bytes a, bytes b):
    cdef Py_ssize_t n = len(a), i
    cdef const unsigned char* pa = <const unsigned char*>PyBytes_AS_STRING(a)
    cdef const unsigned char* pb = <const unsigned char*>PyBytes_AS_STRING(b)
    cdef unsigned char ra[MAXN]
    cdef unsigned char rb[MAXN]
    cdef unsigned char m[MAXN]
    cdef unsigned char buf[MAXN]
    for i in range(n):
        ra[i] = pa[n - 1 - i]
        rb[i] = pb[n - 1 - i]
    _meet(ra, rb, m, n)
    for i in range(n):
        buf[i] = m[n - 1 - i]
    return _mk(buf, n)


def slide(bytes a, bytes b):
    cdef Py_ssize_t n = len(a)
    cdef unsigned char pa[MAXN]
    cdef unsigned char pb[MAXN]
    memcpy(pa, PyBytes_AS_STRING(a), n)
    memcpy(pb, PyBytes_AS_STRING(b), n)
    _slide(pa, pb, n)
    return _mk(pa, n), _mk(pb, n)


def is_left_weighted(bytes a, bytes b):
    return bool(_lw(<const unsigned char*>PyBytes_AS_STRING(a),
                    <const unsigned char*>PyBytes_AS_STRING(b), len(a)))


def normalize_factors(list factors):
    cdef Py_ssize_t size = len(factors)
    if size == 0:
        return 0, []
    cdef Py_ssize_t n = len(<bytes>factors[0])
    cdef bytearray store = bytearray(size * n)
    cdef unsigned char* f = <unsigned char*>(<char*>store)
    cdef unsigned char before[MAXN]
    cdef Py_ssize_t i, j, lo, hi, k
    cdef int changed, is_d, is_e
    for i in range(size):
        memcpy(f + i * n, PyBytes_AS_STRING(<bytes>factors[i]), n)
    for i in range(1, size):
        j = i
        while j > 0:
            memcpy(before, f + (j - 1) * n, n)
            _slide(f + (j - 1) * n, f + j * n, n)
            if memcmp(before, f + (j - 1) * n, n) == 0:
                break
            j -= 1
    changed = 1
    while changed:
        changed = 0
        for j in range(size - 1):
            if not _lw(f + j * n, f + (j + 1) * n, n):
                _slide(f + j * n, f + (j + 1) * n, n)
                changed = 1
    lo = 0
    while lo < size:
        is_d = 1
        for k in range(n):
            if f[lo * n + k] != n - 1 - k:
                is_d = 0
                break
        if not is_d:
            break
        lo += 1
    hi = size
    while hi > lo:
        is_e = 1
        for k in range(n):
            if f[(hi - 1) * n + k] != k:
                is_e = 0
                break
        if not is_e:
            break
        hi -= 1
    return lo, [_mk(f + i * n, n) for i in range(lo, hi)]


cdef inline void _compose(const unsigned char* a, const unsigned char* b, unsigned char* out, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = a[b[i]]


cdef inline void _join(const unsigned char* a, const unsigned char* b, unsigned char* out, Py_ssize_t n) noexcept nogil:
    cdef unsigned char ra[MAXN]
    cdef unsigned char rb[MAXN]
    cdef unsigned char m[MAXN]
    cdef Py_ssize_t i
    for i in range(n):
        ra[i] = a[n - 1 - i]
        rb[i] = b[n - 1 - i]
    _meet(ra, rb, m, n)
    for i in range(n):
        out[i] = m[n - 1 - i]


def sss_step(list body, bint flip_s, bytes s):
    cdef Py_ssize_t n = len(s)
    cdef Py_ssize_t size = len(body) + 1
    cdef bytearray store = bytearray(size * n)
    cdef unsigned char* f = <unsigned char*>(<char*>store)
    cdef const unsigned char* ps = <const unsigned char*>PyBytes_AS_STRING(s)
    cdef unsigned char before[MAXN]
    cdef unsigned char cur[MAXN]
    cdef unsigned char inv[MAXN]
    cdef unsigned char j_[MAXN]
    cdef unsigned char out[MAXN]
    cdef Py_ssize_t i, j, k
    cdef int is_d, is_e
    for i in range(size - 1):
        memcpy(f + i * n, PyBytes_AS_STRING(<bytes>body[i]), n)
    memcpy(f + (size - 1) * n, ps, n)
    j = size - 1
    while j > 0:
        memcpy(before, f + (j - 1) * n, n)
        _slide(f + (j - 1) * n, f + j * n, n)
        if memcmp(before, f + (j - 1) * n, n) == 0:
            break
        j -= 1
    is_d = 1
    for k in range(n):
        if f[k] != n - 1 - k:
            is_d = 0
            break
    if is_d:
        return s
    if flip_s:
        for k in range(n):
            cur[k] = <unsigned char>(n - 1 - ps[n - 1 - k])
    else:
        memcpy(cur, ps, n)
    for i in range(size):
        is_e = 1
        for k in range(n):
            if cur[k] != k:
                is_e = 0
                break
        if is_e:
            break
        _join(f + i * n, cur, j_, n)
        for k in range(n):
            inv[f[i * n + k]] = <unsigned char>k
        _compose(inv, j_, cur, n)
    _compose(ps, cur, out, n)
    return _mk(out, n)
