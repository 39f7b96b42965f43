# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled letter kernels.  Same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

cdef enum:
    MAX_IMAGE = 2

cdef int IMG[7][4][2]
cdef int IMG_LEN[7][4]

NUM_T_MOVES = 4


cdef inline int _slot(int x) noexcept nogil:
    # A=1 -> 0, A^-1 -> 1, B -> 2, B^-1 -> 3
    if x == 1:
        return 0
    if x == -1:
        return 1
    if x == 2:
        return 2
    return 3


cdef void _set(int move, int x, int y0, int y1, int n):
    cdef int s = _slot(x)
    IMG[move][s][0] = y0
    IMG[move][s][1] = y1
    IMG_LEN[move][s] = n


cdef void _init_tables():
    _set(0, 1, 1, 2, 2); _set(0, -1, -2, -1, 2); _set(0, 2, 2, 0, 1); _set(0, -2, -2, 0, 1)
    _set(1, 1, 1, -2, 2); _set(1, -1, 2, -1, 2); _set(1, 2, 2, 0, 1); _set(1, -2, -2, 0, 1)
    _set(2, 1, 1, 0, 1); _set(2, -1, -1, 0, 1); _set(2, 2, 2, 1, 2); _set(2, -2, -1, -2, 2)
    _set(3, 1, 1, 0, 1); _set(3, -1, -1, 0, 1); _set(3, 2, 2, -1, 2); _set(3, -2, 1, -2, 2)
    _set(4, 1, 2, 0, 1); _set(4, -1, -2, 0, 1); _set(4, 2, 1, 0, 1); _set(4, -2, -1, 0, 1)
    _set(5, 1, -1, 0, 1); _set(5, -1, 1, 0, 1); _set(5, 2, 2, 0, 1); _set(5, -2, -2, 0, 1)
    _set(6, 1, 1, 0, 1); _set(6, -1, -1, 0, 1); _set(6, 2, -2, 0, 1); _set(6, -2, 2, 0, 1)


_init_tables()


cdef int* _to_buffer(letters, Py_ssize_t* n_out) except NULL:
    cdef Py_ssize_t n = len(letters)
    cdef int* buf = <int*> malloc((n + 1) * sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    i = 0
    for x in letters:
        buf[i] = x
        i += 1
    n_out[0] = n
    return buf


cdef Py_ssize_t _reduce_into(const int* src, Py_ssize_t n, int* dst) noexcept nogil:
    cdef Py_ssize_t top = 0, i
    cdef int x
    for i in range(n):
        x = src[i]
        if top > 0 and dst[top - 1] == -x:
            top -= 1
        else:
            dst[top] = x
            top += 1
    return top


cdef Py_ssize_t _image_into(const int* src, Py_ssize_t n, int move, int* dst,
                            Py_ssize_t* start) noexcept nogil:
    # dst must hold 2*n ints; returns end index, writes cyclic start into start
    cdef Py_ssize_t top = 0, i, i0, j
    cdef int s, k, y
    for i in range(n):
        s = _slot(src[i])
        for k in range(IMG_LEN[move][s]):
            y = IMG[move][s][k]
            if top > 0 and dst[top - 1] == -y:
                top -= 1
            else:
                dst[top] = y
                top += 1
    i0 = 0
    j = top - 1
    while i0 < j and dst[i0] == -dst[j]:
        i0 += 1
        j -= 1
    start[0] = i0
    return j + 1


def reduce_letters(letters):
    cdef Py_ssize_t n, m, i
    cdef int* src = _to_buffer(letters, &n)
    cdef int* dst = <int*> malloc((n + 1) * sizeof(int))
    try:
        m = _reduce_into(src, n, dst)
        return [dst[i] for i in range(m)]
    finally:
        free(src)
        free(dst)


def cyclic_core(letters):
    cdef Py_ssize_t n, m, i, j
    cdef int* src = _to_buffer(letters, &n)
    cdef int* dst = <int*> malloc((n + 1) * sizeof(int))
    try:
        m = _reduce_into(src, n, dst)
        i = 0
        j = m - 1
        while i < j and dst[i] == -dst[j]:
            i += 1
            j -= 1
        return [dst[k] for k in range(i, j + 1)], i
    finally:
        free(src)
        free(dst)


def image_cyclic(letters, int move):
    cdef Py_ssize_t n, end, start, k
    cdef int* src = _to_buffer(letters, &n)
    cdef int* dst = <int*> malloc((MAX_IMAGE * n + 1) * sizeof(int))
    try:
        end = _image_into(src, n, move, dst, &start)
        return [dst[k] for k in range(start, end)]
    finally:
        free(src)
        free(dst)


def image_cyclic_length(letters, int move):
    cdef Py_ssize_t n, end, start
    cdef int* src = _to_buffer(letters, &n)
    cdef int* dst = <int*> malloc((MAX_IMAGE * n + 1) * sizeof(int))
    try:
        end = _image_into(src, n, move, dst, &start)
        return end - start
    finally:
        free(src)
        free(dst)


def minimize_letters(letters):
    cdef Py_ssize_t n, m, i, j, end, start, k
    cdef int move
    cdef bint improved
    cdef int* src = _to_buffer(letters, &n)
    # both buffers must hold an image, since they are swapped
    cdef int* cur = <int*> malloc((MAX_IMAGE * n + 1) * sizeof(int))
    cdef int* tmp = <int*> malloc((MAX_IMAGE * n + 1) * sizeof(int))
    cdef int* swap
    moves = []
    try:
        m = _reduce_into(src, n, cur)
        i = 0
        j = m - 1
        while i < j and cur[i] == -cur[j]:
            i += 1
            j -= 1
        m = j + 1 - i
        for k in range(m):
            cur[k] = cur[i + k]
        while True:
            improved = False
            for move in range(4):
                end = _image_into(cur, m, move, tmp, &start)
                if end - start < m:
                    for k in range(end - start):
                        tmp[k] = tmp[start + k]
                    m = end - start
                    swap = cur
                    cur = tmp
                    tmp = swap
                    moves.append(move)
                    improved = True
                    break
            if not improved:
                return [cur[k] for k in range(m)], moves
    finally:
        free(src)
        free(cur)
        free(tmp)
