# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the functions in ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef int* _to_c(img, Py_ssize_t h) except NULL:
    cdef int* buf = <int*> malloc((h + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t s
    for s in range(h):
        buf[s] = img[s]
    return buf


def inversions(img):
    cdef Py_ssize_t h = len(img), a, b
    cdef long count = 0
    cdef int x
    cdef int* p = _to_c(img, h)
    try:
        for a in range(h):
            x = p[a]
            for b in range(a + 1, h):
                if x > p[b]:
                    count += 1
    finally:
        free(p)
    return count


def contains_321(img):
    cdef int top = 0, last_small = 0, x
    for x in img:
        if x > top:
            top = x
        elif x < last_small:
            return True
        else:
            last_small = x
    return False


def segment_cuts(img):
    cdef list cuts = []
    cdef int top = 0, x
    cdef Py_ssize_t u = 0
    for x in img:
        u += 1
        if x > top:
            top = x
        if top == u:
            cuts.append(u)
    return cuts


def is_involution(img):
    cdef Py_ssize_t h = len(img), s
    cdef int* p = _to_c(img, h)
    cdef bint ok = True
    try:
        for s in range(h):
            if p[p[s] - 1] != s + 1:
                ok = False
                break
    finally:
        free(p)
    return ok


def inverse(img):
    cdef Py_ssize_t h = len(img), s
    cdef list out = [0] * h
    for s in range(h):
        out[<int> img[s] - 1] = s + 1
    return tuple(out)


cdef inline int _find(int* parent, int x) noexcept:
    cdef int root = x, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


cdef inline void _union(int* parent, int x, int y) noexcept:
    x = _find(parent, x)
    y = _find(parent, y)
    if x < y:
        parent[y] = x
    elif y < x:
        parent[x] = y


def grid_blocks(int m, int n, rows, cols):
    cdef int width = n + 1
    cdef int size = (m + 1) * width
    cdef int* parent = <int*> malloc(size * sizeof(int))
    cdef int* label = <int*> malloc(size * sizeof(int))
    if parent == NULL or label == NULL:
        free(parent)
        free(label)
        raise MemoryError()
    cdef int x, t, i, j, root, count = 0
    cdef list labels
    try:
        for x in range(size):
            parent[x] = x
            label[x] = -1
        for i, j in zip(rows, cols):
            for t in range(j, n + 1):
                _union(parent, (i - 1) * width + t, i * width + t)
            for t in range(i, m + 1):
                _union(parent, t * width + j - 1, t * width + j)
        labels = [0] * size
        for x in range(size):
            root = _find(parent, x)
            if label[root] < 0:
                label[root] = count
                count += 1
            labels[x] = label[root]
    finally:
        free(parent)
        free(label)
    return labels, count
