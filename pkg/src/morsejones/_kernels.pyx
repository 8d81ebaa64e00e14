# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``.  Same signatures, same results."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef tuple _cup(tuple p, Py_ssize_t i):
    cdef Py_ssize_t n = len(p), j, q
    cdef list out = [0] * (n + 2)
    for j in range(n):
        q = p[j]
        out[j if j < i else j + 2] = q if q < i else q + 2
    out[i] = i + 1
    out[i + 1] = i
    return tuple(out)


cdef tuple _cap(tuple p, Py_ssize_t i):
    cdef Py_ssize_t a = p[i], b, j, q, n = len(p)
    cdef list lst = list(p)
    cdef bint loop
    if a == i + 1:
        loop = True
    else:
        b = p[i + 1]
        lst[a] = b
        lst[b] = a
        loop = False
    cdef list out = []
    for j in range(n):
        if j == i or j == i + 1:
            continue
        q = lst[j]
        out.append(q if q < i else q - 2)
    return (tuple(out), loop)


cdef tuple _hook(tuple p, Py_ssize_t i):
    cdef Py_ssize_t a = p[i], b
    if a == i + 1:
        return (p, True)
    b = p[i + 1]
    cdef list lst = list(p)
    lst[a] = b
    lst[b] = a
    lst[i] = i + 1
    lst[i + 1] = i
    return (tuple(lst), False)


cdef void _acc(dict target, dict poly, long shift, bint loop, long period):
    cdef long e, k
    cdef object v, s
    if loop:
        for e, v in poly.items():
            k = e + shift + 2
            if period:
                k %= period
            s = target.get(k, 0) - v
            if s:
                target[k] = s
            else:
                del target[k]
            k = e + shift - 2
            if period:
                k %= period
            s = target.get(k, 0) - v
            if s:
                target[k] = s
            else:
                del target[k]
    else:
        for e, v in poly.items():
            k = e + shift
            if period:
                k %= period
            s = target.get(k, 0) + v
            if s:
                target[k] = s
            else:
                del target[k]


def sweep(events, long period=0):
    cdef dict state = {(): {0: 1}}
    cdef dict new, memo = {}, tgt, poly
    cdef Py_ssize_t peak = 1, i
    cdef long long steps = 0
    cdef int code
    cdef long s_id
    cdef tuple p, q, res, key
    cdef bint loop
    for code, i in events:
        steps += len(state)
        new = {}
        if code == 0:
            for p, poly in state.items():
                key = (0, p, i)
                q = memo.get(key)
                if q is None:
                    q = _cup(p, i)
                    memo[key] = q
                new[q] = poly
        elif code == 1:
            for p, poly in state.items():
                key = (1, p, i)
                res = memo.get(key)
                if res is None:
                    res = _cap(p, i)
                    memo[key] = res
                q = res[0]
                loop = res[1]
                tgt = new.get(q)
                if tgt is None:
                    tgt = {}
                    new[q] = tgt
                _acc(tgt, poly, 0, loop, period)
        else:
            s_id = 1 if code == 2 else -1
            for p, poly in state.items():
                tgt = new.get(p)
                if tgt is None:
                    tgt = {}
                    new[p] = tgt
                _acc(tgt, poly, s_id, False, period)
                key = (2, p, i)
                res = memo.get(key)
                if res is None:
                    res = _hook(p, i)
                    memo[key] = res
                q = res[0]
                loop = res[1]
                tgt = new.get(q)
                if tgt is None:
                    tgt = {}
                    new[q] = tgt
                _acc(tgt, poly, -s_id, loop, period)
        state = {p: poly for p, poly in new.items() if poly}
        if len(state) > peak:
            peak = len(state)
    return state.get((), {}), peak, steps


cdef inline int _find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def bruteforce_counts(int n_nodes, a_pairs, b_pairs):
    cdef int c = len(a_pairs)
    if c > 62:
        raise OverflowError("too many crossings for a 64-bit state index")
    cdef int* ap = <int*> malloc(4 * max(c, 1) * sizeof(int))
    cdef int* bp = <int*> malloc(4 * max(c, 1) * sizeof(int))
    cdef int* parent = <int*> malloc(max(n_nodes, 1) * sizeof(int))
    cdef long long* hist = NULL
    cdef long long state, total = 1LL << c
    cdef int k, j, na, comps, ru, rv, u, v, width
    cdef int* src
    if not ap or not bp or not parent:
        free(ap); free(bp); free(parent)
        raise MemoryError()
    for k in range(c):
        (ap[4 * k], ap[4 * k + 1]), (ap[4 * k + 2], ap[4 * k + 3]) = a_pairs[k]
        (bp[4 * k], bp[4 * k + 1]), (bp[4 * k + 2], bp[4 * k + 3]) = b_pairs[k]
    # histogram indexed by (na, comps); comps <= n_nodes
    width = n_nodes + 1
    hist = <long long*> malloc((c + 1) * width * sizeof(long long))
    if not hist:
        free(ap); free(bp); free(parent)
        raise MemoryError()
    for k in range((c + 1) * width):
        hist[k] = 0
    with nogil:
        for state in range(total):
            for j in range(n_nodes):
                parent[j] = j
            comps = n_nodes
            na = 0
            for k in range(c):
                if (state >> k) & 1:
                    src = bp + 4 * k
                else:
                    src = ap + 4 * k
                    na += 1
                for j in range(2):
                    u = src[2 * j]
                    v = src[2 * j + 1]
                    ru = _find(parent, u)
                    rv = _find(parent, v)
                    if ru != rv:
                        parent[ru] = rv
                        comps -= 1
            hist[na * width + comps] += 1
    out = {}
    for na in range(c + 1):
        for comps in range(width):
            if hist[na * width + comps]:
                out[(2 * na - c, comps)] = hist[na * width + comps]
    free(ap); free(bp); free(parent); free(hist)
    return out
