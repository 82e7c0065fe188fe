# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contracts and outputs as ``_pure``."""

from itertools import permutations
from libc.stdlib cimport malloc, free


cdef inline int _find(int* parent, int v) noexcept nogil:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


cdef struct FoldState:
    int n
    int* out
    int* inn
    int* parent
    int* pend
    int npend
    int do_fold


cdef void _add_edge(FoldState* s, int u, int i, int w) noexcept nogil:
    cdef int n = s.n
    cdef int x, y
    u = _find(s.parent, u)
    w = _find(s.parent, w)
    x = s.out[u * n + i]
    if x != -1:
        if x != w and s.do_fold:
            s.pend[2 * s.npend] = x
            s.pend[2 * s.npend + 1] = w
            s.npend += 1
        return
    y = s.inn[w * n + i]
    if y != -1:
        if s.do_fold:
            s.pend[2 * s.npend] = y
            s.pend[2 * s.npend + 1] = u
            s.npend += 1
        return
    s.out[u * n + i] = w
    s.inn[w * n + i] = u


cdef void _merge(FoldState* s, int a, int b, int* moved) noexcept nogil:
    cdef int n = s.n
    cdef int i, w, u, t, nm = 0
    a = _find(s.parent, a)
    b = _find(s.parent, b)
    if a == b:
        return
    if b < a:
        t = a
        a = b
        b = t
    s.parent[b] = a
    for i in range(n):
        w = s.out[b * n + i]
        if w != -1:
            s.out[b * n + i] = -1
            s.inn[w * n + i] = -1
            moved[3 * nm] = b
            moved[3 * nm + 1] = i
            moved[3 * nm + 2] = w
            nm += 1
        u = s.inn[b * n + i]
        if u != -1:
            s.out[u * n + i] = -1
            s.inn[b * n + i] = -1
            moved[3 * nm] = u
            moved[3 * nm + 1] = i
            moved[3 * nm + 2] = b
            nm += 1
    for i in range(nm):
        _add_edge(s, moved[3 * i], moved[3 * i + 1], moved[3 * i + 2])


def fold(int n, words, do_fold=True):
    cdef int total = 1
    cdef int nwords = 0
    for word in words:
        if len(word):
            total += len(word) - 1
            nwords += 1
    cdef int letters = 0
    for word in words:
        letters += len(word)
    cdef int cap = total * n
    cdef FoldState s
    s.n = n
    s.do_fold = 1 if do_fold else 0
    s.out = <int*>malloc(cap * sizeof(int))
    s.inn = <int*>malloc(cap * sizeof(int))
    s.parent = <int*>malloc(total * sizeof(int))
    # each edge insertion queues at most one merge; each merge re-adds at most 2n edges
    cdef int pend_cap = 2 * (letters + 2 * n * total + 1)
    s.pend = <int*>malloc(2 * pend_cap * sizeof(int))
    s.npend = 0
    cdef int* moved = <int*>malloc(3 * 2 * n * sizeof(int) + 3 * sizeof(int))
    cdef int* degree = <int*>malloc(total * sizeof(int))
    cdef int* alive = <int*>malloc(total * sizeof(int))
    cdef int* stack = <int*>malloc((total + 2 * n * total + 1) * sizeof(int))
    cdef int* label = <int*>malloc(total * sizeof(int))
    cdef int* order = <int*>malloc(total * sizeof(int))
    cdef int v, i, w, u, k, cur, nxt, pos, last, letter, nv = 1, sp, V, a, b
    try:
        for i in range(cap):
            s.out[i] = -1
            s.inn[i] = -1
        s.parent[0] = 0
        for word in words:
            if not len(word):
                continue
            cur = 0
            last = len(word) - 1
            pos = 0
            for letter in word:
                if pos == last:
                    nxt = 0
                else:
                    nxt = nv
                    s.parent[nv] = nv
                    nv += 1
                if letter > 0:
                    _add_edge(&s, cur, letter - 1, nxt)
                else:
                    _add_edge(&s, nxt, -letter - 1, cur)
                while s.npend > 0:
                    s.npend -= 1
                    a = s.pend[2 * s.npend]
                    b = s.pend[2 * s.npend + 1]
                    _merge(&s, a, b, moved)
                cur = nxt
                pos += 1

        sp = 0
        for v in range(nv):
            alive[v] = 1 if s.parent[v] == v else 0
            degree[v] = 0
            if alive[v]:
                for i in range(n):
                    if s.out[v * n + i] != -1:
                        degree[v] += 1
                    if s.inn[v * n + i] != -1:
                        degree[v] += 1
                if v != 0 and degree[v] <= 1:
                    stack[sp] = v
                    sp += 1
        while sp > 0:
            sp -= 1
            v = stack[sp]
            if not alive[v] or degree[v] > 1:
                continue
            alive[v] = 0
            for i in range(n):
                w = s.out[v * n + i]
                if w != -1:
                    s.out[v * n + i] = -1
                    s.inn[w * n + i] = -1
                    degree[w] -= 1
                    if w != 0 and alive[w] and degree[w] <= 1:
                        stack[sp] = w
                        sp += 1
                u = s.inn[v * n + i]
                if u != -1:
                    s.inn[v * n + i] = -1
                    s.out[u * n + i] = -1
                    degree[u] -= 1
                    if u != 0 and alive[u] and degree[u] <= 1:
                        stack[sp] = u
                        sp += 1

        for v in range(nv):
            label[v] = -1
        label[0] = 0
        order[0] = 0
        V = 1
        k = 0
        while k < V:
            v = order[k]
            k += 1
            for i in range(n):
                w = s.out[v * n + i]
                if w != -1 and label[w] == -1:
                    label[w] = V
                    order[V] = w
                    V += 1
                w = s.inn[v * n + i]
                if w != -1 and label[w] == -1:
                    label[w] = V
                    order[V] = w
                    V += 1
        flat = [-1] * (V * n)
        for k in range(V):
            v = order[k]
            for i in range(n):
                w = s.out[v * n + i]
                if w != -1:
                    flat[label[v] * n + i] = label[w]
        return V, flat
    finally:
        free(s.out)
        free(s.inn)
        free(s.parent)
        free(s.pend)
        free(moved)
        free(degree)
        free(alive)
        free(stack)
        free(label)
        free(order)


cdef int _is_canonical(int** sig, int** inv, int n, int m, int* seen, int* order) noexcept nogil:
    cdef int i, v, w, k = 0, nxt = 1, cnt = 1
    for i in range(m):
        seen[i] = 0
    seen[0] = 1
    order[0] = 0
    while k < cnt:
        v = order[k]
        k += 1
        for i in range(n):
            w = sig[i][v]
            if not seen[w]:
                if w != nxt:
                    return 0
                seen[w] = 1
                nxt += 1
                order[cnt] = w
                cnt += 1
            w = inv[i][v]
            if not seen[w]:
                if w != nxt:
                    return 0
                seen[w] = 1
                nxt += 1
                order[cnt] = w
                cnt += 1
    return 1 if nxt == m else 0


def canonical_tuples(int n, int m):
    perms = list(permutations(range(m)))
    cdef int P = len(perms)
    cdef int* table = <int*>malloc(P * m * sizeof(int))
    cdef int* itable = <int*>malloc(P * m * sizeof(int))
    cdef int* idx = <int*>malloc(n * sizeof(int))
    cdef int** sig = <int**>malloc(n * sizeof(int*))
    cdef int** inv = <int**>malloc(n * sizeof(int*))
    cdef int* seen = <int*>malloc(m * sizeof(int))
    cdef int* order = <int*>malloc(m * sizeof(int))
    cdef int j, x, i
    found = []
    try:
        for j in range(P):
            p = perms[j]
            for x in range(m):
                table[j * m + x] = p[x]
                itable[j * m + <int>p[x]] = x
        for i in range(n):
            idx[i] = 0
            sig[i] = table
            inv[i] = itable
        while True:
            if _is_canonical(sig, inv, n, m, seen, order):
                found.append(tuple([perms[idx[i]] for i in range(n)]))
            # odometer, last position fastest
            i = n - 1
            while i >= 0:
                idx[i] += 1
                if idx[i] < P:
                    break
                idx[i] = 0
                i -= 1
            if i < 0:
                break
            for j in range(i, n):
                sig[j] = table + idx[j] * m
                inv[j] = itable + idx[j] * m
        return found
    finally:
        free(table)
        free(itable)
        free(idx)
        free(sig)
        free(inv)
        free(seen)
        free(order)


def closure(gens, int degree):
    cdef int ng = len(gens)
    cdef int* g = <int*>malloc((ng * degree + 1) * sizeof(int))
    cdef int* cur = <int*>malloc((degree + 1) * sizeof(int))
    cdef int a, x, k
    ident = tuple(range(degree))
    seen = {ident}
    order = [ident]
    try:
        for a in range(ng):
            gen = gens[a]
            for x in range(degree):
                g[a * degree + x] = gen[x]
        k = 0
        while k < len(order):
            elem = order[k]
            k += 1
            for x in range(degree):
                cur[x] = elem[x]
            for a in range(ng):
                h = tuple([g[a * degree + cur[x]] for x in range(degree)])
                if h not in seen:
                    seen.add(h)
                    order.append(h)
        return order
    finally:
        free(g)
        free(cur)
