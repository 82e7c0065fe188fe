"""Pure-Python implementations of the hot kernels.

Every function here has a compiled twin in ``_fast.pyx`` with the same
signature and the same output, element for element.  The package uses the
compiled version when it is importable.
"""

from itertools import permutations, product

__all__ = ["fold", "canonical_tuples", "closure"]


def fold(n, words, do_fold=True):
    """Fold a bouquet of based loops into the canonical core graph.

    ``words`` is a sequence of letter sequences (signed generator indices,
    1-based).  Returns ``(V, out)`` where ``out`` is a flat list of length
    ``V * n``: ``out[v * n + i]`` is the target of the ``i``-edge leaving
    vertex ``v`` or -1.  Vertices are numbered breadth-first from the base
    (vertex 0), visiting for each label first the outgoing, then the incoming
    edge.

    With ``do_fold=False`` conflicting edges are silently dropped instead of
    merged; this exists only for fault-injection runs.
    """
    out = [[-1] * n]
    inn = [[-1] * n]
    parent = [0]
    pending = []

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def add_edge(u, i, w):
        u = find(u)
        w = find(w)
        x = out[u][i]
        if x != -1:
            if x != w and do_fold:
                pending.append((x, w))
            return
        y = inn[w][i]
        if y != -1:
            if do_fold:
                pending.append((y, u))
            return
        out[u][i] = w
        inn[w][i] = u

    def merge(a, b):
        a = find(a)
        b = find(b)
        if a == b:
            return
        if b < a:
            a, b = b, a
        parent[b] = a
        moved = []
        ob = out[b]
        ib = inn[b]
        for i in range(n):
            w = ob[i]
            if w != -1:
                ob[i] = -1
                inn[w][i] = -1
                moved.append((b, i, w))
            u = ib[i]
            if u != -1:
                out[u][i] = -1
                ib[i] = -1
                moved.append((u, i, b))
        for u, i, w in moved:
            add_edge(u, i, w)

    def new_vertex():
        out.append([-1] * n)
        inn.append([-1] * n)
        parent.append(len(parent))
        return len(parent) - 1

    for word in words:
        if not word:
            continue
        cur = 0
        last = len(word) - 1
        for pos, letter in enumerate(word):
            nxt = 0 if pos == last else new_vertex()
            if letter > 0:
                add_edge(cur, letter - 1, nxt)
            else:
                add_edge(nxt, -letter - 1, cur)
            while pending:
                a, b = pending.pop()
                merge(a, b)
            cur = nxt

    # core reduction: trim non-base vertices of degree <= 1
    total = len(parent)
    alive = [parent[v] == v for v in range(total)]
    degree = [0] * total
    for v in range(total):
        if alive[v]:
            degree[v] = sum(1 for x in out[v] if x != -1) + sum(1 for x in inn[v] if x != -1)
    stack = [v for v in range(1, total) if alive[v] and degree[v] <= 1]
    while stack:
        v = stack.pop()
        if not alive[v] or degree[v] > 1:
            continue
        alive[v] = False
        for i in range(n):
            w = out[v][i]
            if w != -1:
                out[v][i] = -1
                inn[w][i] = -1
                degree[w] -= 1
                if w != 0 and alive[w] and degree[w] <= 1:
                    stack.append(w)
            u = inn[v][i]
            if u != -1:
                inn[v][i] = -1
                out[u][i] = -1
                degree[u] -= 1
                if u != 0 and alive[u] and degree[u] <= 1:
                    stack.append(u)

    # canonical breadth-first renumbering
    label = {0: 0}
    order = [0]
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        for i in range(n):
            for w in (out[v][i], inn[v][i]):
                if w != -1 and w not in label:
                    label[w] = len(order)
                    order.append(w)
    flat = [-1] * (len(order) * n)
    for v in order:
        base = label[v] * n
        row = out[v]
        for i in range(n):
            w = row[i]
            if w != -1:
                flat[base + i] = label[w]
    return len(order), flat


def _is_canonical(sig, inv, n, m):
    seen = [False] * m
    seen[0] = True
    order = [0]
    nxt = 1
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        for i in range(n):
            w = sig[i][v]
            if not seen[w]:
                if w != nxt:
                    return False
                seen[w] = True
                nxt += 1
                order.append(w)
            w = inv[i][v]
            if not seen[w]:
                if w != nxt:
                    return False
                seen[w] = True
                nxt += 1
                order.append(w)
    return nxt == m


def canonical_tuples(n, m):
    """All n-tuples of permutations of ``range(m)`` acting transitively whose
    breadth-first numbering from point 0 is the identity.

    Each index-m subgroup of the free group of rank n (the stabilizer of 0)
    arises from exactly one such tuple.  Output order is the lexicographic
    order of ``itertools.product`` over ``itertools.permutations``.
    """
    perms = list(permutations(range(m)))
    invs = []
    for p in perms:
        q = [0] * m
        for x, y in enumerate(p):
            q[y] = x
        invs.append(tuple(q))
    found = []
    for idx in product(range(len(perms)), repeat=n):
        sig = [perms[j] for j in idx]
        inv = [invs[j] for j in idx]
        if _is_canonical(sig, inv, n, m):
            found.append(tuple(sig))
    return found


def closure(gens, degree):
    """Every element of the group generated by ``gens``, by breadth-first
    right multiplication starting from the identity.  Elements are image
    tuples, in discovery order."""
    ident = tuple(range(degree))
    gens = [tuple(g) for g in gens]
    seen = {ident}
    order = [ident]
    k = 0
    while k < len(order):
        g = order[k]
        k += 1
        for s in gens:
            h = tuple([s[x] for x in g])
            if h not in seen:
                seen.add(h)
                order.append(h)
    return order
