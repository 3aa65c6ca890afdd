"""Slow, obviously-correct references for the packed matrix paths.

Everything here is deliberately naive: dense lists, literal loops, plain
Python integers (which cannot overflow). Nothing is imported from the fast
modules, so a disagreement between an oracle and a packed implementation
always points at a real bug in one of them.
"""

import heapq


def _product_dims(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    if len(a[0]) != inner:
        raise ValueError(f"inner dimensions disagree: {rows}x{len(a[0])} times {inner}x{cols}")
    return rows, inner, cols


def naive_bool_mul(a, b):
    """Boolean product straight from the definition: OR over k of min terms."""
    rows, inner, cols = _product_dims(a, b)
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            acc = 0
            for k in range(inner):
                term = min(a[i][k], b[k][j])
                if term > acc:
                    acc = term
            out[i][j] = acc
    return out


def naive_antidist_mul(a, b, limit):
    """Anti-distance product from the definition: max over k of max(a+b-limit, 0)."""
    rows, inner, cols = _product_dims(a, b)
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            acc = 0
            for k in range(inner):
                term = a[i][k] + b[k][j] - limit
                if term > acc:
                    acc = term
            out[i][j] = acc
    return out


def closure_by_squaring(a, limit=None):
    """Closure as a * (I | a)^(n-1), the power taken by squaring to a fixpoint.

    limit None selects the Boolean semiring; otherwise entries are
    anti-distance values saturating at limit.
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("closure needs a square matrix")
    if limit is None:
        mul = naive_bool_mul
        one = 1
    else:
        def mul(x, y):
            return naive_antidist_mul(x, y, limit)
        one = limit
    m = [row[:] for row in a]
    for i in range(n):
        if m[i][i] < one:
            m[i][i] = one
    while True:
        squared = mul(m, m)
        if squared == m:
            break
        m = squared
    return mul(a, m)


def apsp_dijkstra(vertex_count, edges, limit):
    """Anti-distance closure reference via per-source Dijkstra.

    Paths use at least one edge, so the diagonal reports cycle lengths.
    Distances of limit or more collapse to unreachable (value 0).
    """
    adjacency = [[] for _ in range(vertex_count)]
    for u, v, w in edges:
        adjacency[u].append((v, w))
    out = [[0] * vertex_count for _ in range(vertex_count)]
    for source in range(vertex_count):
        best = [None] * vertex_count
        heap = [(w, v) for v, w in adjacency[source]]
        heapq.heapify(heap)
        while heap:
            d, v = heapq.heappop(heap)
            if best[v] is not None:
                continue
            best[v] = d
            for target, w in adjacency[v]:
                if best[target] is None:
                    heapq.heappush(heap, (d + w, target))
        row = out[source]
        for v in range(vertex_count):
            if best[v] is not None and best[v] < limit:
                row[v] = limit - best[v]
    return out


def enumerate_paths_closure(a):
    """Boolean closure by walking every edge sequence of length 1..n.

    Exponential by construction; matrices larger than 6x6 are rejected.
    """
    n = len(a)
    if n > 6:
        raise ValueError(f"path enumeration only supports up to 6 vertices, got {n}")
    if any(len(row) != n for row in a):
        raise ValueError("closure needs a square matrix")
    out = [[0] * n for _ in range(n)]
    for start in range(n):
        stack = [(start, 0)]
        while stack:
            v, steps = stack.pop()
            if steps >= 1:
                out[start][v] = 1
            if steps < n:
                row = a[v]
                for target in range(n):
                    if row[target]:
                        stack.append((target, steps + 1))
    return out
