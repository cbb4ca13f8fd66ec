# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: all-pairs BFS, ecc/norm profile, Pruefer-oracle canonicalization.

Results are identical to ``treenorm._pykernels``.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

DEF MAXN = 32  # a canonical code has 2n bits


cdef int _bfs_all(int n, const int[:] indptr, const int[:] indices, int* dist) nogil:
    """Fill dist (n*n, row-major); return 0 if connected, 1 otherwise."""
    cdef int s, v, u, j, head, tail, base
    cdef int disconnected = 0
    cdef int* queue = <int*> malloc(n * sizeof(int))
    for s in range(n * n):
        dist[s] = -1
    for s in range(n):
        base = s * n
        dist[base + s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            for j in range(indptr[v], indptr[v + 1]):
                u = indices[j]
                if dist[base + u] < 0:
                    dist[base + u] = dist[base + v] + 1
                    queue[tail] = u
                    tail += 1
        if tail < n:
            disconnected = 1
    free(queue)
    return disconnected


def all_pairs(int n, const int[:] indptr, const int[:] indices):
    cdef int* dist = <int*> malloc(n * n * sizeof(int))
    cdef int i
    try:
        _bfs_all(n, indptr, indices, dist)
        return [dist[i] for i in range(n * n)]
    finally:
        free(dist)


def ecc_norm(int n, const int[:] indptr, const int[:] indices):
    cdef int* dist = <int*> malloc(n * n * sizeof(int))
    cdef int* ecc = <int*> malloc(n * sizeof(int))
    cdef int* norm = <int*> malloc(n * sizeof(int))
    cdef int v, u, best, diameter = 0
    try:
        if _bfs_all(n, indptr, indices, dist):
            return None
        for v in range(n):
            best = 0
            for u in range(n):
                if dist[v * n + u] > best:
                    best = dist[v * n + u]
            ecc[v] = best
            if best > diameter:
                diameter = best
        for v in range(n):
            best = n
            for u in range(n):
                if ecc[u] == diameter and dist[v * n + u] < best:
                    best = dist[v * n + u]
            norm[v] = best
        return [ecc[v] for v in range(n)], [norm[v] for v in range(n)]
    finally:
        free(dist)
        free(ecc)
        free(norm)


# Canonical codes as bit strings: '(' -> 0, ')' -> 1, most significant bit first.
# No code is a proper prefix of another, so comparing left-aligned words is
# the same as comparing the parenthesis strings lexicographically.

cdef inline uint64_t _aligned(uint64_t bits, int length) nogil:
    return bits << (64 - length)


cdef void _encode(int root, int block, int n, int adj[][MAXN], int* deg,
                  uint64_t* cbits, int* clen) nogil:
    cdef int order[MAXN]
    cdef int parent[MAXN]
    cdef int kids[MAXN]
    cdef int count = 0, i, j, k, v, u, c, nk, total
    cdef uint64_t bits, key
    order[0] = root
    parent[root] = -1
    count = 1
    i = 0
    while i < count:
        v = order[i]
        i += 1
        for j in range(deg[v]):
            u = adj[v][j]
            if u != parent[v] and u != block:
                parent[u] = v
                order[count] = u
                count += 1
    for i in range(count - 1, -1, -1):
        v = order[i]
        nk = 0
        for j in range(deg[v]):
            u = adj[v][j]
            if u != parent[v] and u != block:
                # insertion sort by aligned code
                key = _aligned(cbits[u], clen[u])
                k = nk
                while k > 0 and _aligned(cbits[kids[k - 1]], clen[kids[k - 1]]) > key:
                    kids[k] = kids[k - 1]
                    k -= 1
                kids[k] = u
                nk += 1
        bits = 0
        total = 0
        for k in range(nk):
            c = kids[k]
            bits = (bits << clen[c]) | cbits[c]
            total += clen[c]
        cbits[v] = (bits << 1) | 1
        clen[v] = total + 2


cdef void _tree_key(int n, int adj[][MAXN], int* deg, uint64_t* out_bits, int* out_len) nogil:
    cdef int order[MAXN]
    cdef int parent[MAXN]
    cdef int size[MAXN]
    cdef uint64_t cbits[MAXN]
    cdef int clen[MAXN]
    cdef int count = 1, i, j, v, u, biggest, c1 = -1, c2 = -1
    cdef uint64_t a_bits, b_bits, tmp_bits
    cdef int a_len, b_len, tmp_len
    order[0] = 0
    parent[0] = -1
    i = 0
    while i < count:
        v = order[i]
        i += 1
        for j in range(deg[v]):
            u = adj[v][j]
            if u != parent[v]:
                parent[u] = v
                order[count] = u
                count += 1
    for i in range(n - 1, -1, -1):
        v = order[i]
        size[v] = 1
        for j in range(deg[v]):
            u = adj[v][j]
            if u != parent[v]:
                size[v] += size[u]
    for v in range(n):
        biggest = n - size[v]
        for j in range(deg[v]):
            u = adj[v][j]
            if u != parent[v] and size[u] > biggest:
                biggest = size[u]
        if 2 * biggest <= n:
            if c1 < 0:
                c1 = v
            else:
                c2 = v
    if c2 < 0:
        _encode(c1, -1, n, adj, deg, cbits, clen)
        out_bits[0] = cbits[c1]
        out_len[0] = clen[c1]
        return
    _encode(c1, c2, n, adj, deg, cbits, clen)
    _encode(c2, c1, n, adj, deg, cbits, clen)
    a_bits = cbits[c1]
    a_len = clen[c1]
    b_bits = cbits[c2]
    b_len = clen[c2]
    if _aligned(a_bits, a_len) > _aligned(b_bits, b_len):
        tmp_bits = a_bits; a_bits = b_bits; b_bits = tmp_bits
        tmp_len = a_len; a_len = b_len; b_len = tmp_len
    out_bits[0] = (a_bits << b_len) | b_bits
    out_len[0] = a_len + b_len


cdef str _bits_to_code(uint64_t bits, int length):
    cdef int i
    return "".join([")" if (bits >> (length - 1 - i)) & 1 else "(" for i in range(length)])


def tree_code(int n, const int[:] indptr, const int[:] indices):
    """Canonical code of a tree with at most 32 vertices (no validation)."""
    cdef int adj[MAXN][MAXN]
    cdef int deg[MAXN]
    cdef int v, j
    cdef uint64_t bits
    cdef int length
    if n > MAXN:
        raise ValueError("tree_code supports at most 32 vertices")
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        for j in range(deg[v]):
            adj[v][j] = indices[indptr[v] + j]
    _tree_key(n, adj, deg, &bits, &length)
    return _bits_to_code(bits, length)


def prufer_class_codes(int n):
    """Sorted canonical codes of all labeled trees on n vertices (via Pruefer decoding)."""
    cdef int seq[MAXN]
    cdef int degree[MAXN]
    cdef int adj[MAXN][MAXN]
    cdef int deg[MAXN]
    cdef int m, i, j, x, leaf, u, w
    cdef uint64_t bits
    cdef int length
    cdef set keys = set()
    if n < 1 or n > 12:
        raise ValueError("Pruefer enumeration supports 1 <= n <= 12")
    if n == 1:
        return ["()"]
    if n == 2:
        return ["()()"]
    m = n - 2
    for i in range(m):
        seq[i] = 0
    while True:
        for i in range(n):
            degree[i] = 1
            deg[i] = 0
        for i in range(m):
            degree[seq[i]] += 1
        for i in range(m):
            x = seq[i]
            leaf = 0
            while degree[leaf] != 1:
                leaf += 1
            adj[leaf][deg[leaf]] = x
            deg[leaf] += 1
            adj[x][deg[x]] = leaf
            deg[x] += 1
            degree[leaf] -= 1
            degree[x] -= 1
        u = -1
        for i in range(n):
            if degree[i] == 1:
                if u < 0:
                    u = i
                else:
                    w = i
        adj[u][deg[u]] = w
        deg[u] += 1
        adj[w][deg[w]] = u
        deg[w] += 1
        _tree_key(n, adj, deg, &bits, &length)
        keys.add(bits)
        # odometer increment
        i = m - 1
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            break
        seq[i] += 1
    return sorted([_bits_to_code(b, 2 * n) for b in keys])
