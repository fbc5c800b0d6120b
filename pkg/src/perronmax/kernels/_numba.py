import numba as nb
import numpy as np

NAME = "numba"

_jit = nb.njit(cache=True, nogil=True)


@_jit
def _matvec_into(indptr, indices, x, out):
    n = indptr.shape[0] - 1
    for v in range(n):
        s = 0.0
        for k in range(indptr[v], indptr[v + 1]):
            s += x[indices[k]]
        out[v] = s


@_jit
def matvec(indptr, indices, x):
    out = np.empty(indptr.shape[0] - 1)
    _matvec_into(indptr, indices, x, out)
    return out


@_jit
def power_iteration(indptr, indices, tol, max_iter):
    n = indptr.shape[0] - 1
    x = np.full(n, 1.0 / np.sqrt(n))
    y = np.empty(n)
    lam = 0.0
    lam_prev = np.inf
    residual = np.inf
    for it in range(1, max_iter + 1):
        _matvec_into(indptr, indices, x, y)
        lam = 0.0
        for v in range(n):
            lam += x[v] * y[v]
        residual = 0.0
        for v in range(n):
            r = abs(y[v] - lam * x[v])
            if r > residual:
                residual = r
        if abs(lam - lam_prev) < tol and residual < tol:
            return lam, x, residual, it, True
        lam_prev = lam
        # shifted step: x <- (A + I) x, normalised
        norm = 0.0
        for v in range(n):
            y[v] += x[v]
            norm += y[v] * y[v]
        norm = np.sqrt(norm)
        for v in range(n):
            x[v] = y[v] / norm
    return lam, x, residual, max_iter, False


@_jit
def _next_permutation(a):
    m = a.shape[0]
    i = m - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = m - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    lo = i + 1
    hi = m - 1
    while lo < hi:
        a[lo], a[hi] = a[hi], a[lo]
        lo += 1
        hi -= 1
    return True


@_jit
def fill_permutations(state, out):
    for r in range(out.shape[0]):
        out[r, :] = state
        if not _next_permutation(state):
            return r + 1, True
    return out.shape[0], False


@_jit
def prufer_decode_batch(codes, n):
    m = codes.shape[0]
    out = np.empty((m, n - 1, 2), np.int64)
    deg = np.empty(n, np.int64)
    for r in range(m):
        deg[:] = 1
        for k in range(n - 2):
            deg[codes[r, k]] += 1
        ptr = 0
        while deg[ptr] != 1:
            ptr += 1
        leaf = ptr
        for k in range(n - 2):
            v = codes[r, k]
            out[r, k, 0] = min(leaf, v)
            out[r, k, 1] = max(leaf, v)
            deg[v] -= 1
            if deg[v] == 1 and v < ptr:
                leaf = v
            else:
                ptr += 1
                while deg[ptr] != 1:
                    ptr += 1
                leaf = ptr
        out[r, n - 2, 0] = min(leaf, n - 1)
        out[r, n - 2, 1] = max(leaf, n - 1)
    return out


@_jit
def tree_codes_batch(edges, n):
    m = edges.shape[0]
    out = np.empty(m, np.int64)
    deg = np.empty(n, np.int64)
    indptr = np.empty(n + 1, np.int64)
    fill = np.empty(n, np.int64)
    nbr = np.empty(2 * (n - 1), np.int64)
    order = np.empty(n, np.int64)
    parent = np.empty(n, np.int64)
    size = np.empty(n, np.int64)
    code = np.empty(n, np.int64)
    bits = np.empty(n, np.int64)
    kc = np.empty(n, np.int64)
    kb = np.empty(n, np.int64)
    cents = np.empty(2, np.int64)
    for r in range(m):
        deg[:] = 0
        for k in range(n - 1):
            deg[edges[r, k, 0]] += 1
            deg[edges[r, k, 1]] += 1
        indptr[0] = 0
        for v in range(n):
            indptr[v + 1] = indptr[v] + deg[v]
            fill[v] = indptr[v]
        for k in range(n - 1):
            a = edges[r, k, 0]
            b = edges[r, k, 1]
            nbr[fill[a]] = b
            fill[a] += 1
            nbr[fill[b]] = a
            fill[b] += 1
        # centroids from subtree sizes rooted at 0
        parent[:] = -1
        parent[0] = 0
        order[0] = 0
        tail = 1
        for h in range(n):
            v = order[h]
            for k in range(indptr[v], indptr[v + 1]):
                u = nbr[k]
                if parent[u] < 0:
                    parent[u] = v
                    order[tail] = u
                    tail += 1
        size[:] = 1
        for h in range(n - 1, 0, -1):
            size[parent[order[h]]] += size[order[h]]
        best_worst = n + 1
        nc = 0
        for v in range(n):
            worst = n - size[v]
            for k in range(indptr[v], indptr[v + 1]):
                u = nbr[k]
                if parent[u] == v and u != 0 and size[u] > worst:
                    worst = size[u]
            if worst < best_worst:
                best_worst = worst
                nc = 0
            if worst == best_worst:
                cents[nc] = v
                nc += 1
        best = -1
        for ci in range(nc):
            c = cents[ci]
            parent[:] = -1
            parent[c] = c
            order[0] = c
            tail = 1
            for h in range(n):
                v = order[h]
                for k in range(indptr[v], indptr[v + 1]):
                    u = nbr[k]
                    if parent[u] < 0:
                        parent[u] = v
                        order[tail] = u
                        tail += 1
            for h in range(n - 1, -1, -1):
                v = order[h]
                nk = 0
                for k in range(indptr[v], indptr[v + 1]):
                    u = nbr[k]
                    if parent[u] != v or u == c:
                        continue
                    # insertion sort by (bits, code)
                    j = nk
                    while j > 0 and (kb[j - 1] > bits[u] or (kb[j - 1] == bits[u] and kc[j - 1] > code[u])):
                        kb[j] = kb[j - 1]
                        kc[j] = kc[j - 1]
                        j -= 1
                    kb[j] = bits[u]
                    kc[j] = code[u]
                    nk += 1
                acc = 1
                length = 1
                for j in range(nk):
                    acc = (acc << kb[j]) | kc[j]
                    length += kb[j]
                code[v] = acc << 1
                bits[v] = length + 1
            if best < 0 or code[c] < best:
                best = code[c]
        out[r] = best
    return out
