import numpy as np

NAME = "numpy"


def _rows(indptr):
    return np.repeat(np.arange(indptr.shape[0] - 1), np.diff(indptr))


def matvec(indptr, indices, x):
    n = indptr.shape[0] - 1
    return np.bincount(_rows(indptr), weights=x[indices], minlength=n)


def power_iteration(indptr, indices, tol, max_iter):
    n = indptr.shape[0] - 1
    rows = _rows(indptr)
    x = np.full(n, 1.0 / np.sqrt(n))
    lam = 0.0
    lam_prev = np.inf
    residual = np.inf
    for it in range(1, max_iter + 1):
        y = np.bincount(rows, weights=x[indices], minlength=n)
        lam = float(x @ y)
        residual = float(np.max(np.abs(y - lam * x)))
        if abs(lam - lam_prev) < tol and residual < tol:
            return lam, x, residual, it, True
        lam_prev = lam
        y += x
        x = y / np.sqrt(y @ y)
    return lam, x, residual, max_iter, False


def fill_permutations(state, out):
    # same contract as the numba kernel; plain Python on a list is faster here
    a = state.tolist()
    m = len(a)
    for r in range(out.shape[0]):
        out[r, :] = a
        i = m - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            state[:] = a
            return r + 1, True
        j = m - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = a[:i:-1]
    state[:] = a
    return out.shape[0], False


def prufer_decode_batch(codes, n):
    m = codes.shape[0]
    out = np.empty((m, n - 1, 2), np.int64)
    for r, code in enumerate(codes.tolist()):
        deg = [1] * n
        for v in code:
            deg[v] += 1
        ptr = deg.index(1)
        leaf = ptr
        edges = []
        for v in code:
            edges.append((min(leaf, v), max(leaf, v)))
            deg[v] -= 1
            if deg[v] == 1 and v < ptr:
                leaf = v
            else:
                ptr += 1
                while deg[ptr] != 1:
                    ptr += 1
                leaf = ptr
        edges.append((min(leaf, n - 1), max(leaf, n - 1)))
        out[r] = edges
    return out


def _rooted(adj, root):
    parent = {root: root}
    order = [root]
    for v in order:
        for u in adj[v]:
            if u not in parent:
                parent[u] = v
                order.append(u)
    code = {}
    for v in reversed(order):
        kids = sorted((code[u] for u in adj[v] if parent.get(u) == v and u != root), key=lambda cb: (cb[1], cb[0]))
        acc, length = 1, 1
        for c, b in kids:
            acc = (acc << b) | c
            length += b
        code[v] = (acc << 1, length + 1)
    return code[root][0]


def tree_codes_batch(edges, n):
    out = np.empty(edges.shape[0], np.int64)
    for r, tree in enumerate(edges.tolist()):
        adj = [[] for _ in range(n)]
        for a, b in tree:
            adj[a].append(b)
            adj[b].append(a)
        # centroids
        parent = [-1] * n
        parent[0] = 0
        order = [0]
        for v in order:
            for u in adj[v]:
                if parent[u] < 0:
                    parent[u] = v
                    order.append(u)
        size = [1] * n
        for v in reversed(order[1:]):
            size[parent[v]] += size[v]
        worst = []
        for v in range(n):
            kids = [size[u] for u in adj[v] if parent[u] == v and u != 0]
            worst.append(max(kids + [n - size[v]]))
        low = min(worst)
        out[r] = min(_rooted(adj, c) for c in range(n) if worst[c] == low)
    return out
