"""Independent oracles for the test suite.

Everything here is implemented from scratch on plain edge lists, without
importing the package's search or canonicalization code, so the two sides of
every comparison stay independent.
"""

from itertools import combinations, permutations


def connected(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def floyd_warshall(n, edges):
    big = n + 1
    dist = [[0 if i == j else big for j in range(n)] for i in range(n)]
    for u, v in edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return dist


def naive_reachable(n, edges, counts, x, pebbling_only=False):
    """Plain BFS over distribution states; no pruning, no move ordering."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    start = tuple(counts)
    if start[x] >= 1:
        return True
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for cur in frontier:
            succs = []
            for v in range(n):
                if cur[v] >= 2:
                    for u in adj[v]:
                        succs.append((v, v, u))
            if not pebbling_only:
                for u in range(n):
                    for v, w in combinations(sorted(adj[u]), 2):
                        if cur[v] >= 1 and cur[w] >= 1:
                            succs.append((v, w, u))
            for v, w, u in succs:
                state = list(cur)
                state[v] -= 1
                state[w] -= 1
                state[u] += 1
                state = tuple(state)
                if state[x] >= 1:
                    return True
                if state not in seen:
                    seen.add(state)
                    nxt.append(state)
        frontier = nxt
    return False


def brute_canonical(n, edges):
    """Minimum over all vertex permutations of the column-major upper-triangle
    bit tuple."""
    eset = {frozenset(e) for e in edges}
    best = None
    for perm in permutations(range(n)):
        bits = tuple(
            1 if frozenset((perm[i], perm[j])) in eset else 0
            for j in range(1, n)
            for i in range(j)
        )
        if best is None or bits < best:
            best = bits
    return best


def all_connected_graphs_brute(n):
    """Every connected n-vertex graph up to isomorphism (edge lists), found by
    scanning all labeled graphs; practical for n <= 5."""
    pairs = list(combinations(range(n), 2))
    out = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        if connected(n, edges):
            key = brute_canonical(n, edges)
            if key not in out:
                out[key] = edges
    return list(out.values())


def random_connected_edges(rng, n, p=0.45):
    while True:
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        if connected(n, edges):
            return edges


def random_tree_edges(rng, n):
    return [(rng.randrange(v), v) for v in range(1, n)]
