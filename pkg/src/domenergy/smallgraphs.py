"""Canonical forms, isomorphism, and exhaustive small-graph corpora.

The canonical form is the lexicographically least upper-triangle adjacency
code over all vertex orderings compatible with the stable colour refinement
of the graph. Refinement classes are themselves ordered canonically, so the
code is a complete isomorphism invariant. Exhaustive corpora (all graphs,
connected graphs, trees, unicyclic graphs up to isomorphism) are built by
augmentation with canonical-code deduplication.
"""

from __future__ import annotations

from .graphs import Graph, is_connected, iter_bits


def _refined_colors(adj: tuple[int, ...], n: int) -> list[int]:
    """Stable 1-dimensional colour refinement with canonically ordered classes."""
    colors = [adj[v].bit_count() for v in range(n)]
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colors[u] for u in iter_bits(adj[v]))
            sigs.append((colors[v], tuple(nbr)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_code(g: Graph) -> tuple[int, ...]:
    """Canonical adjacency code: per-position column bit masks, least ordering first.

    Two graphs are isomorphic iff they have equal vertex counts and equal codes.
    """
    n, adj = g.n, g.adj
    if n == 0:
        return ()
    colors = _refined_colors(adj, n)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    pos_class: list[list[int]] = []
    for c in sorted(classes):
        pos_class.extend([classes[c]] * len(classes[c]))

    best: list[int] | None = None
    perm = [0] * n
    cols = [0] * n
    used = [False] * n

    def dfs(pos: int, lt: bool) -> bool:
        # lt: current prefix is strictly below best's prefix. Returns True when
        # best was replaced inside this subtree (the caller's prefix then equals
        # best's prefix, so its lt must reset).
        nonlocal best
        if pos == n:
            if lt or best is None:
                best = cols.copy()
                return True
            return False
        updated = False
        tried: list[int] = []
        for v in pos_class[pos]:
            if used[v]:
                continue
            row = adj[v]
            # swapping two twins is an automorphism; one representative suffices
            if any(row == adj[u] or row | (1 << v) == adj[u] | (1 << u) for u in tried):
                continue
            col = 0
            for q in range(pos):
                col |= ((row >> perm[q]) & 1) << q
            branch_lt = lt
            if not branch_lt and best is not None:
                if col > best[pos]:
                    tried.append(v)
                    continue
                branch_lt = col < best[pos]
            used[v] = True
            perm[pos] = v
            cols[pos] = col
            if dfs(pos + 1, branch_lt):
                updated = True
                lt = False
            used[v] = False
            tried.append(v)
        return updated

    dfs(0, False)
    assert best is not None
    return tuple(best)


def graph_from_code(n: int, code: tuple[int, ...]) -> Graph:
    rows = [0] * n
    for p in range(n):
        col = code[p]
        for q in iter_bits(col):
            rows[p] |= 1 << q
            rows[q] |= 1 << p
    m = sum(r.bit_count() for r in rows) // 2
    return Graph(n, tuple(rows), m)


def canonical_graph(g: Graph) -> Graph:
    return graph_from_code(g.n, canonical_code(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_code(g) == canonical_code(h)


# ---------------------------------------------------------------------------
# corpora (all up to isomorphism, deterministic order)
# ---------------------------------------------------------------------------

_ALL_CACHE: dict[int, list[Graph]] = {}
_TREE_CACHE: dict[int, list[Graph]] = {}
_UNI_CACHE: dict[int, list[Graph]] = {}


def all_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism (canonical representatives)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cached = _ALL_CACHE.get(n)
    if cached is not None:
        return cached
    if n == 0:
        out = [Graph(0, (), 0)]
    elif n == 1:
        out = [Graph(1, (0,), 0)]
    else:
        seen: dict[tuple[int, ...], None] = {}
        new = n - 1
        for parent in all_graphs(n - 1):
            base = parent.adj
            for mask in range(1 << new):
                rows = [base[v] | (((mask >> v) & 1) << new) for v in range(new)]
                rows.append(mask)
                child = Graph(n, tuple(rows), parent.m + mask.bit_count())
                code = canonical_code(child)
                if code not in seen:
                    seen[code] = None
        out = [graph_from_code(n, code) for code in sorted(seen)]
    _ALL_CACHE[n] = out
    return out


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if is_connected(g)]


def trees(n: int) -> list[Graph]:
    """All trees on n vertices up to isomorphism, via leaf augmentation."""
    if n < 1:
        raise ValueError("n must be positive")
    cached = _TREE_CACHE.get(n)
    if cached is not None:
        return cached
    if n == 1:
        out = [Graph(1, (0,), 0)]
    else:
        seen: dict[tuple[int, ...], None] = {}
        leaf = n - 1
        for parent in trees(n - 1):
            for v in range(n - 1):
                rows = [parent.adj[u] | ((1 << leaf) if u == v else 0) for u in range(n - 1)]
                rows.append(1 << v)
                child = Graph(n, tuple(rows), n - 1)
                code = canonical_code(child)
                if code not in seen:
                    seen[code] = None
        out = [graph_from_code(n, code) for code in sorted(seen)]
    _TREE_CACHE[n] = out
    return out


def unicyclic_graphs(n: int) -> list[Graph]:
    """All connected unicyclic graphs on n vertices, via tree plus one edge."""
    if n < 3:
        raise ValueError("unicyclic graphs need n >= 3")
    cached = _UNI_CACHE.get(n)
    if cached is not None:
        return cached
    seen: dict[tuple[int, ...], None] = {}
    for t in trees(n):
        for u in range(n):
            for v in range(u + 1, n):
                if (t.adj[u] >> v) & 1:
                    continue
                rows = list(t.adj)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                child = Graph(n, tuple(rows), n)
                code = canonical_code(child)
                if code not in seen:
                    seen[code] = None
    out = [graph_from_code(n, code) for code in sorted(seen)]
    _UNI_CACHE[n] = out
    return out
