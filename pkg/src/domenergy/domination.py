"""Exact minimum dominating and connected dominating set computation.

Solvers are exhaustive branch-and-bound / ordered enumeration over bit masks:
exactness and determinism matter more than asymptotics at the 64-vertex desk
scale this package targets. Canonical tie-breaking: a minimum dominating set
whose induced subgraph is connected is preferred when one exists, then the
lexicographically smallest sorted vertex list wins.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, VertexSet, induced_connected, is_connected, is_tree, iter_bits

KIND_DOMINATING = "dominating"
KIND_CONNECTED = "connected-dominating"


class DominationError(ValueError):
    """Domain error: no set of the requested kind exists or input is out of scope."""


@dataclass(frozen=True)
class DominationCertificate:
    """A vertex set verified to dominate, with minimality and tie-break evidence."""

    set: VertexSet
    kind: str
    size: int
    is_minimum: bool
    canonical: bool

    def to_json_dict(self) -> dict:
        return {
            "set": list(self.set.vertices()),
            "kind": self.kind,
            "size": self.size,
            "is_minimum": self.is_minimum,
            "canonical": self.canonical,
        }


def is_dominating_set(g: Graph, s: VertexSet) -> bool:
    """True iff the union of closed neighbourhoods of ``s`` covers every vertex."""
    covered = 0
    for v in s:
        covered |= g.closed_row(v)
    return covered == g.full_mask


def is_connected_dominating_set(g: Graph, s: VertexSet) -> bool:
    """True iff ``s`` dominates and induces a connected subgraph; empty set rejected."""
    if len(s) == 0:
        raise DominationError("empty set cannot be connected dominating")
    return is_dominating_set(g, s) and induced_connected(g, s.mask)


# ---------------------------------------------------------------------------
# plain domination
# ---------------------------------------------------------------------------

def _closed_rows(g: Graph) -> list[int]:
    return [g.closed_row(v) for v in range(g.n)]


def _exists_dominating(g: Graph, k: int) -> bool:
    """Branch-and-bound decision: does a dominating set of size <= k exist?

    Branches on an uncovered vertex with fewest remaining coverers; coverers
    tried in ascending order, banning earlier ones to split the search space.
    """
    closed = _closed_rows(g)
    full = g.full_mask
    if full == 0:
        return True
    maxcov = max(row.bit_count() for row in closed)

    def rec(covered: int, budget: int, banned: int) -> bool:
        if covered == full:
            return True
        if budget == 0:
            return False
        uncovered = full & ~covered
        if (uncovered.bit_count() + maxcov - 1) // maxcov > budget:
            return False
        pick = -1
        pick_opts = 0
        pick_count = g.n + 1
        for u in iter_bits(uncovered):
            opts = closed[u] & ~banned
            c = opts.bit_count()
            if c == 0:
                return False
            if c < pick_count:
                pick, pick_opts, pick_count = u, opts, c
                if c == 1:
                    break
        ban = banned
        for w in iter_bits(pick_opts):
            if rec(covered | closed[w], budget - 1, ban):
                return True
            ban |= 1 << w
        return False

    return rec(0, k, 0)


def gamma(g: Graph) -> int:
    """Exact domination number via iterative deepening."""
    if g.n < 1:
        raise DominationError("domination number needs n >= 1")
    closed = _closed_rows(g)
    maxcov = max(row.bit_count() for row in closed)
    lb = (g.n + maxcov - 1) // maxcov
    for k in range(lb, g.n + 1):
        if _exists_dominating(g, k):
            return k
    raise AssertionError("V(G) always dominates")


def _iter_dominating_of_size(g: Graph, k: int):
    """Yield all dominating sets of size exactly k as masks, in lexicographic order."""
    closed = _closed_rows(g)
    full = g.full_mask
    n = g.n
    maxcov = max((row.bit_count() for row in closed), default=1)
    # suffix_cover[v] = union of closed rows of vertices >= v
    suffix_cover = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix_cover[v] = suffix_cover[v + 1] | closed[v]

    def rec(start: int, smask: int, covered: int, depth: int):
        if depth == k:
            if covered == full:
                yield smask
            return
        budget = k - depth
        uncovered = full & ~covered
        if (uncovered.bit_count() + maxcov - 1) // maxcov > budget:
            return
        for v in range(start, n):
            if uncovered & ~suffix_cover[v]:
                return  # some vertex can no longer be covered
            yield from rec(v + 1, smask | (1 << v), covered | closed[v], depth + 1)

    yield from rec(0, 0, 0, 0)


# ---------------------------------------------------------------------------
# connected domination
# ---------------------------------------------------------------------------

def _iter_connected_dominating_of_size(g: Graph, k: int, first_only: bool = False):
    """Yield connected dominating sets of size exactly k as masks.

    Enumerates connected vertex sets rooted at their minimum member (roots in
    ascending order), so each qualifying set appears exactly once. Within one
    root the order is not lexicographic; callers sort per-root groups.
    """
    n = g.n
    adj = g.adj
    closed = _closed_rows(g)
    full = g.full_mask
    maxcov = max(row.bit_count() for row in closed)

    def rec(smask: int, covered: int, cand: int, banned: int, allowed: int):
        size = smask.bit_count()
        if size == k:
            if covered == full:
                yield smask
            return
        if (full & ~covered).bit_count() > (k - size) * maxcov:
            return
        # reachability: the set can only grow through its frontier
        reach = smask
        frontier = cand
        while frontier:
            reach |= frontier
            grow = 0
            for v in iter_bits(frontier):
                grow |= adj[v]
            frontier = grow & allowed & ~reach & ~banned
        if reach.bit_count() < k:
            return
        ban = banned
        for x in iter_bits(cand):
            if (ban >> x) & 1:
                continue
            new_s = smask | (1 << x)
            new_cand = (cand | (adj[x] & allowed)) & ~new_s & ~ban
            yield from rec(new_s, covered | closed[x], new_cand, ban, allowed)
            ban |= 1 << x

    for r in range(n):
        allowed = full & ~((1 << r) - 1)  # vertices >= r; r is the set minimum
        if k == 1:
            if closed[r] == full:
                yield 1 << r
            continue
        yield from rec(1 << r, closed[r], adj[r] & allowed, 0, allowed)


def gamma_c(g: Graph) -> int:
    """Exact connected domination number; raises on disconnected input."""
    if g.n < 1:
        raise DominationError("connected domination needs n >= 1")
    if not is_connected(g):
        raise DominationError("no connected dominating set exists for a disconnected graph")
    lo = gamma(g)
    for k in range(max(lo, 1), g.n + 1):
        for _ in _iter_connected_dominating_of_size(g, k):
            return k
    raise AssertionError("V(G) of a connected graph is connected dominating")


def gamma_c_tree_fastpath(g: Graph) -> int:
    """n minus the pendant count; for trees with n >= 3 this equals gamma_c."""
    if not is_tree(g) or g.n < 3:
        raise DominationError("tree fastpath requires a tree with n >= 3")
    pendants = sum(1 for v in range(g.n) if g.degree(v) == 1)
    return g.n - pendants


# ---------------------------------------------------------------------------
# canonical certificates and enumeration
# ---------------------------------------------------------------------------

def _mask_key(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def _lex_min_connected_dominating(g: Graph, k: int) -> int:
    best = None
    for mask in _iter_connected_dominating_of_size(g, k):
        key = _mask_key(mask)
        if best is None or key < best[0]:
            best = (key, mask)
    assert best is not None
    return best[1]


def minimum_connected_dominating_set(g: Graph) -> DominationCertificate:
    """Lexicographically least minimum connected dominating set."""
    k = gamma_c(g)
    mask = _lex_min_connected_dominating(g, k)
    return DominationCertificate(
        set=VertexSet(mask, g.n), kind=KIND_CONNECTED, size=k,
        is_minimum=True, canonical=True,
    )


def minimum_dominating_set(g: Graph) -> DominationCertificate:
    """Canonical minimum dominating set.

    Among minimum dominating sets, a connected one is preferred when it
    exists (possible iff gamma == gamma_c), then the lexicographically
    smallest sorted vertex list.
    """
    k = gamma(g)
    if is_connected(g) and gamma_c(g) == k:
        mask = _lex_min_connected_dominating(g, k)
    else:
        mask = next(iter(_iter_dominating_of_size(g, k)))
    return DominationCertificate(
        set=VertexSet(mask, g.n), kind=KIND_DOMINATING, size=k,
        is_minimum=True, canonical=True,
    )


def enumerate_minimum_sets(g: Graph, kind: str, limit: int) -> list[VertexSet]:
    """All optimal sets of the given kind in lexicographic order, truncated at limit."""
    if limit < 1:
        raise DominationError("limit must be at least 1")
    if kind == KIND_DOMINATING:
        k = gamma(g)
        out = []
        for mask in _iter_dominating_of_size(g, k):
            out.append(VertexSet(mask, g.n))
            if len(out) == limit:
                break
        return out
    if kind == KIND_CONNECTED:
        k = gamma_c(g)
        out = []
        by_root: dict[int, list[tuple[tuple[int, ...], int]]] = {}
        for mask in _iter_connected_dominating_of_size(g, k):
            root = (mask & -mask).bit_length() - 1
            by_root.setdefault(root, []).append((_mask_key(mask), mask))
        for root in sorted(by_root):
            for _, mask in sorted(by_root[root]):
                out.append(VertexSet(mask, g.n))
                if len(out) == limit:
                    return out
        return out
    raise DominationError(f"unknown set kind {kind!r}")
