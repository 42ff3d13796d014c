"""Bit-set graph core: parsing, generators, and structural queries.

Graphs are simple, undirected, and capped at 64 vertices so each adjacency
row fits in one machine word (a Python int used as a bit set). Everything
here is immutable and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_VERTICES = 64


class ParseError(ValueError):
    """Malformed textual graph input; the message names the offending position."""


def iter_bits(mask: int):
    """Yield set bit indices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a graph on ``n`` vertices, stored as a bit mask."""

    mask: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"bit set {self.mask:#x} has members >= n={self.n}")

    @classmethod
    def of(cls, vertices, n: int) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        return cls(mask, n)

    def vertices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __iter__(self):
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with adjacency rows as bit masks."""

    n: int
    adj: tuple[int, ...]
    m: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count differs from n")
        total = 0
        for v, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ValueError(f"adjacency row {v} has bits >= n")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            total += row.bit_count()
        if total % 2:
            raise ValueError("adjacency is not symmetric (odd total degree)")
        for v, row in enumerate(self.adj):
            for u in iter_bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        if self.m != total // 2:
            raise ValueError(f"edge count {self.m} != {total // 2} from adjacency")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        m = sum(r.bit_count() for r in rows) // 2
        return cls(n, tuple(rows), m)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed_row(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for d in iter_bits(row):
                out.append((u, u + 1 + d))
        return out

    def vertex_set(self, vertices) -> VertexSet:
        return VertexSet.of(vertices, self.n)


# ---------------------------------------------------------------------------
# graph6 interchange format
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(data: bytes):
    """Decode the leading size field, returning (n, bytes consumed)."""
    if not data:
        raise ParseError("empty graph6 line")
    b0 = data[0]
    if b0 != 126:  # short form: one byte, n <= 62
        n = b0 - 63
        if not 0 <= n <= 62:
            raise ParseError(f"graph6 size byte out of range at offset 0: {b0}")
        return n, 1
    if len(data) >= 2 and data[1] == 126:
        raise ParseError("graph6 size at offset 0 exceeds supported range")
    if len(data) < 4:
        raise ParseError("truncated graph6 long-form size field")
    n = 0
    for i in (1, 2, 3):
        b = data[i]
        if not 63 <= b <= 126:
            raise ParseError(f"graph6 byte out of range at offset {i}: {b}")
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Accepts an optional ``>>graph6<<`` header. Raises ParseError naming the
    byte offset for out-of-range bytes, truncation, or trailing garbage.
    """
    line = text.rstrip("\r\n")
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    data = line.encode("ascii", errors="replace")
    n, pos = _g6_size(data)
    if n > MAX_VERTICES:
        raise ParseError(f"graph6 vertex count {n} exceeds cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos < need:
        raise ParseError(
            f"truncated graph6 data: need {need} bytes after offset {pos}, have {len(data) - pos}"
        )
    if len(data) - pos > need:
        raise ParseError(f"trailing garbage in graph6 line at offset {pos + need}")
    rows = [0] * n
    bit = 0
    for k in range(need):
        b = data[pos + k]
        if not 63 <= b <= 126:
            raise ParseError(f"graph6 byte out of range at offset {pos + k}: {b}")
        group = b - 63
        for shift in (5, 4, 3, 2, 1, 0):
            if bit >= nbits:
                if (group >> shift) & 1:
                    raise ParseError(f"nonzero padding bit at offset {pos + k}")
                continue
            if (group >> shift) & 1:
                i, j = _g6_bit_position(bit)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    m = sum(r.bit_count() for r in rows) // 2
    return Graph(n, tuple(rows), m)


def _g6_bit_position(bit: int) -> tuple[int, int]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    j = 1
    while j * (j + 1) // 2 <= bit:
        j += 1
    i = bit - j * (j - 1) // 2
    return i, j


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 line (no header)."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    else:
        out = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    group = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            group = (group << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# edge-list format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated edge-list text: first token n, then "u v" pairs.

    ``#`` starts a comment to end of line. Duplicate edges collapse; loops and
    out-of-range endpoints are rejected with the offending line number.
    """
    tokens: list[tuple[str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        for tok in body.split():
            tokens.append((tok, lineno))
    if not tokens:
        raise ParseError("edge list is empty")
    tok, lineno = tokens[0]
    try:
        n = int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: vertex count {tok!r} is not an integer") from None
    if not 0 <= n <= MAX_VERTICES:
        raise ParseError(f"line {lineno}: vertex count {n} outside 0..{MAX_VERTICES}")
    rest = tokens[1:]
    if len(rest) % 2:
        raise ParseError(f"line {rest[-1][1]}: dangling endpoint {rest[-1][0]!r}")
    rows = [0] * n
    for k in range(0, len(rest), 2):
        (tu, lu), (tv, lv) = rest[k], rest[k + 1]
        try:
            u, v = int(tu), int(tv)
        except ValueError:
            raise ParseError(f"line {lu}: bad edge token {tu!r} {tv!r}") from None
        if u == v:
            raise ParseError(f"line {lu}: loop {u} {v} not allowed")
        for w, lw in ((u, lu), (v, lv)):
            if not 0 <= w < n:
                raise ParseError(f"line {lw}: vertex {w} outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    m = sum(r.bit_count() for r in rows) // 2
    return Graph(n, tuple(rows), m)


# ---------------------------------------------------------------------------
# generators (canonical labelings)
# ---------------------------------------------------------------------------

def path(n: int) -> Graph:
    """Path v0-v1-...-v(n-1)."""
    if n < 1:
        raise ValueError("path requires n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices; path edges plus {n-1, 0}."""
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete requires n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """Star K_{1,n-1}: center v0, leaves v1..v(n-1)."""
    if n < 1:
        raise ValueError("star requires n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts {0..a-1} and {a..a+b-1}."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite requires a, b >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cocktail_party(k: int) -> Graph:
    """Cocktail party graph: K_{2k} minus the perfect matching {2i, 2i+1}."""
    if k < 2:
        raise ValueError("cocktail_party requires k >= 2")
    n = 2 * k
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if not (i // 2 == j // 2)
    ]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# vertex classes and structure queries
# ---------------------------------------------------------------------------

def vertex_classes(g: Graph) -> tuple[VertexSet, VertexSet, VertexSet]:
    """Return (pendants, supports, internals).

    Pendants have degree 1, supports are adjacent to a pendant, internals have
    degree > 1. Isolated vertices land in none of the three classes.
    """
    pendants = 0
    internals = 0
    for v in range(g.n):
        d = g.degree(v)
        if d == 1:
            pendants |= 1 << v
        elif d > 1:
            internals |= 1 << v
    supports = 0
    for v in range(g.n):
        if g.adj[v] & pendants:
            supports |= 1 << v
    return (
        VertexSet(pendants, g.n),
        VertexSet(supports, g.n),
        VertexSet(internals, g.n),
    )


def component_mask(g: Graph, start: int, within: int | None = None) -> int:
    """Bit mask of the connected component of ``start`` (restricted to ``within``)."""
    allowed = g.full_mask if within is None else within
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.adj[v]
        frontier = reach & allowed & ~seen
        seen |= frontier
    return seen


def induced_connected(g: Graph, mask: int) -> bool:
    """True when the subgraph induced by the non-empty ``mask`` is connected."""
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    return component_mask(g, start, within=mask) == mask


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return component_mask(g, 0) == g.full_mask


def connected_components(g: Graph) -> list[int]:
    """Component vertex masks, ordered by smallest member."""
    out = []
    remaining = g.full_mask
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = component_mask(g, start, within=remaining)
        out.append(comp)
        remaining &= ~comp
    return out


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    """Connected with exactly one cycle, i.e. connected and m == n."""
    return g.n >= 3 and g.m == g.n and is_connected(g)


def find_unique_cycle(g: Graph) -> tuple[int, ...]:
    """Vertices of the unique cycle of a unicyclic graph, in traversal order.

    Starts at the smallest cycle vertex and proceeds toward its smaller
    cycle neighbour. Raises ValueError on non-unicyclic input.
    """
    if not is_unicyclic(g):
        raise ValueError("find_unique_cycle requires a connected unicyclic graph")
    alive = g.full_mask
    degs = [g.degree(v) for v in range(g.n)]
    queue = [v for v in range(g.n) if degs[v] == 1]
    while queue:
        v = queue.pop()
        alive &= ~(1 << v)
        for u in iter_bits(g.adj[v] & alive):
            degs[u] -= 1
            if degs[u] == 1:
                queue.append(u)
    start = (alive & -alive).bit_length() - 1
    order = [start]
    prev = -1
    cur = start
    while True:
        nbrs = [u for u in iter_bits(g.adj[cur] & alive) if u != prev]
        nxt = min(nbrs)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def is_regular(g: Graph, r: int) -> bool:
    return all(g.degree(v) == r for v in range(g.n))


@dataclass(frozen=True)
class BlockDecomposition:
    """Maximal biconnected subgraphs (one per edge class) plus cutvertices.

    ``block_cut_adjacency[i]`` lists the cutvertices lying in ``blocks[i]``.
    Isolated vertices belong to no block.
    """

    blocks: tuple[VertexSet, ...]
    cutvertices: VertexSet
    block_cut_adjacency: tuple[tuple[int, ...], ...]


def blocks(g: Graph) -> BlockDecomposition:
    """Tarjan block decomposition; deterministic ascending-neighbour DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    edge_stack: list[tuple[int, int]] = []
    block_masks: list[int] = []
    timer = 0

    def dfs(u: int, parent: int):
        nonlocal timer
        disc[u] = low[u] = timer
        timer += 1
        children = 0
        for v in iter_bits(g.adj[u]):
            if disc[v] == -1:
                children += 1
                edge_stack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if parent != -1 or children > 1:
                        cut[u] = True
                    mask = 0
                    while True:
                        a, b = edge_stack.pop()
                        mask |= (1 << a) | (1 << b)
                        if (a, b) == (u, v):
                            break
                    block_masks.append(mask)
            elif v != parent and disc[v] < disc[u]:
                edge_stack.append((u, v))
                low[u] = min(low[u], disc[v])

    for v in range(n):
        if disc[v] == -1 and g.adj[v]:
            dfs(v, -1)

    block_masks.sort(key=lambda msk: ((msk & -msk).bit_length(), -msk.bit_count(), msk))
    cut_mask = 0
    for v in range(n):
        if cut[v]:
            cut_mask |= 1 << v
    bsets = tuple(VertexSet(msk, n) for msk in block_masks)
    bca = tuple(tuple(iter_bits(msk & cut_mask)) for msk in block_masks)
    return BlockDecomposition(bsets, VertexSet(cut_mask, n), bca)


def is_block_graph(g: Graph) -> bool:
    """True when every block induces a complete subgraph."""
    for blk in blocks(g).blocks:
        vs = blk.vertices()
        for idx, u in enumerate(vs):
            for v in vs[idx + 1:]:
                if not g.has_edge(u, v):
                    return False
    return True
