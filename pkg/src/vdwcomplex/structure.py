"""Graphs on {1..n}, chordality with certificates, maximal cliques, and
quasi-forest machinery (leaves, leaf orders, flagness)."""

from dataclasses import dataclass

from .complex_core import SimplicialComplex, mask_of, sort_key, vertices_of
from .errors import InputError


class Graph:
    """Simple undirected graph; adjacency stored as per-vertex bitmasks."""

    __slots__ = ("n", "adj")

    def __init__(self, n, adj):
        self.n = n
        self.adj = tuple(adj)  # adj[v-1] = neighbor mask of v
        for v in range(n):
            if self.adj[v] & (1 << v):
                raise InputError("self-loop at vertex %d" % (v + 1))

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError("edge (%d,%d) out of range" % (u, v))
            if u == v:
                raise InputError("self-loop at vertex %d" % u)
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, adj)

    def has_edge(self, u, v):
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def edges(self):
        out = []
        for u in range(1, self.n + 1):
            m = self.adj[u - 1] >> u  # neighbors > u
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __repr__(self):
        return "Graph(n=%d, edges=%s)" % (self.n, self.edges())


def write_graph(path, g):
    lines = ["n %d" % g.n] + ["%d %d" % e for e in g.edges()]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def read_graph(path):
    n = None
    edges = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if n is None:
                if len(parts) != 2 or parts[0] != "n":
                    raise InputError("%s:%d: expected header 'n <N>'" % (path, lineno))
                n = int(parts[1])
                continue
            if len(parts) != 2:
                raise InputError("%s:%d: expected 'u v'" % (path, lineno))
            edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise InputError("%s: missing 'n <N>' header" % path)
    return Graph.from_edges(n, edges)


def lex_bfs(g):
    """Lexicographic BFS visit order (1-based labels)."""
    n = g.n
    labels = [[] for _ in range(n)]
    visited = [False] * n
    order = []
    for step in range(n):
        best = max((v for v in range(n) if not visited[v]),
                   key=lambda v: (labels[v], -v))
        visited[best] = True
        order.append(best + 1)
        m = g.adj[best]
        v = 0
        while m:
            if m & 1 and not visited[v]:
                labels[v].append(n - step)
            m >>= 1
            v += 1
    return order


def _peo_violation(g, order):
    """Check the reversed LexBFS order as a perfect elimination ordering.

    Returns None if it verifies, else a triple (v, p, w): p and w are
    neighbors of v later in the elimination order with p, w non-adjacent.
    """
    elim = list(reversed(order))
    pos = {v: i for i, v in enumerate(elim)}
    for v in elim:
        later = [u for u in vertices_of(g.adj[v - 1]) if pos[u] > pos[v]]
        for a in range(len(later)):
            for b in range(a + 1, len(later)):
                if not g.has_edge(later[a], later[b]):
                    return (v, later[a], later[b])
    return None


def _chordless_cycle(g, v, p, w):
    """Induced cycle through v from a failing triple: v adjacent to both
    p and w, p-w non-adjacent.  A shortest p-w path avoiding N[v]\\{p,w}
    closes up with v to a chordless cycle of length >= 4."""
    banned = (g.adj[v - 1] | (1 << (v - 1))) & ~mask_of([p, w])
    prev = {p: None}
    queue = [p]
    while queue:
        nxt = []
        for u in queue:
            if u == w:
                path = []
                while u is not None:
                    path.append(u)
                    u = prev[u]
                return [v] + path
            for x in vertices_of(g.adj[u - 1] & ~banned):
                if x not in prev:
                    prev[x] = u
                    nxt.append(x)
        queue = nxt
    return None


def is_chordal(g):
    """(verdict, certificate): a perfect elimination ordering when
    chordal, otherwise an induced chordless cycle of length >= 4."""
    order = lex_bfs(g)
    bad = _peo_violation(g, order)
    if bad is None:
        return True, list(reversed(order))
    cycle = _chordless_cycle(g, *bad)
    if cycle is None:
        # the LexBFS triple did not close a cycle; scan all triples
        for v in range(1, g.n + 1):
            nb = vertices_of(g.adj[v - 1])
            for a in range(len(nb)):
                for b in range(a + 1, len(nb)):
                    if not g.has_edge(nb[a], nb[b]):
                        cycle = _chordless_cycle(g, v, nb[a], nb[b])
                        if cycle is not None:
                            return False, cycle
        raise AssertionError("PEO failed but no chordless cycle found")
    return False, cycle


def verify_peo(g, order):
    return _peo_violation(g, list(reversed(order))) is None


def verify_chordless_cycle(g, cycle):
    m = len(cycle)
    if m < 4 or len(set(cycle)) != m:
        return False
    for a in range(m):
        for b in range(a + 1, m):
            adjacent = g.has_edge(cycle[a], cycle[b])
            consecutive = (b - a == 1) or (a == 0 and b == m - 1)
            if adjacent != consecutive:
                return False
    return True


def _degeneracy_order(g):
    n = g.n
    alive = (1 << n) - 1
    order = []
    while alive:
        v = min((u for u in range(n) if alive >> u & 1),
                key=lambda u: (g.adj[u] & alive).bit_count())
        order.append(v)
        alive &= ~(1 << v)
    return order


def clique_complex(g):
    """Complex of all cliques; facets found by Bron-Kerbosch with
    pivoting over a degeneracy order."""
    n = g.n
    cliques = []

    def expand(r, p, x):
        if p == 0 and x == 0:
            cliques.append(r)
            return
        # pivot with the most neighbors in p
        pivot = max(vertices_of(p | x), key=lambda u: (g.adj[u - 1] & p).bit_count())
        for v in vertices_of(p & ~g.adj[pivot - 1]):
            bit = 1 << (v - 1)
            expand(r | bit, p & g.adj[v - 1], x & g.adj[v - 1])
            p &= ~bit
            x |= bit

    order = _degeneracy_order(g)
    p = (1 << n) - 1
    x = 0
    for v0 in order:
        bit = 1 << v0
        expand(bit, p & g.adj[v0], x & g.adj[v0])
        p &= ~bit
        x |= bit
    return SimplicialComplex(n, cliques)


def is_flag(c):
    """True iff every minimal non-face is a pair, i.e. the complex is
    the clique complex of its own 1-skeleton."""
    return all(m.bit_count() == 2 for m in c.minimal_non_faces())


def find_leaf(c):
    """Lexicographically first (leaf, branch) pair, or None.

    F is a leaf with branch G != F when H ∩ F ⊆ G ∩ F for every facet
    H != F (non-strict containment)."""
    facets = c.facets
    if len(facets) == 1:
        return facets[0], None
    for f in facets:
        others = [h & f for h in facets if h != f]
        for g_mask, inter in ((h, h & f) for h in facets if h != f):
            if all(o & ~inter == 0 for o in others):
                return f, g_mask
    return None


@dataclass(frozen=True)
class LeafOrder:
    order: tuple    # facet masks, in leaf order
    branches: tuple  # branches[i] witnesses order[i] for i >= 1; branches[0] is None

    def facet_lists(self):
        return [vertices_of(f) for f in self.order]


def leaf_order(c):
    """A leaf order of the facets found by reverse construction with
    backtracking, or None if the complex is not a quasi-forest."""
    facets = list(c.facets)
    dead = set()

    def leaves_of(subset):
        out = []
        if len(subset) == 1:
            return [(subset[0], None)]
        for f in subset:
            inters = [h & f for h in subset if h != f]
            for g_mask in subset:
                if g_mask == f:
                    continue
                gi = g_mask & f
                if all(o & ~gi == 0 for o in inters):
                    out.append((f, g_mask))
                    break
        return out

    def search(subset):
        if len(subset) == 1:
            return [subset[0]], [None]
        key = frozenset(subset)
        if key in dead:
            return None
        for f, g_mask in leaves_of(subset):
            rest = [h for h in subset if h != f]
            got = search(rest)
            if got is not None:
                order, branches = got
                return order + [f], branches + [g_mask]
        dead.add(key)
        return None

    got = search(facets)
    if got is None:
        return None
    order, branches = got
    return LeafOrder(tuple(order), tuple(branches))


def is_quasi_forest(c):
    return leaf_order(c) is not None


def free_vertices(c, f):
    """Vertices of facet f lying in no other facet."""
    if f not in c.facets:
        raise InputError("%s is not a facet" % vertices_of(f))
    covered = 0
    for h in c.facets:
        if h != f:
            covered |= h
    return f & ~covered


def verify_leaf_order(c, lo):
    """Each facet is a leaf of the subcomplex of its predecessors."""
    if sorted(lo.order, key=sort_key) != list(c.facets):
        return False
    for i in range(1, len(lo.order)):
        f = lo.order[i]
        g_mask = lo.branches[i]
        if g_mask is None or g_mask not in lo.order[:i]:
            return False
        gi = g_mask & f
        if any((h & f) & ~gi for h in lo.order[:i] if h != g_mask):
            return False
    return True
