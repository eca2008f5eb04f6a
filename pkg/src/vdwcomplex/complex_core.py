"""Simplicial complexes on {1..n} with bitmask vertex sets, and the
van der Waerden complex builder.

A vertex set is an int whose bit (v-1) is set for vertex v.  All public
I/O uses 1-based vertex labels.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError


def mask_of(vertices):
    """Bitmask for an iterable of 1-based vertex labels."""
    m = 0
    for v in vertices:
        if v < 1:
            raise InputError("vertex labels are 1-based, got %r" % (v,))
        m |= 1 << (v - 1)
    return m


def vertices_of(mask):
    """Sorted 1-based vertex labels of a bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def sort_key(mask):
    # (cardinality, lexicographic on the 1-based vertex list)
    return (mask.bit_count(), vertices_of(mask))


def _maximalize(masks):
    """Drop masks contained in another mask; dedup; sort."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    keep = []
    for m in uniq:
        if not any(m & ~k == 0 for k in keep):
            keep.append(m)
    keep.sort(key=sort_key)
    return tuple(keep)


class SimplicialComplex:
    """Immutable complex given by its facet list.

    Facets are deduplicated and maximalized at construction.  The empty
    complex {∅} is represented by the single facet 0; an empty facet
    *list* is rejected.
    """

    __slots__ = ("n", "facets")

    def __init__(self, n, facets):
        if n < 0:
            raise InputError("ground set size must be nonnegative")
        facets = list(facets)
        if not facets:
            raise InputError("a complex needs at least one facet (use [0] for {∅})")
        full = (1 << n) - 1
        for f in facets:
            if f & ~full:
                raise InputError(
                    "facet %s exceeds ground set [1,%d]" % (vertices_of(f), n))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "facets", _maximalize(facets))

    def __setattr__(self, *a):
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.n == other.n and self.facets == other.facets)

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        return "SimplicialComplex(n=%d, facets=%s)" % (
            self.n, [vertices_of(f) for f in self.facets])

    @classmethod
    def from_vertex_lists(cls, n, facet_lists):
        return cls(n, [mask_of(f) for f in facet_lists])

    @property
    def dim(self):
        return max(f.bit_count() for f in self.facets) - 1

    def is_pure(self):
        c = self.facets[0].bit_count()
        return all(f.bit_count() == c for f in self.facets)

    def vertex_support(self):
        """Mask of vertices appearing in some facet."""
        m = 0
        for f in self.facets:
            m |= f
        return m

    def is_face(self, s):
        if s & ~((1 << self.n) - 1):
            raise InputError("vertex out of range in %s" % vertices_of(s))
        return any(s & ~f == 0 for f in self.facets)

    def faces_of_dim(self, i):
        """All i-faces as sorted masks; i = -1 gives [0]."""
        if i < -1 or i > self.dim:
            return []
        if i == -1:
            return [0]
        size = i + 1
        seen = set()
        for f in self.facets:
            vs = vertices_of(f)
            if len(vs) < size:
                continue
            for comb in combinations(vs, size):
                seen.add(mask_of(comb))
        return sorted(seen, key=sort_key)

    def all_faces(self):
        """Every face including ∅, sorted by (size, lex)."""
        out = []
        for i in range(-1, self.dim + 1):
            out.extend(self.faces_of_dim(i))
        return out

    def f_vector(self):
        """Counts (f_{-1}, f_0, ..., f_dim)."""
        return tuple(len(self.faces_of_dim(i)) for i in range(-1, self.dim + 1))

    def minimal_non_faces(self, max_size=None):
        """Inclusion-minimal non-faces, sorted by (size, lex).

        A candidate containing no smaller minimal non-face has all proper
        subsets as faces, so the superset-pruned scan is exact.  Sizes
        above dim+2 cannot occur (any such set has a non-face subset of
        size dim+2), which bounds the scan.
        """
        cap = self.n if max_size is None else min(max_size, self.n)
        cap = min(cap, self.dim + 2)
        support = vertices_of((1 << self.n) - 1)
        found = []
        for size in range(1, cap + 1):
            for comb in combinations(support, size):
                s = mask_of(comb)
                if any(m & ~s == 0 for m in found):
                    continue
                if not self.is_face(s):
                    found.append(s)
        found.sort(key=sort_key)
        return found

    def link(self, f):
        if not self.is_face(f):
            raise InputError("link of a non-face %s" % vertices_of(f))
        traces = [g & ~f for g in self.facets if f & ~g == 0]
        return SimplicialComplex(self.n, traces)

    def deletion(self, v):
        if not 1 <= v <= self.n:
            raise InputError("vertex %d out of range" % v)
        bit = 1 << (v - 1)
        rem = [f & ~bit for f in self.facets]
        return SimplicialComplex(self.n, rem)

    def induced_subcomplex(self, w):
        if w & ~((1 << self.n) - 1):
            raise InputError("vertex out of range in %s" % vertices_of(w))
        traces = [f & w for f in self.facets]
        return SimplicialComplex(self.n, traces)

    def one_skeleton(self):
        from .structure import Graph
        edges = []
        for f in self.facets:
            vs = vertices_of(f)
            edges.extend(combinations(vs, 2))
        return Graph.from_edges(self.n, edges)


@dataclass(frozen=True)
class VdwParams:
    """Parameters (n, k) of a van der Waerden complex."""

    n: int
    k: int

    def __post_init__(self):
        if not (0 < self.k < self.n):
            raise InputError("require 0 < k < n, got n=%d k=%d" % (self.n, self.k))

    @property
    def d(self):
        # largest step count d with 1 + k*d <= n
        return (self.n - 1) // self.k


def make_vdw(params):
    """The complex whose facets are all arithmetic sequences
    {a, a+j, ..., a+kj} inside [1, n]; length k counts steps."""
    n, k = params.n, params.k
    facets = []
    j = 1
    while 1 + k * j <= n:
        for a in range(1, n - k * j + 1):
            facets.append(mask_of(a + i * j for i in range(k + 1)))
        j += 1
    return SimplicialComplex(n, facets)


def vdw_facet_count(params):
    """|{(a, j) : a >= 1, j >= 1, a + kj <= n}|."""
    n, k = params.n, params.k
    return sum(n - k * j for j in range(1, (n - 1) // k + 1))


def lemma_nonface_predictions(params):
    """The two predicted minimal non-faces (one pair, one triple) of
    vdW(n,k) in the regime 1 < k < n/2, n >= 7.

    The pair is {1, kd}.  The triple depends on how the maximal step d
    relates to k: {1, 1+k(d-1), 1+kd} when d does not divide k;
    {1, 1+(k-1)(d-1), 1+(k-1)d} when d | k and d < k;
    {1, 1+(k-2)d, 1+(k-1)(d-1)} when d = k.
    """
    n, k = params.n, params.k
    if not (1 < k and 2 * k < n and n >= 7):
        raise InputError(
            "predictions require 1 < k < n/2 and n >= 7, got n=%d k=%d" % (n, k))
    d = params.d
    pair = mask_of([1, k * d])
    if k % d != 0:
        triple = mask_of([1, 1 + k * (d - 1), 1 + k * d])
    elif d < k:
        triple = mask_of([1, 1 + (k - 1) * (d - 1), 1 + (k - 1) * d])
    else:  # d == k
        triple = mask_of([1, 1 + (k - 2) * d, 1 + (k - 1) * (d - 1)])
    return [pair, triple]


def write_facets(path, c):
    """Line-oriented facet file: `n <N>` then one facet per line."""
    lines = ["n %d" % c.n]
    for f in c.facets:
        lines.append(" ".join(str(v) for v in vertices_of(f)))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def read_facets(path):
    n = None
    facets = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if n is None:
                parts = line.split()
                if len(parts) != 2 or parts[0] != "n":
                    raise InputError("%s:%d: expected header 'n <N>'" % (path, lineno))
                try:
                    n = int(parts[1])
                except ValueError:
                    raise InputError("%s:%d: bad ground set size" % (path, lineno))
                continue
            try:
                vs = [int(t) for t in line.split()]
            except ValueError:
                raise InputError("%s:%d: non-integer vertex label" % (path, lineno))
            if any(v < 1 or v > n for v in vs):
                raise InputError("%s:%d: vertex out of [1,%d]" % (path, lineno, n))
            facets.append(mask_of(vs))
    if n is None:
        raise InputError("%s: missing 'n <N>' header" % path)
    return SimplicialComplex(n, facets)
