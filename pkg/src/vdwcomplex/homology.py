"""Reduced simplicial homology over Q or GF(p), by exact boundary-matrix
ranks on the augmented chain complex."""

from dataclasses import dataclass
from typing import Optional

from . import _gf2
from .complex_core import vertices_of
from .errors import InputError


def _is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: rationals (p=None) or GF(p)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise InputError("GF(p) needs a prime, got %r" % (self.p,))

    @classmethod
    def rationals(cls):
        return cls(None)

    @classmethod
    def prime(cls, p):
        return cls(p)

    @classmethod
    def parse(cls, text):
        t = text.strip()
        if t in ("Q", "QQ"):
            return cls(None)
        if t in ("GF2", "GF(2)"):
            return cls(2)
        if t.startswith("GFp:"):
            try:
                return cls(int(t[4:]))
            except ValueError:
                raise InputError("bad field spec %r" % text)
        if t.startswith("GF(") and t.endswith(")"):
            try:
                return cls(int(t[3:-1]))
            except ValueError:
                raise InputError("bad field spec %r" % text)
        raise InputError("unknown field %r (use Q, GF2, or GFp:<p>)" % text)

    def __str__(self):
        return "Q" if self.p is None else "GF(%d)" % self.p


@dataclass(frozen=True)
class BoundaryMatrix:
    """∂_i of the augmented chain complex: rows are (i-1)-faces, columns
    i-faces, entries (-1)^pos for removal of the pos-th smallest vertex."""

    i: int
    row_faces: tuple
    col_faces: tuple
    entries: tuple  # tuple of rows, each a tuple of ints in {-1, 0, 1}

    @property
    def shape(self):
        return (len(self.row_faces), len(self.col_faces))


def boundary_matrix(c, i, field=None):
    """∂_i for a complex; out-of-range i gives an empty matrix."""
    rows = c.faces_of_dim(i - 1)
    cols = c.faces_of_dim(i)
    idx = {f: r for r, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for ci, f in enumerate(cols):
        vs = vertices_of(f)
        for pos, v in enumerate(vs):
            g = f & ~(1 << (v - 1))
            mat[idx[g]][ci] = -1 if pos % 2 else 1
    return BoundaryMatrix(i, tuple(rows), tuple(cols),
                          tuple(tuple(r) for r in mat))


def rank_q(rows):
    """Exact rank over Q of an integer matrix, by fraction-free
    (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, nr):
            mr = m[r]
            factor = mr[col]
            for cc in range(col + 1, nc):
                mr[cc] = (pv * mr[cc] - factor * m[rank][cc]) // prev
            mr[col] = 0
        prev = pv
        rank += 1
        if rank == nr:
            break
    return rank


def rank_gfp(rows, p):
    """Rank over GF(p) by modular Gaussian elimination."""
    m = [[x % p for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(nr):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


def _boundary_rank(c, i, field):
    """rank ∂_i without materializing signs when the field is GF(2)."""
    rows = c.faces_of_dim(i - 1)
    cols = c.faces_of_dim(i)
    if not rows or not cols:
        return 0
    if field.p == 2:
        idx = {f: r for r, f in enumerate(rows)}
        row_masks = [0] * len(rows)
        for ci, f in enumerate(cols):
            vs = vertices_of(f)
            for v in vs:
                g = f & ~(1 << (v - 1))
                row_masks[idx[g]] |= 1 << ci
        return _gf2.gf2_rank_masks(row_masks, len(cols))
    bm = boundary_matrix(c, i, field)
    if field.p is None:
        return rank_q(bm.entries)
    return rank_gfp(bm.entries, field.p)


def reduced_betti_numbers(c, field):
    """[(i, dim H~_i)] for i = -1 .. dim, zero entries included."""
    d = c.dim
    fcounts = [len(c.faces_of_dim(i)) for i in range(-1, d + 1)]
    # ranks[j] = rank ∂_j for j = 0..dim, plus 0 for ∂_{dim+1}
    ranks = [_boundary_rank(c, j, field) for j in range(0, d + 1)] + [0]
    out = []
    for i in range(-1, d + 1):
        fi = fcounts[i + 1]
        r_down = ranks[i] if i >= 0 else 0  # ∂_{-1} is the zero map
        r_up = ranks[i + 1]
        out.append((i, fi - r_down - r_up))
    return out


def is_acyclic(c, field):
    return all(h == 0 for _, h in reduced_betti_numbers(c, field))


def has_cone_vertex(c):
    """A vertex in every facet makes the complex a cone, hence acyclic."""
    m = c.facets[0]
    for f in c.facets[1:]:
        m &= f
    return m != 0
