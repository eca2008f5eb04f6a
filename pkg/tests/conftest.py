import random

import pytest

from vdwcomplex.complex_core import SimplicialComplex, mask_of, vertices_of


def brute_minimal_non_faces(c):
    """Independent oracle: classify every subset of the ground set
    directly.  Exponential in n; use only for small complexes."""
    n = c.n
    is_face = {}
    for s in range(1 << n):
        is_face[s] = any(s & ~f == 0 for f in c.facets)
    out = []
    for s in range(1, 1 << n):
        if is_face[s]:
            continue
        proper_subsets_are_faces = True
        m = s
        while m:
            bit = m & -m
            if not is_face[s & ~bit]:
                proper_subsets_are_faces = False
                break
            m &= ~bit
        if proper_subsets_are_faces:
            out.append(s)
    out.sort(key=lambda m: (m.bit_count(), vertices_of(m)))
    return out


def random_small_complex(rng, max_vertices=7, max_facets=8):
    """Random complex with every ground-set vertex in some facet
    (isolated vertices are relabelled away)."""
    n = rng.randint(1, max_vertices)
    m = rng.randint(1, max_facets)
    facets = []
    for _ in range(m):
        size = rng.randint(1, n)
        facets.append(mask_of(rng.sample(range(1, n + 1), size)))
    support = 0
    for f in facets:
        support |= f
    labels = vertices_of(support)
    relabel = {old: new + 1 for new, old in enumerate(labels)}
    remapped = [mask_of(relabel[v] for v in vertices_of(f)) for f in facets]
    return SimplicialComplex(len(labels), remapped)


@pytest.fixture
def rng():
    return random.Random(20250824)
