"""Exact-arithmetic invariants of van der Waerden complexes: Betti
tables via Hochster's formula, Cohen-Macaulay / level / Gorenstein
classification, and quasi-forest structure."""

__version__ = "0.1.0"

from .complex_core import (SimplicialComplex, VdwParams, make_vdw,
                           lemma_nonface_predictions, mask_of, vertices_of,
                           read_facets, write_facets)
from .errors import InputError, SweepLimitError
from .homology import FieldSpec, boundary_matrix, reduced_betti_numbers
from .resolution import (BettiTable, ResolutionSummary, hochster_betti,
                         ideal_table, has_linear_resolution, summarize,
                         render_text)
from .structure import (Graph, clique_complex, is_chordal, is_flag,
                        find_leaf, leaf_order, is_quasi_forest, free_vertices)
from .classify import (classify_cell, is_cohen_macaulay, is_gorenstein,
                       is_level, is_vertex_decomposable,
                       predicted_classification, verify_range)
