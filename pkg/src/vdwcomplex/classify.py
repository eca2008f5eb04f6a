"""Cohen-Macaulayness (Reisner), vertex decomposability, level and
Gorenstein checks, closed-form predictors, and the (n,k) verification
sweep."""

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .complex_core import VdwParams, lemma_nonface_predictions, make_vdw
from .errors import InputError
from .homology import FieldSpec, has_cone_vertex, reduced_betti_numbers
from .resolution import hochster_betti, ideal_table, has_linear_resolution, summarize
from .structure import is_chordal, is_flag, is_quasi_forest

PREDICATE_KEYS = ("linear_resolution", "cohen_macaulay", "vertex_decomposable",
                  "level", "gorenstein", "quasi_forest", "flag",
                  "chordal_skeleton")
CLOSED_FORM_KEYS = ("linear_resolution", "cohen_macaulay",
                    "vertex_decomposable", "level", "gorenstein")


def is_cohen_macaulay(c, field):
    """Reisner's criterion: every link (the empty face included) has
    vanishing reduced homology below its own dimension."""
    for f in c.all_faces():
        lk = c.link(f)
        if lk.facets == (0,):
            continue  # link is {∅}: dim -1, nothing below it
        if has_cone_vertex(lk):
            continue  # cones are acyclic
        d = lk.dim
        for i, h in reduced_betti_numbers(lk, field):
            if i < d and h != 0:
                return False
    return True


def is_vertex_decomposable(c, _memo=None):
    """Recursive shedding-vertex search on pure complexes, memoized on
    the exact labeled facet list."""
    if not c.is_pure():
        raise InputError("vertex decomposability needs a pure complex")
    if _memo is None:
        _memo = {}
    return _vd(c, _memo)


def _vd(c, memo):
    if len(c.facets) == 1:
        return True
    key = (c.n, c.facets)
    got = memo.get(key)
    if got is not None:
        return got
    memo[key] = False  # cycle guard; overwritten on success
    facet_set = set(c.facets)
    result = False
    support = c.vertex_support()
    for v in range(1, c.n + 1):
        if not support >> (v - 1) & 1:
            continue
        dele = c.deletion(v)
        if not all(f in facet_set for f in dele.facets):
            continue
        if not dele.is_pure():
            continue
        lk = c.link(1 << (v - 1))
        if not lk.is_pure():
            continue
        if _vd(dele, memo) and _vd(lk, memo):
            result = True
            break
    memo[key] = result
    return result


def is_level(c, field, table=None):
    """Cohen-Macaulay with the last Betti-table column concentrated in a
    single internal degree."""
    if table is None:
        table = hochster_betti(c, field)
    if not is_cohen_macaulay(c, field):
        return False
    pdim = table.projective_dimension()
    degrees = {j for (i, j) in table.entries if i == pdim}
    return len(degrees) == 1


def is_gorenstein(c, field, table=None):
    if table is None:
        table = hochster_betti(c, field)
    return is_level(c, field, table) and summarize(table).cm_type == 1


def predicted_classification(n, k):
    """Closed-form predictions for vdW(n,k).

    Linear resolution and CM/VD follow the published classifications.
    Levelness coincides with CM.  The Gorenstein locus is (5,2) together
    with k >= n-2: for k = n-1 the ideal is zero, and for k = n-2 it is
    the principal ideal (x_1 x_n), a hypersurface ring; both are
    Gorenstein even though the symmetric-Betti-table argument excludes
    every other linear-resolution cell.
    """
    params = VdwParams(n, k)  # validates 0 < k < n
    linear = k == 1 or 2 * k >= n
    cm = n <= 6 or k == 1 or 2 * k >= n
    return {
        "linear_resolution": linear,
        "cohen_macaulay": cm,
        "vertex_decomposable": cm,
        "level": cm,
        "gorenstein": (n, k) == (5, 2) or k >= n - 2,
    }


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    k: int
    field: FieldSpec
    computed: dict
    predicted: dict
    lemma_nonfaces_verified: Optional[bool]
    zero_ideal: bool

    @property
    def agreement(self):
        return all(self.computed[key] == self.predicted[key]
                   for key in CLOSED_FORM_KEYS)

    @property
    def passed(self):
        return self.agreement and self.lemma_nonfaces_verified is not False

    def disagreeing_keys(self):
        keys = [key for key in CLOSED_FORM_KEYS
                if self.computed[key] != self.predicted[key]]
        if self.lemma_nonfaces_verified is False:
            keys.append("lemma_nonfaces")
        return keys

    def to_json_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "field": str(self.field),
            "computed": self.computed,
            "predicted": self.predicted,
            "lemma_nonfaces_verified": self.lemma_nonfaces_verified,
            "zero_ideal": self.zero_ideal,
            "agreement": self.agreement,
        }


def classify_cell(n, k, field, sweep_limit=None):
    """All computed predicates plus closed-form comparison for one
    (n,k) cell."""
    report, _ = classify_cell_full(n, k, field, sweep_limit)
    return report


def classify_cell_full(n, k, field, sweep_limit=None):
    """classify_cell plus the quotient Betti table it computed."""
    params = VdwParams(n, k)
    c = make_vdw(params)
    kwargs = {} if sweep_limit is None else {"sweep_limit": sweep_limit}
    table = hochster_betti(c, field, **kwargs)
    ideal = ideal_table(table)
    zero_ideal = not ideal.entries
    computed = {
        # the zero ideal (full simplex) is counted as vacuously linear
        # here so the Theorem-1 comparison covers every cell
        "linear_resolution": True if zero_ideal else has_linear_resolution(ideal),
        "cohen_macaulay": is_cohen_macaulay(c, field),
        "vertex_decomposable": is_vertex_decomposable(c),
        "level": is_level(c, field, table),
        "gorenstein": is_gorenstein(c, field, table),
        "quasi_forest": is_quasi_forest(c),
        "flag": is_flag(c),
        "chordal_skeleton": is_chordal(c.one_skeleton())[0],
    }
    lemma = None
    if 1 < k and 2 * k < n and n >= 7:
        mnf = set(c.minimal_non_faces())
        predictions = lemma_nonface_predictions(params)
        sizes = {m.bit_count() for m in mnf}
        lemma = all(p in mnf for p in predictions) and {2, 3} <= sizes
    report = ClassificationReport(n, k, field, computed,
                                  predicted_classification(n, k), lemma,
                                  zero_ideal)
    return report, table


def _cell_worker(args):
    n, k, field_text, sweep_limit = args
    return classify_cell(n, k, FieldSpec.parse(field_text), sweep_limit)


def sweep_cells(n_max):
    return [(n, k) for n in range(2, n_max + 1) for k in range(1, n)]


def verify_range(n_max, field, jobs=1, sweep_limit=None):
    """Classify every cell 0 < k < n <= n_max and compare against the
    closed forms; reports come back ordered by (n, k)."""
    cells = sweep_cells(n_max)
    if jobs > 1:
        args = [(n, k, str(field), sweep_limit) for n, k in cells]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_cell_worker, args))
    else:
        reports = [classify_cell(n, k, field, sweep_limit) for n, k in cells]
    return reports


def summarize_reports(reports):
    failures = []
    for r in reports:
        for key in r.disagreeing_keys():
            failures.append([r.n, r.k, key])
    return {
        "cells": len(reports),
        "agreements": sum(1 for r in reports if r.passed),
        "failures": failures,
    }


def reports_to_json(reports):
    doc = {
        "reports": [r.to_json_dict() for r in reports],
        "summary": summarize_reports(reports),
    }
    return json.dumps(doc, indent=2, sort_keys=True)
