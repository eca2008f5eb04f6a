"""Graded Betti tables of Stanley-Reisner rings via Hochster's subset
sweep, plus summary invariants and the paper-style text rendering."""

import json
from dataclasses import dataclass

from .errors import InputError, SweepLimitError
from .homology import FieldSpec, has_cone_vertex, reduced_betti_numbers

DEFAULT_SWEEP_LIMIT = 22

QUOTIENT = "quotient"
IDEAL = "ideal"


@dataclass(frozen=True)
class BettiTable:
    subject: str  # QUOTIENT or IDEAL
    n: int
    field: FieldSpec
    entries: dict  # (i, j) -> positive int; zeros omitted

    def entry(self, i, j):
        return self.entries.get((i, j), 0)

    def projective_dimension(self):
        return max((i for i, _ in self.entries), default=0)

    def regularity(self):
        return max((j - i for i, j in self.entries), default=0)

    def column_total(self, i):
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def to_json_dict(self):
        return {
            "subject": self.subject,
            "n": self.n,
            "field": str(self.field),
            "entries": [{"i": i, "j": j, "value": v}
                        for (i, j), v in sorted(self.entries.items())],
        }

    @classmethod
    def from_json_dict(cls, d):
        entries = {(e["i"], e["j"]): e["value"] for e in d["entries"]}
        return cls(d["subject"], d["n"], FieldSpec.parse(d["field"]), entries)


@dataclass(frozen=True)
class ResolutionSummary:
    projective_dimension: int
    regularity: int
    cm_type: int
    generator_degrees: tuple

    def to_json_dict(self):
        return {
            "projective_dimension": self.projective_dimension,
            "regularity": self.regularity,
            "cm_type": self.cm_type,
            "generator_degrees": list(self.generator_degrees),
        }


def _induced(c, w):
    return c.induced_subcomplex(w)


def _sweep_masks(n):
    # grouped by popcount, ascending mask order inside a group
    by_count = [[] for _ in range(n + 1)]
    for w in range(1 << n):
        by_count[w.bit_count()].append(w)
    for group in by_count:
        yield from group


def hochster_betti(c, field, sweep_limit=DEFAULT_SWEEP_LIMIT,
                   euler_check=False):
    """Quotient-ring Betti table: beta_{i,j} summed over j-subsets W of
    the vertex set as dim H~_{j-i-1} of the induced subcomplex on W.

    With euler_check=True, every subcomplex visited is also tested for
    the Euler-Poincare identity (alternating face count == alternating
    homology dimensions), and the cone shortcut is disabled.
    """
    if c.n > sweep_limit:
        raise SweepLimitError(c.n, sweep_limit)
    entries = {}
    for w in _sweep_masks(c.n):
        j = w.bit_count()
        sub = _induced(c, w)
        if sub.facets == (0,):
            # only the empty face fits inside W: H~_{-1} = 1
            entries[(j, j)] = entries.get((j, j), 0) + 1
            continue
        if not euler_check and has_cone_vertex(sub):
            continue
        betti = reduced_betti_numbers(sub, field)
        if euler_check:
            _assert_euler_poincare(sub, betti)
        for d, h in betti:
            if h:
                i = j - d - 1
                entries[(i, j)] = entries.get((i, j), 0) + h
    return BettiTable(QUOTIENT, c.n, field, entries)


def _sign(i):
    return -1 if i % 2 else 1


def _assert_euler_poincare(sub, betti):
    faces = sum(_sign(i) * len(sub.faces_of_dim(i))
                for i in range(-1, sub.dim + 1))
    hom = sum(_sign(i) * h for i, h in betti)
    if faces != hom:
        raise AssertionError(
            "Euler-Poincare violation on %r: %d != %d" % (sub, faces, hom))


def hochster_euler_table(c, sweep_limit=DEFAULT_SWEEP_LIMIT):
    """Alternating sums sum_i (-1)^i beta_{i,j} per internal degree j,
    recomputed with Euler characteristics instead of homology ranks.
    Independent of the field; a cross-check for hochster_betti."""
    if c.n > sweep_limit:
        raise SweepLimitError(c.n, sweep_limit)
    out = {}
    for w in _sweep_masks(c.n):
        j = w.bit_count()
        sub = _induced(c, w)
        chi = sum(_sign(i) * len(sub.faces_of_dim(i))
                  for i in range(-1, sub.dim + 1))
        # chi = sum_d (-1)^d dim H~_d; the (i,j) entry carries sign (-1)^(j-i-1)
        out[j] = out.get(j, 0) + _sign(j - 1) * chi
    return {j: v for j, v in out.items() if v}


def alternating_sums(t):
    """sum_i (-1)^i entries(i, j) per j; must equal hochster_euler_table."""
    out = {}
    for (i, j), v in t.entries.items():
        out[j] = out.get(j, 0) + (-1) ** i * v
    return {j: v for j, v in out.items() if v}


def ideal_table(q):
    if q.subject != QUOTIENT:
        raise InputError("ideal_table expects a quotient-ring table")
    entries = {(i - 1, j): v for (i, j), v in q.entries.items() if i >= 1}
    return BettiTable(IDEAL, q.n, q.field, entries)


def has_linear_resolution(t):
    """True iff some degree d has every nonzero entry at (i, i+d)."""
    if t.subject != IDEAL:
        raise InputError("has_linear_resolution expects an ideal table")
    if not t.entries:
        raise InputError("the zero ideal has no generating degree d >= 1")
    degrees = {j - i for i, j in t.entries}
    return len(degrees) == 1


def summarize(q):
    if q.subject != QUOTIENT:
        raise InputError("summarize expects a quotient-ring table")
    pdim = q.projective_dimension()
    gen_degrees = tuple(sorted({j for (i, j) in ideal_table(q).entries if i == 0}))
    return ResolutionSummary(
        projective_dimension=pdim,
        regularity=q.regularity(),
        cm_type=q.column_total(pdim),
        generator_degrees=gen_degrees,
    )


def render_text(t):
    """Paper-layout table: header of homological degrees, a total row,
    then rows labeled by j-i with '.' for zero entries."""
    pdim = t.projective_dimension()
    cols = list(range(pdim + 1))
    if t.entries:
        rows = list(range(0, max(j - i for i, j in t.entries) + 1))
    else:
        rows = [0]
    grid = []
    grid.append([""] + [str(i) for i in cols])
    grid.append(["total:"] + [str(t.column_total(i)) for i in cols])
    for r in rows:
        line = ["%d:" % r]
        for i in cols:
            v = t.entry(i, i + r)
            line.append(str(v) if v else ".")
        grid.append(line)
    widths = [max(len(row[c]) for row in grid) for c in range(len(grid[0]))]
    lines = []
    for row in grid:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def render_csv(t):
    lines = ["i,j,value"]
    for (i, j), v in sorted(t.entries.items()):
        lines.append("%d,%d,%d" % (i, j, v))
    return "\n".join(lines)


def to_json(t):
    return json.dumps(t.to_json_dict(), indent=2, sort_keys=True)


def from_json(text):
    return BettiTable.from_json_dict(json.loads(text))
