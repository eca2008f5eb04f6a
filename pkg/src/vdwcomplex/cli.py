"""Command-line front end: generate complexes, render Betti tables,
analyze single instances, and run the verification sweep with an
optional persistent cache.

Exit codes: 0 success/agreement, 1 verification failure, 2 resource
limit, 3 rejected input.
"""

import argparse
import hashlib
import json
import os
import sys
import tempfile

from . import __version__
from .complex_core import (VdwParams, make_vdw, read_facets, vertices_of,
                           write_facets)
from .errors import InputError, SweepLimitError
from .homology import FieldSpec
from .resolution import (hochster_betti, ideal_table, has_linear_resolution,
                         render_csv, render_text, summarize, to_json)
from .classify import (ClassificationReport, classify_cell_full,
                       is_cohen_macaulay, is_gorenstein, is_level,
                       is_vertex_decomposable, reports_to_json,
                       summarize_reports, sweep_cells)
from .structure import is_chordal, is_flag, leaf_order

CACHE_ENV = "VDW_CACHE_DIR"


class ResultCache:
    """Directory of JSON files named by key hash, with a manifest.
    Writes are atomic (write-temp-then-rename)."""

    def __init__(self, root):
        self.root = root
        os.makedirs(root, exist_ok=True)
        self.manifest_path = os.path.join(root, "manifest.json")

    def _filename(self, key):
        digest = hashlib.sha256(key.encode()).hexdigest()[:24]
        return os.path.join(self.root, digest + ".json")

    def get(self, key):
        path = self._filename(key)
        if not os.path.exists(path):
            return None
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("key") != key:
            return None
        return doc["value"]

    def put(self, key, value):
        doc = {"key": key, "value": value}
        self._atomic_write(self._filename(key),
                           json.dumps(doc, indent=2, sort_keys=True))
        manifest = {}
        if os.path.exists(self.manifest_path):
            try:
                with open(self.manifest_path, encoding="utf-8") as fh:
                    manifest = json.load(fh)
            except json.JSONDecodeError:
                manifest = {}
        manifest[key] = os.path.basename(self._filename(key))
        self._atomic_write(self.manifest_path,
                           json.dumps(manifest, indent=2, sort_keys=True))

    def _atomic_write(self, path, text):
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def cache_key(n, k, field):
    return "vdw:%d:%d:%s:%s" % (n, k, field, __version__)


def _load_complex(args):
    if args.vdw is not None:
        n, k = args.vdw
        return make_vdw(VdwParams(n, k)), (n, k)
    return read_facets(args.facets), None


def _add_source_args(sub):
    src = sub.add_mutually_exclusive_group(required=True)
    src.add_argument("--vdw", nargs=2, type=int, metavar=("N", "K"),
                     help="use the van der Waerden complex vdW(N,K)")
    src.add_argument("--facets", metavar="PATH",
                     help="read a facet file (line format: 'n <N>' header, "
                          "then space-separated 1-based facets)")


def cmd_gen(args):
    c = make_vdw(VdwParams(args.n, args.k))
    if args.out:
        write_facets(args.out, c)
    else:
        print("n %d" % c.n)
        for f in c.facets:
            print(" ".join(str(v) for v in vertices_of(f)))
    print("%d facets" % len(c.facets), file=sys.stderr)
    return 0


def cmd_betti(args):
    c, _ = _load_complex(args)
    field = FieldSpec.parse(args.field)
    kwargs = {} if args.sweep_limit is None else {"sweep_limit": args.sweep_limit}
    table = hochster_betti(c, field, **kwargs)
    if args.subject == "ideal":
        table = ideal_table(table)
    if args.format == "text":
        out = render_text(table)
    elif args.format == "csv":
        out = render_csv(table)
    else:
        out = to_json(table)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0


def analyze_complex(c, field, sweep_limit=None):
    """Analysis record: non-faces, structural certificates, ring-theoretic
    verdicts, resolution summary."""
    kwargs = {} if sweep_limit is None else {"sweep_limit": sweep_limit}
    table = hochster_betti(c, field, **kwargs)
    ideal = ideal_table(table)
    mnf = c.minimal_non_faces()
    chordal, cert = is_chordal(c.one_skeleton())
    lo = leaf_order(c)
    try:
        vd = is_vertex_decomposable(c)
    except InputError:
        vd = None  # not pure
    if ideal.entries:
        linear = has_linear_resolution(ideal)
        linear_note = None
    else:
        linear = None
        linear_note = "zero ideal: no generators, no generating degree d >= 1"
    doc = {
        "n": c.n,
        "facets": [vertices_of(f) for f in c.facets],
        "field": str(field),
        "minimal_non_faces": [vertices_of(m) for m in mnf],
        "flag": is_flag(c),
        "chordal_skeleton": chordal,
        "chordal_certificate": (
            {"perfect_elimination_ordering": cert} if chordal
            else {"chordless_cycle": cert}),
        "quasi_forest": lo is not None,
        "leaf_order": (None if lo is None else {
            "facets": lo.facet_lists(),
            "branches": [None if b is None else vertices_of(b)
                         for b in lo.branches],
        }),
        "cohen_macaulay": is_cohen_macaulay(c, field),
        "vertex_decomposable": vd,
        "level": is_level(c, field, table),
        "gorenstein": is_gorenstein(c, field, table),
        "linear_resolution": linear,
        "resolution_summary": summarize(table).to_json_dict(),
        "betti_quotient": table.to_json_dict(),
        "betti_ideal": ideal.to_json_dict(),
    }
    if linear_note:
        doc["linear_resolution_note"] = linear_note
    return doc


def cmd_analyze(args):
    c, _ = _load_complex(args)
    field = FieldSpec.parse(args.field)
    doc = analyze_complex(c, field, args.sweep_limit)
    out = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0


def _report_from_cache_dict(d):
    return ClassificationReport(
        n=d["n"], k=d["k"], field=FieldSpec.parse(d["field"]),
        computed=d["computed"], predicted=d["predicted"],
        lemma_nonfaces_verified=d["lemma_nonfaces_verified"],
        zero_ideal=d["zero_ideal"])


def cmd_verify(args):
    field = FieldSpec.parse(args.field)
    cache_dir = args.cache or os.environ.get(CACHE_ENV)
    cache = ResultCache(cache_dir) if cache_dir else None
    cells = sweep_cells(args.n_max)

    reports = [None] * len(cells)
    todo = []
    for idx, (n, k) in enumerate(cells):
        if cache is not None:
            hit = cache.get(cache_key(n, k, field))
            if hit is not None:
                reports[idx] = _report_from_cache_dict(hit["report"])
                continue
        todo.append(idx)

    if todo:
        if args.jobs > 1:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                fresh = list(pool.map(_verify_worker,
                                      [(cells[i][0], cells[i][1], str(field),
                                        args.sweep_limit) for i in todo]))
        else:
            fresh = [classify_cell_full(cells[i][0], cells[i][1], field,
                                        args.sweep_limit) for i in todo]
        for idx, (rep, table) in zip(todo, fresh):
            reports[idx] = rep
            if cache is not None:
                cache.put(cache_key(rep.n, rep.k, field), {
                    "report": rep.to_json_dict(),
                    "betti_quotient": table.to_json_dict(),
                })

    out = reports_to_json(reports)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    summary = summarize_reports(reports)
    return 0 if not summary["failures"] else 1


def _verify_worker(params):
    n, k, field_text, sweep_limit = params
    return classify_cell_full(n, k, FieldSpec.parse(field_text), sweep_limit)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="vdw",
        description="Exact invariants of van der Waerden complexes: "
                    "Betti tables, Cohen-Macaulayness, levelness, "
                    "quasi-forest structure.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write vdW(n,k) as a facet file")
    g.add_argument("n", type=int)
    g.add_argument("k", type=int)
    g.add_argument("--out", metavar="PATH")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("betti", help="graded Betti table via Hochster's formula")
    _add_source_args(b)
    b.add_argument("--field", default="Q", help="Q, GF2, or GFp:<p>")
    b.add_argument("--format", choices=("text", "json", "csv"), default="text")
    b.add_argument("--subject", choices=("quotient", "ideal"), default="quotient")
    b.add_argument("--sweep-limit", type=int, default=None)
    b.add_argument("--out", metavar="PATH")
    b.set_defaults(func=cmd_betti)

    a = sub.add_parser("analyze", help="all predicates and certificates, as JSON")
    _add_source_args(a)
    a.add_argument("--field", default="Q")
    a.add_argument("--sweep-limit", type=int, default=None)
    a.add_argument("--out", metavar="PATH")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify",
                       help="sweep all 0 < k < n <= N and compare computed "
                            "predicates with the closed forms")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--field", default="Q")
    v.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    v.add_argument("--cache", metavar="DIR",
                   help="cache directory (default: $%s if set)" % CACHE_ENV)
    v.add_argument("--sweep-limit", type=int, default=None)
    v.add_argument("--out", metavar="PATH")
    v.set_defaults(func=cmd_verify)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except SweepLimitError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())


def main_exit():
    sys.exit(main())
