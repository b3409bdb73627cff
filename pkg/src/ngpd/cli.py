"""Command line interface: ``ngpd <verb> [FILE] [flags]``.

Exit codes: 0 on PASS, 1 on FAIL, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from ._util import cell_key, fmt
from .acceptance import TITLES, run_suite
from .corpus import SIZE_CLASSES, generate_corpus
from .edgepath import edge_path_groupoid, vertex_group
from .groupoid import (FinGroupoid, GroupoidFunctor, equivalence_witness, nerve,
                       validate_functor, validate_groupoid)
from .io import Document, ParseError, parse_document, serialize_document, to_document
from .multisimplicial import T_power_with_quotient, total_diag, validate_multimap, validate_multisset
from .ngroupoid import (NGroupoid, homotopy_group, n_equivalence_report, objects,
                        pi0_set, unit_check_n1, unit_invariants_n2)
from .presentations import group_invariants
from .report import FAIL, PASS, Check, Report, check
from .simplicial import SimplicialSet, is_nerve_of_groupoid, pi0, segal_map, validate_sset
from .verify import check_pr_weak_equiv, segal_pi0_law, segal_report_for_P


class UsageError(Exception):
    pass


def _load(path: str) -> Document:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


def _expect(doc: Document, *kinds: str):
    if doc.kind not in kinds:
        raise UsageError(f"expected a document of kind {' or '.join(kinds)}, got {doc.kind}")
    return doc.payload


def _violations_report(name: str, report) -> Report:
    if report.ok:
        return Report(name, (Check("structure", PASS),))
    return Report(name, tuple(Check(f"{v.rule} at {v.where}", FAIL, v.witness) for v in report))


def _pi1_summary(inv) -> str:
    ab, homs = inv
    return f"abelianization {ab}; hom counts " + ", ".join(f"{n}:{c}" for n, c in homs)


# ------------------------------------------------------------------- verbs

def cmd_validate(args) -> Report:
    doc = _load(args.file)
    v = doc.payload
    if doc.kind == "sset":
        return _violations_report("validate sset", validate_sset(v))
    if doc.kind == "multisset":
        return _violations_report("validate multisset", validate_multisset(v))
    if doc.kind == "groupoid":
        return _violations_report("validate groupoid", validate_groupoid(v))
    if doc.kind == "functor":
        return _violations_report("validate functor", validate_functor(v))
    if doc.kind == "ngroupoid":
        return _violations_report(f"validate {v.n}-groupoid", v.validation.report)
    return _violations_report("validate nfunctor", validate_multimap(v.carrier_map))


def cmd_pi0(args) -> Report:
    doc = _load(args.file)
    v = _expect(doc, "sset", "multisset", "groupoid", "ngroupoid")
    if doc.kind == "groupoid":
        v = nerve(v, 1)
    if isinstance(v, SimplicialSet):
        part = pi0(v)
        classes = [(r, [c for c in part.class_of(r)]) for r in part.representatives]
    else:
        if isinstance(v, NGroupoid):
            v.require_valid()
            reps, q = pi0_set(v)
        else:
            T, q = T_power_with_quotient(v, v.arity)
            reps = T.cells[()]
        classes = [(r, sorted((c for c in q if q[c] == r), key=cell_key)) for r in reps]
    facts = [("classes", str(len(classes)))]
    facts += [(f"class {fmt(r)}", " ".join(fmt(c) for c in members)) for r, members in classes]
    return Report("pi0", (Check("computed", PASS),), (), tuple(facts))


def cmd_pi1(args) -> Report:
    doc = _load(args.file)
    v = _expect(doc, "sset", "groupoid")
    X = nerve(v, max(2, args.dim_bound or 2)) if doc.kind == "groupoid" else v
    if X.dim_bound < 2:
        raise UsageError("pi1 needs dim_bound >= 2")
    P = edge_path_groupoid(X)
    facts = []
    for r in pi0(X).representatives:
        G = vertex_group(P, r)
        facts.append((f"pi1 at {fmt(r)}", f"{len(G.generators)} generators, {len(G.relators)} relators; "
                                          + _pi1_summary(group_invariants(G))))
    return Report("pi1", (Check("computed", PASS),), ("pi1 isomorphism type beyond invariants",), tuple(facts))


def cmd_nerve(args) -> Document:
    G = _expect(_load(args.file), "groupoid")
    return to_document(nerve(G, args.dim_bound or 3), provenance="ngpd nerve")


def cmd_diag(args) -> Document:
    doc = _load(args.file)
    v = _expect(doc, "multisset", "ngroupoid")
    P = v.carrier if isinstance(v, NGroupoid) else v
    if P.arity < 1:
        raise UsageError("diag needs arity >= 1")
    return to_document(total_diag(P), provenance="ngpd diag")


def cmd_segal(args) -> Report:
    doc = _load(args.file)
    v = _expect(doc, "sset", "groupoid", "multisset", "ngroupoid")
    if doc.kind == "groupoid":
        v = nerve(v, args.dim_bound or 3)
    if isinstance(v, SimplicialSet):
        checks = []
        top = min(v.dim_bound, args.dim_bound or v.dim_bound)
        for m in range(2, top + 1):
            S = segal_map(v, m)
            w = ""
            if not S.bijective:
                w = f"unfilled spine {fmt(S.unfilled()[0])}" if S.unfilled() else \
                    f"cells {fmt(S.collisions()[0][0])} and {fmt(S.collisions()[0][1])} share a spine"
            checks.append(check(f"segal m={m} bijective", S.bijective, w, f"{len(S.source)} cells"))
        nr = is_nerve_of_groupoid(v) if v.dim_bound >= 2 else None
        if nr is not None:
            checks.append(check("nerve of a groupoid", nr.ok, "; ".join(nr.reasons[:3])))
        return Report("segal", tuple(checks))
    if isinstance(v, NGroupoid):
        return segal_report_for_P(v)
    if v.arity != 2:
        raise UsageError("segal on a multisset needs arity 2")
    return segal_pi0_law(v)


def cmd_ngpd_validate(args) -> Report:
    G = _expect(_load(args.file), "ngroupoid")
    return _violations_report(f"validate {G.n}-groupoid", G.validation.report)


def cmd_ngpd_pi(args) -> Report:
    G = _expect(_load(args.file), "ngroupoid")
    if not G.ok:
        return _violations_report(f"validate {G.n}-groupoid", G.validation.report)
    reps, _ = pi0_set(G)
    degrees = [args.degree] if args.degree is not None else list(range(1, G.n + 1))
    facts = [("pi0", str(len(reps)))]
    for x in sorted(objects(G), key=cell_key):
        for i in degrees:
            H = homotopy_group(G, x, i)
            facts.append((f"pi{i} at {fmt(x)}", f"order {H.order}, abelian {str(H.is_abelian()).lower()}"))
    return Report("ngpd-pi", (Check("computed", PASS),), (), tuple(facts))


def cmd_equiv(args) -> Report:
    doc = _load(args.file)
    F = _expect(doc, "functor", "nfunctor")
    if isinstance(F, GroupoidFunctor):
        bad = validate_functor(F)
        if not bad.ok:
            return _violations_report("equiv", bad)
        w = equivalence_witness(F)
    else:
        w = n_equivalence_report(F)
    return Report("equiv", (check("equivalence", w is None, w or ""),))


def cmd_unit_n1(args) -> Report:
    G = _expect(_load(args.file), "groupoid")
    return unit_check_n1(G, max(2, args.dim_bound or 2))


def cmd_unit_n2(args) -> Report:
    G = _expect(_load(args.file), "ngroupoid")
    if G.n != 2:
        raise UsageError("unit-n2 needs a 2-groupoid")
    if not G.ok:
        return _violations_report("validate 2-groupoid", G.validation.report)
    return unit_invariants_n2(G)


def cmd_f_decompose(args) -> Report:
    doc = _load(args.file)
    X = _expect(doc, "sset", "groupoid")
    if isinstance(X, FinGroupoid):
        X = nerve(X, max(2, args.dim_bound or 2))
    if X.dim_bound < 2:
        raise UsageError("f-decompose needs dim_bound >= 2")
    return check_pr_weak_equiv(X)


def cmd_suite(args) -> list:
    return run_suite(args.seed)


def cmd_corpus(args) -> int:
    docs = generate_corpus(args.seed, args.size_class)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, doc in enumerate(docs):
            slug = re.sub(r"[^A-Za-z0-9_.-]+", "_", doc.metadata["name"]).strip("_")
            (out / f"{i:03d}_{slug}.json").write_text(serialize_document(doc), encoding="utf-8")
    if args.format == "json":
        listing = [{"name": d.metadata["name"], "kind": d.kind} for d in docs]
        print(json.dumps(listing, sort_keys=True, indent=2))
    else:
        for d in docs:
            print(f"{d.kind:10s} {d.metadata['name']}")
        print(f"{len(docs)} documents (seed {args.seed}, size class {args.size_class})")
    return 0


VERBS = {
    "validate": (cmd_validate, "check structure maps and identities of any document"),
    "pi0": (cmd_pi0, "connected components / iterated truncation"),
    "pi1": (cmd_pi1, "edge-path vertex-group invariants per component"),
    "nerve": (cmd_nerve, "nerve of a groupoid as an sset document"),
    "diag": (cmd_diag, "diagonal of a multisimplicial set"),
    "segal": (cmd_segal, "Segal maps (sset), pi0 law (arity 2) or P-object report (n-groupoid)"),
    "ngpd-validate": (cmd_ngpd_validate, "check the n-groupoid conditions"),
    "ngpd-pi": (cmd_ngpd_pi, "pi0 and recursive homotopy groups of an n-groupoid"),
    "equiv": (cmd_equiv, "decide whether a functor or n-functor is an equivalence"),
    "unit-n1": (cmd_unit_n1, "unit G -> Pi1(N G) checks"),
    "unit-n2": (cmd_unit_n2, "pi0/pi1 comparison of a 2-groupoid with its diagonal"),
    "f-decompose": (cmd_f_decompose, "component decomposition of a simplicial set"),
    "suite": (cmd_suite, "run every acceptance criterion"),
    "corpus": (cmd_corpus, "list or write the fixture corpus"),
}
NEEDS_FILE = set(VERBS) - {"suite", "corpus"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim-bound", type=int, default=None, metavar="D")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--witness", action="store_true", help="show details of passing checks too")
    parser = argparse.ArgumentParser(prog="ngpd", description="Finite n-groupoids and simplicial sets.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")
    for name, (_, help_) in VERBS.items():
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        if name in NEEDS_FILE:
            p.add_argument("file", help="document path, or - for stdin")
        if name == "ngpd-pi":
            p.add_argument("--degree", type=int, default=None)
        if name == "corpus":
            p.add_argument("--size-class", choices=SIZE_CLASSES, default="small")
            p.add_argument("--out", default=None, help="directory to write documents into")
    return parser


def _render(reports: list, args) -> str:
    if args.format == "json":
        return json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2) if len(reports) > 1 \
            else reports[0].render_json()
    return "\n".join(r.render_text(witness=args.witness) for r in reports)


def _suite_text(reports: list, args) -> str:
    lines = []
    for k, r in enumerate(reports, 1):
        lines.append(f"criterion {k} ({TITLES[k]}): {r.verdict}")
    verdict = PASS if all(r.ok for r in reports) else FAIL
    lines.append(f"suite: {verdict}")
    lines.append("")
    lines.append("\n\n".join(r.render_text(witness=args.witness) for r in reports))
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.dim_bound is not None and args.dim_bound < 0:
        print("ngpd: error: --dim-bound must be >= 0", file=sys.stderr)
        return 2
    fn = VERBS[args.verb][0]
    try:
        result = fn(args)
    except (ParseError, UsageError, ValueError) as exc:
        print(f"ngpd {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, int):
        return result
    if isinstance(result, Document):
        sys.stdout.write(serialize_document(result))
        return 0
    reports = result if isinstance(result, list) else [result]
    if args.verb == "suite" and args.format == "text":
        print(_suite_text(reports, args))
    else:
        print(_render(reports, args))
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
