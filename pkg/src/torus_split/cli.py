"""Command-line driver: ``torus-split <command> ...``.

Exit codes: 0 split / ok, 1 non-split / rejected, 2 invalid input,
3 budget exceeded, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import gf
from .bweyl import CycleType, centralizer, check_rank, enumerate_types, standard_rep
from .errors import (BudgetExceeded, ClauseNotApplicable, ConstructionRelationFailed,
                     GeneratorOutsideNormalizer, NotSplitByClassification, ObstructionFailed,
                     TorusSplitError)
from .normalizer import build_normalizer, normalize_kind
from .sympmat import MonomialMatrix, SympMatrix
from .torus import make_torus
from .split import (brute_force_split, check_relations, classify, construct_complement,
                    obstruction_check, verify_complement)
from .split.verdict import ComplementCertificate

EXIT_OK, EXIT_NONSPLIT, EXIT_INVALID, EXIT_BUDGET, EXIT_INCONSISTENT = 0, 1, 2, 3, 4

ATLAS_HEADER = "# torus-split-atlas v1"
ATLAS_COLUMNS = ["n", "q", "type", "group", "classifier", "rule", "constructive", "oracle", "agree"]


class UsageError(Exception):
    """Bad command-line input (exit code 2)."""


def _type(text: str, n: int | None = None) -> CycleType:
    t = CycleType.parse(text)
    if n is not None:
        check_rank(t, n)
    return t


def _prime_power(q: int) -> int:
    try:
        gf.prime_power(q)
    except ValueError as exc:
        raise UsageError(f"q={q} is not a prime power") from exc
    return q


def _cell(args):
    t = _type(args.type, args.n)
    q = _prime_power(args.q)
    kind = normalize_kind(args.group)
    return t, q, kind


# certificates

def certificate_to_json(cert: ComplementCertificate, n: int, q: int, t: CycleType, verdict) -> dict:
    return {
        "verdict": verdict.label(),
        "rule": verdict.rule,
        "n": n,
        "q": q,
        "type": str(t),
        "group": cert.kind,
        "names": list(cert.names),
        "generators": [g.to_json() for g in cert.generators],
        "relations": [{"word": w, "scalar": "+1" if s == 1 else "-1"} for w, s in cert.relations_checked],
    }


def certificate_from_json(data: dict):
    try:
        n, q = int(data["n"]), int(data["q"])
        t = _type(data["type"], n)
        kind = normalize_kind(data["group"])
        gens = [SympMatrix.from_json(g) for g in data["generators"]]
        names = list(data.get("names") or [f"g{i + 1}" for i in range(len(gens))])
        rels = []
        for r in data.get("relations", []):
            scalar = {"+1": 1, "-1": -1}[r["scalar"]]
            rels.append((str(r["word"]), scalar))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed certificate: {exc}") from exc
    if len(names) != len(gens):
        raise UsageError("malformed certificate: names and generators differ in length")
    _prime_power(q)
    cert = ComplementCertificate(gens, rels, 0, False, data.get("rule", ""), names, kind)
    return n, q, t, kind, cert


# commands

def cmd_types(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    if args.q is not None:
        _prime_power(args.q)
    for t in enumerate_types(args.n):
        cw = len(centralizer(standard_rep(t)))
        if args.q is None:
            print(f"{t}\t|C_W(w)|={cw}", file=out)
        else:
            spec = make_torus(args.n, args.q, t)
            print(f"{t}\t|T|={spec.order}\t|C_W(w)|={cw}", file=out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    t, q, kind = _cell(args)
    v = classify(args.n, q, t, kind)
    print(f"{v.label()}\trule {v.rule}\t{v.citation}", file=out)
    return EXIT_OK if v.splits else EXIT_NONSPLIT


def cmd_construct(args, out) -> int:
    t, q, kind = _cell(args)
    spec = make_torus(args.n, q, t)
    v = classify(args.n, q, t, kind)
    try:
        cert = construct_complement(spec, kind)
    except NotSplitByClassification:
        print(f"non-split\trule {v.rule}\tno complement to construct", file=out)
        return EXIT_NONSPLIT
    text = json.dumps(certificate_to_json(cert, args.n, q, t, v), indent=1, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"split\trule {v.rule}\t{len(cert.generators)} generators written to {args.out}", file=out)
    else:
        print(text, file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        with open(args.cert) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("malformed certificate: expected a JSON object")
    n, q, t, kind, cert = certificate_from_json(data)
    spec = make_torus(n, q, t)
    group = build_normalizer(spec, kind)
    if any(g.field is not group.field for g in cert.generators):
        print("rejected\tgenerators are not over the ambient field", file=out)
        return EXIT_NONSPLIT
    try:
        mats = {name: MonomialMatrix.from_dense(g) for name, g in zip(cert.names, cert.generators)}
    except ValueError:
        print("rejected\ta generator is not monomial", file=out)
        return EXIT_NONSPLIT
    try:
        failed = check_relations(mats, cert.relations_checked)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"malformed relation: {exc}") from exc
    try:
        ok = verify_complement(group, cert)
    except GeneratorOutsideNormalizer as exc:
        print(f"rejected\t{exc}", file=out)
        return EXIT_NONSPLIT
    if failed:
        print(f"rejected\t{len(failed)} relations fail: {failed}", file=out)
        return EXIT_NONSPLIT
    if not ok:
        print("rejected\tgenerated subgroup is not a complement", file=out)
        return EXIT_NONSPLIT
    print(f"verified\t{t} q={q} {kind}: complement of order {group.quotient_order}", file=out)
    return EXIT_OK


def cmd_bruteforce(args, out) -> int:
    t, q, kind = _cell(args)
    group = build_normalizer(make_torus(args.n, q, t), kind)
    res = brute_force_split(group)
    st = res.stats
    stats = (f"generators={len(st.generators)} lifts={st.lifts_total} "
             f"kept={st.lifts_kept} nodes={st.nodes}")
    if res.splits:
        print(f"Some\tcomplement of order {res.certificate.complement_order}\t{stats}", file=out)
        return EXIT_OK
    print(f"None\tno complement\t{stats}", file=out)
    return EXIT_NONSPLIT


# atlas

def atlas_cell(n: int, q: int, t: CycleType, kind: str, brute_limit: int | None = None) -> dict:
    """One atlas row: classifier, construction/obstruction, and brute-force oracle."""
    start = time.perf_counter()
    spec = make_torus(n, q, t)
    v = classify(n, q, t, kind)
    verdicts = [v.splits]
    if v.splits:
        group = build_normalizer(spec, kind)
        ok = verify_complement(group, construct_complement(spec, kind))
        constructive = "verified" if ok else "rejected"
        verdicts.append(ok)
    else:
        group = build_normalizer(spec, kind)
        try:
            w = obstruction_check(spec, kind, group=build_normalizer(spec, "Sp"))
            constructive = f"obstruction {w.clause}" if w.exhaustive else f"partial {w.clause}"
            verdicts.append(False if w.exhaustive else None)
        except ClauseNotApplicable:
            constructive = "-"
        except ObstructionFailed:
            constructive = "obstruction failed"
            verdicts.append(True)
    try:
        res = brute_force_split(group, brute_limit)
        oracle = "split" if res.splits else "non-split"
        verdicts.append(res.splits)
    except BudgetExceeded:
        oracle = "skipped"
    populated = [x for x in verdicts if x is not None]
    agree = all(x == populated[0] for x in populated)
    return {
        "n": n, "q": q, "type": str(t), "group": kind,
        "classifier": v.label(), "rule": v.rule,
        "constructive": constructive, "oracle": oracle,
        "agree": "yes" if agree else "NO",
        "seconds": f"{time.perf_counter() - start:.3f}",
    }


def _atlas_job(job):
    return atlas_cell(*job)


def atlas_rows(nmax: int, qlist, kind: str, jobs: int = 1) -> list:
    cells = [(n, q, t, kind) for n in range(1, nmax + 1) for q in qlist for t in enumerate_types(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_atlas_job, cells))
    return [_atlas_job(c) for c in cells]


def format_atlas(rows, timings: bool = False) -> str:
    cols = ATLAS_COLUMNS + (["seconds"] if timings else [])
    buf = io.StringIO()
    buf.write(ATLAS_HEADER + "\n")
    w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_atlas(args, out) -> int:
    if args.nmax < 1:
        raise UsageError("--nmax must be positive")
    try:
        qlist = [int(x) for x in args.qlist.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --qlist {args.qlist!r}") from exc
    if not qlist:
        raise UsageError("--qlist is empty")
    for q in qlist:
        _prime_power(q)
    kind = normalize_kind(args.group)
    rows = atlas_rows(args.nmax, qlist, kind, max(1, args.jobs))
    text = format_atlas(rows, args.timings)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    bad = [r for r in rows if r["agree"] != "yes"]
    if bad:
        print(f"{len(bad)} of {len(rows)} cells disagree", file=sys.stderr)
        return EXIT_INCONSISTENT
    if args.out:
        print(f"{len(rows)} cells, all agree -> {args.out}", file=out)
    return EXIT_OK


# entry point

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torus-split",
        description="Maximal tori of Sp(2n,q) / PSp(2n,q) and the splitting of their normalizers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("types", help="list the signed cycle types of rank n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_types)

    def cell(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--type", required=True, help='cycle type such as "(2-)(1)"')
        p.add_argument("--group", default="psp", choices=["sp", "psp", "Sp", "PSp"])

    p = sub.add_parser("classify", help="rule-based verdict (exit 0 split, 1 non-split)")
    cell(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="explicit complement as certificate JSON")
    cell(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-check a certificate in a freshly built normalizer")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bruteforce", help="exhaustive search for a complement")
    cell(p)
    p.set_defaults(func=cmd_bruteforce)

    p = sub.add_parser("atlas", help="CSV table over ranks, fields and types")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--qlist", required=True, help="comma-separated prime powers")
    p.add_argument("--group", default="psp", choices=["sp", "psp", "Sp", "PSp"])
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="add a seconds column")
    p.set_defaults(func=cmd_atlas)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ConstructionRelationFailed, ObstructionFailed) as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except TorusSplitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
