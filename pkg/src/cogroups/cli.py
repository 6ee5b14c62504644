"""Command-line surface: reports, theorem verification, subgroup scans.

Commands

* ``report SPEC...``: class table and co invariants per spec.
* ``verify-theorem``: run the claim suite; exit 0 iff everything holds.
* ``scan AMBIENT [--seeds FILE]``: subgroup classes of a small ambient
  group with co values and catalog fingerprint matches.

Global flags: ``--format {table,json,csv}``, ``--cap N``, ``--quiet``.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 element cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from importlib import resources

from . import __version__
from .classes import co_report, conjugacy_classes, fingerprint
from .constructions import build, parse_spec, spec_text, theorem_positives
from .errors import CapExceeded, CogroupsError, SpecError
from .group import ElementCap
from .perm import format_cycles
from .subgroups import (
    SCAN_ORDER_LIMIT,
    derived_series_solvable,
    load_seed_file,
    parse_seed_text,
    subgroup_classes,
)
from .verify import run_verification

CONVENTION_NOTE = "left-to-right composition (the left factor acts first)"

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


@dataclass(frozen=True)
class ClassRow:
    representative: str
    size: int
    element_order: int
    centralizer_order: int


@dataclass(frozen=True)
class ReportDocument:
    """Serializable per-spec report; round-trips through to_dict/from_dict."""

    spec: str
    degree: int
    order: int
    k: int
    pi_e: tuple[int, ...]
    co: int
    split_profile: tuple[tuple[int, int], ...]
    classes: tuple[ClassRow, ...]
    version: str
    convention: str

    def to_dict(self):
        return {
            "schema": 1,
            "version": self.version,
            "convention": self.convention,
            "spec": self.spec,
            "degree": self.degree,
            "order": self.order,
            "k": self.k,
            "pi_e": list(self.pi_e),
            "co": self.co,
            "split_profile": [list(p) for p in self.split_profile],
            "classes": [
                {
                    "representative": c.representative,
                    "size": c.size,
                    "element_order": c.element_order,
                    "centralizer_order": c.centralizer_order,
                }
                for c in self.classes
            ],
        }

    @classmethod
    def from_dict(cls, d):
        if d.get("schema") != 1:
            raise ValueError(f"unsupported schema: {d.get('schema')!r}")
        return cls(
            spec=d["spec"],
            degree=d["degree"],
            order=d["order"],
            k=d["k"],
            pi_e=tuple(d["pi_e"]),
            co=d["co"],
            split_profile=tuple(tuple(p) for p in d["split_profile"]),
            classes=tuple(
                ClassRow(
                    representative=c["representative"],
                    size=c["size"],
                    element_order=c["element_order"],
                    centralizer_order=c["centralizer_order"],
                )
                for c in d["classes"]
            ),
            version=d["version"],
            convention=d["convention"],
        )


def make_report(spec_str, cap=None):
    ast = parse_spec(spec_str)
    group = build(ast)
    table = conjugacy_classes(group, cap)
    rep = co_report(group, cap)
    rows = tuple(
        ClassRow(
            representative=format_cycles(c.representative),
            size=c.size,
            element_order=c.element_order,
            centralizer_order=c.centralizer_order,
        )
        for c in table.classes
    )
    return ReportDocument(
        spec=spec_text(ast),
        degree=group.degree,
        order=group.order(),
        k=rep.k,
        pi_e=rep.pi_e,
        co=rep.co,
        split_profile=rep.split_profile,
        classes=rows,
        version=__version__,
        convention=CONVENTION_NOTE,
    )


def _fmt_split(profile):
    return ";".join(f"{o}:{n}" for o, n in profile)


def render_report_table(doc, out):
    out.write(f"spec: {doc.spec}\n")
    out.write(
        f"degree {doc.degree}  order {doc.order}  k {doc.k}  "
        f"pi_e {{{', '.join(map(str, doc.pi_e))}}}  co {doc.co}\n"
    )
    if doc.split_profile:
        pretty = ", ".join(f"order {o} in {n} classes" for o, n in doc.split_profile)
        out.write(f"split orders: {pretty}\n")
    else:
        out.write("split orders: none\n")
    out.write(f"{'representative':<32}{'size':>8}{'order':>8}{'|C(x)|':>10}\n")
    for c in doc.classes:
        out.write(
            f"{c.representative:<32}{c.size:>8}{c.element_order:>8}"
            f"{c.centralizer_order:>10}\n"
        )
    out.write(f"convention: {doc.convention}\n")


REPORT_CSV_COLUMNS = ["spec", "order", "k", "pi_e", "co", "split"]


def render_reports_csv(docs, out):
    writer = csv.writer(out)
    writer.writerow(REPORT_CSV_COLUMNS)
    for doc in docs:
        writer.writerow(
            [
                doc.spec,
                doc.order,
                doc.k,
                ";".join(map(str, doc.pi_e)),
                doc.co,
                _fmt_split(doc.split_profile),
            ]
        )


def cmd_report(args, out):
    docs = []
    for s in args.spec:
        try:
            docs.append(make_report(s, args.cap))
        except (SpecError, CapExceeded) as exc:
            exc.args = (f"spec {s!r}: {exc}",)
            raise
    if args.format == "json":
        json.dump([d.to_dict() for d in docs], out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        render_reports_csv(docs, out)
    else:
        for i, doc in enumerate(docs):
            if i:
                out.write("\n")
            render_report_table(doc, out)
    return EXIT_OK


def cmd_verify_theorem(args, out):
    summary = run_verification(args.cap)
    if args.format == "json":
        json.dump(summary.to_dict(), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["claim", "expected", "computed", "pass"])
        for r in summary.records:
            writer.writerow(
                [r.claim_id, r.expected, r.computed, "pass" if r.passed else "fail"]
            )
    else:
        for r in summary.records:
            if args.quiet and r.passed:
                continue
            status = "pass" if r.passed else "FAIL"
            out.write(f"[{status}] {r.claim_id}: {r.computed}\n")
        n_pass = sum(r.passed for r in summary.records)
        out.write(
            f"{n_pass}/{len(summary.records)} claims pass "
            f"({'ok' if summary.overall_pass else 'FAILURES'})\n"
        )
    return EXIT_OK if summary.overall_pass else EXIT_VERIFY_FAIL


_PACKAGED_SEEDS = {"S4", "S5", "S6", "S7", "A4", "A5", "A6"}


def _resolve_seeds(ambient_text, seeds_path, ambient):
    if seeds_path is not None:
        return load_seed_file(seeds_path, ambient)
    if ambient_text in _PACKAGED_SEEDS:
        text = (
            resources.files("cogroups.data")
            .joinpath(f"seeds/{ambient_text}.seeds")
            .read_text()
        )
        return parse_seed_text(text, ambient)
    if derived_series_solvable(ambient):
        return []  # the trivial seed suffices for a solvable ambient
    raise SpecError(
        f"no packaged perfect seeds for {ambient_text!r}; pass --seeds FILE"
    )


def cmd_scan(args, out):
    ast = parse_spec(args.ambient)
    ambient_text = spec_text(ast)
    ambient = build(ast)
    if ambient.order() > SCAN_ORDER_LIMIT:
        raise CapExceeded(ambient.order(), SCAN_ORDER_LIMIT)
    seeds = _resolve_seeds(ambient_text, args.seeds, ambient)
    result = subgroup_classes(ambient, seeds, cap=args.cap)
    catalog_fps = [
        (entry.label, fingerprint(build(entry.spec), args.cap))
        for entry in theorem_positives()
    ]
    rows = []
    for entry in result.entries:
        rep = co_report(entry.group, args.cap)
        fp = fingerprint(entry.group, args.cap)
        match = next((label for label, f in catalog_fps if f == fp), "-")
        rows.append(
            {
                "ambient": ambient_text,
                "order": entry.group.order(),
                "class_size": entry.class_size,
                "co": rep.co,
                "split": _fmt_split(rep.split_profile),
                "match": match,
            }
        )
    if args.format == "json":
        json.dump(
            {
                "schema": 1,
                "version": __version__,
                "ambient": ambient_text,
                "ambient_order": result.ambient_order,
                "n_classes": result.n_classes,
                "total_subgroups": result.total_subgroups(),
                "classes": rows,
            },
            out,
            indent=2,
        )
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["ambient", "order", "class_size", "co", "split", "match"])
        for r in rows:
            writer.writerow(
                [r["ambient"], r["order"], r["class_size"], r["co"], r["split"], r["match"]]
            )
    else:
        out.write(
            f"subgroup classes of {ambient_text} "
            f"(order {result.ambient_order}): {result.n_classes} classes, "
            f"{result.total_subgroups()} subgroups\n"
        )
        out.write(f"{'order':>8}{'classsz':>9}{'co':>5}  {'split':<12}{'match'}\n")
        for r in rows:
            out.write(
                f"{r['order']:>8}{r['class_size']:>9}{r['co']:>5}  "
                f"{r['split'] or '-':<12}{r['match']}\n"
            )
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cogroups",
        description="conjugacy-class vs element-order reports for permutation groups",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default="table",
        help="output format (default: table)",
    )
    common.add_argument(
        "--cap",
        type=int,
        default=None,
        metavar="N",
        help="element cap override (default 200000)",
    )
    common.add_argument(
        "--quiet", action="store_true", help="suppress passing-claim lines"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_report = sub.add_parser(
        "report", parents=[common], help="co report and class table per spec"
    )
    p_report.add_argument("spec", nargs="+", help="group spec text, e.g. 'A5'")
    sub.add_parser(
        "verify-theorem", parents=[common], help="run the verification claim suite"
    )
    p_scan = sub.add_parser(
        "scan", parents=[common], help="subgroup-class scan of an ambient group"
    )
    p_scan.add_argument("ambient", help="ambient group spec (order <= 5040)")
    p_scan.add_argument(
        "--seeds", default=None, metavar="FILE", help="perfect-seed file"
    )
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap is not None:
        try:
            args.cap = ElementCap(args.cap)
        except ValueError as exc:
            print(f"cogroups: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        if args.command == "report":
            return cmd_report(args, out)
        if args.command == "verify-theorem":
            return cmd_verify_theorem(args, out)
        if args.command == "scan":
            return cmd_scan(args, out)
        raise RuntimeError(f"unknown command {args.command!r}")
    except SpecError as exc:
        print(f"cogroups: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"cogroups: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cogroups: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CogroupsError as exc:
        print(f"cogroups: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
