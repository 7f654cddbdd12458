"""Command-line entry point.

Exit codes: 0 all good, 1 usage error, 2 I/O error, 3 a claim did not
come out as expected.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import catalog, hecke
from .partitions import pod2_table
from .series import SeriesError

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pod2kit", description="pod2 tables and congruence verification")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output_opts(p, formats=("json", "csv", "text"), default="text"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--output", help="write here instead of stdout")

    p = sub.add_parser("compute", help="pod2(n) for n < limit")
    p.add_argument("--limit", type=_positive, required=True)
    output_opts(p, default="csv")

    p = sub.add_parser("tau", help="tau(n) for 1 <= n < limit")
    p.add_argument("--limit", type=_positive, required=True)
    output_opts(p, default="csv")

    p = sub.add_parser("dissect", help="pod2 along the progressions a*n + b")
    p.add_argument("--modulus", type=_positive, default=3, help="a (default 3)")
    p.add_argument("--residue", type=int, help="b; all residues when omitted")
    p.add_argument("--limit", type=_positive, default=20, help="terms per progression")
    output_opts(p, default="csv")

    for name, text in (("verify", "run one claim"), ("report-all", "run the whole manifest")):
        p = sub.add_parser(name, help=text)
        if name == "verify":
            p.add_argument("--claim", required=True)
            p.add_argument("--p", type=int)
            p.add_argument("--s", type=int)
            p.add_argument("--r", type=int)
            p.add_argument("--k", type=int)
            p.add_argument("--n", type=_positive, help="progression terms / table size")
        p.add_argument("--order", type=_positive, help="override the manifest order")
        p.add_argument("--manifest", help=f"claim manifest (default: ${catalog.MANIFEST_ENV} or built-in)")
        output_opts(p, formats=("json", "text"), default="text")
    return parser


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table_text(rows, fmt, header=("n", "value")):
    if fmt == "json":
        # values as decimal strings; they outgrow native JSON numbers
        return json.dumps([{**dict(zip(header[:-1], r[:-1])), header[-1]: str(r[-1])} for r in rows]) + "\n"
    if fmt == "csv":
        return ",".join(header) + "\n" + "".join(",".join(str(x) for x in r) + "\n" for r in rows)
    width = [max(len(str(r[i])) for r in rows + [header]) for i in range(len(header))]
    lines = ["  ".join(str(h).rjust(w) for h, w in zip(header, width))]
    lines += ["  ".join(str(x).rjust(w) for x, w in zip(r, width)) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_compute(args) -> int:
    table = pod2_table(args.limit)
    _emit(_table_text([(n, v) for n, v in enumerate(table.values)], args.format), args.output)
    return EXIT_OK


def cmd_tau(args) -> int:
    if args.limit < 2:
        raise UsageError("tau needs --limit >= 2")
    tau = hecke.delta_series(args.limit)
    _emit(_table_text([(n, tau[n]) for n in range(1, tau.limit)], args.format), args.output)
    return EXIT_OK


def cmd_dissect(args) -> int:
    a = args.modulus
    residues = range(a) if args.residue is None else [args.residue]
    if any(not 0 <= b < a for b in residues):
        raise UsageError(f"--residue must lie in [0, {a})")
    table = pod2_table(a * (args.limit - 1) + a)
    if args.residue is not None:
        rows = [(n, table[a * n + args.residue]) for n in range(args.limit)]
        _emit(_table_text(rows, args.format), args.output)
    else:
        rows = [(b, n, table[a * n + b]) for b in residues for n in range(args.limit)]
        _emit(_table_text(rows, args.format, ("residue", "n", "value")), args.output)
    return EXIT_OK


def _find_entry(entries, name):
    for e in entries:
        if e["name"] == name:
            return e
    # bare verifier names run with whatever parameters the flags supply
    if name in catalog.VERIFIERS:
        for e in entries:
            if e.get("verifier") == name and e.get("expect", "pass") == "pass":
                return {**e, "name": name}
        return {"name": name, "verifier": name, "params": {}, "order": 100, "expect": "pass"}
    return None


def _render(doc, fmt):
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    lines = []
    for c in doc["claims"]:
        mark = "ok " if c["status"] == c.get("expect", "pass") else "BAD"
        mod = c["modulus"] or "exact"
        line = f"[{mark}] {c['status'].upper():4} {c['name']}  range={c['range']} mod={mod}"
        if c["counterexamples"]:
            line += f"  first counterexample n={c['counterexamples'][0][0]}"
        if c.get("expect") == "fail":
            line += "  (negative control)"
        lines.append(line)
        lines += [f"        {note}" for note in c.get("notes", [])]
    lines.append(f"elapsed {doc['meta']['elapsed_ms'] / 1000:.2f}s")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    entries = catalog.load_manifest(args.manifest)
    entry = _find_entry(entries, args.claim)
    if entry is None:
        names = ", ".join(e["name"] for e in entries)
        raise UsageError(f"unknown claim {args.claim!r}; available: {names}")
    overrides = {}
    if "verifier" in entry:
        if args.p is not None:
            overrides["p"] = args.p
        if args.k is not None:
            overrides["k"] = args.k
        only = args.s if args.s is not None else args.r
        if only is not None:
            overrides["only"] = only
    elif any(v is not None for v in (args.p, args.s, args.r, args.k)):
        raise UsageError(f"claim {args.claim!r} takes no --p/--s/--r/--k")
    try:
        doc = _run_one(entry, args.n or args.order, overrides)
    except (hecke.ParameterError, SeriesError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    _emit(_render(doc, args.format), args.output)
    c = doc["claims"][0]
    return EXIT_OK if c["status"] == "pass" else EXIT_FAILED


def _run_one(entry, order, overrides):
    t0 = time.perf_counter()
    rep = catalog.run_entry(entry, order, **overrides)
    row = rep.to_dict(entry["name"])
    row["expect"] = entry.get("expect", "pass")
    ms = round(1000 * (time.perf_counter() - t0), 3)
    return {"claims": [row], "meta": {"orders": {entry["name"]: order or entry["order"]}, "elapsed_ms": ms}}


def cmd_report_all(args) -> int:
    entries = catalog.load_manifest(args.manifest)
    doc = catalog.run_manifest(entries, args.order)
    _emit(_render(doc, args.format), args.output)
    return EXIT_OK if doc["meta"]["all_as_expected"] else EXIT_FAILED


COMMANDS = {
    "compute": cmd_compute,
    "tau": cmd_tau,
    "dissect": cmd_dissect,
    "verify": cmd_verify,
    "report-all": cmd_report_all,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"pod2kit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError) as exc:
        print(f"pod2kit: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        # malformed manifest contents
        print(f"pod2kit: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
