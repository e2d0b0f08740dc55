"""Command-line front end: ``hopfgalois {catalog,verify,characters,report}``.

Exit status is 0 when no check failed, 1 when some check failed and 2 for
usage or load errors.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog, suites
from .hopf import CharacterError, cyclic_order
from .groups import character_listing
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# entries bundled into the catalog-wide report
REPORT_ENTRIES = [
    ("taft", {"N": 2}), ("taft", {"N": 3}), ("taft", {"N": 4}),
    ("podles-monopole", {}), ("sl2-nff", {}), ("group", {}), ("self-galois", {"N": 2}),
]


class UsageError(Exception):
    pass


def _params(items) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"--param expects name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _load(name, params, degree):
    try:
        return catalog.load(name, params, degree)
    except catalog.CatalogError as e:
        raise UsageError(str(e)) from None


def _emit(rep: Report, fmt: str, out):
    out.write((rep.to_json() if fmt == "json" else rep.to_text()) + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_catalog(args, out):
    if args.action == "list":
        for name, desc in catalog.list_entries():
            out.write(f"{name:16} {desc}\n")
        return EXIT_OK
    if not args.name:
        raise UsageError("catalog export needs an entry name")
    try:
        out.write(catalog.export(args.name, _params(args.param)) + "\n")
    except catalog.CatalogError as e:
        raise UsageError(str(e)) from None
    return EXIT_OK


def cmd_verify(args, out):
    entry = _load(args.entry, _params(args.param), args.degree)
    try:
        rep = suites.run(entry, args.suite, entry.D)
    except suites.SuiteError as e:
        raise UsageError(str(e)) from None
    return _emit(rep, args.format, out)


def characters_report(entry) -> tuple[Report, list, list]:
    rep = Report("characters", entry.name, entry.D)
    chars, table = character_listing(entry)
    basis = entry.H.finite_basis()
    unit = next(i for i, c in enumerate(chars) if all(c.value_word(w) == entry.hs.eps_word(w) for w in basis))
    orders = cyclic_order(table, unit)
    rep.add("characters/count", "Char(H)", len(chars) > 0, [f"{len(chars)} characters"])
    for i, c in enumerate(chars):
        rep.add(f"characters/{i}", "Char(H)", True, [c.name, f"order {orders[i]}"])
    rep.add("characters/closed", "convolution", True, [" ".join(map(str, row)) for row in table])
    cyclic = any(orders[i] == len(chars) for i in orders)
    rep.add("characters/cyclic", "Z_N", "pass" if cyclic else "skipped",
            [f"element orders {sorted(orders.values())}"])
    return rep, chars, table


def cmd_characters(args, out):
    entry = _load(args.entry, _params(args.param), args.degree)
    try:
        rep, chars, table = characters_report(entry)
    except CharacterError as e:
        raise UsageError(str(e)) from None
    if args.format == "json":
        return _emit(rep, "json", out)
    out.write(f"{len(chars)} characters of {entry.H.name or entry.name}\n")
    for i, c in enumerate(chars):
        out.write(f"  [{i}] {c.name}\n")
    out.write("convolution table:\n")
    for i, row in enumerate(table):
        out.write(f"  [{i}] " + " ".join(str(x) for x in row) + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_report(args, out):
    if args.entry:
        targets = [(args.entry, _params(args.param))]
    else:
        if args.param:
            raise UsageError("--param needs --entry")
        targets = REPORT_ENTRIES
    rep = Report(args.suite, "catalog" if not args.entry else args.entry, args.degree)
    for name, params in targets:
        entry = _load(name, params, args.degree)
        label = name + "".join(f"[{k}={v}]" for k, v in sorted(params.items()))
        try:
            sub = suites.run(entry, args.suite, entry.D)
        except suites.SuiteError as e:
            raise UsageError(str(e)) from None
        rep.extend(sub, f"{label}/")
    return _emit(rep, args.format, out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfgalois", description="Exact checks for Hopf-Galois extensions, "
                                "their Ehresmann-Schauenburg bialgebroids, gauge groups and bisections.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="list or export catalog entries")
    c.add_argument("action", choices=["list", "export"])
    c.add_argument("name", nargs="?")
    c.add_argument("--param", action="append", metavar="NAME=VALUE")
    c.set_defaults(fn=cmd_catalog)

    v = sub.add_parser("verify", help="run a verification suite on an entry")
    v.add_argument("entry", help="catalog name or presentation file")
    v.add_argument("--suite", default="all", choices=list(suites.SUITES) + ["all"])
    v.add_argument("--degree", type=int, default=None, help="balanced degree bound D (entry default)")
    v.add_argument("--param", action="append", metavar="NAME=VALUE")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(fn=cmd_verify)

    ch = sub.add_parser("characters", help="enumerate the characters of H")
    ch.add_argument("entry")
    ch.add_argument("--param", action="append", metavar="NAME=VALUE")
    ch.add_argument("--degree", type=int, default=None)
    ch.add_argument("--format", choices=["text", "json"], default="text")
    ch.set_defaults(fn=cmd_characters)

    r = sub.add_parser("report", help="run a suite over the whole catalog (or one entry)")
    r.add_argument("--format", choices=["text", "json"], default="text")
    r.add_argument("--suite", default="all", choices=list(suites.SUITES) + ["all"])
    r.add_argument("--entry")
    r.add_argument("--param", action="append", metavar="NAME=VALUE")
    r.add_argument("--degree", type=int, default=None)
    r.set_defaults(fn=cmd_report)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.fn(args, out)
    except UsageError as e:
        sys.stderr.write(f"hopfgalois: error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
