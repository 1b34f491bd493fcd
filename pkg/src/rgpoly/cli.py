"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse/validation error.
The default enumeration cap may be overridden with the RGPOLY_CAP
environment variable or the --cap flag.
"""

from __future__ import annotations

import argparse
import fnmatch
import os
import sys

from . import formats, poly, verify
from .convert import link_to_tait, plane_to_ribbon, ribbon_to_plane
from .errors import RgpolyError
from .links import jones, kauffman_bracket
from .planemap import dual, relative_tutte
from .ribbon import DEFAULT_EDGE_CAP, bollobas_riordan


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rgpoly",
        description="Bollobas-Riordan and relative Tutte polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, with_subs=True, with_cap=True):
        p = sub.add_parser(name, help=help_)
        if with_subs:
            p.add_argument("--substitute", action="append", default=[],
                           metavar="VAR=EXPR[,VAR=EXPR…]",
                           help="substitutions applied before printing; "
                                "VAR may be a glob like x_*")
        if with_cap:
            p.add_argument("--cap", type=int, default=None,
                           help="enumeration cap override")
        return p

    add("br", "Bollobas-Riordan polynomial of a .rg file").add_argument("file")
    add("rtutte", "relative Tutte polynomial of a .rpg file").add_argument("file")
    add("bracket", "Kauffman bracket of a .vld file").add_argument("file")
    add("jones", "Jones polynomial of a .vld file").add_argument("file")

    conv = sub.add_parser("convert", help="convert between representations")
    conv.add_argument("--to", required=True,
                      choices=("plane", "ribbon", "tait"))
    conv.add_argument("file")

    dualp = sub.add_parser("dual", help="planar dual of a .rpg file")
    dualp.add_argument("file")

    ver = sub.add_parser("verify", help="run the theorem suite")
    ver.add_argument("--main", action="store_true")
    ver.add_argument("--identities", action="store_true")
    ver.add_argument("--duality", action="store_true")
    ver.add_argument("--bracket", action="store_true")
    ver.add_argument("--random", type=int, default=20, metavar="N")
    ver.add_argument("--seed", type=int, default=0, metavar="S")
    ver.add_argument("--max-size", type=int, default=5, metavar="K")

    sub.add_parser("selftest", help="run a fixed small verification suite")
    return parser


def _cap(args) -> int:
    if getattr(args, "cap", None) is not None:
        return args.cap
    return int(os.environ.get("RGPOLY_CAP", DEFAULT_EDGE_CAP))


def _apply_substitutions(p: poly.Polynomial, specs: list) -> poly.Polynomial:
    mapping = {}
    for spec in specs:
        for item in spec.split(","):
            if "=" not in item:
                raise RgpolyError(f"bad substitution {item!r}, expected VAR=EXPR")
            pattern, expr = item.split("=", 1)
            value = poly.parse(expr)
            matched = [name for name in sorted(p.variables())
                       if fnmatch.fnmatchcase(name, pattern)]
            if not matched and "*" not in pattern and "?" not in pattern:
                matched = [pattern]
            for name in matched:
                mapping[name] = value
    return p.subs(mapping) if mapping else p


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except RgpolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "br":
        R = formats.parse_ribbon(_read(args.file))
        p = bollobas_riordan(R, cap=_cap(args))
    elif cmd == "rtutte":
        G = formats.parse_rpg(_read(args.file))
        p = relative_tutte(G, cap=_cap(args))
    elif cmd == "bracket":
        L = formats.parse_vld(_read(args.file))
        p = kauffman_bracket(L, cap=_cap(args))
    elif cmd == "jones":
        L = formats.parse_vld(_read(args.file))
        p = jones(L, cap=_cap(args))
    elif cmd == "convert":
        return _convert(args)
    elif cmd == "dual":
        G = formats.parse_rpg(_read(args.file))
        print(formats.serialize_rpg(dual(G)), end="")
        return 0
    elif cmd == "verify":
        return _verify(args)
    elif cmd == "selftest":
        return _selftest()
    else:  # pragma: no cover - argparse enforces the choices
        return 2
    print(_apply_substitutions(p, args.substitute).canonical())
    return 0


def _convert(args) -> int:
    text = _read(args.file)
    if args.to == "plane":
        R = formats.parse_ribbon(text)
        G, cert = ribbon_to_plane(R)
        for g_label, r_label in cert.label_pairs(G, R):
            print(f"# cert: {g_label} <-> {r_label}")
        print(formats.serialize_rpg(G), end="")
    elif args.to == "ribbon":
        G = formats.parse_rpg(text)
        print(formats.serialize_ribbon(plane_to_ribbon(G)), end="")
    else:
        L = formats.parse_vld(text)
        print(formats.serialize_rpg(link_to_tait(L)), end="")
    return 0


def _verify(args) -> int:
    checks = [name for name, on in (("main", args.main),
                                    ("identities", args.identities),
                                    ("duality", args.duality),
                                    ("bracket", args.bracket)) if on]
    if not checks:
        checks = ["main", "identities", "duality", "bracket"]
    failures = 0
    for report, size in verify.run_suite(checks, args.random, args.seed,
                                         args.max_size):
        print(report.line(size))
        if not report.passed:
            failures += 1
    return 1 if failures else 0


def _selftest() -> int:
    failures = 0
    for report, size in verify.run_suite(
            ["main", "identities", "duality", "bracket"],
            count=5, seed=2024, max_size=4):
        print(report.line(size))
        if not report.passed:
            failures += 1
    print("selftest:", "FAIL" if failures else "PASS")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
