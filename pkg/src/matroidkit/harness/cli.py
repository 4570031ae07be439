"""Command line entry point: ``construct``, ``analyze`` and ``verify``."""

from __future__ import annotations

import argparse
import json
import sys

from .. import basis as basis_mod
from .. import connectivity as conn
from .. import constructions, core, structures
from ..core import MatroidError, elements
from ..elasticity import default_oracle, elasticity_report
from . import catalog
from .checks import Options
from .profile import key_is_3_connected
from .report import UnknownCheck, render_json, render_text, verify

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- construct


def build_family(family: str, n: int | None, r: int | None, p: int | None) -> core.Matroid:
    fam = family.strip().lower()
    if fam == "uniform":
        if r is None or n is None:
            raise UsageError("uniform needs --r and --n")
        return constructions.uniform(r, n)
    if fam in ("wheel", "whirl"):
        k = r if r is not None else n
        if k is None:
            raise UsageError(f"{fam} needs --r")
        return constructions.wheel(k) if fam == "wheel" else constructions.whirl(k)
    if fam in ("theta", "theta-minus"):
        if n is None:
            raise UsageError(f"{fam} needs --n")
        return (constructions.theta(n) if fam == "theta" else constructions.theta_minus(n))[0]
    if fam == "projective":
        if r is None or p is None:
            raise UsageError("projective needs --r and --p")
        pts = catalog.projective_points(p, r)
        if len(pts) > core.MAX_ELEMENTS:
            raise UsageError(f"PG({r - 1},{p}) has more than {core.MAX_ELEMENTS} points")
        return core.from_columns(p, r, pts, f"PG({r - 1},{p})")
    simple = {"mk4": "MK4", "k4": "MK4", "fano": "F7", "non-fano": "F7-", "l8": "L8"}
    return constructions.named(simple.get(fam, family))


def cmd_construct(args) -> int:
    M = build_family(args.family, args.n, args.r, args.p)
    line = catalog.emit_line(M, args.format) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(line)
    else:
        sys.stdout.write(line)
    return EXIT_OK


# ---------------------------------------------------------------- analyze


def _parse_basis(text: str, names: list[str]) -> int:
    mask = 0
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok in names:
            mask |= 1 << names.index(tok)
        elif tok.isdigit() and int(tok) < len(names):
            mask |= 1 << int(tok)
        else:
            raise UsageError(f"unknown element {tok!r} in --basis")
    return mask


def analyze(M: core.Matroid, names: list[str], minor: core.Matroid | None = None,
            B: int | None = None) -> dict:
    nm = lambda mask: [names[i] for i in elements(mask)]
    out = {
        "n": M.n, "r": M.r, "lex01": catalog.lex01(M),
        "connected": conn.is_connected(M),
        "three_connected": conn.is_3_connected(M),
    }
    three = out["three_connected"]
    rep = None
    if minor is not None:
        out["minor"] = catalog.lex01(minor)
        out["minor_present"] = default_oracle().has_minor(M, minor)
        rep = elasticity_report(M, minor)
    rows = []
    for e in range(M.n):
        row = {"element": names[e]}
        if three:
            if rep is None:
                rep_e = elasticity_report(M, core.Matroid(0, b"\x00")).detail[e]
            else:
                rep_e = rep.detail[e]
            row["si_3_connected"] = rep_e.si3
            row["co_3_connected"] = rep_e.co3
            row["elastic"] = rep_e.elastic
            if rep is not None:
                row["n_elastic"] = rep_e.n_elastic
                row["n_revealing"] = rep_e.n_revealing
        rows.append(row)
    out["elements"] = rows
    if three:
        out["maximal_fans"] = [[names[i] for i in f.elements] for f in structures.maximal_fans(M)]
        out["has_4_element_fan"] = structures.has_4_element_fan(M)
        seps = structures.theta_separators(M)
        out["theta_separators"] = [
            {"W": nm(s.W), "Z": nm(s.Z), "n": s.n, "variant": s.variant,
             "orientation": s.orientation}
            for s in seps
        ]
        vert = conn.vertical_3_separations(M)
        maximal = set(conn.maximal_separations(vert))
        out["vertical_3_separations"] = [
            dict(s.as_dict(names), maximal=s in maximal) for s in vert
        ]
        out["cyclic_3_separations"] = [s.as_dict(names) for s in conn.cyclic_3_separations(M)]
        out["path_width_three"] = conn.has_path_width_three(M)
    if B is not None:
        basis_mod.BasisContext(B).check(M)
        bl = {"basis": nm(B)}
        if three:
            bl["removable"] = nm(basis_mod.removable_elements(M, B))
            if minor is not None:
                bl["robust"] = nm(basis_mod.nb_robust(M, minor, B))
                bl["strong"] = nm(basis_mod.nb_strong(M, minor, B))
        out["basis"] = bl
    return out


def analyze_text(info: dict) -> str:
    lines = [f"n={info['n']} r={info['r']} lex01={info['lex01']}",
             f"connected={info['connected']} three_connected={info['three_connected']}"]
    if "minor" in info:
        lines.append(f"minor={info['minor']} present={info['minor_present']}")
    for row in info["elements"]:
        flags = " ".join(f"{k}={v}" for k, v in row.items() if k != "element")
        lines.append(f"  {row['element']}: {flags}")
    for key in ("maximal_fans", "theta_separators", "vertical_3_separations",
                "cyclic_3_separations"):
        if key in info:
            lines.append(f"{key}: {len(info[key])}")
            for item in info[key]:
                lines.append(f"  {json.dumps(item, sort_keys=True)}")
    if "path_width_three" in info:
        lines.append(f"path_width_three={info['path_width_three']}")
    if "basis" in info:
        lines.append(f"basis: {json.dumps(info['basis'], sort_keys=True)}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    if args.family:
        M = constructions.named(args.family)
        names = constructions.element_names(args.family, M.n)
    else:
        if args.file is None or args.index is None:
            raise UsageError("analyze needs --family or both --file and --index")
        ents = catalog.load_catalog(args.file, args.format, dedupe=False)
        if not 0 <= args.index < len(ents):
            raise UsageError(f"index {args.index} out of range (0..{len(ents) - 1})")
        M = ents[args.index].matroid
        names = [str(i) for i in range(M.n)]
    minor = constructions.named(args.minor) if args.minor else None
    B = _parse_basis(args.basis, names) if args.basis else None
    info = analyze(M, names, minor, B)
    if args.report == "json":
        sys.stdout.write(json.dumps(info, indent=2) + "\n")
    else:
        sys.stdout.write(analyze_text(info))
    return EXIT_OK


# ---------------------------------------------------------------- verify


def minor_keys(spec: str) -> tuple[str, ...] | None:
    if spec == "all":
        return None
    keys = []
    for part in _split_specs(spec):
        N = constructions.named(part)
        key = core.canonical_key(N)
        if not key_is_3_connected(key):
            raise UsageError(f"minor {part} is not 3-connected")
        if key not in keys:
            keys.append(key)
    return tuple(keys)


def _split_specs(spec: str) -> list[str]:
    """Split on commas outside parentheses: ``U(2,4),F7`` -> two specs."""
    parts, depth, cur = [], 0, ""
    for ch in spec:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts if p.strip()]


def cmd_verify(args) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    entries = catalog.resolve_catalog(args.catalog, args.format, args.max_n)
    opts = Options(minors=minor_keys(args.minors))
    try:
        reports = verify(args.check, entries, opts, jobs=args.jobs,
                         fail_fast=args.fail_fast, timing=args.timing)
    except UnknownCheck as exc:
        raise UsageError(f"unknown check {exc.args[0]}") from None
    single = args.check != "all" and "," not in args.check
    text = render_json(reports, single) if args.report == "json" else render_text(reports)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATIONS


# ---------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="matroidkit", description="Elastic-element toolkit for small matroids.")
    sub = ap.add_subparsers(dest="cmd", parser_class=_Parser)

    c = sub.add_parser("construct", help="emit a named matroid as a catalog line")
    c.add_argument("family")
    c.add_argument("--n", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--p", type=int)
    c.add_argument("--out")
    c.add_argument("--format", choices=catalog.FORMATS, default="lex01")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="structural report for one matroid")
    a.add_argument("--file")
    a.add_argument("--index", type=int)
    a.add_argument("--format", choices=catalog.FORMATS, default="lex01")
    a.add_argument("--family")
    a.add_argument("--minor")
    a.add_argument("--basis")
    a.add_argument("--report", choices=("json", "text"), default="text")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run registry checks over a catalog")
    v.add_argument("--check", required=True)
    v.add_argument("--catalog", required=True)
    v.add_argument("--format", choices=catalog.FORMATS, default="lex01")
    v.add_argument("--max-n", type=int, dest="max_n")
    v.add_argument("--minors", default="all")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--report", choices=("json", "text"), default="text")
    v.add_argument("--out")
    v.add_argument("--fail-fast", action="store_true", dest="fail_fast")
    v.add_argument("--timing", action="store_true",
                   help="fill elapsed_ms (output is then no longer reproducible)")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        return args.func(args)
    except UsageError as exc:
        print(f"matroidkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MatroidError, OSError) as exc:
        print(f"matroidkit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
