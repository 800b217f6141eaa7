"""Command-line interface: `schubcalc <subcommand> [flags]`."""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import csm, exceptl, orbitcomb, schubidx, singloc, towers
from .errors import ConfigurationError, DomainError, NotSupported, ResourceError
from .rootsys import parse_group
from .schubmod import SchubertClass
from .weyl import bruhat_leq, group as weyl_group_of, minimal_reps, parse_word

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _ints(text: str | None) -> tuple[int, ...]:
    if text is None or text.strip() in ("", "-"):
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}")


def _system(args):
    label = args.group
    if label is None:
        raise UsageError("--group is required")
    return parse_group(label, args.rank)


# ------------------------------------------------------------- subcommands

def cmd_csm(args):
    system = _system(args)
    word = parse_word(args.word or "")
    w = weyl_group_of(system.label).element(word)
    if args.parabolic:
        cls = csm.csm_cell_parabolic(w, _ints(args.parabolic), word=word)
    else:
        cls = csm.csm_cell(w, word=word)
    out = cls.to_json()
    return out, [{"word": t["word"], "coeff": t["coeff"]} for t in out["terms"]]


def cmd_degree_table(args):
    system = _system(args)
    if system.kind == "E":
        rows = exceptl.table(system.label, args.node)
    else:
        if args.node is None:
            raise UsageError("--node is required")
        rows = exceptl.schubert_table(system.kind, args.node, system.rank)
    data = [r.to_json() for r in rows]
    return {"group": system.label, "node": args.node, "rows": data}, data


def cmd_bruhat(args):
    system = _system(args)
    g = weyl_group_of(system.label)
    if args.bound is None:
        raise UsageError("--bound is required")
    u, w = g.element(parse_word(args.word or "")), g.element(parse_word(args.bound))
    if args.parabolic:
        q = minimal_reps(system, _ints(args.parabolic))
        for x in (u, w):
            if x not in q:
                raise DomainError(f"{x.word_str or 'e'} is not a minimal coset representative")
    ok = bruhat_leq(u, w)
    row = {"u": u.word_str or "e", "w": w.word_str or "e", "leq": ok}
    return row, [row]


def cmd_tits_match(args):
    label = (args.group or "").upper()
    if label == "E6":
        match = exceptl.spinor_over_cayley()
    elif label == "E7":
        match = exceptl.cayley_over_freudenthal()
    else:
        raise UsageError("tits-match needs --group E6 or --group E7")
    out = match.to_json()
    rows = [
        {"upper": p["upper"]["word"], "lower": p["lower"]["word"], "dim": p["upper"]["dim"], "deg": p["upper"]["deg"]}
        for p in out["pairs"]
    ]
    return out, rows


def _index(args):
    if args.n is None:
        raise UsageError("--n is required")
    steps = _ints(args.steps) or None
    return schubidx.parse_index(
        args.family, k=args.k, n=args.n, a=_ints(args.a), b=_ints(args.b),
        alpha=_ints(args.alpha), beta=_ints(args.beta), steps=steps,
    )


def cmd_tower(args):
    plan = towers.build_tower(_index(args))
    return plan.to_json(), [s.to_json() for s in plan.steps]


def cmd_finite_log(args):
    plan = towers.build_tower(_index(args))
    row = {"index": plan.index.to_json(), "finite_log": plan.verdict, "reason": plan.reason}
    return row, [{"finite_log": plan.verdict, "reason": plan.reason}]


def _sg_index(args):
    if args.k is None:
        raise UsageError("--k is required")
    args.family = "SG"
    return _index(args)


def cmd_singular_locus(args):
    index = _sg_index(args)
    out = singloc.report(index)
    rows = [
        {"type": c["type"], "pivot": c["pivot"], "component": str(singloc.point_index(
            singloc.index_point(_from_json(c["component"])), index.n)), "codim": c["codim"]}
        for c in out["components"]
    ]
    return out, rows


def _from_json(d):
    return schubidx.IsotropicIndex(d["family"], d["k"], d["n"], tuple(d["a"]), tuple(d["b"]))


def cmd_smooth(args):
    index = _sg_index(args)
    sm = singloc.smoothness(index)
    out = dict(sm.to_json(), index=index.to_json())
    return out, [sm.to_json()]


def cmd_orbits(args):
    perm = _ints(args.perm)
    if not perm or args.column is None:
        raise UsageError("orbits needs --perm and --column")
    out = orbitcomb.orbit_report(perm, args.column)
    return out, out["cells"]


def cmd_validate_index(args):
    try:
        index = _index(args)
    except schubidx.InvalidIndex as exc:
        out = {"valid": False, "violations": [str(v) for v in exc.violations]}
        return out, [{"violation": v} for v in out["violations"]]
    out = {"valid": True, "index": index.to_json(), "dimension": _dimension_or_none(index)}
    return out, [{"valid": True}]


def _dimension_or_none(index):
    try:
        return schubidx.dimension(index)
    except NotSupported:
        return None


COMMANDS = {
    "csm": cmd_csm,
    "degree-table": cmd_degree_table,
    "bruhat": cmd_bruhat,
    "tits-match": cmd_tits_match,
    "tower": cmd_tower,
    "finite-log": cmd_finite_log,
    "singular-locus": cmd_singular_locus,
    "smooth": cmd_smooth,
    "orbits": cmd_orbits,
    "validate-index": cmd_validate_index,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schubcalc", description="Schubert calculus toolkit")
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", metavar="FILE")
        p.add_argument("--group")
        p.add_argument("--rank", type=int)
        p.add_argument("--parabolic", help="comma list of excluded (marked) simple nodes")
        p.add_argument("--word", help="digit string or comma list")
        p.add_argument("--bound", help="upper element for bruhat")
        p.add_argument("--node", type=int)
        p.add_argument("--family", default="SG", help="SG, OG, G or F")
        p.add_argument("--k", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--a")
        p.add_argument("--b")
        p.add_argument("--alpha")
        p.add_argument("--beta")
        p.add_argument("--steps")
        p.add_argument("--perm", help="one-line permutation for orbits")
        p.add_argument("--column", type=int, help="cell index a for orbits")
    return parser


def _render(payload, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        payload, rows = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigurationError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, NotSupported, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = _render(payload, rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
