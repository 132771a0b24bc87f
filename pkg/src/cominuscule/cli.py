"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (bad diagram, element not
in range, failed oracle) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from typing import Sequence

from . import bijections as bij
from . import enumeration as en
from . import legame, preference, sweeps
from .diagrams import OPlusDiagram, from_json, inline, is_pds, le_diagrams, leify_direct, parse_inline, render_ascii, to_json
from .patterns import pattern_predicate
from .posets import PosetQ, build_poset


class DomainError(Exception):
    pass


# --- helpers --------------------------------------------------------------------------


def _poset(args) -> PosetQ:
    t = args.type.upper()
    if t.startswith("E") and len(t) > 1:
        return build_poset(t, None, args.j if args.j is not None else (1 if t == "E6" else 7))
    if args.n is None or args.j is None:
        raise DomainError(f"type {t} needs --n and --j")
    return build_poset(t, args.n, args.j)


def _diagram(args, p: PosetQ | None = None) -> OPlusDiagram:
    if getattr(args, "file", None):
        try:
            with open(args.file, encoding="utf-8") as fh:
                doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DomainError(f"{args.file}: malformed JSON ({exc})") from exc
        d = from_json(doc)
        if p is not None and d.poset is not p:
            raise DomainError(f"file holds a {d.poset.name} diagram, expected {p.name}")
        return d
    if not args.diagram:
        raise DomainError("give a diagram inline or with --file")
    return parse_inline(p if p is not None else _poset(args), args.diagram)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _diagram_doc(d: OPlusDiagram) -> dict:
    return {"inline": inline(d), **to_json(d)}


# --- subcommands ----------------------------------------------------------------------


def cmd_poset(args) -> int:
    p = _poset(args)
    if args.format == "json":
        doc = p.to_json()
        doc["ideals"] = len(p.ideals)
        _emit(_dump(doc))
        return 0
    width = max(len(str(b.label)) for b in p.boxes)
    lines = []
    for r in p.rows:
        cells = []
        for c in p.cols:
            b = p.box_at(r, c)
            cells.append((str(b.label) if b else "").rjust(width))
        lines.append(" ".join(cells).rstrip())
    if args.format == "csv":
        _emit(_csv([["row", "col", "label"]] + [[b.row, b.col, b.label] for b in p.boxes]))
        return 0
    _emit(f"{p.name}: {len(p.boxes)} boxes, {len(p.ideals)} order ideals\n" + "\n".join(lines))
    return 0


def cmd_cells(args) -> int:
    p = _poset(args)
    if args.count:
        n = sum(1 for o in p.ideals for _ in le_diagrams(o))
        _emit(_dump({"pair": p.name, "cells": n}) if args.format == "json" else str(n))
        return 0
    rows = []
    for o in p.ideals:
        for d in le_diagrams(o):
            c = bij.phi2(d)
            rows.append((inline(d), c.pair_text(), c.dimension))
    if args.format == "json":
        _emit(_dump([{"diagram": a, "cell": b, "dimension": k} for a, b, k in rows]))
    elif args.format == "csv":
        _emit(_csv([["diagram", "cell", "dimension"]] + rows))
    else:
        _emit("\n".join(f"{b}  diagram {a!r}  dim {k}" for a, b, k in rows))
    return 0


def cmd_check(args) -> int:
    p = _poset(args) if not args.file else None
    d = _diagram(args, p)
    pds = is_pds(d)
    pred = pattern_predicate(d)
    pattern = pred(d) if pred else None
    doc = {"pair": d.poset.name, "diagram": inline(d), "pds": pds, "pattern": pattern}
    if pattern is not None and pattern != pds:
        _emit(_dump(doc))
        raise DomainError("internal error: pattern test and PDS test disagree")
    if args.format == "json":
        _emit(_dump(doc))
    else:
        verdict = "Le-diagram" if pds else "not a Le-diagram"
        pat = "n/a" if pattern is None else ("avoids" if pattern else "contains") + " the forbidden patterns"
        _emit(f"{d.poset.name} {inline(d)!r}: {verdict}; pattern test: {pat}")
    return 0


def cmd_leify(args) -> int:
    p = _poset(args) if not args.file else None
    d = _diagram(args, p)
    strategy = legame.get_strategy(args.strategy, args.seed)
    steps = legame.le_game_trace(d, strategy, check_value=True)
    final = steps[-1].after if steps else d
    if final != leify_direct(d):
        raise DomainError("internal error: Le-game result differs from direct Le-ification")
    if args.format == "json":
        _emit(_dump({
            "start": inline(d),
            "moves": [{"move": s.move.describe(), "after": inline(s.after)} for s in steps],
            "result": inline(final),
        }))
        return 0
    out = [render_ascii(d), ""]
    for k, s in enumerate(steps, start=1):
        out += [f"move {k}: {s.move.describe()}", render_ascii(s.after), ""]
    out.append(f"result: {inline(final)}")
    _emit("\n".join(out))
    return 0


def cmd_convert(args) -> int:
    p = _poset(args)
    if p.type_tag not in ("A", "B") or (p.type_tag == "B" and p.j != p.n):
        raise DomainError("convert works on (A_n,j) and (B_n,n)")
    if args.source == "diagram":
        d = _diagram(args, p)
    elif args.source == "cell":
        d = bij.phi2_inverse(bij.parse_cell(p, args.diagram))
    else:
        d = bij.phi3_inverse(bij.parse_decorated(args.diagram, "A" if p.type_tag == "A" else "B"), p)
    if not is_pds(d):
        raise DomainError(f"{inline(d)!r} is not a Le-diagram")
    c = bij.phi2(d)
    pi = bij.phi3(d)
    if bij.phi1(c) != pi:
        raise DomainError("internal error: phi1(phi2(D)) != phi3(D)")
    if args.format == "json":
        _emit(_dump({"diagram": _diagram_doc(d), "cell": c.pair_text(), "decorated": str(pi)}))
    elif args.to == "cell":
        _emit(str(c))
    elif args.to == "decorated":
        _emit(str(pi))
    elif args.to == "diagram":
        _emit(inline(d))
    else:
        _emit(f"diagram:   {inline(d)}\ncell:      {c}\ndecorated: {pi}")
    return 0


def _word(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", ",").split(",") if t)
    except ValueError as exc:
        raise DomainError(f"expected comma-separated integers, got {text!r}") from exc


def cmd_pref(args) -> int:
    if args.action == "alpha":
        pi = _word(args.value)
        f = preference.alpha(pi)
        _emit(_dump({"pi": list(pi), "preference": list(f)}) if args.format == "json" else ",".join(map(str, f)))
    elif args.action == "alpha-inv":
        f = _word(args.value)
        pi = preference.alpha_inverse(f)
        _emit(_dump({"preference": list(f), "pi": list(pi.window)}) if args.format == "json" else str(pi))
    elif args.action == "to-diagram":
        f = _word(args.value)
        steps = preference.psi_trace(f)
        final = steps[-1].grid if steps else preference.Staircase(0)
        if args.format == "json":
            doc = {"preference": list(f), "staircase": final.render()}
            if len(f) >= 2:
                doc["diagram"] = _diagram_doc(final.to_diagram())
            if args.trace:
                doc["trace"] = [{"i": s.i, "i_star": s.target, "cases": s.notes, "grid": s.grid.render()} for s in steps]
            _emit(_dump(doc))
        elif args.trace:
            _emit(preference.render_trace(steps, notes=args.notes))
        else:
            _emit(final.render() + ("\n" + inline(final.to_diagram()) if len(f) >= 2 else ""))
    else:
        n = args.n if args.n is not None else _infer_staircase_n(args.value)
        p = build_poset(args.type.upper(), n, n)
        d = parse_inline(p, args.value)
        if p.type_tag == "B":
            f = preference.max_B_le_to_preference(d)
        elif p.type_tag == "D":
            if not is_pds(d):
                raise DomainError(f"{inline(d)!r} is not a Le-diagram")
            f = preference.phi_D(d)
        else:
            raise DomainError("from-diagram takes --type B or D")
        _emit(_dump({"diagram": inline(d), "preference": list(f)}) if args.format == "json" else ",".join(map(str, f)))
    return 0


def _infer_staircase_n(text: str) -> int:
    rows = text.split("/")
    return len(rows) + 1


def _count_table(args) -> list[tuple[int, str]]:
    fns = {
        "bhat": en.bhat_q,
        "dhat": en.dhat_q,
        "bstair": en.b_staircase_q,
        "B": en.big_B,
        "T": en.T_poly,
        "pref": en.preference_count,
    }
    f = fns[args.family]
    lo = 1 if args.family == "T" else 0
    return [(n, str(f(n))) for n in range(lo, args.max_n + 1)]


def cmd_count(args) -> int:
    if args.family:
        rows = _count_table(args)
        if args.format == "csv":
            _emit(_csv([["n", "value"]] + rows))
        elif args.format == "json":
            _emit(_dump([{"n": n, "value": v} for n, v in rows]))
        else:
            _emit("\n".join(f"{n}: {v}" for n, v in rows))
        return 0
    p = _poset(args)
    scope = "all" if args.all else "maximal"
    grading = "plus" if args.by_plus else "count"
    try:
        val = en.census(p.type_tag, p.n, p.j, scope, grading, method=args.method, jobs=args.jobs)
    except en.CapExceeded as exc:
        raise DomainError(str(exc)) from exc
    if args.format == "json":
        _emit(_dump({"pair": p.name, "scope": scope, "grading": grading, "value": str(val)}))
    elif args.format == "csv":
        _emit(_csv([["pair", "scope", "value"], [p.name, scope, str(val)]]))
    else:
        _emit(str(val))
    return 0


def cmd_oracle(args) -> int:
    if args.all:
        results = sweeps.run_all(args.max_n)
    elif args.sweep:
        results = [sweeps.SWEEPS[args.sweep](args.max_n)]
    else:
        raise DomainError("give --all or --sweep NAME")
    if args.format == "json":
        _emit(_dump([{"name": r.name, "passed": r.passed, "checked": r.checked,
                      "failures": r.failures, "first_counterexample": r.first} for r in results]))
    else:
        _emit("\n".join(r.line(timing=False) for r in results))
    return 0 if all(r.passed for r in results) else 1


# --- parser ---------------------------------------------------------------------------


def _pair_options(sp: argparse.ArgumentParser, required: bool = False) -> None:
    sp.add_argument("--type", required=required, default=None, help="A, B, D, E6 or E7")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--j", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cominuscule", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("ascii", "json", "csv"), default="ascii")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("poset", help="dump the poset Q^j")
    _pair_options(sp, True)
    sp.set_defaults(func=cmd_poset)

    sp = sub.add_parser("cells", help="list or count cell labels")
    _pair_options(sp, True)
    sp.add_argument("--count", action="store_true")
    sp.set_defaults(func=cmd_cells)

    for name, func, helptext in (("check", cmd_check, "PDS and pattern verdicts"),
                                 ("leify", cmd_leify, "play the Le-game")):
        sp = sub.add_parser(name, help=helptext)
        _pair_options(sp)
        sp.add_argument("diagram", nargs="?", help="inline diagram, rows separated by '/'")
        sp.add_argument("--file", help="diagram JSON document")
        if name == "leify":
            sp.add_argument("--strategy", choices=("southwest", "northeast", "random"), default="southwest")
        sp.set_defaults(func=func)

    sp = sub.add_parser("convert", help="diagram, cell pair and decorated permutation")
    _pair_options(sp, True)
    sp.add_argument("diagram", nargs="?", help="inline diagram, 'x;w' cell text or decorated permutation")
    sp.add_argument("--file")
    sp.add_argument("--from", dest="source", choices=("diagram", "cell", "decorated"), default="diagram")
    sp.add_argument("--to", choices=("all", "diagram", "cell", "decorated"), default="all")
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("pref", help="preference-function bijections")
    sp.add_argument("action", choices=("to-diagram", "from-diagram", "alpha", "alpha-inv"))
    sp.add_argument("value", help="comma-separated word, signed window or inline diagram")
    sp.add_argument("--trace", action="store_true", help="print every intermediate grid")
    sp.add_argument("--notes", action="store_true", help="with --trace, list the cases used")
    sp.add_argument("--type", default="D", help="B or D for from-diagram")
    sp.add_argument("--n", type=int, default=None)
    sp.set_defaults(func=cmd_pref)

    sp = sub.add_parser("count", help="Le-diagram counts")
    _pair_options(sp)
    scope = sp.add_mutually_exclusive_group()
    scope.add_argument("--maximal", action="store_true", help="maximal shape only (default)")
    scope.add_argument("--all", action="store_true", help="every shape")
    sp.add_argument("--by-plus", action="store_true", help="q-count by number of + boxes")
    sp.add_argument("--method", choices=("pds", "pattern", "dfs"), default="dfs")
    sp.add_argument("--family", choices=("bhat", "dhat", "bstair", "B", "T", "pref"),
                    help="print a formula table instead of a census")
    sp.add_argument("--max-n", type=int, default=6)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("oracle", help="run equivalence sweeps")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--sweep", choices=sorted(sweeps.SWEEPS))
    sp.add_argument("--max-n", type=int, default=4)
    sp.set_defaults(func=cmd_oracle)
    return ap


def _hoist_globals(argv: list[str]) -> list[str]:
    """Let ``--format``/``--seed``/``--jobs`` appear after the subcommand."""
    front, rest = [], []
    k = 0
    while k < len(argv):
        a = argv[k]
        key = a.split("=", 1)[0]
        if key in ("--format", "--seed", "--jobs"):
            if "=" in a:
                front.append(a)
            else:
                front += argv[k:k + 2]
                k += 1
        else:
            rest.append(a)
        k += 1
    return front + rest


def _protect_negative(argv: list[str]) -> list[str]:
    """Signed windows such as ``-6,-8,3`` would parse as options; move them behind ``--``."""
    neg = [a for a in argv if re.match(r"^-\d", a)]
    if not neg:
        return argv
    return [a for a in argv if a not in neg] + ["--"] + neg


def main(argv: Sequence[str] | None = None) -> int:
    args_list = _protect_negative(_hoist_globals(list(sys.argv[1:] if argv is None else argv)))
    parser = build_parser()
    try:
        args = parser.parse_args(args_list)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "count" and not args.family and args.type is None:
        sys.stderr.write("usage error: count needs --type/--n/--j or --family\n")
        return 2
    try:
        return args.func(args)
    except (DomainError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"error: {msg}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
