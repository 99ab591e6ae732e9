"""Command line front end: ``dimlat run|check|selftest``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import complattice, dimfun, fdoracle, qot
from .complattice import Described, Explicit
from .dsl import DslError, Environment, Query, Script, parse
from .extval import DEFAULT_MAX_ALEPH, set_max_aleph


@dataclass
class Report:
    lines: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 1 if self.errors else 0

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


class QueryError(Exception):
    pass


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _as_class_set(kind: str, obj) -> qot.ClassSetDescriptor:
    if kind == "elem":
        return qot.ExplicitSet([obj])
    if isinstance(obj, Explicit):
        return qot.ExplicitSet(obj.members)
    return qot.ProductSet(obj.algebra, obj.chains)


def evaluate(q: Query, env: Environment) -> str:
    """Result text of a single query."""
    args = [env.get(a) for a in q.args]
    objs = [obj for _, obj in args]
    op = q.op
    if op == "leq":
        return _bool(dimfun.d_leq(*objs))
    if op == "add":
        return str(dimfun.d_add(*objs))
    if op == "meet":
        return str(dimfun.pair_meet(*objs))
    if op == "join":
        return str(dimfun.pair_join(*objs))
    if op == "sup":
        return str(complattice.family_sup(objs[0]))
    if op == "inf":
        return str(complattice.family_inf(objs[0]))
    if op == "closure":
        kind, obj = args[0]
        if kind == "elem":
            return str(qot.closure_singleton(obj))
        return str(qot.closure(_as_class_set(kind, obj)))
    if op == "in_closure":
        kind, obj = args[1]
        return _bool(qot.in_closure(objs[0], _as_class_set(kind, obj)))
    if op == "is_T0":
        return _bool(qot.is_T0(objs[0]))
    if op == "is_T1":
        return _bool(qot.is_T1(objs[0]))
    if op == "is_normal":
        return _bool(qot.quotient_maps_normal(objs[0]))
    if op == "unit":
        return str(objs[0].unit())
    if op == "formal_sum":
        return str(dimfun.to_formal_sum(objs[0]))
    if op in ("rep_sub", "rep_super"):
        A, F = objs
        if isinstance(F, Described):
            raise QueryError("representation queries need an explicit family")
        fn = fdoracle.rep_common_sub if op == "rep_sub" else fdoracle.rep_common_super
        rep = fn(A, list(F.members), q.index)
        return f"{rep} over {rep.algebra.name}"
    if op == "oracle_check":
        ok, n, failures = fdoracle.oracle_check(q.shape)
        if ok:
            return f"OK ({n} classes, all operations agree)"
        return f"FAIL ({n} classes, {len(failures)} disagreements; first: {failures[0]})"
    raise QueryError(f"unknown query {op!r}")


def run(script: Script) -> Report:
    """Execute the statements in order; stops at the first failing query."""
    env = Environment()
    report = Report()
    n = 0
    for stmt in script.statements:
        if not isinstance(stmt, Query):
            env.define(stmt)
            continue
        n += 1
        try:
            result = evaluate(stmt, env)
        except (ValueError, NotImplementedError, QueryError) as exc:
            report.errors.append(f"query #{n} ({stmt.text()}): {exc}")
            break
        report.lines.append(f"QUERY {stmt.text()} => {result}")
    return report


def run_text(text: str) -> Report:
    return run(parse(text))


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="dimlat", description="Exact dimension lattices of von Neumann algebras.")
    parser.add_argument("--max-aleph", type=int, default=DEFAULT_MAX_ALEPH, metavar="K",
                        help="largest aleph level that may appear (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="execute a script and print one line per query")
    p_run.add_argument("file")
    p_check = sub.add_parser("check", help="parse and check a script without running it")
    p_check.add_argument("file")
    sub.add_parser("selftest", help="run the acceptance criteria")
    args = parser.parse_args(argv)

    try:
        set_max_aleph(args.max_aleph)
    except ValueError as exc:
        parser.error(str(exc))

    if args.command == "selftest":
        from .acceptance import run_all

        all_ok = True
        for res in run_all():
            print(res.line(), flush=True)
            all_ok &= res.passed
        return 0 if all_ok else 1

    try:
        text = _read(args.file)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"dimlat: cannot read {args.file}: {exc}", file=sys.stderr)
        return 2
    try:
        script = parse(text)
    except DslError as exc:
        print(f"{args.file}:{exc}", file=sys.stderr)
        return 2
    if args.command == "check":
        print(f"{args.file}: ok ({len(script.statements)} statements)")
        return 0
    report = run(script)
    sys.stdout.write(report.text())
    for err in report.errors:
        print(err, file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
