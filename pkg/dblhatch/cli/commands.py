"""
The ``dblhatch`` command line.

Exit codes: 0 the check passed (or the command produced its output),
1 a check failed with a counterexample or a lift does not exist,
2 the input could not be used (parse, validation, precondition or budget
errors). With ``--json`` only the report goes to stdout; ``-o`` keeps the
DBLX output.
"""

import argparse
import logging
import sys
import time
from collections.abc import Callable
from pathlib import Path

from pydantic import BaseModel

from dblhatch.cli.corpus import corpus_entry, corpus_names
from dblhatch.cli.dblx import emit_dblx, parse_dblx
from dblhatch.cli.report import Report
from dblhatch.config import get_settings
from dblhatch.construct.embed import horizontal_embed, underlying_horizontal, vertical_embed
from dblhatch.construct.hom import internal_hom
from dblhatch.construct.vertical import left_adjoint_l, vertical_morphism_2cat
from dblhatch.dblcore.double import DoubleCategory
from dblhatch.dblcore.functor import DoubleFunctor, identity_double_functor
from dblhatch.dblcore.ops import coproduct, product, transpose
from dblhatch.equiv.weak_inverse import check_globular_invertibility
from dblhatch.errors import BudgetExceeded, DblhatchError, PreconditionFailed
from dblhatch.fincat.twocat import Bicategory, TwoCategory
from dblhatch.homotopy.hom import pseudo_hom
from dblhatch.homotopy.whitehead import verify_whitehead_data, whitehead_inverse
from dblhatch.model.cofibrancy import CofibrancyReport, is_cofibrant
from dblhatch.model.conditions import (
    check_double_biequivalence,
    check_double_fibration,
    check_double_trivial_fibration,
)
from dblhatch.model.lifting import solve_lifting
from dblhatch.utils.search import Budget
from dblhatch.utils.types import CheckReport, Counterexample
from dblhatch.weakdbl.checks import check_double_biequivalence_weak, is_cofibrant_weak
from dblhatch.weakdbl.double import WeakDoubleCategory
from dblhatch.weakdbl.embed import horizontal_embed_weak, underlying_horizontal_weak, vertical_morphism_bicat
from dblhatch.weakdbl.strictify import strictify

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

GLOBULAR_KINDS = ("lemma220", "globular")
CHECK_KINDS = ("biequivalence", "fibration", "trivial-fibration", "cofibrant", *GLOBULAR_KINDS)
CONSTRUCT_OPS = ("H", "V", "VV", "HH", "L", "prod", "coprod", "hom", "pshom", "transpose", "strictify")


def load(argument: str) -> BaseModel:
    """A DBLX file, or a corpus entry named by ``argument`` or by its file stem.

    Raises:
        UnknownName: if no such file or corpus entry exists.
    """
    path = Path(argument)
    if path.is_file():
        return parse_dblx(path.read_text(encoding="utf-8"))
    return corpus_entry(path.stem if path.suffix == ".dblx" else argument)


def _expect(obj: BaseModel, model: type, argument: str) -> None:
    if not isinstance(obj, model):
        raise PreconditionFailed("input kind", f"{argument} is not a {model.__name__}")


def _is_weak(obj: BaseModel) -> bool:
    if isinstance(obj, DoubleFunctor):
        return isinstance(obj.source, WeakDoubleCategory) or isinstance(obj.target, WeakDoubleCategory)
    return isinstance(obj, WeakDoubleCategory)


def _cofibrancy_check(report: CofibrancyReport) -> CheckReport:
    horizontal = report.horizontal
    results = {
        "horizontal free": None
        if horizontal.free
        else Counterexample(cells=horizontal.counterexample, missing=horizontal.reason or "not free"),
        "vertical 1/2 union": None
        if report.vertical_disjoint_union
        else Counterexample(cells=[], missing="vertical category is not a disjoint union of 1 and 2"),
    }
    return CheckReport.from_results(report.subject, results, notes=[f"verdict: {report.verdict}"])


def _globular_check(obj: DoubleCategory) -> CheckReport:
    report = check_globular_invertibility(obj)
    found = report.discrepancies[0] if report.discrepancies else None
    counterexample = None if found is None else Counterexample(cells=found.cells, missing=found.law)
    return CheckReport.from_results(
        report.subject, {"globular": counterexample}, notes=[f"{report.checked} squares checked"]
    )


def run_check(args: argparse.Namespace, budget: Budget) -> tuple[Report, list[str]]:
    obj = load(args.input)
    if args.kind == "cofibrant" or args.kind in GLOBULAR_KINDS:
        _expect(obj, DoubleCategory, args.input)
        if args.kind in GLOBULAR_KINDS:
            report = _globular_check(obj)
        elif _is_weak(obj):
            report = _cofibrancy_check(is_cofibrant_weak(obj))
        else:
            report = _cofibrancy_check(is_cofibrant(obj))
    else:
        _expect(obj, DoubleFunctor, args.input)
        if args.kind == "biequivalence":
            check = check_double_biequivalence_weak if _is_weak(obj) else check_double_biequivalence
            report = check(obj, with_reformulations=args.reformulations)
        elif args.kind == "fibration":
            report = check_double_fibration(obj)
        else:
            report = check_double_trivial_fibration(obj)
    logging.info(f"check {args.kind} {obj.name}: {'pass' if report.passed else 'fail'}")
    return Report.from_check(f"check {args.kind}", [args.input], report), []


def _construct(op: str, inputs: list[BaseModel], arguments: list[str], budget: Budget) -> list[BaseModel]:
    arity = 2 if op in ("prod", "coprod", "hom", "pshom") else 1
    if len(inputs) != arity:
        raise PreconditionFailed("arity", f"{op} takes {arity} input(s), got {len(inputs)}")
    first = inputs[0]

    if op in ("VV", "HH", "L"):
        _expect(first, TwoCategory, arguments[0])
        if op == "HH":
            return [horizontal_embed_weak(first) if isinstance(first, Bicategory) else horizontal_embed(first)]
        return [vertical_embed(first) if op == "VV" else left_adjoint_l(first)]

    for obj, argument in zip(inputs, arguments):
        _expect(obj, DoubleCategory, argument)
    if op == "H":
        return [underlying_horizontal_weak(first) if _is_weak(first) else underlying_horizontal(first)]
    if op == "V":
        return [vertical_morphism_bicat(first) if _is_weak(first) else vertical_morphism_2cat(first)]
    if op == "transpose":
        return [transpose(first)]
    if op == "strictify":
        result = strictify(first)
        return [result.strict, result.unit]
    second = inputs[1]
    if op == "prod":
        return [product(first, second)]
    if op == "coprod":
        return [coproduct(first, second)]
    if op == "hom":
        return [internal_hom(first, second, budget=budget)]
    return [pseudo_hom(first, second, budget)]


def _write(documents: list[tuple[str, BaseModel]], output: Path | None) -> list[str]:
    """Write each document to ``output`` (a directory when there are several,
    named by role) or return their text for stdout."""
    if output is None:
        return [emit_dblx(obj) for _, obj in documents]
    if len(documents) == 1:
        output.write_text(emit_dblx(documents[0][1]), encoding="utf-8")
        return []
    output.mkdir(parents=True, exist_ok=True)
    for role, obj in documents:
        (output / f"{role}.dblx").write_text(emit_dblx(obj), encoding="utf-8")
    return []


def run_construct(args: argparse.Namespace, budget: Budget) -> tuple[Report, list[str]]:
    inputs = [load(argument) for argument in args.inputs]
    built = _construct(args.op, inputs, args.inputs, budget)
    roles = ["result", "unit"][: len(built)]
    logging.info(f"construct {args.op}: built {', '.join(obj.name for obj in built)}")
    report = Report(
        command=f"construct {args.op}",
        inputs=list(args.inputs),
        passed=True,
        witnesses={role: obj.name for role, obj in zip(roles, built)},
    )
    return report, _write(list(zip(roles, built)), args.output)


def run_whitehead(args: argparse.Namespace, budget: Budget) -> tuple[Report, list[str]]:
    F = load(args.input)
    _expect(F, DoubleFunctor, args.input)
    data = whitehead_inverse(F)
    verified = verify_whitehead_data(F, data.inverse, data.unit, data.counit)
    documents = [
        ("G", data.inverse),
        ("eta", data.unit.transformation.model_copy(update={"name": "eta"})),
        ("epsilon", data.counit.transformation.model_copy(update={"name": "epsilon"})),
    ]
    report = Report(
        command="whitehead",
        inputs=[args.input],
        passed=verified,
        verdicts={"verified": verified},
        witnesses={"inverse": data.inverse.name, "unit": "eta", "counit": "epsilon"},
    )
    return report, _write(documents, args.output)


def _square_side(argument: str, source: DoubleCategory, target: DoubleCategory, role: str) -> DoubleFunctor:
    """``id`` stands for the identity functor when ``source`` equals ``target``."""
    if argument != "id":
        obj = load(argument)
        _expect(obj, DoubleFunctor, argument)
        return obj
    if source.model_dump(exclude={"name"}) != target.model_dump(exclude={"name"}):
        raise PreconditionFailed("commuting square", f"{role} 'id' needs {source.name} = {target.name}")
    return identity_double_functor(source)


def run_lift(args: argparse.Namespace, budget: Budget) -> tuple[Report, list[str]]:
    i, p = load(args.i), load(args.p)
    _expect(i, DoubleFunctor, args.i)
    _expect(p, DoubleFunctor, args.p)
    top = _square_side(args.top, i.source, p.source, "top")
    bottom = _square_side(args.bottom, i.target, p.target, "bottom")
    lift = solve_lifting(i, p, top, bottom, budget)
    inputs = [args.i, args.p, args.top, args.bottom]
    if lift is None:
        report = Report(
            command="lift",
            inputs=inputs,
            verdicts={"lift": False},
            counterexamples={"lift": Counterexample(cells=[top.name, bottom.name], missing="diagonal filler")},
        )
        return report, ["none\n"]
    report = Report(command="lift", inputs=inputs, passed=True, verdicts={"lift": True}, witnesses={"lift": lift.name})
    return report, _write([("lift", lift)], args.output)


def run_corpus(args: argparse.Namespace, budget: Budget) -> tuple[Report, list[str]]:
    if args.action == "list":
        names = corpus_names()
        report = Report(command="corpus list", passed=True, notes=names)
        return report, ["\n".join(names) + "\n"]
    if args.name is None:
        raise PreconditionFailed("corpus export", "a corpus name is required")
    obj = corpus_entry(args.name)
    report = Report(command="corpus export", inputs=[args.name], passed=True, witnesses={"entry": obj.name})
    return report, _write([(args.name, obj)], args.output)


Runner = Callable[[argparse.Namespace, Budget], tuple[Report, list[str]]]


def command_runners() -> dict[str, Runner]:
    return {
        "check": run_check,
        "construct": run_construct,
        "whitehead": run_whitehead,
        "lift": run_lift,
        "corpus": run_corpus,
    }


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print the report as JSON.")
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help=f"Search node budget (default: DBLHATCH_BUDGET or {get_settings().budget}).",
    )
    common.add_argument("--seed", type=int, default=None, help="Seed recorded for randomized drivers.")
    common.add_argument("--timing", action="store_true", help="Include wall-clock timing in the report.")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Log at INFO (-v) or DEBUG (-vv).")
    common.add_argument("-o", "--output", type=Path, default=None, help="Write DBLX output to this path.")

    parser = argparse.ArgumentParser(prog="dblhatch", description="Finite double category workbench.")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", parents=[common], help="Decide a property of a functor or double category.")
    check.add_argument("kind", choices=CHECK_KINDS)
    check.add_argument("input", help="DBLX file or corpus name.")
    check.add_argument(
        "--reformulations", action="store_true", help="Also check the 2-categorical reformulations."
    )

    construct = commands.add_parser("construct", parents=[common], help="Build a derived object.")
    construct.add_argument("op", choices=CONSTRUCT_OPS)
    construct.add_argument("inputs", nargs="+", help="DBLX files or corpus names.")

    whitehead = commands.add_parser(
        "whitehead", parents=[common], help="Pseudo inverse of a double biequivalence with unit and counit."
    )
    whitehead.add_argument("input", help="DBLX file or corpus name of the functor.")

    lift = commands.add_parser("lift", parents=[common], help="Solve a lifting problem.")
    lift.add_argument("i")
    lift.add_argument("p")
    lift.add_argument("top", help="Functor file, corpus name or 'id'.")
    lift.add_argument("bottom", help="Functor file, corpus name or 'id'.")

    corpus = commands.add_parser("corpus", parents=[common], help="List or export builtin objects.")
    corpus.add_argument("action", choices=("list", "export"))
    corpus.add_argument("name", nargs="?", default=None)

    return parser.parse_args(argv)


def _configure_logging(verbose: int) -> None:
    level = {0: get_settings().log_level, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    _configure_logging(args.verbose)
    budget = Budget(args.budget)
    runner = command_runners()[args.command]
    inputs = [value for key in ("input", "inputs", "i", "p", "top", "bottom", "name") for value in _as_list(args, key)]

    started = time.perf_counter()
    try:
        report, documents = runner(args, budget)
        code = EXIT_PASS if report.passed else EXIT_FAIL
    except BudgetExceeded as e:
        report = Report(command=args.command, inputs=inputs, error=str(e))
        report = report.model_copy(update={"notes": [f"visited {e.spent} of {e.limit} search nodes"]})
        documents, code = [], EXIT_ERROR
    except (DblhatchError, OSError) as e:
        report = Report(command=args.command, inputs=inputs, error=str(e))
        documents, code = [], EXIT_ERROR

    extra = {"budget": budget.limit, "seed": args.seed}
    if args.timing:
        extra["timing"] = round(time.perf_counter() - started, 6)
    report = report.model_copy(update=extra)

    if code == EXIT_ERROR:
        logging.warning(f"{args.command} failed: {report.error}")
        print(report.error, file=sys.stderr)
    if args.json:
        print(report.to_json())
    else:
        for document in documents:
            sys.stdout.write(document)
        if args.command in ("check", "whitehead") or code == EXIT_FAIL:
            print(report.to_text())
    return code


def _as_list(args: argparse.Namespace, key: str) -> list[str]:
    value = getattr(args, key, None)
    if value is None:
        return []
    return list(value) if isinstance(value, list) else [str(value)]


if __name__ == "__main__":
    sys.exit(main())
