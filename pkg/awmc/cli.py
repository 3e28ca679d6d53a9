"""Command-line front-end of the model checker.

Exit codes: 0 true or ok, 1 false or violation found, 2 undefined, 3 formula error,
4 invalid or unreadable model, 5 unknown world, 6 any other error.
"""
import argparse
import os
import sys
from typing import List, Optional

from awmc import error, logger
from awmc.core import Model
from awmc.formula.enumeration import count_formulas
from awmc.formula.parser import parse
from awmc.formula.syntax import to_text
from awmc.logic.axioms import FIVE, SCHEMAS
from awmc.logic.generation import generate_models
from awmc.logic.sweeps import SweepReport, aware_theorem_sweep, axiom_sweep, derived_theorem_sweep
from awmc.models.hms import HmsModel, validate_frame
from awmc.models.lattice_model import KripkeLatticeModel
from awmc.registration import is_registered, make
from awmc.serialization import correspondence_dumps, dumps, load, save, write_atomic
from awmc.transforms.checks import check_equivalence_h, check_equivalence_l, check_lemma1
from awmc.transforms.h_transform import h_transform
from awmc.transforms.l_transform import l_transform
from awmc.version import VERSION

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_UNDEFINED = 2
EXIT_PARSE_ERROR = 3
EXIT_INVALID = 4
EXIT_UNKNOWN_WORLD = 5
EXIT_OTHER = 6


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        logger.error("%s: %s", self.prog, message)
        sys.exit(EXIT_OTHER)


def load_model(ref: str, kind: Optional[str] = None) -> Model:
    """Loads a model file, or makes the registered model ``ref`` when no such file exists."""
    if not os.path.exists(ref) and is_registered(ref):
        model = make(ref)
        if kind is not None and model.kind != kind:
            raise error.ModelFileError(f"Expected a {kind} model, {ref} is a {model.kind} model")
        return model
    return load(ref, kind)


def correspondence_path(out_path: str) -> str:
    """The sidecar path for the state correspondence of an L-transform written to ``out_path``."""
    root, _ = os.path.splitext(out_path)
    return f"{root}.correspondence.json"


def cmd_check(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    verdict = model.check(args.world, args.formula)
    print(verdict)
    if verdict.is_true():
        return EXIT_OK
    return EXIT_FALSE if verdict.is_false() else EXIT_UNDEFINED


def cmd_transform(args: argparse.Namespace) -> int:
    if args.direction == "l":
        hms = load_model(args.input, "hms")
        assert isinstance(hms, HmsModel)
        klm, correspondence = l_transform(hms)
        text, sidecar_text = dumps(klm), correspondence_dumps(correspondence)
        sidecar = correspondence_path(args.output)
        write_atomic(sidecar, sidecar_text)
        try:
            write_atomic(args.output, text)
        except error.Error:
            os.remove(sidecar)
            raise
        print(
            f"wrote {args.output}: {len(klm.base.worlds)} worlds, "
            f"{len(klm.lattice)} restrictions; correspondence in {sidecar}"
        )
    else:
        klm = load_model(args.input, "kripke_lattice")
        assert isinstance(klm, KripkeLatticeModel)
        hms = h_transform(klm)
        report = validate_frame(hms.frame)
        if not report.ok:
            raise error.InvalidFrame(report)
        save(hms, args.output)
        print(f"wrote {args.output}: {len(hms.lattice.spaces)} spaces, {report.summary()}")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        model = load_model(args.input)
    except error.InvalidFrame as exc:
        for line in exc.report.lines():
            print(line)
        print(exc.report.summary())
        return EXIT_FALSE
    except error.InvalidKripkeLatticeModel as exc:
        for violation in exc.violations:
            print(
                f"VIOLATION {violation.property_name} AGENT {violation.agent} WORLD {violation.world}"
            )
        print(f"{len(exc.violations)} awareness map violations")
        return EXIT_FALSE
    if isinstance(model, HmsModel):
        print(validate_frame(model.frame).summary())
    else:
        assert isinstance(model, KripkeLatticeModel)
        relations = "equivalence" if model.base.is_equivalence_model else "not all equivalence"
        print(
            f"awareness maps valid on {len(model.worlds())} worlds; relations: {relations}"
        )
    return EXIT_OK


def cmd_equiv(args: argparse.Namespace) -> int:
    model = load_model(args.input)
    if isinstance(model, HmsModel):
        klm, correspondence = l_transform(model)
        lemma = check_lemma1(model, klm)
        if not lemma.ok:
            agent, world, other = lemma.counterexample
            print(f"CEX lemma AGENT {agent} WORLD {world} OTHER {other}")
            return EXIT_FALSE
        result = check_equivalence_l(model, args.depth, klm, correspondence)
        points, unit = len(list(correspondence.pairs())), "(state,world) pairs"
    else:
        assert isinstance(model, KripkeLatticeModel)
        result = check_equivalence_h(model, args.depth)
        points, unit = len(model.worlds()), "(world,state) pairs"
    formulas = count_formulas(len(model.atom_set), len(model.agents), args.depth)
    if not result.ok:
        print(f"CEX {result.counterexample}")
        print(f"1 counterexample after {result.checked} checks")
        return EXIT_FALSE
    print(f"0 counterexamples / {formulas} formulas × {points} {unit}")
    return EXIT_OK


def cmd_axioms(args: argparse.Namespace) -> int:
    models: List[KripkeLatticeModel] = list(
        generate_models(args.seed, args.atoms, args.worlds, args.agents, args.samples)
    )
    for ref in args.model or ():
        model = load_model(ref, "kripke_lattice")
        assert isinstance(model, KripkeLatticeModel)
        models.append(model)
    atom_pool = frozenset().union(*(model.atom_set for model in models))
    agent_pool = frozenset(agent for model in models for agent in model.agents)

    report = axiom_sweep(models, atom_pool, agent_pool, args.depth)
    derived = derived_theorem_sweep(models, args.depth, atom_pool, agent_pool)
    rules = aware_theorem_sweep(models, atom_pool, agent_pool, args.depth)
    five = axiom_sweep(models, atom_pool, agent_pool, args.depth, schemas=(FIVE,))

    combined = SweepReport()
    for part in (report, derived, rules, five):
        combined.extend(part)
    if args.report is not None:
        write_atomic(args.report, "\n".join(combined.lines()) + "\n")
    if args.lines:
        for line in combined.lines():
            print(line)

    parts = ["all schemas valid" if report.ok else report.summary()]
    if not derived.ok:
        parts.append(f"derived theorems: {derived.summary()}")
    if not rules.ok:
        parts.append(f"derived rules: {rules.summary()}")
    parts.append(f"schema5 counterexamples: {len(five.counterexamples)}")
    print("; ".join(parts))
    logger.info("swept %s schemas over %s models", len(SCHEMAS), len(models))
    return EXIT_OK if report.ok and derived.ok and rules.ok else EXIT_FALSE


def cmd_parse(args: argparse.Namespace) -> int:
    print(to_text(parse(args.formula)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of the ``awmc`` command."""
    parser = _ArgumentParser(
        prog="awmc", description="Model checker for knowledge and awareness."
    )
    parser.add_argument("--version", action="version", version=f"awmc {VERSION}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log errors only")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    check = commands.add_parser("check", help="evaluate a formula at a world or state")
    check.add_argument("model", help="model file or registered model id")
    check.add_argument("world", help="world reference `id@{a,b}` or state name")
    check.add_argument("formula")
    check.set_defaults(func=cmd_check)

    transform = commands.add_parser("transform", help="L- or H-transform a model file")
    transform.add_argument("direction", choices=("l", "h"))
    transform.add_argument("input")
    transform.add_argument("output")
    transform.set_defaults(func=cmd_transform)

    validate = commands.add_parser("validate", help="report structural violations")
    validate.add_argument("input")
    validate.set_defaults(func=cmd_validate)

    equiv = commands.add_parser("equiv", help="sweep formulas across a transform")
    equiv.add_argument("input")
    equiv.add_argument("--depth", type=int, default=2)
    equiv.set_defaults(func=cmd_equiv)

    axioms = commands.add_parser("axioms", help="sweep axiom schemas over random models")
    axioms.add_argument("--seed", type=int, help="corpus seed, drawn and logged if omitted")
    axioms.add_argument("--samples", type=int, default=20)
    axioms.add_argument("--depth", type=int, default=1)
    axioms.add_argument("--atoms", type=int, default=2)
    axioms.add_argument("--worlds", type=int, default=3)
    axioms.add_argument("--agents", type=int, default=2)
    axioms.add_argument("--model", action="append", help="also sweep this Kripke lattice model")
    axioms.add_argument("--report", help="write the line-oriented report to this file")
    axioms.add_argument("--lines", action="store_true", help="print the line-oriented report")
    axioms.set_defaults(func=cmd_axioms)

    parse_cmd = commands.add_parser("parse", help="print the normalized formula")
    parse_cmd.add_argument("formula")
    parse_cmd.set_defaults(func=cmd_parse)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logger.set_level(logger.DEBUG)
    elif args.quiet:
        logger.set_level(logger.ERROR)
    try:
        return args.func(args)
    except (error.FormulaSyntaxError, error.UnknownAtom, error.UnknownAgent) as exc:
        logger.error("%s", exc)
        return EXIT_PARSE_ERROR
    except error.UnknownWorld as exc:
        logger.error("%s", exc)
        return EXIT_UNKNOWN_WORLD
    except (error.ModelError, error.ModelFileError) as exc:
        logger.error("%s", exc)
        return EXIT_INVALID
    except error.Error as exc:
        logger.error("%s", exc)
        return EXIT_OTHER


if __name__ == "__main__":
    raise SystemExit(main())
