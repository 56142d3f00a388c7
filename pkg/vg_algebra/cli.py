"""Command line front end, installed as ``vg``.

Arrangements are given as a catalog name, a path to a JSON document or
``-`` for standard input. Hyperplanes and chambers are numbered from 1
in every report.
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from vg_algebra import acceptance
from vg_algebra.arrangement import (
    Arrangement,
    arrangement_rank,
    betti,
    chambers,
    char_poly,
    char_poly_coefficients,
    is_generic_codim2,
    tope_graph,
)
from vg_algebra.catalog import catalog_names, load_entry
from vg_algebra.errors import InvariantViolation, UsageException, VGException
from vg_algebra.exactla import FieldSpec
from vg_algebra.keys import EnvDefs, ReportDefs
from vg_algebra.loader import ArrangementLoader
from vg_algebra.omatroid import (
    degree_profile,
    graph_isomorphic,
    graph_to_dot,
    graph_to_json,
    lattices_isomorphic,
    signed_circuits,
    tope_graph_necessary_check,
)
from vg_algebra.reconstruct import (
    EXHAUSTIVE,
    RANDOM,
    aut_groups,
    char2_graded_comparison,
    conjecture_harness_filtered,
    conjecture_harness_graded,
    recover_and_compare,
    recover_tope_graph_from_heav,
)
from vg_algebra.reports import (
    dumps,
    envelope,
    harness_report_to_json,
    recovered_circuits_to_json,
)
from vg_algebra.utils import default_seed, parse_rational, sign_vector_str
from vg_algebra.vgalgebra import gheav_bruteforce, gheav_structural, sqzero

log = logging.getLogger(__name__)

TEXT, JSON, DOT = "text", "json", "dot"
COMPARISONS = ("lattice", "topegraph", "filtered-vg", "graded-vg-invariants",
               "char2-graded")
NUMBER_WORDS = ("none", "one", "two", "three", "four", "five", "six", "seven",
                "eight", "nine", "ten")


class UsageArgumentParser(argparse.ArgumentParser):
    """Argument parser whose errors map to the usage exit code."""

    def error(self, message: str):
        raise UsageException(f"{self.prog}: {message}")


def read_arrangement(source: str, verify_catalog: bool = True) -> Arrangement:
    """Resolve a catalog name, a file path or '-' to an arrangement.

    Raises:
        UsageException: if the source cannot be read or is invalid
    """
    if source == "-":
        return ArrangementLoader().load_text(sys.stdin.read(), "<stdin>")
    if source in catalog_names():
        return load_entry(source, verify=verify_catalog).arrangement
    path = Path(source)
    if not path.is_file():
        raise UsageException(
            f"{source!r} is neither a catalog entry nor a readable file")
    return ArrangementLoader().load_text(path.read_text(encoding="utf-8"), source)


def field_from(args: argparse.Namespace) -> FieldSpec:
    return FieldSpec.parse(args.field, allow_char2=args.allow_char2)


def emit(args: argparse.Namespace, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        log.info("wrote %s", args.output)
    else:
        sys.stdout.write(text)


def render(args: argparse.Namespace, document: Dict[str, Any],
           lines: Sequence[str]) -> None:
    if args.format == JSON:
        emit(args, dumps(document))
    elif args.format == DOT:
        raise UsageException(f"{args.command} has no DOT output")
    else:
        emit(args, "".join(f"{line}\n" for line in lines))


def count_words(count: int) -> str:
    return NUMBER_WORDS[count] if count < len(NUMBER_WORDS) else str(count)


def describe_profiles(first: Dict[int, int], second: Dict[int, int]) -> str:
    """Name the largest degree whose vertex counts differ."""
    degree = max(d for d in set(first) | set(second)
                 if first.get(d, 0) != second.get(d, 0))
    c1, c2 = first.get(degree, 0), second.get(degree, 0)
    if c1 == 0:
        noun = "vertex" if c2 == 1 else "vertices"
        return f"none vs {count_words(c2)} degree-{degree} {noun}"
    noun = "vertex" if c1 == 1 else "vertices"
    return f"{count_words(c1)} degree-{degree} {noun} vs {count_words(c2)}"


def cmd_chambers(args: argparse.Namespace) -> None:
    a = read_arrangement(args.arrangement, not args.skip_catalog_check)
    cs = chambers(a)
    signs = [sign_vector_str(sv) for sv in cs.chambers]
    document = envelope("chambers", {"count": len(cs), "chambers": signs})
    lines = [f"{len(cs)} chambers"]
    lines += [f"{k + 1} {sv}" for k, sv in enumerate(signs)]
    render(args, document, lines)


def cmd_charpoly(args: argparse.Namespace) -> None:
    a = read_arrangement(args.arrangement, not args.skip_catalog_check)
    coefficients = list(char_poly_coefficients(a))
    document = envelope("charpoly", {
        "coefficients": coefficients,
        "betti": list(betti(a)),
    })
    lines = [str(char_poly(a).as_expr()), f"betti {list(betti(a))}"]
    render(args, document, lines)


def cmd_topegraph(args: argparse.Namespace) -> None:
    a = read_arrangement(args.arrangement, not args.skip_catalog_check)
    graph = tope_graph(a)
    if args.format == DOT:
        emit(args, graph_to_dot(graph, a.name or "tope"))
        return
    verdict = tope_graph_necessary_check(graph, a.n, arrangement_rank(a))
    profile = degree_profile(graph)
    document = envelope("topegraph", graph_to_json(graph))
    document["degree_profile"] = {str(d): c for d, c in profile.items()}
    document["necessary_check"] = verdict.to_json()
    lines = [f"{graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges",
             "degrees " + ", ".join(f"{d}: {c}" for d, c in sorted(profile.items())),
             f"necessary checks {'pass' if verdict.passed else 'fail'}"]
    lines += [f"  {reason}" for reason in verdict.reasons]
    render(args, document, lines)


def cmd_circuits(args: argparse.Namespace) -> None:
    a = read_arrangement(args.arrangement, not args.skip_catalog_check)
    strings = signed_circuits(a).sorted_strings()
    document = envelope("circuits", {ReportDefs.CIRCUITS: strings})
    render(args, document, [f"{len(strings)} signed circuits"] + strings)


def cmd_gheav(args: argparse.Namespace) -> None:
    a = read_arrangement(args.arrangement, not args.skip_catalog_check)
    field = field_from(args)
    functions = gheav_structural(a, field) if args.structural \
        else gheav_bruteforce(a, field)
    rows = ["".join(field.to_str(v) for v in f.values) for f in functions]
    document = envelope("gheav", {
        ReportDefs.FIELD: field.name,
        ReportDefs.ARRANGEMENT_HASH: a.hash,
        ReportDefs.VALUES: rows,
    })
    render(args, document,
           [f"{len(rows)} generalized Heaviside functions"] + rows)


def cmd_sqzero(args: argparse.Namespace) -> None:
    a = read_arrangement(args.arrangement, not args.skip_catalog_check)
    field = field_from(args)
    lines = [[field.to_str(x) for x in line] for line in sqzero(a, field)]
    document = envelope("sqzero", {
        ReportDefs.FIELD: field.name,
        ReportDefs.ARRANGEMENT_HASH: a.hash,
        "lines": lines,
    })
    noun = "points" if field.characteristic == 2 else "lines"
    render(args, document, [f"{len(lines)} square-zero {noun}"] +
           [" ".join(line) for line in lines])


def cmd_autgroups(args: argparse.Namespace) -> None:
    a = read_arrangement(args.arrangement, not args.skip_catalog_check)
    groups = aut_groups(a, field_from(args))
    document = envelope("autgroups", {
        "graph_order": groups.graph_order,
        "filtered_order": groups.filtered_order,
        "set_order": groups.set_order,
        "generic_codim2": groups.generic,
    })
    lines = [f"Aut(tope graph) = {groups.graph_order}",
             f"Aut(filtered) = {groups.filtered_order}",
             f"Aut(chambers) = {groups.set_order}"]
    render(args, document, lines)


def _harness_lines(document: Dict[str, Any]) -> List[str]:
    lines = [document[ReportDefs.HEADER]]
    lines += [f"{key}: {value}" for key, value in document[ReportDefs.COUNTS].items()]
    return lines


def cmd_reconstruct_filtered(args: argparse.Namespace) -> None:
    a = read_arrangement(args.arrangement, not args.skip_catalog_check)
    report = conjecture_harness_filtered(a, field_from(args), args.mode, args.seed,
                                         args.trials, args.jobs)
    document = harness_report_to_json(report)
    render(args, document, _harness_lines(document))


def cmd_reconstruct_graded(args: argparse.Namespace) -> None:
    a = read_arrangement(args.arrangement, not args.skip_catalog_check)
    report = conjecture_harness_graded(a, field_from(args), args.mode, args.seed,
                                       args.trials)
    document = harness_report_to_json(report)
    render(args, document, _harness_lines(document))


def cmd_recover_circuits(args: argparse.Namespace) -> None:
    a = read_arrangement(args.arrangement, not args.skip_catalog_check)
    field = field_from(args)
    scalars = None
    if args.scalars:
        scalars = [parse_rational(x.strip()) for x in args.scalars.split(",")]
    verdict = recover_and_compare(a, field, scalars)
    document = recovered_circuits_to_json(verdict.recovered, field)
    document["equivalent"] = verdict.equivalent
    document["reorientation"] = (list(verdict.reorientation)
                                 if verdict.equivalent else None)
    lines = verdict.recovered.circuits.sorted_strings()
    lines.append("reorientation-equivalent to the signed circuits"
                 if verdict.equivalent else "NOT equivalent to the signed circuits")
    render(args, document, lines)


def compare_lattice(a1: Arrangement, a2: Arrangement) -> Dict[str, Any]:
    perm = lattices_isomorphic(a1, a2)
    if perm is None:
        return {"isomorphic": False, "message": "NOT isomorphic"}
    mapping = ", ".join(f"{i + 1}->{j + 1}" for i, j in enumerate(perm))
    return {"isomorphic": True, "message": f"isomorphic: {mapping}",
            "permutation": [j + 1 for j in perm]}


def compare_topegraph(a1: Arrangement, a2: Arrangement) -> Dict[str, Any]:
    g1, g2 = tope_graph(a1), tope_graph(a2)
    p1, p2 = degree_profile(g1), degree_profile(g2)
    if p1 != p2:
        return {"isomorphic": False,
                "message": "NOT isomorphic: degree profiles differ "
                           f"({describe_profiles(p1, p2)})"}
    if graph_isomorphic(g1, g2) is None:
        return {"isomorphic": False, "message": "NOT isomorphic"}
    return {"isomorphic": True, "message": "isomorphic"}


def compare_filtered(a1: Arrangement, a2: Arrangement,
                     field: FieldSpec) -> Dict[str, Any]:
    """Decide filtered isomorphism where the codim-2 generic pipeline
    applies; refuse otherwise."""
    if a1 == a2:
        return {"isomorphic": True, "message": "isomorphic: identical arrangements"}
    counts = (len(gheav_bruteforce(a1, field)), len(gheav_bruteforce(a2, field)))
    if counts[0] != counts[1]:
        return {"isomorphic": False,
                "message": f"NOT isomorphic: {counts[0]} vs {counts[1]} generalized "
                           "Heaviside functions"}
    if not (is_generic_codim2(a1) and is_generic_codim2(a2)):
        return {"isomorphic": None,
                "message": "undecided: the recovery pipeline needs codim-2 generic "
                           "input; use reconstruct-filtered"}
    g1 = recover_tope_graph_from_heav(a1, field)
    g2 = recover_tope_graph_from_heav(a2, field)
    if graph_isomorphic(g1, g2) is None:
        return {"isomorphic": False,
                "message": "NOT isomorphic: recovered tope graphs differ"}
    return {"isomorphic": True, "message": "isomorphic: recovered tope graphs agree"}


def compare_graded(a1: Arrangement, a2: Arrangement,
                   field: FieldSpec) -> Dict[str, Any]:
    """Graded invariants; can only prove non-isomorphism."""
    b1, b2 = betti(a1), betti(a2)
    s1, s2 = len(sqzero(a1, field)), len(sqzero(a2, field))
    sizes = [sorted(len(s) for s in signed_circuits(a).supports()) for a in (a1, a2)]
    result: Dict[str, Any] = {
        "betti": [list(b1), list(b2)],
        "sqzero_lines": [s1, s2],
        "circuit_support_sizes": sizes,
    }
    if b1 != b2:
        result["isomorphic"] = False
        result["message"] = f"graded VG algebras non-isomorphic: Betti {list(b1)} " \
                            f"vs {list(b2)}"
    elif s1 != s2:
        result["isomorphic"] = False
        result["message"] = "graded VG algebras non-isomorphic: square-zero line " \
                            f"counts {s1} vs {s2}"
    else:
        result["isomorphic"] = None
        result["message"] = "invariants agree: Betti numbers and square-zero counts " \
                            "coincide (not a proof of isomorphism)"
    return result


def compare_char2(a1: Arrangement, a2: Arrangement) -> Dict[str, Any]:
    comparison = char2_graded_comparison(a1, a2)
    verdict = "coincide" if comparison.coincide else "differ"
    circuits = "equivalent" if comparison.circuits_equivalent else "inequivalent"
    return {
        "betti": [list(b) for b in comparison.betti],
        "graded_dims": [list(d) for d in comparison.graded_dims],
        "sqzero_points": list(comparison.sqzero_points),
        "circuits_equivalent": comparison.circuits_equivalent,
        "isomorphic": None if comparison.coincide else False,
        "message": f"graded invariants over F_2 {verdict}; signed circuits {circuits}",
    }


def cmd_compare(args: argparse.Namespace) -> None:
    check = not args.skip_catalog_check
    a1 = read_arrangement(args.first, check)
    a2 = read_arrangement(args.second, check)
    if args.what == "lattice":
        result = compare_lattice(a1, a2)
    elif args.what == "topegraph":
        result = compare_topegraph(a1, a2)
    elif args.what == "filtered-vg":
        result = compare_filtered(a1, a2, field_from(args))
    elif args.what == "graded-vg-invariants":
        result = compare_graded(a1, a2, field_from(args))
    else:
        result = compare_char2(a1, a2)
    document = envelope("compare", {"what": args.what, **result})
    render(args, document, [result["message"]])


def cmd_catalog(args: argparse.Namespace) -> None:
    if not args.name:
        names = catalog_names()
        render(args, envelope("catalog", {"names": names}), names)
        return
    entry = load_entry(args.name, verify=not args.skip_catalog_check)
    emit(args, dumps(entry.to_document()))


def cmd_verify(args: argparse.Namespace) -> None:
    modules = [] if args.all else args.modules
    report = acceptance.run(modules, args.seed)
    lines = [f"criterion {r['criterion']} [{r['module']}] {r['title']}: "
             f"{'pass' if r[ReportDefs.PASSED] else 'FAIL'}" for r in report.results]
    render(args, report.to_json(), lines)
    failure = report.first_failure
    if failure is not None:
        raise InvariantViolation(
            f"criterion {failure['criterion']} ({failure['title']}) failed: "
            f"{failure['message']}")


def _add_common(parser: argparse.ArgumentParser, field: bool = False,
                formats: Sequence[str] = (TEXT, JSON)) -> None:
    parser.add_argument("--format", choices=formats, default=TEXT,
                        help="Output format")
    parser.add_argument("-o", "--output", dest="output", type=Path,
                        help="File to write to, stdout when omitted")
    parser.add_argument("--skip-catalog-check", action="store_true", default=False,
                        help="Do not re-verify catalog entries when loading them")
    if field:
        parser.add_argument("--field", default="Q", help="Q (default) or Fp:<p>")
        parser.add_argument("--allow-char2", action="store_true", default=False,
                            help="Permit characteristic 2 where it is gated")


def build_parser() -> argparse.ArgumentParser:
    parser = UsageArgumentParser(
        prog="vg", description="Exact computations with Varchenko-Gelfand algebras")
    parser.add_argument("--log-level", dest="log_level",
                        default=os.environ.get(EnvDefs.LOG_LEVEL, "WARNING"),
                        help=f"Logging level, defaults to ${EnvDefs.LOG_LEVEL} or "
                        "WARNING")
    commands = parser.add_subparsers(dest="command", parser_class=UsageArgumentParser)
    commands.required = True

    def single(name: str, handler: Callable, help_text: str, field: bool = False,
               formats: Sequence[str] = (TEXT, JSON)) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("arrangement", help="Catalog name, JSON file or - for stdin")
        _add_common(sub, field, formats)
        sub.set_defaults(handler=handler)
        return sub

    single("chambers", cmd_chambers, "List chambers as sign vectors")
    single("charpoly", cmd_charpoly, "Characteristic polynomial and Betti numbers")
    single("topegraph", cmd_topegraph, "Tope graph with necessary checks",
           formats=(TEXT, JSON, DOT))
    single("circuits", cmd_circuits, "Signed circuits")
    gheav = single("gheav", cmd_gheav, "Generalized Heaviside functions", field=True)
    gheav.add_argument("--structural", action="store_true", default=False,
                       help="Enumerate structurally instead of by search")
    single("sqzero", cmd_sqzero, "Square-zero lines of degree one", field=True)
    single("autgroups", cmd_autgroups, "Automorphism group orders", field=True)

    for name, handler, help_text in (
        ("reconstruct-filtered", cmd_reconstruct_filtered,
         "Generalized tope graph experiment"),
        ("reconstruct-graded", cmd_reconstruct_graded,
         "Signed circuit recovery experiment"),
    ):
        sub = single(name, handler, help_text, field=True)
        sub.add_argument("--mode", choices=(EXHAUSTIVE, RANDOM), default=EXHAUSTIVE)
        sub.add_argument("--seed", type=int, default=None,
                         help=f"Random seed, defaults to ${EnvDefs.SEED} or 0")
        sub.add_argument("--trials", type=int, default=100)
        if name == "reconstruct-filtered":
            sub.add_argument("--jobs", type=int, default=1,
                             help="Worker processes; results do not depend on it")

    recover = single("recover-circuits", cmd_recover_circuits,
                     "Recover signed circuits from square-zero generators",
                     field=True)
    recover.add_argument("--scalars", help="Comma separated unit scalars, one per line")

    compare = commands.add_parser("compare", help="Compare two arrangements")
    compare.add_argument("first")
    compare.add_argument("second")
    compare.add_argument("--what", choices=COMPARISONS, required=True)
    _add_common(compare, field=True)
    compare.set_defaults(handler=cmd_compare)

    catalog = commands.add_parser("catalog", help="List or print catalog entries")
    catalog.add_argument("name", nargs="?")
    _add_common(catalog)
    catalog.set_defaults(handler=cmd_catalog)

    verify = commands.add_parser("verify", help="Run the acceptance suites")
    verify.add_argument("modules", nargs="*", help=", ".join(acceptance.MODULES))
    verify.add_argument("--all", action="store_true", default=False)
    verify.add_argument("--seed", type=int, default=None,
                        help=f"Random seed, defaults to ${EnvDefs.SEED} or 0")
    _add_common(verify)
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit code: 0 on success, 1
    on usage errors, 2 on domain errors, 3 on invariant violations."""
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=args.log_level.upper(),
                            format="%(levelname)s %(name)s: %(message)s",
                            stream=sys.stderr)
        if getattr(args, "seed", 0) is None:
            args.seed = default_seed()
        if getattr(args, "jobs", 1) < 1:
            raise UsageException("--jobs must be at least 1")
        log.debug("arguments: %s", vars(args))
        args.handler(args)
    except VGException as error:
        print(f"error: {error}", file=sys.stderr)
        return error.exit_code
    except (ValueError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return UsageException.exit_code
    return 0


def run() -> None:
    sys.exit(main())
