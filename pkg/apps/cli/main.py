"""
tropws command line.

    tropws gb FILE [--order grevlex|lex]
    tropws gfan FILE | universal FILE | trop FILE | prevariety FILE | fvector FILE
    tropws tbasis FILE | tbasis-check FILE CANDIDATES | witness FILE --weight 1,0,0
    tropws bounds eq2|eq3|eq4|eq5|prop|lambda0|constant|pluecker|gbsize [flags]
    tropws lambda -d D -n N [--search] | lambda --table --max-n N --max-d D [--search]
    tropws grassmannian -D D -N N [--three-term]
    tropws fixtures [--quick] [--category NAME]

Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal inconsistency.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

import argparse
import time
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel

from apps.cli.schemas import (
    BoundChain,
    BoundReportModel,
    ConeReport,
    FixtureCheck,
    FixturesReport,
    FVectorReport,
    GroebnerBasisReport,
    GroebnerFanReport,
    LambdaReport,
    LambdaTableReport,
    PlueckerIdealReport,
    TropicalBasisCheckReport,
    TropicalBasisReport,
    TropicalReport,
    UniversalBasisReport,
    WitnessReport,
)
from configs.config import config
from tools import bounds
from tools.cones import Cone
from tools.errors import DomainError, InternalInconsistencyError, WorkbenchError
from tools.gfan import groebner_fan
from tools.grassmannian import pluecker_ideal
from tools.ideal_io import format_ideal, load_ideal, load_polynomials
from tools.logger import StageType
from tools.logging_middleware import TraceContext
from tools.polytopes import lambda_enumerate, lambda_search, lambda_table
from tools.ring import display_weight, grevlex_order, initial_form, lex_order, parse_weight
from tools.tropical import (
    TropicalComplex,
    classify_groebner_fan,
    compute_tropical_basis,
    find_witness,
    is_tropical_basis,
    tropical_prevariety,
    tropical_variety,
    variety_fvector_check,
)


EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

Rendered = Tuple[BaseModel, str]


# =============================================================================
# Helpers
# =============================================================================

def _threads(args: argparse.Namespace) -> int:
    return args.threads or config.threads()


def _gfan_budget(args: argparse.Namespace) -> Optional[int]:
    return args.budget or config.get("gfan.max_cones")


def _cone_report(C: Cone, convention: str) -> ConeReport:
    """Cones are stored in the min convention; max negates inequalities and the interior point."""
    sign = -1 if convention == "max" else 1
    return ConeReport(
        dim=C.dim,
        lineality_dim=C.lineality_dim,
        ineqs=[[sign * a for a in row] for row in C.inequalities],
        eqs=[list(row) for row in C.equations],
        interior=display_weight(C.interior, convention)
    )


def _input_weight(text: str, n: int, convention: str):
    w = parse_weight(text, n)
    return tuple(-x for x in w) if convention == "max" else w


def _fan_lines(T: TropicalComplex) -> List[str]:
    return [
        f"support_empty: {str(T.is_empty()).lower()}",
        f"dim: {T.dim()}",
        "f_vector: " + " ".join(str(v) for v in T.f_vector)
    ]


def _tropical_report(ring, T: TropicalComplex, convention: str) -> TropicalReport:
    return TropicalReport(
        ring=list(ring.variables),
        source=T.source,
        support_empty=T.is_empty(),
        dim=T.dim(),
        f_vector=list(T.f_vector),
        refinement_f_vector=list(T.refinement_f_vector) if T.refinement_f_vector is not None else None,
        maximal=list(T.fan.maximal),
        cones=[_cone_report(C, convention) for C in T.fan.cones]
    )


# =============================================================================
# Verbs
# =============================================================================

def cmd_gb(args: argparse.Namespace) -> Rendered:
    I = load_ideal(args.file)
    order = lex_order(I.n) if args.order == "lex" else grevlex_order(I.n)
    G = I.basis(order)
    report = GroebnerBasisReport(
        ring=list(I.ring.variables),
        order=args.order,
        basis=G.to_strings(),
        leading=[I.ring.format_monomial(m) for m in G.leading],
        degree=G.degree()
    )
    return report, "\n".join(report.basis)


def cmd_gfan(args: argparse.Namespace) -> Rendered:
    I = load_ideal(args.file)
    fan = groebner_fan(I, budget=_gfan_budget(args), threads=_threads(args))
    report = GroebnerFanReport(
        ring=list(I.ring.variables),
        maximal_cones=len(fan.maximal_cones),
        f_vector=list(fan.fan.f_vector()),
        cones=[_cone_report(C, args.convention) for C in fan.maximal_cones],
        bases=[G.to_strings() for G in fan.bases]
    )
    lines = [f"maximal_cones: {report.maximal_cones}", "f_vector: " + " ".join(map(str, report.f_vector))]
    for i, (C, G) in enumerate(zip(report.cones, report.bases)):
        lines.append(f"cone {i}: interior ({', '.join(C.interior)})")
        lines.extend(f"  {g}" for g in G)
    return report, "\n".join(lines)


def cmd_universal(args: argparse.Namespace) -> Rendered:
    I = load_ideal(args.file)
    universal = groebner_fan(I, budget=_gfan_budget(args), threads=_threads(args)).universal_basis()
    report = UniversalBasisReport(
        ring=list(I.ring.variables),
        basis=[f.to_string() for f in universal],
        degree=max(f.degree() for f in universal),
        size=len(universal)
    )
    return report, "\n".join(report.basis)


def cmd_trop(args: argparse.Namespace) -> Rendered:
    I = load_ideal(args.file)
    fan = groebner_fan(I, budget=_gfan_budget(args), threads=_threads(args))
    T = tropical_variety(I, fan, threads=_threads(args))
    return _tropical_report(I.ring, T, args.convention), "\n".join(_fan_lines(T))


def cmd_prevariety(args: argparse.Namespace) -> Rendered:
    ring, polys = load_polynomials(args.file)
    T = tropical_prevariety(polys)
    return _tropical_report(ring, T, args.convention), "\n".join(_fan_lines(T))


def cmd_tbasis_check(args: argparse.Namespace) -> Rendered:
    I = load_ideal(args.file)
    _, candidates = load_polynomials(args.candidates)
    fan = groebner_fan(I, budget=_gfan_budget(args), threads=_threads(args))
    classified = classify_groebner_fan(I, fan, threads=_threads(args))
    check = is_tropical_basis(I, candidates, classified)
    certificate = display_weight(check.certificate, args.convention) if check.certificate else None
    report = TropicalBasisCheckReport(is_tropical_basis=check.result, certificate=certificate)
    text = "true" if check.result else f"false\ncertificate: ({', '.join(certificate)})"
    return report, text


def cmd_tbasis(args: argparse.Namespace, trace_id: Optional[str] = None) -> Rendered:
    I = load_ideal(args.file)
    result = compute_tropical_basis(I, threads=_threads(args), trace_id=trace_id, budget=args.budget)
    T = result.variety
    chain = result.bound_chain
    report = TropicalBasisReport(
        ring=list(I.ring.variables),
        support_empty=T.is_empty(),
        dim=T.dim(),
        f_vector=list(T.f_vector),
        cones=[_cone_report(C, args.convention) for C in T.fan.cones],
        basis=[f.to_string() for f in result.basis],
        degree=result.degree,
        universal_degree=result.universal_degree,
        witnesses=[f.to_string() for f in result.witnesses],
        alpha=result.alpha,
        rounds=result.rounds,
        bound_chain=BoundChain(
            observed=chain["observed"],
            max_degU_alpha_n=chain["max_degU_alpha_n"],
            n_degU=chain["n_degU"],
            eq3=str(chain["eq3"]) if chain["eq3"] is not None else None
        )
    )
    lines = report.basis + [
        f"degree: {report.degree}",
        f"bound chain: {chain['observed']} <= {chain['max_degU_alpha_n']} <= {chain['n_degU']}"
        + (f" <= {chain['eq3']}" if chain["eq3"] is not None else "")
    ]
    return report, "\n".join(lines)


def cmd_witness(args: argparse.Namespace) -> Rendered:
    I = load_ideal(args.file)
    w = _input_weight(args.weight, I.n, args.convention)
    f = find_witness(I, w, config.get("groebner.degree_cap_override"))
    report = WitnessReport(
        weight=display_weight(w, args.convention),
        witness=f.to_string(),
        initial_form=initial_form(w, f).to_string(),
        degree=f.degree()
    )
    return report, report.witness


def _scalar_bound(name: str, inputs: Dict[str, int], value) -> Rendered:
    report = BoundReportModel(name=name, inputs=inputs, value=str(value))
    return report, str(value)


def _chain_bound(report: bounds.BoundReport) -> Rendered:
    data = report.to_dict()
    model = BoundReportModel(
        name=data["name"],
        inputs=data["inputs"],
        value=str(report.last()),
        values=data["values"],
        chain=data["chain"],
        consistent=data["consistent"]
    )
    text = " <= ".join(str(v) for v in report.chain_values())
    return model, text


BOUND_VERBS: Dict[str, Tuple[Tuple[str, ...], Callable[[argparse.Namespace], Rendered]]] = {
    "eq2": (("d", "n", "r"), lambda a: _scalar_bound(
        "eq2", {"d": a.d, "n": a.n, "r": a.r}, bounds.eq2_mayr_ritscher(a.d, a.n, a.r))),
    "eq3": (("U", "a", "n", "d", "r"), lambda a: _chain_bound(
        bounds.eq3_tropical_basis_bound(a.U, a.a, a.n, a.d, a.r))),
    "eq4": (("d", "n", "j"), lambda a: _scalar_bound(
        "eq4", {"d": a.d, "n": a.n, "j": a.j}, bounds.eq4_unimodular_fvector(a.d, a.n, a.j))),
    "eq5": (("d", "n", "j"), lambda a: _scalar_bound(
        "eq5", {"d": a.d, "n": a.n, "j": a.j}, bounds.eq5_hypersurface_bound(a.d, a.n, a.j))),
    "prop": (("s", "d", "n", "j"), lambda a: _scalar_bound(
        "prop", {"s": a.s, "d": a.d, "n": a.n, "j": a.j}, bounds.prop_variety_fvector_bound(a.s, a.d, a.n, a.j))),
    "lambda0": (("s", "d", "n"), lambda a: _scalar_bound(
        "lambda0", {"s": a.s, "d": a.d, "n": a.n}, bounds.lambda0_vertex_bound(a.s * a.d, a.n))),
    "pluecker": (("D", "N"), lambda a: _chain_bound(bounds.pluecker_degree_bound(a.D, a.N))),
    "gbsize": (("e", "n"), lambda a: _scalar_bound(
        "gbsize", {"e": a.e, "n": a.n}, bounds.gb_cardinality_bound(a.e, a.n))),
    "constant": (("s", "d", "n", "j"), lambda a: _chain_bound(bounds.constant_coefficient_fvector_bound(
        a.s, a.d, a.n, a.j, a.budget or config.get("lambda.budget")))),
}

BOUND_FLAG_HELP = {
    "d": "degree", "n": "number of variables", "r": "Krull dimension", "s": "number of polynomials",
    "j": "cell dimension", "e": "basis degree", "U": "universal basis degree", "a": "saturation exponent",
    "D": "plane dimension", "N": "ambient dimension",
}


def cmd_bounds(args: argparse.Namespace) -> Rendered:
    _, compute = BOUND_VERBS[args.bound]
    return compute(args)


def cmd_lambda(args: argparse.Namespace) -> Rendered:
    key = "lambda.search_budget" if args.search else "lambda.budget"
    budget = args.budget or config.get(key)
    if args.table:
        from eval.report_generator import ReportGenerator

        table = lambda_table(args.max_n, args.max_d, budget, search=args.search)
        rows = [LambdaReport(d=d, n=n, values=list(r.values), exact=r.exact, nodes=r.nodes,
                             frontier=r.frontier, witnesses=[[list(v) for v in w] for w in r.witnesses])
                for (n, d), r in sorted(table.items())]
        report = LambdaTableReport(entries=rows)
        return report, ReportGenerator.generate_lambda_csv(table).rstrip("\n")

    if args.d is None or args.n is None:
        raise DomainError("lambda needs -d and -n, or --table")
    if args.search:
        result = lambda_search(args.d, args.n, budget, seed=args.seed)
    else:
        result = lambda_enumerate(args.d, args.n, budget)
    report = LambdaReport(
        d=result.d, n=result.n, values=list(result.values), exact=result.exact,
        nodes=result.nodes, frontier=result.frontier,
        witnesses=[[list(v) for v in w] for w in result.witnesses]
    )
    status = "exact" if result.exact else "lower bound"
    return report, " ".join(str(v) for v in result.values) + f" ({status})"


def cmd_fvector(args: argparse.Namespace) -> Rendered:
    I = load_ideal(args.file)
    fan = groebner_fan(I, budget=_gfan_budget(args), threads=_threads(args))
    check = variety_fvector_check(I, fan, threads=_threads(args))
    bound_by_dim = {str(k): v for k, v in check.bound_by_dim.items()}
    report = FVectorReport(
        ring=list(I.ring.variables),
        variety_f_vector=list(check.variety),
        prevariety_refinement_f_vector=list(check.prevariety),
        bound_by_dim=bound_by_dim,
        within_bound=check.within_bound
    )
    text = "\n".join([
        "variety: " + " ".join(map(str, check.variety)),
        "prevariety refinement: " + " ".join(map(str, check.prevariety)),
        "bound: " + " ".join(map(str, check.bound_by_dim.values())),
        f"within bound: {str(check.within_bound).lower()}"
    ])
    return report, text


def cmd_grassmannian(args: argparse.Namespace) -> Rendered:
    I = pluecker_ideal(args.D, args.N, three_term=args.three_term)
    report = PlueckerIdealReport(
        D=args.D, N=args.N, three_term=args.three_term,
        ring=list(I.ring.variables),
        relations=I.to_strings()
    )
    return report, format_ideal(I.ring, list(I.generators)).rstrip("\n")


def cmd_fixtures(args: argparse.Namespace, trace_id: Optional[str] = None) -> Rendered:
    from eval.fixtures import FixtureRunner
    from eval.test_cases import get_all_test_cases, get_test_cases_by_category

    cases = get_test_cases_by_category(args.category) if args.category else get_all_test_cases()
    if args.quick:
        cases = [c for c in cases if not c.heavy]
    if not cases:
        raise DomainError(f"no fixture cases for category {args.category!r}")
    raw = FixtureRunner(verbose=False, trace_id=trace_id).run_suite(cases)
    results = [
        FixtureCheck(
            name=r["name"], category=r["category"], passed=r["passed"], checks=r["checks"],
            details={k: (v if isinstance(v, (int, str, bool, list)) else str(v)) for k, v in r["details"].items()},
            error=r["error"]
        )
        for r in raw["results"]
    ]
    report = FixturesReport(
        total=raw["summary"]["total_cases"],
        passed=raw["summary"]["passed"],
        failed=raw["summary"]["failed"],
        cases=results
    )
    lines = [f"{'case':<32} {'category':<8} result"]
    lines.extend(f"{c.name:<32} {c.category:<8} {'PASS' if c.passed else 'FAIL'}" for c in results)
    lines.append(f"passed {report.passed}/{report.total}")
    return report, "\n".join(lines)


# =============================================================================
# Parser and dispatch
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--convention", choices=["min", "max"], default=None,
                        help="weight display convention (default from config)")
    common.add_argument("--budget", type=int, default=None,
                        help="maximal-cone ceiling (fan verbs), node ceiling (lambda) or proposal budget (lambda --search)")
    common.add_argument("--threads", type=int, default=None, help="worker threads (default TROPWS_THREADS)")

    parser = argparse.ArgumentParser(prog="tropws", description="Exact tropical geometry workbench")
    verbs = parser.add_subparsers(dest="verb", required=True)

    gb = verbs.add_parser("gb", parents=[common], help="reduced Groebner basis")
    gb.add_argument("file")
    gb.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")

    for verb, help_text in [
        ("gfan", "Groebner fan"),
        ("universal", "universal Groebner basis"),
        ("trop", "tropical variety"),
        ("prevariety", "tropical prevariety of the listed polynomials"),
        ("tbasis", "compute a tropical basis"),
        ("fvector", "f-vectors of trop(I) and the prevariety with their bound"),
    ]:
        sub = verbs.add_parser(verb, parents=[common], help=help_text)
        sub.add_argument("file")

    check = verbs.add_parser("tbasis-check", parents=[common], help="is the candidate set a tropical basis")
    check.add_argument("file")
    check.add_argument("candidates", help="ideal file with the candidate polynomials")

    witness = verbs.add_parser("witness", parents=[common], help="witness polynomial at a weight")
    witness.add_argument("file")
    witness.add_argument("--weight", "-w", required=True, help="comma-separated rationals")

    bound = verbs.add_parser("bounds", help="closed-form bounds")
    bound_verbs = bound.add_subparsers(dest="bound", required=True)
    for name, (flags, _) in BOUND_VERBS.items():
        sub = bound_verbs.add_parser(name, parents=[common])
        for flag in flags:
            sub.add_argument(f"-{flag}", dest=flag, type=int, required=True, help=BOUND_FLAG_HELP[flag])

    lam = verbs.add_parser("lambda", parents=[common], help="lambda_j(d, n): exhaustive enumeration or seeded search")
    lam.add_argument("-d", type=int)
    lam.add_argument("-n", type=int)
    lam.add_argument("--table", action="store_true", help="whole grid as CSV")
    lam.add_argument("--max-n", type=int, default=4)
    lam.add_argument("--max-d", type=int, default=3)
    lam.add_argument("--search", action="store_true", help="seeded lower-bound search instead of enumeration")
    lam.add_argument("--seed", type=int, default=0, help="random seed of the search")

    grass = verbs.add_parser("grassmannian", parents=[common], help="Pluecker ideal of D-planes in N-space")
    grass.add_argument("-D", dest="D", type=int, required=True, help=BOUND_FLAG_HELP["D"])
    grass.add_argument("-N", dest="N", type=int, required=True, help=BOUND_FLAG_HELP["N"])
    grass.add_argument("--three-term", action="store_true", help="only the three-term relations")

    fixtures = verbs.add_parser("fixtures", parents=[common], help="run the fixture suite")
    fixtures.add_argument("--quick", action="store_true", help="skip heavy cases")
    fixtures.add_argument("--category", choices=["cubics", "binary_forms", "pluecker", "lambda", "bounds"])

    return parser


HANDLERS: Dict[str, Callable[..., Rendered]] = {
    "gb": cmd_gb,
    "gfan": cmd_gfan,
    "universal": cmd_universal,
    "trop": cmd_trop,
    "prevariety": cmd_prevariety,
    "tbasis-check": cmd_tbasis_check,
    "tbasis": cmd_tbasis,
    "witness": cmd_witness,
    "bounds": cmd_bounds,
    "lambda": cmd_lambda,
    "fvector": cmd_fvector,
    "grassmannian": cmd_grassmannian,
    "fixtures": cmd_fixtures,
}

TRACED = {"tbasis", "fixtures"}

# Stage record written for each verb; pipeline verbs log their nodes as well
VERB_STAGES: Dict[str, StageType] = {
    "gb": StageType.GROEBNER_FAN,
    "gfan": StageType.GROEBNER_FAN,
    "universal": StageType.GROEBNER_FAN,
    "lambda": StageType.LAMBDA_ENUMERATION,
    "bounds": StageType.BOUNDS,
}


def _run_verb(args: argparse.Namespace, trace: TraceContext) -> Rendered:
    handler = HANDLERS[args.verb]
    stage = VERB_STAGES.get(args.verb, StageType.CLI_COMMAND)
    start_time = time.time()
    error = None
    try:
        if args.verb in TRACED:
            return handler(args, trace_id=trace.trace_id)
        return handler(args)
    except Exception as e:
        error = f"{type(e).__name__}: {e}"
        raise
    finally:
        trace.logger.log_stage_execution(
            trace_id=trace.trace_id,
            stage_type=stage,
            input_data={"verb": args.verb, "file": getattr(args, "file", None)},
            output_data={},
            execution_time=time.time() - start_time,
            success=error is None,
            error=error
        )


def run(argv: List[str]) -> int:
    """
    Parse argv, run one verb and print its report to stdout.

    Returns:
        Exit code: 0 success, 1 domain error, 2 usage error, 3 internal inconsistency
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    args.convention = args.convention or config.get("cli.convention", "min")
    command = args.verb if args.verb != "bounds" else f"bounds {args.bound}"

    try:
        with TraceContext(command=command, metadata={"argv": list(argv)}) as trace:
            report, text = _run_verb(args, trace)
            trace.summary = {"verb": args.verb}
    except InternalInconsistencyError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except WorkbenchError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN

    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        print(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
