"""Command-line interface: run one command against a session file.

    liaison SESSION COMMAND [ARGS...] [--mode both] [--seed 0] [--json]

Exit codes: 0 success or true verdict, 1 false verdict, 2 error,
3 inconclusive.  With --json the output is a stable document (byte-stable
for a fixed session, command, and seed); timings are only included when
--timings is passed, so they never break stability.
"""

import argparse
import json
import sys
import time

from .doublelines import ClassificationDiscrepancy, classify
from .ideals import (
    hilbert_data,
    ideal_colon,
    ideal_intersect,
    saturate,
)
from .linkage import LinkedTriple, doubling_check, link, verify_linked_triple
from .localrings import local_ci_test, local_mu, translate_to_origin, artinian_reduce, artinian_invariants
from .sessions import ParseError, parse_session

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2
EXIT_INCONCLUSIVE = 3


class CommandResult:
    def __init__(self, result, text, exit_code=EXIT_OK, witnesses=None, points_tested=None):
        self.result = result
        self.text = text
        self.exit_code = exit_code
        self.witnesses = witnesses
        self.points_tested = points_tested or []


def _ideal_strings(I):
    return [str(g) for g in I.groebner().elements]


def _cmd_gb(session, args, opts):
    I = session.lookup_ideal(args[0])
    gens = _ideal_strings(I)
    text = ["reduced Groebner basis (" + str(I.ring.order) + "):"] + ["  " + g for g in gens]
    return CommandResult({"generators": gens, "order": str(I.ring.order)}, text)

def _binary_ideal_command(operation, label):
    def run(session, args, opts):
        I = session.lookup_ideal(args[0])
        J = session.lookup_ideal(args[1])
        R = operation(I, J)
        gens = _ideal_strings(R)
        text = [f"{label}({args[0]}, {args[1]}):"] + ["  " + g for g in gens]
        return CommandResult({"generators": gens}, text)

    return run


def _cmd_hilbert(session, args, opts):
    I = session.lookup_ideal(args[0])
    data = hilbert_data(I)
    text = [
        f"Krull dimension (cone): {data.krull_dimension}",
        f"projective dimension:   {data.projective_dimension}",
        f"degree:                 {data.degree}",
        f"numerator coefficients: {list(data.numerator)}",
    ]
    return CommandResult(data.as_dict(), text)


def _cmd_localize(session, args, opts):
    I = session.lookup_ideal(args[0])
    p = session.lookup_point(args[1])
    J = translate_to_origin(I, p)
    gens = [str(g) for g in J.gens]
    text = [f"chart ideal at {p} in {J.ring!r}:"] + ["  " + g for g in gens]
    return CommandResult(
        {"generators": gens, "chart_ring": repr(J.ring)}, text, points_tested=[p]
    )


def _cmd_mu(session, args, opts):
    I = session.lookup_ideal(args[0])
    p = session.lookup_point(args[1])
    mu = local_mu(translate_to_origin(I, p))
    return CommandResult({"mu": mu}, [f"mu at {p}: {mu}"], points_tested=[p])


def _cmd_lci(session, args, opts):
    I = session.lookup_ideal(args[0])
    p = session.lookup_point(args[1])
    report = local_ci_test(I, p, seed=opts.seed)
    code = EXIT_OK if report.lci else EXIT_FALSE
    text = [
        f"point {p}: mu = {report.mu}, codim = {report.codim}, "
        f"lci = {report.lci}, gorenstein = {report.gorenstein}"
    ]
    return CommandResult(report.as_dict(), text, exit_code=code, points_tested=[p])


def _cmd_gorenstein(session, args, opts):
    I = session.lookup_ideal(args[0])
    p = session.lookup_point(args[1])
    local = translate_to_origin(I, p)
    Q, _forms = artinian_reduce(local, seed=opts.seed)
    if Q is None:
        return CommandResult(
            {"gorenstein": None, "note": "no certified-regular slice found"},
            [f"point {p}: inconclusive (no certified-regular slice found)"],
            exit_code=EXIT_INCONCLUSIVE,
            points_tested=[p],
        )
    length, socle_dim, gor = artinian_invariants(Q)
    code = EXIT_OK if gor else EXIT_FALSE
    text = [f"point {p}: length = {length}, socle_dim = {socle_dim}, gorenstein = {gor}"]
    return CommandResult(
        {"gorenstein": gor, "length": length, "socle_dim": socle_dim},
        text,
        exit_code=code,
        points_tested=[p],
    )


def _cmd_link(session, args, opts):
    base = session.lookup_ideal(args[0])
    first = session.lookup_ideal(args[1])
    linked = link(base, first)
    gens = _ideal_strings(linked)
    text = [f"link({args[0]}, {args[1]}):"] + ["  " + g for g in gens]
    return CommandResult({"generators": gens}, text)


def _cmd_verify_triple(session, args, opts):
    triple = LinkedTriple(
        session.lookup_ideal(args[0]),
        session.lookup_ideal(args[1]),
        session.lookup_ideal(args[2]),
    )
    report = verify_linked_triple(triple, seed=opts.seed)
    if report.passed:
        code = EXIT_OK
    elif report.gorenstein_ok is None:
        code = EXIT_INCONCLUSIVE
    else:
        code = EXIT_FALSE
    text = [
        f"colon symmetry: {report.colon_first and report.colon_second}",
        f"dimensions: {report.dimensions} equal={report.dimensions_equal}",
        f"degrees: {report.degrees} additive={report.degree_additive}",
        f"gorenstein at witness points: {report.gorenstein_ok}",
        f"passed: {report.passed}",
    ]
    return CommandResult(
        report.as_dict(), text, exit_code=code, points_tested=report.points_tested
    )


def _cmd_doubling(session, args, opts):
    base = session.lookup_ideal(args[0])
    first = session.lookup_ideal(args[1])
    verdict = doubling_check(base, first)
    code = EXIT_OK if verdict else EXIT_FALSE
    return CommandResult({"doubling": verdict}, [f"doubling: {verdict}"], exit_code=code)


def _cmd_classify(session, args, opts):
    L1 = session.lookup_dline(args[0])
    L2 = session.lookup_dline(args[1])
    verdict = classify(L1, L2, mode=opts.mode, seed=opts.seed)
    code = EXIT_OK if verdict.lal else EXIT_FALSE
    text = [
        f"lal: {verdict.lal}",
        f"case: {verdict.case_tag}",
        f"mode: {verdict.mode}" + (
            f" (oracle: {verdict.oracle_verdict})" if verdict.oracle_verdict else ""
        ),
    ]
    if verdict.witness:
        text.append(f"witness: {verdict.witness}")
    return CommandResult(
        verdict.as_dict(),
        text,
        exit_code=code,
        witnesses=verdict.witness,
        points_tested=[r.point for r in verdict.point_reports if r.point is not None],
    )


_COMMANDS = {
    "gb": (_cmd_gb, 1, "IDEAL"),
    "intersect": (_binary_ideal_command(ideal_intersect, "intersect"), 2, "IDEAL IDEAL"),
    "colon": (_binary_ideal_command(ideal_colon, "colon"), 2, "IDEAL IDEAL"),
    "saturate": (_binary_ideal_command(saturate, "saturate"), 2, "IDEAL IDEAL"),
    "hilbert": (_cmd_hilbert, 1, "IDEAL"),
    "localize": (_cmd_localize, 2, "IDEAL POINT"),
    "gorenstein": (_cmd_gorenstein, 2, "IDEAL POINT"),
    "mu": (_cmd_mu, 2, "IDEAL POINT"),
    "lci": (_cmd_lci, 2, "IDEAL POINT"),
    "link": (_cmd_link, 2, "IDEAL IDEAL"),
    "verify-triple": (_cmd_verify_triple, 3, "IDEAL IDEAL IDEAL"),
    "doubling": (_cmd_doubling, 2, "IDEAL IDEAL"),
    "classify": (_cmd_classify, 2, "DLINE DLINE"),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liaison",
        description="exact linkage computations over a session file",
    )
    parser.add_argument("session", help="path to the session file")
    parser.add_argument("command", choices=sorted(_COMMANDS), help="command to run")
    parser.add_argument("args", nargs="*", help="names declared in the session")
    parser.add_argument("--mode", default="both", choices=["conditions", "oracle", "both"],
                        help="classification mode (classify only)")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized verdicts")
    parser.add_argument("--json", action="store_true", help="emit the stable JSON document")
    parser.add_argument("--timings", action="store_true",
                        help="include wall-clock timings in the JSON output")
    return parser


def main(argv=None):
    parser = build_parser()
    opts = parser.parse_args(argv)
    handler, arity, usage = _COMMANDS[opts.command]
    if len(opts.args) != arity:
        print(f"error: {opts.command} expects {usage}", file=sys.stderr)
        return EXIT_ERROR
    try:
        with open(opts.session, encoding="utf-8") as handle:
            session = parse_session(handle.read())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    started = time.perf_counter()
    try:
        outcome = handler(session, opts.args, opts)
    except (KeyError, ValueError, ClassificationDiscrepancy) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_ERROR
    elapsed = time.perf_counter() - started
    if opts.json:
        document = {
            "schema": 1,
            "command": opts.command,
            "inputs": list(opts.args),
            "result": outcome.result,
            "witnesses": outcome.witnesses,
            "points_tested": [str(p) for p in outcome.points_tested],
            "seed": opts.seed,
            "timings": {"seconds": round(elapsed, 6)} if opts.timings else None,
        }
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        for line in outcome.text:
            print(line)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
