"""Command-line entry points.

Exit codes: 0 success, 2 validation failure (parse errors, illegal
weights, failed checks), 1 internal error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .classify import classify, verdict_to_json
from .cyclotomic import format_approx
from .georep import (
    EdgeCoefficients,
    gauge_from_potentials,
    generalized_generators,
    k_coefficients,
    verify_coxeter_relations,
)
from .graphs import GraphParseError, check_balanced, parse_graph, validate_legal
from .groupenum import bfs_enumerate
from .numbersgame import (
    descent_set,
    gauged_start,
    is_reduced,
    play,
    imo_pentagon_run,
    unit_position,
    validate_generalized_weights,
)
from .presets import PRESETS

OK, INTERNAL_ERROR, VALIDATION_FAILURE = 0, 1, 2


def _load(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return parse_graph(text)


def _emit(payload: dict, args, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _ell(graph, args) -> EdgeCoefficients:
    if getattr(args, "asymmetric_k", False):
        return EdgeCoefficients.asymmetric_integers(graph)
    return EdgeCoefficients.symmetric(graph)


def cmd_validate(args) -> int:
    graph, f = _load(args.file)
    violations = validate_legal(graph, f)
    relations = verify_coxeter_relations(generalized_generators(graph, f, _ell(graph, args)),
                                         infinite_check_bound=args.bound) \
        if not violations else None
    payload = {
        "legal": not violations,
        "violations": [str(v) for v in violations],
        "relations": None if relations is None else {
            "ok": relations.ok,
            "failures": [str(x) for x in relations.failures],
        },
    }
    lines = []
    if violations:
        lines.append("weight function is not legal:")
        lines.extend(f"  {v}" for v in violations)
    else:
        lines.append(f"weight function legal on {graph.n} vertices, "
                     f"{len(graph.edges())} edges")
        lines.append("Coxeter relations: " + ("all hold exactly" if relations.ok
                                              else "FAILED"))
        lines.extend(f"  {x}" for x in relations.failures)
    _emit(payload, args, lines)
    if violations or (relations is not None and not relations.ok):
        return VALIDATION_FAILURE
    return OK


def cmd_classify(args) -> int:
    graph, f = _load(args.file)
    if validate_legal(graph, f):
        print("weight function is not legal; run `coxkit validate` for details",
              file=sys.stderr)
        return VALIDATION_FAILURE
    verdict = classify(graph, f, probe_bound=args.probe_bound)
    payload = verdict_to_json(verdict)
    lines = [f"verdict: {payload['kind']}"]
    if payload["kind"] == "FaithfulBalanced":
        pots = ", ".join(p["exact"] for p in payload["potentials"])
        lines.append(f"potentials: ({pots})")
    elif payload["kind"] == "NotFaithful":
        lines.append(f"offending cycle: {payload['cycle']}")
        lines.append(f"cycle weight: {payload['cycleWeight']['exact']} "
                     f"(order {payload['order']})")
        lines.append(f"monomial quotient order: {payload['quotientOrder']}")
    elif payload["kind"] == "FaithfulAffineCycle":
        lines.append(f"cycle length {payload['n']}, weight "
                     f"{payload['cycleWeight']['exact']} of infinite order; "
                     f"image is the affine group of the cycle")
    else:
        lines.append(f"probe findings: {len(payload['probed'])}")
        for p in payload["probed"]:
            where = p["cycle"] if p["cycle"] else f"exponents {p['exponents']}"
            lines.append(f"  weight {p['weight']['exact']} of order {p['order']} at {where}")
    _emit(payload, args, lines)
    return OK


def cmd_gauge(args) -> int:
    graph, f = _load(args.file)
    if validate_legal(graph, f):
        print("weight function is not legal", file=sys.stderr)
        return VALIDATION_FAILURE
    certificate = check_balanced(graph, f)
    if not certificate.balanced:
        payload = {
            "balanced": False,
            "cycle": list(certificate.cycle),
            "weight": certificate.weight.literal(),
        }
        _emit(payload, args, [
            "not balanced:",
            f"  cycle {list(certificate.cycle)} has weight {certificate.weight.literal()}",
        ])
        return VALIDATION_FAILURE
    gauge = gauge_from_potentials(certificate.potentials)
    payload = {
        "balanced": True,
        "potentials": [p.literal() for p in certificate.potentials],
        "origins": list(certificate.origins),
        "gauge": gauge.to_json_entries(),
    }
    lines = ["balanced",
             "potentials: (" + ", ".join(p.literal() for p in certificate.potentials) + ")",
             "gauge matrix:"]
    lines.extend("  " + row for row in gauge.pretty().splitlines())
    _emit(payload, args, lines)
    return OK


def cmd_enumerate(args) -> int:
    graph, f = _load(args.file)
    if validate_legal(graph, f):
        print("weight function is not legal", file=sys.stderr)
        return VALIDATION_FAILURE
    gens = generalized_generators(graph, f, _ell(graph, args))
    result = bfs_enumerate(gens, max_elements=args.budget)
    payload = result.to_json()
    if result.closed:
        lines = [f"group closed: order {result.order}",
                 f"growth by word length: {list(result.sphere_sizes)}"]
    else:
        lines = [f"budget of {args.budget} exhausted: group did not close",
                 f"growth by word length so far: {list(result.sphere_sizes)}"]
    _emit(payload, args, lines)
    return OK


def _parse_script(text: str) -> list[int]:
    word = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "fire" or len(parts) != 2:
            raise ValueError(f"script line {line_no}: expected 'fire <vertex>'")
        word.append(int(parts[1]))
    return word


def cmd_play(args) -> int:
    graph, f = _load(args.file)
    if validate_legal(graph, f):
        print("weight function is not legal", file=sys.stderr)
        return VALIDATION_FAILURE
    ell = _ell(graph, args)
    generalized = args.mode == "generalized" or (
        args.mode == "auto" and any(w != 1 for _, w in f.items()))
    if generalized:
        k = k_coefficients(graph, f, ell)
        check = validate_generalized_weights(graph, k)
        if not check.ok:
            print("generalized play refused:", file=sys.stderr)
            for c, msg in check.violations:
                print(f"  condition ({c}): {msg}", file=sys.stderr)
            return VALIDATION_FAILURE
        potentials = check.potentials
        start = gauged_start(potentials)
    else:
        k = k_coefficients(graph, None, ell)
        potentials = None
        start = unit_position(graph.n)

    if args.interactive:
        word = []
        position = start
        print("enter 'fire <vertex>' (blank line or EOF to stop)")
        print(f"position: ({', '.join(x.literal() for x in position)})")
        for raw in sys.stdin:
            line = raw.strip()
            if not line:
                break
            try:
                moves = _parse_script(line)
            except ValueError as exc:
                print(exc, file=sys.stderr)
                continue
            for v in moves:
                if not 1 <= v <= graph.n:
                    print(f"vertex {v} out of range 1..{graph.n}", file=sys.stderr)
                    continue
                from .numbersgame import fire, move_class
                cls = move_class(position, v, potentials)
                position = fire(graph, k, position, v)
                word.append(v)
                print(f"fire {v}: {cls.value} -> "
                      f"({', '.join(x.literal() for x in position)})")
    elif args.script:
        with open(args.script, "r", encoding="utf-8") as handle:
            word = _parse_script(handle.read())
    else:
        word = []

    for v in word:
        if not 1 <= v <= graph.n:
            print(f"vertex {v} out of range 1..{graph.n}", file=sys.stderr)
            return VALIDATION_FAILURE

    record = play(graph, k, start, word, potentials)
    descents = sorted(descent_set(graph, word, k=k, potentials=potentials))
    reduced = is_reduced(graph, word)
    payload = {
        "word": list(word),
        "moves": [{"vertex": v, "class": c.value} for v, c in record.moves],
        "positions": [
            {"exact": [x.literal() for x in p],
             "approx": [format_approx(x) for x in p]}
            for p in record.positions
        ],
        "final": {"exact": [x.literal() for x in record.final],
                  "approx": [format_approx(x) for x in record.final]},
        "descents": descents,
        "reduced": reduced,
    }
    lines = []
    if not args.interactive:   # interactive mode already echoed each move
        for (v, c), p in zip(record.moves, record.positions):
            lines.append(f"fire {v}: {c.value:16s} -> ({', '.join(x.literal() for x in p)})")
    lines.append(f"final position: ({', '.join(x.literal() for x in record.final)})")
    lines.append(f"descent set: {descents}")
    lines.append(f"reduced: {reduced}")
    _emit(payload, args, lines)
    return OK


def cmd_imo(args) -> int:
    if args.start:
        start = [int(v) for v in args.start.split(",")]
        record = imo_pentagon_run(start, max_steps=args.max_steps)
        payload = {
            "start": list(record.start),
            "fired": list(record.fired),
            "final": list(record.final),
            "steps": record.steps,
            "terminated": record.terminated,
        }
        lines = [f"start: {list(record.start)}"]
        lines.extend(f"fire {v} -> {list(p)}"
                     for v, p in zip(record.fired, record.positions[1:]))
        lines.append(f"terminated: {record.terminated} after {record.steps} steps")
        _emit(payload, args, lines)
        return OK if record.terminated else VALIDATION_FAILURE

    rng = random.Random(args.seed)
    histogram: dict[int, int] = {}
    worst = 0
    for _ in range(args.runs):
        while True:
            values = [rng.randint(-9, 9) for _ in range(5)]
            if sum(values) > 0:
                break
        record = imo_pentagon_run(values, max_steps=args.max_steps, record=False)
        if not record.terminated:
            print(f"run did not terminate within {args.max_steps} steps: {values}",
                  file=sys.stderr)
            return VALIDATION_FAILURE
        worst = max(worst, record.steps)
        bucket = record.steps // 10 * 10
        histogram[bucket] = histogram.get(bucket, 0) + 1
    payload = {"runs": args.runs, "seed": args.seed, "maxSteps": worst,
               "histogram": {str(k): v for k, v in sorted(histogram.items())}}
    lines = [f"{args.runs} random games, all terminated; longest took {worst} steps",
             "steps     games"]
    lines.extend(f"{k:>3}-{k + 9:<5} {v}" for k, v in sorted(histogram.items()))
    _emit(payload, args, lines)
    return OK


def cmd_presets(args) -> int:
    if args.name:
        preset = PRESETS.get(args.name)
        if preset is None:
            print(f"unknown preset {args.name!r}", file=sys.stderr)
            return VALIDATION_FAILURE
        print(preset.graph, end="")
        return OK
    for preset in PRESETS.values():
        print(f"{preset.name:20s} {preset.title}")
    return OK


def cmd_serve(args) -> int:
    from .service import serve

    serve(port=args.port, host=args.host)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxkit",
        description="Weighted Coxeter graphs: exact representations, "
                    "faithfulness certificates, and the numbers game.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("validate", help="check a graph file and its weights")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=20,
                   help="falsification bound for infinite bonds")
    p.add_argument("--asymmetric-k", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="faithfulness verdict with certificate")
    p.add_argument("file")
    p.add_argument("--probe-bound", type=int, default=6)
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gauge", help="balance potentials and gauge matrix")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=cmd_gauge)

    p = sub.add_parser("enumerate", help="breadth-first closure of the matrix group")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--asymmetric-k", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("play", help="run a play script on a graph")
    p.add_argument("file")
    p.add_argument("--script", help="file with 'fire <vertex>' lines")
    p.add_argument("--interactive", action="store_true")
    p.add_argument("--mode", choices=("auto", "classical", "generalized"),
                   default="auto")
    p.add_argument("--asymmetric-k", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("imo", help="pentagon game demo")
    p.add_argument("--start", help="five comma-separated integers")
    p.add_argument("--runs", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-steps", type=int, default=100000)
    add_format(p)
    p.set_defaults(func=cmd_imo)

    p = sub.add_parser("presets", help="list presets or print one as a graph file")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_presets)

    p = sub.add_parser("serve", help="run the playground session service")
    p.add_argument("--port", type=int, default=8640)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"graph file error: {exc}", file=sys.stderr)
        return VALIDATION_FAILURE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VALIDATION_FAILURE
    except Exception as exc:  # pragma: no cover - internal errors
        print(f"internal error: {exc!r}", file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
