"""Command-line interface: evaluate, generate, search, classical, report, serve.

Exit codes: 0 success, 1 input parse error, 2 invariant violation or bad
arguments, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis
from .dataset import UnknownClassicalError, get_classical, list_classical
from .generate import MAX_GENERATION_BITS, RandomSource, random_bijective
from .sbox import SBox, SBoxError, SBoxFormatError, format_sbox_text, is_bijective, parse_sbox_text
from .search import EXHAUSTED, SUCCEEDED, SearchConfig, SearchState, local_search

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVARIANT = 2
EXIT_EXHAUSTED = 3

PROPERTIES = ("nl", "du", "ccv", "mto", "rto", "wcf", "bijective", "hw-signature", "all")


def _load_sbox(path: str, n: int | None, m: int | None) -> SBox:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE) from None
    try:
        return parse_sbox_text(text, n=n, m=m)
    except SBoxFormatError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE) from None
    except SBoxError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INVARIANT) from None


def _evaluate_value(s: SBox, prop: str, wcf_x: int, wcf_r: int):
    if prop == "all":
        return analysis.evaluate_all(s).to_dict()
    if prop == "nl":
        return analysis.nonlinearity(s)
    if prop == "du":
        return analysis.differential_uniformity(s)
    if prop == "ccv":
        return analysis.ccv(s)
    if prop == "mto":
        return analysis.mto(s)
    if prop == "rto":
        return analysis.rto(s)
    if prop == "wcf":
        return analysis.wcf(s, wcf_x, wcf_r)
    if prop == "bijective":
        return is_bijective(s)
    if prop == "hw-signature":
        return list(analysis.hw_signature(s))
    raise AssertionError(prop)


def _print_report_text(report: dict) -> None:
    for key in ("bijective", "nl", "du", "ccv", "mto", "rto", "wcf"):
        value = report[key]
        if value is None:
            print(f"{key} = unavailable ({report['errors'].get(key, 'not applicable')})")
        else:
            print(f"{key} = {value}")
    print("hw_signature =", " ".join(str(v) for v in report["hw_signature"]))


def cmd_evaluate(args) -> int:
    s = _load_sbox(args.infile, args.n, args.m)
    try:
        value = _evaluate_value(s, args.property, args.wcf_x, args.wcf_r)
    except SBoxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if args.json:
        print(json.dumps({"value": value}))
    elif args.property == "all":
        _print_report_text(value)
    else:
        print(value)
    return EXIT_OK


def cmd_generate(args) -> int:
    if not 1 <= args.n <= MAX_GENERATION_BITS:
        print(f"error: n must be in [1, {MAX_GENERATION_BITS}]", file=sys.stderr)
        return EXIT_INVARIANT
    rng = RandomSource(args.seed) if args.seed is not None else RandomSource.from_entropy()
    box = random_bijective(args.n, rng)
    text = format_sbox_text(box)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out} (n={box.n}, seed={rng.seed})")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_search(args) -> int:
    config = SearchConfig(
        n=args.n,
        target_nl=args.target_nl,
        max_iterations=args.max_iter,
        restarts=args.restarts,
        wcf_x=args.wcf_x,
        wcf_r=args.wcf_r,
        seed=args.seed if args.seed is not None else RandomSource.from_entropy().seed,
    )
    try:
        config.validate()
    except SBoxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    history: list[SearchState] = []

    def sink(state: SearchState) -> None:
        history.append(state)
        print(
            f"iteration={state.iteration} best_nl={state.best_nl} "
            f"wcf={state.current_wcf:.0f} status={state.status}",
            flush=True,
        )

    final = local_search(config, progress_sink=sink)
    print(
        f"finished: status={final.status} iterations={final.iteration} "
        f"best_nl={final.best_nl} seed={config.seed}"
    )
    if args.plot:
        from .report import plot_search_progress

        plot_search_progress(history, args.plot)
        print(f"wrote {args.plot}")
    if final.status == SUCCEEDED and args.out:
        Path(args.out).write_text(format_sbox_text(final.current))
        print(f"wrote {args.out} (nl={final.current_nl})")
    if final.status == SUCCEEDED:
        return EXIT_OK
    return EXIT_EXHAUSTED if final.status == EXHAUSTED else EXIT_INVARIANT


def cmd_classical(args) -> int:
    if args.name is None:
        for entry in list_classical():
            print(f"{entry.name}  {entry.n}x{entry.m}  nl={entry.ref_nl}  du={entry.ref_du}")
        return EXIT_OK
    try:
        entry = get_classical(args.name)
    except UnknownClassicalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if args.json:
        print(
            json.dumps(
                {
                    "name": entry.name,
                    "n": entry.n,
                    "m": entry.m,
                    "sbox": list(entry.sbox.table),
                    "nl": entry.ref_nl,
                    "du": entry.ref_du,
                    "citation": entry.citation,
                }
            )
        )
    else:
        sys.stdout.write(format_sbox_text(entry.sbox))
    return EXIT_OK


def cmd_report(args) -> int:
    s = _load_sbox(args.infile, args.n, args.m)
    from .report import write_report

    for path in write_report(s, args.out_dir):
        print(f"wrote {path}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import ServiceConfig, create_app

    config = ServiceConfig(
        max_experiments=args.max_experiments,
        experiment_ttl=args.experiment_ttl,
        cors_origin=args.cors_origin,
    )
    uvicorn.run(create_app(config), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sboxkit", description="Generate and evaluate bijective S-boxes."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="evaluate properties of an S-box file")
    p.add_argument("--in", dest="infile", required=True, help="S-box text file")
    p.add_argument("--property", choices=PROPERTIES, default="all")
    p.add_argument("--n", type=int, default=None, help="input width (inferred by default)")
    p.add_argument("--m", type=int, default=None, help="output width (inferred by default)")
    p.add_argument("--wcf-x", type=int, default=0)
    p.add_argument("--wcf-r", type=int, default=3)
    p.add_argument("--json", action="store_true", help="print the service JSON schema")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("generate", help="generate a random bijective S-box")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="output file (stdout by default)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("search", help="hill-climb toward a target nonlinearity")
    p.add_argument("--target-nl", type=int, required=True)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-iter", type=int, default=1_000_000)
    p.add_argument("--restarts", type=int, default=4)
    p.add_argument("--wcf-x", type=int, default=0)
    p.add_argument("--wcf-r", type=int, default=3)
    p.add_argument("--out", default=None, help="write the found S-box here")
    p.add_argument("--plot", default=None, help="render the progress curve to this file")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("classical", help="list or print bundled classical S-boxes")
    p.add_argument("--name", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("report", help="write properties.csv and figures for an S-box")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("serve", help="run the REST service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--max-experiments", type=int, default=4)
    p.add_argument("--experiment-ttl", type=float, default=600.0)
    p.add_argument("--cors-origin", default="*")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
