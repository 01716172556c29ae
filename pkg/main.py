"""Command-line front end: one subcommand per verb, or ``--scenario file.json``.

Exit codes: 0 success, 2 validation error, 3 domain/precondition error,
4 crosscheck failure.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from characters.errors import DomainError, ValidationError
from reporting.config import ToolkitConfig
from reporting.scenario import VERBS, parse_scenario, run_scenario
from reporting.writers import write_report

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DOMAIN = 3
EXIT_CROSSCHECK = 4


def _add_induced_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", required=True, help="R, C or NA")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p1", type=int, required=True)
    p.add_argument("--chi", default="1", help='character on GL_p1, e.g. "eps*nu^{3/2}"')
    p.add_argument("--ramified", action="store_true", help="non-archimedean: chi is not a power of nu")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dps-toolkit",
        description="Reducibility, composition structure and cosine-transform spectra of degenerate principal series.",
    )
    parser.add_argument("--scenario", help="run a JSON scenario file instead of a subcommand")
    parser.add_argument("--seed", type=int, help="root seed (default 42)")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--format", choices=["json", "csv"], help="report format")
    parser.add_argument("--workers", type=int, help="Monte-Carlo worker streams")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="verb")

    for verb in ("decide", "profile"):
        _add_induced_args(sub.add_parser(verb, help=f"{verb} chi x 1"))
    p = sub.add_parser("infchar", help="infinitesimal character of chi x 1")
    _add_induced_args(p)
    p.add_argument("--reading", choices=["derived", "swapped"], default="derived")

    p = sub.add_parser("mc", help="Monte-Carlo cosine transform")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--alpha", required=True, help='real exponent, e.g. 1 or "1/2"')
    p.add_argument("--f", default="const", help="const or e1")
    p.add_argument("--N", type=int, help="number of samples")

    p = sub.add_parser("spectrum", help="eigenvalue germs of the i = 1 transform")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha0", required=True)
    p.add_argument("--M", type=int, help="truncation (default 40)")

    p = sub.add_parser("exceptional", help="exceptional exponents")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--lo")
    p.add_argument("--hi")
    p.add_argument("--alpha0")

    p = sub.add_parser("crosscheck", help="run a bounded consistency grid")
    p.add_argument("--grid-file", required=True, help="JSON grid description")
    return parser


def _params_from_args(args: argparse.Namespace) -> Dict[str, Any]:
    if args.verb == "crosscheck":
        with open(args.grid_file, encoding="utf-8") as f:
            return json.load(f)
    skip = {"verb", "scenario", "seed", "out", "format", "workers", "verbose"}
    params = {k: v for k, v in vars(args).items() if k not in skip and v is not None}
    if args.verb == "mc":
        params["alpha"] = str(params["alpha"])
    if not params.get("ramified", True):
        params.pop("ramified")
    return params


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one scenario and print or save its report.

    Returns:
        The process exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        if args.scenario:
            with open(args.scenario, encoding="utf-8") as f:
                data = json.load(f)
        elif args.verb in VERBS:
            data = {"verb": args.verb, "params": _params_from_args(args)}
        else:
            parser.print_help()
            return EXIT_VALIDATION
        if args.seed is not None:
            data["seed"] = args.seed
        if args.format:
            data["output"] = args.format
        scenario = parse_scenario(data)
        config = ToolkitConfig().override(workers=args.workers)
        report = run_scenario(scenario, config)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    text = write_report(report, scenario.output, args.out)
    if args.out:
        print(f"Saved {scenario.verb} report to {args.out}")
    else:
        print(text, end="")
    if scenario.verb == "crosscheck" and report["outputs"]["summary"]["failed"]:
        return EXIT_CROSSCHECK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
