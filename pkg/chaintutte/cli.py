#!/usr/bin/env python3
"""Command line front end for chaintutte.

Example usage::

    # T^2 of U_{2,3}
    python -m chaintutte.cli --matroid '{"type": "uniform", "r": 2, "n": 3}' chain-tutte -k 2

    # T^2(2,1;1,2) of the complete graph K_4
    python -m chaintutte.cli --matroid k4.json evaluate -k 2 --point '{"x1": 2, "x2": 1, "y1": 1, "y2": 2}'

    # Derived invariants
    python -m chaintutte.cli --matroid k4.json invariant --name mobius-poly
    python -m chaintutte.cli --matroid k4.json invariant --name expected-codim --route recursion

    # Valuation check over a subdivision nerve
    python -m chaintutte.cli check-valuation --nerve split.json --invariant chain-tutte -k 2

Results go to stdout (``--format json`` or ``text``); failures print an
error JSON on stderr and exit with status 1.  Usage errors exit with 2.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError

from .chain.split import chain_tutte_recursive
from .chain.tutte import ChainTuttePoly, chain_tutte, chain_whitney, evaluate_chain, universal_chain_tutte
from .config import load_limits, set_limits
from .errors import ChainTutteError, InvalidParametersError
from .invariants.classical import characteristic_poly, classical_tutte
from .invariants.derksen import GInvariant, g_from_top_tutte, g_invariant
from .invariants.evaluations import constant_evaluations
from .invariants.ford import expected_codim, ford_s_poly
from .invariants.mobius import j_mobius_poly, mobius_poly, opposite_char_poly
from .matroid.core import Matroid
from .matroid.nerve import nerve_from_model
from .matroid.output_schemas import NerveModel
from .matroid.sources import load_json_argument, parse_matroid, validate
from .polynomial.laurent import LaurentPoly, canonical_string, to_model
from .valuation.checker import check_valuation
from .worker_pool import stop_worker_pool

Result = Tuple[Dict[str, Any], str]

POLY_INVARIANTS: Dict[str, Callable[[Matroid], LaurentPoly]] = {
    "tutte": classical_tutte,
    "char-poly": characteristic_poly,
    "mobius-poly": mobius_poly,
    "opp-char-poly": opposite_char_poly,
    "j-mobius": j_mobius_poly,
    "ford-s": ford_s_poly,
}
INVARIANT_NAMES = list(POLY_INVARIANTS) + ["expected-codim", "g-invariant", "g-from-top", "constant-evals"]


def _require_matroid(args: argparse.Namespace) -> Matroid:
    if not args.matroid:
        raise InvalidParametersError("This command needs --matroid (inline JSON or a file path)")
    return parse_matroid(args.matroid)


def _poly_result(name: str, poly: LaurentPoly) -> Result:
    return {"invariant": name, "poly": to_model(poly).model_dump()}, canonical_string(poly)


def _g_result(name: str, g: GInvariant) -> Result:
    payload = g.to_dict()
    lines = [f"{key}: {count}" for key, count in payload["counts"].items()]
    return {"invariant": name, **payload}, "\n".join(lines)


# ---------------------------------------------------------------------------
# Sub-command implementations
# ---------------------------------------------------------------------------


def cmd_chain_tutte(args: argparse.Namespace) -> Result:
    M = _require_matroid(args)
    result: ChainTuttePoly
    if args.universal:
        result = universal_chain_tutte(M, args.k)
    elif args.whitney:
        result = chain_whitney(M, args.k)
    elif args.recursive:
        result = chain_tutte_recursive(M, args.k)
    else:
        result = chain_tutte(M, args.k)
    return result.to_dict(), str(result)


def cmd_evaluate(args: argparse.Namespace) -> Result:
    M = _require_matroid(args)
    point = load_json_argument(args.point, exact=True)
    if not isinstance(point, dict):
        raise InvalidParametersError("--point must be a JSON object mapping variable names to numbers")
    value = evaluate_chain(M, args.k, point)
    return {"k": args.k, "point": {str(k): str(v) for k, v in point.items()}, "value": str(value)}, str(value)


def cmd_invariant(args: argparse.Namespace) -> Result:
    M = _require_matroid(args)
    name = args.name
    if name in POLY_INVARIANTS:
        return _poly_result(name, POLY_INVARIANTS[name](M))
    if name == "expected-codim":
        value = expected_codim(M, route=args.route)
        return {"invariant": name, "route": args.route, "value": str(value)}, str(value)
    if name == "g-invariant":
        return _g_result(name, g_invariant(M))
    if name == "g-from-top":
        return _g_result(name, g_from_top_tutte(M))
    record = constant_evaluations(M, args.k)
    lines = [
        f"{field}: {pair.tutte} / {pair.direct}"
        for field, pair in ((f, getattr(record, f)) for f in type(record).model_fields if f != "k")
    ]
    return {"invariant": name, **record.model_dump()}, "\n".join(lines)


def cmd_check_valuation(args: argparse.Namespace) -> Result:
    try:
        model = NerveModel.model_validate(load_json_argument(args.nerve))
    except ValidationError as e:
        raise InvalidParametersError(f"Malformed nerve description: {e}") from e
    big, nerve = nerve_from_model(model)
    report = check_valuation(args.invariant, big, nerve, args.k)
    text = f"{report.invariant}: {'holds' if report.holds else 'fails'} over {report.faces} faces"
    return report.model_dump(), text


def cmd_validate(args: argparse.Namespace) -> Result:
    summary = validate(_require_matroid(args))
    payload = summary.model_dump()
    return payload, "\n".join(f"{key}: {value}" for key, value in payload.items())


# ---------------------------------------------------------------------------
# Main entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaintutte",
        description="Chain Tutte polynomials of matroids and polymatroids, and the invariants derived from them.",
    )
    parser.add_argument("--matroid", default=None, help="Matroid description: inline JSON or a path to a JSON file.")
    parser.add_argument("--format", choices=["json", "text"], default="json", help="Output format.")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads for chain enumeration.")
    parser.add_argument("--max-chains", type=int, default=None, help="Largest number of chains one enumeration may visit.")
    parser.add_argument("--max-perms", type=int, default=None, help="Largest ground set for permutation enumeration.")
    parser.add_argument("--config", default=None, help="YAML file with compute limits.")
    parser.add_argument("--verbose", action="store_true", help="Enable debug logging.")

    subparsers = parser.add_subparsers(dest="command", required=True)

    # chain-tutte
    p_chain = subparsers.add_parser("chain-tutte", help="Compute T^k (or W^k / uT^k)")
    p_chain.add_argument("-k", type=int, required=True, help="Chain length")
    p_chain.add_argument("--recursive", action="store_true", help="Use the split-polynomial recursion")
    form = p_chain.add_mutually_exclusive_group()
    form.add_argument("--whitney", action="store_true", help="Output the chain Whitney polynomial W^k")
    form.add_argument("--universal", action="store_true", help="Output the universal chain polynomial uT^k")
    p_chain.set_defaults(func=cmd_chain_tutte)

    # evaluate
    p_eval = subparsers.add_parser("evaluate", help="Evaluate T^k at a rational point")
    p_eval.add_argument("-k", type=int, required=True, help="Chain length")
    p_eval.add_argument("--point", required=True, help='JSON object such as {"x1": 2, "y1": "1/2"}')
    p_eval.set_defaults(func=cmd_evaluate)

    # invariant
    p_inv = subparsers.add_parser("invariant", help="Compute a derived invariant")
    p_inv.add_argument("--name", choices=INVARIANT_NAMES, required=True, help="Invariant id")
    p_inv.add_argument("-k", type=int, default=2, help="Chain length for constant-evals")
    p_inv.add_argument(
        "--route",
        choices=["direct", "derivative", "recursion"],
        default="direct",
        help="Computation route for expected-codim",
    )
    p_inv.set_defaults(func=cmd_invariant)

    # check-valuation
    p_val = subparsers.add_parser("check-valuation", help="Check the valuation identity over a subdivision nerve")
    p_val.add_argument("--nerve", required=True, help="Nerve description: inline JSON or a path to a JSON file")
    p_val.add_argument("--invariant", required=True, help="Registered invariant id, e.g. chain-tutte or mobius-poly")
    p_val.add_argument("-k", type=int, default=None, help="Chain length for chain invariants")
    p_val.set_defaults(func=cmd_check_valuation)

    # validate
    p_valid = subparsers.add_parser("validate", help="Re-check the rank axioms and summarise the matroid")
    p_valid.set_defaults(func=cmd_validate)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        force=True,
    )

    try:
        set_limits(
            load_limits(
                args.config,
                max_chains=args.max_chains,
                max_perm_n=args.max_perms,
                threads=args.threads,
            )
        )
        payload, text = args.func(args)
    except ChainTutteError as e:
        logging.debug("Command %s failed: %s", args.command, e)
        print(json.dumps(e.to_dict(), ensure_ascii=False, default=str), file=sys.stderr)
        return 1
    finally:
        stop_worker_pool()
        set_limits(None)

    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
