"""Command-line front end: parse a generator spec, run the pipeline, print
text or JSON.

Exit codes: 0 success, 2 invalid input, 3 size budget exceeded.
"""
import argparse
import json
import sys
from dataclasses import dataclass

from rsbf import recursion as rec_mod
from rsbf.boolfn import DEFAULT_ENUM_BUDGET, RSFunctionSpec
from rsbf.errors import BudgetExceededError, InputError
from rsbf.exact_linalg import minimal_polynomial, strip_x_factor
from rsbf.rules_matrix import DEFAULT_WIDTH_BUDGET, build_rules_matrix, state_width

_METHOD_ALIASES = {
    "auto": "auto",
    "dense": "dense-dependence",
    "dense-dependence": "dense-dependence",
    "vector-lcm": "vector-lcm",
    "modular": "modular",
}


@dataclass
class RunConfig:
    spec: RSFunctionSpec
    weights_count: int = 0
    verify_to: int | None = None
    interpretation: str = "orbit-distinct"
    minpoly_method: str = "auto"
    fmt: str = "text"
    seed: int = 0
    budget_n: int = DEFAULT_ENUM_BUDGET
    matrix_width_budget: int = DEFAULT_WIDTH_BUDGET
    dump_matrix: str | None = None


def parse_spec(text: str) -> RSFunctionSpec:
    """Parse '1,2,6;1,2;1,6': generators split by ';', indices by ','."""
    gens = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            raise InputError("empty generator in spec string")
        try:
            gens.append(tuple(int(tok) for tok in part.split(",")))
        except ValueError as exc:
            raise InputError(f"malformed generator {part!r}: {exc}") from None
    return RSFunctionSpec(tuple(gens))


def _poly_json(p):
    return [int(c) for c in p.coeffs]


def run(config: RunConfig):
    """Execute the pipeline; returns (structured result, exit code)."""
    spec = config.spec
    result = {
        "generators": [list(g) for g in spec.generators],
        "interpretation": config.interpretation,
        "seed": config.seed,
        "minpoly_method": config.minpoly_method,
        "linear_special_case": spec.is_pure_linear,
    }
    try:
        if spec.is_pure_linear:
            _run_linear(config, result)
        else:
            _run_pipeline(config, result)
        return result, 0
    except BudgetExceededError as exc:
        result["error"] = {"kind": "budget", "message": str(exc)}
        return result, 3


def _run_linear(config: RunConfig, result: dict):
    # x_1 + ... + x_n is balanced: w_n = 2^(n-1), so w_n = 2 w_{n-1} from w_1 = 1
    rec = rec_mod.RecursionSpec(order=1, coeffs=(2,), valid_from=2)
    result.update(
        {
            "order": rec.order,
            "recurrence": list(rec.coeffs),
            "valid_from": rec.valid_from,
            "message": "linear rotation symmetric function: w_n = 2 w_{n-1}",
        }
    )
    if config.weights_count:
        weights = [(1, 1, "brute")]
        for n in range(2, config.weights_count + 1):
            weights.append((n, 1 << (n - 1), "propagated"))
        result["weights"] = [
            {"n": n, "value": v, "method": m} for n, v, m in weights
        ]
    if config.verify_to is not None:
        n_hi = _resolve_verify_to(config, rec)
        report = rec_mod.verify_recursion(
            config.spec, rec, 1, n_hi, config.interpretation,
            budget_n=config.budget_n,
        )
        result["verification"] = report.to_dict()


def _resolve_verify_to(config: RunConfig, rec) -> int:
    if config.verify_to is not None and config.verify_to > 0:
        return config.verify_to
    # default: a little beyond the first fully determined index, within budget
    return min(config.budget_n, config.spec.max_top + rec.order + 6)


def _run_pipeline(config: RunConfig, result: dict):
    spec = config.spec
    result["state_width"] = state_width(spec)
    mat = build_rules_matrix(spec, max_width=config.matrix_width_budget)
    result["matrix"] = {
        "raw_dim": mat.raw_dim,
        "pruned_dim": mat.dim,
        "nnz": mat.nnz,
    }
    if config.dump_matrix:
        with open(config.dump_matrix, "w") as fh:
            fh.write(mat.dump())
    method = _METHOD_ALIASES[config.minpoly_method]
    p = minimal_polynomial(mat.to_sparse(), method=method, seed=config.seed)
    q, mult = strip_x_factor(p)
    rec = rec_mod.recursion_from_polynomial(q, first_weight_n=spec.max_top + 1)
    result.update(
        {
            "minimal_polynomial": _poly_json(p),
            "x_multiplicity": mult,
            "reduced_polynomial": _poly_json(q),
            "order": rec.order,
            "recurrence": list(rec.coeffs),
            "valid_from": rec.valid_from,
        }
    )
    if config.weights_count:
        weights = rec_mod.display_weights(
            spec, rec, config.weights_count, budget_n=config.budget_n
        )
        result["weights"] = [
            {"n": n, "value": v, "method": m} for n, v, m in weights
        ]
    if config.verify_to is not None:
        n_hi = _resolve_verify_to(config, rec)
        report = rec_mod.verify_recursion(
            spec, rec, spec.max_top, n_hi, config.interpretation,
            budget_n=config.budget_n,
        )
        result["verification"] = report.to_dict()


def _poly_text(coeffs) -> str:
    from rsbf.exact_linalg import BigPoly

    return BigPoly(tuple(coeffs)).pretty()


def _format_text(result: dict) -> str:
    lines = []
    gens = " + ".join(
        "{" + ",".join(str(i) for i in g) + "}" for g in result["generators"]
    )
    lines.append(f"rotation symmetric function generated by {gens}")
    if result.get("error") and "order" not in result:
        lines.append(f"error: {result['error']['message']}")
        return "\n".join(lines) + "\n"
    if result["linear_special_case"]:
        lines.append(result["message"])
    else:
        m = result["matrix"]
        lines.append(
            f"state width {result['state_width']}, rules matrix "
            f"{m['raw_dim']} -> {m['pruned_dim']} after pruning ({m['nnz']} entries)"
        )
        lines.append(
            "minimal polynomial: " + _poly_text(result["minimal_polynomial"])
        )
        lines.append(
            f"reduces to: {_poly_text(result['reduced_polynomial'])}"
            f"  (x-multiplicity {result['x_multiplicity']})"
        )
    terms = []
    for i, c in enumerate(result["recurrence"], 1):
        if c == 0:
            continue
        body = f"w_{{n-{i}}}" if abs(c) == 1 else f"{abs(c)} w_{{n-{i}}}"
        terms.append(("- " if c < 0 else "+ ") + body)
    rhs = " ".join(terms).lstrip("+ ") or "0"
    lines.append(f"recurrence (order {result['order']}): w_n = {rhs}")
    if result.get("valid_from") is not None:
        lines.append(f"holds from n = {result['valid_from']} by construction")
    if "weights" in result:
        first = result["weights"][0]["n"]
        last = result["weights"][-1]["n"]
        vals = " ".join(
            str(w["value"]) + ("*" if w["method"] == "short-replaced" else "")
            for w in result["weights"]
        )
        lines.append(f"weights (n = {first}..{last}): {vals}")
        if any(w["method"] == "short-replaced" for w in result["weights"]):
            lines.append("  (* short position, recomputed separately)")
    if "verification" in result:
        v = result["verification"]
        if not v["residuals"]:
            lines.append(
                f"verification [{v['interpretation']}]: no checkable n in "
                f"range {v['n_lo']}..{v['n_hi']} (order {v['order']})"
            )
        elif not v["nonzero"]:
            lines.append(
                f"verification [{v['interpretation']}]: residuals zero for all "
                f"n = {min(map(int, v['residuals']))}..{v['n_hi']}"
            )
        else:
            lines.append(
                f"verification [{v['interpretation']}]: nonzero residuals at "
                f"n = {v['nonzero']}; clean from {v['earliest_clean']}"
            )
        if v["short_ns"]:
            lines.append(
                f"  short positions in range (interpretation-sensitive): {v['short_ns']}"
            )
    if result.get("error"):
        lines.append(f"error: {result['error']['message']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rsbf",
        description=(
            "Compute the homogeneous integer linear recursion satisfied by the "
            "Hamming weights of a rotation symmetric Boolean function family, "
            "given its generating monomials."
        ),
    )
    ap.add_argument(
        "spec",
        help="generators, indices comma-separated, generators ';'-separated, "
        "e.g. '1,2,6;1,2;1,6' (every generator must begin with 1)",
    )
    ap.add_argument("--weights", type=int, default=0, metavar="N",
                    help="compute/propagate the first N weights")
    ap.add_argument("--verify", type=int, nargs="?", const=-1, default=None,
                    metavar="N_HI",
                    help="verify the recurrence against brute force up to N_HI "
                    "(default: a little past the recursion order)")
    ap.add_argument("--interpretation", choices=["orbit-distinct", "full-sum"],
                    default="orbit-distinct",
                    help="function semantics at short n used for verification")
    ap.add_argument("--minpoly", choices=sorted(_METHOD_ALIASES), default="auto",
                    help="minimal polynomial method")
    ap.add_argument("--format", dest="fmt", choices=["text", "json"],
                    default="text")
    ap.add_argument("--seed", type=int, default=0,
                    help="seed for randomized internals (result is seed-independent)")
    ap.add_argument("--budget-n", type=int, default=DEFAULT_ENUM_BUDGET,
                    metavar="K", help="largest variable count to enumerate (2^K inputs)")
    ap.add_argument("--dump-matrix", metavar="PATH", default=None,
                    help="write the pruned rules matrix as 'row col value' lines")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = parse_spec(args.spec)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    verify_to = args.verify if args.verify is None or args.verify > 0 else -1
    config = RunConfig(
        spec=spec,
        weights_count=max(args.weights, 0),
        verify_to=verify_to,
        interpretation=args.interpretation,
        minpoly_method=args.minpoly,
        fmt=args.fmt,
        seed=args.seed,
        budget_n=args.budget_n,
        dump_matrix=args.dump_matrix,
    )
    result, code = run(config)
    if args.fmt == "json":
        print(json.dumps(result, indent=2, sort_keys=True))
    else:
        print(_format_text(result), end="")
    return code


if __name__ == "__main__":
    sys.exit(main())
