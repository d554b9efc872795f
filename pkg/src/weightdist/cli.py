"""Command-line surface for batch computation and verification.

Exit codes: 0 success / all checks pass; 1 mathematical failure (singular,
inconsistent, non-integral, negative); 2 input error; 3 budget exceeded.
All integers are emitted as decimal strings in JSON and in full in tables;
nothing is ever rounded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import (
    AmdsInput,
    amds_distribution,
    build_pascal_system,
    build_pless_system,
    census,
    check_full_rank_regime,
    cross_check_systems,
    extremal_distribution,
    extremal_system,
    macwilliams_transform,
    mds_distribution,
    nmds_distribution,
    rank_relationship_report,
    solve_exact,
    solve_with_knowns,
    verify_counting_identity,
    verify_pless_full,
)
from .census import DEFAULT_SUBSET_BUDGET
from .codes import CodeParameters, WeightDistribution
from .enumeration import DEFAULT_ENUMERATION_BUDGET
from .errors import (
    BudgetExceededError,
    CodeFileFormatError,
    InconsistentKnownsError,
    NegativeEntryError,
    NegativeSolutionError,
    NonIntegralResultError,
    NonIntegralSolutionError,
    SingularMatrixError,
    SingularSelectionError,
    WeightDistError,
    ZeroCodeError,
)
from .fileio import (
    census_to_json,
    distribution_from_json,
    distribution_to_json,
    dumps,
    format_code_file,
    knowns_from_json,
    parse_code_file,
)
from .moments import MomentSystem
from .reference import nmds_844_codes

EXIT_OK = 0
EXIT_MATH = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

_MATH_ERRORS = (
    SingularMatrixError,
    InconsistentKnownsError,
    NonIntegralSolutionError,
    NegativeSolutionError,
    NegativeEntryError,
    NonIntegralResultError,
    SingularSelectionError,
    ZeroCodeError,
)


@dataclass
class RunConfig:
    budget: int
    census_budget: int
    workers: int
    fmt: str
    seed: int
    output: str | None


def _config(args) -> RunConfig:
    return RunConfig(
        budget=args.budget,
        census_budget=args.census_budget,
        workers=args.workers,
        fmt=args.format,
        seed=args.seed,
        output=args.output,
    )


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


def _render_distribution(cfg: RunConfig, dist: WeightDistribution,
                         extra: dict | None = None) -> str:
    if cfg.fmt == "json":
        return dumps(distribution_to_json(dist, extra))
    lines = []
    if cfg.fmt == "csv":
        lines.append("i,A_i")
        lines.extend(f"{i},{c}" for i, c in enumerate(dist.counts))
    else:
        width = max(len(str(dist.n)), 2)
        lines.append(f"{'i':>{width}}  A_i")
        lines.extend(f"{i:>{width}}  {c}" for i, c in enumerate(dist.counts))
        if extra:
            lines.extend(f"{k} = {v}" for k, v in extra.items())
    return "\n".join(lines) + "\n"


def _load_code(path: str):
    return parse_code_file(Path(path).read_text())


def _load_json_arg(text: str):
    """Inline JSON if it looks like it, else a file path."""
    s = text.strip()
    if s.startswith("{") or s.startswith("["):
        return json.loads(s)
    return json.loads(Path(text).read_text())


def _params_from_args(args, cfg: RunConfig) -> CodeParameters:
    if args.code:
        return _load_code(args.code).parameters(budget=cfg.budget)
    missing = [f for f in ("n", "k", "q", "d", "dperp") if getattr(args, f) is None]
    if missing:
        raise CodeFileFormatError(
            f"give --code or all of --n --k --q --d --dperp (missing {missing})")
    return CodeParameters(n=args.n, k=args.k, d=args.d, d_perp=args.dperp, q=args.q)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    cfg = _config(args)
    code = _load_code(args.codefile)
    dist = code.weight_distribution(budget=cfg.budget, workers=cfg.workers)
    extra = {}
    try:
        p = code.parameters(budget=cfg.budget)
        extra = {"d": p.d, "d_perp": p.d_perp, "sigma": p.sigma}
    except ZeroCodeError:
        pass  # degenerate k = 0 or k = n: distribution still valid
    _emit(cfg, _render_distribution(cfg, dist, extra))
    return EXIT_OK


def cmd_dual(args) -> int:
    cfg = _config(args)
    code = _load_code(args.codefile)
    _emit(cfg, format_code_file(code.dual()))
    return EXIT_OK


def cmd_census(args) -> int:
    cfg = _config(args)
    code = _load_code(args.codefile)
    M = code.G if args.matrix == "g" else code.H
    cen = census(M, args.nu, budget=cfg.census_budget)
    if cfg.fmt == "json":
        _emit(cfg, dumps(census_to_json(cen)))
    else:
        lines = [f"nu = {cen.nu}"]
        lines += [f"rank {r}: {c}" for r, c in sorted(cen.counts.items())]
        _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def _trivial_plus_seed_knowns(A: WeightDistribution, params: CodeParameters) -> dict[int, int]:
    knowns = {i: A.counts[i] for i in range(params.d)}
    need = (params.n + 1 - params.d_perp) - len(knowns)
    for i in range(params.d, params.n + 1):
        if need <= 0:
            break
        knowns[i] = A.counts[i]
        need -= 1
    return knowns


def cmd_verify(args) -> int:
    cfg = _config(args)
    code = _load_code(args.codefile)
    if args.inject_distribution:
        A = distribution_from_json(_load_json_arg(args.inject_distribution))
    else:
        A = code.weight_distribution(budget=cfg.budget, workers=cfg.workers)
    which = args.which
    results: list[tuple[str, bool, str]] = []

    def run(name: str, fn) -> None:
        try:
            ok, detail = fn()
        except WeightDistError as e:
            ok, detail = False, f"{type(e).__name__}: {e}"
        results.append((name, ok, detail))

    if which in ("identity", "all"):
        def check_identity():
            for nu in range(1, code.n + 1):
                lhs, rhs, ok = verify_counting_identity(code, A, nu, budget=cfg.census_budget)
                if not ok:
                    return False, f"nu={nu}: {lhs} != {rhs}"
            return True, f"all nu in 1..{code.n}"
        run("identity", check_identity)
    if which in ("pless", "all"):
        def check_pless():
            B = macwilliams_transform(A)
            for nu in range(0, code.n + 1):
                lhs, rhs, ok = verify_pless_full(A, B, nu)
                if not ok:
                    return False, f"nu={nu}: {lhs} != {rhs}"
            return True, f"all nu in 0..{code.n}"
        run("pless", check_pless)
    if which in ("regime", "all"):
        def check_regime():
            params = code.parameters(budget=cfg.budget)
            for nu in range(code.n - params.d_perp + 1, code.n + 1):
                if not check_full_rank_regime(code, nu, d_perp=params.d_perp,
                                              budget=cfg.census_budget):
                    return False, f"nu={nu} not concentrated at rank n-k"
            return True, f"all nu > {code.n - params.d_perp}"
        run("regime", check_regime)
    if which in ("crosscheck", "all"):
        def check_crosscheck():
            params = code.parameters(budget=cfg.budget)
            knowns = _trivial_plus_seed_knowns(A, params)
            ap, al, agree = cross_check_systems(params, knowns)
            if not agree:
                return False, "system solutions differ"
            if ap.counts != A.counts:
                return False, "solutions differ from the enumerated distribution"
            return True, "both systems reproduce the enumerated distribution"
        run("crosscheck", check_crosscheck)

    width = max(len(n) for n, _, _ in results)
    lines = [f"{name:<{width}}  {'PASS' if ok else 'FAIL'}  {detail}"
             for name, ok, detail in results]
    _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_MATH


def _solve_from(params: CodeParameters, knowns: dict[int, int], system: str) -> WeightDistribution:
    S: MomentSystem = (build_pascal_system(params) if system == "pascal"
                       else build_pless_system(params))
    return solve_with_knowns(S, knowns)


def cmd_solve(args) -> int:
    cfg = _config(args)
    params = _params_from_args(args, cfg)
    knowns = knowns_from_json(_load_json_arg(args.knowns))
    try:
        dist = _solve_from(params, knowns, args.system)
    except SingularMatrixError as e:
        msg = f"singular system (rank {e.rank})"
        if e.kernel_vector is not None:
            msg += f"; kernel vector {tuple(str(x) for x in e.kernel_vector)}"
        print(msg, file=sys.stderr)
        return EXIT_MATH
    _emit(cfg, _render_distribution(cfg, dist))
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    cfg = _config(args)
    params = _params_from_args(args, cfg)
    knowns = knowns_from_json(_load_json_arg(args.knowns))
    ap, al, agree = cross_check_systems(params, knowns)
    obj = {
        "pascal": distribution_to_json(ap),
        "pless": distribution_to_json(al),
        "agree": agree,
    }
    _emit(cfg, dumps(obj))
    return EXIT_OK if agree else EXIT_MATH


def cmd_mds(args) -> int:
    cfg = _config(args)
    _emit(cfg, _render_distribution(cfg, mds_distribution(args.n, args.k, args.q)))
    return EXIT_OK


def cmd_nmds(args) -> int:
    cfg = _config(args)
    _emit(cfg, _render_distribution(cfg, nmds_distribution(args.n, args.k, args.q, args.a_d)))
    return EXIT_OK


def cmd_amds(args) -> int:
    cfg = _config(args)
    seeds = tuple(int(s) for s in args.seeds.split(","))
    dist = amds_distribution(AmdsInput(args.n, args.k, args.q, args.sigma, seeds))
    _emit(cfg, _render_distribution(cfg, dist))
    return EXIT_OK


def cmd_extremal(args) -> int:
    cfg = _config(args)
    _emit(cfg, _render_distribution(cfg, extremal_distribution(args.m)))
    return EXIT_OK


def cmd_pless_report(args) -> int:
    cfg = _config(args)
    params = _params_from_args(args, cfg)
    rep = rank_relationship_report(params)
    obj = {
        "pascal_rank": rep.pascal_rank,
        "pless_rank": rep.pless_rank,
        "joint_rank": rep.joint_rank,
        "rows_each": rep.rows_each,
        "n_unknowns": rep.n_unknowns,
    }
    _emit(cfg, dumps(obj))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    """Regenerate the golden files the test suite cross-references."""
    cfg = _config(args)
    outdir = Path(cfg.output or "fixtures")
    outdir.mkdir(parents=True, exist_ok=True)
    a, b = nmds_844_codes()
    (outdir / "nmds_844_a.code").write_text(format_code_file(a))
    (outdir / "nmds_844_b.code").write_text(format_code_file(b))
    (outdir / "nmds_844_a.dist.json").write_text(
        dumps(distribution_to_json(a.weight_distribution(budget=cfg.budget))))
    (outdir / "nmds_844_b.dist.json").write_text(
        dumps(distribution_to_json(b.weight_distribution(budget=cfg.budget))))

    reports = {}
    for name, nus in (("independent", [22, 24]), ("dependent", [23, 24])):
        S = extremal_system(1, nus, include_symmetry=True)
        entry: dict = {"relation_widths": nus, "symmetry_rows": 1}
        try:
            x = solve_exact(S.matrix, S.rhs)
            entry["solution"] = {str(u): str(v) for u, v in zip(S.col_labels, x)}
        except SingularMatrixError as e:
            entry["singular"] = True
            entry["rank"] = e.rank
            entry["kernel_vector"] = [str(v) for v in e.kernel_vector]
        reports[name] = entry
    (outdir / "extremal_m1_systems.json").write_text(dumps(reports))
    (outdir / "extremal_m1.dist.json").write_text(
        dumps(distribution_to_json(extremal_distribution(1))))

    mds_table = {}
    for q in (4, 5, 7, 8, 9):
        for k in range(1, q + 1):
            d = mds_distribution(q, k, q)
            mds_table[f"[{q},{k}]_{q}"] = [str(c) for c in d.counts]
    (outdir / "mds_table.json").write_text(dumps(mds_table))

    nmds_table = {
        "[8,4,4]_4 A_4=27": [str(c) for c in nmds_distribution(8, 4, 4, 27).counts],
        "[8,4,4]_4 A_4=30": [str(c) for c in nmds_distribution(8, 4, 4, 30).counts],
    }
    (outdir / "nmds_table.json").write_text(dumps(nmds_table))
    sys.stdout.write(f"fixtures written to {outdir}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET,
                        help="max codewords to enumerate (default 1e8)")
    common.add_argument("--census-budget", type=int, default=DEFAULT_SUBSET_BUDGET,
                        help="max column subsets per census (default 1e7)")
    common.add_argument("--workers", type=int, default=1,
                        help="parallel workers for enumeration")
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized corpora (reserved)")
    common.add_argument("--output", help="write to this path instead of stdout")

    params_help = argparse.ArgumentParser(add_help=False)
    params_help.add_argument("--code", help="code file to derive parameters from")
    params_help.add_argument("--n", type=int)
    params_help.add_argument("--k", type=int)
    params_help.add_argument("--q", type=int)
    params_help.add_argument("--d", type=int)
    params_help.add_argument("--dperp", type=int)

    p = argparse.ArgumentParser(
        prog="weightdist",
        description="Exact weight distributions of linear codes over finite fields.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[common],
                       help="brute-force distribution and parameters of a code file")
    s.add_argument("codefile")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("dual", parents=[common], help="emit the dual code file")
    s.add_argument("codefile")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("census", parents=[common],
                       help="rank census of the parity-check (or generator) columns")
    s.add_argument("codefile")
    s.add_argument("--nu", type=int, required=True)
    s.add_argument("--matrix", choices=("h", "g"), default="h")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify", parents=[common],
                       help="run consistency checks against the enumeration oracle")
    s.add_argument("codefile")
    s.add_argument("--which", choices=("identity", "pless", "regime", "crosscheck", "all"),
                   default="all")
    s.add_argument("--inject-distribution",
                   help="JSON distribution to check instead of the enumerated one "
                        "(negative testing)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", parents=[common, params_help],
                       help="recover a distribution from known weights")
    s.add_argument("--knowns", required=True,
                   help='JSON map {"i": "A_i"} (inline or a file path); '
                        "a full distribution object is accepted too")
    s.add_argument("--system", choices=("pascal", "pless"), default="pascal")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("crosscheck", parents=[common, params_help],
                       help="solve both systems and compare")
    s.add_argument("--knowns", required=True)
    s.set_defaults(func=cmd_crosscheck)

    s = sub.add_parser("mds", parents=[common], help="closed-form MDS distribution")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_mds)

    s = sub.add_parser("nmds", parents=[common],
                       help="closed-form near-MDS distribution from A_d")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("q", type=int)
    s.add_argument("a_d", type=int)
    s.set_defaults(func=cmd_nmds)

    s = sub.add_parser("amds", parents=[common],
                       help="closed-form almost-MDS distribution from seed weights")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("q", type=int)
    s.add_argument("sigma", type=int)
    s.add_argument("seeds", help="comma-separated A_{n-k},...,A_{n-k+sigma-2}")
    s.set_defaults(func=cmd_amds)

    s = sub.add_parser("extremal", parents=[common],
                       help="distribution of a [24m,12m,4m+4] type II code")
    s.add_argument("m", type=int)
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("pless-report", parents=[common, params_help],
                       help="ranks of the two moment systems and their stack")
    s.set_defaults(func=cmd_pless_report)

    s = sub.add_parser("fixtures", parents=[common],
                       help="regenerate golden files (default ./fixtures)")
    s.set_defaults(func=cmd_fixtures)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except _MATH_ERRORS as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_MATH
    except (WeightDistError, ValueError, OSError, json.JSONDecodeError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
