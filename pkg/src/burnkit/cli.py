"""Command-line entry point: ``burnkit {exact,bound,tree,campaign,verify}``.

Every flag can also be given in a JSON config file (``--config FILE``) using
the flag's long name with dashes turned into underscores; flags on the
command line win over the file.

Exit codes: 0 ok, 1 schedule rejected, 2 bad input, 3 answer above budget,
4 tethering violated by the graph, 5 counterexample found, 6 resume mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import (
    Tethering,
    TetheringError,
    best_packing_bound,
    linear_preset,
    tether_bound,
    trianglefree_preset,
    verify_tethering,
)
from .campaign import (
    CHECKS,
    CampaignMismatch,
    CampaignSpec,
    CampaignState,
    campaign_report,
    run_campaign,
    write_atomic,
)
from .exact import BurningSchedule, burning_number_exact, verify_schedule
from .formats import parse_graph
from .graph import DisconnectedGraphError, Graph, GraphFormatError, require_connected
from .intmath import ceil_sqrt
from .report import Report, digest_bytes, fraction_str
from .trees import (
    DegreeProfile,
    ProfileError,
    at_least_concentration,
    profile,
    thm41_predicate,
    thm41_sides,
    thm42_predicate,
    thm42_sides,
    thm43_threshold,
    thm44_k_variant,
    thm44_predicate,
    thm44_sum,
)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_TETHER = 4
EXIT_COUNTEREXAMPLE = 5
EXIT_MISMATCH = 6


class InputError(Exception):
    pass


def _load_graph(path: str, fmt: str) -> tuple[Graph, str]:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        g = parse_graph(data, fmt)
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    return g, digest_bytes(data)


def _connected(g: Graph, path: str) -> None:
    try:
        require_connected(g)
    except DisconnectedGraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(report: Report, args) -> None:
    text = report.to_json()
    if getattr(args, "report", None):
        write_atomic(args.report, text)
    sys.stdout.write(text)


def cmd_exact(args, argv) -> int:
    g, digest = _load_graph(args.graph, args.format)
    _connected(g, args.graph)
    res = burning_number_exact(g, budget=args.budget)
    target = ceil_sqrt(g.n)
    if res.known:
        well = res.burning_number <= target
    else:
        # b > budget; that only settles the question if budget >= ceil(sqrt(n))
        well = False if res.lower_bound > target else None
    result = {
        "n": g.n,
        "b": res.burning_number,
        "status": "exact" if res.known else "unknown above budget",
        "witness": list(res.witness.sources) if res.witness else None,
        "witness_verified": bool(res.witness and verify_schedule(g, res.witness)),
        "lower_bound": res.lower_bound,
        "lower_bound_proof": res.lower_bound_proof,
        "ceil_sqrt_n": target,
        "well_burnable": well,
    }
    prov = {"b": "ball-cover branch and bound", "lower_bound": res.lower_bound_proof}
    _emit(Report(argv, digest, result, prov), args)
    return EXIT_OK if res.known else EXIT_BUDGET


def _load_tethering(args) -> Tethering:
    if args.tether:
        try:
            records = json.loads(Path(args.tether).read_text())
            return Tethering.from_records(records)
        except (OSError, json.JSONDecodeError, TetheringError, TypeError) as exc:
            raise InputError(f"bad tethering file {args.tether}: {exc}") from None
    if args.preset == "trianglefree":
        if args.d is None:
            raise InputError("--preset trianglefree needs --d")
        return trianglefree_preset(args.d)
    if args.preset == "linear":
        if args.h is None:
            raise InputError("--preset linear needs --h")
        try:
            return linear_preset(float(Fraction(args.h)))
        except (ValueError, ZeroDivisionError, TetheringError) as exc:
            raise InputError(f"bad --h: {exc}") from None
    raise InputError("tether method needs --tether FILE or --preset")


def cmd_bound(args, argv) -> int:
    g = digest = None
    if args.graph:
        g, digest = _load_graph(args.graph, args.format)
        _connected(g, args.graph)
    if args.method == "pack":
        if g is None:
            raise InputError("pack method needs a graph")
        s = best_packing_bound(g)
        result = {
            "n": g.n,
            "bound": s.bound,
            "method": s.method,
            "packing_bound": s.packing_bound,
            "center_bound": s.center_bound,
            "center": s.center,
            "per_radius": {str(r): b for r, b in s.per_radius.items()},
            "certificate": None if s.best is None else {
                "radius": s.best.radius,
                "packing": list(s.best.packing),
                "bound": s.best.bound,
                "schedule": list(s.best.schedule.sources),
                "maximality_witness": {str(v): a for v, a in sorted(s.best.witness.items())},
            },
        }
        prov = {"bound": s.method, "packing_bound": "maximal r-packing: |A| + 2r",
                "center_bound": "burn from a center: rad + 1"}
        _emit(Report(argv, digest, result, prov), args)
        return EXIT_OK

    t = _load_tethering(args)
    n = g.n if g is not None else args.n
    if n is None:
        raise InputError("tether method needs a graph or --n")
    try:
        rep = tether_bound(n, t)
    except TetheringError as exc:
        raise InputError(str(exc)) from None
    result = {
        "n": n,
        "tethering": t.to_records(),
        "minimizer": rep.minimizer,
        "analytic_value": rep.analytic_value,
        "bound": rep.bound,
        "integer_bound": rep.integer_bound,
        "best_r": rep.best_r,
        "trace": [[r, v] for r, v in rep.trace],
    }
    prov = {"bound": "tethering: min of analytic value and integer scan of n/f(r) + 2r",
            "analytic_value": "max(ceil(m), min(g(floor m), g(ceil m)))"}
    code = EXIT_OK
    if g is not None:
        ok, violation = verify_tethering(g, t)
        result["tethering_holds"] = ok
        result["violation"] = None if violation is None else {"vertex": violation[0], "r": violation[1]}
        if not ok:
            result["sound_for_graph"] = False
            code = EXIT_TETHER
    _emit(Report(argv, digest, result, prov), args)
    return code


def _parse_hist(text: str) -> DegreeProfile:
    counts: dict[int, int] = {}
    try:
        for part in text.split(","):
            k, c = part.split(":")
            counts[int(k)] = counts.get(int(k), 0) + int(c)
    except ValueError:
        raise InputError(f"bad histogram {text!r}; expected 'degree:count,...'") from None
    leaves = counts.pop(1, None)
    try:
        return DegreeProfile.from_nonleaf_counts(counts, leaves)
    except ProfileError as exc:
        raise InputError(str(exc)) from None


def _verdict(value: bool, yes: str) -> dict:
    return {"value": value, "meaning": yes if value else "inconclusive"}


def tree_summary(dp: DegreeProfile) -> dict:
    out: dict = {
        "profile": {
            "n": dp.n,
            "n_prime": dp.n_prime,
            "histogram": dp.histogram(),
            "p": fraction_str(dp.p),
            "concentrations": {str(k): str(v) for k, v in dp.concentrations.items()},
        }
    }
    if dp.n_prime == 0:
        out["note"] = "no non-leaf vertices; predicates not evaluated"
        return out
    lhs, rhs = thm41_sides(dp)
    out["thm41"] = dict(_verdict(thm41_predicate(dp), "certified well-burnable"), lhs=lhs, rhs=rhs)
    d = dp.min_nonleaf_degree
    if d >= 2:
        l2, r2 = thm42_sides(dp.n, d)
        out["thm42"] = dict(_verdict(thm42_predicate(dp.n, d), "certified well-burnable"),
                            d=d, lhs=l2, rhs=r2)
    threshold = thm43_threshold(dp.p)
    if threshold is None:
        out["thm43"] = {"value": None, "meaning": "inapplicable: p >= 2/3"}
    else:
        ok = dp.n_prime >= threshold
        out["thm43"] = dict(_verdict(ok, "certified well-burnable"), threshold=threshold)
    s = thm44_sum(dp)
    out["thm44"] = dict(_verdict(thm44_predicate(dp), "well-burnable once n' is large enough"),
                        weighted_sum=str(s))
    max_deg = max(dp.counts)
    out["thm44_k"] = {
        str(k): dict(_verdict(thm44_k_variant(k, at_least_concentration(dp, k)),
                              "well-burnable once n' is large enough"),
                     concentration=str(at_least_concentration(dp, k)))
        for k in range(4, max_deg + 1)
    }
    return out


def cmd_tree(args, argv) -> int:
    if args.hist:
        dp = _parse_hist(args.hist)
        digest = digest_bytes(args.hist.encode())
    elif args.graph:
        g, digest = _load_graph(args.graph, args.format)
        try:
            dp = profile(g)
        except ProfileError as exc:
            raise InputError(f"{args.graph}: {exc}") from None
    else:
        raise InputError("tree needs a tree file or --hist")
    prov = {"thm41": "stripped-leaf bound ceil(sqrt(4n'/3)) + 2 vs ceil(sqrt(n))",
            "thm42": "n' <= floor((n-2)/(d-1)) substituted into thm41",
            "thm43": "ceiling-free threshold on n' for degree-2 share p",
            "thm44": "sum over k >= 4 of (k-3) p_k > 1/3"}
    _emit(Report(argv, digest, tree_summary(dp), prov), args)
    return EXIT_OK


def cmd_campaign(args, argv) -> int:
    if args.spec:
        try:
            spec = CampaignSpec.from_dict(json.loads(Path(args.spec).read_text()))
        except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
            raise InputError(f"bad campaign spec {args.spec}: {exc}") from None
    else:
        if args.n_max is None:
            raise InputError("campaign needs --spec or --n-max")
        checks = tuple(args.checks.split(",")) if args.checks else CHECKS
        try:
            spec = CampaignSpec(args.n_min, args.n_max, args.d or 2, checks, args.interval)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    out = Path(args.out)
    resume = None
    if args.resume:
        try:
            resume = CampaignState.from_json(Path(args.resume).read_text())
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise InputError(f"bad checkpoint {args.resume}: {exc}") from None

    def progress(line):
        print(line, file=sys.stderr, flush=True)

    try:
        state = run_campaign(spec, resume, out / "checkpoint.json", jobs=args.jobs, progress=progress)
    except CampaignMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    rep = Report(argv, spec.digest(), campaign_report(spec, state),
                 {"exact-well-burnable": "ball-cover decision at k = ceil(sqrt(n))",
                  "thm41": "degree-statistic predicate", "handshake": "2(n-1) = sum k n_k"})
    write_atomic(out / "report.json", rep.to_json())
    sys.stdout.write(rep.to_json())
    return EXIT_COUNTEREXAMPLE if state.counterexamples else EXIT_OK


def cmd_verify(args, argv) -> int:
    g, digest = _load_graph(args.graph, args.format)
    _connected(g, args.graph)
    if args.schedule:
        try:
            sources = [int(x) for x in args.schedule.split(",")]
        except ValueError:
            raise InputError(f"bad schedule {args.schedule!r}") from None
    elif args.from_report:
        try:
            sources = Report.from_json(Path(args.from_report).read_text()).result["witness"]
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise InputError(f"bad report {args.from_report}: {exc}") from None
        if not sources:
            raise InputError("report carries no witness")
    else:
        raise InputError("verify needs --schedule or --from-report")
    try:
        ok = verify_schedule(g, BurningSchedule(tuple(sources)))
    except (IndexError, ValueError) as exc:
        raise InputError(str(exc)) from None
    result = {"n": g.n, "schedule": sources, "rounds": len(sources), "valid": ok}
    _emit(Report(argv, digest, result, {"valid": "ball cover N_{k-i}(x_i)"}), args)
    return EXIT_OK if ok else EXIT_REJECTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="burnkit", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="JSON file with default flag values")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, required=True):
        p.add_argument("graph", nargs=None if required else "?", help="graph file")
        p.add_argument("--format", choices=["graph6", "edgelist"], default="edgelist")
        p.add_argument("--report", help="also write the report to this file")

    p = sub.add_parser("exact", help="exact burning number with witness")
    graph_args(p)
    p.add_argument("--budget", type=int, help="largest number of rounds to search")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bound", help="upper bounds from packings or tetherings")
    graph_args(p, required=False)
    p.add_argument("--method", choices=["pack", "tether"], default="pack")
    p.add_argument("--tether", help="tethering JSON: list of {start, form, params}")
    p.add_argument("--preset", choices=["trianglefree", "linear"])
    p.add_argument("--d", type=int)
    p.add_argument("--h", help="slope for the linear preset (rational allowed)")
    p.add_argument("--n", type=int, help="vertex count when no graph is given")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("tree", help="degree-statistic predicates for a tree")
    graph_args(p, required=False)
    p.add_argument("--hist", help="non-leaf degree histogram 'k:n_k,...' (leaves inferred)")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("campaign", help="exhaustive sweep over trees with a degree floor")
    p.add_argument("--spec", help="campaign spec JSON")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    p.add_argument("--interval", type=int, default=1000, help="trees per checkpoint")
    p.add_argument("--resume", help="checkpoint file to resume from")
    p.add_argument("--out", default="campaign-out")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_campaign)

    p = sub.add_parser("verify", help="re-check a burning schedule")
    graph_args(p)
    p.add_argument("--schedule", help="comma-separated sources x_1,...,x_k")
    p.add_argument("--from-report", help="take the witness from an exact report")
    p.set_defaults(func=cmd_verify)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    try:
        cfg = json.loads(Path(known.config).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"bad config {known.config}: {exc}") from None
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sp in action.choices.values():
                dests = {a.dest for a in sp._actions}
                sp.set_defaults(**{k: v for k, v in cfg.items() if k in dests})


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
        args = parser.parse_args(argv)
        return args.func(args, ["burnkit"] + argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
