"""Command-line front end: certificates as text or JSON.

Exit codes: 0 ok/verified, 1 verification failed, 2 usage error, 3 not covered.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from fractions import Fraction as Q
from typing import Any, Dict, List, Optional, Sequence

from .cascade import kostant_cascade
from .chevalley import build_lie_table
from .pairs import NotCovered, PairCandidate, construct_candidate, covered_cases
from .parabolic import build_parabolic, epsilon_criterion, polynomiality_verdict
from .rootsys import RootSystemError, build_root_system, format_root, parse_root
from .search import f4_s3_search
from .verify import generic_index, regularity_certificate

SCHEMA_VERSION = "1.0"
EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NOT_COVERED = 0, 1, 2, 3

log = logging.getLogger("parabolic_slices")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # keep argparse from calling sys.exit
        raise UsageError(message)


# --- JSON helpers ------------------------------------------------------------


def jnum(x) -> Any:
    """Integers stay integers; other rationals become 'p/q' strings."""
    x = Q(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def jroot(r) -> List[int]:
    return [int(c) for c in r]


def jroots(rs) -> List[List[int]]:
    return [jroot(r) for r in rs]


# --- payloads ----------------------------------------------------------------


def cascade_payload(kind: str, rank: int, subset: Optional[Sequence[int]] = None) -> Dict[str, Any]:
    rs = build_root_system(kind, rank)
    if subset is not None:
        bad = [a for a in subset if not 1 <= a <= rank]
        if bad:
            raise RootSystemError(f"subset indices out of range: {bad}")
    casc = kostant_cascade(rs, subset)
    return {
        "type": rs.kind,
        "rank": rs.rank,
        "subset": sorted(casc.subset),
        "nodes": [
            {
                "key": list(n.key),
                "label": n.label,
                "beta": jroot(n.beta),
                "component": n.kind,
                "heisenberg_size": len(n.hset),
            }
            for n in casc.nodes
        ],
    }


def orbits_payload(kind: str, rank: int, s: int) -> Dict[str, Any]:
    ctx = build_parabolic(build_root_system(kind, rank), s)
    return {
        "type": ctx.rs.kind,
        "rank": rank,
        "s": s,
        "components": [{"type": c.name, "simple_roots": list(c.simple_roots)} for c in ctx.components],
        "i": {str(a): b for a, b in sorted(ctx.i_perm.items())},
        "j": {str(a): b for a, b in sorted(ctx.j_perm.items())},
        "orbits": [sorted(o) for o in ctx.orbits],
        "E1": [sorted(o) for o in ctx.E1],
        "E2": [sorted(o) for o in ctx.E2],
        "index": ctx.index,
        "dim_p": ctx.dim,
    }


def epsilon_payload(kind: str, rank: int, s: int) -> Dict[str, Any]:
    ctx = build_parabolic(build_root_system(kind, rank), s)
    rep = epsilon_criterion(ctx)
    return {
        "type": ctx.rs.kind,
        "rank": rank,
        "s": s,
        "orbits": [
            {
                "orbit": list(o.orbit),
                "j_stable": o.j_stable,
                "in_B_pi": o.in_B_pi,
                "in_B_levi": o.in_B_levi,
                "epsilon": jnum(o.epsilon),
            }
            for o in rep.orbits
        ],
        "criterion_holds": rep.holds,
        "verdict": polynomiality_verdict(ctx, rep),
    }


def candidate_payload(cand: PairCandidate) -> Dict[str, Any]:
    out = {
        "name": cand.name,
        "provenance": cand.provenance,
        "S_plus": jroots(cand.S_plus),
        "S_minus": jroots(cand.S_minus),
        "T_plus": jroots(cand.T_plus),
        "T_minus": jroots(cand.T_minus),
        "has_cover": cand.cover is not None,
    }
    if cand.coefficients:
        out["coefficients"] = [[jroot(r), jnum(c)] for r, c in sorted(cand.coefficients.items())]
    return out


def certificate_payload(cert) -> Dict[str, Any]:
    return {
        "verdict": cert.verdict,
        "index": cert.index,
        "dim_p": cert.dim_p,
        "codim": cert.codim,
        "cond1": cert.cond1,
        "cond2": cert.cond2,
        "cond3": cert.cond3,
        "cond4": cert.cond4,
        "basis_det": jnum(cert.basis_det),
        "phi_rank": cert.phi_rank,
        "phi_dim": cert.phi_dim,
        "complement_ok": cert.complement_ok,
        "h": None if cert.h is None else [jnum(c) for c in cert.h],
        "s_h_ok": cert.s_h_ok,
        "eigenvalues": [jnum(m) for m in cert.eigenvalues],
        "degrees": [jnum(d) for d in cert.degrees],
        "witnesses": list(cert.witnesses),
    }


def parse_coeffs(items: Sequence[str], rank: int) -> Dict[tuple, Q]:
    out = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"coefficient {item!r} is not of the form ROOT=VALUE")
        root, val = item.rsplit("=", 1)
        try:
            out[parse_root(root, rank)] = Q(val)
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"bad coefficient {item!r}: {e}") from None
    return out


def pair_payload(kind: str, rank: int, s: int, verify: bool, coeffs: Sequence[str] = ()) -> tuple:
    ctx = build_parabolic(build_root_system(kind, rank), s)
    cand = construct_candidate(ctx)
    if isinstance(cand, NotCovered):
        return "not-covered", {"name": cand.name, "reason": cand.reason}
    if coeffs:
        try:
            cand = cand.with_coefficients(parse_coeffs(coeffs, ctx.rs.rank))
        except RootSystemError as e:
            raise UsageError(str(e)) from None
    payload = {"candidate": candidate_payload(cand), "index": ctx.index}
    if not verify:
        return "ok", payload
    cert = regularity_certificate(build_lie_table(ctx.rs), ctx, cand)
    payload["certificate"] = certificate_payload(cert)
    return ("ok" if cert.verdict else "failed"), payload


def check_all_payload(max_rank: int, seed: int, trials: int) -> tuple:
    rows = []
    ok = True
    for kind, n, s in covered_cases(max_rank):
        t0 = time.perf_counter()
        ctx = build_parabolic(build_root_system(kind, n), s)
        cand = construct_candidate(ctx)
        L = build_lie_table(ctx.rs)
        cert = regularity_certificate(L, ctx, cand)
        row = {
            "type": ctx.rs.kind,
            "rank": n,
            "s": s,
            "verdict": cert.verdict,
            "index": ctx.index,
            "codim": cert.codim,
            "basis_det": jnum(cert.basis_det),
            "eigenvalues": [jnum(m) for m in cert.eigenvalues],
            "degrees": [jnum(d) for d in cert.degrees],
            "provenance": cand.provenance,
        }
        if trials > 0:
            row["generic_index"] = generic_index(L, ctx, seed, trials)
            row["verdict"] = cert.verdict and row["generic_index"] == ctx.index
        ok = ok and row["verdict"]
        rows.append(row)
        log.info("%s: %s (%.2fs)", ctx.name, "ok" if row["verdict"] else "FAILED", time.perf_counter() - t0)
    return ("ok" if ok else "failed"), {"cases": rows, "total": len(rows), "passed": sum(r["verdict"] for r in rows)}


def search_payload(jobs: int, seed: int) -> tuple:
    rep = f4_s3_search(jobs=jobs, seed=seed)

    def cand(c):
        return {
            "h": [jnum(x) for x in c.h],
            "minus_one_roots": jroots(c.minus_one_roots),
            "eigenvalues": [jnum(x) for x in c.eigenvalues],
            "codim": c.codim,
        }

    payload = {
        "enumeration_size": rep.enumeration_size,
        "unique_solutions": rep.unique_solutions,
        "literal": [cand(c) for c in rep.literal],
        "relaxed": [cand(c) for c in rep.relaxed],
        "degenerate_families": [
            {"fixed": [[jroot(r), jnum(v)] for r, v in f.fixed], "minus_one_roots": jroots(f.minus_one_roots), "codim": f.codim}
            for f in rep.degenerate
        ],
        "eigenspace_sizes": [[k, v] for k, v in rep.eigenspace_sizes],
        "exists_adapted_pair_literal": rep.exists_adapted_pair_literal,
        "exists_adapted_pair_relaxed": rep.exists_adapted_pair_relaxed,
        "exists_adapted_pair": rep.exists_adapted_pair,
    }
    return "ok", payload


# --- text rendering ----------------------------------------------------------


def _fmt(x) -> str:
    if isinstance(x, list) and x and all(isinstance(c, int) for c in x):
        return format_root(x)
    if isinstance(x, list):
        return "[" + ", ".join(_fmt(c) for c in x) + "]"
    return str(x)


def render_text(report: Dict[str, Any]) -> str:
    lines = [f"{report['command']}: {report['status']}"]
    payload = report["payload"]
    if report["command"] == "cascade":
        for n in payload["nodes"]:
            lines.append(f"  {n['label']:<14} {format_root(n['beta'])}  [{n['component']}, |H| = {n['heisenberg_size']}]")
    elif report["command"] == "check-all":
        for r in payload["cases"]:
            mark = "ok" if r["verdict"] else "FAILED"
            lines.append(f"  {r['type']}{'' if r['type'][-1].isdigit() else r['rank']} s={r['s']}: {mark}  index {r['index']}, degrees {r['degrees']}")
        lines.append(f"  {payload['passed']}/{payload['total']} cases verified")
    elif report["command"] == "search-f4s3":
        for k in ("enumeration_size", "unique_solutions", "eigenspace_sizes", "exists_adapted_pair_literal",
                  "exists_adapted_pair_relaxed"):
            lines.append(f"  {k}: {_fmt(payload[k])}")
        lines.append(f"  survivors: {len(payload['literal'])} literal, {len(payload['relaxed'])} relaxed, "
                     f"{len(payload['degenerate_families'])} degenerate families")
    else:
        for k, v in payload.items():
            if isinstance(v, dict):
                lines.append(f"  {k}:")
                for k2, v2 in v.items():
                    lines.append(f"    {k2}: {_fmt(v2)}")
            elif isinstance(v, list) and v and isinstance(v[0], dict):
                lines.append(f"  {k}:")
                for item in v:
                    lines.append("    " + ", ".join(f"{a}={_fmt(b)}" for a, b in item.items()))
            else:
                lines.append(f"  {k}: {_fmt(v)}")
    return "\n".join(lines)


# --- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="parabolic-slices", description="Adapted pairs for truncated maximal parabolics.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def typed(sp):
        sp.add_argument("--type", required=True, dest="kind")
        sp.add_argument("--rank", required=True, type=int)

    c = sub.add_parser("cascade", parents=[common], help="Kostant cascade")
    typed(c)
    c.add_argument("--subset", help="comma separated simple-root indices")
    for name, hlp in (("orbits", "involutions, orbits, index"), ("epsilon", "polynomiality criterion")):
        sp = sub.add_parser(name, parents=[common], help=hlp)
        typed(sp)
        sp.add_argument("--s", required=True, type=int)
    pr = sub.add_parser("pair", parents=[common], help="candidate (S, T) and its certificate")
    typed(pr)
    pr.add_argument("--s", required=True, type=int)
    pr.add_argument("--verify", action="store_true")
    pr.add_argument("--coeffs", action="append", default=[], metavar="ROOT=VALUE",
                    help="override a coefficient of y, e.g. --coeffs=1,2,2,2,2=3/2 (use the = form for negative roots)")
    ca = sub.add_parser("check-all", parents=[common], help="verify every covered case")
    ca.add_argument("--max-rank", type=int, default=8)
    ca.add_argument("--seed", type=int, default=0)
    ca.add_argument("--trials", type=int, default=5, help="generic-index trials per case (0 skips)")
    se = sub.add_parser("search-f4s3", parents=[common], help="adapted-pair search for F4, s = 3")
    se.add_argument("--jobs", type=int, default=1)
    se.add_argument("--seed", type=int, default=0)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    request = {k: v for k, v in vars(args).items() if k not in ("format", "verbose")}
    try:
        if args.command == "cascade":
            subset = None
            if args.subset:
                try:
                    subset = [int(a) for a in args.subset.split(",")]
                except ValueError:
                    raise UsageError(f"bad subset {args.subset!r}") from None
            status, payload = "ok", cascade_payload(args.kind, args.rank, subset)
        elif args.command == "orbits":
            status, payload = "ok", orbits_payload(args.kind, args.rank, args.s)
        elif args.command == "epsilon":
            status, payload = "ok", epsilon_payload(args.kind, args.rank, args.s)
        elif args.command == "pair":
            status, payload = pair_payload(args.kind, args.rank, args.s, args.verify, args.coeffs)
        elif args.command == "check-all":
            status, payload = check_all_payload(args.max_rank, args.seed, args.trials)
        else:
            if args.jobs < 1:
                raise UsageError("--jobs must be >= 1")
            status, payload = search_payload(args.jobs, args.seed)
    except (UsageError, RootSystemError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    report = {"schema_version": SCHEMA_VERSION, "command": args.command, "request": request, "status": status,
              "payload": payload}
    if args.format == "json":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        out.write(render_text(report) + "\n")
    return {"ok": EXIT_OK, "failed": EXIT_FAILED, "not-covered": EXIT_NOT_COVERED}[status]


def main() -> None:
    sys.exit(run())
