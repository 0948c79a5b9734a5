"""Command-line front end.

Commands: compute (single invariants), verify (claim registry sweeps),
search (bounded realization search), family (construct + predict + check).
JSON output is stable: keys sorted, arrays sorted. Exit codes: 0 success,
1 library/usage error, 2 argparse usage error, 3 budget exceeded,
4 falsified claim or failed match.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .budget import DEFAULT_INF_BUDGET, DEFAULT_ZERO_BUDGET, Budget
from .errors import BudgetExceeded, SemigroupError
from .factorization import P0, P1, PINF, delta_set_of_element, length_set
from .families import construct_family, parse_family, predicted_delta
from .infinity import delta_inf_semigroup
from .presentation import betti_elements, minimal_presentation, trade_value
from .semigroup import apery_set, contains, frobenius, make_semigroup
from .verification import CLAIMS, run_all, run_claim
from .search import search_delta
from .zero import delta0_semigroup, delta0_stability_bound

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 3
EXIT_FALSIFIED = 4


def _parse_p(text: str):
    if text in ("inf", "oo"):
        return PINF
    if text == "0":
        return P0
    if text == "1":
        return P1
    raise ValueError(f"p must be 0, 1 or inf, got {text!r}")


def _p_name(p) -> str:
    return "inf" if p == PINF else str(p)


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def _parse_gens(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.replace(" ", "").split(",") if t)


def _budget(args, default: Budget) -> Budget | None:
    if args.budget_elements is None and args.budget_factorizations is None and args.budget_seconds is None:
        return None
    return Budget(
        max_element=args.budget_elements or default.max_element,
        max_factorizations=args.budget_factorizations or default.max_factorizations,
        max_seconds=args.budget_seconds,
    )


def _budget_echo(budget: Budget | None) -> dict:
    if budget is None:
        return {"defaults": True}
    return {
        "max_element": budget.max_element,
        "max_factorizations": budget.max_factorizations,
        "max_seconds": budget.max_seconds,
    }


# ---------------------------------------------------------------------------
# cache


def _cache_dir(args) -> Path | None:
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get("SGDELTA_CACHE_DIR")
    return Path(env) if env else None


def _cache_key(payload: dict) -> str:
    blob = json.dumps({"version": __version__, **payload}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _cache_get(cdir: Path | None, key: str):
    if cdir is None:
        return None
    f = cdir / f"{key}.json"
    if f.exists():
        return json.loads(f.read_text())
    return None


def _cache_put(cdir: Path | None, key: str, value: dict) -> None:
    if cdir is None:
        return
    cdir.mkdir(parents=True, exist_ok=True)
    (cdir / f"{key}.json").write_text(json.dumps(value, sort_keys=True))


# ---------------------------------------------------------------------------
# commands


def _cmd_compute(args) -> tuple[dict, int]:
    gens = _parse_gens(args.gens)
    what = args.what
    cdir = _cache_dir(args)
    key_payload = {
        "command": "compute",
        "gens": gens,
        "what": what,
        "x": args.x,
        "m": args.m,
        "p": args.p,
        "budget": _budget_echo(_budget(args, DEFAULT_INF_BUDGET)),
    }
    key = _cache_key(key_payload)
    cached = _cache_get(cdir, key)
    if cached is not None:
        return {"result": cached["result"], **({"certificate": cached["certificate"]} if "certificate" in cached else {}), "cached": True}, EXIT_OK

    if what in ("membership", "lengths", "delta") and args.x is None:
        raise ValueError(f"{what} needs --x")
    if what == "apery" and args.m is None:
        raise ValueError("apery needs --m")

    s = make_semigroup(gens)
    result: dict = {"generators": list(s.generators)}
    if s.removed:
        result["removed"] = list(s.removed)
    certificate = None

    if what == "membership":
        result["x"] = args.x
        result["member"] = contains(s, args.x)
    elif what == "apery":
        t = apery_set(s, args.m)
        result["modulus"] = t.modulus
        result["entries"] = list(t.entries)
    elif what == "frobenius":
        result["frobenius"] = frobenius(s)
    elif what == "betti":
        result["betti"] = betti_elements(s)
    elif what == "presentation":
        pres = minimal_presentation(s)
        result["betti"] = list(pres.betti)
        result["trades"] = [
            {"element": trade_value(s, t), "left": list(t.left), "right": list(t.right)}
            for t in pres.trades
        ]
    elif what in ("lengths", "delta"):
        p = _parse_p(args.p)
        ls = length_set(s, args.x, p)
        result["x"] = args.x
        result["p"] = _p_name(p)
        result["lengths"] = list(ls.values)
        if what == "delta":
            result["delta"] = list(delta_set_of_element(s, args.x, p).values)
    elif what == "delta-semigroup":
        p = _parse_p(args.p)
        result["p"] = _p_name(p)
        if p == P0:
            d = delta0_semigroup(s, budget=_budget(args, DEFAULT_ZERO_BUDGET))
            result["delta"] = list(d.values)
            result["stability_bound"] = delta0_stability_bound(s)
        elif p == PINF:
            d, cert = delta_inf_semigroup(s, budget=_budget(args, DEFAULT_INF_BUDGET))
            result["delta"] = list(d.values)
            certificate = {
                "start": cert.start,
                "period": cert.period,
                "window_periods": cert.window_periods,
                "mode": cert.mode,
                "union_horizon": cert.union_horizon,
            }
        else:
            raise ValueError("delta-semigroup supports p = 0 and p = inf")
    else:
        raise ValueError(f"unknown computation {what!r}")

    payload = {"result": result}
    if certificate is not None:
        payload["certificate"] = certificate
    _cache_put(cdir, key, payload)
    return payload, EXIT_OK


def _cmd_verify(args) -> tuple[dict, int]:
    params = {
        "quick": args.quick,
        "extended": args.extended,
        "workers": args.threads,
        "budget": _budget(args, DEFAULT_INF_BUDGET),
    }
    if args.m:
        params["m_range"] = _parse_range(args.m)
    if args.k:
        params["k_range"] = _parse_range(args.k)
    if args.x:
        params["x_range"] = _parse_range(args.x)
    if args.max_gen:
        params["max_gen"] = args.max_gen
    if args.gens:
        params["gens"] = _parse_gens(args.gens)

    if args.claim == "all":
        instances = run_all(**params)
    else:
        instances = run_claim(args.claim, **params)
    rows = [
        {"claim": i.claim, "instance": i.label, "status": i.status, "detail": i.detail}
        for i in instances
    ]
    summary = {
        st: sum(1 for i in instances if i.status == st)
        for st in ("pass", "fail", "report", "budget")
    }
    code = EXIT_FALSIFIED if summary["fail"] else EXIT_OK
    return {"result": {"instances": rows, "summary": summary}}, code


def _cmd_search(args) -> tuple[dict, int]:
    p = _parse_p(args.p)
    budget = _budget(args, DEFAULT_ZERO_BUDGET if p == P0 else DEFAULT_INF_BUDGET)
    report = search_delta(
        _parse_gens(args.target),
        p,
        max_dim=args.max_dim,
        max_gen=args.max_gen,
        budget=budget,
        workers=args.threads,
    )
    result = {
        "target": list(report.target),
        "p": _p_name(p),
        "max_dim": report.max_dim,
        "max_gen": report.max_gen,
        "tested": report.tested,
        "hits": [list(h) for h in report.hits],
        "skipped": [{"generators": list(g), "reason": r} for g, r in report.skipped],
        "exhausted": report.exhausted,
    }
    return {"result": result}, EXIT_OK


def _cmd_family(args) -> tuple[dict, int]:
    spec = parse_family(args.spec)
    s = construct_family(spec)
    ps = [P0, PINF] if args.p == "both" else [_parse_p(args.p)]
    checks = {}
    worst = EXIT_OK
    for p in ps:
        pred = predicted_delta(spec, p)
        entry: dict = {"predicted": pred.describe() if pred else "unspecified"}
        try:
            if p == P0:
                computed = delta0_semigroup(s, budget=_budget(args, DEFAULT_ZERO_BUDGET))
            else:
                computed = delta_inf_semigroup(s, budget=_budget(args, DEFAULT_INF_BUDGET))[0]
            entry["computed"] = list(computed.values)
            if pred is not None:
                entry["match"] = pred.matches(computed)
                if not entry["match"]:
                    worst = EXIT_FALSIFIED
        except BudgetExceeded as e:
            entry["status"] = "budget"
            entry["detail"] = str(e)
        checks[_p_name(p)] = entry
    result = {
        "family": spec.text(),
        "generators": list(s.generators),
        "checks": checks,
    }
    return {"result": result}, worst


# ---------------------------------------------------------------------------
# output


def _csv_lines(command: str, envelope: dict) -> list[str]:
    res = envelope.get("result", {})
    lines = ["x,invariant,value"]
    if command == "verify":
        lines = ["instance,claim,status,detail"]
        for row in res["instances"]:
            detail = row["detail"].replace(",", ";")
            lines.append(f"{row['instance'].replace(',', ';')},{row['claim']},{row['status']},{detail}")
        return lines
    if command == "search":
        lines = ["generators,status"]
        for h in res["hits"]:
            lines.append(f"{';'.join(map(str, h))},hit")
        for srow in res["skipped"]:
            lines.append(f"{';'.join(map(str, srow['generators']))},budget")
        return lines
    if command == "family":
        lines = ["p,predicted,computed,match"]
        for p, entry in sorted(res["checks"].items()):
            lines.append(
                f"{p},{entry.get('predicted', '')},"
                f"{';'.join(map(str, entry.get('computed', [])))},{entry.get('match', '')}"
            )
        return lines
    x = res.get("x", "")
    for key in ("member", "frobenius", "modulus", "stability_bound"):
        if key in res:
            lines.append(f"{x},{key},{res[key]}")
    for key in ("entries", "betti", "lengths", "delta"):
        if key in res:
            lines.append(f"{x},{key},{';'.join(map(str, res[key]))}")
    return lines


def _emit(args, command: str, envelope: dict, started: float) -> None:
    envelope = dict(envelope)
    out = {
        "command": command,
        "input": {k: v for k, v in vars(args).items() if k not in ("func", "format") and v is not None},
        "result": envelope.get("result"),
        "timing": {"seconds": round(time.monotonic() - started, 6), "cached": envelope.get("cached", False)},
        "budget": _budget_echo(_budget(args, DEFAULT_INF_BUDGET)),
    }
    if "certificate" in envelope:
        out["certificate"] = envelope["certificate"]
    if args.format == "csv":
        print("\n".join(_csv_lines(command, envelope)))
    else:
        print(json.dumps(out, sort_keys=True, default=str))


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("json", "csv"), default="json")
    shared.add_argument("--budget-elements", type=int, default=None)
    shared.add_argument("--budget-factorizations", type=int, default=None)
    shared.add_argument("--budget-seconds", type=float, default=None)
    shared.add_argument("--threads", type=int, default=1)
    shared.add_argument("--cache-dir", default=None)

    top = argparse.ArgumentParser(prog="sgdelta", description=__doc__)
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[shared], help="compute one invariant")
    c.add_argument("--gens", required=True, help="comma-separated generators")
    c.add_argument(
        "what",
        choices=(
            "membership",
            "apery",
            "frobenius",
            "betti",
            "presentation",
            "lengths",
            "delta",
            "delta-semigroup",
        ),
    )
    c.add_argument("--x", type=int, default=None)
    c.add_argument("--m", type=int, default=None)
    c.add_argument("--p", default="inf")
    c.set_defaults(func=_cmd_compute)

    v = sub.add_parser("verify", parents=[shared], help="run registered claims")
    v.add_argument("claim", help="claim id or 'all'")
    v.add_argument("--quick", action="store_true")
    v.add_argument("--extended", action="store_true")
    v.add_argument("--list", action="store_true", dest="list_claims")
    v.add_argument("--m", default=None, help="range lo..hi")
    v.add_argument("--k", default=None, help="range lo..hi")
    v.add_argument("--x", default=None, help="range lo..hi")
    v.add_argument("--max-gen", type=int, default=None)
    v.add_argument("--gens", default=None)
    v.set_defaults(func=_cmd_verify)

    se = sub.add_parser("search", parents=[shared], help="bounded realization search")
    se.add_argument("--target", required=True, help="comma-separated delta values")
    se.add_argument("--p", required=True, help="0 or inf")
    se.add_argument("--max-dim", type=int, default=3)
    se.add_argument("--max-gen", type=int, required=True)
    se.set_defaults(func=_cmd_search)

    f = sub.add_parser("family", parents=[shared], help="construct, predict and check")
    f.add_argument("spec", help="e.g. geometric:a=2,b=3,k=3")
    f.add_argument("--p", default="both", help="0, inf or both")
    f.set_defaults(func=_cmd_family)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "list_claims", False):
        rows = {cid: {"summary": c.summary, "kind": c.kind} for cid, c in CLAIMS.items()}
        print(json.dumps(rows, sort_keys=True))
        return EXIT_OK
    started = time.monotonic()
    try:
        envelope, code = args.func(args)
    except BudgetExceeded as e:
        print(json.dumps({"command": args.command, "error": {"code": e.code, "message": str(e)}}))
        return EXIT_BUDGET
    except SemigroupError as e:
        print(json.dumps({"command": args.command, "error": {"code": e.code, "message": str(e)}}))
        return EXIT_ERROR
    except (ValueError, KeyError) as e:
        print(json.dumps({"command": args.command, "error": {"code": "invalid-argument", "message": str(e)}}))
        return EXIT_ERROR
    _emit(args, args.command, envelope, started)
    return code


if __name__ == "__main__":
    sys.exit(main())
