"""Command-line entry point: ``mismatch {delta,metric,gen,latin,verify,pipeline}``.

Exit codes: 0 success, 1 a counterexample (failed claim or failed check),
2 bad input, exceeded cap or exhausted budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import io
from .families import named_graph
from .gadgets import build_dnq, build_gq, build_hat, build_hk, componentwise_ab
from .graph import Alignment, AlignmentError, Graph, GraphError, mismatch_graph
from .latin import LatinError, group_by_name, latin_square_graph, twinned_instance
from .norms import mmc, mu_abs_p, mu_edit, mu_p
from .oracles import OracleCapError
from .solvers import DEFAULT_BUDGET, DistanceQuery, RestrictedFamily, SearchBudgetExceeded, SolverError, solve
from .verify import CLAIMS, ClaimError, core_graph, run_claim

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_PRECONDITION = 0, 1, 2

_METRICS = {"edit": ("edit", None), "p1": ("p", 1.0), "p2": ("p", 2.0), "abs-p2": ("abs_p", 2.0),
            "p": ("p", None), "abs-p": ("abs_p", None)}
_MODES = {"exhaustive": "exhaustive", "bnb": "branch_and_bound", "restricted": "restricted"}


class UsageError(ValueError):
    """Invalid combination of arguments or unreadable input."""


def resolve_graph(source: str) -> Graph:
    """A graph file path, or a fixture name (``k33``, ``cube``, ``2k33``, ``petersen``, ...)."""
    path = Path(source)
    if path.exists():
        return io.load_graph(path)
    try:
        return core_graph(source)
    except (ClaimError, KeyError):
        pass
    try:
        return named_graph(source)
    except KeyError as exc:
        raise UsageError(f"{source!r} is neither a file nor a known fixture") from exc


def _query(metric: str, p: float | None, mode: str, budget: int, threshold, max_order) -> DistanceQuery:
    if metric not in _METRICS:
        raise UsageError(f"unknown metric {metric!r}")
    kind, fixed_p = _METRICS[metric]
    exponent = fixed_p if fixed_p is not None else p
    if kind != "edit" and exponent is None:
        raise UsageError(f"metric {metric!r} needs --p")
    return DistanceQuery(metric=kind, p=exponent, mode=_MODES.get(mode, mode), budget=budget,
                         threshold=threshold, max_order=max_order)


def _family(path: str | None) -> RestrictedFamily | None:
    if path is None:
        return None
    data = json.loads(Path(path).read_text())
    decode = lambda part: tuple(tuple(io.decode_label(v) for v in c) for c in part)  # noqa: E731
    return RestrictedFamily(decode(data["source"]), decode(data["target"]))


def delta_report(g: Graph, h: Graph, query: DistanceQuery, family: RestrictedFamily | None = None) -> dict:
    try:
        res = solve(g, h, query, family)
        out = res.to_dict()
        out["budget_exhausted"] = False
    except SearchBudgetExceeded as exc:
        out = exc.partial.to_dict()
        out["budget_exhausted"] = True
    out["alignment"] = None if out["alignment"] is None else [[io.encode_label(u), io.encode_label(v)]
                                                               for u, v in out["alignment"]]
    out["query"] = {"metric": query.metric, "p": _json_p(query.p), "mode": query.mode, "budget": query.budget,
                    "threshold": query.threshold}
    return out


def _json_p(p):
    if p is None:
        return None
    return "inf" if p == float("inf") else p


def default_alignment(g: Graph, h: Graph) -> Alignment:
    """Identity on shared labels, otherwise vertex order."""
    if set(g.vertices) == set(h.vertices):
        return Alignment.identity(g.vertices)
    return Alignment.from_indices(g, h, list(range(min(g.n, h.n))))


def metric_report(g: Graph, h: Graph, pi: Alignment, exponents=(1, 2, "inf")) -> dict:
    pi.check_bijection(g, h)
    sg = mismatch_graph(g, h, pi)
    out: dict[str, Any] = {"edit": mu_edit(g, h, pi), "mmc": mmc(g, h, pi).value,
                           "mismatch": io.signed_to_json(sg), "norms": {}}
    for p in exponents:
        out["norms"][str(p)] = {"signed": mu_p(g, h, pi, p).to_dict(), "absolute": mu_abs_p(g, h, pi, p).to_dict()}
    return out


def gen_bundle(family: str, core: str | None = None, q: int | None = None, n: int | None = None,
               k: int | None = None) -> tuple[Graph, dict]:
    if family == "gq":
        if core is None or q is None:
            raise UsageError("gq needs --core and --q")
        gad = build_gq(resolve_graph(core), q)
        return gad.graph, gad.metadata()
    if family == "dnq":
        if n is None or q is None:
            raise UsageError("dnq needs --n and --q")
        gad = build_dnq(n, q)
        return gad.graph, gad.metadata()
    if family == "hk":
        if k is None:
            raise UsageError("hk needs --k")
        hk = build_hk(k)
        return hk.graph, {"family": "hk", "k": k, "chords": [list(c) for c in hk.chords], "degenerate": hk.degenerate}
    if family == "hat-g":
        if core is None:
            raise UsageError("hat-g needs --core")
        g = resolve_graph(core)
        a, b = componentwise_ab(g)
        gad = build_hat(g, a, b, require_independent=True)
        return gad.graph, gad.metadata()
    if family == "hat-h":
        if k is None:
            raise UsageError("hat-h needs --k")
        hk = build_hk(k)
        gad = build_hat(hk.graph, hk.even, hk.odd)
        return gad.graph, gad.metadata() | {"k": k}
    raise UsageError(f"unknown family {family!r}")


def latin_payload(group: str, emit: str) -> dict:
    gamma = group_by_name(group)
    if emit == "table":
        return gamma.to_json()
    if emit == "graph":
        return io.graph_to_json(latin_square_graph(gamma))
    if emit == "twinned-alignment":
        inst = twinned_instance(gamma)
        return {"g": io.graph_to_json(inst.g), "h": io.graph_to_json(inst.h),
                "alignment": io.alignment_to_json(inst.pi), "mmc": mmc(inst.g, inst.h, inst.pi).value}
    raise UsageError(f"unknown --emit {emit!r}")


def _verify_params(args_like: dict) -> dict:
    keys = ("max_n", "core", "gamma", "samples", "budget", "q")
    return {k: args_like.get(k) for k in keys if args_like.get(k) is not None}


# -- pipeline ------------------------------------------------------------------

def run_pipeline(config: dict) -> tuple[dict, int]:
    """Run ``gen``, ``delta``, ``metric`` and ``verify`` stages in order; stop at the first failing stage."""
    seed = int(config.get("seed", 0))
    bundle: dict[str, Any] = {"seed": seed, "stages": [], "partial": False}
    code = EXIT_OK
    for i, stage in enumerate(config.get("stages", [])):
        kind = stage.get("stage")
        entry: dict[str, Any] = {"index": i, "stage": kind}
        try:
            if kind == "gen":
                g, meta = gen_bundle(stage["family"], stage.get("core"), stage.get("q"), stage.get("n"), stage.get("k"))
                entry["result"] = {"graph": io.graph_to_json(g), "metadata": meta, "n": g.n, "m": g.m}
            elif kind == "delta":
                q = _query(stage.get("metric", "edit"), stage.get("p"), stage.get("mode", "bnb"),
                           stage.get("budget", DEFAULT_BUDGET), stage.get("threshold"), stage.get("max_order"))
                entry["result"] = delta_report(resolve_graph(stage["g"]), resolve_graph(stage["h"]), q,
                                               _family(stage.get("family")))
                if entry["result"]["budget_exhausted"]:
                    raise SolverError("search budget exhausted")
            elif kind == "metric":
                g, h = resolve_graph(stage["g"]), resolve_graph(stage["h"])
                pi = io.alignment_from_json(stage["alignment"]) if "alignment" in stage else default_alignment(g, h)
                entry["result"] = metric_report(g, h, pi, stage.get("p", [1, 2, "inf"]))
            elif kind == "verify":
                claims = list(CLAIMS) if stage.get("claim") == "all" else [stage["claim"]]
                reports = [run_claim(c, seed=stage.get("seed", seed), **_verify_params(stage)).to_dict()
                           for c in claims]
                entry["result"] = reports
                if any(r["failures"] for r in reports):
                    entry["status"] = "counterexample"
                    code = EXIT_COUNTEREXAMPLE
            else:
                raise UsageError(f"unknown stage {kind!r}")
            entry.setdefault("status", "ok")
        except (UsageError, SolverError, ClaimError, GraphError, AlignmentError, LatinError, OracleCapError,
                KeyError, ValueError) as exc:
            entry["status"] = "error"
            entry["error"] = f"{type(exc).__name__}: {exc}"
            bundle["stages"].append(entry)
            bundle["partial"] = True
            return bundle, EXIT_PRECONDITION
        bundle["stages"].append(entry)
        if code != EXIT_OK:
            bundle["partial"] = i + 1 < len(config.get("stages", []))
            break
    return bundle, code


def pipeline_summary(bundle: dict) -> str:
    lines = [f"seed {bundle['seed']}{'  (partial bundle)' if bundle['partial'] else ''}"]
    for st in bundle["stages"]:
        line = f"[{st['index']}] {st['stage']}: {st['status']}"
        if st["stage"] == "verify" and "result" in st:
            line += "  " + ", ".join(f"{r['claim_id']} {r['passes']}/{r['instances']}" for r in st["result"])
        elif st["stage"] == "delta" and "result" in st:
            line += f"  value {_value_text(st['result']['value'])}"
        if "error" in st:
            line += f"  {st['error']}"
        lines.append(line)
    return "\n".join(lines) + "\n"


# -- argument handling -----------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None, help="output directory (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mismatch", description="Mismatch norms, graph distances and claim checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("delta", help="distance between two graphs")
    d.add_argument("g")
    d.add_argument("h")
    d.add_argument("--metric", default="edit", choices=sorted(_METRICS))
    d.add_argument("--p", type=lambda s: float(s))
    d.add_argument("--mode", default="bnb", choices=sorted(_MODES))
    d.add_argument("--threshold", type=float)
    d.add_argument("--max-order", type=int)
    d.add_argument("--family", help="JSON file {source: [[...]], target: [[...]]} for restricted mode")
    _common(d)

    m = sub.add_parser("metric", help="mismatch norms of one alignment (identity by default)")
    m.add_argument("g")
    m.add_argument("h")
    m.add_argument("--alignment", help="JSON file with [[u, v], ...] pairs")
    m.add_argument("--p", nargs="*", default=["1", "2", "inf"])
    _common(m)

    gen = sub.add_parser("gen", help="generate a gadget graph with a metadata sidecar")
    gen.add_argument("--family", required=True, choices=("gq", "dnq", "hk", "hat-g", "hat-h"))
    gen.add_argument("--core")
    gen.add_argument("--q", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    _common(gen)

    lat = sub.add_parser("latin", help="group tables, Latin square graphs, twinned alignments")
    lat.add_argument("--group", required=True)
    lat.add_argument("--emit", default="table", choices=("table", "graph", "twinned-alignment"))
    _common(lat)

    v = sub.add_parser("verify", help="run a registered claim check")
    v.add_argument("claim", help=f"one of: {', '.join(CLAIMS)}, or 'all'")
    v.add_argument("--max-n", type=int)
    v.add_argument("--core")
    v.add_argument("--gamma")
    v.add_argument("--samples", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--timing", action="store_true", help="include wall time (output is then not byte-stable)")
    _common(v)

    pl = sub.add_parser("pipeline", help="run a JSON-configured sequence of stages")
    pl.add_argument("config")
    _common(pl)
    return parser


def _emit(args, name: str, payload: Any, text: str | None = None) -> None:
    body = text if (args.format == "text" and text is not None) else io.dumps(payload)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        suffix = ".txt" if args.format == "text" and text is not None else ".json"
        (out / f"{name}{suffix}").write_text(body)
    else:
        sys.stdout.write(body)


def _value_text(v: dict) -> str:
    return str(v["lo"]) if v["exact"] else f"[{v['lo']}, {v['hi']}]"


def _cmd_delta(args) -> int:
    g, h = resolve_graph(args.g), resolve_graph(args.h)
    query = _query(args.metric, args.p, args.mode, args.budget or DEFAULT_BUDGET, args.threshold, args.max_order)
    rep = delta_report(g, h, query, _family(args.family))
    text = f"value {_value_text(rep['value'])}  optimal {rep['optimal']}  nodes {rep['nodes']}"
    if "decision" in rep:
        text += f"  decision {rep['decision']}"
    _emit(args, "delta", rep, text + "\n")
    return EXIT_PRECONDITION if rep["budget_exhausted"] else EXIT_OK


def _cmd_metric(args) -> int:
    g, h = resolve_graph(args.g), resolve_graph(args.h)
    pi = io.alignment_from_json(json.loads(Path(args.alignment).read_text())) if args.alignment else default_alignment(g, h)
    rep = metric_report(g, h, pi, [float(p) if p != "inf" else "inf" for p in args.p])
    _emit(args, "metric", rep, f"edit {rep['edit']}  mmc {rep['mmc']}\n")
    return EXIT_OK


def _cmd_gen(args) -> int:
    g, meta = gen_bundle(args.family, args.core, args.q, args.n, args.k)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        name = args.family
        io.save_graph(g, out / (f"{name}.json" if args.format == "json" else f"{name}.txt"), args.format)
        (out / f"{name}.meta.json").write_text(io.dumps(meta))
    else:
        sys.stdout.write(io.graph_to_text(g) if args.format == "text" else io.dumps(
            {"graph": io.graph_to_json(g), "metadata": meta}))
    return EXIT_OK


def _cmd_latin(args) -> int:
    payload = latin_payload(args.group, args.emit)
    text = None
    if args.emit == "table":
        text = "\n".join(" ".join(str(x) for x in row) for row in payload["table"]) + "\n"
    _emit(args, f"latin-{args.emit}", payload, text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    claims = list(CLAIMS) if args.claim == "all" else [args.claim]
    params = _verify_params(vars(args))
    reports = [run_claim(c, seed=args.seed, **params) for c in claims]
    payload = [r.to_dict(timing=args.timing) for r in reports]
    text = "\n".join(r.summary() for r in reports) + "\n"
    _emit(args, "verify" if len(claims) > 1 else claims[0], payload if len(claims) > 1 else payload[0], text)
    return EXIT_OK if all(not r.failures for r in reports) else EXIT_COUNTEREXAMPLE


def _cmd_pipeline(args) -> int:
    try:
        config = json.loads(Path(args.config).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config: {exc}") from exc
    if args.seed and "seed" not in config:
        config["seed"] = args.seed
    bundle, code = run_pipeline(config)
    summary = pipeline_summary(bundle)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "bundle.json").write_text(io.dumps(bundle))
        (out / "summary.txt").write_text(summary)
    else:
        sys.stdout.write(io.dumps(bundle) if args.format == "json" else summary)
    return code


_COMMANDS = {"delta": _cmd_delta, "metric": _cmd_metric, "gen": _cmd_gen, "latin": _cmd_latin,
             "verify": _cmd_verify, "pipeline": _cmd_pipeline}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, SolverError, ClaimError, GraphError, AlignmentError, LatinError, OracleCapError,
            KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
