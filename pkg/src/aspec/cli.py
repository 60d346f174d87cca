"""Command-line front end.

Four subcommands: ``spectrum`` prints merged spectra (structured or general
path), ``verify`` replays the structured result against the dense oracle on
the same instance, ``bound`` checks the unicyclic spectral-radius bound over
a graph or a seeded corpus, and ``constants`` prints the threshold constants
with residuals. Output is JSON (canonical) or CSV (lossy); errors are single
machine-parsable lines on stderr. Exit codes: 0 success, 1 numerical or
verification failure, 2 validation failure. ``ASPEC_THREADS`` caps worker
threads for corpus sweeps (default 1).
"""
from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .aalpha import AlphaParam
from .bounds import (
    alpha_threshold,
    cosine_reference_radius,
    threshold_matrix_height2,
    threshold_matrix_height3,
    threshold_root_height2,
    threshold_root_height3,
    verify_bound,
)
from .errors import NumericalError, ValidationError
from .graphs import (
    Graph,
    GeneralizedBetheTreeSpec,
    RootedGraph,
    build_cycle,
    build_bethe_tree,
    build_generalized_bethe_tree,
    compose,
    parse_bethe_spec,
    parse_graph,
    unicyclic_corpus,
)
from .spectral import (
    DEFAULT_COMPARE_TOL,
    DEFAULT_MERGE_TOL,
    DEFAULT_SOLVE_TOL,
    compare_spectra,
    dense_eigenvalues,
    spectrum_from_eigenvalues,
    tridiag_eigenvalues,
)
from .structured import (
    composition_spectrum,
    cycle_structured_spectrum,
    structured_spectrum,
)
from .aalpha import build_a_alpha

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_VALIDATION = 2

__all__ = ["main", "EXIT_OK", "EXIT_FAILURE", "EXIT_VALIDATION"]


def _threads() -> int:
    raw = os.environ.get("ASPEC_THREADS", "1").strip()
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"ASPEC_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValidationError(f"ASPEC_THREADS must be a positive integer, got {value}")
    return value


def _parse_alphas(raw: str) -> tuple[float, ...]:
    parts = [p.strip() for p in raw.split(",") if p.strip()]
    if not parts:
        raise ValidationError(f"no alpha values in {raw!r}")
    alphas = []
    for p in parts:
        try:
            alphas.append(float(p))
        except ValueError:
            raise ValidationError(f"bad alpha value {p!r}") from None
    for a in alphas:
        if not 0.0 <= a <= 1.0:
            raise ValidationError(f"alpha must lie in [0, 1], got {a}")
    return tuple(alphas)


def _parse_bethe_arg(raw: str) -> GeneralizedBetheTreeSpec:
    m = re.fullmatch(r"d=(\d+),k=(\d+)", raw.strip())
    if not m:
        raise ValidationError(f"expected --bethe d=D,k=K, got {raw!r}")
    return build_bethe_tree(int(m.group(1)), int(m.group(2)))


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror or exc}") from None


def _positive(value: float, name: str) -> float:
    if not value > 0.0:
        raise ValidationError(f"{name} must be positive, got {value}")
    return float(value)


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by the subcommands."""

    alphas: tuple[float, ...]
    tol_solve: float
    tol_merge: float
    tol_compare: float
    fmt: str
    seed: int

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            alphas=_parse_alphas(args.alpha),
            tol_solve=_positive(args.tol_solve, "--tol-solve"),
            tol_merge=_positive(args.tol_merge, "--tol-merge"),
            tol_compare=_positive(args.tol_compare, "--tol-compare"),
            fmt=args.format,
            seed=args.seed,
        )


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--alpha", default="0", help="comma-separated mixing weights in [0, 1]")
    sub.add_argument("--tol-solve", type=float, default=DEFAULT_SOLVE_TOL)
    sub.add_argument("--tol-merge", type=float, default=DEFAULT_MERGE_TOL)
    sub.add_argument("--tol-compare", type=float, default=DEFAULT_COMPARE_TOL)
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--seed", type=int, default=0)


def _add_instance(sub: argparse.ArgumentParser, rooted: bool) -> None:
    sub.add_argument("--cycle", type=int, help="cycle base of this length")
    sub.add_argument("--graph", help="edge-list file for the base graph")
    sub.add_argument("--bethe", help="uniform tree spec d=D,k=K")
    sub.add_argument("--spec", help="JSON file with a level tree spec")
    if rooted:
        sub.add_argument("--rooted", help="edge-list file for a rooted attachment")
        sub.add_argument("--root", type=int, help="root vertex of --rooted")
        sub.add_argument(
            "--structured",
            action="store_true",
            help="require the structured path (reject a general rooted attachment)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspec",
        description="Spectra of graphs with one rooted-tree copy per base vertex, "
        "plus spectral-radius bounds for unicyclic graphs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("spectrum", help="merged spectrum of a composition")
    _add_instance(sp, rooted=True)
    _add_common(sp)

    vf = subs.add_parser("verify", help="structured result vs dense oracle")
    _add_instance(vf, rooted=False)
    _add_common(vf)

    bd = subs.add_parser("bound", help="spectral-radius bound checks")
    bd.add_argument("--graph", help="edge-list file with one unicyclic graph")
    bd.add_argument("--corpus", help="seeded corpus selector, e.g. n<=9")
    _add_common(bd)

    ct = subs.add_parser("constants", help="threshold constants and residuals")
    _add_common(ct)

    return parser


def _resolve_base(args: argparse.Namespace) -> tuple[str, Graph | int]:
    has_cycle = args.cycle is not None
    has_graph = args.graph is not None
    if has_cycle == has_graph:
        raise ValidationError("exactly one of --cycle or --graph is required")
    if has_cycle:
        if args.cycle < 3:
            raise ValidationError(f"cycle length must be >= 3, got {args.cycle}")
        return "cycle", args.cycle
    graph = parse_graph(_read_text(args.graph))
    if not graph.is_connected():
        raise ValidationError("base graph must be connected")
    return "graph", graph


def _resolve_attachment(
    args: argparse.Namespace, allow_rooted: bool
) -> tuple[str, GeneralizedBetheTreeSpec | RootedGraph]:
    sources = [args.bethe is not None, args.spec is not None]
    if allow_rooted:
        sources.append(args.rooted is not None)
    if sum(sources) != 1:
        names = "--bethe, --spec" + (", or --rooted" if allow_rooted else "")
        raise ValidationError(f"exactly one of {names} is required")
    if args.bethe is not None:
        return "spec", _parse_bethe_arg(args.bethe)
    if args.spec is not None:
        return "spec", parse_bethe_spec(_read_text(args.spec))
    if args.root is None:
        raise ValidationError("--rooted requires --root")
    graph = parse_graph(_read_text(args.rooted))
    return "rooted", RootedGraph(graph, root=args.root)


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(payload: dict) -> None:
    _emit(json.dumps(payload, indent=2))


def cmd_spectrum(args: argparse.Namespace, cfg: RunConfig) -> int:
    base_kind, base = _resolve_base(args)
    att_kind, attachment = _resolve_attachment(args, allow_rooted=True)
    if args.structured and att_kind != "spec":
        raise ValidationError("--structured requires a tree spec attachment")

    results = []
    for alpha in cfg.alphas:
        weights = AlphaParam(alpha)
        if att_kind == "spec":
            if base_kind == "cycle":
                report = cycle_structured_spectrum(
                    base, attachment, weights, cfg.tol_solve, cfg.tol_merge
                )
            else:
                report = structured_spectrum(
                    base, attachment, weights, cfg.tol_solve, cfg.tol_merge
                )
            results.append(report.to_jsonable())
        else:
            base_graph = build_cycle(base) if base_kind == "cycle" else base
            ms = composition_spectrum(
                base_graph, attachment, weights, cfg.tol_solve, cfg.tol_merge
            )
            results.append(
                {
                    "alpha": alpha,
                    "spectrum": ms.to_jsonable(),
                    "spectral_radius": ms.max_value,
                }
            )

    if cfg.fmt == "csv":
        lines = ["alpha,value,multiplicity"]
        for res in results:
            for value, mult in res["spectrum"]:
                lines.append(f"{res['alpha']!r},{value!r},{mult}")
        _emit("\n".join(lines))
        return EXIT_OK

    payload = {
        "command": "spectrum",
        "path": "general" if att_kind == "rooted" else (
            "cycle-closed-form" if base_kind == "cycle" else "structured"
        ),
        "base": {"kind": base_kind, "order": base if base_kind == "cycle" else base.n_vertices},
        "tolerances": {"solve": cfg.tol_solve, "merge": cfg.tol_merge},
        "results": results,
    }
    if att_kind == "spec":
        payload["attachment"] = {
            "kind": "spec",
            "k": attachment.k,
            "degrees": list(attachment.degrees),
            "counts": list(attachment.counts),
        }
    else:
        payload["attachment"] = {
            "kind": "rooted",
            "order": attachment.order,
            "root": attachment.root,
        }
    _emit_json(payload)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    base_kind, base = _resolve_base(args)
    _, spec = _resolve_attachment(args, allow_rooted=False)
    base_graph = build_cycle(base) if base_kind == "cycle" else base
    tree = build_generalized_bethe_tree(spec)
    composed = compose(base_graph, tree)

    results = []
    worst = 0.0
    all_passed = True
    for alpha in cfg.alphas:
        weights = AlphaParam(alpha)
        if base_kind == "cycle":
            report = cycle_structured_spectrum(base, spec, weights, cfg.tol_solve, cfg.tol_merge)
        else:
            report = structured_spectrum(base_graph, spec, weights, cfg.tol_solve, cfg.tol_merge)
        dense = spectrum_from_eigenvalues(
            dense_eigenvalues(build_a_alpha(composed, weights), cfg.tol_solve),
            cfg.tol_merge,
        )
        cmp = compare_spectra(report.merged, dense, cfg.tol_compare)
        all_passed = all_passed and cmp.passed
        if not math.isnan(cmp.max_deviation):
            worst = max(worst, cmp.max_deviation)
        results.append({"alpha": alpha, **cmp.to_jsonable()})

    if cfg.fmt == "csv":
        lines = ["alpha,total,max_deviation,passed"]
        for res in results:
            lines.append(
                f"{res['alpha']!r},{res['total_a']},{res['max_deviation']!r},{res['passed']}"
            )
        _emit("\n".join(lines))
    else:
        _emit_json(
            {
                "command": "verify",
                "base": {"kind": base_kind, "order": base_graph.n_vertices},
                "attachment": {
                    "kind": "spec",
                    "k": spec.k,
                    "degrees": list(spec.degrees),
                    "counts": list(spec.counts),
                },
                "composed_order": composed.n_vertices,
                "tolerances": {
                    "solve": cfg.tol_solve,
                    "merge": cfg.tol_merge,
                    "compare": cfg.tol_compare,
                },
                "results": results,
                "passed": all_passed,
            }
        )
    if not all_passed:
        print(f"error: mismatch: max deviation {worst!r}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


_CORPUS_RE = re.compile(r"n<=(\d+)")


def cmd_bound(args: argparse.Namespace, cfg: RunConfig) -> int:
    has_graph = args.graph is not None
    has_corpus = args.corpus is not None
    if has_graph == has_corpus:
        raise ValidationError("exactly one of --graph or --corpus is required")
    if has_graph:
        graphs = [(os.path.basename(args.graph), parse_graph(_read_text(args.graph)))]
    else:
        m = _CORPUS_RE.fullmatch(args.corpus.strip())
        if not m:
            raise ValidationError(f"corpus selector must look like n<=9, got {args.corpus!r}")
        graphs = unicyclic_corpus(int(m.group(1)), cfg.seed)

    jobs = [
        (gid, graph, AlphaParam(alpha))
        for gid, graph in graphs
        for alpha in cfg.alphas
    ]

    def run(job):
        gid, graph, weights = job
        return gid, verify_bound(graph, weights, cfg.tol_solve)

    threads = _threads()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(run, jobs))
    else:
        rows = [run(job) for job in jobs]

    violations = [
        (gid, rep) for gid, rep in rows if rep.applicable and not rep.satisfied
    ]
    if cfg.fmt == "csv":
        lines = ["graph,n,delta,height,alpha,rho,bound,slack,case,applicable,satisfied"]
        for gid, rep in rows:
            bound = "" if rep.bound is None else repr(rep.bound)
            slack = "" if rep.slack is None else repr(rep.slack)
            sat = "" if rep.satisfied is None else rep.satisfied
            lines.append(
                f"{gid},{rep.n_vertices},{rep.delta},{rep.height},{rep.alpha!r},"
                f"{rep.rho!r},{bound},{slack},{rep.case},{rep.applicable},{sat}"
            )
        _emit("\n".join(lines))
    else:
        _emit_json(
            {
                "command": "bound",
                "seed": cfg.seed,
                "tolerances": {"solve": cfg.tol_solve},
                "results": [{"graph": gid, **rep.to_jsonable()} for gid, rep in rows],
                "checked": len(rows),
                "violations": len(violations),
                "passed": not violations,
            }
        )
    if violations:
        gid, rep = violations[0]
        print(
            f"error: bound-violation: {gid} alpha={rep.alpha!r} "
            f"rho={rep.rho!r} bound={rep.bound!r}",
            file=sys.stderr,
        )
        return EXIT_FAILURE
    return EXIT_OK


def cmd_constants(args: argparse.Namespace, cfg: RunConfig) -> int:
    tol = cfg.tol_solve
    root3 = threshold_root_height3(tol)
    root2 = threshold_root_height2(tol)
    target3 = cosine_reference_radius(3, 3)
    target2 = cosine_reference_radius(3, 2)
    res3 = abs(
        float(tridiag_eigenvalues(threshold_matrix_height3(root3), min(tol, 1e-13))[-1])
        - target3
    )
    res2 = abs(
        float(tridiag_eigenvalues(threshold_matrix_height2(root2), min(tol, 1e-13))[-1])
        - target2
    )
    values = {
        "threshold_root_height3": root3,
        "threshold_root_height2": root2,
        "alpha_threshold_height3": alpha_threshold(3, tol),
        "alpha_threshold_height2": alpha_threshold(2, tol),
        "reference_radius_height3": target3,
        "reference_radius_height2": target2,
        "residual_height3": res3,
        "residual_height2": res2,
    }
    if cfg.fmt == "csv":
        lines = ["name,value"]
        lines.extend(f"{name},{value!r}" for name, value in values.items())
        _emit("\n".join(lines))
    else:
        _emit_json(
            {
                "command": "constants",
                "bracket_height3": [-0.25, -0.2],
                "bracket_height2": [-1.2, -1.1],
                "tol": tol,
                **values,
            }
        )
    return EXIT_OK


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "bound": cmd_bound,
    "constants": cmd_constants,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return _COMMANDS[args.command](args, cfg)
    except ValidationError as exc:
        print(f"error: validation: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NumericalError as exc:
        print(f"error: numerical: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
