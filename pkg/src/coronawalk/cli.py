"""Command-line front end: graph construction, spectra, fidelity curves,
transfer verdicts, PGST searches, and the three canned experiments.

Every output embeds the parsed run configuration for provenance. Floats are
serialized with 12 significant digits and times are reported both as
decimals and as multiples of pi. Exit codes: 0 when the requested target or
certificate is produced, 2 when a search or check comes back negative, 1 on
errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import re
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corona import corona, corona_laplacian_blocks
from .corona_spectrum import corona_spectrum, corona_eigenprojectors
from .graphs import (
    FAMILIES,
    Graph,
    build_named,
    graph_from_dict,
    graph_to_dict,
    load_graph,
)
from .spectral import eigendecompose
from .statetransfer import (
    check_pst,
    corona_no_pst_witness,
    pgst_search,
)
from .walk import evolve_element, fidelity_curve, transition_values, walk_matrix

OUTDIR_ENV = "CORONAWALK_OUTDIR"

_SHORTHAND = {
    "k": "complete",
    "o": "empty",
    "p": "path",
    "c": "cycle",
    "q": "hypercube",
}

_FAMILY_ALIASES = {
    "4pi": "four_pi_ell",
    "four_pi_ell": "four_pi_ell",
    "shifted": "shifted",
}


@dataclass(frozen=True)
class ExperimentConfig:
    """Parsed run parameters, embedded in every output header."""

    command: str
    flags: dict
    seed: int
    output: str
    format: str

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "flags": dict(self.flags),
            "seed": self.seed,
            "output": self.output,
            "format": self.format,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        return cls(
            command=d["command"],
            flags=dict(d["flags"]),
            seed=int(d["seed"]),
            output=d["output"],
            format=d["format"],
        )


def _fmt(x: float) -> float:
    return float(f"{x:.12g}")


def _jsonable(x):
    if x is None or isinstance(x, (bool, str, int)):
        return x
    if isinstance(x, float):
        return _fmt(x)
    if isinstance(x, complex):
        return {"re": _fmt(x.real), "im": _fmt(x.imag)}
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return _fmt(float(x))
    if isinstance(x, np.complexfloating):
        return _jsonable(complex(x))
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if dataclasses.is_dataclass(x):
        return _jsonable(dataclasses.asdict(x))
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _config_from(args: argparse.Namespace, fmt: str) -> ExperimentConfig:
    skip = {"func", "seed", "output"}
    flags = {k: v for k, v in vars(args).items() if k not in skip and v is not None}
    flags.pop("command", None)
    return ExperimentConfig(
        command=args.command,
        flags=_jsonable(flags),
        seed=args.seed,
        output=args.output,
        format=fmt,
    )


def _write_text(target: str, text: str) -> None:
    if target == "-":
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


def _emit_json(config: ExperimentConfig, payload: dict) -> None:
    doc = {"config": config.to_dict()}
    doc.update(_jsonable(payload))
    _write_text(config.output, json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _csv_text(config: ExperimentConfig, elements) -> str:
    lines = [
        "# config " + json.dumps(_jsonable(config.to_dict()), sort_keys=True),
        "t,fidelity,phase_re,phase_im",
    ]
    for el in elements:
        if el.phase is None:
            pre = pim = ""
        else:
            pre, pim = f"{el.phase.real:.12g}", f"{el.phase.imag:.12g}"
        lines.append(f"{el.t:.12g},{el.fidelity:.12g},{pre},{pim}")
    return "\n".join(lines) + "\n"


def parse_graph_spec(spec: str) -> Graph:
    """A graph from `k2`-style shorthand, `family:param`, or `@file.json`.

    Shorthand letters: k=complete, o=empty, p=path, c=cycle, q=hypercube.
    Long family names take a colon parameter, e.g. cocktail_party:3.
    """
    spec = spec.strip()
    if not spec:
        raise ValueError("empty graph spec")
    if spec.startswith("@"):
        return load_graph(spec[1:])
    if ":" in spec:
        family, _, arg = spec.partition(":")
        family = family.strip().lower()
        family = _SHORTHAND.get(family, family)
        if family == "cocktail":
            family = "cocktail_party"
        try:
            size = int(arg)
        except ValueError:
            raise ValueError(f"bad size in graph spec {spec!r}") from None
        return build_named(family, size)
    match = re.fullmatch(r"([a-z_]+?)(\d+)", spec.lower())
    if match:
        name, size = match.group(1), int(match.group(2))
        family = _SHORTHAND.get(name, name)
        if family == "cocktail":
            family = "cocktail_party"
        if family in FAMILIES:
            return build_named(family, size)
    raise ValueError(f"cannot parse graph spec {spec!r}")


def parse_satellites(spec: str, n: int) -> list:
    """Satellite list for n base vertices: one spec broadcast to all slots,
    or a comma list filling them in order."""
    parts = [part.strip() for part in spec.split(",")]
    if len(parts) == 1:
        parts = parts * n
    if len(parts) != n:
        raise ValueError(f"need 1 or {n} satellite specs, got {len(parts)}")
    return [parse_graph_spec(part) for part in parts]


def _verdict_dict(verdict) -> dict:
    d = dataclasses.asdict(verdict)
    if d["t0"] is not None:
        d["t0_over_pi"] = d["t0"] / math.pi
    return d


def _record_dict(record) -> dict:
    d = dataclasses.asdict(record)
    d["t_over_pi"] = d["t"] / math.pi
    return d


def cmd_build(args) -> int:
    g = parse_graph_spec(args.graph)
    config = _config_from(args, "json")
    _emit_json(config, graph_to_dict(g))
    return 0


def cmd_corona(args) -> int:
    g = parse_graph_spec(args.g)
    hs = parse_satellites(args.h, g.n)
    cg = corona(g, hs)
    config = _config_from(args, "json")
    payload = graph_to_dict(cg.flat)
    payload["m"] = cg.m
    payload["base"] = graph_to_dict(cg.base)
    payload["satellites"] = [graph_to_dict(h) for h in cg.satellites]
    _emit_json(config, payload)
    return 0


def cmd_spectrum(args) -> int:
    g = parse_graph_spec(args.graph)
    d = eigendecompose(walk_matrix(g, args.kind))
    config = _config_from(args, "json")
    payload = {
        "kind": args.kind,
        "eigenvalues": list(d.eigenvalues),
        "multiplicities": list(d.multiplicities),
    }
    if args.projectors:
        payload["projectors"] = d.projectors
    _emit_json(config, payload)
    return 0


def cmd_corona_spectrum(args) -> int:
    g = parse_graph_spec(args.g)
    hs = parse_satellites(args.h, g.n)
    cs = corona_spectrum(g, hs)
    config = _config_from(args, "json")
    payload = {
        "m": cs.m,
        "class_a": cs.class_a,
        "class_b": cs.class_b,
        "class_c": cs.class_c,
        "eigenvalues": [list(pair) for pair in cs.eigenvalue_list()],
        "total_multiplicity": cs.total_multiplicity(),
    }
    _emit_json(config, payload)
    return 0


def cmd_fidelity(args) -> int:
    if (args.g is None) == (args.graph is None):
        raise ValueError("give exactly one of --graph or --g/--h")
    ts = np.linspace(0.0, args.t_max, args.steps)
    if args.graph is not None:
        g = parse_graph_spec(args.graph)
        d = eigendecompose(walk_matrix(g, args.kind))
        elements = fidelity_curve(d, args.from_vertex, args.to_vertex, ts)
    else:
        if args.h is None:
            raise ValueError("--g needs --h")
        if args.kind != "laplacian":
            raise ValueError("the closed-form corona curve is Laplacian-only")
        g = parse_graph_spec(args.g)
        hs = parse_satellites(args.h, g.n)
        cs = corona_spectrum(g, hs)
        g_decomp = eigendecompose(walk_matrix(g, "laplacian"))
        elements = fidelity_curve(cs, args.from_vertex, args.to_vertex, ts, g_decomp=g_decomp)
    config = _config_from(args, "csv")
    _write_text(config.output, _csv_text(config, elements))
    return 0


def cmd_pst_check(args) -> int:
    g = parse_graph_spec(args.graph)
    d = eigendecompose(walk_matrix(g, "laplacian"))
    verdict = check_pst(d, args.from_vertex, args.to_vertex)
    config = _config_from(args, "json")
    _emit_json(config, {"verdict": _verdict_dict(verdict)})
    return 0 if verdict.pst else 2


def cmd_no_pst_witness(args) -> int:
    g = parse_graph_spec(args.g)
    witness = corona_no_pst_witness(g, args.m, args.base_vertex)
    config = _config_from(args, "json")
    _emit_json(config, {"witness": witness})
    return 0


def cmd_pgst_search(args) -> int:
    g = parse_graph_spec(args.g)
    hs = parse_satellites(args.h, g.n)
    cs = corona_spectrum(g, hs)
    g_decomp = eigendecompose(walk_matrix(g, "laplacian"))
    u = args.from_vertex if args.from_vertex is not None else 0
    v = args.to_vertex if args.to_vertex is not None else g.n - 1
    result = pgst_search(
        cs,
        g_decomp,
        u,
        v,
        _FAMILY_ALIASES[args.family],
        r=args.r,
        ell_max=args.ell_max,
        target=args.target,
    )
    config = _config_from(args, "json")
    _emit_json(
        config,
        {
            "target_met": result.target_met,
            "best": _record_dict(result.best),
            "history": [_record_dict(rec) for rec in result.history],
        },
    )
    return 0 if result.target_met else 2


def _figure_curve(cs, g_decomp, u, v, t_end, path, config) -> None:
    ts = np.linspace(0.0, t_end, 2001)
    elements = fidelity_curve(cs, u, v, ts, g_decomp=g_decomp)
    _write_text(str(path), _csv_text(config, elements))


def _fig2(outdir: Path, config: ExperimentConfig) -> tuple:
    """Hypercube Q2 with the four distinct 3-vertex satellites; shifted-family
    PGST between antipodal base vertices."""
    g = build_named("hypercube", 2)
    hs = [
        build_named("empty", 3),
        Graph(3, frozenset({(0, 1)})),
        build_named("path", 3),
        build_named("complete", 3),
    ]
    cs = corona_spectrum(g, hs)
    g_decomp = eigendecompose(walk_matrix(g, "laplacian"))
    result = pgst_search(cs, g_decomp, 0, 3, "shifted", r=1, ell_max=10_000, target=0.99)
    _figure_curve(cs, g_decomp, 0, 3, result.best.t, outdir / "fig2_curve.csv", config)
    summary = {
        "target": 0.99,
        "target_met": result.target_met,
        "best": _record_dict(result.best),
        "history": [_record_dict(rec) for rec in result.history],
    }
    return summary, ["fig2_curve.csv"], result.target_met


def _fig3(outdir: Path, config: ExperimentConfig) -> tuple:
    """Double star K2 corona O6: Laplacian PGST at t = 4*pi*ell versus the
    adjacency walk's best fidelity over a dense grid."""
    g = build_named("complete", 2)
    hs = [build_named("empty", 6)] * 2
    cs = corona_spectrum(g, hs)
    g_decomp = eigendecompose(walk_matrix(g, "laplacian"))
    result = pgst_search(cs, g_decomp, 0, 1, "four_pi_ell", ell_max=10_000, target=0.999)
    _figure_curve(cs, g_decomp, 0, 1, result.best.t, outdir / "fig3_laplacian_curve.csv", config)

    flat = corona(g, hs).flat
    adj = eigendecompose(walk_matrix(flat, "adjacency"))
    u, v = 0, 7  # the two base vertices in flat order
    grid = np.linspace(0.0, 2000.0, 200_000)
    fidelities = np.abs(transition_values(adj, u, v, grid)) ** 2
    best_idx = int(np.argmax(fidelities))
    curve = fidelity_curve(adj, u, v, np.linspace(0.0, 2000.0, 2001))
    _write_text(str(outdir / "fig3_adjacency_curve.csv"), _csv_text(config, curve))

    summary = {
        "target": 0.999,
        "target_met": result.target_met,
        "laplacian_best_fidelity": result.best.fidelity,
        "laplacian_best": _record_dict(result.best),
        "adjacency_max_fidelity": float(fidelities[best_idx]),
        "adjacency_argmax_t": float(grid[best_idx]),
        "adjacency_grid": {"t_max": 2000.0, "points": 200_000},
    }
    files = ["fig3_laplacian_curve.csv", "fig3_adjacency_curve.csv"]
    return summary, files, result.target_met


def _fig4(outdir: Path, config: ExperimentConfig) -> tuple:
    """Cocktail party graph on 6 vertices with one pendant per site; PGST
    between an antipodal base pair at t = 4*pi*ell."""
    g = build_named("cocktail_party", 3)
    hs = [build_named("complete", 1)] * g.n
    cs = corona_spectrum(g, hs)
    g_decomp = eigendecompose(walk_matrix(g, "laplacian"))
    result = pgst_search(cs, g_decomp, 0, 3, "four_pi_ell", ell_max=10_000, target=0.99)
    _figure_curve(cs, g_decomp, 0, 3, result.best.t, outdir / "fig4_curve.csv", config)
    summary = {
        "target": 0.99,
        "target_met": result.target_met,
        "best": _record_dict(result.best),
        "history": [_record_dict(rec) for rec in result.history],
    }
    return summary, ["fig4_curve.csv"], result.target_met


_FIGURES = {"fig2": _fig2, "fig3": _fig3, "fig4": _fig4}


def cmd_figures(args) -> int:
    names = list(_FIGURES) if args.which == "all" else [args.which]
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    config = _config_from(args, "json")
    summaries = {}
    written = []
    all_met = True
    for name in names:
        summary, files, met = _FIGURES[name](outdir, config)
        summaries[name] = summary
        written.extend(str(outdir / f) for f in files)
        all_met = all_met and met
    for name in names:
        path = outdir / f"{name}_summary.json"
        doc = {"config": config.to_dict(), "summary": _jsonable(summaries[name])}
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        written.append(str(path))
    _emit_json(config, {"summaries": summaries, "files": written})
    return 0 if all_met else 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise argparse.ArgumentError(None, message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coronawalk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--seed", type=int, default=0, help="seed recorded for provenance")
        p.add_argument("--output", default="-", help="output path, or - for stdout")
        p.set_defaults(func=func)
        return p

    p = add("build", cmd_build, "construct a graph and emit it in the JSON file format")
    p.add_argument("--graph", required=True, help="k2, q3, p4, c5, o6, family:param, or @file.json")

    p = add("corona", cmd_corona, "construct a corona product and emit its flat graph")
    p.add_argument("--g", required=True, help="base graph spec")
    p.add_argument("--h", required=True, help="satellite spec (broadcast) or comma list")

    p = add("spectrum", cmd_spectrum, "distinct eigenvalues and multiplicities of a walk matrix")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=["laplacian", "adjacency"], default="laplacian")
    p.add_argument("--projectors", action="store_true", help="include projector entries")

    p = add("corona-spectrum", cmd_corona_spectrum, "closed-form corona eigenvalue classes")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)

    p = add("fidelity", cmd_fidelity, "fidelity curve as CSV t,fidelity,phase_re,phase_im")
    p.add_argument("--graph", help="walk on this graph (any kind)")
    p.add_argument("--g", help="corona base graph (closed-form Laplacian curve)")
    p.add_argument("--h", help="corona satellites")
    p.add_argument("--from", dest="from_vertex", type=int, required=True)
    p.add_argument("--to", dest="to_vertex", type=int, required=True)
    p.add_argument("--t-max", dest="t_max", type=float, required=True)
    p.add_argument("--steps", type=int, default=1001)
    p.add_argument("--kind", choices=["laplacian", "adjacency"], default="laplacian")

    p = add("pst-check", cmd_pst_check, "certify or refute Laplacian PST between two vertices")
    p.add_argument("--graph", required=True)
    p.add_argument("--from", dest="from_vertex", type=int, required=True)
    p.add_argument("--to", dest="to_vertex", type=int, required=True)

    p = add("no-pst-witness", cmd_no_pst_witness, "non-integer corona eigenvalue refuting PST")
    p.add_argument("--g", required=True, help="connected base graph on >= 2 vertices")
    p.add_argument("--m", type=int, required=True, help="satellite order")
    p.add_argument("--base-vertex", dest="base_vertex", type=int, default=0)

    p = add("pgst-search", cmd_pgst_search, "scan a PGST time family for a fidelity target")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--family", choices=sorted(_FAMILY_ALIASES), required=True)
    p.add_argument("--r", type=int, default=None, help="shifted family: 2-adic valuation override")
    p.add_argument("--ell-max", dest="ell_max", type=int, default=10_000)
    p.add_argument("--target", type=float, default=0.99)
    p.add_argument("--from", dest="from_vertex", type=int, default=None, help="default 0")
    p.add_argument("--to", dest="to_vertex", type=int, default=None, help="default n-1")

    p = add("figures", cmd_figures, "reproduce the three experiment figures (CSV + JSON)")
    p.add_argument("which", choices=["fig2", "fig3", "fig4", "all"])
    p.add_argument("--outdir", default=os.environ.get(OUTDIR_ENV, "."))

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except argparse.ArgumentError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (ValueError, TypeError, OSError, ArithmeticError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
