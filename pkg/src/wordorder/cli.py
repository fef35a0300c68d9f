"""Command-line entry point: ``wordorder {costs,pareto,dynamics,ingest,verify}``.

Data goes to stdout as CSV or JSON, diagnostics to stderr. Exit codes are
0 on success, 1 for domain or configuration errors and 2 for I/O or parse
errors. ``--config FILE`` reads flat ``key=value`` lines that act as
defaults; flags given on the command line take precedence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from . import costs, dynamics, optimizer, typology, verify
from .costs import CostFunction, ConstituentLayout, DomainError
from .typology import TypologyParseError

EXIT_OK, EXIT_DOMAIN, EXIT_IO = 0, 1, 2


class ConfigError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    return values


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _table(header: Sequence[str], rows: Sequence[Sequence], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([[_fmt(v) for v in r] for r in rows])
    return buf.getvalue()


def _cost_function(args, domain_max: int = 64) -> CostFunction:
    return costs.make_cost_function(args.g, args.exponent, max(domain_max, 1))


def _add_g(p):
    p.add_argument("--g", choices=("linear", "power", "logarithmic"), default="linear")
    p.add_argument("--exponent", type=float, default=1.0, help="exponent of the power cost")


def _add_svo_layout(p):
    p.add_argument("--sizes", type=_int_list, help="word counts of S,V,O")
    p.add_argument("--offsets", type=_int_list, help="head-word offsets of S,V,O")


def _svo_layout(args) -> ConstituentLayout:
    sizes = args.sizes or [1, 1, 1]
    offsets = args.offsets or [0, 0, 0]
    if len(sizes) != 3 or len(offsets) != 3:
        raise ConfigError("--sizes and --offsets take three values, for S,V,O")
    return optimizer.three_element_layout(
        s_size=sizes[0], v_size=sizes[1], o_size=sizes[2], offsets=dict(zip("SVO", offsets))
    )


def cmd_costs(args) -> str:
    if args.n < 1:
        raise ConfigError(f"--n must be at least 1, got {args.n}")
    sizes = args.sizes
    words = sum(sizes) if sizes else args.n + 1
    g = _cost_function(args, max(words - 1, args.n))
    rows = [(args.n, l, g.label, costs.memory_cost_constituents(args.n, l, g), "constituents") for l in range(1, args.n + 2)]
    if sizes:
        if len(sizes) != args.n + 1:
            raise ConfigError(f"--sizes needs {args.n + 1} values, got {len(sizes)}")
        if args.order:
            if args.n != 2:
                raise ConfigError("--order labels an S/V/O order and needs --n 2")
            layout = _svo_layout(args)
            lin = optimizer.to_linearization(args.order)
            rows.append((args.n, layout.head_position(lin), g.label, costs.memory_cost_words(layout, lin, g), "words"))
        else:
            # sizes are listed in linear order; the root moves through every position
            offsets = args.offsets or [0] * len(sizes)
            lin = costs.Linearization(tuple(range(args.n + 1)))
            for l in range(1, args.n + 2):
                layout = ConstituentLayout.from_sizes(sizes, l - 1, offsets)
                rows.append((args.n, l, g.label, costs.memory_cost_words(layout, lin, g), "words"))
    return _table(("n", "l", "g_kind", "cost", "measure"), rows, args.format)


def cmd_pareto(args) -> str:
    layout = _svo_layout(args)
    g = _cost_function(args, layout.total_words)
    orders = list(optimizer.enumerate_three_element_orders())
    scores = optimizer.score_orders(orders, layout, g)
    front = set(optimizer.pareto_front(orders, layout, g))
    params = optimizer.EnergyParams(args.lam, args.mu)
    rows = [
        (o, s.memory, s.memory_normalized, s.head_pred, s.dep_pred, o in front, optimizer.scalarized_energy(s, params))
        for o, s in zip(orders, scores)
    ]
    header = ("order", "memory", "memory_normalized", "head_pred", "dep_pred", "on_front", "energy")
    return _table(header, rows, args.format)


def cmd_dynamics(args) -> str:
    layout = _svo_layout(args)
    g = _cost_function(args, layout.total_words)
    params = optimizer.EnergyParams(args.lam, args.mu)
    ring = dynamics.build_ring()
    energy = optimizer.energy_landscape(layout, g, params)
    spec = dynamics.ChainSpec(energy, args.beta, params)
    pi = dynamics.stationary_distribution(dynamics.transition_matrix(spec, ring))
    stats = dynamics.simulate_trajectory(spec, ring, args.steps, args.seed, args.theta, args.window)

    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    landscape = [(u, energy[u], float(p)) for u, p in zip(ring.nodes, pi)]
    (out / "landscape.csv").write_text(_table(("order", "energy", "pi"), landscape, "csv"))
    (out / "stationary.csv").write_text(_table(("order", "pi"), [(u, p) for u, _, p in landscape], "csv"))
    with open(out / "trajectory.csv", "w", newline="") as fh:
        fh.write("step,order\n")
        fh.writelines(f"{t},{ring.nodes[i]}\n" for t, i in enumerate(stats.path.tolist()))
    summary = {
        "lambda": args.lam,
        "mu": args.mu,
        "beta": args.beta,
        "steps": args.steps,
        "seed": args.seed,
        "theta": args.theta,
        "pi": {u: float(p) for u, p in zip(ring.nodes, pi)},
        "visit_counts": stats.visit_counts,
        "reversion_count": stats.reversion_count,
        "local_minima": dynamics.count_local_minima(energy, ring),
        "minima": [sorted(m) for m in dynamics.local_minima(energy, ring)],
        "dominance": dynamics.classify_dominance(pi, args.theta, ring.nodes),
        "window_dominance": stats.dominance,
    }
    text = json.dumps(summary, indent=2) + "\n"
    (out / "summary.json").write_text(text)
    return text


def cmd_ingest(args) -> str:
    path = Path(args.input) if args.input else typology.fixture_path()
    summary = typology.summarize(typology.read_language_table(path))
    return summary.to_json() + "\n" if args.format == "json" else summary.to_csv()


def cmd_verify(args) -> str:
    if args.max_n < 1:
        raise ConfigError(f"--max-n must be at least 1, got {args.max_n}")
    results = verify.run_oracle_suite(args.max_n)
    text = _table(("claim", "passed", "detail"), [(r.name, r.passed, r.detail) for r in results], args.format)
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(f"claim {r.name} failed: {r.detail}", file=sys.stderr)
    args._failed = bool(failed)
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wordorder", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="flat key=value file supplying defaults")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--config", default=argparse.SUPPRESS, help="flat key=value file supplying defaults")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.set_defaults(func=func)
        return p

    p = add("costs", cmd_costs, "memory cost of every head position")
    p.add_argument("--n", type=int, default=2)
    _add_g(p)
    p.add_argument("--sizes", type=_int_list, help="constituent word counts (S,V,O with --order)")
    p.add_argument("--offsets", type=_int_list)
    p.add_argument("--order", help="S/V/O order for the word-level cost, e.g. SVO")

    p = add("pareto", cmd_pareto, "scores, Pareto front and energy of the six orders")
    _add_g(p)
    _add_svo_layout(p)
    p.add_argument("--lambda", dest="lam", type=float, default=0.5)
    p.add_argument("--mu", type=float, default=0.5)

    p = add("dynamics", cmd_dynamics, "stationary distribution and a trajectory on the ring")
    _add_g(p)
    _add_svo_layout(p)
    p.add_argument("--lambda", dest="lam", type=float, default=0.5)
    p.add_argument("--mu", type=float, default=0.5)
    p.add_argument("--beta", type=float, default=2.0)
    p.add_argument("--steps", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--theta", type=float, default=2 / 3)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--output-dir", default="wordorder-run")

    p = add("ingest", cmd_ingest, "verb-position counts of a dominant-order table")
    p.add_argument("--input", help="CSV with header language_id,dominant_order (bundled fixture if omitted)")

    p = add("verify", cmd_verify, "run the brute-force claim checks")
    p.add_argument("--max-n", type=int, default=12)
    return parser


def read_config(path: str | Path) -> dict[str, str]:
    values = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        values[key] = value
    return values


def _apply_config(parser: argparse.ArgumentParser, argv: list[str], args) -> argparse.Namespace:
    config = read_config(args.config)
    pre = []
    for key, value in config.items():
        pre += [f"--{key.replace('_', '-')}", value]
    # re-parse with config values ahead of the explicit flags so the flags win
    cmd_at = argv.index(args.command)
    merged = argv[: cmd_at + 1] + pre + argv[cmd_at + 1 :]
    return parser.parse_args(merged)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.config:
            args = _apply_config(parser, argv, args)
        text = args.func(args)
    except (TypologyParseError, OSError) as exc:
        print(f"wordorder: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DomainError, dynamics.ChainError, ValueError) as exc:
        print(f"wordorder: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(text)
    return EXIT_DOMAIN if getattr(args, "_failed", False) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
