"""Command-line front end: ``chebypa <subcommand> [flags]``.

Exit codes: 0 success, 2 usage error, 3 invalid argument or failed
precondition, 4 resource-guard refusal.  A ``# chebypa ...`` line with the
full parameter set is written to stderr on every run.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import bounds, channel, codec, constructions, search
from .core import PermutationArray, format_permutation, format_pa, parse_int_list
from .errors import InvalidArgumentError, PAError, PreconditionError, RangeError, ResourceLimitError

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_RESOURCE = 0, 2, 3, 4


def default_cache_dir() -> Path:
    env = os.environ.get("PA_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_DATA_HOME") or os.path.join(os.path.expanduser("~"), ".local", "share")
    return Path(base) / "chebypa"


def _caches(args):
    cache_dir = Path(args.cache_dir) if args.cache_dir else default_cache_dir()
    return (bounds.BallCache(cache_dir / "balls.txt"),
            bounds.Registry(cache_dir / "registry.txt"))


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_construct(args):
    if args.kind == "explicit":
        code = constructions.explicit_code(args.n, args.d)
        if not args.emit_words:
            _emit(json.dumps({"n": code.n, "d": code.d, "a": code.a, "b": code.b,
                              "cardinality": str(code.cardinality)}))
            return
        pa = code.materialize(args.max_words)
    elif args.kind == "binary":
        pa = constructions.build_chain_binary(args.n, args.d, args.max_words).as_pa()
    else:
        pa = constructions.build_chain_qary(args.n, args.d, args.q, args.max_words).as_pa()
    _emit(format_pa(pa))


def cmd_encode(args):
    msg = parse_int_list(args.message) if args.message.strip() else []
    if args.q == 2:
        word = codec.encode_binary(msg, args.n, args.d)
    else:
        word = codec.encode_qary(msg, args.n, args.d, args.q)
    _emit(format_permutation(word))


def cmd_decode(args):
    y = parse_int_list(args.word)
    if args.q == 2:
        msg = codec.decode_binary(y, args.n, args.d)
    else:
        msg = codec.decode_qary(y, args.n, args.d, args.q)
    _emit(",".join(str(v) for v in msg))


def cmd_ball_size(args):
    cache, _ = _caches(args)
    _emit(str(bounds.ball_size(args.n, args.d, cache, args.max_band)))


def cmd_bounds(args):
    cache, registry = _caches(args)
    table = bounds.best_known_lower(args.n_max, args.d_max, registry.entries, cache)
    _emit(_format_table(table, args.format))


def _format_table(table, fmt):
    if fmt == "csv":
        return bounds.table_to_csv(table)
    if fmt == "json":
        return bounds.table_to_json(table)
    lines = [f"{'n':>3} {'d':>3} {'lower':>12} {'via':<16} {'upper':>12} via"]
    for key in sorted(table):
        r = table[key]
        lines.append(f"{r.n:>3} {r.d:>3} {r.lower:>12} {r.lower_provenance:<16} {r.upper:>12} {r.upper_provenance}")
    return "\n".join(lines)


def cmd_mu(args):
    cache, _ = _caches(args)
    est = bounds.mu_estimate(args.d, args.n_max, cache, args.max_band)
    _emit(json.dumps({"d": args.d, "n_max": args.n_max, "estimate": est.estimate,
                      "last_change": est.last_change,
                      "upper_bound": bounds.vupper_bound(1, args.d)}))


def _search_output(res, emit_words):
    head = f"size={res.size} n={res.n} d={res.d} method={res.method} scanned={res.permutations_scanned}"
    if emit_words:
        return head + "\n" + format_pa(res.words)
    return head


def cmd_greedy(args):
    res = search.greedy_lex(args.n, args.d, max_n=args.max_n)
    if args.register:
        _, registry = _caches(args)
        registry.register(args.n, args.d, res.size, "greedy")
    _emit(_search_output(res, args.emit_words))


def cmd_exact(args):
    res = search.exact_max_pa(args.n, args.d, max_n=args.max_n)
    if args.register:
        _, registry = _caches(args)
        registry.register(args.n, args.d, res.size, "exact")
    _emit(_search_output(res, args.emit_words))


def cmd_simulate(args):
    cfg = channel.ChannelConfig(args.sigma, args.trials, args.seed, args.clipped)
    stats = channel.simulate(args.codec, args.n, args.d, cfg, q=args.q)
    if args.format == "json":
        _emit(stats.to_json())
    else:
        _emit("\n".join(f"{k}: {v}" for k, v in stats.to_dict().items()))


def reproduce_tables(greedy_n_max: int, exact_n_max: int, mu_n_max: int,
                     cache=None, max_band: int = bounds.DEFAULT_MAX_BAND):
    """Recompute the growth-rate table (d <= 8) and the bounds grid for d = 2..7, n = d+1..d+5.

    Greedy runs only for ``n <= greedy_n_max`` and exact search only for
    ``n <= exact_n_max``; cells outside are listed in ``skipped``.
    """
    mu_rows = []
    for d in range(1, 9):
        row = {"d": d, "upper": bounds.vupper_bound(1, d)}
        if d <= max_band:
            est = bounds.mu_estimate(d, mu_n_max, cache, max_band)
            row.update(mu=est.estimate, ratio=est.estimate / (2 * d + 1), last_change=est.last_change)
        mu_rows.append(row)
    registered = {}
    skipped = []
    cells = [(d + k, d) for d in range(2, 8) for k in range(1, 6)]
    for n, d in cells:
        if n <= exact_n_max:
            registered[(n, d)] = (search.exact_max_pa(n, d, max_n=exact_n_max).size, "exact")
        elif n <= greedy_n_max:
            registered[(n, d)] = (search.greedy_lex(n, d, max_n=greedy_n_max).size, "greedy")
        else:
            skipped.append((n, d))
    table = bounds.best_known_lower(12, 7, registered, cache)
    grid = [table[c] for c in cells]
    return mu_rows, grid, skipped


def cmd_reproduce_tables(args):
    cache, _ = _caches(args)
    mu_rows, grid, skipped = reproduce_tables(args.greedy_n_max, args.exact_n_max, args.mu_n_max,
                                              cache, args.max_band)
    if args.format == "json":
        _emit(json.dumps({
            "schema": "chebypa.tables/1",
            "growth": mu_rows,
            "bounds": json.loads(bounds.table_to_json({(r.n, r.d): r for r in grid}))["rows"],
            "skipped_searches": [list(c) for c in skipped],
        }, indent=2))
        return
    out = ["growth rate of V(n,d) (ratio estimate at n=%d)" % args.mu_n_max,
           f"{'d':>2} {'mu_d':>9} {'[(2d+1)!]^(1/(2d+1))':>22} {'mu_d/(2d+1)':>12}"]
    for r in mu_rows:
        if "mu" in r:
            out.append(f"{r['d']:>2} {r['mu']:>9.5f} {r['upper']:>22.5f} {r['ratio']:>12.5f}")
        else:
            out.append(f"{r['d']:>2} {'skipped':>9} {r['upper']:>22.5f} {'':>12}")
    out.append("")
    out.append("bounds on P(n,d)")
    out.append(_format_table({(r.n, r.d): r for r in grid}, "text"))
    if skipped:
        out.append("")
        out.append("PARTIAL: no search run for " + " ".join(f"({n},{d})" for n, d in skipped)
                   + f" (greedy limited to n <= {args.greedy_n_max}); their lower bounds come from constructions only")
    _emit("\n".join(out))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=None,
                        help="cache directory (default: $PA_CACHE_DIR or the per-user data dir)")
    common.add_argument("--max-words", type=int, default=constructions.DEFAULT_MAX_WORDS)
    common.add_argument("--max-band", type=int, default=bounds.DEFAULT_MAX_BAND)

    p = argparse.ArgumentParser(prog="chebypa", description="Permutation arrays under the Chebyshev distance")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("construct", parents=[common], help="build a code")
    s.add_argument("--kind", choices=["explicit", "binary", "qary"], default="explicit")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--emit-words", action="store_true", help="list explicit-code words")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("encode", parents=[common], help="message -> chain-code permutation")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--message", required=True)
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("decode", parents=[common], help="received word -> message")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("ball-size", parents=[common], help="exact V(n,d)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_ball_size)

    s = sub.add_parser("bounds", parents=[common], help="best known bounds grid")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--d-max", type=int, required=True)
    s.add_argument("--format", choices=["text", "csv", "json"], default="text")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("mu", parents=[common], help="growth rate estimate")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n-max", type=int, default=40)
    s.set_defaults(func=cmd_mu)

    for name, func, max_n in (("greedy", cmd_greedy, search.GREEDY_MAX_N),
                              ("exact", cmd_exact, search.EXACT_MAX_N)):
        s = sub.add_parser(name, parents=[common], help=f"{name} search")
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--d", type=int, required=True)
        s.add_argument("--emit-words", action="store_true")
        s.add_argument("--register", action="store_true", help="record the size in the cache registry")
        s.add_argument("--max-n", type=int, default=max_n, help="feasibility guard on n")
        s.set_defaults(func=func)

    s = sub.add_parser("simulate", parents=[common], help="Monte-Carlo AWGN channel")
    s.add_argument("--codec", choices=list(channel.CODECS), default="binary")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--sigma", type=float, required=True)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--clipped", action="store_true")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("reproduce-tables", parents=[common], help="growth-rate table and bounds grid")
    s.add_argument("--greedy-n-max", type=int, default=9)
    s.add_argument("--exact-n-max", type=int, default=5)
    s.add_argument("--mu-n-max", type=int, default=40)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_reproduce_tables)
    return p


def _header(args) -> str:
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command")}
    return "# chebypa " + args.command + " " + " ".join(f"{k}={v}" for k, v in params.items())


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    print(_header(args), file=sys.stderr)
    try:
        args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InvalidArgumentError, PreconditionError, RangeError, PAError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    """Console entry point; returns the exit status."""
    return main(argv)


if __name__ == "__main__":
    sys.exit(run())
