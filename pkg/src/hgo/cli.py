"""``hgo`` command line: canonical / generate / count."""

from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import replace

from . import store as store_mod
from .canonical import canonical_graph, canonical_orbit
from .config import DEFAULT_LIMITS
from .count import count_graphlets, count_orbits
from .errors import HgoError, ParseError
from .generate import generate
from .hostfile import read_host_graph

log = logging.getLogger("hgo")


def _fmt(key) -> str:
    return ",".join(map(str, key))


def _limits(args):
    limits = DEFAULT_LIMITS
    if getattr(args, "max_order", None) is not None:
        limits = replace(limits, max_generate_order=args.max_order)
    if getattr(args, "max_catalog", None) is not None:
        limits = replace(limits, max_catalog_size=args.max_catalog)
    return limits


def _store(args):
    if args.no_cache:
        return None
    root = store_mod.resolve_cache_dir(args.cache_dir)
    if not args.cache_dir:
        root.mkdir(parents=True, exist_ok=True)
    return store_mod.CatalogStore(root)


def cmd_canonical(args, out) -> None:
    g = read_host_graph(args.input)
    if args.directed:
        g = g.as_directed()
    if args.ref is None:
        key = canonical_graph(g, method=args.method)
    else:
        key = canonical_orbit(g, args.ref, method=args.method)
    print(_fmt(key), file=out)


def cmd_generate(args, out) -> None:
    kind = "orbits" if args.orbits else "graphs"
    catalog = generate(kind, args.n, args.vcolors, args.ecolors, args.directed, args.connected,
                       store=_store(args), limits=_limits(args))
    text = store_mod.dumps(catalog)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_count(args, out) -> None:
    g = read_host_graph(args.input)
    if args.directed:
        g = g.as_directed()
    common = dict(store=_store(args), limits=_limits(args), jobs=args.jobs)
    if args.graphlets:
        vec = count_graphlets(g, args.k, args.vcolors, args.ecolors, args.connected, **common)
    else:
        if args.ref is None:
            raise ParseError("--ref is required unless --graphlets is given")
        vec = count_orbits(g, args.ref, args.k, args.vcolors, args.ecolors, args.connected, **common)
    if args.dense:
        print(",".join(map(str, vec.counts)), file=out)
    else:
        for i, c in vec.nonzero().items():
            print(f"{i}:{c}", file=out)
    print(f"total={vec.total}", file=out)


def _add_cache_flags(p) -> None:
    p.add_argument("--cache-dir", help=f"catalog cache (default: ${store_mod.ENV_VAR} or ~/.cache/hgo)")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    p.add_argument("--max-order", type=int, help="override the generation order guard")
    p.add_argument("--max-catalog", type=int, help="override the catalog size guard")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hgo", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canonical", help="canonical key of a graph or anchored orbit")
    p.add_argument("input")
    p.add_argument("--ref", type=int, help="anchor vertex; omit for the whole graph")
    p.add_argument("--directed", action="store_true", help="read edges as arcs both ways")
    p.add_argument("--method", choices=("auto", "brute", "pruned"), default="auto")
    p.add_argument("--time", action="store_true")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("generate", help="catalog of graphs or orbits of a type")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--vcolors", type=int, default=1)
    p.add_argument("--ecolors", type=int, default=1)
    p.add_argument("--orbits", action="store_true")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--out")
    p.add_argument("--time", action="store_true")
    _add_cache_flags(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("count", help="orbit or graphlet census of a host graph")
    p.add_argument("input")
    p.add_argument("--ref", type=int)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--vcolors", type=int, default=1)
    p.add_argument("--ecolors", type=int, default=1)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--graphlets", action="store_true")
    dense = p.add_mutually_exclusive_group()
    dense.add_argument("--dense", action="store_true")
    dense.add_argument("--sparse", dest="dense", action="store_false")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--time", action="store_true")
    _add_cache_flags(p)
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=err, format="%(name)s: %(message)s")
    start = time.perf_counter()
    try:
        args.func(args, out)
    except HgoError as exc:
        msg = " ".join(str(exc).split())
        print(f"error: {exc.code}: {msg}", file=err)
        return exc.exit_status
    if args.time:
        print(f"elapsed={time.perf_counter() - start:.3f}s", file=err)
    return 0


if __name__ == "__main__":
    sys.exit(main())
