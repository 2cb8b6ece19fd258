"""Convert an edge list plus an optional node-color table to a host file.

Edges: one ``u v [color]`` pair per line (whitespace or comma separated).
Colors: ``node color`` per line; colors may be labels, mapped to 0, 1, ...
in order of first appearance unless ``--palette`` fixes the order.
Node names are mapped to 0..n-1 in sorted order (numerically when possible).
"""

import argparse
import re
import sys


def rows(path):
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                yield re.split(r"[\s,]+", line)


def node_order(names):
    try:
        return sorted(names, key=int)
    except ValueError:
        return sorted(names)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("edges")
    ap.add_argument("--colors", help="node color table")
    ap.add_argument("--palette", help="comma-separated color labels, in index order")
    ap.add_argument("--directed", action="store_true")
    ap.add_argument("-o", "--out", type=argparse.FileType("w"), default=sys.stdout)
    args = ap.parse_args()

    edges = [(r[0], r[1], int(r[2]) if len(r) > 2 else 1) for r in rows(args.edges)]
    colors = {r[0]: r[1] for r in rows(args.colors)} if args.colors else {}
    names = node_order({u for u, _, _ in edges} | {v for _, v, _ in edges} | set(colors))
    index = {name: i for i, name in enumerate(names)}
    palette = args.palette.split(",") if args.palette else list(dict.fromkeys(colors.values()))

    out = args.out
    out.write(f"n {len(names)} directed {int(args.directed)}\n")
    for name in names:
        if name in colors and palette.index(colors[name]):
            out.write(f"v {index[name]} {palette.index(colors[name])}\n")
    seen = set()
    for u, v, c in edges:
        pair = (index[u], index[v]) if args.directed else tuple(sorted((index[u], index[v])))
        if pair not in seen:
            seen.add(pair)
            out.write(f"e {pair[0]} {pair[1]} {c}\n")
    if palette:
        print("palette: " + ", ".join(f"{i}={c}" for i, c in enumerate(palette)), file=sys.stderr)


if __name__ == "__main__":
    main()
