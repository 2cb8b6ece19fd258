"""Regenerate the graph/orbit size table and compare against published values.

    python scripts/reproduce_sizes.py --max-n 4 --max-ecolors 3
"""

import argparse
import time

from hgo.config import Limits
from hgo.generate import generate_graphs, generate_orbits

PUBLISHED = {
    (3, 1, 1): (4, 6), (3, 1, 2): (10, 18), (3, 1, 3): (20, 40), (3, 1, 4): (35, 75),
    (3, 1, 5): (56, 126), (3, 2, 1): (20, 40), (3, 2, 2): (56, 126), (3, 2, 3): (120, 288),
    (3, 2, 4): (220, 550), (3, 2, 5): (364, 936), (3, 3, 1): (56, 126), (3, 3, 2): (165, 405),
    (3, 3, 3): (364, 936), (3, 3, 4): (680, 1800), (3, 3, 5): (1140, 3078),
    (4, 1, 1): (11, 20), (4, 1, 2): (66, 165), (4, 1, 3): (276, 816), (4, 1, 4): (900, 2925),
    (4, 1, 5): (2451, 8436), (4, 2, 1): (90, 240), (4, 2, 2): (705, 2280),
    (4, 2, 3): (3400, 11968), (4, 2, 4): (12025, 44200), (4, 2, 5): (34410, 129648),
    (4, 3, 1): (357, 1092), (4, 3, 2): (3132, 10962), (4, 3, 3): (15900, 58800),
    (4, 3, 4): (57750, 219450), (4, 3, 5): (167805, 647460),
    (5, 1, 1): (34, 90), (5, 1, 2): (792, 3132), (5, 1, 3): (10688, 48400),
    (5, 1, 4): (90005, 428625), (5, 2, 1): (544, 1992), (5, 2, 2): (19548, 88452),
    (5, 2, 3): (306016, 1468480), (5, 2, 4): (2725010, 13350750), (5, 3, 1): (3258, 13338),
    (5, 3, 2): (137268, 645408), (5, 3, 3): (2249184, 10964880),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-vcolors", type=int, default=3)
    ap.add_argument("--max-ecolors", type=int, default=5)
    ap.add_argument("--cache-dir", help="reuse catalogs stored here")
    args = ap.parse_args()

    limits = Limits(max_catalog_size=10**8)
    print(f"{'type':>10} {'graphs':>8} {'orbits':>9} {'published':>18} {'ok':>3} {'secs':>7}")
    bad = 0
    for cell, want in PUBLISHED.items():
        n, v, e = cell
        if n > args.max_n or v > args.max_vcolors or e > args.max_ecolors:
            continue
        start = time.perf_counter()
        got = (len(generate_graphs(n, v, e, store=args.cache_dir, limits=limits)),
               len(generate_orbits(n, v, e, store=args.cache_dir, limits=limits)))
        ok = got == want
        bad += not ok
        print(f"{str(cell):>10} {got[0]:>8} {got[1]:>9} {str(want):>18} {'y' if ok else 'N':>3} "
              f"{time.perf_counter() - start:>7.2f}", flush=True)
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
