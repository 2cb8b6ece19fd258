"""Orbit census of one vertex in a colored host network.

Defaults reproduce the dolphin example: vertex 1, 4-vertex connected
orbits, three vertex colors, one edge color.  The host file is not shipped;
build it with ``edgelist_to_host.py``.
"""

import argparse
import time
from collections import Counter

from hgo.count import count_orbits
from hgo.hostfile import read_host_graph

# frequency -> number of orbits seen at that frequency, as published;
# one orbit is printed under both 4 and 15
PUBLISHED = {1: 28, 2: 5, 3: 2, 4: 5, 5: 4, 6: 1, 7: 1, 9: 1, 10: 1, 12: 1, 14: 1, 15: 1,
             18: 1, 20: 1}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("host", nargs="?", default="tests/fixtures/dolphins.txt")
    ap.add_argument("--ref", type=int, default=1)
    ap.add_argument("-k", type=int, default=4)
    ap.add_argument("--vcolors", type=int, default=3)
    ap.add_argument("--ecolors", type=int, default=1)
    ap.add_argument("--all", action="store_true", help="include disconnected orbits")
    ap.add_argument("--cache-dir")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    g = read_host_graph(args.host)
    start = time.perf_counter()
    vec = count_orbits(g, args.ref, args.k, args.vcolors, args.ecolors, not args.all,
                       store=args.cache_dir, jobs=args.jobs)
    elapsed = time.perf_counter() - start

    by_freq = {}
    for index, c in sorted(vec.nonzero().items()):
        by_freq.setdefault(c, []).append(index)
    print(f"host: {g.order} vertices; vector length {len(vec.counts)}; "
          f"total {vec.total}; {elapsed:.1f}s")
    print("frequency | orbits")
    for c, indices in sorted(by_freq.items()):
        print(f"{c:>9} | {', '.join(map(str, indices))}")
    profile = Counter(vec.nonzero().values())
    print("\nfrequency  ours  published")
    for c in sorted(set(profile) | set(PUBLISHED)):
        print(f"{c:>9} {profile.get(c, 0):>5} {PUBLISHED.get(c, 0):>10}")


if __name__ == "__main__":
    main()
