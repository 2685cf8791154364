"""Labeled and unlabeled topology counts with the distribution of strongest
separation axiom, for n = 1..5 (n = 5 takes a few seconds)."""
import argparse
import time
from collections import Counter

from ordcompact.lattice import canonical_form, enumerate_topologies
from ordcompact.separation import classify


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=4)
    args = p.parse_args()
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        count, tops = enumerate_topologies(n)
        tops = list(tops)
        unlabeled = len({canonical_form(t) for t in tops})
        dist = Counter(classify(t).strongest or "None" for t in tops)
        dt = time.perf_counter() - t0
        print(f"n={n} labeled={count} unlabeled={unlabeled} strongest={dict(sorted(dist.items()))} ({dt:.2f}s)")


if __name__ == "__main__":
    main()
