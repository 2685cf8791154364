"""Run the compactification pipeline over a grid and print one row per run.

    python scripts/pipeline_sweep.py --max-n 6 --alphas w w*2 w*3
"""
import argparse
import itertools
import json
from dataclasses import asdict, dataclass, field

from ordcompact.compactify import run_pipeline
from ordcompact.lattice import STRATEGIES
from ordcompact.ordinal import parse_ordinal


@dataclass
class SweepConfig:
    max_n: int = 6
    seeds: list[int] = field(default_factory=lambda: [0, 1, 2])
    alphas: list[str] = field(default_factory=lambda: ["w", "w*2"])


def sweep(cfg: SweepConfig):
    rows = []
    for n, strategy, seed, alpha in itertools.product(
        range(1, cfg.max_n + 1), STRATEGIES, cfg.seeds, cfg.alphas
    ):
        rep = run_pipeline(n, strategy, seed, parse_ordinal(alpha))
        rows.append({
            "n": n, "strategy": strategy, "seed": seed, "alpha": alpha,
            "chain_length": rep.chain_length, "verdicts": list(rep.verdicts),
            "subcover": [str(s) for s in rep.subcover],
        })
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    p.add_argument("--alphas", nargs="+", default=["w", "w*2"])
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    cfg = SweepConfig(args.max_n, args.seeds, args.alphas)
    rows = sweep(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    for r in rows:
        print(f"n={r['n']} {r['strategy']:<19} seed={r['seed']} alpha={r['alpha']:<4} "
              f"len={r['chain_length']:<3} verdicts={r['verdicts']} subcover={r['subcover']}")
    print(f"{sum(all(r['verdicts']) for r in rows)}/{len(rows)} runs with all verdicts true")


if __name__ == "__main__":
    main()
