"""Compare observed separation strata along deformation chains with the
six-interval schedule.

    python scripts/strata_survey.py --sizes 3 4 5 --chains 50
"""
import argparse
from collections import Counter
from dataclasses import dataclass, field

from ordcompact.lattice import classify_chain, deformation_chain


@dataclass
class SurveyConfig:
    sizes: list[int] = field(default_factory=lambda: [3, 4, 5])
    chains: int = 50
    strategy: str = "random_maximal"


def survey(cfg: SurveyConfig):
    for n in cfg.sizes:
        agree = Counter()
        lengths = Counter()
        for seed in range(cfg.chains):
            trace = classify_chain(deformation_chain(n, cfg.strategy, seed))
            lengths[len(trace.steps)] += 1
            for _, _, seen, scheduled in trace.schedule_rows():
                agree[(seen or "None", scheduled or "None")] += 1
        print(f"n={n}: chain lengths {dict(sorted(lengths.items()))}")
        for (seen, scheduled), count in sorted(agree.items()):
            mark = "" if seen == scheduled or (seen, scheduled) == ("T4", "discrete") else "  <- differs"
            print(f"    observed {seen:<4} scheduled {scheduled:<8} x{count}{mark}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[3, 4, 5])
    p.add_argument("--chains", type=int, default=50)
    p.add_argument("--strategy", default="random_maximal")
    args = p.parse_args()
    survey(SurveyConfig(args.sizes, args.chains, args.strategy))


if __name__ == "__main__":
    main()
