"""Chart-tree size and depth of principalization on random monomial ideals.

Reports, per variable count, the DFS path length to the first principal
chart and the size of the full chart tree (all leaves).
"""
import argparse
import random
import statistics
import time
from dataclasses import dataclass

from moncurve.principalize import BudgetExceeded, minimalize, principalize_all_leaves, principalize_search


@dataclass
class Config:
    samples: int = 200
    max_n: int = 4
    max_gens: int = 5
    max_exp: int = 4
    budget: int = 10_000
    full_tree: bool = False
    seed: int = 0


def run(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    rows = {}
    t0 = time.perf_counter()
    for _ in range(cfg.samples):
        n = rng.randint(2, cfg.max_n)
        gens = [[rng.randint(0, cfg.max_exp) for _ in range(n)] for _ in range(rng.randint(1, cfg.max_gens))]
        I = minimalize(gens)
        r = principalize_search(I, cfg.budget)
        row = rows.setdefault(n, {"depth": [], "expansions": [], "leaves": [], "tree_depth": [], "over": 0})
        row["depth"].append(len(r.path))
        row["expansions"].append(r.expansions)
        if cfg.full_tree:
            try:
                leaves = list(principalize_all_leaves(I, cfg.budget))
                row["leaves"].append(len(leaves))
                row["tree_depth"].append(max(len(x.path) for x in leaves))
            except BudgetExceeded:
                row["over"] += 1
    print(f"{'n':>2} {'ideals':>6} {'depth mean':>10} {'depth max':>9} {'exp max':>7}"
          + (f" {'leaves max':>10} {'tree depth':>10} {'over':>4}" if cfg.full_tree else ""))
    for n in sorted(rows):
        row = rows[n]
        line = (f"{n:>2} {len(row['depth']):>6} {statistics.mean(row['depth']):>10.2f} "
                f"{max(row['depth']):>9} {max(row['expansions']):>7}")
        if cfg.full_tree:
            line += (f" {max(row['leaves'], default=0):>10} {max(row['tree_depth'], default=0):>10}"
                     f" {row['over']:>4}")
        print(line)
    print(f"elapsed {time.perf_counter() - t0:.1f}s")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    for name, val in Config().__dict__.items():
        if isinstance(val, bool):
            p.add_argument(f"--{name.replace('_', '-')}", action="store_true")
        else:
            p.add_argument(f"--{name.replace('_', '-')}", type=type(val), default=val)
    run(Config(**vars(p.parse_args())))


if __name__ == "__main__":
    main()
