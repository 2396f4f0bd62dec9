"""How tight is floor((2/n) m_1 m_n) as a Frobenius bound?

Enumerates all gcd-1 tuples with entries in [2, hi] and compares the exact
Frobenius number with the bound evaluated on the minimal generators and on
the tuple as given (redundant generators included).
"""
import argparse
import itertools
import math
from dataclasses import dataclass
from functools import reduce

from moncurve.semigroup import semigroup, sg_frobenius, sg_frobenius_bound


@dataclass
class Config:
    n: int = 3
    hi: int = 25


def run(cfg: Config) -> None:
    total = literal_viol = minimal_viol = 0
    worst_ratio, worst = 0.0, None
    example = None
    for m in itertools.combinations(range(2, cfg.hi + 1), cfg.n):
        if reduce(math.gcd, m) != 1:
            continue
        total += 1
        S = semigroup(m)
        f = sg_frobenius(S)
        b = sg_frobenius_bound(S)
        literal = (2 * m[0] * m[-1]) // len(m)
        minimal_viol += f > b
        if f > literal:
            literal_viol += 1
            example = example or (m, f, literal, S.minimal_generators())
        if b and f / b > worst_ratio:
            worst_ratio, worst = f / b, (m, f, b)
    print(f"n={cfg.n}, entries in [2,{cfg.hi}]: {total} gcd-1 tuples")
    print(f"bound on minimal generators violated: {minimal_viol}")
    print(f"bound on the tuple as given violated: {literal_viol}")
    if example:
        m, f, lit, mg = example
        print(f"  e.g. {m}: Frobenius {f} > {lit}; minimal generators {mg}")
    if worst:
        print(f"tightest case {worst[0]}: Frobenius {worst[1]} vs bound {worst[2]} (ratio {worst_ratio:.3f})")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--hi", type=int, default=Config.hi)
    run(Config(**vars(p.parse_args())))


if __name__ == "__main__":
    main()
