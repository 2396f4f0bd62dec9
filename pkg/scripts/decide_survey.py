"""Verdict distribution of the decision procedure on random polynomial germs g/h."""
import argparse
import collections
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from moncurve.analyticity import Analytic, DecideConfig, Inconclusive, NotAnalytic, decide, verify_witness
from moncurve.analyticity import MeromorphicGerm
from moncurve.series import MultiSeries


@dataclass
class Config:
    samples: int = 300
    max_n: int = 3
    degree: int = 4
    terms: int = 3
    trunc: int = 16
    budget: int = 10_000
    seed: int = 1


def random_poly(rng, n, deg, k):
    terms = {}
    for _ in range(k):
        a = [0] * n
        for _ in range(rng.randint(0, deg)):
            a[rng.randrange(n)] += 1
        terms[tuple(a)] = Fraction(rng.randint(-3, 3))
    return MultiSeries(n, terms)


def run(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    counts = collections.Counter()
    slowest = 0.0
    for _ in range(cfg.samples):
        n = rng.randint(2, cfg.max_n)
        g, h = random_poly(rng, n, cfg.degree, cfg.terms), random_poly(rng, n, cfg.degree, cfg.terms)
        if h.is_zero():
            continue
        F = MeromorphicGerm(g, h)
        t = time.perf_counter()
        v = decide(F, config=DecideConfig(trunc=cfg.trunc, budget=cfg.budget))
        slowest = max(slowest, time.perf_counter() - t)
        if isinstance(v, Analytic):
            counts[f"Analytic/{v.kind}"] += 1
        elif isinstance(v, NotAnalytic):
            assert verify_witness(F, v.witness)
            counts["NotAnalytic/" + ("pole" if v.witness.pole else f"{len(v.path)} moves")] += 1
        else:
            assert isinstance(v, Inconclusive)
            counts[f"Inconclusive/{v.reason}"] += 1
    for k, c in sorted(counts.items()):
        print(f"{k:<28} {c}")
    print(f"slowest decide: {slowest:.2f}s")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    for name, val in Config().__dict__.items():
        p.add_argument(f"--{name.replace('_', '-')}", type=type(val), default=val)
    run(Config(**vars(p.parse_args())))


if __name__ == "__main__":
    main()
