"""Restrictions of F_m = x^m y^m / (x^2 + y^2) to monomial curves.

For each m prints which coprime curves (m1, m2) fail, and the first
offending exponent, next to the predicate min(m1, m2) <= m/2. Ends with the
verdict of the full decision procedure for each m.
"""
import argparse
import math
from dataclasses import dataclass

from moncurve.analyticity import MeromorphicGerm, NotAnalytic, curve_check, decide
from moncurve.series import MultiSeries


@dataclass
class Config:
    ms: str = "1,2,3,4,5,6"
    max_exp: int = 12
    show: bool = False


def run(cfg: Config) -> None:
    x, y = MultiSeries.variable(2, 0), MultiSeries.variable(2, 1)
    for m in (int(s) for s in cfg.ms.split(",")):
        F = MeromorphicGerm(x ** m * y ** m, x * x + y * y)
        passed = failed = mismatched = 0
        for m1 in range(1, cfg.max_exp + 1):
            for m2 in range(1, cfg.max_exp + 1):
                if math.gcd(m1, m2) != 1:
                    continue
                r = curve_check(F, (m1, m2))
                small = min(m1, m2) <= m / 2
                passed += r.passed
                failed += not r.passed
                mismatched += small and not r.passed
                if cfg.show and not r.passed:
                    print(f"  m={m} ({m1},{m2}) fails at t^{r.offending_exponent}")
        v = decide(F)
        verdict = type(v).__name__
        if isinstance(v, NotAnalytic):
            verdict += f" witness {v.witness.curve} at t^{v.witness.offending_exponent}"
        print(f"m={m}: {passed} curves pass, {failed} fail, "
              f"{mismatched} failures with min<=m/2; decide: {verdict}")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--ms", default=Config.ms)
    p.add_argument("--max-exp", type=int, default=Config.max_exp)
    p.add_argument("--show", action="store_true")
    run(Config(**vars(p.parse_args())))


if __name__ == "__main__":
    main()
