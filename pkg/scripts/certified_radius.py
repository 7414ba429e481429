"""Largest Howgrave-Graham-certified radius as a function of the multiplicity m.

Prints X'/N^(1/d) next to the determinant-limited exponent m / (d(m+1) - 1)
so the gap to the asymptotic N^(1/d) is visible.
"""

import argparse
import random
from dataclasses import dataclass

from copperscope.arith import iroot
from copperscope.coppersmith import Problem, certified_radius, random_prime


@dataclass
class Config:
    bits: int = 80
    d: int = 3
    m_max: int = 6
    t_extra: int = 0
    seed: int = 5
    refine: bool = False


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    half = cfg.bits // 2
    N = random_prime(half, rng) * random_prime(cfg.bits - half, rng)
    f = tuple([rng.randrange(N) for _ in range(cfg.d)] + [1])
    top = iroot(N, cfg.d)
    for m in range(1, cfg.m_max + 1):
        X = certified_radius(Problem(f, N, top, m=m, t_extra=cfg.t_extra), m, refine=cfg.refine)
        w = cfg.d * (m + 1) + cfg.t_extra
        yield m, w, X, X / top, m / (cfg.d * (m + 1) - 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        if isinstance(default, bool):
            ap.add_argument(f"--{name.replace('_', '-')}", action="store_true")
        else:
            ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    cfg = Config(**vars(ap.parse_args()))
    print(f"{'m':>3} {'w':>3} {'X_cert':>14} {'X/N^(1/d)':>10} {'det exp':>8}")
    for m, w, X, ratio, expo in run(cfg):
        print(f"{m:>3} {w:>3} {X:>14} {ratio:>10.4f} {expo:>8.4f}")


if __name__ == "__main__":
    main()
