"""Sweep X = N^e across the existence threshold for disc and interval.

The verdict flips at e = 1/d for the disc and at N^(d e) = 2^d N for the
interval; both are decided exactly.
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from copperscope.capacity import LogCapacity, coppersmith_feasibility


@dataclass
class Config:
    N: int = 2**128 + 51
    d: int = 3
    steps: int = 9
    span: Fraction = Fraction(1, 50)


def run(cfg: Config):
    f = [0] * cfg.d + [1]
    centre = Fraction(1, cfg.d)
    for k in range(cfg.steps):
        e = centre + cfg.span * (Fraction(2 * k, cfg.steps - 1) - 1)
        X = LogCapacity.power(cfg.N, e)
        disk = coppersmith_feasibility(f, cfg.N, X, "disk")
        interval = coppersmith_feasibility(f, cfg.N, X, "interval")
        yield e, disk.capacity.ln(), disk.status.value, interval.capacity.ln(), interval.status.value


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=Config.N)
    ap.add_argument("--d", type=int, default=Config.d)
    ap.add_argument("--steps", type=int, default=Config.steps)
    ap.add_argument("--span", type=Fraction, default=Config.span)
    cfg = Config(**vars(ap.parse_args()))
    print(f"{'exponent':>12} {'ln cap disc':>12} {'disc':>10} {'ln cap int':>12} {'interval':>10}")
    for e, ld, sd, li, si in run(cfg):
        print(f"{str(e):>12} {ld:>12.4f} {sd:>10} {li:>12.4f} {si:>10}")


if __name__ == "__main__":
    main()
