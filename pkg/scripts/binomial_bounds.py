"""Degree needed for a bounded integer-valued polynomial on the disc of radius r.

Compares the explicit construction b_{2t+1}(x+t) (degree 2t+1, first t with
sup < 1) against the q0 prediction q0 r / 2 and the Minkowski existence bound.
"""

import argparse
from dataclasses import dataclass, field

from copperscope.binomial import construction_sup_norm, minkowski_degree_bound, solve_q0


@dataclass
class Config:
    radii: list[int] = field(default_factory=lambda: [5, 10, 25, 50, 100, 200])


def first_bounded_t(r: int) -> int:
    t = 1
    while construction_sup_norm(t, r) >= 1:
        t += 1
    return t


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radii", type=int, nargs="+", default=Config().radii)
    cfg = Config(radii=ap.parse_args().radii)
    q0 = solve_q0()
    print(f"q0 = {q0:.7f}")
    print(f"{'r':>5} {'first t':>8} {'q0 r/2':>8} {'deg 2t+1':>9} {'Minkowski m':>12}")
    for r in cfg.radii:
        t = first_bounded_t(r)
        m = minkowski_degree_bound(r, 3)
        print(f"{r:>5} {t:>8} {q0 * r / 2:>8.1f} {2 * t + 1:>9} {m:>12}")


if __name__ == "__main__":
    main()
