"""Recover the unknown low bits of e = 3 RSA messages across modulus sizes."""

import argparse
import json
from dataclasses import asdict, dataclass, field

from copperscope.coppersmith import demo_stereotyped_rsa


@dataclass
class Config:
    bits: list[int] = field(default_factory=lambda: [32, 64, 128, 256])
    seeds: list[int] = field(default_factory=lambda: [0, 1, 2])


def run(cfg: Config) -> list[dict]:
    rows = []
    for bits in cfg.bits:
        for seed in cfg.seeds:
            rep = demo_stereotyped_rsa(bits, seed)
            rows.append({
                "bits": bits,
                "seed": seed,
                "success": rep["success"],
                "m": rep["m"],
                "w": rep["w"],
                "log2_X": rep["certified_X"].bit_length(),
                "ms": round(sum(rep["timings_ms"].values()), 1),
            })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bits", type=int, nargs="+", default=Config().bits)
    ap.add_argument("--seeds", type=int, nargs="+", default=Config().seeds)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = Config(bits=args.bits, seeds=args.seeds)
    rows = run(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    print(f"{'bits':>5} {'seed':>4} {'ok':>3} {'m':>3} {'w':>3} {'log2 X':>7} {'ms':>9}")
    for r in rows:
        print(f"{r['bits']:>5} {r['seed']:>4} {'y' if r['success'] else 'n':>3} {r['m']:>3} {r['w']:>3} {r['log2_X']:>7} {r['ms']:>9}")


if __name__ == "__main__":
    main()
