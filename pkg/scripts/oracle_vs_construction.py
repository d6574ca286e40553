"""Compare the exact optimum with the Sidon construction and the pigeonhole estimate."""

import argparse
import math
from dataclasses import dataclass

from dupcode.analysis import exact_optimal
from dupcode.codes import best_offset, make_spec


@dataclass
class Config:
    q: int = 2
    t: int = 1
    k: int = 1
    n_max: int = 8


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for f, v in Config().__dict__.items():
        ap.add_argument("--" + f.replace("_", "-"), type=int, default=v)
    cfg = Config(**vars(ap.parse_args()))
    print(f"{'n':>3} {'optimal':>8} {'sidon':>6} {'pigeon':>7} {'ratio':>6}")
    for n in range(1, cfg.n_max + 1):
        opt = exact_optimal(n, cfg.q, cfg.t, cfg.k)
        ours = pigeon = 0
        for w in range(n + 1):
            spec = make_spec(cfg.q, n, w, cfg.t, cfg.k)
            ours += best_offset(cfg.q, n, w, cfg.t, cfg.k, spec.B)[1]
            pigeon += -(-math.comb(n, w) * (cfg.q - 1) ** w // spec.group.order)
        print(f"{n:>3} {opt.size:>8} {ours:>6} {pigeon:>7} {ours / opt.size:>6.2f}")


if __name__ == "__main__":
    main()
