"""Print the lower/upper coefficient table for a range of t.

    python scripts/bounds_table.py --q 2 --k 1 --t-max 8
"""

import argparse
from dataclasses import dataclass

from dupcode.analysis import coeff_lower, coeff_upper, levenshtein_s, s_opt


@dataclass
class Config:
    q: int = 2
    k: int = 1
    t_max: int = 8


def rows(cfg: Config):
    for t in range(1, cfg.t_max + 1):
        s = s_opt(cfg.q, cfg.k, t)
        yield {
            "t": t,
            "s_opt": s,
            "lower": coeff_lower(cfg.q, t),
            "upper": coeff_upper(cfg.q, cfg.k, t),
            # coefficient if only insertions (or the Levenshtein split) were counted
            "upper_s0": coeff_upper(cfg.q, cfg.k, t, s=0),
            "upper_lev": coeff_upper(cfg.q, cfg.k, t, s=levenshtein_s(t)),
        }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, v in Config().__dict__.items():
        ap.add_argument("--" + f.replace("_", "-"), type=int, default=v)
    cfg = Config(**vars(ap.parse_args()))
    print(f"{'t':>3} {'s':>3} {'lower':>12} {'upper':>14} {'s=0':>14} {'lev':>14}")
    for r in rows(cfg):
        print(f"{r['t']:>3} {r['s_opt']:>3} {float(r['lower']):>12.4g} {float(r['upper']):>14.6g}"
              f" {float(r['upper_s0']):>14.6g} {float(r['upper_lev']):>14.6g}")


if __name__ == "__main__":
    main()
