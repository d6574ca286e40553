"""Seeded encode/channel/decode trials over a grid of small codes."""

import argparse
import json
from dataclasses import asdict, dataclass, field

from dupcode.codes import make_spec
from dupcode.verify import roundtrip_trials


@dataclass
class Config:
    q: int = 2
    k: int = 1
    t: int = 2
    lengths: list = field(default_factory=lambda: [8, 10, 12])
    trials: int = 500
    seed: int = 0
    domain: str = "zero"


def run(cfg: Config):
    out = []
    for n in cfg.lengths:
        w = n // 2
        spec = make_spec(cfg.q, n, w, cfg.t, cfg.k)
        rep = roundtrip_trials(spec, cfg.trials, seed=cfg.seed + n, domain=cfg.domain)
        out.append({"n": n, "w": w, "group_order": spec.group.order} | rep.to_json())
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--t", type=int, default=2)
    ap.add_argument("--lengths", type=lambda s: [int(v) for v in s.split(",")], default=[8, 10, 12])
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--domain", choices=["zero", "duplication"], default="zero")
    cfg = Config(**vars(ap.parse_args()))
    print(json.dumps({"config": asdict(cfg), "results": run(cfg)}, indent=2))


if __name__ == "__main__":
    main()
