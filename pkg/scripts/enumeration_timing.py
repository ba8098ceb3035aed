"""Leaves and wall time of the advice-enumeration solver against 2^(15n/46)."""
from __future__ import annotations

import csv
import random
import sys
import time
from dataclasses import dataclass, field

from _config import parse_config
from priority_advice.enumeration import exact_mvc_by_enumeration
from priority_advice.graphs import gen_random_max3
from priority_advice.oracle import min_cover_size
from priority_advice.vc_solver import advice_budget


@dataclass
class Config:
    """Random max-degree-3 graphs per size; pruning can be switched off."""

    sizes: list[int] = field(default_factory=lambda: [12, 16, 20, 24, 28, 32])
    per_size: int = 20
    density: float = 0.95
    seed: int = 0
    prune: int = 1


def main(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    out = csv.writer(sys.stdout)
    out.writerow(["n", "leaf_bound", "max_leaves", "mean_leaves", "mean_seconds", "all_optimal"])
    for n in cfg.sizes:
        leaves, secs, optimal = [], [], True
        for _ in range(cfg.per_size):
            g = gen_random_max3(n, cfg.density, rng.randrange(2**31))
            t = time.perf_counter()
            rep = exact_mvc_by_enumeration(g, prune=bool(cfg.prune))
            secs.append(time.perf_counter() - t)
            leaves.append(rep.leaves_explored)
            optimal &= rep.best_size == min_cover_size(g)
        out.writerow([n, 2 ** advice_budget(n), max(leaves), f"{sum(leaves) / len(leaves):.1f}",
                      f"{sum(secs) / len(secs):.4f}", optimal])


if __name__ == "__main__":
    main(parse_config(Config))
