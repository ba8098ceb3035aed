"""Advice bits used by the oracle-driven solver against the 15n/46 budget."""
from __future__ import annotations

import csv
import sys
from dataclasses import dataclass, field

from _config import parse_config
from priority_advice.framework import parse_tiebreak
from priority_advice.graphs import gen_near_cubic
from priority_advice.vc_solver import advice_budget, solve_with_oracle


@dataclass
class Config:
    """Near-cubic graphs of each size, several seeds and tie-break policies."""

    sizes: list[int] = field(default_factory=lambda: [10, 20, 30, 46, 60, 80])
    seeds: int = 10
    tiebreaks: list[str] = field(default_factory=lambda: ["min-id", "max-id", "random:1", "random:2"])


def main(cfg: Config) -> None:
    out = csv.writer(sys.stdout)
    out.writerow(["n", "budget", "max_bits", "mean_bits", "max_bits_per_n", "runs"])
    for n in cfg.sizes:
        bits = [len(solve_with_oracle(gen_near_cubic(n, seed), parse_tiebreak(tb)).advice)
                for seed in range(cfg.seeds) for tb in cfg.tiebreaks]
        out.writerow([n, advice_budget(n), max(bits), f"{sum(bits) / len(bits):.2f}",
                      f"{max(bits) / n:.4f}", len(bits)])


if __name__ == "__main__":
    main(parse_config(Config))
