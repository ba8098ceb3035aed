"""Thorny-path adversary: labels used as the algorithm family grows."""
from __future__ import annotations

import csv
import sys
from dataclasses import dataclass, field

from _config import parse_config
from priority_advice.framework import parse_tiebreak
from priority_advice.lower_bounds.thorny import advice_lower_bound, baseline_library, thorny_fool


@dataclass
class Config:
    """Prefixes of the baseline library, fooled under each tie-break."""

    tiebreaks: list[str] = field(default_factory=lambda: ["min-id", "max-id", "random:0"])


def main(cfg: Config) -> None:
    algs = baseline_library()
    out = csv.writer(sys.stdout)
    out.writerow(["tiebreak", "algorithms", "fooled", "labels_used", "label_budget", "triples", "N", "bits_not_enough"])
    for tb in cfg.tiebreaks:
        for ell in range(1, len(algs) + 1):
            res = thorny_fool(algs[:ell], tiebreak=parse_tiebreak(tb))
            N = 4 * ell
            out.writerow([tb, ell, res.fooled, res.labels_used, 4 * ell, len(res.instance.triples), N,
                          f"{advice_lower_bound(N):.3f}"])


if __name__ == "__main__":
    main(parse_config(Config))
