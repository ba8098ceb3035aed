"""Measured ratio of the guessing reduction against (3 + eps)/3."""
from __future__ import annotations

import csv
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from _config import parse_config
from priority_advice.lower_bounds import (
    GadgetVertexCoverAlgorithm,
    SGKHInstance,
    TABLE1,
    guesser_tape,
    ratio_bound,
    run_sgkh_reduction,
)
from priority_advice.lower_bounds.reduction import scripted_mistakes


@dataclass
class Config:
    """One hidden string of length n; a guesser wrong on ceil(eps n) positions."""

    n: int = 60
    eps: list[str] = field(default_factory=lambda: ["0", "1/20", "1/10", "1/4", "1/2"])
    seed: int = 0


def main(cfg: Config) -> None:
    x = SGKHInstance.random(cfg.n, cfg.seed)
    vc = TABLE1["Minimum Vertex Cover"]
    out = csv.writer(sys.stdout)
    out.writerow(["eps", "mistakes", "alg", "opt", "ratio", "predicted", "ratio_bound", "bits_read"])
    for text in cfg.eps:
        eps = Fraction(text)
        w = math.ceil(eps * cfg.n)
        tr = run_sgkh_reduction(GadgetVertexCoverAlgorithm(), x,
                                guesser_tape(x, scripted_mistakes(cfg.n, w, cfg.seed)))
        out.writerow([text, tr.mistakes, tr.alg_value, tr.opt_value, f"{tr.ratio:.6f}",
                      f"{float((3 + Fraction(w, cfg.n)) / 3):.6f}", f"{float(ratio_bound(vc, eps)):.6f}",
                      tr.bits_read])


if __name__ == "__main__":
    main(parse_config(Config))
