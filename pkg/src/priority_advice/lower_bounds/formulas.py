"""Binary entropy, advice thresholds and gadget-based ratio lower bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class SpecError(ValueError):
    pass


def _as_fraction(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def binary_entropy(p) -> float:
    """H(p) in bits, with H(0) = H(1) = 0."""
    p = _as_fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"entropy argument {p} outside [0, 1]")
    if p == 0 or p == 1:
        return 0.0
    if p == Fraction(1, 2):
        return 1.0
    q = float(p)
    return -q * math.log2(q) - (1 - q) * math.log2(1 - q)


def _check_eps(eps) -> Fraction:
    eps = _as_fraction(eps)
    if not 0 < eps <= Fraction(1, 2):
        raise ValueError(f"eps must lie in (0, 1/2], got {eps}")
    return eps


def advice_threshold(eps, n, s: int) -> float:
    """Fewer advice bits than ``(1 - H(eps)) n / s`` cannot beat the ratio bound."""
    eps = _check_eps(eps)
    if s < 1:
        raise ValueError("gadget size s must be >= 1")
    return (1.0 - binary_entropy(eps)) * n / s


@dataclass(frozen=True)
class GadgetParams:
    opt_a: int
    opt_r: int
    bad_a: int
    bad_r: int
    s: int
    kind: str  # "min" | "max"

    def __post_init__(self):
        if self.kind not in ("min", "max"):
            raise SpecError(f"kind must be 'min' or 'max', got {self.kind!r}")
        if min(self.opt_a, self.opt_r, self.bad_a, self.bad_r) <= 0:
            raise SpecError("objective values must be positive")

    @property
    def r(self) -> Fraction:
        if self.kind == "min":
            return min(Fraction(self.bad_a, self.opt_a), Fraction(self.bad_r, self.opt_r))
        return min(Fraction(self.opt_a, self.bad_a), Fraction(self.opt_r, self.bad_r))


def ratio_bound(params: GadgetParams, eps) -> Fraction:
    """Exact lower bound on the approximation ratio at mistake rate ``eps``."""
    eps = _as_fraction(eps)
    if not 0 <= eps <= 1:
        raise ValueError(f"eps must lie in [0, 1], got {eps}")
    r = params.r
    if r < 1:
        raise SpecError(f"gadget pair has r = {r} < 1")
    oa, orr = params.opt_a, params.opt_r
    if params.kind == "min":
        return 1 + eps * (r - 1) * oa / (eps * oa + (1 - eps) * orr)
    return 1 + eps * (r - 1) * oa / (eps * oa + (1 - eps) * r * orr)


def ratio_at_mistakes(params: GadgetParams, eps, u) -> Fraction:
    """Ratio lower bound when a share ``eps`` of the n gadgets is answered
    wrongly and a share ``u`` (0 <= u <= eps) of those wrong answers fall on
    accept variants; correct answers are assumed to land on reject variants.

    ``u = eps`` recovers :func:`ratio_bound`.
    """
    eps, u = _as_fraction(eps), _as_fraction(u)
    if not 0 <= u <= eps:
        raise ValueError("need 0 <= u <= eps")
    r = params.r
    oa, orr = params.opt_a, params.opt_r
    if params.kind == "min":
        return 1 + (u * (r - 1) * oa + (eps - u) * (r - 1) * orr) / (u * oa + (1 - u) * orr)
    num = (1 - eps) * orr + u * oa + (eps - u) * orr
    den = (1 - eps) * orr + u * oa / r + (eps - u) * orr / r
    return num / den


TABLE1 = {
    "Maximum Independent Set": GadgetParams(3, 3, 2, 2, 8, "max"),
    "Maximum Bipartite Matching": GadgetParams(3, 3, 2, 2, 3, "max"),
    "Maximum Cut": GadgetParams(15, 15, 14, 14, 8, "max"),
    "Minimum Vertex Cover": GadgetParams(3, 3, 4, 4, 7, "min"),
    "Maximum 3-Satisfiability": GadgetParams(8, 8, 7, 7, 3, "max"),
    "Unit Job Scheduling with Precedence Constraints": GadgetParams(6, 6, 5, 5, 9, "max"),
}


def slug(problem: str) -> str:
    return "-".join(problem.lower().split())


def fmt_real(x) -> str:
    return format(float(x), ".17g")


def bound_report_line(problem: str, params: GadgetParams, eps, n=1) -> str:
    thr = advice_threshold(eps, n, params.s)
    ratio = ratio_bound(params, eps)
    return (f"{slug(problem)} s={params.s} eps={fmt_real(_as_fraction(eps))} "
            f"advice_threshold={fmt_real(thr)} ratio={fmt_real(ratio)}")


def table1_report(eps, n=1) -> list[str]:
    return [bound_report_line(name, p, eps, n) for name, p in TABLE1.items()]
