"""Lagrangian dual of the interdiction budget.

For a multiplier ``lam`` the inner problem ``L(lam)`` is the original
minimization under truncated weights ``min(w, lam * c)``; the dual function
is ``phi(lam) = L(lam) - lam * b``, concave and piecewise linear.  Each
supporting line of ``phi`` has the form ``w(S - R) + lam * (c(R) - b)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .instance import EdgeSet, edge_set, truncate_weights


class DegenerateInstance(ValueError):
    """Some feasible set can be neutralised within budget; the dual maximum is 0."""


class LagrangianError(RuntimeError):
    pass


@dataclass(frozen=True)
class ActiveLine:
    intercept: Fraction  # w(S - R)
    slope: int  # c(R) - b
    S: EdgeSet
    R: EdgeSet

    def at(self, lam) -> Fraction:
        return self.intercept + self.slope * Fraction(lam)


@dataclass(frozen=True)
class LambdaCertificate:
    lambda_star: Fraction
    L_star: Fraction
    Lambda: Fraction
    line_lo: ActiveLine  # slope >= 0
    line_hi: ActiveLine  # slope <= 0
    iterations: int = 0

    def check(self, budget: int) -> None:
        """Raise ``AssertionError`` unless the two lines certify optimality."""
        point = self.L_star - self.lambda_star * budget
        assert self.Lambda == point, "Lambda != L* - lambda* b"
        assert self.line_lo.at(self.lambda_star) == point, "lo line misses the optimum"
        assert self.line_hi.at(self.lambda_star) == point, "hi line misses the optimum"
        assert self.line_lo.slope >= 0 >= self.line_hi.slope, "slopes do not bracket zero"
        assert set(self.line_lo.R) <= set(self.line_lo.S)
        assert set(self.line_hi.R) <= set(self.line_hi.S)


class Evaluation(NamedTuple):
    L: Fraction
    S: EdgeSet
    R_min: EdgeSet
    R_max: EdgeSet


def deletion_range(inst, S, lam) -> tuple[EdgeSet, EdgeSet]:
    """Elements of ``S`` worth deleting at ``lam``: strictly, and with ties."""
    lam = Fraction(lam)
    w, c = inst.weights, inst.costs
    r_min = edge_set(e for e in S if lam * c[e] < w[e])
    r_max = edge_set(e for e in S if lam * c[e] <= w[e])
    return r_min, r_max


def make_line(inst, S, R) -> ActiveLine:
    w, c = inst.weights, inst.costs
    kept = set(S) - set(R)
    return ActiveLine(
        Fraction(sum(w[e] for e in kept)),
        sum(c[e] for e in R) - inst.budget,
        edge_set(S),
        edge_set(R),
    )


def eval_L(inst, lam, family) -> Evaluation:
    lam = Fraction(lam)
    value, S = family.minimize(truncate_weights(inst, lam))
    r_min, r_max = deletion_range(inst, S, lam)
    return Evaluation(Fraction(value), edge_set(S), r_min, r_max)


def phi(inst, lam, family) -> Fraction:
    lam = Fraction(lam)
    return eval_L(inst, lam, family).L - lam * inst.budget


def _intersect(lo: ActiveLine, hi: ActiveLine) -> Fraction:
    return (hi.intercept - lo.intercept) / (lo.slope - hi.slope)


def find_lambda_star(inst, family) -> LambdaCertificate:
    """Smallest maximizer of ``phi`` by discrete Newton on its supporting lines.

    Invariant: the lo line has strictly positive slope and the hi line
    non-positive slope; both touch ``phi`` somewhere, so both bound it from
    above and their intersection brackets the maximizers.  Lo slopes strictly
    decrease and hi slopes strictly increase, both integers, which bounds the
    iteration count by ``c(E) + 2``.
    """
    w, c, b = inst.weights, inst.costs, inst.budget
    start = eval_L(inst, 0, family)
    lo = make_line(inst, start.S, start.R_max)
    if lo.slope <= 0:
        raise DegenerateInstance(f"set {start.S} has cost {lo.slope + b} <= budget {b}")
    lam_hi = max((Fraction(wi, ci) for wi, ci in zip(w, c)), default=Fraction(0))
    top = eval_L(inst, lam_hi, family)
    hi = make_line(inst, top.S, top.R_min)

    guard = sum(c) + 3
    for iteration in range(1, guard + 1):
        lam = _intersect(lo, hi)
        bound = lo.at(lam)
        ev = eval_L(inst, lam, family)
        value = ev.L - lam * b
        if value == bound:
            break
        line_min = make_line(inst, ev.S, ev.R_min)
        line_max = make_line(inst, ev.S, ev.R_max)
        if line_min.slope > 0:
            lo = line_min
        elif line_max.slope > 0:
            # zero supergradient with a positive one: lam is the leftmost maximizer
            lo, hi = line_max, line_min
            break
        else:
            hi = line_max
    else:
        raise LagrangianError(f"discrete Newton did not terminate within {guard} iterations")

    # re-derive the extreme witnesses at the optimum
    r_lo = deletion_range(inst, lo.S, lam)[1]
    r_hi = deletion_range(inst, hi.S, lam)[0]
    cert = LambdaCertificate(
        lambda_star=lam,
        L_star=ev.L,
        Lambda=value,
        line_lo=make_line(inst, lo.S, r_lo),
        line_hi=make_line(inst, hi.S, r_hi),
        iterations=iteration,
    )
    cert.check(b)
    return cert
