"""Exact-arithmetic inequalities on +-1 data sets.

For any three aligned +-1 sequences a, b, b' of length N,

    |sum(a*b) - sum(a*b')|  <=  N - sum(b*b')

holds as an algebraic identity: per trial, a*b - a*b' = a*b*(1 - b*b') and
|1 - b_i*b'_i| is 0 or 2 with the sign fixed by b_i*b'_i. The same is true
for the four-set form, whose per-trial bracket a(b + b') + a'(b - b') can
only be -2 or +2. Everything here is computed in integer arithmetic scaled
by N before any division, so margins are exact and equality cases (e.g.
b = b') are decided with zero tolerance. Python integers are arbitrary
precision, so the sums cannot overflow at any N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .core import (
    DataSetTriple,
    EmptyDataError,
    InequalityKind,
    InequalityReport,
    LengthMismatchError,
    Mode,
    TrialQuad,
    TrialTriple,
    outcome_array,
)


@dataclass(frozen=True)
class ExactCorrelation:
    """A correlation estimate held as an exact integer ratio sum(x*y)/N."""

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator < 1:
            raise ValueError("denominator must be a positive trial count")
        if abs(self.numerator) > self.denominator:
            raise ValueError(
                f"|{self.numerator}| exceeds trial count {self.denominator}"
            )

    @property
    def value(self) -> float:
        return self.numerator / self.denominator

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


def cross_correlation(xs, ys) -> ExactCorrelation:
    """Exact cross-correlation sum(x_i * y_i) / N of two aligned +-1 sequences."""
    x = outcome_array(xs)
    y = outcome_array(ys)
    if x.shape[0] != y.shape[0]:
        raise LengthMismatchError(
            f"sequences differ in length: {x.shape[0]} vs {y.shape[0]}"
        )
    if x.shape[0] == 0:
        raise EmptyDataError("cannot correlate empty sequences")
    numerator = int(np.multiply(x, y, dtype=np.int64).sum())
    return ExactCorrelation(numerator, x.shape[0])


def per_trial_identity(t: TrialTriple) -> bool:
    """Executable witness that a*b - a*b' = a*(b - b') for a single trial."""
    return t.a * t.b - t.a * t.bp == t.a * (t.b - t.bp)


def quad_bracket(q: TrialQuad) -> int:
    """Per-trial four-set combination a*b + a*b' + a'*b - a'*b'; always +-2."""
    return q.a * q.b + q.a * q.bp + q.ap * q.b - q.ap * q.bp


def _exact_report(
    kind: InequalityKind, lhs_scaled: int, rhs_scaled: int, n: int
) -> InequalityReport:
    # Satisfaction is decided on the scaled integers; the float fields are
    # single-rounded quotients of the exact rationals, which preserves sign.
    margin_scaled = rhs_scaled - lhs_scaled
    return InequalityReport(
        kind=kind,
        mode=Mode.EXACT_DATA,
        lhs=lhs_scaled / n,
        rhs=rhs_scaled / n,
        margin=margin_scaled / n,
        satisfied=margin_scaled >= 0,
        tolerance=0.0,
    )


def _triple_sums(d: DataSetTriple) -> tuple[int, int, int]:
    sab = int(np.multiply(d.a, d.b, dtype=np.int64).sum())
    sabp = int(np.multiply(d.a, d.bp, dtype=np.int64).sum())
    sbbp = int(np.multiply(d.b, d.bp, dtype=np.int64).sum())
    return sab, sabp, sbbp


def data_bell_margin_3(d: DataSetTriple) -> InequalityReport:
    """Exact three-set inequality |C(a,b) - C(a,b')| <= 1 - C(b,b').

    The margin is >= 0 for every data set of any length and content.
    """
    sab, sabp, sbbp = _triple_sums(d)
    lhs_scaled = abs(sab - sabp)
    rhs_scaled = d.n - sbbp
    return _exact_report(InequalityKind.DATA_BELL_3, lhs_scaled, rhs_scaled, d.n)


def data_bell_margin_3_flipped(d: DataSetTriple) -> InequalityReport:
    """Same inequality with the side-flipped variable a' = -b' on the right.

    The rhs becomes 1 + C(b,a'), numerically identical to
    :func:`data_bell_margin_3` since sum(b*a') = -sum(b*b'). Exposed as an
    executable witness of that sign-flip step.
    """
    sab, sabp, _ = _triple_sums(d)
    ap = np.negative(d.bp)
    sbap = int(np.multiply(d.b, ap, dtype=np.int64).sum())
    lhs_scaled = abs(sab - sabp)
    rhs_scaled = d.n + sbap
    return _exact_report(InequalityKind.DATA_BELL_3, lhs_scaled, rhs_scaled, d.n)


def data_bell_margin_4(
    quads: Sequence[TrialQuad] | Iterable[TrialQuad | tuple],
) -> InequalityReport:
    """Exact four-set inequality |mean of the per-trial brackets| <= 2."""
    total = 0
    n = 0
    for q in quads:
        if not isinstance(q, TrialQuad):
            q = TrialQuad(*q)
        total += quad_bracket(q)
        n += 1
    if n == 0:
        raise EmptyDataError("a four-set evaluation needs at least one trial")
    lhs_scaled = abs(total)
    rhs_scaled = 2 * n
    return _exact_report(InequalityKind.DATA_BELL_4, lhs_scaled, rhs_scaled, n)
