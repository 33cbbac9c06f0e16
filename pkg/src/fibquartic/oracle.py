"""
Ground truth by direct summation, and the two telescoping checks.

Nothing here calls the fast-doubling kernel on the summation path.  The seed
values F(m), L(m), F(-m), L(-m) come from stepping the recurrence, and the
terms F(mk), L(mk) are advanced with the addition rules

    F(mk + m) = F(m) L(mk) + (-1)**m F(mk - m)
    L(mk + m) = L(m) L(mk) - (-1)**m L(mk - m)

so a sum of n terms costs O(n) big operations and no per-term doubling.
"""

import enum
from dataclasses import dataclass

from .closed_form import SumFamily
from .errors import ConsistencyError, DomainError
from .kernel import check_index, fib, lucas, mpz, sign, tally


def recurrence_values(lo, hi):
    """{n: (F(n), L(n))} for lo <= n <= hi, by stepping the recurrence only.

    Negative indices come from running the recurrence backwards,
    F(n-1) = F(n+1) - F(n), not from the sign rules.
    """
    if lo > hi:
        return {}
    values = {0: (0, 2), 1: (1, 1)}
    f0, f1, l0, l1 = 0, 1, 2, 1
    for n in range(2, hi + 1):
        f0, f1 = f1, f0 + f1
        l0, l1 = l1, l0 + l1
        values[n] = (f1, l1)
    f0, f1, l0, l1 = 0, 1, 2, 1
    for n in range(-1, lo - 1, -1):
        f0, f1 = f1 - f0, f0
        l0, l1 = l1 - l0, l0
        values[n] = (f0, l0)
    return {n: values[n] for n in range(lo, hi + 1)}


def _seed(m):
    table = recurrence_values(-abs(m), abs(m))
    return table[m], table[-m]


def _check_n(n):
    n = check_index(n, "n")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return n


def scaled_terms(m, start, stop):
    """Yield (k, F(mk), L(mk)) for start <= k <= stop, with start in {0, 1}."""
    (fm, lm), (f_prev, l_prev) = _seed(m)
    s = sign(m)
    fm, lm = mpz(fm), mpz(lm)
    f_cur, l_cur = mpz(0), mpz(2)
    f_prev, l_prev = mpz(f_prev), mpz(l_prev)
    for k in range(stop + 1):
        if k >= start:
            yield k, f_cur, l_cur
        tally(2)
        f_cur, f_prev = fm * l_cur + s * f_prev, f_cur
        l_cur, l_prev = lm * l_cur - s * l_prev, l_cur


def naive_power_sum(family, m, n):
    """Term-by-term evaluation of the fourth-power sums.

    >>> naive_power_sum(SumFamily.FIB_FOURTH, 1, 3)
    18
    >>> naive_power_sum(SumFamily.ALT_LUCAS_FOURTH, 1, 1)
    -15
    """
    family = SumFamily.parse(family)
    m = check_index(m, "m")
    n = _check_n(n)
    use_lucas = family in (SumFamily.LUCAS_FOURTH, SumFamily.ALT_LUCAS_FOURTH)
    total = mpz(0)
    for k, f, lu in scaled_terms(m, family.lower_limit(n), n):
        base = lu if use_lucas else f
        sq = base * base
        tally(2)
        term = sq * sq
        if family.alternating and not k & 1:
            total -= term
        else:
            total += term
    return int(total)


def naive_term(family, m, k):
    """The signed k-th summand, as it enters the sum."""
    family = SumFamily.parse(family)
    use_lucas = family in (SumFamily.LUCAS_FOURTH, SumFamily.ALT_LUCAS_FOURTH)
    base = recurrence_values(m * k, m * k)[m * k][1 if use_lucas else 0]
    term = base**4
    return sign(k - 1) * term if family.alternating else term


def negative_n_convention(family, m, n):
    """-sum_{k=n+1}^{0} of the k-th term, the usual meaning of sum_{k=1}^{n} for n < 0.

    Only for the two non-alternating families.
    """
    family = SumFamily.parse(family)
    if family.alternating:
        raise DomainError("the negative-n convention is only defined here for fib4 and lucas4")
    if n >= 0:
        raise DomainError("negative_n_convention expects n < 0")
    return -sum(naive_term(family, m, k) for k in range(n + 1, 1))


class SequenceKind(enum.Enum):
    FIB = "fib"
    LUCAS = "lucas"


@dataclass(frozen=True)
class SequenceSpec:
    """f(k) = F(stride*k + offset) or L(stride*k + offset)."""

    kind: SequenceKind
    stride: int
    offset: int

    def __post_init__(self):
        if self.stride == 0:
            raise DomainError("stride must be non-zero")

    def __call__(self, k):
        idx = check_index(self.stride * k + self.offset)
        return fib(idx) if self.kind is SequenceKind.FIB else lucas(idx)


def telescoping_sum(seq, m, n, alternating=False):
    """Sum the telescoping series directly and check it against its two end terms.

    Non-alternating:  sum_{k=1}^{n} [f(mk+m) - f(mk)]              = f(mn+m) - f(m)
    Alternating:      sum_{k=1}^{n} (-1)**(k-1) [f(mk+m) + f(mk)]  = (-1)**(n-1) f(mn+m) + f(m)

    Returns the directly summed value.
    """
    if m < 1 or n < 1:
        raise DomainError(f"telescoping sums need m >= 1 and n >= 1, got m={m}, n={n}")
    direct = 0
    for k in range(1, n + 1):
        if alternating:
            direct += sign(k - 1) * (seq(m * k + m) + seq(m * k))
        else:
            direct += seq(m * k + m) - seq(m * k)
    if alternating:
        boundary = sign(n - 1) * seq(m * n + m) + seq(m)
    else:
        boundary = seq(m * n + m) - seq(m)
    if direct != boundary:
        raise ConsistencyError(
            f"telescoping mismatch for {seq} m={m} n={n} alternating={alternating}: "
            f"{direct} != {boundary}"
        )
    return direct
