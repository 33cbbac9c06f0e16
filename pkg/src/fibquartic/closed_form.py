"""
Closed-form fourth-power sums of Fibonacci and Lucas numbers.

Every evaluator touches O(1) sequence values, so the cost is a handful of
fast-doubling runs on subscripts of size about m*n.  Denominators are
divided out with :func:`exact_div`; a nonzero remainder means a bug and
raises :class:`InexactDivisionError` instead of truncating.

All public evaluators return the plain sum (not a scaled multiple of it)
and require n >= 0.
"""

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, ParameterError
from .kernel import check_index, exact_div, pair, shift, sign, tally


class SumFamily(enum.Enum):
    FIB_FOURTH = "fib4"
    LUCAS_FOURTH = "lucas4"
    ALT_FIB_FOURTH = "altfib4"
    ALT_LUCAS_FOURTH = "altlucas4"

    @property
    def requires_nonzero_m(self):
        return self in (SumFamily.FIB_FOURTH, SumFamily.LUCAS_FOURTH)

    @property
    def alternating(self):
        return self in (SumFamily.ALT_FIB_FOURTH, SumFamily.ALT_LUCAS_FOURTH)

    def lower_limit(self, n):
        """First k of the sum; the alternating Lucas sum starts at 0 for odd n."""
        if self is SumFamily.ALT_LUCAS_FOURTH and n & 1:
            return 0
        return 1

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower()
        for member in cls:
            if key in (member.value, member.name.lower()):
                return member
        choices = ", ".join(m.value for m in cls)
        raise ParameterError(f"unknown sum family {name!r} (choose from {choices})")


class Method(enum.Enum):
    CLOSED_FORM = "closed"
    ORACLE = "oracle"


@dataclass(frozen=True)
class SumSpec:
    family: SumFamily
    m: int
    n: int

    def __post_init__(self):
        check_index(self.m, "m")
        check_index(self.n, "n")
        if self.n < 0:
            raise DomainError(f"n must be >= 0, got {self.n}")
        if self.family.requires_nonzero_m and self.m == 0:
            raise DomainError(f"{self.family.value} requires m != 0 (F(2m) vanishes at m = 0)")


@dataclass(frozen=True)
class EvalResult:
    spec: SumSpec
    value: int
    method: Method
    big_op_count: int


def _args(m, n, nonzero_m=False, family=None):
    m = check_index(m, "m")
    n = check_index(n, "n")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if nonzero_m and m == 0:
        what = family or "this sum"
        raise DomainError(f"{what} requires m != 0 (F(2m) vanishes at m = 0)")
    return m, n


def _sub(*factors):
    return check_index(math.prod(factors), "subscript")


def _double(fm, lm, m):
    # (F(2m), L(2m)) from (F(m), L(m))
    tally(2)
    return fm * lm, lm * lm - 2 * sign(m)


def lemma3_sum(m, n):
    """sum_{k=1}^{n} (-1)**(mk-1) * L(2mk)."""
    m, n = _args(m, n, nonzero_m=True, family="lemma3_sum")
    mn = _sub(m, n)
    check_index(mn + m, "subscript")
    fm, lm = pair(m)
    f_mn, l_mn = pair(mn)
    _, l_next = shift(f_mn, l_mn, fm, lm)
    tally(1)
    rhs = sign(mn - 1) * (f_mn * l_next)
    return int(exact_div(rhs, fm, "lemma3: F(m)"))


def lemma4_sum(m, n):
    """sum_{k=1}^{n} (-1)**(k(m-1)) * L(2mk)."""
    m, n = _args(m, n)
    top = check_index(2 * _sub(m, n) + m, "subscript")
    _, lm = pair(m)
    _, l_top = pair(top)
    rhs = sign(n * (m - 1)) * l_top - lm
    return int(exact_div(rhs, lm, "lemma4: L(m)"))


def thm1_fib_fourth_sum(m, n):
    """sum_{k=1}^{n} F(mk)**4.

    >>> thm1_fib_fourth_sum(1, 3)
    18
    """
    m, n = _args(m, n, nonzero_m=True, family="fib4")
    top = check_index(2 * _sub(m, n) + m, "subscript")
    fm, lm = pair(m)
    f2m, _ = _double(fm, lm, m)
    f_top, l_top = pair(top)
    tally(1)
    numer = f_top * (l_top + 4 * sign(m * n - 1) * lm)
    scaled = exact_div(numer, f2m, "fib4: F(2m)") + 6 * n + 3
    return int(exact_div(scaled, 25, "fib4: 25"))


def thm2_lucas_fourth_sum(m, n):
    """sum_{k=1}^{n} L(mk)**4."""
    m, n = _args(m, n, nonzero_m=True, family="lucas4")
    top = check_index(2 * _sub(m, n) + m, "subscript")
    fm, lm = pair(m)
    f2m, _ = _double(fm, lm, m)
    f_top, l_top = pair(top)
    tally(1)
    numer = f_top * (l_top + 4 * sign(m * n) * lm)
    return int(exact_div(numer, f2m, "lucas4: F(2m)") + 6 * n - 5)


def thm3_alt_fib_fourth_sum(m, n):
    """sum_{k=1}^{n} (-1)**(k-1) * F(mk)**4, for any m including 0."""
    m, n = _args(m, n)
    mn = _sub(m, n)
    check_index(mn + m, "subscript")
    fm, lm = pair(m)
    _, l2m = _double(fm, lm, m)
    f_mn, l_mn = pair(mn)
    f_next, l_next = shift(f_mn, l_mn, fm, lm)
    tally(5)
    inner = sign(n - 1) * (lm * (l_mn * l_next)) + sign(n * (m - 1)) * 4 * l2m
    numer = (f_mn * f_next) * inner
    return int(exact_div(numer, 5 * (lm * l2m), "altfib4: 5 L(m) L(2m)"))


def thm4_alt_lucas_fourth_sum(m, n):
    """sum_{k=k0}^{n} (-1)**(k-1) * L(mk)**4 with k0 = 1 for even n, 0 for odd n.

    The k = 0 term contributes -L(0)**4 = -16 when n is odd.

    >>> thm4_alt_lucas_fourth_sum(1, 1)
    -15
    """
    m, n = _args(m, n)
    mn = _sub(m, n)
    check_index(mn + m, "subscript")
    fm, lm = pair(m)
    _, l2m = _double(fm, lm, m)
    f_mn, l_mn = pair(mn)
    f_next, l_next = shift(f_mn, l_mn, fm, lm)
    tally(5)
    inner = lm * (l_mn * l_next) + sign(n * m) * 4 * l2m
    numer = sign(n - 1) * 5 * (f_mn * f_next) * inner
    return int(exact_div(numer, lm * l2m, "altlucas4: L(m) L(2m)"))


THEOREMS = {
    SumFamily.FIB_FOURTH: thm1_fib_fourth_sum,
    SumFamily.LUCAS_FOURTH: thm2_lucas_fourth_sum,
    SumFamily.ALT_FIB_FOURTH: thm3_alt_fib_fourth_sum,
    SumFamily.ALT_LUCAS_FOURTH: thm4_alt_lucas_fourth_sum,
}


def corollary_sum(family, n):
    """The m = 1 sums through their factored forms."""
    family = SumFamily.parse(family)
    _, n = _args(1, n)
    check_index(2 * n + 1, "subscript")
    if family is SumFamily.FIB_FOURTH:
        f_odd, _ = pair(2 * n + 1)
        _, l_lo = pair(n - 1)
        _, l_hi = pair(n + 2)
        tally(2)
        return int(exact_div(f_odd * l_lo * l_hi + 6 * n + 3, 25, "fib4 m=1: 25"))
    if family is SumFamily.LUCAS_FOURTH:
        f_odd, _ = pair(2 * n + 1)
        f_lo, _ = pair(n - 1)
        f_hi, _ = pair(n + 2)
        tally(2)
        return int(5 * f_odd * f_lo * f_hi + 6 * n - 5)
    fn, _ = pair(n)
    fn1, _ = pair(n + 1)
    if family is SumFamily.ALT_FIB_FOURTH:
        f_lo, _ = pair(n - 2)
        f_hi, _ = pair(n + 3)
        tally(3)
        product = fn * fn1 * f_lo * f_hi
        return int(sign(n - 1) * exact_div(product, 3, "altfib4 m=1: 3"))
    _, l_lo = pair(n - 2)
    _, l_hi = pair(n + 3)
    tally(3)
    product = fn * fn1 * (l_lo * l_hi + sign(n) * 2)
    return int(sign(n - 1) * 5 * exact_div(product, 3, "altlucas4 m=1: 3"))


def closed_form_sum(family, m, n):
    return THEOREMS[SumFamily.parse(family)](m, n)
