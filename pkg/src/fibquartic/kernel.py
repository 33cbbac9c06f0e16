"""
Fibonacci and Lucas numbers for any signed index, by fast doubling.

The doubling step carries the pair (F(k), F(k+1)):

    F(2k)   = F(k) * (2*F(k+1) - F(k))
    F(2k+1) = F(k)**2 + F(k+1)**2

which costs three big multiplications per bit of the index.  Lucas numbers
are recovered at the end as L(k) = 2*F(k+1) - F(k).  Negative indices are
folded onto positive ones with

    F(-k) = (-1)**(k-1) * F(k),   L(-k) = (-1)**k * L(k).

Public functions return plain ``int``.  Internally values are ``gmpy2.mpz``
when available, since CPython's own multiplication is quadratic-ish at the
multi-megabit sizes the closed forms reach.
"""

import operator
import threading
from contextlib import contextmanager
from dataclasses import dataclass

from .errors import DomainError, IndexOverflowError, InexactDivisionError

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int

INDEX_BOUND = 2**62

_local = threading.local()


class OpCounter:
    """Running tally of big-integer multiplications in the current thread."""

    def __init__(self):
        self.count = 0

    def __repr__(self):
        return f"OpCounter(count={self.count})"


@contextmanager
def count_big_ops():
    """Count big multiplications performed inside the block.

    >>> with count_big_ops() as ops:
    ...     _ = fib(1000)
    >>> ops.count
    30
    """
    counter = OpCounter()
    previous = getattr(_local, "counter", None)
    _local.counter = counter
    try:
        yield counter
    finally:
        _local.counter = previous


def tally(k=1):
    counter = getattr(_local, "counter", None)
    if counter is not None:
        counter.count += k


@contextmanager
def trace_divisions():
    """Record every ``exact_div`` call made inside the block.

    Yields a list that fills with ``(site, remainder)`` tuples.
    """
    log = []
    previous = getattr(_local, "divisions", None)
    _local.divisions = log
    try:
        yield log
    finally:
        _local.divisions = previous


def exact_div(dividend, divisor, site):
    """Divide, insisting the remainder is zero."""
    q, r = divmod(dividend, divisor)
    log = getattr(_local, "divisions", None)
    if log is not None:
        log.append((site, int(r)))
    if r:
        raise InexactDivisionError(site, int(dividend), int(divisor))
    return q


def sign(exponent):
    """(-1)**exponent from the parity of exponent alone."""
    return -1 if exponent & 1 else 1


def check_index(value, name="index"):
    value = operator.index(value)
    if not -INDEX_BOUND <= value <= INDEX_BOUND:
        raise IndexOverflowError(f"{name}={value} exceeds the index bound 2**62")
    return value


@dataclass(frozen=True)
class FibPair:
    """The pair (F(n), F(n+1)) threaded through the doubling loop."""

    n: int
    f_n: int
    f_n1: int

    def cassini(self):
        # f_n1**2 - f_n1*f_n - f_n**2 == (-1)**n
        return self.f_n1 * self.f_n1 - self.f_n1 * self.f_n - self.f_n * self.f_n


def _doubling(k):
    # k >= 0; returns (F(k), F(k+1)) as mpz
    a, b = mpz(0), mpz(1)
    for bit in bin(k)[2:]:
        c = a * ((b << 1) - a)
        d = a * a + b * b
        tally(3)
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def pair(n):
    """(F(n), L(n)) as mpz.  Internal fast path for the evaluators."""
    n = check_index(n)
    k = -n if n < 0 else n
    f, f1 = _doubling(k)
    lu = (f1 << 1) - f
    if n < 0:
        if k & 1:
            lu = -lu
        else:
            f = -f
    return f, lu


def shift(fa, la, fb, lb):
    """(F(a+b), L(a+b)) from (F(a), L(a)) and (F(b), L(b))."""
    tally(4)
    f = exact_div(fa * lb + la * fb, 2, "index addition")
    lu = exact_div(la * lb + 5 * (fa * fb), 2, "index addition")
    return f, lu


def fib_pair(n):
    """The doubling carrier (F(n), F(n+1)) for n >= 0."""
    n = check_index(n)
    if n < 0:
        raise DomainError("fib_pair is defined for n >= 0 only")
    f, f1 = _doubling(n)
    return FibPair(n, int(f), int(f1))


def fib(n):
    """F(n) for any signed n.

    >>> [fib(i) for i in range(-4, 8)]
    [-3, 2, -1, 1, 0, 1, 1, 2, 3, 5, 8, 13]
    """
    return int(pair(n)[0])


def lucas(n):
    """L(n) for any signed n.

    >>> [lucas(i) for i in range(-3, 7)]
    [-4, 3, -1, 2, 1, 3, 4, 7, 11, 18]
    """
    return int(pair(n)[1])


def fib_lucas(n):
    f, lu = pair(n)
    return int(f), int(lu)
