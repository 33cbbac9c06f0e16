"""Median-of-repetitions timing of closed form against direct summation."""

import statistics
import time
from dataclasses import dataclass

from . import closed_form, oracle
from .closed_form import SumFamily, SumSpec
from .errors import ConsistencyError, ParameterError


class BenchMismatchError(ConsistencyError):
    """The two methods disagreed, so no timing is reported."""


@dataclass(frozen=True)
class BenchResult:
    family: SumFamily
    m: int
    n: int
    closed_form_time: float  # seconds, median
    oracle_time: float       # seconds, median
    value: int
    values_equal: bool = True

    @property
    def speedup(self):
        if self.closed_form_time <= 0:
            return float("inf")
        return self.oracle_time / self.closed_form_time

    def to_dict(self):
        return {
            "family": self.family.value,
            "m": self.m,
            "n": self.n,
            "value": str(self.value),
            "closed_ms": self.closed_form_time * 1000.0,
            "oracle_ms": self.oracle_time * 1000.0,
            "speedup": self.speedup,
            "values_equal": self.values_equal,
        }


def _median_time(fn, args, repetitions):
    times = []
    value = None
    for _ in range(repetitions):
        t0 = time.perf_counter()
        value = fn(*args)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), value


def bench(family, m, n, repetitions=3):
    family = SumFamily.parse(family)
    if n < 1:
        raise ParameterError("bench needs n >= 1")
    if repetitions < 1:
        raise ParameterError("bench needs at least one repetition")
    SumSpec(family, m, n)

    closed_t, closed_v = _median_time(closed_form.THEOREMS[family], (m, n), repetitions)
    oracle_t, oracle_v = _median_time(oracle.naive_power_sum, (family, m, n), repetitions)
    if closed_v != oracle_v:
        raise BenchMismatchError(
            f"{family.value} m={m} n={n}: closed form and direct sum disagree"
        )
    return BenchResult(family, m, n, closed_t, oracle_t, closed_v)
