"""
Grid equivalence runs: closed form against direct summation, plus identity
sweeps.  Failures are collected, never raised, so a sign slip shows up as
the whole pattern of cells it breaks.
"""

import itertools
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import closed_form, oracle
from .closed_form import EvalResult, Method, SumFamily, SumSpec
from .errors import DomainError, InexactDivisionError, ParameterError
from .identities import IdentityId, eval_identity
from .kernel import count_big_ops, fib_lucas, sign

_FAMILY_ORDER = {f: i for i, f in enumerate(SumFamily)}
_IDENTITY_ORDER = {t: i for i, t in enumerate(IdentityId)}


def evaluate(family, m, n, method=Method.CLOSED_FORM):
    """Evaluate one sum and report how many big multiplications it took."""
    spec = SumSpec(SumFamily.parse(family), m, n)
    method = Method(method)
    with count_big_ops() as ops:
        if method is Method.CLOSED_FORM:
            value = closed_form.THEOREMS[spec.family](spec.m, spec.n)
        else:
            value = oracle.naive_power_sum(spec.family, spec.m, spec.n)
    return EvalResult(spec, value, method, ops.count)


@dataclass(frozen=True)
class GridSpec:
    families: frozenset = frozenset(SumFamily)
    m_range: tuple = (-6, 6)
    n_range: tuple = (0, 12)
    include_identities: bool = False
    identity_arg_range: tuple = (-30, 30)

    def __post_init__(self):
        object.__setattr__(
            self, "families", frozenset(SumFamily.parse(f) for f in self.families)
        )
        for name in ("m_range", "n_range", "identity_arg_range"):
            rng = getattr(self, name)
            if len(rng) != 2 or rng[0] > rng[1]:
                raise ParameterError(f"{name} must be a nonempty (lo, hi) pair, got {rng!r}")
        if self.n_range[0] < 0:
            raise ParameterError("n_range must lie in n >= 0")
        if not self.families and not self.include_identities:
            raise ParameterError("grid selects nothing: no families and no identities")

    def sum_points(self):
        m_lo, m_hi = self.m_range
        n_lo, n_hi = self.n_range
        for family in sorted(self.families, key=_FAMILY_ORDER.get):
            for m in range(m_lo, m_hi + 1):
                if m == 0 and family.requires_nonzero_m:
                    continue
                for n in range(n_lo, n_hi + 1):
                    yield family, m, n

    def identity_points(self):
        if not self.include_identities:
            return
        lo, hi = self.identity_arg_range
        values = range(lo, hi + 1)
        for tag in IdentityId:
            for args in itertools.product(values, repeat=tag.arity):
                yield tag, args


@dataclass(frozen=True)
class Mismatch:
    subject: str
    args: tuple
    closed: int
    oracle: int


@dataclass(frozen=True)
class DivisibilityFailure:
    subject: str
    site: str
    args: tuple


@dataclass
class VerifyReport:
    cases_run: int = 0
    mismatches: list = field(default_factory=list)
    divisibility_failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def success(self):
        return not self.mismatches and not self.divisibility_failures

    def to_dict(self, include_elapsed=True):
        out = {
            "success": self.success,
            "cases_run": self.cases_run,
            "mismatches": [
                {
                    "subject": r.subject,
                    "args": list(r.args),
                    "closed": str(r.closed),
                    "oracle": str(r.oracle),
                }
                for r in self.mismatches
            ],
            "divisibility_failures": [
                {"subject": r.subject, "site": r.site, "args": list(r.args)}
                for r in self.divisibility_failures
            ],
        }
        if include_elapsed:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(**kwargs), indent=2)


def _subject_key(subject):
    try:
        return (0, _FAMILY_ORDER[SumFamily(subject)])
    except ValueError:
        return (1, _IDENTITY_ORDER[IdentityId(subject)])


def run_grid(spec, closed_forms=None):
    """Evaluate every grid point both ways and collect every discrepancy.

    ``closed_forms`` optionally replaces the family -> evaluator table; tests
    use it to plant a deliberate fault and confirm it is detected.
    """
    if not isinstance(spec, GridSpec):
        raise ParameterError(f"expected a GridSpec, got {type(spec).__name__}")
    table = dict(closed_form.THEOREMS)
    if closed_forms:
        table.update({SumFamily.parse(k): v for k, v in closed_forms.items()})

    report = VerifyReport()
    start = time.perf_counter()
    for family, m, n in spec.sum_points():
        report.cases_run += 1
        expected = oracle.naive_power_sum(family, m, n)
        try:
            got = table[family](m, n)
        except InexactDivisionError as exc:
            report.divisibility_failures.append(
                DivisibilityFailure(family.value, exc.site, (m, n))
            )
            continue
        if got != expected:
            report.mismatches.append(Mismatch(family.value, (m, n), got, expected))
    for tag, args in spec.identity_points():
        report.cases_run += 1
        inst = eval_identity(tag, args)
        if not inst.holds:
            report.mismatches.append(Mismatch(tag.value, args, inst.lhs, inst.rhs))
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0

    report.mismatches.sort(key=lambda r: (_subject_key(r.subject), r.args))
    report.divisibility_failures.sort(key=lambda r: (_subject_key(r.subject), r.args, r.site))
    return report


@dataclass(frozen=True)
class NegativeNProbe:
    family: SumFamily
    m: int
    n: int
    closed: Fraction
    convention: int

    @property
    def agrees(self):
        return self.closed == self.convention


def probe_negative_n(family, m, n):
    """Evaluate the fib4/lucas4 right-hand sides at n < 0 without the n >= 0 guard.

    Compared against -sum_{k=n+1}^{0}.  Experimental: agreement is reported,
    not assumed, and the divisions are done in rationals so nothing is
    asserted about exactness here.
    """
    family = SumFamily.parse(family)
    if family.alternating:
        raise DomainError("negative-n probing is only offered for fib4 and lucas4")
    if n >= 0:
        raise DomainError("probe_negative_n expects n < 0")
    if m == 0:
        raise DomainError(f"{family.value} requires m != 0")
    f_top, l_top = fib_lucas(2 * m * n + m)
    f2m, _ = fib_lucas(2 * m)
    _, lm = fib_lucas(m)
    if family is SumFamily.FIB_FOURTH:
        value = Fraction(f_top * (l_top + 4 * sign(m * n - 1) * lm), f2m) + 6 * n + 3
        value /= 25
    else:
        value = Fraction(f_top * (l_top + 4 * sign(m * n) * lm), f2m) + 6 * n - 5
    return NegativeNProbe(family, m, n, value, oracle.negative_n_convention(family, m, n))
