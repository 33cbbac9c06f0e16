"""Exit criteria.  Every check is exact integer equality; timings are wall clock."""

import io
import itertools
import time

from fibquartic.bench import bench
from fibquartic.cli import cli_main
from fibquartic.closed_form import THEOREMS, SumFamily, corollary_sum
from fibquartic.identities import IdentityId, eval_identity
from fibquartic.kernel import count_big_ops, fib, lucas, trace_divisions
from fibquartic.oracle import SequenceKind, SequenceSpec, naive_power_sum, telescoping_sum
from fibquartic.verify import GridSpec, run_grid


def _direct_table(limit):
    f, lu = [0, 1], [2, 1]
    while len(f) <= limit:
        f.append(f[-1] + f[-2])
        lu.append(lu[-1] + lu[-2])
    table = {}
    for n in range(limit + 1):
        table[n] = (f[n], lu[n])
        table[-n] = ((-1) ** (n - 1) * f[n], (-1) ** n * lu[n])
    return table


def test_c1_kernel_correctness(criterion):
    criterion("1 kernel matches recurrence on [-500, 500] in < 1 s")
    table = _direct_table(500)
    t0 = time.perf_counter()
    for n in range(-500, 501):
        assert (fib(n), lucas(n)) == table[n], n
    assert time.perf_counter() - t0 < 1.0


def test_c2_identity_sweep(criterion):
    criterion("2 all nine identities hold on [-30, 30] in < 10 s")
    t0 = time.perf_counter()
    failures = []
    for tag in IdentityId:
        for args in itertools.product(range(-30, 31), repeat=tag.arity):
            if not eval_identity(tag, args).holds:
                failures.append((tag, args))
    assert len(IdentityId) == 9
    assert failures == []
    assert time.perf_counter() - t0 < 10.0


def test_c3_theorem_oracle_equivalence(criterion):
    criterion("3 closed forms equal direct sums, m in [-6, 6], n in [0, 12], < 30 s")
    report = run_grid(GridSpec(m_range=(-6, 6), n_range=(0, 12)))
    assert report.mismatches == []
    assert report.divisibility_failures == []
    assert report.cases_run == (12 + 12 + 13 + 13) * 13
    assert report.elapsed_ms < 30_000


def test_c4_corollary_coherence(criterion):
    criterion("4 corollaries equal theorems at m = 1 for n in [0, 200]; anchors reproduce")
    for family in SumFamily:
        for n in range(0, 201):
            assert corollary_sum(family, n) == THEOREMS[family](1, n), (family, n)
    assert naive_power_sum(SumFamily.FIB_FOURTH, 1, 3) == 18
    assert 25 * 18 == fib(7) * lucas(2) * lucas(5) + 21 == 450
    assert corollary_sum(SumFamily.FIB_FOURTH, 3) == 18
    assert naive_power_sum(SumFamily.LUCAS_FOURTH, 1, 2) == 82
    assert corollary_sum(SumFamily.LUCAS_FOURTH, 2) == 82
    assert naive_power_sum(SumFamily.ALT_FIB_FOURTH, 1, 3) == 16
    assert 3 * 16 == fib(3) * fib(4) * fib(1) * fib(6)
    assert corollary_sum(SumFamily.ALT_FIB_FOURTH, 3) == 16
    assert naive_power_sum(SumFamily.ALT_LUCAS_FOURTH, 1, 1) == -15
    assert corollary_sum(SumFamily.ALT_LUCAS_FOURTH, 1) == -15


def test_c5_divisibility(criterion):
    criterion("5 every exact division on the grid leaves remainder 0")
    with trace_divisions() as log:
        for family, fn in THEOREMS.items():
            for m in range(-6, 7):
                if m == 0 and family.requires_nonzero_m:
                    continue
                for n in range(0, 13):
                    fn(m, n)
        for family in SumFamily:
            for n in range(0, 13):
                corollary_sum(family, n)
    by_site = {}
    for site, r in log:
        by_site.setdefault(site, []).append(r)
    for site in ("fib4: F(2m)", "lucas4: F(2m)", "fib4: 25", "altfib4: 5 L(m) L(2m)",
                 "altlucas4: L(m) L(2m)", "altfib4 m=1: 3", "altlucas4 m=1: 3"):
        assert site in by_site, site
    assert all(r == 0 for rs in by_site.values() for r in rs)


def test_c6_telescoping(criterion):
    criterion("6 both telescoping lemmas hold on m, n in [1, 10], stride [1, 4], offset [-4, 4]")
    checked = 0
    for kind, stride, offset in itertools.product(SequenceKind, range(1, 5), range(-4, 5)):
        seq = SequenceSpec(kind, stride, offset)
        for m, n in itertools.product(range(1, 11), repeat=2):
            telescoping_sum(seq, m, n, alternating=False)
            telescoping_sum(seq, m, n, alternating=True)
            checked += 2
    assert checked == 2 * 4 * 9 * 100 * 2


def test_c7_performance(criterion):
    criterion("7 speedup >= 20x at m=3 n=1e4; n=1e6 in < 1 s; op count < 200")
    result = bench(SumFamily.FIB_FOURTH, 3, 10_000, repetitions=3)
    assert result.values_equal
    assert result.speedup >= 20

    t0 = time.perf_counter()
    THEOREMS[SumFamily.FIB_FOURTH](3, 10**6)
    assert time.perf_counter() - t0 < 1.0

    for family, fn in THEOREMS.items():
        for m, n in itertools.product((-6, -1, 1, 3, 6), (1, 10**3, 10**6)):
            with count_big_ops() as ops:
                fn(m, n)
            assert ops.count < 200, (family, m, n, ops.count)


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli_main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_c8_cli_contract(criterion):
    criterion("8 CLI examples produce the stated output and exit codes")
    assert _cli("eval", "--family", "fib4", "--m", "1", "--n", "3") == (0, "18\n", "")
    assert _cli("eval", "--family", "altlucas4", "--m", "1", "--n", "1") == (0, "-15\n", "")
    code, out, err = _cli("eval", "--family", "fib4", "--m", "0", "--n", "5")
    assert code == 2 and out == ""
    assert "m != 0" in err
