import pytest
from hypothesis import given, strategies as st

from fibquartic.errors import DomainError, IndexOverflowError
from fibquartic.kernel import (
    INDEX_BOUND,
    count_big_ops,
    exact_div,
    fib,
    fib_lucas,
    fib_pair,
    lucas,
    sign,
    trace_divisions,
)
from fibquartic.errors import InexactDivisionError


def iterate_with_sign_rules(limit):
    """Forward recurrence from (0, 1) and (2, 1), mirrored by the sign rules."""
    f, lu = [0, 1], [2, 1]
    for _ in range(2, limit + 1):
        f.append(f[-1] + f[-2])
        lu.append(lu[-1] + lu[-2])
    table = {}
    for n in range(limit + 1):
        table[n] = (f[n], lu[n])
        table[-n] = ((-1) ** (n - 1) * f[n], (-1) ** n * lu[n])
    return table


TABLE = iterate_with_sign_rules(500)


@pytest.mark.parametrize(
    "n, expected",
    [(0, 0), (1, 1), (10, 55), (-3, 2), (-1, 1), (-2, -1)],
)
def test_fib_examples(n, expected):
    assert fib(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 2), (1, 1), (6, 18), (-1, -1), (-2, 3)])
def test_lucas_examples(n, expected):
    assert lucas(n) == expected


@pytest.mark.parametrize("n, expected", [(1, (1, 1)), (7, (13, 29)), (-4, (-3, 7)), (0, (0, 2))])
def test_fib_lucas_examples(n, expected):
    assert fib_lucas(n) == expected


def test_matches_recurrence_table():
    for n in range(-500, 501):
        assert (fib(n), lucas(n)) == TABLE[n], n


def test_recurrence_holds_both_directions():
    for n in range(-64, 65):
        assert fib(n + 1) == fib(n) + fib(n - 1)
        assert lucas(n + 1) == lucas(n) + lucas(n - 1)
        assert fib_lucas(n) == (fib(n), lucas(n))
        assert lucas(n) == fib(n - 1) + fib(n + 1)


def test_returns_plain_int():
    f, lu = fib_lucas(300)
    assert type(f) is int and type(lu) is int
    assert type(fib(-7)) is int


@given(st.integers(min_value=0, max_value=5000))
def test_cassini_on_doubling_pair(n):
    p = fib_pair(n)
    assert p.cassini() == (-1) ** n
    assert p.f_n == fib(n) and p.f_n1 == fib(n + 1)


@given(st.integers(min_value=-3000, max_value=3000), st.integers(min_value=-3000, max_value=3000))
def test_addition_rule_at_scale(a, b):
    # 2 F(a+b) = F(a) L(b) + L(a) F(b)
    assert 2 * fib(a + b) == fib(a) * lucas(b) + lucas(a) * fib(b)


def test_fib_pair_rejects_negative():
    with pytest.raises(DomainError):
        fib_pair(-1)


def test_doubling_multiplication_count():
    with count_big_ops() as ops:
        fib(10**6)
    assert ops.count < 100
    # three per bit of the index
    assert ops.count == 3 * (10**6).bit_length()


def test_counter_is_scoped():
    with count_big_ops() as outer:
        fib(8)
        with count_big_ops() as inner:
            fib(1000)
        fib(8)
    assert inner.count == 30
    assert outer.count == 2 * 3 * (8).bit_length()


def test_index_bound():
    fib(0)
    with pytest.raises(IndexOverflowError):
        fib(INDEX_BOUND + 1)
    with pytest.raises(IndexOverflowError):
        lucas(-INDEX_BOUND - 1)


def test_sign_uses_parity():
    assert sign(0) == 1 and sign(-1) == -1 and sign(3**40) == -1
    assert sign(2**70) == 1


def test_exact_div():
    assert exact_div(-12, 4, "t") == -3
    assert exact_div(12, -4, "t") == -3
    with pytest.raises(InexactDivisionError) as info:
        exact_div(13, 4, "site-x")
    assert info.value.site == "site-x"
    with trace_divisions() as log:
        exact_div(10, 5, "a")
    assert log == [("a", 0)]
