"""
Both sides of the Fibonacci/Lucas identities the closed forms are built from.

Each identity is evaluated exactly as written, so ``instance.holds`` is a
plain integer comparison.
"""

import enum
from dataclasses import dataclass

from .errors import ParameterError
from .kernel import check_index, fib, lucas, sign


class IdentityId(enum.Enum):
    FIB_ADD_SUB = "FibAddSub"                          # F(u+v) - (-1)^v F(u-v) = F(v) L(u)
    LUCAS_ADD_ADD = "LucasAddAdd"                      # L(u+v) + (-1)^v L(u-v) = L(v) L(u)
    LUCAS_ADD_SUB_5F = "LucasAddSub5F"                 # L(u+v) - (-1)^v L(u-v) = 5 F(v) F(u)
    FIB_SQUARE = "FibSquare"                           # 5 F(u)^2 = L(2u) - 2 (-1)^u
    LUCAS_SQUARE = "LucasSquare"                       # L(v)^2 = L(2v) + 2 (-1)^v
    FIB_DOUBLE = "FibDouble"                           # F(2u) = F(u) L(u)
    FIB_FOURTH_EXPANSION = "FibFourthExpansion"        # 25 F(w)^4 = L(4w) + 4 (-1)^(w-1) L(2w) + 6
    LUCAS_FOURTH_EXPANSION = "LucasFourthExpansion"    # L(w)^4 = L(4w) - 4 (-1)^(w-1) L(2w) + 6
    LUCAS_PRODUCT_SHIFT = "LucasProductShift"          # L(n) L(n+1) = L(2n+1) - (-1)^(n-1)

    @property
    def arity(self):
        return 2 if self in _TWO_ARG else 1

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        key = str(name).replace("_", "").replace("-", "").lower()
        for member in cls:
            if key in (member.value.lower(), member.name.replace("_", "").lower()):
                return member
        choices = ", ".join(m.value for m in cls)
        raise ParameterError(f"unknown identity {name!r} (choose from {choices})")


_TWO_ARG = frozenset(
    {IdentityId.FIB_ADD_SUB, IdentityId.LUCAS_ADD_ADD, IdentityId.LUCAS_ADD_SUB_5F}
)


@dataclass(frozen=True)
class IdentityInstance:
    id: IdentityId
    args: tuple
    lhs: int
    rhs: int

    @property
    def holds(self):
        return self.lhs == self.rhs


def _fib_add_sub(u, v):
    return fib(u + v) - sign(v) * fib(u - v), fib(v) * lucas(u)


def _lucas_add_add(u, v):
    return lucas(u + v) + sign(v) * lucas(u - v), lucas(v) * lucas(u)


def _lucas_add_sub_5f(u, v):
    return lucas(u + v) - sign(v) * lucas(u - v), 5 * fib(v) * fib(u)


def _fib_square(u):
    return 5 * fib(u) ** 2, lucas(2 * u) - sign(u) * 2


def _lucas_square(v):
    return lucas(v) ** 2, lucas(2 * v) + sign(v) * 2


def _fib_double(u):
    return fib(2 * u), fib(u) * lucas(u)


def _fib_fourth(w):
    return 25 * fib(w) ** 4, lucas(4 * w) + sign(w - 1) * 4 * lucas(2 * w) + 6


def _lucas_fourth(w):
    return lucas(w) ** 4, lucas(4 * w) - sign(w - 1) * 4 * lucas(2 * w) + 6


def _lucas_product_shift(n):
    return lucas(n) * lucas(n + 1), lucas(2 * n + 1) - sign(n - 1)


_SIDES = {
    IdentityId.FIB_ADD_SUB: _fib_add_sub,
    IdentityId.LUCAS_ADD_ADD: _lucas_add_add,
    IdentityId.LUCAS_ADD_SUB_5F: _lucas_add_sub_5f,
    IdentityId.FIB_SQUARE: _fib_square,
    IdentityId.LUCAS_SQUARE: _lucas_square,
    IdentityId.FIB_DOUBLE: _fib_double,
    IdentityId.FIB_FOURTH_EXPANSION: _fib_fourth,
    IdentityId.LUCAS_FOURTH_EXPANSION: _lucas_fourth,
    IdentityId.LUCAS_PRODUCT_SHIFT: _lucas_product_shift,
}


def eval_identity(identity, args):
    """Evaluate both sides of ``identity`` at ``args``.

    >>> inst = eval_identity("FibAddSub", [5, 3])
    >>> inst.lhs, inst.rhs, inst.holds
    (22, 22, True)
    """
    identity = IdentityId.parse(identity)
    args = tuple(check_index(a, "argument") for a in args)
    if len(args) != identity.arity:
        raise ParameterError(
            f"{identity.value} takes {identity.arity} argument(s), got {len(args)}"
        )
    lhs, rhs = _SIDES[identity](*args)
    return IdentityInstance(identity, args, lhs, rhs)
