"""
Truncated formal power series with exact integer coefficients.

A ``Series`` of order N is known exactly through y**N; index k of ``coeffs``
holds the coefficient of y**k. Every generating function in the package is
carried in the variable y = x**d, so a series never stores the coefficients
that vanish at non-multiples of d.
"""
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import PreconditionError


class Series:
    """Immutable truncated power series over the integers."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int], order: Optional[int] = None):
        values = [int(c) for c in coeffs]
        if order is None:
            if not values:
                raise PreconditionError("a series needs at least one coefficient or an explicit order")
            order = len(values) - 1
        if order < 0:
            raise PreconditionError(f"series order must be >= 0, got {order}")
        if len(values) <= order:
            values.extend([0] * (order + 1 - len(values)))
        self._coeffs: Tuple[int, ...] = tuple(values[: order + 1])

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((), order)

    @classmethod
    def constant(cls, value: int, order: int) -> "Series":
        return cls((value,), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int, order: int) -> "Series":
        """coefficient * y**exponent; vanishes when the exponent lies past the window."""
        if exponent < 0:
            raise PreconditionError(f"monomial exponent must be >= 0, got {exponent}")
        if exponent > order:
            return cls.zero(order)
        return cls([0] * exponent + [coefficient], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    def __getitem__(self, k: int) -> int:
        return self._coeffs[k]

    def __iter__(self):
        return iter(self._coeffs)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise PreconditionError(f"cannot extend a series of order {self.order} to order {order}")
        return Series(self._coeffs, order)

    def __add__(self, other: Union["Series", int]) -> "Series":
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other: Union["Series", int]) -> "Series":
        return add(self, -_coerce(other, self.order))

    def __rsub__(self, other: int) -> "Series":
        return add(_coerce(other, self.order), -self)

    def __neg__(self) -> "Series":
        return Series((-c for c in self._coeffs), self.order)

    def __mul__(self, other: Union["Series", int]) -> "Series":
        if isinstance(other, int):
            return Series((other * c for c in self._coeffs), self.order)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Series":
        if exponent < 0:
            raise PreconditionError("negative powers are not supported")
        result = Series.one(self.order)
        for _ in range(exponent):
            result = mul(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Series({list(self._coeffs)}, order={self.order})"


def _coerce(value: Union[Series, int], order: int) -> Series:
    if isinstance(value, Series):
        return value
    return Series.constant(value, order)


def add(a: Series, b: Series) -> Series:
    """Coefficientwise sum through min(order_a, order_b)."""
    n = min(a.order, b.order)
    return Series((a[k] + b[k] for k in range(n + 1)), n)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the smaller order."""
    n = min(a.order, b.order)
    bs = b.coeffs
    out = [0] * (n + 1)
    for i, ai in enumerate(a.coeffs[: n + 1]):
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = bs[j]
            if bj:
                out[i + j] += ai * bj
    return Series(out, n)


def shift(a: Series, k: int) -> Series:
    """Multiply by y**k, keeping the order; the top k coefficients leave the window."""
    if k < 0:
        raise PreconditionError(f"shift amount must be >= 0, got {k}")
    if k == 0:
        return a
    return Series([0] * k + list(a.coeffs[: max(a.order + 1 - k, 0)]), a.order)


def eq_upto(a: Series, b: Series, k: int) -> bool:
    """True iff the coefficients of y**0 .. y**k agree."""
    if k < 0 or k > min(a.order, b.order):
        raise PreconditionError(
            f"eq_upto: k={k} outside 0..{min(a.order, b.order)}"
        )
    return a.coeffs[: k + 1] == b.coeffs[: k + 1]


def total(terms: Sequence[Series], order: int) -> Series:
    """Sum of a (possibly empty) list of series at the given order."""
    result = Series.zero(order)
    for term in terms:
        result = add(result, term)
    return result
