"""
Closed algebraic equations satisfied by the stack series S_{m,d}, checked as
exact truncated power-series identities.

Coefficient families are stored as term lists (coefficient, e, f) standing for
coefficient * x^(e*m + f), transcribed term by term and never re-derived here.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import FamilyRangeError, PreconditionError
from .series import Series

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Term:
    coefficient: int
    m_coefficient: int
    offset: int

    def exponent(self, m: int) -> int:
        return self.m_coefficient * m + self.offset


def _power(e: int, f: int) -> str:
    if e == 0:
        return "" if f == 0 else ("x" if f == 1 else f"x^{f}")
    linear = "m" if e == 1 else f"{e}m"
    if f:
        linear += f"{f:+d}"
    return f"x^({linear})"


class ParamPoly:
    """Sparse polynomial in x whose exponents are affine in the parameter m."""

    def __init__(self, terms: Iterable[Tuple[int, int, int]] = ()):
        self.terms: Tuple[Term, ...] = tuple(Term(c, e, f) for c, e, f in terms)
        for term in self.terms:
            if term.m_coefficient < 0:
                raise PreconditionError(f"exponent slope must be >= 0 in {term}")

    def instantiate(self, m: int, order: int) -> Series:
        """Substitute m and return the polynomial as a series of the given order."""
        if m < 1:
            raise FamilyRangeError(f"parameter out of family range: m={m}")
        merged: Dict[int, int] = {}
        for term in self.terms:
            k = term.exponent(m)
            if k < 0:
                raise FamilyRangeError(f"parameter out of family range: x^{k} at m={m}")
            merged[k] = merged.get(k, 0) + term.coefficient
        coeffs = [0] * (order + 1)
        for k, c in merged.items():
            if k <= order:
                coeffs[k] += c
        return Series(coeffs, order)

    def render(self) -> str:
        """Canonical text form, for diffing the transcription against the printed equations."""
        if not self.terms:
            return "0"
        parts: List[str] = []
        for k, term in enumerate(self.terms):
            power = _power(term.m_coefficient, term.offset)
            magnitude = abs(term.coefficient)
            if not power:
                body = str(magnitude)
            elif magnitude == 1:
                body = power
            else:
                body = f"{magnitude}*{power}"
            if k == 0:
                parts.append(("-" if term.coefficient < 0 else "") + body)
            else:
                parts.append((" - " if term.coefficient < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"ParamPoly({self.render()})"


def instantiate(p: ParamPoly, m: int, order: int) -> Series:
    return p.instantiate(m, order)


@dataclass(frozen=True)
class AlgebraicEquation:
    """sum_k coefficients[k](x) * S(x)^k = 0; ``only_m`` pins a family known for one m only."""
    name: str
    coefficients: Tuple[ParamPoly, ...]
    only_m: Optional[int] = None

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def residual(eq: AlgebraicEquation, m: int, S: Series, order: int) -> Series:
    """Horner evaluation of the equation at S, truncated at y^order."""
    if eq.only_m is not None and m != eq.only_m:
        raise FamilyRangeError(f"parameter out of family range: {eq.name} is only known for m={eq.only_m}")
    if S.order < order:
        raise PreconditionError(f"series known through y^{S.order}, residual asked through y^{order}")
    S = S.truncate(order)
    result = eq.coefficients[-1].instantiate(m, order)
    for poly in reversed(eq.coefficients[:-1]):
        result = result * S + poly.instantiate(m, order)
    if not result.is_zero():
        logger.debug(f"{eq.name} at m={m}: nonzero residual through x^{order}")
    return result


def motzkin_oracle(order: int) -> Series:
    """M_0 = 1, M_{n+1} = M_n + sum_{k<n} M_k M_{n-1-k}."""
    numbers = [1]
    while len(numbers) <= order:
        n = len(numbers) - 1
        numbers.append(numbers[n] + sum(numbers[k] * numbers[n - 1 - k] for k in range(n)))
    return Series(numbers, order)


def simple_stack_closed_form(m: int) -> AlgebraicEquation:
    """x^2 S^2 - (sum_{l<=m} x^l - 2x) S + 1 = 0, the quadratic behind the radical form of S_{m,1}."""
    middle = [(-1, 0, l) for l in range(m + 1)] + [(2, 0, 1)]
    return AlgebraicEquation(
        f"closed form S_{m},1",
        (ParamPoly([(1, 0, 0)]), ParamPoly(middle), ParamPoly([(1, 0, 2)])),
        only_m=m,
    )


MOTZKIN_QUADRATIC = AlgebraicEquation(
    "Motzkin quadratic",
    (ParamPoly([(1, 0, 0)]), ParamPoly([(1, 0, 1), (-1, 0, 0)]), ParamPoly([(1, 0, 2)])),
)

# d = 1: (x^3 - x^2) S^2 + (-x^{m+1} + 2x^2 - 2x + 1) S + x - 1 = 0
SIMPLE_QUADRATIC = AlgebraicEquation(
    "simple stacks (d=1) quadratic",
    (
        ParamPoly([(1, 0, 1), (-1, 0, 0)]),
        ParamPoly([(-1, 1, 1), (2, 0, 2), (-2, 0, 1), (1, 0, 0)]),
        ParamPoly([(1, 0, 3), (-1, 0, 2)]),
    ),
)

# d = 2: sum_{k=0}^{5} c_{m,2,k}(x) S^k = 0
LINEAR_QUINTIC = AlgebraicEquation(
    "linear stacks (d=2) quintic",
    (
        ParamPoly([(1, 3, 1), (-1, 3, 0), (-3, 2, 1), (3, 2, 0), (3, 1, 1), (-3, 1, 0), (-1, 0, 1), (1, 0, 0)]),
        ParamPoly([
            (1, 4, 1), (-2, 3, 2), (-3, 2, 3), (-3, 3, 1), (12, 2, 2), (1, 3, 0), (6, 1, 3), (-18, 1, 2),
            (-3, 2, 0), (-3, 0, 3), (5, 1, 1), (8, 0, 2), (3, 1, 0), (-3, 0, 1), (-1, 0, 0),
        ]),
        ParamPoly([
            (-5, 3, 3), (6, 2, 4), (5, 3, 2), (3, 1, 5), (8, 2, 3), (-21, 1, 4), (-19, 2, 2), (-3, 0, 5),
            (8, 1, 3), (5, 2, 1), (15, 0, 4), (20, 1, 2), (-11, 0, 3), (-10, 1, 1), (-6, 0, 2), (5, 0, 1),
        ]),
        ParamPoly([
            (11, 2, 5), (-8, 1, 6), (-22, 2, 4), (-6, 1, 5), (11, 2, 3), (8, 0, 6), (44, 1, 4),
            (-5, 0, 5), (-38, 1, 3), (-22, 0, 4), (8, 1, 2), (27, 0, 3), (-8, 0, 2),
        ]),
        ParamPoly([
            (-11, 1, 7), (4, 0, 8), (33, 1, 6), (-1, 0, 7), (-33, 1, 5), (-25, 0, 6), (11, 1, 4),
            (41, 0, 5), (-23, 0, 4), (4, 0, 3),
        ]),
        # 4 x^5 (x - 1)^4, expanded
        ParamPoly([(4, 0, 9), (-16, 0, 8), (24, 0, 7), (-16, 0, 6), (4, 0, 5)]),
    ),
)

# d = 3, m = 1: sum_{k=0}^{17} c_{1,3,k}(x) S^k = 0, with c_{1,3,16} = c_{1,3,17} = 0
SPATIAL_M1_EQUATION = AlgebraicEquation(
    "3-contact stacks (d=3, m=1) degree-17 equation",
    (
        ParamPoly([(1, 0, 0)]),
        ParamPoly([(1, 0, 1)]),
        ParamPoly([(52, 0, 2), (1, 0, 1), (-1, 0, 0)]),
        ParamPoly([(60, 0, 3), (-5, 0, 2)]),
        ParamPoly([(787, 0, 4), (-115, 0, 3), (-45, 0, 2)]),
        ParamPoly([(871, 0, 5), (-376, 0, 4), (-3, 0, 3)]),
        ParamPoly([(5731, 0, 6), (-511, 0, 5), (-1314, 0, 4), (162, 0, 3)]),
        ParamPoly([(8188, 0, 7), (-7823, 0, 6), (315, 0, 5)]),
        ParamPoly([(21690, 0, 8), (-4575, 0, 7), (-5483, 0, 6), (-702, 0, 5), (729, 0, 4)]),
        ParamPoly([(35452, 0, 9), (-37272, 0, 8), (-10146, 0, 7), (7938, 0, 6)]),
        ParamPoly([(53179, 0, 10), (-50388, 0, 9), (11385, 0, 8), (3888, 0, 7)]),
        ParamPoly([(63508, 0, 11), (-84400, 0, 10), (11576, 0, 9), (6912, 0, 8)]),
        ParamPoly([(65208, 0, 12), (-79736, 0, 11), (39360, 0, 10)]),
        ParamPoly([(53304, 0, 13), (-69312, 0, 12), (18432, 0, 11)]),
        ParamPoly([(34304, 0, 14), (-38912, 0, 13), (16384, 0, 12)]),
        ParamPoly([(10240, 0, 15), (-16384, 0, 14)]),
        ParamPoly(),
        ParamPoly(),
    ),
    only_m=1,
)

EQUATIONS_BY_D = {1: SIMPLE_QUADRATIC, 2: LINEAR_QUINTIC, 3: SPATIAL_M1_EQUATION}
