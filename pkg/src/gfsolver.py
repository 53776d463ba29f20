"""
The generating-function system for m-regular Lambda-avoiding DLU paths.

Every equation is built once as a symbolic ``GfEquation`` (signed atoms and
weighted products); ``step_system`` evaluates those structures over truncated
series and ``render_system`` prints them. All series are in y = x^d, so the
piece weight x^d is a shift by one and G<0,0> is the stack series S itself.
"""
import logging
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import ConvergenceError, PreconditionError, StackEnumerationError
from .series import Series, add, eq_upto, mul, shift, total

logger = logging.getLogger(__name__)

GfKey = Tuple[int, int]

JACOBI = "jacobi"
GAUSS_SEIDEL = "gauss-seidel"


def canonical(key: GfKey) -> GfKey:
    """Keys with t > s are read through the symmetry g<s,t> = g<t,s>."""
    s, t = key
    return (s, t) if s >= t else (t, s)


def needed_keys(d: int) -> List[GfKey]:
    """{(s,0): 0<=s<=d} and {(s,t): 1<=t<=s<=d-1}, ordered by second index then first."""
    keys = [(s, 0) for s in range(d + 1)]
    keys += [(s, t) for t in range(1, d) for s in range(t, d)]
    return keys


class GfTable(Mapping):
    """The solved (or partially solved) system: needed key -> series in y."""

    def __init__(self, m: int, d: int, entries: Dict[GfKey, Series]):
        self.m = m
        self.d = d
        self._entries = dict(entries)

    @property
    def order(self) -> int:
        return min(series.order for series in self._entries.values())

    def __getitem__(self, key: GfKey) -> Series:
        try:
            return self._entries[canonical(key)]
        except KeyError:
            raise StackEnumerationError(f"internal invariant violated: G<{key[0]},{key[1]}> is not part of the d={self.d} system") from None

    def __contains__(self, key: object) -> bool:
        return isinstance(key, tuple) and canonical(key) in self._entries

    def __iter__(self) -> Iterator[GfKey]:
        return iter(sorted(self._entries, key=lambda k: (k[1], k[0])))

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        return f"GfTable(m={self.m}, d={self.d}, order={self.order}, keys={list(self)})"


@dataclass(frozen=True)
class Atom:
    """sign * G<key>, or sign * C when key is None."""
    sign: int
    key: Optional[GfKey]

    def render(self) -> str:
        return "C" if self.key is None else f"G<{self.key[0]},{self.key[1]}>"


@dataclass(frozen=True)
class Product:
    """factor * (sum of G<c,t> over summands); an empty factor stands for 1."""
    factor: Tuple[Atom, ...]
    summands: Tuple[GfKey, ...]


@dataclass(frozen=True)
class GfEquation:
    key: GfKey
    constant: int
    linear: Tuple[Atom, ...]
    products: Tuple[Product, ...]


def a_terms(s: int, t: int) -> Tuple[Atom, ...]:
    """
    Closed-form expansion of the prime-path series A<s,t>:
    sum_{i<t} (-1)^{t-i+1} G<s-t+i, i> + delta_{s,t} (-1)^t C, highest i first.
    """
    if not 0 <= t <= s:
        raise PreconditionError(f"A<s,t> needs 0 <= t <= s, got s={s}, t={t}")
    atoms = [Atom((-1) ** (t - i + 1), (s - t + i, i)) for i in reversed(range(t))]
    if s == t:
        atoms.append(Atom((-1) ** t, None))
    return tuple(atoms)


@lru_cache(maxsize=None)
def build_system(d: int) -> Tuple[GfEquation, ...]:
    """First-return equations for every needed key, in evaluation order."""
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    equations = [GfEquation((0, 0), 1, (), (Product((), tuple((c, 0) for c in range(d + 1))),))]
    for s, t in needed_keys(d)[1:]:
        products = []
        for a in range(1, d + 1):
            u, v = max(s, a), min(s, a)
            products.append(Product(a_terms(u, v), tuple((c, t) for c in range(d - a + 1))))
        linear = a_terms(s, t) if t > 0 else ()
        equations.append(GfEquation((s, t), 0, linear, tuple(products)))
    return tuple(equations)


def make_c(m: int, order: int) -> Series:
    """C_{m,d} in y: 1 + y + ... + y^{m-2}, the series of {empty, L^d, ..., L^{(m-2)d}}."""
    if m < 1:
        raise PreconditionError(f"m must be >= 1, got {m}")
    return Series([1] * (m - 1), order)


def _evaluate_atoms(atoms: Tuple[Atom, ...], read, C: Series, order: int) -> Series:
    terms = []
    for atom in atoms:
        value = C if atom.key is None else read(atom.key)
        terms.append(value if atom.sign > 0 else -value)
    return total(terms, order)


def a_expand(G: GfTable, s: int, t: int, C: Series) -> Series:
    """A<s,t> evaluated on a table; zero for t = 0 < s."""
    return _evaluate_atoms(a_terms(s, t), G.__getitem__, C, min(G.order, C.order))


def _evaluate(eq: GfEquation, read, C: Series, order: int) -> Series:
    weighted = Series.zero(order)
    for product in eq.products:
        summed = total([read(key) for key in product.summands], order)
        if product.factor:
            summed = mul(_evaluate_atoms(product.factor, read, C, order), summed)
        weighted = add(weighted, summed)
    value = add(_evaluate_atoms(eq.linear, read, C, order), shift(weighted, 1))
    return add(value, Series.constant(eq.constant, order))


def step_system(G: GfTable, m: int, d: int, order: int, method: str = JACOBI) -> GfTable:
    """
    One sweep over every equation. Jacobi reads only the old table; Gauss-Seidel
    reads each key's new value as soon as it has been computed this sweep.
    """
    if method not in (JACOBI, GAUSS_SEIDEL):
        raise PreconditionError(f"unknown sweep method '{method}'")
    C = make_c(m, order)
    fresh: Dict[GfKey, Series] = {}

    def read(key: GfKey) -> Series:
        if method == GAUSS_SEIDEL:
            hit = fresh.get(canonical(key))
            if hit is not None:
                return hit
        return G[key]

    for eq in build_system(d):
        fresh[eq.key] = _evaluate(eq, read, C, order)
    return GfTable(m, d, fresh)


def initial_table(m: int, d: int, order: int) -> GfTable:
    return GfTable(m, d, {(s, t): Series.constant(1 if s == t else 0, order) for s, t in needed_keys(d)})


def sweep_cap(order: int, d: int, method: str) -> int:
    if method == GAUSS_SEIDEL:
        return order + d + 3
    return (order + 1) * d + 3


@lru_cache(maxsize=64)
def solve(m: int, d: int, order: int, method: str = GAUSS_SEIDEL) -> GfTable:
    """Iterate the system from G<s,t> = delta_{s,t} until two sweeps agree through y^order."""
    if m < 1 or d < 1 or order < 0:
        raise PreconditionError(f"solve needs m, d >= 1 and order >= 0, got m={m}, d={d}, order={order}")
    cap = sweep_cap(order, d, method)
    G = initial_table(m, d, order)
    for sweep in range(1, cap + 1):
        nxt = step_system(G, m, d, order, method)
        if all(eq_upto(nxt[key], G[key], order) for key in nxt):
            logger.info(f"Solved system m={m} d={d} order={order} ({method}) after {sweep} sweeps.")
            return nxt
        logger.debug(f"Sweep {sweep} for m={m} d={d} order={order} changed the table.")
        G = nxt
    raise ConvergenceError(f"system did not stabilize: m={m} d={d} order={order} after {cap} {method} sweeps")


def stack_gf(m: int, d: int, order: int) -> Series:
    """S_{m,d} through y^order; coefficient n is s_{m,d}(n)."""
    return solve(m, d, order)[(0, 0)]


def a_recurrence_residuals(G: GfTable, m: int) -> Dict[str, Series]:
    """
    The prime-path recurrence A<s,t> = G<s-1,t-1> - A<s-1,t-1> (2 <= t <= s <= d)
    and its d initial conditions, each as a residual that vanishes on a solution.
    """
    d = G.d
    C = make_c(m, G.order)
    out: Dict[str, Series] = {}
    out["A<1,1> = G<0,0> - C"] = a_expand(G, 1, 1, C) - (G[(0, 0)] - C)
    for s in range(2, d + 1):
        out[f"A<{s},1> = G<{s - 1},0>"] = a_expand(G, s, 1, C) - G[(s - 1, 0)]
    for s in range(2, d + 1):
        for t in range(2, s + 1):
            name = f"A<{s},{t}> = G<{s - 1},{t - 1}> - A<{s - 1},{t - 1}>"
            out[name] = a_expand(G, s, t, C) - (G[(s - 1, t - 1)] - a_expand(G, s - 1, t - 1, C))
    return out


def _render_atoms(atoms: Tuple[Atom, ...]) -> str:
    parts = []
    for k, atom in enumerate(atoms):
        if k == 0:
            parts.append(("-" if atom.sign < 0 else "") + atom.render())
        else:
            parts.append((" - " if atom.sign < 0 else " + ") + atom.render())
    return "".join(parts)


def _render_keys(keys: Tuple[GfKey, ...]) -> str:
    body = " + ".join(f"G<{s},{t}>" for s, t in keys)
    return body if len(keys) == 1 else f"({body})"


def render_system(d: int) -> List[str]:
    """One text line per equation, e.g. 'G<1,0> = y*[(G<0,0> - C)*G<0,0>]' for d = 1."""
    lines = []
    for eq in build_system(d):
        lhs = f"G<{eq.key[0]},{eq.key[1]}> = "
        if eq.constant:
            lines.append(lhs + f"{eq.constant} + y*" + _render_keys(eq.products[0].summands))
            continue
        rendered = []
        for product in eq.products:
            factor = _render_atoms(product.factor)
            if len(product.factor) > 1:
                factor = f"({factor})"
            rendered.append(f"{factor}*{_render_keys(product.summands)}")
        tail = "y*[" + " + ".join(rendered) + "]"
        lines.append(lhs + (f"{_render_atoms(eq.linear)} + {tail}" if eq.linear else tail))
    return lines
