# src/counting.py
import logging
from typing import List

from .diagram import StackParams, enumerate_stacks
from .dlupath import all_pieces, enumerate_paths
from .errors import PreconditionError
from .gfsolver import stack_gf

logger = logging.getLogger(__name__)

METHODS = ("gf", "brute-stack", "brute-path")


def _check(method: str, m: int, d: int, n: int) -> None:
    if method not in METHODS:
        raise PreconditionError(f"unknown method '{method}', expected one of {METHODS}")
    StackParams(m, d)
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")


def count(method: str, m: int, d: int, n: int) -> int:
    _check(method, m, d, n)
    if method == "gf":
        return stack_gf(m, d, n)[n]
    if method == "brute-stack":
        return enumerate_stacks(n, StackParams(m, d))
    return enumerate_paths(n, d, 0, 0, m)


def count_row(method: str, m: int, d: int, n_max: int) -> List[int]:
    """s_{m,d}(0), ..., s_{m,d}(n_max); a gf row is a single solve."""
    _check(method, m, d, n_max)
    logger.debug(f"Counting row {method} m={m} d={d} n<={n_max}")
    if method == "gf":
        return list(stack_gf(m, d, n_max).coeffs)
    return [count(method, m, d, n) for n in range(n_max + 1)]


def search_space_estimate(method: str, m: int, d: int, n: int) -> int:
    """Rough node count of a brute-force run; zero for the gf method."""
    _check(method, m, d, n)
    if method == "brute-stack":
        # every search node is a valid stack, each scanning the candidate arcs
        return stack_gf(m, d, n)[n] * max(n * (n - 1) // 2, 1)
    if method == "brute-path":
        return len(all_pieces(d)) ** n
    return 0
