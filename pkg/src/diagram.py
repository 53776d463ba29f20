# src/diagram.py
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from .errors import PreconditionError

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


@dataclass(frozen=True)
class StackParams:
    """m: minimum arc span, d: maximum vertex degree."""
    m: int
    d: int

    def __post_init__(self):
        if self.m < 1 or self.d < 1:
            raise PreconditionError(f"stack parameters need m >= 1 and d >= 1, got m={self.m}, d={self.d}")


@dataclass(frozen=True)
class Diagram:
    """A diagram on vertices 1..n; arcs are kept sorted and duplicate-free."""
    n: int
    arcs: Tuple[Arc, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError(f"vertex count must be >= 0, got {self.n}")
        arcs = tuple(sorted((int(i), int(j)) for i, j in self.arcs))
        for i, j in arcs:
            if not 1 <= i < j <= self.n:
                raise PreconditionError(f"arc {(i, j)} is not of the form 1 <= i < j <= {self.n}")
        if len(set(arcs)) != len(arcs):
            raise PreconditionError(f"duplicate arcs in {arcs}")
        object.__setattr__(self, "arcs", arcs)

    def __str__(self) -> str:
        return f"n={self.n} arcs=" + " ".join(f"({i},{j})" for i, j in self.arcs)


def _check_vertex(D: Diagram, v: int) -> None:
    if not 1 <= v <= D.n:
        raise PreconditionError(f"vertex {v} outside 1..{D.n}")


def ldeg(D: Diagram, v: int) -> int:
    _check_vertex(D, v)
    return sum(1 for _, j in D.arcs if j == v)


def rdeg(D: Diagram, v: int) -> int:
    _check_vertex(D, v)
    return sum(1 for i, _ in D.arcs if i == v)


def degree(D: Diagram, v: int) -> int:
    return ldeg(D, v) + rdeg(D, v)


def degrees(D: Diagram) -> List[Tuple[int, int]]:
    """(ldeg, rdeg) for every vertex 1..n, in one pass."""
    out = [[0, 0] for _ in range(D.n + 1)]
    for i, j in D.arcs:
        out[i][1] += 1
        out[j][0] += 1
    return [(a, c) for a, c in out[1:]]


def is_noncrossing(D: Diagram) -> bool:
    arcs = D.arcs
    for x, (i, j) in enumerate(arcs):
        for k, l in arcs[x + 1:]:
            if i < k < j < l or k < i < l < j:
                return False
    return True


def is_valid_stack(D: Diagram, p: StackParams) -> bool:
    if any(j - i < p.m for i, j in D.arcs):
        return False
    if any(a + c > p.d for a, c in degrees(D)):
        return False
    return is_noncrossing(D)


def candidate_arcs(n: int, p: StackParams) -> List[Arc]:
    """All arcs of span >= m on [n], in lexicographic order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + p.m, n + 1)]


def enumerate_stacks(n: int, p: StackParams, visitor: Optional[Callable[[Diagram], None]] = None) -> int:
    """
    Count the m-regular d-contact stacks on [n] by backtracking over arc sets.

    Arcs are added in lexicographic order behind a cursor, so each arc set is
    produced once. Every node of the search is a valid stack: an arc is only
    added if it keeps degrees <= d and crosses nothing already chosen. For
    chosen arcs (i', j') and a later arc (i, j) with i' < i, a crossing means
    i' < i < j' < j, so ``limit[i]`` holds the smallest such j' and the new
    arc must satisfy j <= limit[i].
    """
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    arcs = candidate_arcs(n, p)
    deg = [0] * (n + 2)
    limit = [n] * (n + 2)
    chosen: List[Arc] = []
    count = 0

    def backtrack(cursor: int) -> None:
        nonlocal count
        count += 1
        if visitor is not None:
            visitor(Diagram(n, tuple(chosen)))
        for k in range(cursor, len(arcs)):
            i, j = arcs[k]
            if deg[i] >= p.d or deg[j] >= p.d or j > limit[i]:
                continue
            deg[i] += 1
            deg[j] += 1
            saved = limit[i + 1:j]
            limit[i + 1:j] = [min(x, j) for x in saved]
            chosen.append((i, j))
            backtrack(k + 1)
            chosen.pop()
            limit[i + 1:j] = saved
            deg[i] -= 1
            deg[j] -= 1

    backtrack(0)
    logger.debug(f"enumerate_stacks(n={n}, m={p.m}, d={p.d}) -> {count}")
    return count


def all_stacks(n: int, p: StackParams) -> List[Diagram]:
    found: List[Diagram] = []
    enumerate_stacks(n, p, found.append)
    return found
