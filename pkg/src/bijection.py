# src/bijection.py
import bisect
import logging
from collections import Counter
from typing import List

from .diagram import Arc, Diagram, degrees, is_noncrossing
from .dlupath import DluPath, Piece
from .errors import (
    DegreeExceededError,
    MultipleArcError,
    NonMatchablePathError,
    PreconditionError,
    UnmatchedStepsError,
)

logger = logging.getLogger(__name__)


def eta(D: Diagram, d: int) -> DluPath:
    """Vertex v with ldeg a and rdeg c becomes the piece D^a L^{d-a-c} U^c."""
    if not is_noncrossing(D):
        raise PreconditionError(f"crossing arcs: {D} is not a stack")
    pieces = []
    for v, (a, c) in enumerate(degrees(D), start=1):
        if a + c > d:
            raise DegreeExceededError(v, a + c, d)
        pieces.append(Piece(a, d - a - c, c))
    return DluPath(d, tuple(pieces))


def eta_inv(P: DluPath) -> Diagram:
    """
    Rebuild the stack: V1 holds vertex v a_v times, V2 holds v c_v times. The
    largest remaining i in V2 is joined to the smallest j in V1 with j > i,
    until V2 is empty. Copies of the same i are handled one after another.
    """
    v1: List[int] = []
    v2: List[int] = []
    for v, piece in enumerate(P.pieces, start=1):
        v1.extend([v] * piece.a)
        v2.extend([v] * piece.c)
    if len(v1) != len(v2):
        raise UnmatchedStepsError(f"unmatched steps: {len(v2)} up-steps against {len(v1)} down-steps")

    arcs: List[Arc] = []
    for i in sorted(v2, reverse=True):
        k = bisect.bisect_right(v1, i)
        if k == len(v1):
            raise NonMatchablePathError(f"non-matchable path: no down-vertex to the right of {i}")
        arcs.append((i, v1.pop(k)))

    repeated = [arc for arc, times in Counter(arcs).items() if times > 1]
    if repeated:
        logger.debug(f"eta_inv: path {P} maps to repeated arcs {sorted(repeated)}")
        raise MultipleArcError(min(repeated))
    return Diagram(len(P.pieces), tuple(arcs))
