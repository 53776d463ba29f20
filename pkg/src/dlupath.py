"""
DLU paths: lattice paths built from pieces D^a L^b U^c of fixed length d.

Predicates here work on the raw step string and never go through the
diagram side, so bijection tests that compare both sides stay independent.
Paths between heights s and t are judged through their boundary extension
L^{d-s} U^s . M . D^t L^{d-t}, which is a closed path from height 0.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .errors import PreconditionError, UnmatchedStepsError

logger = logging.getLogger(__name__)

_PIECE_RE = re.compile(r"^(D*)(L*)(U*)$")


@dataclass(frozen=True)
class Piece:
    """a down-steps, then b level-steps, then c up-steps."""
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise PreconditionError(f"piece step counts must be >= 0, got {(self.a, self.b, self.c)}")

    @property
    def length(self) -> int:
        return self.a + self.b + self.c

    @property
    def steps(self) -> str:
        return "D" * self.a + "L" * self.b + "U" * self.c

    def mirrored(self) -> "Piece":
        return Piece(self.c, self.b, self.a)

    @classmethod
    def from_text(cls, text: str) -> "Piece":
        match = _PIECE_RE.match(text)
        if match is None:
            raise PreconditionError(f"'{text}' is not of the form D^a L^b U^c")
        return cls(*(len(group) for group in match.groups()))

    def __str__(self) -> str:
        return self.steps


@dataclass(frozen=True)
class DluPath:
    d: int
    pieces: Tuple[Piece, ...] = ()

    def __post_init__(self):
        if self.d < 1:
            raise PreconditionError(f"piece length d must be >= 1, got {self.d}")
        pieces = tuple(self.pieces)
        for piece in pieces:
            if piece.length != self.d:
                raise PreconditionError(f"piece {piece} has length {piece.length}, expected {self.d}")
        object.__setattr__(self, "pieces", pieces)

    @property
    def steps(self) -> str:
        return "".join(piece.steps for piece in self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def __str__(self) -> str:
        return ".".join(piece.steps for piece in self.pieces)

    @classmethod
    def from_text(cls, text: str, d: int) -> "DluPath":
        """Parse 'LLUU.DLUU' (pieces separated by dots) or an undotted step string cut every d steps."""
        text = text.strip()
        if not text:
            return cls(d)
        if "." in text:
            chunks = text.split(".")
        else:
            if len(text) % d:
                raise PreconditionError(f"step string of length {len(text)} is not a multiple of d={d}")
            chunks = [text[k:k + d] for k in range(0, len(text), d)]
        return cls(d, tuple(Piece.from_text(chunk) for chunk in chunks))

    @classmethod
    def of(cls, d: int, *pieces: Tuple[int, int, int]) -> "DluPath":
        return cls(d, tuple(Piece(*p) for p in pieces))


@lru_cache(maxsize=None)
def all_pieces(d: int) -> Tuple[Piece, ...]:
    return tuple(Piece(a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a))


def height_profile(P: DluPath, start: int = 0) -> List[int]:
    """Height after every step, starting from ``start``."""
    heights = []
    h = start
    for step in P.steps:
        if step == "U":
            h += 1
        elif step == "D":
            h -= 1
        heights.append(h)
    return heights


def is_nonnegative(P: DluPath, start: int = 0) -> bool:
    return start >= 0 and all(h >= 0 for h in height_profile(P, start))


def extend_boundary(P: DluPath, s: int, t: int) -> DluPath:
    """The closed path L^{d-s}U^s . P . D^t L^{d-t}."""
    d = P.d
    if not (0 <= s <= d and 0 <= t <= d):
        raise PreconditionError(f"boundary heights need 0 <= s, t <= d={d}, got s={s}, t={t}")
    return DluPath(d, (Piece(0, d - s, s),) + P.pieces + (Piece(t, d - t, 0),))


def match_steps(P: DluPath) -> Dict[int, int]:
    """Match every U to its D, last-in first-out; keys and values are step indices."""
    pending: List[int] = []
    matching: Dict[int, int] = {}
    for k, step in enumerate(P.steps):
        if step == "U":
            pending.append(k)
        elif step == "D":
            if not pending:
                raise UnmatchedStepsError(f"unmatched steps: D at index {k} goes below the start height")
            matching[pending.pop()] = k
    if pending:
        raise UnmatchedStepsError(f"unmatched steps: {len(pending)} U step(s) never come back down")
    return matching


def has_lambda(P: DluPath) -> bool:
    """
    Matching-based Lambda test: a UU inside one piece whose inner U matches
    the first D of a DD inside one piece, and whose outer U matches the second.
    """
    steps = P.steps
    d = P.d
    matching = match_steps(P)
    for p in range(len(steps) - 1):
        if steps[p] == "U" and steps[p + 1] == "U" and p // d == (p + 1) // d:
            q = matching[p + 1]
            if matching[p] == q + 1 and q // d == (q + 1) // d:
                return True
    return False


def has_lambda_oracle(P: DluPath) -> bool:
    """Literal Lambda scan over every (UU, DD) pair; quadratic, used as a test oracle."""
    steps = P.steps
    d = P.d
    heights = height_profile(P, 0)
    ups = [p for p in range(len(steps) - 1)
           if steps[p] == "U" and steps[p + 1] == "U" and p // d == (p + 1) // d]
    downs = [q for q in range(len(steps) - 1)
             if steps[q] == "D" and steps[q + 1] == "D" and q // d == (q + 1) // d]
    for p in ups:
        level = heights[p + 1]
        for q in downs:
            if q <= p + 1:
                continue
            inner = heights[p + 1:q]
            if inner[-1] == level and min(inner) >= level:
                return True
    return False


def is_m_regular_path(P: DluPath, m: int) -> bool:
    """No consecutive factor U L^b D with b in {0, d, ..., (m-2)d}."""
    if m <= 1:
        return True
    forbidden = {k * P.d for k in range(m - 1)}
    steps = P.steps
    for k, step in enumerate(steps):
        if step != "U":
            continue
        r = k + 1
        while r < len(steps) and steps[r] == "L":
            r += 1
        if r < len(steps) and steps[r] == "D" and (r - k - 1) in forbidden:
            return False
    return True


def mirror(P: DluPath) -> DluPath:
    return DluPath(P.d, tuple(piece.mirrored() for piece in reversed(P.pieces)))


def _walk(n: int, d: int, s: int, t: int) -> Iterator[Tuple[Piece, ...]]:
    """Piece sequences of length n that stay nonnegative from s and end at t."""
    pieces = all_pieces(d)
    prefix: List[Piece] = []

    def step(h: int, remaining: int) -> Iterator[Tuple[Piece, ...]]:
        if remaining == 0:
            if h == t:
                yield tuple(prefix)
            return
        for piece in pieces:
            if piece.a > h:
                continue
            nh = h - piece.a + piece.c
            if abs(nh - t) > d * (remaining - 1):
                continue
            prefix.append(piece)
            yield from step(nh, remaining - 1)
            prefix.pop()

    yield from step(s, n)


def iter_paths(n: int, d: int, s: int, t: int, m: int) -> Iterator[DluPath]:
    """Every m-regular Lambda-avoiding path of n pieces from height s to height t."""
    if not (0 <= s <= d and 0 <= t <= d):
        raise PreconditionError(f"boundary heights need 0 <= s, t <= d={d}, got s={s}, t={t}")
    for pieces in _walk(n, d, s, t):
        path = DluPath(d, pieces)
        closed = extend_boundary(path, s, t)
        if is_m_regular_path(closed, m) and not has_lambda(closed):
            yield path


def enumerate_paths(n: int, d: int, s: int, t: int, m: int) -> int:
    """Brute-force g<s,t>_{m,d}(dn)."""
    count = sum(1 for _ in iter_paths(n, d, s, t, m))
    logger.debug(f"enumerate_paths(n={n}, d={d}, s={s}, t={t}, m={m}) -> {count}")
    return count


def closed_paths(n: int, d: int) -> Iterator[DluPath]:
    """All nonnegative paths of n pieces from height 0 back to 0, unfiltered."""
    for pieces in _walk(n, d, 0, 0):
        yield DluPath(d, pieces)
