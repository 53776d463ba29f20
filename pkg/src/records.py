# src/records.py
import csv
import io
from typing import Iterable, List, Sequence

from pydantic import BaseModel, Field

from .series import Series


class OutputRecord(BaseModel):
    """One coefficient sequence; field order is the JSON key order."""
    m: int = Field(..., ge=1, description="Minimal arc span.")
    d: int = Field(..., ge=1, description="Maximal vertex degree.")
    order: int = Field(..., ge=0, description="Highest n included.")
    method: str = Field(..., description="gf, brute-stack or brute-path.")
    coefficients: List[str] = Field(..., description="s_{m,d}(0..order) as decimal strings.")

    @classmethod
    def from_counts(cls, m: int, d: int, method: str, counts: Sequence[int]) -> "OutputRecord":
        return cls(m=m, d=d, order=len(counts) - 1, method=method, coefficients=[str(c) for c in counts])

    @classmethod
    def from_series(cls, m: int, d: int, method: str, series: Series) -> "OutputRecord":
        return cls.from_counts(m, d, method, series.coeffs)

    def to_json(self) -> str:
        return self.model_dump_json()

    def to_csv(self) -> str:
        header = [f"c{n}" for n in range(len(self.coefficients))]
        return write_csv(header, [self.coefficients])


class CurvePoint(BaseModel):
    m: int
    d: int
    n: int
    count: int


class CheckResult(BaseModel):
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} [{self.suite}] {self.name}"
        return f"{text}: {self.detail}" if self.detail else text


def write_csv(header: Sequence[object], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def table_rows(counts_by_m: Sequence[Sequence[int]], n_max: int) -> List[List[int]]:
    """Rows [m, s(1), ..., s(n_max)] from rows of counts indexed by n."""
    return [[m] + list(counts[1 : n_max + 1]) for m, counts in enumerate(counts_by_m, start=1)]


def render_table(rows: Sequence[Sequence[int]], n_max: int, fmt: str) -> str:
    header = ["m"] + [str(n) for n in range(1, n_max + 1)]
    if fmt == "csv":
        return write_csv(header, rows)
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---" for _ in header) + "|",
    ]
    lines += ["| " + " | ".join(str(v) for v in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def render_curves(points: Iterable[CurvePoint]) -> str:
    return write_csv(["m", "d", "n", "count"], ([p.m, p.d, p.n, p.count] for p in points))
