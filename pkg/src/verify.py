# src/verify.py
# Each suite returns CheckResult records; a check that raises a library error is a failure.
import logging
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .algebraic import EQUATIONS_BY_D, MOTZKIN_QUADRATIC, motzkin_oracle, residual, simple_stack_closed_form
from .bijection import eta, eta_inv
from .diagram import StackParams, all_stacks, enumerate_stacks
from .dlupath import closed_paths, enumerate_paths, has_lambda, has_lambda_oracle, is_m_regular_path, is_nonnegative, iter_paths
from .errors import StackEnumerationError
from .gfsolver import GAUSS_SEIDEL, JACOBI, GfTable, a_recurrence_residuals, make_c, needed_keys, solve, stack_gf
from .records import CheckResult
from .series import Series, shift

logger = logging.getLogger(__name__)


class VerifyLimits(BaseModel):
    """Optional overrides of each suite's default grid."""
    d: Optional[int] = Field(None, ge=1, description="Restrict to a single d.")
    m_max: int = Field(3, ge=1, description="Largest m checked.")
    n_max: Optional[int] = Field(None, ge=0, description="Largest n checked.")
    order: Optional[int] = Field(None, ge=0, description="Series order for identity checks.")


def _grid(limits: VerifyLimits, defaults: Dict[int, int]) -> List[Tuple[int, int]]:
    """(d, n_max) pairs: the default grid, narrowed by --d and --n-max."""
    if limits.d is not None:
        n = limits.n_max if limits.n_max is not None else defaults.get(limits.d, min(defaults.values()))
        return [(limits.d, n)]
    return [(d, limits.n_max if limits.n_max is not None else n) for d, n in defaults.items()]


def _run_check(suite: str, name: str, body: Callable[[], Tuple[bool, str]]) -> CheckResult:
    try:
        passed, detail = body()
    except StackEnumerationError as e:
        logger.error(f"Check '{name}' in suite '{suite}' raised: {e}", exc_info=True)
        return CheckResult(suite=suite, name=name, passed=False, detail=f"{type(e).__name__}: {e}")
    if not passed:
        logger.error(f"Check '{name}' in suite '{suite}' failed: {detail}")
    return CheckResult(suite=suite, name=name, passed=passed, detail=detail)


# --- bijection ---

def _bijection_check(d: int, m: int, n_max: int) -> Tuple[bool, str]:
    params = StackParams(m, d)
    total = 0
    for n in range(n_max + 1):
        image = set()
        for D in all_stacks(n, params):
            P = eta(D, d)
            if eta_inv(P) != D:
                return False, f"eta_inv(eta(D)) != D for {D}"
            if not is_nonnegative(P) or has_lambda(P) or not is_m_regular_path(P, m):
                return False, f"eta({D}) = {P} fails a path predicate"
            image.add(P)
        if image != set(iter_paths(n, d, 0, 0, m)):
            return False, f"image of eta differs from the brute-path set at n={n}"
        total += len(image)
    return True, f"{total} stacks round-tripped"


def bijection_suite(limits: VerifyLimits) -> List[CheckResult]:
    results = []
    for d, n_max in _grid(limits, {1: 10, 2: 7, 3: 5}):
        for m in range(1, limits.m_max + 1):
            name = f"eta round trip d={d} m={m} n<={n_max}"
            results.append(_run_check("bijection", name, lambda d=d, m=m, n_max=n_max: _bijection_check(d, m, n_max)))
    return results


# --- gf ---

def printed_system_residuals(G: GfTable, m: int) -> Dict[str, Series]:
    """
    The displayed d = 1, 2, 3 systems, written out by hand, each as
    lhs - rhs. The d = 3 G<2,2> bracket sums G<0,2> + G<1,2> + G<2,2>.
    """
    d = G.d
    C = make_c(m, G.order)

    def g(s: int, t: int) -> Series:
        return G[(s, t)]

    def y(series: Series) -> Series:
        return shift(series, 1)

    out: Dict[str, Series] = {}
    if d == 1:
        out["G<0,0>"] = g(0, 0) - (1 + y(g(0, 0) + g(1, 0)))
        out["G<1,0>"] = g(1, 0) - y((g(0, 0) - C) * g(0, 0))
    elif d == 2:
        out["G<0,0>"] = g(0, 0) - (1 + y(g(0, 0) + g(1, 0) + g(2, 0)))
        out["G<1,0>"] = g(1, 0) - y((g(0, 0) - C) * (g(0, 0) + g(1, 0)) + g(1, 0) * g(0, 0))
        out["G<1,1>"] = g(1, 1) - (g(0, 0) - C + y((g(0, 0) - C) * (g(0, 1) + g(1, 1)) + g(1, 0) * g(0, 1)))
        out["G<2,0>"] = g(2, 0) - y(g(1, 0) * (g(0, 0) + g(1, 0)) + (g(1, 1) - g(0, 0) + C) * g(0, 0))
    elif d == 3:
        a11 = g(0, 0) - C
        a22 = g(1, 1) - g(0, 0) + C
        a32 = g(2, 1) - g(1, 0)
        a33 = g(2, 2) - g(1, 1) + g(0, 0) - C
        out["G<0,0>"] = g(0, 0) - (1 + y(g(0, 0) + g(1, 0) + g(2, 0) + g(3, 0)))
        out["G<1,0>"] = g(1, 0) - y(
            a11 * (g(0, 0) + g(1, 0) + g(2, 0)) + g(1, 0) * (g(0, 0) + g(1, 0)) + g(2, 0) * g(0, 0))
        out["G<1,1>"] = g(1, 1) - (a11 + y(
            a11 * (g(0, 1) + g(1, 1) + g(2, 1)) + g(1, 0) * (g(0, 1) + g(1, 1)) + g(2, 0) * g(0, 1)))
        out["G<2,0>"] = g(2, 0) - y(
            g(1, 0) * (g(0, 0) + g(1, 0) + g(2, 0)) + a22 * (g(0, 0) + g(1, 0)) + a32 * g(0, 0))
        out["G<2,1>"] = g(2, 1) - (g(1, 0) + y(
            g(1, 0) * (g(0, 1) + g(1, 1) + g(2, 1)) + a22 * (g(0, 1) + g(1, 1)) + a32 * g(0, 1)))
        out["G<2,2>"] = g(2, 2) - (a22 + y(
            g(1, 0) * (g(0, 2) + g(1, 2) + g(2, 2)) + a22 * (g(0, 2) + g(1, 2)) + a32 * g(0, 2)))
        out["G<3,0>"] = g(3, 0) - y(
            g(2, 0) * (g(0, 0) + g(1, 0) + g(2, 0)) + a32 * (g(0, 0) + g(1, 0)) + a33 * g(0, 0))
    return out


def _all_zero(residuals: Dict[str, Series]) -> Tuple[bool, str]:
    bad = [name for name, r in residuals.items() if not r.is_zero()]
    if bad:
        return False, "nonzero residual for " + ", ".join(bad)
    return True, f"{len(residuals)} identities hold"


def _brute_vs_gf(d: int, m: int, n_max: int) -> Tuple[bool, str]:
    series = stack_gf(m, d, n_max)
    for n in range(n_max + 1):
        brute = enumerate_stacks(n, StackParams(m, d))
        if brute != series[n]:
            return False, f"n={n}: brute-stack {brute} != gf {series[n]}"
    return True, f"s({n_max}) = {series[n_max]}"


def _components_vs_paths(d: int, m: int, n_max: int) -> Tuple[bool, str]:
    G = solve(m, d, n_max)
    for s, t in needed_keys(d):
        for n in range(n_max + 1):
            brute = enumerate_paths(n, d, s, t, m)
            if G[(s, t)][n] != brute:
                return False, f"G<{s},{t}> coefficient {n}: {G[(s, t)][n]} != brute-path {brute}"
    return True, f"{len(needed_keys(d))} components"


def _jacobi_vs_gauss_seidel(d: int, m: int, order: int) -> Tuple[bool, str]:
    fast = solve(m, d, order, GAUSS_SEIDEL)
    slow = solve(m, d, order, JACOBI)
    bad = [key for key in fast if fast[key] != slow[key]]
    return (not bad), (f"differ at {bad}" if bad else "same fixed point")


def gf_suite(limits: VerifyLimits) -> List[CheckResult]:
    results = []
    ms = range(1, limits.m_max + 1)
    for d, n_max in _grid(limits, {1: 10, 2: 10, 3: 8}):
        for m in ms:
            name = f"brute-stack = gf d={d} m={m} n<={n_max}"
            results.append(_run_check("gf", name, lambda d=d, m=m, n=n_max: _brute_vs_gf(d, m, n)))
    for d, n_max in _grid(limits, {1: 5, 2: 5, 3: 5}):
        for m in ms:
            name = f"components = brute-path d={d} m={m} n<={n_max}"
            results.append(_run_check("gf", name, lambda d=d, m=m, n=n_max: _components_vs_paths(d, m, n)))
    order = limits.order if limits.order is not None else 20
    for d, _ in _grid(limits, {3: 0}):
        for m in ([2] if limits.d is None else ms):
            name = f"prime-path recurrence d={d} m={m} order={order}"
            results.append(_run_check(
                "gf", name, lambda d=d, m=m: _all_zero(a_recurrence_residuals(solve(m, d, order), m))))
    printed_order = limits.order if limits.order is not None else 12
    for d, _ in _grid(limits, {1: 0, 2: 0, 3: 0}):
        if d > 3:
            continue
        for m in ms:
            name = f"printed system d={d} m={m} order={printed_order}"
            results.append(_run_check(
                "gf", name, lambda d=d, m=m: _all_zero(printed_system_residuals(solve(m, d, printed_order), m))))
    for d, _ in _grid(limits, {1: 0, 2: 0, 3: 0}):
        for m in ms:
            name = f"jacobi = gauss-seidel d={d} m={m} order=8"
            results.append(_run_check("gf", name, lambda d=d, m=m: _jacobi_vs_gauss_seidel(d, m, 8)))
    return results


# --- algebraic ---

def _equation_check(d: int, m: int, order: int) -> Tuple[bool, str]:
    eq = EQUATIONS_BY_D[d]
    r = residual(eq, m, stack_gf(m, d, order), order)
    if not r.is_zero():
        first = next(k for k, c in enumerate(r) if c)
        return False, f"{eq.name}: residual coefficient x^{first} = {r[first]}"
    return True, f"{eq.name} vanishes through x^{order}"


def _closed_form_check(m: int, order: int) -> Tuple[bool, str]:
    eq = simple_stack_closed_form(m)
    r = residual(eq, m, stack_gf(m, 1, order), order)
    return r.is_zero(), f"{eq.name} through x^{order}"


def _motzkin_check(order: int) -> Tuple[bool, str]:
    S = stack_gf(1, 1, order)
    if S != motzkin_oracle(order):
        return False, f"s_1,1 = {list(S)} differs from the Motzkin numbers"
    if not residual(MOTZKIN_QUADRATIC, 1, S, order).is_zero():
        return False, "Motzkin quadratic residual is nonzero"
    return True, f"{order + 1} Motzkin numbers"


def algebraic_suite(limits: VerifyLimits) -> List[CheckResult]:
    results = []
    defaults = {1: (range(1, 7), 40), 2: (range(1, 7), 30), 3: (range(1, 2), 30)}
    ds = [limits.d] if limits.d is not None else list(defaults)
    for d in ds:
        if d not in defaults:
            results.append(CheckResult(suite="algebraic", name=f"equation d={d}", passed=True,
                                       detail="no printed equation for this d, skipped"))
            continue
        ms, order = defaults[d]
        order = limits.order if limits.order is not None else order
        for m in ms:
            results.append(_run_check("algebraic", f"equation d={d} m={m}",
                                      lambda d=d, m=m, order=order: _equation_check(d, m, order)))
        if d == 1:
            for m in ms:
                results.append(_run_check("algebraic", f"closed form d=1 m={m}",
                                          lambda m=m, order=order: _closed_form_check(m, order)))
            results.append(_run_check("algebraic", "Motzkin numbers", lambda: _motzkin_check(14)))
    return results


# --- symmetry, lambda, properties ---

def _symmetry_check(d: int, m: int, n_max: int) -> Tuple[bool, str]:
    pairs = [(s, t) for s, t in needed_keys(d) if s != t]
    for s, t in pairs:
        for n in range(n_max + 1):
            forward, backward = enumerate_paths(n, d, s, t, m), enumerate_paths(n, d, t, s, m)
            if forward != backward:
                return False, f"g<{s},{t}>({n}) = {forward} but g<{t},{s}>({n}) = {backward}"
    return True, f"{len(pairs)} pairs"


def symmetry_suite(limits: VerifyLimits) -> List[CheckResult]:
    return [
        _run_check("symmetry", f"g<s,t> = g<t,s> d={d} m={m} n<={n_max}",
                   lambda d=d, m=m, n_max=n_max: _symmetry_check(d, m, n_max))
        for d, n_max in _grid(limits, {1: 5, 2: 5, 3: 5})
        for m in range(1, limits.m_max + 1)
    ]


def _lambda_check(d: int, n_max: int) -> Tuple[bool, str]:
    checked = 0
    for n in range(n_max + 1):
        for P in closed_paths(n, d):
            if has_lambda(P) != has_lambda_oracle(P):
                return False, f"checkers disagree on {P}"
            checked += 1
    return True, f"{checked} closed paths"


def lambda_suite(limits: VerifyLimits) -> List[CheckResult]:
    return [
        _run_check("lambda", f"has_lambda = oracle d={d} n<={n_max}", lambda d=d, n_max=n_max: _lambda_check(d, n_max))
        for d, n_max in _grid(limits, {1: 4, 2: 4, 3: 4})
    ]


def _properties_check(d: int, m_max: int, n_max: int) -> Tuple[bool, str]:
    rows = {m: stack_gf(m, d, n_max) for m in range(1, m_max + 2)}
    wider = {m: stack_gf(m, d + 1, n_max) for m in range(1, m_max + 1)}
    for m in range(1, m_max + 1):
        s = rows[m]
        for n in range(n_max + 1):
            if n < n_max and s[n] > s[n + 1]:
                return False, f"s_{m},{d} decreases at n={n}"
            if rows[m + 1][n] > s[n]:
                return False, f"s_{m + 1},{d}({n}) > s_{m},{d}({n})"
            if s[n] > wider[m][n]:
                return False, f"s_{m},{d}({n}) > s_{m},{d + 1}({n})"
            if n <= m and s[n] != 1:
                return False, f"s_{m},{d}({n}) = {s[n]}, expected 1"
        if m + 1 <= n_max and s[m + 1] != 2:
            return False, f"s_{m},{d}({m + 1}) = {s[m + 1]}, expected 2"
    return True, f"m<={m_max} n<={n_max}"


def properties_suite(limits: VerifyLimits) -> List[CheckResult]:
    ds = [limits.d] if limits.d is not None else [1, 2, 3, 4]
    m_max = limits.m_max if "m_max" in limits.model_fields_set else 4
    n_max = limits.n_max if limits.n_max is not None else 10
    return [
        _run_check("properties", f"monotonicity and small-n values d={d}",
                   lambda d=d: _properties_check(d, m_max, n_max))
        for d in ds
    ]


SUITES: Dict[str, Callable[[VerifyLimits], List[CheckResult]]] = {
    "bijection": bijection_suite,
    "gf": gf_suite,
    "algebraic": algebraic_suite,
    "symmetry": symmetry_suite,
    "lambda": lambda_suite,
    "properties": properties_suite,
}


def run_suite(name: str, limits: Optional[VerifyLimits] = None) -> List[CheckResult]:
    limits = limits or VerifyLimits()
    names = list(SUITES) if name == "all" else [name]
    results: List[CheckResult] = []
    for suite in names:
        logger.info(f"Running verification suite '{suite}' with {limits}")
        results.extend(SUITES[suite](limits))
    return results
