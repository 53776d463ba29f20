import pytest

from src import gfsolver
from src.dlupath import enumerate_paths
from src.errors import ConvergenceError, PreconditionError, StackEnumerationError
from src.gfsolver import (
    GAUSS_SEIDEL,
    JACOBI,
    Atom,
    a_expand,
    a_recurrence_residuals,
    a_terms,
    build_system,
    canonical,
    initial_table,
    make_c,
    needed_keys,
    render_system,
    solve,
    stack_gf,
    step_system,
)
from src.series import Series

TABLES = {
    1: [
        [1, 2, 4, 9, 21, 51, 127, 323, 835, 2188],
        [1, 1, 2, 4, 8, 17, 37, 82, 185, 423],
        [1, 1, 1, 2, 4, 8, 16, 33, 69, 146],
        [1, 1, 1, 1, 2, 4, 8, 16, 32, 65],
        [1, 1, 1, 1, 1, 2, 4, 8, 16, 32],
        [1, 1, 1, 1, 1, 1, 2, 4, 8, 16],
    ],
    2: [
        [1, 2, 8, 34, 147, 663, 3096, 14814, 72227, 357591],
        [1, 1, 2, 6, 20, 66, 221, 757, 2647, 9402],
        [1, 1, 1, 2, 6, 18, 54, 162, 491, 1509],
        [1, 1, 1, 1, 2, 6, 18, 52, 150, 434],
        [1, 1, 1, 1, 1, 2, 6, 18, 52, 148],
        [1, 1, 1, 1, 1, 1, 2, 6, 18, 52],
    ],
    3: [
        [1, 2, 8, 48, 312, 2062, 13890, 95558, 669842, 4768645],
        [1, 1, 2, 6, 22, 88, 364, 1534, 6561, 28445],
        [1, 1, 1, 2, 6, 20, 68, 236, 832, 2970],
        [1, 1, 1, 1, 2, 6, 20, 66, 216, 710],
        [1, 1, 1, 1, 1, 2, 6, 20, 66, 214],
        [1, 1, 1, 1, 1, 1, 2, 6, 20, 66],
    ],
}


def test_needed_keys():
    assert needed_keys(1) == [(0, 0), (1, 0)]
    assert needed_keys(2) == [(0, 0), (1, 0), (2, 0), (1, 1)]
    assert needed_keys(3) == [(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (2, 2)]
    assert canonical((0, 2)) == (2, 0)


@pytest.mark.parametrize("m, expected", [(1, [0, 0, 0]), (2, [1, 0, 0]), (4, [1, 1, 1])])
def test_make_c(m, expected):
    assert list(make_c(m, 2)) == expected


def test_a_terms():
    assert a_terms(1, 1) == (Atom(1, (0, 0)), Atom(-1, None))
    assert a_terms(2, 1) == (Atom(1, (1, 0)),)
    assert a_terms(2, 2) == (Atom(1, (1, 1)), Atom(-1, (0, 0)), Atom(1, None))
    assert a_terms(3, 0) == ()
    with pytest.raises(PreconditionError):
        a_terms(1, 2)


def test_a_expand_initial_conditions():
    G = solve(2, 3, 8)
    C = make_c(2, 8)
    assert a_expand(G, 1, 1, C) == G[(0, 0)] - C
    assert a_expand(G, 2, 1, C) == G[(1, 0)]
    assert a_expand(G, 2, 2, C) == C - G[(0, 0)] + G[(1, 1)]
    assert a_expand(G, 3, 0, C).is_zero()


@pytest.mark.parametrize("m, d", [(2, 3), (1, 3), (3, 2), (1, 4)])
def test_prime_path_recurrence(m, d):
    residuals = a_recurrence_residuals(solve(m, d, 20 if (m, d) == (2, 3) else 10), m)
    assert len(residuals) == d + d * (d - 1) // 2
    assert all(r.is_zero() for r in residuals.values())


def test_solve_motzkin():
    assert list(solve(1, 1, 6)[(0, 0)]) == [1, 1, 2, 4, 9, 21, 51]
    assert solve(2, 2, 4)[(0, 0)][4] == 6


def test_solve_order_zero_constant_terms():
    # G<s,s>(0) is 1 only for s = 0, or s = 1 when m = 1
    G = solve(1, 3, 0)
    assert [G[key][0] for key in needed_keys(3)] == [1, 0, 0, 0, 1, 0, 0]
    G = solve(2, 3, 0)
    assert [G[key][0] for key in needed_keys(3)] == [1, 0, 0, 0, 0, 0, 0]


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_stack_gf_reproduces_tables(d, m):
    assert list(stack_gf(m, d, 10)) == [1] + TABLES[d][m - 1]


@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_solved_coefficients_are_nonnegative(d, m):
    G = solve(m, d, 10)
    for key in G:
        assert all(isinstance(c, int) and c >= 0 for c in G[key]), key


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_components_match_brute_force_paths(d, m):
    G = solve(m, d, 4)
    for s, t in needed_keys(d):
        assert [G[(s, t)][n] for n in range(5)] == [enumerate_paths(n, d, s, t, m) for n in range(5)]


def test_table_is_symmetric_by_lookup():
    G = solve(1, 3, 5)
    assert G[(0, 2)] is G[(2, 0)]
    assert (1, 2) in G
    assert len(G) == 7
    with pytest.raises(StackEnumerationError):
        G[(3, 3)]


@pytest.mark.parametrize("m, d", [(1, 1), (2, 2), (1, 3), (3, 3)])
def test_jacobi_and_gauss_seidel_reach_the_same_fixed_point(m, d):
    fast = solve(m, d, 8, GAUSS_SEIDEL)
    slow = solve(m, d, 8, JACOBI)
    assert all(fast[key] == slow[key] for key in fast)


def test_step_system_is_a_fixed_point_map():
    G = solve(2, 2, 9)
    for method in (JACOBI, GAUSS_SEIDEL):
        nxt = step_system(G, 2, 2, 9, method)
        assert all(nxt[key] == G[key] for key in G)


def test_one_jacobi_sweep_from_the_start():
    G = step_system(initial_table(1, 1, 3), 1, 1, 3)
    assert list(G[(0, 0)]) == [1, 1, 0, 0]
    assert list(G[(1, 0)]) == [0, 1, 0, 0]
    with pytest.raises(PreconditionError):
        step_system(G, 1, 1, 3, "newton")


def test_convergence_error_when_the_cap_is_too_small(monkeypatch):
    monkeypatch.setattr(gfsolver, "sweep_cap", lambda order, d, method: 1)
    with pytest.raises(ConvergenceError, match="did not stabilize"):
        solve.__wrapped__(1, 2, 6)


def test_build_system_shape():
    assert [eq.key for eq in build_system(3)] == needed_keys(3)
    eq = build_system(2)[3]
    assert eq.key == (1, 1)
    assert eq.linear == a_terms(1, 1)
    assert [len(p.summands) for p in eq.products] == [2, 1]


def test_render_system_d1():
    assert render_system(1) == [
        "G<0,0> = 1 + y*(G<0,0> + G<1,0>)",
        "G<1,0> = y*[(G<0,0> - C)*G<0,0>]",
    ]


def test_render_system_d2():
    assert render_system(2) == [
        "G<0,0> = 1 + y*(G<0,0> + G<1,0> + G<2,0>)",
        "G<1,0> = y*[(G<0,0> - C)*(G<0,0> + G<1,0>) + G<1,0>*G<0,0>]",
        "G<2,0> = y*[G<1,0>*(G<0,0> + G<1,0>) + (G<1,1> - G<0,0> + C)*G<0,0>]",
        "G<1,1> = G<0,0> - C + y*[(G<0,0> - C)*(G<0,1> + G<1,1>) + G<1,0>*G<0,1>]",
    ]


def test_render_system_d3_line_count():
    lines = render_system(3)
    assert len(lines) == 7
    assert lines[-1].startswith("G<2,2> = G<1,1> - G<0,0> + C + y*[")
    assert "(G<0,2> + G<1,2> + G<2,2>)" in lines[-1]


def test_solve_rejects_bad_parameters():
    with pytest.raises(PreconditionError):
        solve(0, 1, 3)
    with pytest.raises(PreconditionError):
        make_c(0, 3)


def test_series_in_y():
    assert isinstance(stack_gf(1, 2, 3), Series)
    assert stack_gf(1, 2, 3).order == 3
