import pytest
from pydantic import ValidationError

from src import verify
from src.gfsolver import GfTable, solve
from src.records import CheckResult, OutputRecord, render_table, table_rows
from src.settings import Settings
from src.verify import VerifyLimits, printed_system_residuals, run_suite


def assert_all_pass(results):
    assert results
    failed = [r.line() for r in results if not r.passed]
    assert not failed, failed


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_printed_systems_hold_at_the_fixed_point(d, m):
    residuals = printed_system_residuals(solve(m, d, 12), m)
    assert len(residuals) == {1: 2, 2: 4, 3: 7}[d]
    assert all(r.is_zero() for r in residuals.values())


def test_printed_system_catches_a_perturbed_table():
    G = solve(2, 2, 6)
    entries = {key: G[key] for key in G}
    entries[(1, 1)] = entries[(1, 1)] + 1
    bad = GfTable(2, 2, entries)
    residuals = printed_system_residuals(bad, 2)
    assert not all(r.is_zero() for r in residuals.values())


def test_symmetry_suite():
    assert_all_pass(run_suite("symmetry", VerifyLimits(d=3, n_max=4)))


def test_lambda_suite_small():
    assert_all_pass(run_suite("lambda", VerifyLimits(n_max=3)))


def test_bijection_suite_small():
    assert_all_pass(run_suite("bijection", VerifyLimits(d=2, n_max=5, m_max=2)))


def test_gf_suite_small():
    results = run_suite("gf", VerifyLimits(d=2, n_max=6, m_max=2, order=8))
    assert_all_pass(results)
    names = " ".join(r.name for r in results)
    assert "printed system" in names
    assert "prime-path recurrence" in names


def test_properties_suite_small():
    assert_all_pass(run_suite("properties", VerifyLimits(d=2, m_max=3, n_max=8)))


def test_algebraic_suite_small():
    assert_all_pass(run_suite("algebraic", VerifyLimits(d=1, order=15)))


def test_failed_check_is_reported(monkeypatch):
    monkeypatch.setattr(verify, "has_lambda_oracle", lambda P: True)
    results = run_suite("lambda", VerifyLimits(d=1, n_max=2))
    assert [r.passed for r in results] == [False]
    assert results[0].line().startswith("FAIL [lambda]")


@pytest.mark.slow
def test_every_suite_on_default_grids():
    assert_all_pass(run_suite("all"))


def test_records():
    record = OutputRecord.from_counts(1, 1, "gf", [1, 1, 2])
    assert record.to_json() == '{"m":1,"d":1,"order":2,"method":"gf","coefficients":["1","1","2"]}'
    assert record.to_csv() == "c0,c1,c2\n1,1,2\n"
    rows = table_rows([[1, 1, 2, 4], [1, 1, 1, 2]], 3)
    assert render_table(rows, 3, "csv") == "m,1,2,3\n1,1,2,4\n2,1,1,2\n"
    assert CheckResult(suite="gf", name="x", passed=True).line() == "PASS [gf] x"


def test_settings_validation():
    settings = Settings()
    assert settings.max_concurrent_tasks == 4
    assert settings.make_executor() is None
    with pytest.raises(ValidationError):
        Settings(max_concurrent_tasks=0)
    with pytest.raises(ValidationError):
        Settings(log_level="LOUD")
    with pytest.raises(ValidationError):
        VerifyLimits(d=0)
