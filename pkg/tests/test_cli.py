import json

import pytest

from main import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def data_row(out, m):
    for line in out.splitlines()[1:]:
        cells = line.split(",")
        if cells[0] == str(m):
            return [int(c) for c in cells[1:]]
    raise AssertionError(f"no row for m={m}")


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "--m", "2", "--d", "2", "--n", "7", "--method", "gf"], "221"),
        (["count", "--m", "1", "--d", "3", "--n", "6", "--method", "brute-stack"], "2062"),
        (["count", "--m", "5", "--d", "1", "--n", "3"], "1"),
        (["count", "--m", "2", "--d", "2", "--n", "6", "--method", "brute-path"], "66"),
    ],
)
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected + "\n"


@pytest.mark.parametrize(
    "d, m, expected",
    [
        (1, 4, [1, 1, 1, 1, 2, 4, 8, 16, 32, 65]),
        (2, 3, [1, 1, 1, 2, 6, 18, 54, 162, 491, 1509]),
        (3, 6, [1, 1, 1, 1, 1, 1, 2, 6, 20, 66]),
    ],
)
def test_table_rows(capsys, d, m, expected):
    code, out, _ = run(capsys, "table", "--d", str(d))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,1,2,3,4,5,6,7,8,9,10"
    assert len(lines) == 7
    assert data_row(out, m) == expected


def test_table_markdown(capsys):
    code, out, _ = run(capsys, "table", "--d", "1", "--m-max", "2", "--n-max", "4", "--format", "markdown")
    assert code == 0
    assert out.splitlines() == [
        "| m | 1 | 2 | 3 | 4 |",
        "|---|---|---|---|---|",
        "| 1 | 1 | 2 | 4 | 9 |",
        "| 2 | 1 | 1 | 2 | 4 |",
    ]


def test_table_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "table", "--d", "2", "--jobs", "3")
    _, second, _ = run(capsys, "table", "--d", "2", "--jobs", "1")
    assert first == second


def test_series_csv(capsys):
    code, out, _ = run(capsys, "series", "--m", "1", "--d", "1", "--order", "5", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["c0,c1,c2,c3,c4,c5", "1,1,2,4,9,21"]


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "--m", "1", "--d", "2", "--order", "6")
    assert code == 0
    record = json.loads(out)
    assert list(record) == ["m", "d", "order", "method", "coefficients"]
    assert record["coefficients"] == ["1", "1", "2", "8", "34", "147", "663"]
    assert record["method"] == "gf"


def test_series_order_zero(capsys):
    _, out, _ = run(capsys, "series", "--m", "2", "--d", "3", "--order", "0")
    assert json.loads(out)["coefficients"] == ["1"]


def test_curves(capsys):
    code, out, _ = run(capsys, "curves")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,d,n,count"
    assert len(lines) == 1 + 2 * 3 * 10
    rows = {tuple(int(v) for v in line.split(",")[:3]): int(line.split(",")[3]) for line in lines[1:]}
    assert rows[(2, 1, 10)] == 423
    assert rows[(5, 3, 10)] == 214
    assert rows[(2, 2, 1)] == 1


def test_system(capsys):
    code, out, _ = run(capsys, "system", "--d", "1")
    assert code == 0
    assert out.splitlines() == [
        "G<0,0> = 1 + y*(G<0,0> + G<1,0>)",
        "G<1,0> = y*[(G<0,0> - C)*G<0,0>]",
    ]


def test_encode_and_decode(capsys):
    code, out, _ = run(capsys, "encode", "--n", "8", "--arcs", "1-3,1-8,3-5,3-8,5-8,6-8", "--d", "4")
    assert code == 0
    assert out.strip() == "LLUU.LLLL.DLUU.LLLL.DLLU.LLLU.LLLL.DDDD"
    code, out, _ = run(capsys, "decode", "--d", "4", "--path", out.strip())
    assert code == 0
    assert out.strip() == "n=8 arcs=(1,3) (1,8) (3,5) (3,8) (5,8) (6,8)"


def test_encode_degree_overflow_is_a_usage_error(capsys):
    code, _, err = run(capsys, "encode", "--n", "3", "--arcs", "1-3,2-3", "--d", "1")
    assert code == 2
    assert "degree exceeds d" in err


def test_encode_crossing_arcs_is_a_usage_error(capsys):
    code, out, err = run(capsys, "encode", "--n", "4", "--arcs", "1-3,2-4", "--d", "1")
    assert code == 2
    assert out == ""
    assert "crossing arcs" in err


@pytest.mark.parametrize("path", ["UU.DD", "DL.UL", "UU.D"])
def test_decode_failures(capsys, path):
    code, _, err = run(capsys, "decode", "--d", "2", "--path", path)
    assert code == 1
    assert err.startswith("error:")


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--m", "0", "--d", "1", "--n", "3"],
        ["count", "--m", "1", "--d", "1", "--n", "3", "--method", "sampling"],
        ["table", "--d", "1", "--format", "xml"],
        ["series", "--m", "1", "--d", "1", "--order", "-1"],
        ["curves", "--m-list", ""],
        ["verify", "--suite", "nothing"],
        ["frobnicate"],
    ],
)
def test_bad_flags_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2


def test_brute_force_warning_goes_to_stderr(capsys):
    code, out, err = run(capsys, "count", "--m", "1", "--d", "5", "--n", "5", "--method", "brute-path")
    assert code == 0
    assert "WARNING" in err
    _, expected, _ = run(capsys, "count", "--m", "1", "--d", "5", "--n", "5")
    assert out == expected


def test_verify_symmetry(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "symmetry", "--d", "3", "--n-max", "4")
    assert code == 0
    assert out.splitlines()[-1] == "3 checks, 0 failed"
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_bijection(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bijection", "--d", "2", "--n-max", "6")
    assert code == 0
    assert "FAIL" not in out


@pytest.mark.slow
def test_verify_algebraic(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "algebraic")
    assert code == 0
    assert out.splitlines()[-1].endswith(" 0 failed")
