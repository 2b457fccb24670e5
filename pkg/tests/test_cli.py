import json

import pytest

from qchar.cli import (
    UsageError,
    main,
    parse_shape,
    parse_weight,
    parse_window,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestGrammar:
    def test_parse_shape(self):
        shape = parse_shape("2,1:+ / 2:-")
        assert str(shape) == "2,1:+ / 2:-"

    def test_parse_shape_rejects_empty_part(self):
        with pytest.raises(UsageError):
            parse_shape("3,,2:+")

    def test_parse_shape_rejects_bad_sign(self):
        with pytest.raises(UsageError):
            parse_shape("2,1:x")

    def test_parse_window(self):
        assert parse_window("0..6") == (0, 6)
        with pytest.raises(UsageError):
            parse_window("06")

    def test_parse_weight(self):
        assert parse_weight("1:1,2:-1") == {1: 1, 2: -1}
        with pytest.raises(UsageError):
            parse_weight("1=1")


class TestEnumerate:
    def test_std_listing_deterministic(self, capsys):
        args = [
            "enumerate",
            "--shape",
            "1,1:+",
            "--window",
            "1..3",
            "--kind",
            "std",
        ]
        code1, out1 = run(capsys, *args)
        code2, out2 = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        data = json.loads(out1)
        assert [t["row_reading"] for t in data["tableaux"]] == [
            [2, 1],
            [3, 1],
            [3, 2],
        ]

    def test_empty_window_exits_zero(self, capsys):
        code, out = run(
            capsys, "enumerate", "--shape", "2:+", "--window", "3..2", "--format", "text"
        )
        assert code == 0
        assert out == ""

    def test_malformed_shape_is_usage_error(self, capsys):
        code, _ = run(capsys, "enumerate", "--shape", "3,,2:+", "--window", "1..2")
        assert code == 2


class TestDcb:
    def test_tensor_block_matrix(self, capsys):
        code, out = run(
            capsys,
            "dcb",
            "--shape",
            "1,1:+",
            "--window",
            "1..2",
            "--space",
            "t",
            "--weight",
            "1:1,2:1",
        )
        assert code == 0
        blocks = json.loads(out)["blocks"]
        assert len(blocks) == 1
        assert blocks[0]["order"] == [[1, 2], [2, 1]]
        assert [0, 1, [[-1, "1"]]] in blocks[0]["canonical"]

    def test_jobs_do_not_change_output(self, capsys):
        args = ["dcb", "--shape", "1:+ / 1:+", "--window", "1..2", "--space", "s"]
        _, out1 = run(capsys, *args, "--jobs", "1")
        _, out2 = run(capsys, *args, "--jobs", "2")
        assert out1 == out2

    def test_p_space_runs(self, capsys):
        code, out = run(
            capsys, "dcb", "--shape", "1,1:+", "--window", "1..3", "--space", "p"
        )
        assert code == 0
        assert json.loads(out)["space"] == "p"


class TestDecompose:
    def test_rank_one_table(self, capsys):
        code, out = run(
            capsys,
            "decompose",
            "--shape",
            "1:+ / 1:+",
            "--window",
            "1..2",
            "--weight",
            "1:1,2:1",
        )
        assert code == 0
        table = json.loads(out)["tables"][0]
        # order entries serialize component-wise as row lists
        assert table["order"] == [[[[1]], [[2]]], [[[2]], [[1]]]]
        # Delta_in_L sparse entries [i, j, value]
        assert [0, 1, 1] in table["Delta_in_L"]
        assert [0, 0, 1] in table["Delta_in_L"]
        assert [1, 1, 1] in table["Delta_in_L"]

    def test_csv_format(self, capsys):
        code, out = run(
            capsys,
            "decompose",
            "--shape",
            "1:+ / 1:+",
            "--window",
            "1..2",
            "--weight",
            "1:1,2:1",
            "--format",
            "csv",
        )
        assert code == 0
        assert out.splitlines()[0] == ",1 / 2,2 / 1"


class TestVerify:
    def test_all_suites_pass(self, capsys):
        code, out = run(capsys, "verify", "--suite", "all")
        assert code == 0
        lines = out.strip().splitlines()
        assert all(line.startswith("PASS") for line in lines)
        assert len(lines) == 6

    def test_single_suite(self, capsys):
        code, out = run(capsys, "verify", "--suite", "theoremC")
        assert code == 0
        assert out.strip() == "PASS theoremC"


class TestReport:
    SHAPE = "3,3,1:+ / 4,2:+ / 2:- / 3,1:-"

    def test_g0_line(self, capsys):
        code, out = run(capsys, "report", "--shape", self.SHAPE, "--format", "text")
        assert code == 0
        assert "g(0) = gl_{5|3}⊕gl_{4|2}⊕gl_{3|1}⊕gl_1" in out.splitlines()

    def test_other_sign_sequence(self, capsys):
        code, out = run(
            capsys,
            "report",
            "--shape",
            "3,3,1:+ / 4,2:- / 2:+ / 3,1:-",
            "--format",
            "text",
        )
        assert code == 0
        assert "g(0) = gl_{4|4}⊕gl_{3|3}⊕gl_{2|2}⊕gl_1" in out.splitlines()

    def test_json_report(self, capsys):
        code, out = run(capsys, "report", "--shape", self.SHAPE, "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["g0"] == ["gl_{5|3}", "gl_{4|2}", "gl_{3|1}", "gl_1"]

    def test_bad_theta_is_usage_error(self, capsys):
        code, _ = run(
            capsys, "report", "--shape", self.SHAPE, "--theta", "0,1,2,x"
        )
        assert code == 2

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        code, out = run(
            capsys, "report", "--shape", self.SHAPE, "--out", str(path)
        )
        assert code == 0
        assert out == ""
        assert json.loads(path.read_text())["shape"] == self.SHAPE
