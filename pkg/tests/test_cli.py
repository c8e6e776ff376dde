import json

import pytest

from gkzmono.cli import run


@pytest.fixture
def capture(capsys):
    def invoke(argv):
        code = run(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


QUADRIC_ARG = "[[1,1,1],[0,1,2]]"


class TestCommands:
    def test_classify_json(self, capture):
        code, out, _ = capture(["classify", "-A", QUADRIC_ARG, "-b", "1/2,1", "--json"])
        assert code == 0
        report = json.loads(out)
        assert report["verdict"] == "Reducible"
        assert report["centers"] == [[1], [3]]

    def test_classify_human(self, capture):
        code, out, _ = capture(["classify", "-A", QUADRIC_ARG, "-b", "1/2,1"])
        assert code == 0
        assert "verdict: Reducible" in out
        assert "centers: {1}, {3}" in out

    def test_volume_prints_the_number(self, capture):
        code, out, _ = capture(["volume", "-A", QUADRIC_ARG])
        assert code == 0
        assert out.strip() == "2"

    def test_volume_json_has_certificate(self, capture):
        code, out, _ = capture(["volume", "-A", QUADRIC_ARG, "--json"])
        report = json.loads(out)
        assert report["volume"] == 2
        assert len(report["triangulation"]) == 2

    def test_faces_lists_all(self, capture):
        code, out, _ = capture(["faces", "-A", "[[1,0],[0,1]]"])
        assert code == 0
        assert len(out.strip().splitlines()) == 4

    def test_faces_methods_agree(self, capture):
        _, brute, _ = capture(
            ["faces", "-A", QUADRIC_ARG, "--faces-method", "brute", "--json"]
        )
        _, dd, _ = capture(["faces", "-A", QUADRIC_ARG, "--faces-method", "dd", "--json"])
        assert json.loads(brute) == json.loads(dd)

    def test_centers(self, capture):
        code, out, _ = capture(
            ["centers", "-A", QUADRIC_ARG, "-b", "1/2,1", "--json"]
        )
        report = json.loads(out)
        assert [c["indices"] for c in report["centers"]] == [[1], [3]]
        assert report["is_nonresonant"] is False

    def test_kernel(self, capture):
        code, out, _ = capture(["kernel", "-A", QUADRIC_ARG])
        assert out.strip() == "(1,-2,1)"

    def test_reduce(self, capture):
        code, out, _ = capture(["reduce", "-A", "[[2,0],[0,1]]", "-b", "1,1/3", "--json"])
        report = json.loads(out)
        assert report["A"] == [[1, 0], [0, 1]]
        assert report["beta"] == ["1/2", "1/3"]
        assert report["B"] == [[2, 0], [0, 1]]

    def test_toric_ideal(self, capture):
        code, out, _ = capture(["toric-ideal", "-A", "[[1,1,1,1],[0,1,2,3]]"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "d1*d3 - d2^2"
        assert len(lines) == 4  # three binomials plus the saturated flag

    def test_arrangement(self, capture):
        code, out, _ = capture(["arrangement", "-A", QUADRIC_ARG])
        assert "2*b1 - b2 in Z" in out

    def test_export_formats(self, capture):
        for fmt, marker in (
            ("macaulay2", "makeWeylAlgebra"),
            ("singular", "LIB \"nctools.lib\";"),
            ("json", '"nvars": 3'),
        ):
            code, out, _ = capture(
                ["export", "-A", QUADRIC_ARG, "-b", "1/2,1", "--format", fmt]
            )
            assert code == 0
            assert marker in out

    def test_input_file(self, capture, tmp_path):
        payload = {"A": [[1, 1, 1], [0, 1, 2]], "beta": ["1/2", "1"]}
        path = tmp_path / "job.json"
        path.write_text(json.dumps(payload))
        code, out, _ = capture(["classify", "--input", str(path), "--json"])
        assert code == 0
        assert json.loads(out)["verdict"] == "Reducible"

    def test_matrix_from_at_file(self, capture, tmp_path):
        path = tmp_path / "A.json"
        path.write_text(QUADRIC_ARG)
        code, out, _ = capture(["volume", "-A", f"@{path}"])
        assert out.strip() == "2"

    def test_complex_beta_json_literal(self, capture):
        code, out, _ = capture(
            [
                "classify",
                "-A",
                QUADRIC_ARG,
                "-b",
                '["1/2", {"re": "0", "im": "1"}]',
                "--json",
            ]
        )
        assert code == 0
        json.loads(out)


class TestExitCodes:
    def test_invalid_matrix_json(self, capture):
        code, _, err = capture(["classify", "-A", "[[1,1", "-b", "1"])
        assert code == 1 and err

    def test_beta_arity(self, capture):
        assert capture(["classify", "-A", QUADRIC_ARG, "-b", "1/2"])[0] == 1

    def test_float_beta_rejected(self, capture):
        assert capture(["classify", "-A", QUADRIC_ARG, "-b", "0.5,1"])[0] == 1

    def test_missing_matrix(self, capture):
        assert capture(["volume"])[0] == 1

    def test_missing_beta(self, capture):
        assert capture(["classify", "-A", QUADRIC_ARG])[0] == 1

    def test_beta_outside_span(self, capture):
        assert capture(["classify", "-A", "[[1,1],[2,2]]", "-b", "1,0"])[0] == 1

    def test_unknown_command(self, capture):
        assert capture(["frobnicate"])[0] == 1

    def test_scale_limit(self, capture):
        code, _, err = capture(
            ["toric-ideal", "-A", "[[1,1,1,1],[0,1,2,3]]", "--max-steps", "2"]
        )
        assert code == 2 and "scale limit" in err

    def test_missing_input_file(self, capture):
        assert capture(["volume", "--input", "/nonexistent/job.json"])[0] == 1

    def test_non_integer_matrix(self, capture):
        assert capture(["volume", "-A", "[[1.5, 2]]"])[0] == 1

    def test_exit_code_mapping_for_internal_errors(self):
        # reach the handler directly: a stubbed command raising the error
        from gkzmono import cli
        from gkzmono.errors import InternalInconsistency

        original = cli.reduce_configuration

        def boom(*args, **kwargs):
            raise InternalInconsistency("synthetic")

        cli.reduce_configuration = boom
        try:
            assert cli.run(["volume", "-A", "[[1]]"]) == 3
        finally:
            cli.reduce_configuration = original


class TestJsonStability:
    def test_reports_parse_back(self, capture):
        for argv in (
            ["classify", "-A", QUADRIC_ARG, "-b", "1/2,1", "--json"],
            ["centers", "-A", QUADRIC_ARG, "-b", "0,0", "--json"],
            ["faces", "-A", QUADRIC_ARG, "--json"],
            ["volume", "-A", QUADRIC_ARG, "--json"],
            ["arrangement", "-A", QUADRIC_ARG, "--json"],
        ):
            code, out, _ = capture(argv)
            assert code == 0
            json.loads(out)

    def test_same_report_powers_both_renderings(self, capture):
        _, json_out, _ = capture(["classify", "-A", QUADRIC_ARG, "-b", "1/2,1", "--json"])
        _, human_out, _ = capture(["classify", "-A", QUADRIC_ARG, "-b", "1/2,1"])
        report = json.loads(json_out)
        assert f"generic rank: {report['generic_rank']}" in human_out
