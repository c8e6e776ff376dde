import json
from pathlib import Path

import pytest

from gkzmono import (
    Configuration,
    IntMatrix,
    UnsupportedFormat,
    export,
    hypergeometric_system,
    parse_toric_system,
)

DATA = Path(__file__).parent / "data"

QUADRIC = Configuration(IntMatrix([[1, 1, 1], [0, 1, 2]]))


@pytest.fixture(scope="module")
def quadric_system():
    return hypergeometric_system(QUADRIC, ["1/2", "1"])


@pytest.fixture(scope="module")
def complex_system():
    return hypergeometric_system(QUADRIC, [{"re": "1/2", "im": "1/3"}, "1"])


class TestJson:
    def test_round_trip(self, quadric_system):
        assert parse_toric_system(export(quadric_system, "json")) == quadric_system

    def test_round_trip_complex(self, complex_system):
        assert parse_toric_system(export(complex_system, "json")) == complex_system

    def test_payload_shape(self, quadric_system):
        payload = json.loads(export(quadric_system, "json"))
        assert payload["nvars"] == 3
        assert payload["saturated"] is True
        assert payload["euler"][0]["shift"] == "-1/2"
        assert payload["binomials"] == [{"plus": [1, 0, 1], "minus": [0, 2, 0]}]

    def test_golden(self, quadric_system):
        assert export(quadric_system, "json") == (DATA / "quadric.json").read_text()


class TestScripts:
    @pytest.mark.parametrize(
        "fmt,golden",
        [
            ("macaulay2", "quadric.m2"),
            ("singular", "quadric.sing"),
        ],
    )
    def test_golden_files(self, quadric_system, fmt, golden):
        assert export(quadric_system, fmt) == (DATA / golden).read_text()

    @pytest.mark.parametrize(
        "fmt,golden",
        [
            ("macaulay2", "quadric_complex.m2"),
            ("singular", "quadric_complex.sing"),
        ],
    )
    def test_complex_golden_files(self, complex_system, fmt, golden):
        assert export(complex_system, fmt) == (DATA / golden).read_text()

    def test_byte_stable_across_runs(self):
        a = export(hypergeometric_system(QUADRIC, ["1/2", "1"]), "macaulay2")
        b = export(hypergeometric_system(QUADRIC, ["1/2", "1"]), "macaulay2")
        assert a == b

    def test_euler_only_scripts(self):
        system = hypergeometric_system(
            Configuration(IntMatrix.identity(2)), ["1/3", "-2"]
        )
        m2 = export(system, "macaulay2")
        assert "T_" not in m2
        assert "E_1 = x_1*dx_1-1/3;" in m2
        assert "E_2 = x_2*dx_2+2;" in m2
        sing = export(system, "singular")
        assert "ideal H = x(1)*d(1)-1/3,x(2)*d(2)+2;" in sing

    def test_complex_scripts_declare_i(self, complex_system):
        assert "QQ[ii]/(ii^2+1)" in export(complex_system, "macaulay2")
        assert "minpoly = i^2+1;" in export(complex_system, "singular")


class TestErrors:
    def test_unsupported_format(self, quadric_system):
        with pytest.raises(UnsupportedFormat):
            export(quadric_system, "maple")

    def test_parse_rejects_garbage(self):
        from gkzmono import InputError

        with pytest.raises(InputError):
            parse_toric_system("not json")
        with pytest.raises(InputError):
            parse_toric_system('{"euler": []}')
