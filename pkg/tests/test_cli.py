"""Command-line behavior: parsing, serialization, exit codes."""

import csv
import io
import json

import pytest

from legdual.cli import format_complex, main, parse_complex
from legdual.registry import list_identities


class TestComplexLiterals:
    @pytest.mark.parametrize("text,expect", [
        ("1", 1 + 0j),
        ("-1.5", -1.5 + 0j),
        ("0.3+0.2i", 0.3 + 0.2j),
        ("0.3-0.2i", 0.3 - 0.2j),
        ("1e-2-3.5e1i", 0.01 - 35j),
        ("+2.5+0.5i", 2.5 + 0.5j),
    ])
    def test_parses(self, text, expect):
        assert parse_complex(text) == expect

    @pytest.mark.parametrize("text", ["", "i", "1+i", "1 + 2i", "abc", "1+2j", "nan"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_complex(text)

    def test_format_round_trip(self):
        z = 0.1234567890123456 - 9.87654321e-5j
        assert parse_complex(format_complex(z)) == z


class TestEval:
    def test_trivial_value(self, capsys):
        rc = main(["eval", "ferrers", "--nu", "1", "--mu", "0", "--x", "0.6"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert abs(doc["value"][0] - 0.6) < 1e-13
        assert doc["value"][1] == 0.0

    def test_domain_error_exit_one(self, capsys):
        rc = main(["eval", "ferrers", "--nu", "1", "--mu", "0", "--x", "1.5"])
        assert rc == 1
        assert "error" in capsys.readouterr().err


class TestVerify:
    def test_passing_point(self, capsys):
        rc = main(["verify", "thm5.fwd", "--nu", "0.3+0.2i", "--mu", "1.1",
                   "--x", "0.6"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["passed"] is True
        assert doc["params"]["nu"] == [0.3, 0.2]

    def test_integer_parameters(self, capsys):
        assert main(["verify", "cor6", "--k", "3", "--m", "2", "--x", "0.9"]) == 0
        capsys.readouterr()

    def test_out_of_domain_exit_one(self, capsys):
        rc = main(["verify", "cor6", "--k", "3", "--m", "2", "--x", "1.5"])
        assert rc == 1
        capsys.readouterr()

    def test_unknown_id_rejected_before_computation(self, capsys):
        rc = main(["verify", "thm99.zzz", "--nu", "1", "--x", "0.5"])
        assert rc == 1
        assert "unknown identity" in capsys.readouterr().err

    def test_failing_point_exit_two(self, capsys):
        # a slowly converging point the summation cannot resolve in doubles
        # values starting with a minus need the = form so argparse keeps them
        rc = main(["verify", "thm4.inv", "--nu=1.0-0.87i",
                   "--mu=-1.45+0.67i", "--x", "0.35"])
        assert rc == 2
        assert json.loads(capsys.readouterr().out)["passed"] is False


class TestSweepCommand:
    def test_sweep_passes(self, capsys):
        rc = main(["sweep", "thm9.fwd", "--samples", "2", "--format", "text"])
        assert rc == 0
        assert "points pass" in capsys.readouterr().out


class TestConvergenceCommand:
    def test_csv_digits_round_trip(self, capsys):
        rc = main(["convergence", "thm4.inv", "--nu", "0.3", "--mu", "1.2",
                   "--x", "0.5", "--n-max", "6", "--format", "csv"])
        assert rc == 0
        reader = csv.DictReader(io.StringIO(capsys.readouterr().out))
        rows = list(reader)
        assert len(rows) == 7
        for row in rows:
            # 17 significant digits reparse to the same double
            v = float(row["term_mag"])
            assert f"{v:.17g}" == row["term_mag"]


class TestListCommand:
    def test_enumerates_catalog(self, capsys):
        rc = main(["list"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert sorted(d["id"] for d in doc) == sorted(
            d.id for d in list_identities()
        )


class TestAsymptCommand:
    def test_all_checks_pass(self, capsys):
        rc = main(["asympt", "--format", "text"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out


class TestEnvironmentOverride:
    def test_format_from_env(self, capsys, monkeypatch):
        monkeypatch.setenv("LEGDUAL_FORMAT", "text")
        rc = main(["verify", "cor6", "--k", "3", "--m", "2", "--x", "0.9"])
        assert rc == 0
        assert "cor6: pass" in capsys.readouterr().out


class TestOutputFile:
    def test_out_flag(self, capsys, tmp_path):
        path = tmp_path / "v.json"
        rc = main(["verify", "cor6", "--k", "3", "--m", "2", "--x", "0.9",
                   "--out", str(path)])
        assert rc == 0
        assert json.loads(path.read_text())["passed"] is True
        capsys.readouterr()
