import io
import json

import pytest

from chabauty_rz import run_cli
from chabauty_rz.suites import UnknownSuite, run_suite


def run(argv):
    out = io.StringIO()
    code = run_cli(argv, out=out)
    return code, out.getvalue()


class TestClassify:
    def test_generators(self):
        code, out = run(["classify", "gen[(1/2,0),(1/3,0)]"])
        assert code == 0
        assert out.strip() == "I(alpha=6)"

    def test_canonicalizes(self):
        code, out = run(["classify", "III(alpha=1,beta=7/2,n=-1)"])
        assert code == 0
        assert out.strip() == "III(alpha=1,beta=1/2,n=1)"

    def test_parse_error_exit_code(self):
        code, _ = run(["classify", "V(n=1)"])
        assert code == 2

    def test_domain_error_exit_code(self):
        code, _ = run(["classify", "I(alpha=-2)"])
        assert code == 1


class TestDist:
    def test_bracket_contains_hand_value(self):
        code, out = run(["dist", "I(alpha=inf)", "IV(n=1)", "--tol", "1/1000"])
        assert code == 0
        lo, hi = out.strip().strip("[]").split(",")
        assert eval_frac(lo) <= 1 <= eval_frac(hi)

    def test_symmetry(self):
        a = run(["dist", "I(alpha=1)", "I(alpha=2)"])
        b = run(["dist", "I(alpha=2)", "I(alpha=1)"])
        assert a == b


def eval_frac(text):
    from fractions import Fraction

    return Fraction(text)


class TestLimit:
    def test_sequence_file(self, tmp_path):
        seq = tmp_path / "seq.txt"
        seq.write_text(
            "# escape to the basepoint\n"
            "II(gamma=8,n=1)\n"
            "II(gamma=16,n=1)\n"
            "II(gamma=32,n=1)\n"
            "II(gamma=64,n=1)\n",
            encoding="utf-8",
        )
        code, out = run(
            ["limit", "--seq", str(seq), "--limit", "I(alpha=0)",
             "--tol", "1/10", "--tail", "2"]
        )
        assert code == 0
        assert "result pass" in out

    def test_failing_limit(self, tmp_path):
        seq = tmp_path / "seq.txt"
        seq.write_text("II(gamma=1,n=1)\n", encoding="utf-8")
        code, out = run(
            ["limit", "--seq", str(seq), "--limit", "I(alpha=0)",
             "--tol", "1/10", "--tail", "1"]
        )
        assert code == 1
        assert "result fail" in out

    def test_missing_file(self):
        code, _ = run(["limit", "--seq", "/no/such/file", "--limit", "I(alpha=0)"])
        assert code == 1


class TestModel:
    def test_texts(self):
        assert run(["model", "I(alpha=3)"]) == (0, "segment(alpha=3)\n")
        assert run(["model", "I(alpha=0)"]) == (0, "earring(basepoint)\n")
        assert run(["model", "II(gamma=3/2,n=6)"]) == (
            0,
            "earring(circle=6,t=1/4)\n",
        )
        assert run(["model", "III(alpha=2,beta=1/3,n=2)"]) == (
            0,
            "cone(k=2,alpha=2,beta=1/3)\n",
        )
        assert run(["model", "IV(n=2)"]) == (0, "cone(k=2,alpha=inf,beta=0)\n")


class TestWind:
    def test_exact(self):
        assert run(["wind", "--cone", "2", "--circle", "6"]) == (0, "2\n")
        assert run(["wind", "--cone", "2", "--circle", "5"]) == (0, "0\n")

    def test_sampled(self):
        code, out = run(
            ["wind", "--cone", "2", "--circle", "4", "--sampled",
             "--grid", "1024", "--prec", "64"]
        )
        assert (code, out) == (0, "1\n")

    def test_domain_error(self):
        code, _ = run(["wind", "--cone", "0", "--circle", "3"])
        assert code == 1


class TestVerify:
    def test_text_report(self):
        code, out = run(
            ["verify", "--suite", "winding", "--seed", "3", "--budget", "1"]
        )
        assert code == 0
        assert out.startswith("suite winding seed 3")
        assert "result pass" in out

    def test_json_schema(self):
        code, out = run(
            ["verify", "--suite", "equivalence", "--seed", "5", "--budget", "10",
             "--json"]
        )
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"suite", "seed", "pass", "cases"}
        assert doc["suite"] == "equivalence"
        assert doc["seed"] == 5
        assert doc["pass"] is True
        for case in doc["cases"]:
            assert set(case) == {"id", "pass", "detail"}

    def test_unknown_suite(self):
        code, _ = run(["verify", "--suite", "nope"])
        assert code == 1


class TestPlot:
    def test_svg_output(self, tmp_path):
        out_path = tmp_path / "model.svg"
        code, _ = run(["plot", "--out", str(out_path), "--circles", "4",
                       "--cones", "3"])
        assert code == 0
        svg = out_path.read_text(encoding="utf-8")
        assert svg.startswith("<?xml")
        assert 'version="1.1"' in svg
        assert svg.count("<circle") == 5  # 4 earring circles + basepoint dot
        assert "stroke-dasharray" in svg


class TestUsage:
    def test_usage_error(self):
        code, _ = run(["dist", "I(alpha=1)"])  # missing second literal
        assert code == 2

    def test_determinism(self):
        a = run(["verify", "--suite", "metric", "--seed", "11", "--budget", "3"])
        b = run(["verify", "--suite", "metric", "--seed", "11", "--budget", "3"])
        assert a == b


class TestSuiteApi:
    def test_unknown_suite_raises(self):
        with pytest.raises(UnknownSuite):
            run_suite("nope", 0, 1)

    def test_budget_validation(self):
        with pytest.raises(ValueError):
            run_suite("metric", 0, 0)

    def test_all_suites_pass_at_small_budget(self):
        for name in ("classification", "metric", "charts", "winding",
                     "equivalence"):
            report = run_suite(name, 2, 8)
            assert report.passed, report.to_text()

    def test_convergence_suite_small_k(self):
        report = run_suite("convergence", 0, 16)
        assert len(report.cases) == 6
        for case in report.cases:
            assert "k=16" in case.detail
