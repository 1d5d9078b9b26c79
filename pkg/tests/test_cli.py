import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from lucasnomial import BivariatePolynomial, UnivariatePolynomial
from lucasnomial.cli import main


def run(*args):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(args))
    return code, out.getvalue(), err.getvalue()


def test_lucas_text():
    code, out, _ = run("lucas", "F", "4")
    assert code == 0
    assert out == "s^3 + 2*s*t\n"


def test_lucas_json_round_trips():
    code, out, _ = run("lucas", "factorial", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert BivariatePolynomial.from_json_dict(doc) == BivariatePolynomial.parse(
        "s^6 + 3*s^4*t + 2*s^2*t^2"
    )


def test_lucas_latex():
    code, out, _ = run("lucas", "F", "4", "--format", "latex")
    assert code == 0
    assert out == "s^{3} + 2 s t\n"


def test_lucasnomial_methods_agree():
    outputs = set()
    for method in ("quotient", "rec-fib", "rec-luc"):
        code, out, _ = run("lucasnomial", "4", "2", "--method", method)
        assert code == 0
        outputs.add(out)
    assert outputs == {"s^4 + 3*s^2*t + 2*t^2\n"}


def test_lucasnomial_out_of_range_prints_zero():
    code, out, _ = run("lucasnomial", "4", "5")
    assert code == 0
    assert out == "0\n"


def test_table_text():
    code, out, _ = run("table", "2")
    assert code == 0
    assert out == "1\n1 | 1\n1 | s | 1\n"


def test_table_json():
    code, out, _ = run("table", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 4
    assert BivariatePolynomial.from_json_dict(rows[3][1]) == BivariatePolynomial.parse(
        "s^2 + t"
    )


def test_tilings_with_weights():
    code, out, _ = run("tilings", "linear", "3", "--weights")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    weights = sorted(line.split("\t")[1] for line in lines)
    assert weights == ["s*t", "s*t", "s^3"]


def test_tilings_nolead_1_is_empty():
    code, out, _ = run("tilings", "nolead", "1")
    assert code == 0
    assert out == ""


def test_tilings_circular_marks_wrap():
    code, out, _ = run("tilings", "circular", "3")
    assert code == 0
    assert "(D) M" in out.splitlines()


def test_partitions_with_complement():
    code, out, _ = run("partitions", "1", "1", "--complement")
    assert code == 0
    assert out == "[0]\t[1]\n[1]\t[0]\n"


def test_verify_theorem_passes():
    code, out, _ = run(
        "verify", "theorem", "--m-max", "3", "--n-max", "3", "--mode", "enumerate"
    )
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].startswith("theorem: 32 cases")


def test_verify_lemma1_passes():
    code, out, _ = run("verify", "lemma1", "--m-max", "4", "--n-max", "4")
    assert code == 0
    assert out.splitlines()[-1].startswith("lemma1: 40 cases")


def test_verify_recursions_passes():
    code, out, _ = run("verify", "recursions", "--m-max", "6", "--n-max", "6")
    assert code == 0
    assert out.splitlines()[-1].startswith("recursions:")


def test_verify_json_round_trips():
    code, out, _ = run(
        "verify", "theorem", "--m-max", "2", "--n-max", "2", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["cases_checked"] == 18
    assert doc["failures"] == []


def test_verify_parallel_output_is_identical():
    base = run("verify", "theorem", "--m-max", "3", "--n-max", "2")
    par = run("verify", "theorem", "--m-max", "3", "--n-max", "2", "--parallel")
    assert base == par


def test_identical_invocations_identical_bytes():
    first = run("tilings", "circular", "6", "--weights")
    second = run("tilings", "circular", "6", "--weights")
    assert first == second


def test_verify_failure_exits_1(monkeypatch):
    import lucasnomial.cli as cli_mod
    from lucasnomial.poly import ONE, S
    from lucasnomial.reports import CaseResult, IdentityReport

    def broken(m, n):
        case = CaseResult(("lemma1-F", m, n), f"lemma1 F-sum m={m} n={n}", False, S, ONE)
        return IdentityReport("lemma1", f"m={m}, n={n}", (case,))

    monkeypatch.setattr(cli_mod, "check_lemma1", broken)
    code, out, _ = run("verify", "lemma1", "--m-max", "1", "--n-max", "0")
    assert code == 1
    assert out.splitlines()[0] == "FAIL lemma1 F-sum m=1 n=0"
    assert out.splitlines()[-1].endswith("1 failed")


def test_budget_exceeded_exits_3():
    code, _, err = run(
        "verify", "theorem", "--m-max", "2", "--n-max", "2",
        "--mode", "enumerate", "--budget", "3",
    )
    assert code == 3
    assert "budget" in err


def test_specialize_fibonomial():
    code, out, _ = run("specialize", "5", "2", "--preset", "fibonomial")
    assert code == 0
    assert out == "15\n"


def test_specialize_qbinomial():
    code, out, _ = run("specialize", "3", "1", "--preset", "qbinomial")
    assert code == 0
    assert out == "q^2 + q + 1\n"


def test_specialize_qbinomial_json():
    code, out, _ = run("specialize", "4", "2", "--preset", "qbinomial", "--format", "json")
    assert code == 0
    assert UnivariatePolynomial.from_json_dict(json.loads(out)) == UnivariatePolynomial(
        (1, 1, 2, 1, 1)
    )


def test_specialize_lnomial():
    code, out, _ = run("specialize", "2", "1", "--preset", "lnomial", "--ell", "2")
    assert code == 0
    assert out == "2\n"


def test_specialize_lnomial_requires_ell():
    code, _, err = run("specialize", "2", "1", "--preset", "lnomial")
    assert code == 2
    assert "--ell" in err


def test_specialize_out_of_range_is_usage_error():
    code, _, err = run("specialize", "3", "4", "--preset", "fibonomial")
    assert code == 2
    assert "error" in err


def test_usage_errors_exit_2():
    for argv in (["lucas", "F", "-3"], ["nonsense"], ["tilings", "diagonal", "3"]):
        with pytest.raises(SystemExit) as exc:
            run(*argv)
        assert exc.value.code == 2
