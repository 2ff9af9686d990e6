import os
import pathlib

import pytest

import milnor_gr as mg

FIXTURES = pathlib.Path(os.environ.get("MILNOR_FIXTURES", pathlib.Path(__file__).parents[1] / "fixtures"))


def q2i():
    return mg.Params(p=2, e=2, n=2, a="1")


def test_classify_and_descriptor():
    P = q2i()
    assert P.e0 == 2
    assert [P.threshold(i) for i in range(3)] == [0, 4, 6]
    assert P.classify(3) == ("I", 0, 0)
    assert P.classify(7)[0] == "III"
    d = P.descriptor(4)
    assert d["case"] == "II"
    assert d["tower_level"] == 1


def test_orders_match_frozen_pattern():
    P = q2i()
    assert [P.order_log_p(m) for m in range(1, 8)] == [1, 1, 1, 1, 1, 1, 0]
    assert mg.Params(p=2, r=1, e=2, n=2, a="t1^1").order_log_p(3) is None


def test_reduce_and_symbols():
    P = mg.Params(p=3, r=1, e=2, n=1, q=2, a="1")
    assert P.is_zero(1, "t1^1*dlog[1]", "t1^1")
    assert P.reduce(1, "t1^1*dlog[1]") == ("0", "2*t1^1")
    assert P.symbol("{1+pi^1*(t1^1); t1^1}") == ("t1^1*dlog[1]", "0")
    assert not q2i().is_zero(4, "1")


def test_slices_and_report():
    P = mg.Params(p=2, r=1, e=2, n=2, a="t1^1")
    assert P.slice_log_p(3, window=1) == {"(-1)": 1, "(0)": 1, "(1)": 1}
    text = q2i().report(5)
    assert text.startswith("milnor-gr-report v1\n")
    assert "shape: coker-theta" in text


def test_lemma1():
    assert q2i().lemma1_consistent(5)
    with pytest.raises(mg.MilnorError):
        q2i().lemma1_consistent(4)


def test_verify_q1():
    out = mg.verify_q1(str(FIXTURES / "q2i.txt"))
    assert out["all_match"]
    assert out["total_log_p"] == 6
    assert out["a"] == 1
    assert [row[1] for row in out["rows"][:6]] == [1] * 6
    assert not mg.verify_q1(str(FIXTURES / "q2sqrt2.txt"), n=2)["all_match"]


def test_selftest_and_text():
    results = mg.selftest(seed=7, forms_cases=20, graded_cases=10)
    assert len(results) == 14
    assert all(failures == 0 for _, _, failures in results)
    assert mg.canonical_element(3, 1, 2, "t1^2 + t2 + t1^2") == "t2^1+2*t1^2"
    assert mg.canonical_form(3, 1, 2, "t1^1*t2^1*dlog[2,1]") == "2*t1^1*t2^1*dlog[1,2]"


def test_errors_carry_codes():
    with pytest.raises(mg.MilnorError) as info:
        mg.Params(p=4, e=2, n=1, a="1")
    assert info.value.args[1] == "InvalidParams"
    with pytest.raises(ValueError):
        q2i().descriptor(0)
    with pytest.raises(mg.MilnorError, match="c_n = 6"):
        mg.verify_q1(str(FIXTURES / "q2i.txt"), N=6)
