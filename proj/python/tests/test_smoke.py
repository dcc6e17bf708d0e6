import json
import os
import subprocess
from fractions import Fraction

import pytest

import kintree


def r_reference(letters):
    r = Fraction(1)
    for i, c in enumerate(letters, start=1):
        r += Fraction(1 if c == "R" else -1, 2**i)
    return r


def test_strings_and_parents():
    s = kintree.LRString("LLRR")
    assert s.runs == [0, 2, 2]
    assert str(s.parent_left()) == "LLR"
    assert str(s.parent_right()) == "L"
    assert str(kintree.LRString("LR").parent_close()) == "L"
    assert str(kintree.LRString("LR").parent_distant()) == "e"
    assert str(kintree.LRString().parent_left()) == "R^-1"
    assert kintree.LRString("R^-1").length == -1


def test_metrics_against_reference():
    for m in range(7):
        for s in kintree.level_strings(m):
            letters = "" if m == 0 else str(s)
            assert kintree.r_value(s) == r_reference(letters)
    assert kintree.r_value("RLL") == Fraction(9, 8)
    assert kintree.position("RRR") == 14
    assert kintree.position("L^-1") == Fraction(-1, 2)
    assert str(kintree.LRString.at_position(5)) == "RL"


def test_big_integers_cross_the_boundary():
    huge = 10**40
    s = kintree.LRString.from_runs([huge, 3])
    assert s.runs == [huge, 3]
    assert s.length == huge + 3


def test_continued_fractions():
    assert kintree.cf_value([1, 3]) == Fraction(4, 3)
    assert kintree.cf_of_rational(Fraction(2, 3)) == [0, 1, 2]
    assert kintree.cf_children([1]) == ([0, 2], [2])
    assert kintree.cf_parents([2]) == ([1], [])
    assert str(kintree.cf_to_string([1, 3])) == "RLL"
    assert kintree.enumerate_level("cf", 3) == [
        "[0,4]", "[0,2,2]", "[0,1,1,2]", "[0,1,3]", "[1,3]", "[1,1,2]", "[2,2]", "[4]"]


def test_rational_trees():
    assert kintree.stern_brocot("LR") == Fraction(2, 3)
    assert kintree.calkin_wilf("LR") == Fraction(3, 2)
    assert kintree.stern_brocot("R^-1") == 0
    assert kintree.stern_brocot("L^-1") is None
    assert str(kintree.stern_brocot_locate(Fraction(4, 3))) == "RLL"


def test_simplest_between():
    assert kintree.simplest_between(Fraction(7, 5), Fraction(3, 2)) == Fraction(10, 7)
    assert kintree.simplest_between_cf_formula(Fraction(1, 3), Fraction(2, 3)) == Fraction(1, 2)
    with pytest.raises(kintree.DomainError):
        kintree.simplest_between(2, 1)


def test_errors_are_value_errors():
    with pytest.raises(kintree.ParseError):
        kintree.LRString("LRX")
    with pytest.raises(ValueError):
        kintree.cf_value([1, 1])


def test_sequence_and_verify():
    assert kintree.distant_parent_sequence(5) == [-1, 0, -1, 1, 1]
    report = kintree.verify("table1")
    assert report["passed"] and report["cases"] == 22
    assert not kintree.verify("best_approx", 4)["passed"]
    assert "simplest" in kintree.suite_names()


@pytest.mark.skipif("KINTREE_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_json():
    out = subprocess.run([os.environ["KINTREE_CLI"], "verify", "table1", "--json"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["cases"] == 22
