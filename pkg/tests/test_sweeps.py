import pytest

from cominuscule import patterns, sweeps
from cominuscule.sweeps import SweepResult


def test_result_line():
    r = SweepResult("demo", checked=3)
    assert r.passed and r.line(timing=False) == "PASS demo: 3 checked, 0 failures"
    r.fail("box (0,1)")
    r.fail("box (1,1)")
    assert not r.passed and r.first == "box (0,1)"
    assert r.line(timing=False).startswith("FAIL demo: 3 checked, 2 failures; first: box (0,1)")
    assert not SweepResult("empty").passed


@pytest.mark.parametrize("name", sorted(sweeps.SWEEPS))
def test_sweeps_pass_small(name):
    res = sweeps.SWEEPS[name](3)
    assert res.passed, res.line()


def test_pattern_sweep_catches_a_broken_predicate(monkeypatch):
    monkeypatch.setattr(patterns, "is_le_A", lambda d: True)
    monkeypatch.setattr(sweeps, "pattern_predicate",
                        lambda d: patterns.is_le_A if d.poset.type_tag == "A" else patterns.pattern_predicate(d))
    res = sweeps.pattern_sweep(3)
    assert not res.passed and res.first is not None


def test_preference_sweep_catches_a_bad_fixture():
    good = sweeps.preference_sweep(3, 3, trace_fixture=None)
    assert good.passed
    bad = sweeps.preference_sweep(3, 3, trace_fixture="D_9\nnot a grid")
    assert not bad.passed


def test_classical_pairs_cover_the_families():
    names = {p.name for p in sweeps.classical_pairs(4)}
    assert {"(A4,2)", "(B4,4)", "(B4,1)", "(D4,4)", "(D4,1)"} <= names
    d_limited = {p.name for p in sweeps.classical_pairs(5, d_max=4)}
    assert "(D5,5)" not in d_limited and "(B5,5)" in d_limited
