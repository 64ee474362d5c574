import json

import pytest

from hermcodes.verify import (
    Instance,
    check_corollary2,
    check_proposition3,
    check_theorem1,
    run_instance,
    run_suite,
)


def by_clause(verdicts):
    return {v.clause: v for v in verdicts}


def test_minimum_supports_collinear_q2_rho3():
    v = by_clause(check_theorem1(2, 3))
    t = v["T1.i"]
    assert t.m == 1 and t.details["d"] == 3
    assert t.hypotheses_held and t.conclusion_held and t.details["all_m_linked"]


def test_minimum_supports_collinear_q3_rho8():
    v = by_clause(check_theorem1(3, 8))["T1.i"]
    assert v.m == 2 and v.details["d"] == 4 and v.conclusion_held


def test_vacuous_when_distance_is_large():
    # q=3, rho=12: m=2 and d=8 > 3m
    vs = check_theorem1(3, 12)
    assert all(not v.hypotheses_held and v.conclusion_held is None for v in vs)


def test_phase_selection_q3():
    c8 = by_clause(check_corollary2(3, 8))
    assert {"C2.phase3.i", "C2.phase3.ii", "C2.phase3.iii"} <= set(c8)
    assert c8["C2.phase3.i"].m == 2
    c2 = by_clause(check_corollary2(3, 2))
    assert c2["C2.phase1"].conclusion_held
    assert c2["C2.phase1"].details["inclusion_d_minus_2"] is True
    # the boundary rho = q^2 - q - 2 gets both the first and second phase
    c4 = by_clause(check_corollary2(3, 4))
    assert "C2.phase1" in c4 and "C2.phase2.i" in c4


def test_phase_selection_q4():
    # phase selection only; no census needed to see which clauses apply
    inst = Instance(4, 10, w_max=2)
    labels = {v.clause for v in check_corollary2(4, 10, instance=inst)}
    assert {"C2.phase1", "C2.phase2.i"} <= labels
    assert not any(c.startswith("C2.phase3") for c in labels)


def test_heavier_supports_nearly_collinear():
    vs = check_proposition3(3, 4, a_max=1)
    assert [v.clause for v in vs] == ["P3(a=0)", "P3(a=1)"]
    for v in vs:
        assert v.conclusion_held and not v.inconclusive
    assert vs[0].hypotheses_held and not vs[1].hypotheses_held


def test_non_corner_is_vacuous():
    vs = check_proposition3(3, 9, a_max=1)
    assert all(not v.hypotheses_held and v.conclusion_held is None for v in vs)


def test_budget_makes_verdict_inconclusive():
    inst = Instance(3, 8, w_max=4, budget=10**5)
    inst.d  # within budget
    vs = check_proposition3(3, 8, a_max=2, w_budget=10**5, instance=inst)
    assert vs[0].conclusion_held
    assert vs[2].inconclusive and vs[2].conclusion_held is None


def test_empty_grid():
    rep = run_suite([])
    assert rep.ok and rep.to_json()["verdicts"] == []


def test_run_instance_reports_distance():
    info, _ = run_instance(3, 9)
    assert info["distance"]["d_formula"] == 4 and info["distance"]["agrees"] is False
    assert info["d"] == 6


def test_q2_suite_is_clean_and_reproducible():
    a = run_suite([2])
    b = run_suite([2])
    assert a.ok
    assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(b.to_json(), sort_keys=True)
    assert all(v.hypotheses_held is False or v.conclusion_held for v in a.verdicts
               if not v.inconclusive)
