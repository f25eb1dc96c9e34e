from math import gcd

import pytest

import cdgraph.verify as V
from cdgraph.classes import conjugacy_classes
from cdgraph.constructors import build_group
from cdgraph.group import PermutationGroup
from cdgraph.verify import (
    SuiteConfig,
    check_theorem_A,
    default_pi_sets,
    default_primes,
    find_coprime_pairs,
    replay_witness,
    run_check,
    run_suite,
)

from conftest import grp


def status(spec, check, p=None, pi=None):
    return run_check(grp(spec), check, p=p, pi=pi).status


def test_coprime_pairs():
    pairs = find_coprime_pairs(conjugacy_classes(grp("Alt(4)")))
    assert sorted((pr.class_x.size, pr.class_y.size) for pr in pairs) == [(3, 4), (3, 4)]
    assert find_coprime_pairs(conjugacy_classes(grp("Alt(6)"))) == []
    assert find_coprime_pairs(conjugacy_classes(grp("Cyclic(12)"))) == []


@pytest.mark.parametrize("spec,check,p,expected", [
    ("Sym(4)", "collection_lemma", None, "pass"),
    ("Cyclic(1)", "collection_lemma", None, "pass"),
    ("Alt(4)", "fund_lemma", None, "pass"),
    ("Frobenius(7,3)", "fund_lemma", None, "pass"),
    ("Alt(5)", "fund_lemma", None, "hypothesis_not_met"),
    ("Alt(4)", "is_normal_lemma", None, "pass"),
    ("Alt(6)", "is_normal_lemma", None, "hypothesis_not_met"),
    ("Alt(6)", "theorem_A", None, "pass"),
    ("Sym(5)", "theorem_A", None, "pass"),
    ("Alt(4)", "theorem_A", None, "hypothesis_not_met"),
    ("Alt(5)", "cor_unique_minimal", None, "pass"),
    ("Alt(4)", "theorem_B", None, "pass"),
    ("Sym(3)", "theorem_B", None, "pass"),
    ("Frobenius(7,3)", "theorem_B", None, "pass"),
    ("Alt(4)", "cor_containment", None, "pass"),
    ("Cyclic(6)", "cor_containment", None, "hypothesis_not_met"),
    ("Alt(4)", "theorem_C", None, "pass"),
    ("Cyclic(6)", "theorem_C", None, "hypothesis_not_met"),
    ("Sym(3)", "gamma_structure", 5, "pass"),
    ("Alt(5)", "gamma_structure", 7, "pass"),
    ("Cyclic(6)", "gamma_structure", 2, "pass"),
    ("Alt(4)", "cor_M", 3, "pass"),
    ("Sym(3)", "cor_M", 2, "pass"),
    ("Sym(3)", "cor_5", 5, "pass"),
    ("Direct(Cyclic(5),Sym(3))", "cor_5", 5, "pass"),
    ("Alt(5)", "cor_5", 2, "hypothesis_not_met"),
    ("Frobenius(7,3)", "cor_discon", 2, "pass"),
    ("Sym(3)", "cor_discon", 5, "pass"),
    ("Alt(5)", "cor_discon", 2, "hypothesis_not_met"),
    ("Sym(3)", "cor_two_sizes", 5, "pass"),
    ("Frobenius(7,3)", "cor_two_sizes", 5, "pass"),
    ("Alt(5)", "cor_two_sizes", 7, "hypothesis_not_met"),
    ("File(q8.gens)", "cor_consecutive", 3, "pass"),
    ("Cyclic(6)", "cor_consecutive", 5, "hypothesis_not_met"),
    ("Sym(3)", "cor_consecutive", 5, "pass"),
    ("Cyclic(6)", "prime_power_sizes", 5, "pass"),
    ("File(q8.gens)", "prime_power_sizes", 3, "pass"),
    ("Alt(5)", "prime_power_sizes", 7, "pass"),
    ("Alt(5)", "regular_complete", 7, "pass"),
    ("Alt(4)", "regular_complete", 2, "hypothesis_not_met"),
    ("Sym(3)", "regular_complete", 5, "hypothesis_not_met"),
])
def test_check_examples(spec, check, p, expected):
    assert status(spec, check, p) == expected


def test_theorem_B_orders():
    r = run_check(grp("Alt(4)"), "theorem_B")
    assert r.details["orders_T_A_B"] == [[4, 1, 4], [4, 1, 4]]
    r = run_check(grp("Sym(3)"), "theorem_B")
    assert r.details["orders_T_A_B"] == [[3, 1, 3]]


def test_cor_5_cases():
    r = run_check(grp("Sym(3)"), "cor_5", p=5)
    assert r.details["case"] == "i"
    assert r.details["quasi_frobenius"][0]["kernel"] == 3
    assert r.details["quasi_frobenius"][0]["complement"] == 2
    assert run_check(grp("Frobenius(7,6)"), "cor_5", p=2).details["case"] == "ii"


def test_cor_consecutive_cases():
    assert run_check(grp("File(q8.gens)"), "cor_consecutive", p=3).details["case"] == "ii"
    assert run_check(grp("Sym(3)"), "cor_consecutive", p=5).details["case"] == "iii"


def test_prime_power_shapes():
    d = run_check(grp("File(q8.gens)"), "prime_power_sizes", p=3).details
    assert d["shapes"] == {"i": False, "ii": True, "iii": False}
    assert not run_check(grp("Alt(5)"), "prime_power_sizes", p=7).details["lhs"]


@pytest.mark.parametrize("spec,pi,pairs", [("Frobenius(7,3)", (2,), 4), ("Alt(4)", (2,), 0), ("Sym(3)", (2, 3), 0)])
def test_theorem_D(spec, pi, pairs):
    r = run_check(grp(spec), "theorem_D", pi=pi)
    assert r.status == "pass"
    assert r.details["pi_regular_pairs"] == pairs


def test_fund_lemma_sylow_part_is_gcd():
    # r divides at most one of the sizes for every r exactly when the sizes are coprime
    for spec in ("Alt(4)", "Frobenius(13,4)", "Sym(4)", "Direct(Sym(3),Sym(3))"):
        prof = conjugacy_classes(grp(spec))
        n = grp(spec).order()
        rs = [r for r in range(2, n + 1) if n % r == 0 and all(r % d for d in range(2, r))]
        for a in prof.nontrivial():
            for b in prof.nontrivial():
                sylow = all(a.size % r or b.size % r for r in rs)
                assert sylow == (gcd(a.size, b.size) == 1)


def test_hypothesis_not_met_names_the_hypothesis():
    r = run_check(grp("Alt(4)"), "theorem_A")
    assert r.status == "hypothesis_not_met" and r.hypothesis


def test_failure_carries_replayable_witness():
    A4 = grp("Alt(4)")
    r = check_theorem_A(A4, require_hypothesis=False)
    assert r.status == "fail" and r.witnesses
    assert all(replay_witness(A4, w) is True for w in r.witnesses)


def test_spurious_witness_does_not_replay(monkeypatch):
    A4 = build_group("Alt(4)")
    prof = conjugacy_classes(A4)
    real = V.class_product

    def broken(G, C, D):
        out = real(G, C, D)
        return out + [c for c in prof.classes if c not in out][:1]

    monkeypatch.setattr(V, "class_product", broken)
    r = run_check(A4, "fund_lemma")
    assert r.status == "fail"
    cp = [w for w in r.witnesses if w.get("kind") == "class_product"]
    assert cp and all(replay_witness(A4, w) is False for w in cp)


def test_run_suite_alt4_all_pass_or_vacuous():
    reports = run_suite(grp("Alt(4)"))
    assert {r.status for r in reports} <= {"pass", "hypothesis_not_met"}
    assert len(reports) == len(set((r.check_id, r.p, r.pi) for r in reports))


def test_run_suite_trivial_group():
    reports = run_suite(PermutationGroup([], degree=1, name="Cyclic(1)"))
    assert {r.status for r in reports} <= {"pass", "hypothesis_not_met"}
    assert not any(r.status == "pass" and r.check_id in ("fund_lemma", "theorem_B") for r in reports)


def test_run_suite_alt6_theorem_A():
    reports = run_suite(grp("Alt(6)"), SuiteConfig(checks=["theorem_A"]))
    assert [r.status for r in reports] == ["pass"]


def test_sweeps():
    assert default_primes(grp("Alt(4)")) == [2, 3, 5]
    assert default_primes(grp("Cyclic(1)")) == [2]
    assert sorted(default_pi_sets(grp("Sym(3)"))) == [(), (2,), (2, 3), (3,)]


def test_report_dict_is_stable():
    r = run_check(grp("Sym(3)"), "cor_5", p=5)
    d = r.to_dict()
    assert "timing" not in d
    assert d == run_check(grp("Sym(3)"), "cor_5", p=5).to_dict()


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        run_suite(grp("Sym(3)"), SuiteConfig(checks=["nope"]))


def test_cap_becomes_skipped():
    cfg = SuiteConfig(quotient_cap=1)
    r = run_check(grp("Sym(4)"), "collection_lemma", config=cfg)
    assert r.status in ("pass", "skipped_cap")
