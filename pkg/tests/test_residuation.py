"""Residuated operations odot / arrow and their axioms.

Operator values are cross-checked pair-by-pair against the set-based
oracle; the adjointness case counts and the fig6 adjointness failure are
frozen pins.
"""

import itertools

import pytest

from kleene_posets import (DomainError, ResiduatedStructure, check_condition7,
                           figure)
from kleene_posets.involution import InvolutivePoset

from oracles import RefInvolutive

BOUNDED_FIGS = ["fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"]


def ref_of(ip):
    p = ip.base
    covers = [(p.labels[a], p.labels[b]) for a, b in p.covers()]
    prime = {ip.labels[i]: ip.labels[ip.inv[i]] for i in range(ip.n)}
    return RefInvolutive.build(list(p.labels), covers, prime)


@pytest.mark.parametrize("name", BOUNDED_FIGS)
def test_operator_tables_match_oracle(name):
    ip = figure(name)
    r = ResiduatedStructure(ip)
    ref = ref_of(ip)
    for x, y in itertools.product(range(ip.n), repeat=2):
        lx, ly = ip.labels[x], ip.labels[y]
        assert set(r.odot(x, y).labels) == ref.odot(lx, ly), (lx, ly)
        assert set(r.arrow(x, y).labels) == ref.arrow(lx, ly), (lx, ly)


def test_fig7_pinned_values():
    ip = figure("fig7")
    r = ResiduatedStructure(ip)
    assert set(r.arrow(ip.index("b"), ip.index("a")).labels) == \
        {"b'", "a'", "1"}
    assert r.odot(ip.index("0"), ip.index("1")).labels == ("0",)
    assert r.arrow(ip.index("0"), ip.index("0")).labels == ("1",)


def test_fig7_all_axioms_and_case_counts():
    r = ResiduatedStructure(figure("fig7"))
    rep = r.verify_kleene_residuated()
    assert rep.zero_absorbing.ok
    assert rep.commutativity.ok
    assert rep.unit.ok
    assert rep.associativity.ok
    assert rep.adjointness.ok
    assert rep.all_ok
    assert dict(rep.case_counts) == \
        {1: 652, 2: 468, 3: 468, 4: 116, 5: 156, 6: 91, 7: 793}
    assert sum(rep.case_counts.values()) == 14 ** 3


def test_all_seven_cases_hit_on_fig7():
    r = ResiduatedStructure(figure("fig7"))
    seen = {r.adjointness_case(a, b, c)
            for a, b, c in itertools.product(range(14), repeat=3)}
    assert seen == {1, 2, 3, 4, 5, 6, 7}


def test_fig6_condition7_holds_but_adjointness_fails():
    ip = figure("fig6")
    r = ResiduatedStructure(ip)
    assert r.check_condition7().ok
    assert check_condition7(ip).ok
    rep = r.verify_kleene_residuated()
    assert not rep.adjointness.ok
    assert rep.adjointness.witness == \
        (ip.index("c"), ip.index("c"), ip.index("d"))
    assert rep.adjointness.detail == \
        "(c, c, d): c odot c = {0, a, b, c} !<= d but c <= c -> d = {b', a', 1}"


def test_strict_figures_fully_residuated():
    """Strictness is sufficient for the adjoint pair; fig1 (Kleene,
    non-strict) happens to satisfy it as well."""
    for name in ("fig4", "fig7", "fig1"):
        rep = ResiduatedStructure(figure(name)).verify_kleene_residuated()
        assert rep.all_ok, name


def test_adjointness_can_fail_without_strictness():
    """fig5 is a Kleene algebra but not strict, and adjointness fails;
    fig2/fig3 are only pseudo-Kleene and fail as well."""
    ip = figure("fig5")
    rep = ResiduatedStructure(ip).verify_kleene_residuated()
    assert not rep.adjointness.ok
    assert rep.adjointness.witness == \
        (ip.index("c"), ip.index("b'"), ip.index("a"))
    assert rep.adjointness.detail == \
        "(c, b', a): c odot b' = {0, a, b, c} !<= a but c <= b' -> a = {c, b', a', 1}"
    for name in ("fig2", "fig3"):
        rep = ResiduatedStructure(figure(name)).verify_kleene_residuated()
        assert not rep.all_ok, name


def test_theorem54_tiers_fig7():
    r = ResiduatedStructure(figure("fig7"))
    t = r.theorem54_checks()
    assert set(t.items) == {"i", "ii", "iii", "iv", "v"}
    for key, item in t.items.items():
        assert item.status == "pass", key
    assert t.items["i"].tier == "bounded antitone involution"
    assert t.items["iii"].tier == "condition (7)"
    assert t.items["v"].tier == "strict Kleene"
    assert t.condition7.ok
    assert t.strict_kleene
    assert not t.violations


def test_theorem54_tier_gating():
    """fig1 satisfies the base-tier dualities; the strict-Kleene tier is
    skipped because fig1 is not strict."""
    t = ResiduatedStructure(figure("fig1")).theorem54_checks()
    assert t.items["i"].status == "pass"
    assert t.items["ii"].status == "pass"
    assert t.items["v"].status == "skipped"
    assert not t.strict_kleene


def test_condition7_fails_where_atoms_meet_at_zero():
    ip = figure("fig1")  # L(a, b) = {0} with a, b nonzero
    v = ResiduatedStructure(ip).check_condition7()
    assert not v.ok


def test_zero_absorbing_everywhere():
    for name in BOUNDED_FIGS:
        assert ResiduatedStructure(figure(name)).check_zero_absorbing().ok


def test_odot_sets_and_empty_family_flag():
    ip = figure("fig4")
    r = ResiduatedStructure(ip)
    full, flagged = r.odot_sets_flagged([], ["a"])
    assert flagged
    assert full.labels == ip.labels
    got, flagged = r.odot_sets_flagged(["b"], ["b'"])
    assert not flagged
    assert set(got.labels) == set(r.odot(ip.index("b"), ip.index("b'")).labels)


def test_requires_bounds():
    with pytest.raises(DomainError):
        ResiduatedStructure(figure("fig9"))
    with pytest.raises(DomainError):
        check_condition7(figure("fig9"))


def test_requires_involutive_poset():
    with pytest.raises(DomainError):
        ResiduatedStructure(figure("fig8"))
