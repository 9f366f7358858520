"""Classification ladder: antitone involutions up to Boolean posets.

The matrix of expected classifications was computed independently with
``oracles.py`` (see that module) and frozen here; the oracle is also run
live in ``test_ladder_matches_oracle``.
"""

import itertools

import pytest

from kleene_posets import (InvolutivePoset, Poset, UsageError, classify,
                           figure, involution_from_pairs)

from oracles import RefInvolutive

INV_FIGS = ["fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig9"]


def ref_of(ip):
    p = ip.base
    covers = [(p.labels[a], p.labels[b]) for a, b in p.covers()]
    prime = {ip.labels[i]: ip.labels[ip.inv[i]] for i in range(ip.n)}
    return RefInvolutive.build(list(p.labels), covers, prime)


# verdict flags frozen from the oracle run:
#        (pk, kleene, strong, strict, boolean) -- None = not applicable
MATRIX = {
    "fig1": (True, True, False, False, False),
    "fig2": (True, False, False, False, None),
    "fig3": (True, False, False, False, None),
    "fig4": (True, True, True, True, False),
    "fig5": (True, True, False, False, False),
    "fig6": (True, False, True, False, None),
    "fig7": (True, True, True, True, False),
    "fig9": (True, False, False, None, None),
}

SUMMARY = {
    "fig1": "Kleene poset; not a lattice",
    "fig2": "pseudo-Kleene poset; not a lattice",
    "fig3": "pseudo-Kleene algebra; lattice",
    "fig4": "strict Kleene algebra; lattice",
    "fig5": "Kleene algebra; lattice",
    "fig6": "strong pseudo-Kleene poset; not a lattice",
    "fig7": "strict Kleene poset; not a lattice",
    "fig9": "pseudo-Kleene poset; not a lattice",
}

FIXED = {"fig1": (), "fig2": (), "fig3": (), "fig4": (), "fig5": ("c",),
         "fig6": (), "fig7": (), "fig9": ("(a,a)",)}


@pytest.mark.parametrize("name", INV_FIGS)
def test_frozen_matrix(name):
    c = classify(figure(name))
    pk, kleene, strong, strict, boolean = MATRIX[name]
    assert c.involution.ok
    assert c.pseudo_kleene.ok == pk
    assert c.kleene.ok == kleene
    assert c.strong.ok == strong
    assert (None if c.strict is None else c.strict.ok) == strict
    assert (None if c.boolean is None else c.boolean.ok) == boolean
    assert c.summary == SUMMARY[name]
    assert tuple(c.fixed_points) == FIXED[name]


@pytest.mark.parametrize("name", INV_FIGS)
def test_ladder_matches_oracle(name):
    ip = figure(name)
    ref = ref_of(ip)
    c = classify(ip)
    assert ref.valid_involution()
    assert c.pseudo_kleene.ok == ref.pseudo_kleene()[0]
    assert c.kleene.ok == ref.kleene()[0]
    assert c.strong.ok == ref.strong()[0]
    o_st, _ = ref.strict()
    assert (None if c.strict is None else c.strict.ok) == \
        (None if o_st is None else o_st)
    if c.boolean is not None:
        assert c.boolean.ok == ref.boolean()[0]
    assert list(c.fixed_points) == ref.fixed_points()


def test_ladder_implications():
    """Boolean => strict => strong, Kleene => pseudo-Kleene, on all figures."""
    for name in INV_FIGS:
        c = classify(figure(name))
        if c.kleene.ok:
            assert c.pseudo_kleene.ok
        if c.strict is not None and c.strict.ok:
            assert c.strong.ok
        if c.boolean is not None and c.boolean.ok:
            assert c.strict.ok and c.kleene.ok


# -- specific frozen witnesses ---------------------------------------------

def test_fig2_strong_first_witness():
    v = figure("fig2").is_strong()
    assert not v.ok
    assert v.witness == (1, 2)  # (a, b), the first incomparable pair
    assert v.detail == "a || b but L(a,a') = {0, a} != {0, b} = L(b,b')"


def test_fig1_not_strong():
    assert not classify(figure("fig1")).strong.ok


def test_strict_reason_when_unbounded():
    c = classify(figure("fig9"))
    assert c.strict is None
    assert "unbounded" in c.strict_reason


def test_boolean_reason_when_not_distributive():
    c = classify(figure("fig2"))
    assert c.boolean is None
    assert "not distributive" in c.boolean_reason


def test_at_most_one_fixed_point_on_figures():
    for name in INV_FIGS:
        c = classify(figure(name))
        if c.pseudo_kleene.ok:
            assert len(c.fixed_points) <= 1


# -- involution validity -----------------------------------------------------

def test_invalid_involution_not_total():
    p = Poset.from_covers(["a", "b"], [("a", "b")])
    with pytest.raises(UsageError):
        involution_from_pairs(p.labels, [("a", "a")])


def test_invalid_involution_not_antitone():
    ip = InvolutivePoset.from_covers(
        ["a", "b", "c"], [("a", "b"), ("b", "c")],
        [("a", "a"), ("b", "b"), ("c", "c")])
    v = ip.check_antitone_involution()
    assert not v.ok
    assert "not antitone" in v.detail
    c = classify(ip)
    assert c.summary == "not an antitone involution"
    assert c.pseudo_kleene is None


def test_not_an_involution():
    p = Poset.from_covers(["a", "b", "c"], [])
    with pytest.raises(UsageError):
        involution_from_pairs(p.labels, [("a", "b"), ("b", "c"), ("c", "a")])


def test_prime_and_prime_subset():
    ip = figure("fig1")
    assert ip.labels[ip.prime(ip.index("a"))] == "a'"
    primed = ip.prime_subset(["0", "a"])
    assert set(primed.labels) == {"1", "a'"}


def test_lemma11_cases():
    """Where the preconditions (a <= b, L(b,a') = {bottom}) hold on a
    bounded distributive figure, the conclusion holds; elsewhere the
    helper refuses with DomainError."""
    from kleene_posets import DomainError
    ip = figure("fig1")
    bottom = "0"
    hit = 0
    for a, b in itertools.product(range(ip.n), repeat=2):
        applicable = (ip.leq(a, b) and
                      ip.lower_cone([b, ip.prime(a)]).labels == (bottom,))
        if applicable:
            assert ip.lemma11_holds(a, b).ok
            hit += 1
        else:
            with pytest.raises(DomainError):
                ip.lemma11_holds(a, b)
    assert hit > 0


def test_lemma11_requires_distributive():
    from kleene_posets import DomainError
    with pytest.raises(DomainError):
        figure("fig3").lemma11_holds("0", "0")


def test_isomorphic_to_respects_involution():
    assert figure("fig1").isomorphic_to(figure("fig1")) is not None
    assert figure("fig1").isomorphic_to(figure("fig4")) is None
