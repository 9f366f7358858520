"""Bundled benchmark posets (fig1 .. fig9).

These nine structures exercise every corner of the package: the
classification ladder, the cut completion, directoid assignments,
residuation and the twist construction.  They are also shipped as text
fixtures under ``fixtures/`` for the command line tool; a test pins the
two encodings against each other.

* fig1 -- six-element Kleene poset that is not a lattice
* fig2 -- eight-element pseudo-Kleene poset, neither Kleene nor strong
* fig3 -- eight-element pseudo-Kleene algebra (a lattice), not distributive
* fig4 -- six-element Kleene algebra
* fig5 -- seven-element Kleene poset isomorphic to the completion of fig1
* fig6 -- fourteen-element strong, non-strict pseudo-Kleene poset
* fig7 -- fourteen-element strict Kleene poset (not Boolean, not a lattice)
* fig8 -- four-element plain poset (no involution), distributive
* fig9 -- thirteen-element twist of fig8 at its pivot element a
"""

from __future__ import annotations

from .involution import InvolutivePoset
from .poset import Poset


def _cov(text):
    return [tuple(pair.split("<")) for pair in text.split()]


def _inv(text):
    return [tuple(pair.split(":")) for pair in text.split()]


def fig1():
    return InvolutivePoset.from_covers(
        ["0", "a", "b", "b'", "a'", "1"],
        _cov("0<a 0<b a<b' a<a' b<b' b<a' b'<1 a'<1"),
        _inv("0:1 a:a' b:b'"))


def fig2():
    return InvolutivePoset.from_covers(
        ["0", "a", "b", "c", "c'", "b'", "a'", "1"],
        _cov("0<a 0<b 0<c 0<c' a<b' a<a' b<b' b<a' c<1 c'<1 b'<1 a'<1"),
        _inv("0:1 a:a' b:b' c:c'"))


def fig3():
    return InvolutivePoset.from_covers(
        ["0", "a", "b", "c", "c'", "b'", "a'", "1"],
        _cov("0<a 0<b a<c c<b' a<a' b<c' c'<a' b'<1 a'<1"),
        _inv("0:1 a:a' b:b' c:c'"))


def fig4():
    return InvolutivePoset.from_covers(
        ["0", "a", "b", "b'", "a'", "1"],
        _cov("0<a a<b a<b' b<a' b'<a' a'<1"),
        _inv("0:1 a:a' b:b'"))


def fig5():
    return InvolutivePoset.from_covers(
        ["0", "a", "b", "c", "b'", "a'", "1"],
        _cov("0<a 0<b a<c b<c c<b' c<a' b'<1 a'<1"),
        _inv("0:1 a:a' b:b' c:c"))


def fig6():
    return InvolutivePoset.from_covers(
        ["0", "a", "b", "c", "d", "e", "f", "f'", "e'", "d'", "c'", "b'", "a'", "1"],
        _cov("0<a a<b b<c b<d b<e b<f c<f' c<e' d<f' d<e' e<d' e<c' f<d' f<c' "
             "f'<b' e'<b' d'<b' c'<b' b'<a' a'<1"),
        _inv("0:1 a:a' b:b' c:c' d:d' e:e' f:f'"))


def fig7():
    return InvolutivePoset.from_covers(
        ["0", "a", "b", "c", "d", "e", "f", "f'", "e'", "d'", "c'", "b'", "a'", "1"],
        _cov("0<a a<b a<c a<d a<e b<f b<c' c<f c<b' d<f' d<e' e<f' e<d' "
             "f<e' f<d' f'<c' f'<b' e'<a' d'<a' c'<a' b'<a' a'<1"),
        _inv("0:1 a:a' b:b' c:c' d:d' e:e' f:f'"))


def fig8():
    return Poset.from_covers(["0", "a", "b", "c"], _cov("0<a a<b a<c"))


def fig9():
    labels = ["(0,c)", "(0,b)", "(0,a)", "(a,c)", "(a,b)", "(b,c)", "(c,b)",
              "(a,a)", "(b,a)", "(c,a)", "(a,0)", "(b,0)", "(c,0)"]
    covers = [
        ("(0,c)", "(a,c)"), ("(a,c)", "(b,c)"), ("(b,c)", "(b,a)"), ("(b,a)", "(b,0)"),
        ("(0,b)", "(a,b)"), ("(a,b)", "(c,b)"), ("(c,b)", "(c,a)"), ("(c,a)", "(c,0)"),
        ("(0,c)", "(0,a)"), ("(0,b)", "(0,a)"),
        ("(0,a)", "(a,a)"), ("(a,c)", "(a,a)"), ("(a,b)", "(a,a)"),
        ("(a,a)", "(b,a)"), ("(a,a)", "(c,a)"), ("(a,a)", "(a,0)"),
        ("(a,0)", "(b,0)"), ("(a,0)", "(c,0)"),
    ]
    pairs = [("(0,c)", "(c,0)"), ("(0,b)", "(b,0)"), ("(0,a)", "(a,0)"),
             ("(a,c)", "(c,a)"), ("(a,b)", "(b,a)"), ("(b,c)", "(c,b)"),
             ("(a,a)", "(a,a)")]
    return InvolutivePoset.from_covers(labels, covers, pairs)


FIGURES = {
    "fig1": fig1, "fig2": fig2, "fig3": fig3, "fig4": fig4, "fig5": fig5,
    "fig6": fig6, "fig7": fig7, "fig8": fig8, "fig9": fig9,
}


def figure(name):
    try:
        return FIGURES[name]()
    except KeyError:
        raise KeyError(f"unknown figure {name!r}; known: {sorted(FIGURES)}") from None
