#!/usr/bin/env python3
"""Walk the bundled corpus up the classification ladder.

For every bundled structure this prints where it lands on the ladder

    antitone involution -> pseudo-Kleene -> Kleene -> strong / strict

together with lattice/bounds facts and, when a rung fails, the witness
that breaks it.  Run as ``python3 demos/01_classify_corpus.py``.
"""

from kleene_posets import FIGURES, classify, figure
from kleene_posets.involution import InvolutivePoset


def show(name):
    obj = figure(name)
    print(f"== {name} " + "=" * (58 - len(name)))
    if not isinstance(obj, InvolutivePoset):
        p = obj
        bot, top = p.bounds()
        fmt = lambda i: "-" if i is None else p.labels[i]
        print(f"  plain poset on {p.n} elements; no unary map")
        print(f"  lattice: {p.is_lattice().ok};  bounds: "
              f"({fmt(bot)}, {fmt(top)})")
        print(f"  distributive (all four cone forms): "
              f"{p.is_distributive().ok}")
        print()
        return
    c = classify(obj)
    print(f"  summary: {c.summary}")
    print(f"  elements: {obj.n};  fixed points of ': "
          f"{list(c.fixed_points) or 'none'}")
    for rung in ("involution", "pseudo_kleene", "kleene", "strong"):
        v = getattr(c, rung)
        mark = "yes" if v.ok else f"no   ({v.detail})"
        print(f"  {rung.replace('_', '-'):13s} {mark}")
    for rung, reason in (("strict", c.strict_reason),
                         ("boolean", c.boolean_reason)):
        v = getattr(c, rung)
        if v is None:
            print(f"  {rung:13s} n/a  ({reason})")
        else:
            mark = "yes" if v.ok else f"no   ({v.detail})"
            print(f"  {rung:13s} {mark}")
    print()


def main():
    for name in FIGURES:
        show(name)


if __name__ == "__main__":
    main()
