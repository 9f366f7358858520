#!/usr/bin/env python3
"""Build a twist structure and refute the printed distributivity claim.

The twist of a poset Q at a pivot a collects the pairs (x, y) with
L(x,y) <= {a} <= U(x,y), orders them by (x,y) <= (z,v) iff x <= z and
v <= y, and carries the swap involution (x,y)' = (y,x).  It is always
pseudo-Kleene with unique fixed point (a,a), and the source embeds via
x -> (x,a).

Claim Thm-6.1-iii asserts the twist is Kleene exactly when the source
is distributive.  That is false: exhaustive search refutes it, and the
smallest counterexample is the two-element antichain.  fig8/fig9 in the
corpus are a larger instance of the same failure.  Run as
``python3 demos/03_twist_and_refutation.py``.
"""

from kleene_posets import audit, classify, figure, twist, twist_embedding
from kleene_posets.enumeration import replay_report


def main():
    q = figure("fig8")
    print(f"source fig8: {q.n} elements, "
          f"distributive = {q.is_distributive().ok}, "
          f"lattice = {q.is_lattice().ok}")
    t = twist(q, "a")
    print(f"twist at a: {t.n} pairs")
    c = classify(t.result)
    print(f"twist classifies as: {c.summary}")
    print(f"fixed points: {list(c.fixed_points)}")
    print(f"matches bundled fig9: "
          f"{t.result.isomorphic_to(figure('fig9')) is not None}")

    emb = twist_embedding(t)
    print("embedding of the source:")
    for x, i in sorted(emb.items()):
        print(f"  {q.labels[x]:3s} -> {t.result.labels[i]}")

    print(f"\nsource distributive but twist Kleene = {c.kleene.ok}:")
    print(f"  {c.kleene.detail}")

    print("\nauditing claim Thm-6.1-iii over all posets with up to 4 "
          "elements:")
    report = audit("Thm-6.1-iii", n_bound=4, collect_all=True)
    print(f"  verdict: {report.verdict} "
          f"({len(report.witnesses)} witnesses)")
    first = report.witnesses[0]
    print(f"  smallest witness: elements {first['elements']}, "
          f"covers {first['covers']} (the 2-antichain)")
    print(f"  detail: {first['binding']['detail']}")
    print(f"  replay reproduces every witness: {replay_report(report)}")


if __name__ == "__main__":
    main()
