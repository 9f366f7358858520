"""DOT (Graphviz) export of order diagrams.

Cover edges only, drawn bottom-up; a unary involution appears as dashed
undirected edges between paired elements (fixed points get no extra
edge).  Output is byte-stable for a given input.
"""

from __future__ import annotations

from .completion import CompletionLattice
from .errors import UsageError
from .involution import InvolutivePoset
from .poset import Poset
from .twist import TwistPoset


def _quote(name):
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(obj, graph_name="poset"):
    """Render a Poset, InvolutivePoset, CompletionLattice, or TwistPoset."""
    if isinstance(obj, CompletionLattice):
        obj = obj.as_involutive_poset() if obj.has_involution else obj.as_poset()
    if isinstance(obj, TwistPoset):
        obj = obj.result
    if isinstance(obj, InvolutivePoset):
        p = obj.base
        inv = obj.inv
    elif isinstance(obj, Poset):
        p = obj
        inv = None
    else:
        raise UsageError("expected a Poset, InvolutivePoset, "
                         "CompletionLattice, or TwistPoset")
    lines = [f"digraph {_quote(graph_name)} {{", "  rankdir=BT;",
             "  node [shape=circle];"]
    for label in p.labels:
        lines.append(f"  {_quote(label)};")
    for a, b in p.covers():
        lines.append(f"  {_quote(p.labels[a])} -> {_quote(p.labels[b])};")
    if inv is not None:
        for i in range(p.n):
            if i < inv[i]:
                lines.append(f"  {_quote(p.labels[i])} -> {_quote(p.labels[inv[i]])}"
                             " [dir=none, style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
