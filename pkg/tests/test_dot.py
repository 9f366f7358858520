"""DOT rendering: byte-stable digraphs of covers plus involution edges."""

from kleene_posets import (UsageError, dedekind_macneille, figure, to_dot,
                           twist)
import pytest


def test_plain_poset_dot():
    got = to_dot(figure("fig8"))
    assert got == (
        'digraph "poset" {\n'
        "  rankdir=BT;\n"
        "  node [shape=circle];\n"
        '  "0";\n'
        '  "a";\n'
        '  "b";\n'
        '  "c";\n'
        '  "0" -> "a";\n'
        '  "a" -> "b";\n'
        '  "a" -> "c";\n'
        "}\n"
    )


def test_involutive_dot_has_dashed_pair_edges():
    got = to_dot(figure("fig1"), graph_name="g")
    assert got.startswith('digraph "g" {')
    assert '"0" -> "1" [dir=none, style=dashed, constraint=false];' in got
    assert '"a" -> "a\'" [dir=none, style=dashed, constraint=false];' in got
    # each pair appears once (i < inv[i] orientation only)
    assert got.count("style=dashed") == 3


def test_fixed_points_get_no_self_edge():
    got = to_dot(figure("fig5"))
    assert '"c" -> "c"' not in got
    assert got.count("style=dashed") == 3  # 0:1, a:a', b:b'


def test_completion_and_twist_render():
    dm = dedekind_macneille(figure("fig1"))
    got = to_dot(dm, graph_name="completion")
    assert '"{0,a,b}"' in got
    assert "style=dashed" in got  # inherited star involution
    t = twist(figure("fig8"), "a")
    got = to_dot(t)
    assert '"(a,a)"' in got


def test_byte_stability():
    assert to_dot(figure("fig6")) == to_dot(figure("fig6"))


def test_rejects_unknown_objects():
    with pytest.raises(UsageError):
        to_dot(42)
