"""Tree coordinate tests, cross-checked against an independent string model.

The model: pick an anchor on the spine M levels below o and address
every vertex by its absolute climb string from the anchor (labels as
characters).  Then o is '0'*M, the meet of two vertices is their
longest common prefix, and distances are string-length differences.
This exercises exactly the same tree without sharing any code with the
(m, path) representation.
"""

import itertools

import pytest

from dlstar import (
    ORIGIN,
    TreeVertex,
    VertexSyntax,
    canonical_paths,
    canonicalize,
    format_tree,
    is_canonical,
    pair_stats,
    parse_tree,
    step_down,
    step_up,
    tree_distance,
)


def all_strings(q, max_len):
    for n in range(max_len + 1):
        for t in itertools.product("0123456789"[:q], repeat=n):
            yield "".join(t)


def string_to_vertex(s, anchor_depth):
    leading = len(s) - len(s.lstrip("0"))
    k = min(leading, anchor_depth)
    return TreeVertex(anchor_depth - k, tuple(int(c) for c in s[k:]))


def string_stats(sx, sy):
    lcp = 0
    for a, b in zip(sx, sy):
        if a != b:
            break
        lcp += 1
    return len(sx) - lcp, len(sy) - lcp


@pytest.mark.parametrize("q,anchor,max_len", [(2, 3, 6), (3, 2, 4)])
def test_pair_stats_matches_string_model(q, anchor, max_len):
    strings = list(all_strings(q, max_len))
    verts = [string_to_vertex(s, anchor) for s in strings]
    for v in verts:
        assert is_canonical(v)
    n = 0
    for (sx, x), (sy, y) in itertools.product(zip(strings, verts), repeat=2):
        assert pair_stats(x, y) == string_stats(sx, sy)
        n += 1
    assert n == len(strings) ** 2


@pytest.mark.parametrize("q,anchor,max_len", [(2, 3, 5)])
def test_steps_match_string_model(q, anchor, max_len):
    for s in all_strings(q, max_len):
        v = string_to_vertex(s, anchor)
        for a in range(q):
            assert step_up(v, a, q) == string_to_vertex(s + str(a), anchor)
        if s:
            assert step_down(v) == string_to_vertex(s[:-1], anchor)


def test_canonicalize_cases():
    assert canonicalize(TreeVertex(3, (0, 0, 1, 0))) == TreeVertex(1, (1, 0))
    assert canonicalize(TreeVertex(2, (0, 0))) == ORIGIN
    assert canonicalize(TreeVertex(1, (0, 0))) == TreeVertex(0, (0,))
    assert canonicalize(TreeVertex(0, (0, 1))) == TreeVertex(0, (0, 1))
    assert canonicalize(TreeVertex(5, ())) == TreeVertex(5, ())


def test_canonicalize_validation():
    with pytest.raises(ValueError):
        canonicalize(TreeVertex(-1, ()))
    with pytest.raises(ValueError):
        canonicalize(TreeVertex(0, (2,)), q=2)
    with pytest.raises(ValueError):
        canonicalize(TreeVertex(0, (-1,)))


def test_step_cases():
    assert step_up(TreeVertex(2, ()), 0) == TreeVertex(1, ())
    assert step_up(ORIGIN, 0) == TreeVertex(0, (0,))
    assert step_up(TreeVertex(1, (1,)), 0) == TreeVertex(1, (1, 0))
    with pytest.raises(ValueError):
        step_up(ORIGIN, 2, q=2)
    assert step_down(TreeVertex(0, (1, 0))) == TreeVertex(0, (1,))
    assert step_down(ORIGIN) == TreeVertex(1, ())
    assert step_down(TreeVertex(2, ())) == TreeVertex(3, ())


def test_height_and_length():
    v = TreeVertex(2, (1, 0, 1))
    assert v.l == 3 and v.m == 2 and v.h == 1
    assert ORIGIN.h == 0


def test_pair_stats_branch_cases():
    # equal spine depth: shared climb prefix cancels
    assert pair_stats(TreeVertex(0, (1, 0)), TreeVertex(0, (1, 1))) == (1, 1)
    # x branches higher than y
    assert pair_stats(TreeVertex(1, (1,)), TreeVertex(2, ())) == (2, 0)
    # x branches lower than y
    assert pair_stats(TreeVertex(2, ()), TreeVertex(0, (1,))) == (0, 3)
    # argument order matters: stats are measured from x then from y
    v = TreeVertex(2, (1,))
    assert pair_stats(ORIGIN, v) == (2, 1)
    assert pair_stats(v, ORIGIN) == (1, 2)
    assert tree_distance(ORIGIN, v) == tree_distance(v, ORIGIN) == 3


def test_pair_stats_rejects_non_canonical():
    with pytest.raises(ValueError):
        pair_stats(TreeVertex(1, (0,)), ORIGIN)
    with pytest.raises(ValueError):
        pair_stats(ORIGIN, TreeVertex(2, (0, 1)))


def test_canonical_paths_counts():
    assert list(canonical_paths(0, 2)) == [()]
    threes = list(canonical_paths(3, 2))
    assert len(threes) == 4 and all(p[0] == 1 for p in threes)
    assert len(list(canonical_paths(2, 3))) == 6
    assert len(set(canonical_paths(4, 3))) == 2 * 27


def test_format_parse_round_trip():
    for v in (ORIGIN, TreeVertex(2, ()), TreeVertex(0, (1,)), TreeVertex(3, (1, 0, 2))):
        assert parse_tree(format_tree(v)) == v
    assert format_tree(TreeVertex(2, (1, 0))) == "2:1,0"
    assert parse_tree("0:") == ORIGIN


def test_parse_keeps_raw_form():
    # canonicalization is the caller's job, so rewrites stay observable
    assert parse_tree("2:0,1") == TreeVertex(2, (0, 1))


def test_parse_errors_carry_positions():
    with pytest.raises(VertexSyntax) as e:
        parse_tree("1")
    assert e.value.position == 0
    with pytest.raises(VertexSyntax) as e:
        parse_tree("a:1")
    assert e.value.position == 0
    with pytest.raises(VertexSyntax) as e:
        parse_tree("2:1,x")
    assert e.value.position == 4
    with pytest.raises(VertexSyntax) as e:
        parse_tree("2:1,x", offset=10)
    assert e.value.position == 14
    with pytest.raises(VertexSyntax) as e:
        parse_tree("2:1,,1")
    assert e.value.position == 4
    # unicode digits pass str.isdigit but are not valid labels
    with pytest.raises(VertexSyntax):
        parse_tree("²:1")
