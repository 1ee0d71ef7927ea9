import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from sclkit import (
    Cond,
    Leaf,
    ModeViolation,
    Node,
    NonClosedTerm,
    Not,
    Or,
    And,
    ParseError,
    TreeTooLarge,
    Var,
    depth,
    eval_tree,
    format_tree,
    graft,
    leaf_profile,
    nf,
    parse,
    parse_tree,
    replace,
    substitute,
    tree_from_json,
    tree_to_json,
)
from sclkit.generate import random_scl_term, random_term, random_tree

T, F, H = Leaf.TRUE, Leaf.FALSE, Leaf.HOLE

_trees = st.recursive(
    st.sampled_from([T, F]),
    lambda c: st.tuples(st.sampled_from("ab"), c, c).map(lambda t: Node(*t)),
    max_leaves=16,
)


def test_replace_defining_clauses():
    y, z = Node("a", T, F), Node("b", F, T)
    assert replace(T, y, z) == y
    assert replace(F, y, z) == z
    assert replace(Node("a", T, F), y, z) == Node("a", y, z)


def test_replace_defaults_to_identity():
    x = Node("a", Node("b", T, F), F)
    assert replace(x) is x


def test_replace_swapping_leaves():
    assert replace(parse_tree("(T <a> F)"), F, T) == parse_tree("(F <a> T)")


@settings(max_examples=150)
@given(_trees, _trees, _trees, _trees, _trees)
def test_repeated_replacement_identity(x, y1, z1, y2, z2):
    lhs = replace(replace(x, y1, z1), y2, z2)
    rhs = replace(x, replace(y1, y2, z2), replace(z1, y2, z2))
    assert lhs == rhs


def test_graft():
    filler = Node("b", T, F)
    assert graft(H, filler) == filler
    assert graft(Node("a", H, F), filler) == Node("a", filler, F)
    hole_free = parse_tree("(F <b> T)")
    assert graft(hole_free, filler) is hole_free


@settings(max_examples=100)
@given(st.sampled_from("abc"), _trees, _trees, _trees)
def test_graft_distributes_over_composition(atom, left, right, filler):
    ctx = Node(atom, replace(left, H, F), replace(right, T, H))
    assert graft(ctx, filler) == Node(
        atom, graft(ctx.left, filler), graft(ctx.right, filler)
    )


def test_eval_tree_base_cases():
    assert eval_tree(parse("T")) is T
    assert eval_tree(parse("F")) is F
    assert eval_tree(parse("a")) == parse_tree("(T <a> F)")


def test_eval_tree_examples():
    assert format_tree(eval_tree(parse("!b && a"))) == "(F <b> (T <a> F))"
    assert eval_tree(parse("!(b || !a)")) == eval_tree(parse("!b && a"))


def test_eval_tree_conditional():
    assert eval_tree(parse("F <| a |> T")) == parse_tree("(F <a> T)")
    assert eval_tree(parse("b <| a |> c")) == parse_tree("((T <b> F) <a> (T <c> F))")


def test_eval_tree_agrees_with_conditional_translations():
    rng = random.Random(7)
    for _ in range(300):
        p = random_scl_term(rng, max_depth=5)
        q = random_scl_term(rng, max_depth=5)
        assert eval_tree(Not(p)) == eval_tree(Cond(parse("F"), p, parse("T")))
        assert eval_tree(And(p, q)) == eval_tree(Cond(q, p, parse("F")))
        assert eval_tree(Or(p, q)) == eval_tree(Cond(parse("T"), p, q))


def test_eval_tree_is_a_congruence():
    # equal trees stay equal under every one-hole context
    rng = random.Random(11)
    hole = Var("hole")
    for _ in range(200):
        p = random_scl_term(rng, max_depth=4)
        p_alt = nf(p)  # tree-equal by construction
        context = random_term(rng, max_depth=3, mode="open", variables=("hole",))
        filled = substitute(context, {"hole": p})
        filled_alt = substitute(context, {"hole": p_alt})
        assert eval_tree(p) == eval_tree(p_alt)
        try:
            expected = eval_tree(filled)
        except ModeViolation:  # context may use full connectives
            continue
        assert expected == eval_tree(filled_alt)


def test_depth_and_leaf_profile():
    assert depth(T) == 0
    assert depth(parse_tree("(F <b> (T <a> F))")) == 2
    assert leaf_profile(eval_tree(parse("a || T"))) == (True, False)
    assert leaf_profile(eval_tree(parse("a && F"))) == (False, True)
    assert leaf_profile(eval_tree(parse("a"))) == (True, True)


def test_eval_tree_errors():
    with pytest.raises(NonClosedTerm):
        eval_tree(parse("$x && a", "open"))
    with pytest.raises(ModeViolation):
        eval_tree(parse("a &.& b"))
    with pytest.raises(TreeTooLarge):
        eval_tree(parse("(a || b) && (a || b) && (a || b)"), cap=10)


def test_tree_text_roundtrip():
    rng = random.Random(3)
    for _ in range(200):
        x = random_tree(rng, max_depth=4, hole_prob=0.2)
        assert parse_tree(format_tree(x)) == x


@pytest.mark.parametrize("bad", ["", "(T <a>)", "(T a F)", "T F", "(T <T> F)", "(T <a> F"])
def test_tree_text_errors(bad):
    with pytest.raises(ParseError):
        parse_tree(bad)


def test_tree_json_roundtrip():
    rng = random.Random(4)
    for _ in range(100):
        x = random_tree(rng, max_depth=4, hole_prob=0.2)
        assert tree_from_json(tree_to_json(x)) == x
    assert tree_to_json(Node("a", T, H)) == {
        "node": "a",
        "l": {"leaf": "T"},
        "r": {"leaf": "hole"},
    }
    with pytest.raises(ValueError):
        tree_from_json({"leaf": "hole"}, allow_hole=False)
