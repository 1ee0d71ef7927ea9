import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from sclkit import (
    FALSE,
    TRUE,
    And,
    Atom,
    Cond,
    Equation,
    FullAnd,
    FullOr,
    ModeViolation,
    Not,
    Or,
    UnboundVariable,
    Var,
    dual,
    expand_full,
    parse,
    substitute,
    subterms,
    variables,
)

A, B = Atom("a"), Atom("b")
X, Y, Z = Var("x"), Var("y"), Var("z")


def test_dual_basics():
    assert dual(TRUE) == FALSE
    assert dual(FALSE) == TRUE
    assert dual(A) == A
    assert dual(X) == X
    assert dual(And(And(X, Y), Z)) == Or(Or(X, Y), Z)
    assert dual(Not(A)) == Not(A)


def test_dual_rejects_conditionals():
    with pytest.raises(ModeViolation):
        dual(Cond(A, B, A))


_scl_terms = st.recursive(
    st.one_of(
        st.just(TRUE),
        st.just(FALSE),
        st.sampled_from("abc").map(Atom),
        st.sampled_from("xy").map(Var),
    ),
    lambda c: st.one_of(
        c.map(Not),
        st.tuples(c, c).map(lambda p: And(*p)),
        st.tuples(c, c).map(lambda p: Or(*p)),
        st.tuples(c, c).map(lambda p: FullAnd(*p)),
        st.tuples(c, c).map(lambda p: FullOr(*p)),
    ),
    max_leaves=25,
)


@settings(max_examples=200)
@given(_scl_terms)
def test_dual_is_an_involution(t):
    assert dual(dual(t)) == t


def test_substitute():
    assert substitute(And(X, Y), {"x": A, "y": FALSE}) == And(A, FALSE)
    assert substitute(TRUE, {}) == TRUE
    assert substitute(Or(X, X), {"x": Not(A)}) == Or(Not(A), Not(A))


def test_substitute_missing_variable():
    with pytest.raises(UnboundVariable):
        substitute(And(X, Y), {"x": A})


def test_expand_full_clauses():
    assert expand_full(FullAnd(A, B)) == parse("(a || (b && F)) && b")
    assert expand_full(FullOr(A, B)) == parse("(a && (b || T)) || b")
    assert expand_full(A) == A


def _dag_size(t):
    from sclkit.terms import children

    seen = set()
    stack = [t]
    while stack:
        s = stack.pop()
        if id(s) in seen:
            continue
        seen.add(id(s))
        stack.extend(children(s))
    return len(seen)


@settings(max_examples=150)
@given(_scl_terms)
def test_expand_full_removes_full_nodes_and_stays_linear(t):
    out = expand_full(t)
    assert not any(isinstance(s, (FullAnd, FullOr)) for s in subterms(out))
    assert _dag_size(out) <= 4 * _dag_size(t)


def test_atom_and_variable_name_rules():
    with pytest.raises(ValueError):
        Atom("1bad")
    with pytest.raises(ValueError):
        Atom("T")
    with pytest.raises(ValueError):
        Var("")
    Atom("look_left2")


def test_equation_variables_and_str():
    eq = Equation(And(X, Y), Or(Y, Z), "t")
    assert eq.variables == {"x", "y", "z"}
    assert str(eq) == "$x && $y = $y || $z"


def test_variables_and_closedness():
    assert variables(parse("$x && (a || $y)", "open")) == {"x", "y"}
    assert variables(parse("a && b")) == frozenset()
