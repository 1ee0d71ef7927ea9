"""Conditional-term machinery: basic forms and the short-circuit bridge.

Basic forms are conditional terms of the shape ``T | F | p <| a |> q`` with
basic branches; they are in structural bijection with evaluation trees.
``basic_form`` computes a derivably-equal basic form by the compose
recursion on the guard; ``basic_of(eval_tree(p))`` is kept as an
independent route to the same result.  ``scl_to_cp`` eliminates the
short-circuit connectives in favour of the conditional.
"""

from __future__ import annotations

from .errors import ModeViolation, NonClosedTerm, TreeTooLarge
from .terms import (
    FALSE,
    TRUE,
    And,
    Atom,
    Cond,
    Const,
    FullAnd,
    FullOr,
    Not,
    Or,
    Term,
    Var,
)
from .trees import DEFAULT_NODE_CAP, Leaf, Node, Tree


def is_basic_form(t: Term) -> bool:
    """True iff ``t`` is T, F, or a conditional over an atom with basic branches."""
    match t:
        case Const(_):
            return True
        case Cond(a, Atom(_), b):
            return is_basic_form(a) and is_basic_form(b)
        case _:
            return False


def tree_of(t: Term) -> Tree:
    """The evaluation tree a basic form denotes (a structural re-labelling)."""
    match t:
        case Const(v):
            return Leaf.TRUE if v else Leaf.FALSE
        case Cond(a, Atom(name), b):
            return Node(name, tree_of(a), tree_of(b))
        case _:
            raise ModeViolation(f"not a basic form: {t}")


def basic_of(x: Tree) -> Term:
    """The basic form denoting a given evaluation tree (inverse of tree_of)."""
    if x is Leaf.TRUE:
        return TRUE
    if x is Leaf.FALSE:
        return FALSE
    if x is Leaf.HOLE:
        raise ModeViolation("hole leaves have no basic form")
    return Cond(basic_of(x.left), Atom(x.atom), basic_of(x.right))


def basic_form(t: Term, cap: int | None = DEFAULT_NODE_CAP) -> Term:
    """A basic form equal to the closed conditional term ``t``.

    Computed by recursion on the guard of each conditional: a constant
    guard selects a branch, and a composite guard distributes the branches
    over its own two branches.  The result's tree equals ``eval_tree(t)``.
    """
    match t:
        case Const(_):
            return t
        case Atom(_):
            return Cond(TRUE, t, FALSE)
        case Var(name):
            raise NonClosedTerm(f"cannot take the basic form of open term: ${name}")
        case Cond(a, g, b):
            result = _compose(
                basic_form(a, cap), basic_form(g, cap), basic_form(b, cap), cap
            )
            return result
        case Not(_) | And(_, _) | Or(_, _) | FullAnd(_, _) | FullOr(_, _):
            raise ModeViolation(
                f"{type(t).__name__} is not a conditional node; translate first"
            )
        case _:  # pragma: no cover
            raise TypeError(f"not a term: {t!r}")


def _compose(p: Term, q: Term, r: Term, cap: int | None) -> Term:
    """Basic form of ``p <| q |> r`` for basic ``p``, ``q``, ``r``."""
    if q == TRUE:
        return p
    if q == FALSE:
        return r
    result = Cond(_compose(p, q.then, r, cap), q.guard, _compose(p, q.orelse, r, cap))
    if cap is not None and result.node_count > cap:
        raise TreeTooLarge(f"basic form exceeds the node cap of {cap}")
    return result


def scl_to_cp(t: Term) -> Term:
    """Eliminate !, &&, and || in favour of the conditional, bottom-up.

    Negation becomes ``F <| p |> T``, conjunction ``q <| p |> F``, and
    disjunction ``T <| p |> q``; the evaluation tree is unchanged.
    """
    match t:
        case Const(_) | Atom(_):
            return t
        case Var(name):
            raise NonClosedTerm(f"cannot translate open term: ${name}")
        case Not(p):
            return Cond(FALSE, scl_to_cp(p), TRUE)
        case And(l, r):
            return Cond(scl_to_cp(r), scl_to_cp(l), FALSE)
        case Or(l, r):
            return Cond(TRUE, scl_to_cp(l), scl_to_cp(r))
        case Cond(a, g, b):
            a2, g2, b2 = scl_to_cp(a), scl_to_cp(g), scl_to_cp(b)
            return t if a2 is a and g2 is g and b2 is b else Cond(a2, g2, b2)
        case FullAnd(_, _) | FullOr(_, _):
            raise ModeViolation(
                "full-sequential connectives must be expanded before translation"
            )
        case _:  # pragma: no cover
            raise TypeError(f"not a term: {t!r}")


def decide_eq_cp(p: Term, q: Term, cap: int | None = DEFAULT_NODE_CAP) -> bool:
    """Decide tree equality of two closed enriched terms via basic forms."""
    return basic_form(scl_to_cp(p), cap) == basic_form(scl_to_cp(q), cap)
