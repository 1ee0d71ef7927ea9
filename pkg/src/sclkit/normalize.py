"""Normal-form grammar classification and the normalization function family.

The normal form has three top-level shapes: T-terms (evaluation always ends
true), F-terms (always false), and conjunctions of a T-term with a *-term
(both outcomes reachable).  *-terms are left-associated combinations of
literal units ("l-terms"); the c/d categories track whether the topmost
combination is a conjunction or a disjunction.

``nf`` rewrites any closed short-circuit term into this form while keeping
its evaluation tree unchanged.  The negation and conjunction helpers are
exposed so each defining clause is unit-testable; they reject inputs
outside their grammar category with NotInNormalForm.
"""

from __future__ import annotations

from enum import Enum

from .errors import ModeViolation, NonClosedTerm, NotInNormalForm, TreeTooLarge
from .terms import (
    FALSE,
    TRUE,
    And,
    Atom,
    Const,
    Not,
    Or,
    Term,
    Var,
)
from .trees import DEFAULT_NODE_CAP, eval_tree


class SnfClass(Enum):
    T_TERM = "T-term"
    F_TERM = "F-term"
    L_TERM = "l-term"
    C_TERM = "c-term"
    D_TERM = "d-term"
    STAR_TERM = "star-term"
    T_STAR_TERM = "T-star-term"
    NOT_SNF = "not-snf"

    @property
    def label(self) -> str:
        return self.value


_STAR = (SnfClass.L_TERM, SnfClass.C_TERM, SnfClass.D_TERM)
_SNF = (SnfClass.T_TERM, SnfClass.F_TERM, SnfClass.T_STAR_TERM)


def is_star_class(c: SnfClass) -> bool:
    """L-, c-, and d-terms are all *-terms."""
    return c in _STAR


def in_normal_form(c: SnfClass) -> bool:
    return c in _SNF


def classify(t: Term) -> SnfClass:
    """Most specific grammar category of ``t``; NOT_SNF if none matches.

    Every term in normal form is a T-term, an F-term, or a T-*-term at top
    level; the finer *-term categories classify the left/right parts.  The
    category is cached on the node, so repeated dispatch during
    normalization stays cheap.
    """
    cached = getattr(t, "_snf_cat", None)
    if cached is not None:
        return cached
    cat = _classify(t)
    object.__setattr__(t, "_snf_cat", cat)
    return cat


def _classify(t: Term) -> SnfClass:
    match t:
        case Const(v):
            return SnfClass.T_TERM if v else SnfClass.F_TERM
        case Or(l, r):
            rc = classify(r)
            match l:
                case And(Atom(), p):
                    if classify(p) is SnfClass.T_TERM:
                        if rc is SnfClass.T_TERM:
                            return SnfClass.T_TERM
                        if rc is SnfClass.F_TERM:
                            return SnfClass.L_TERM
                case And(Not(Atom()), p):
                    if classify(p) is SnfClass.T_TERM and rc is SnfClass.F_TERM:
                        return SnfClass.L_TERM
            # a disjunction of a *-term with a c-term associates to the left
            if is_star_class(classify(l)) and rc in (SnfClass.L_TERM, SnfClass.C_TERM):
                return SnfClass.D_TERM
            return SnfClass.NOT_SNF
        case And(l, r):
            rc = classify(r)
            match l:
                case Or(Atom(), p):
                    if classify(p) is SnfClass.F_TERM and rc is SnfClass.F_TERM:
                        return SnfClass.F_TERM
            lc = classify(l)
            if is_star_class(lc) and rc in (SnfClass.L_TERM, SnfClass.D_TERM):
                return SnfClass.C_TERM
            if lc is SnfClass.T_TERM and is_star_class(rc):
                return SnfClass.T_STAR_TERM
            return SnfClass.NOT_SNF
        case _:
            return SnfClass.NOT_SNF


def _reject(t: Term, expected: str) -> NotInNormalForm:
    return NotInNormalForm(f"expected a {expected}, got {classify(t).label}: {t}")


def nf(t: Term, cap: int | None = DEFAULT_NODE_CAP) -> Term:
    """Normalize a closed short-circuit term, preserving its evaluation tree."""
    return _nf(t, cap)


def _checked(result: Term, cap: int | None) -> Term:
    if cap is not None and result.node_count > cap:
        raise TreeTooLarge(f"normal form exceeds the node cap of {cap}")
    return result


def _nf(t: Term, cap: int | None) -> Term:
    match t:
        case Const(_):
            return t
        case Atom(_):
            return And(TRUE, Or(And(t, TRUE), FALSE))
        case Var(name):
            raise NonClosedTerm(f"cannot normalize open term: ${name}")
        case Not(p):
            return _checked(neg_nf(_nf(p, cap)), cap)
        case And(l, r):
            return _checked(and_nf(_nf(l, cap), _nf(r, cap)), cap)
        case Or(l, r):
            a = neg_nf(_nf(l, cap))
            b = neg_nf(_nf(r, cap))
            return _checked(neg_nf(and_nf(a, b)), cap)
        case _:
            raise ModeViolation(f"cannot normalize {type(t).__name__} nodes")


def neg_nf(t: Term) -> Term:
    """Negate a term in normal form; T-terms and F-terms trade places."""
    match classify(t):
        case SnfClass.T_TERM:
            if t == TRUE:
                return FALSE
            # (a && p) || q  ->  (a || ~q) && ~p
            return And(Or(t.left.left, neg_nf(t.right)), neg_nf(t.left.right))
        case SnfClass.F_TERM:
            if t == FALSE:
                return TRUE
            # (a || p) && q  ->  (a && ~q) || ~p
            return Or(And(t.left.left, neg_nf(t.right)), neg_nf(t.left.right))
        case SnfClass.T_STAR_TERM:
            return And(t.left, neg_star(t.right))
        case _:
            raise _reject(t, "term in normal form")


def neg_star(t: Term) -> Term:
    """Negate a *-term by flipping the literal at the head of each unit."""
    match classify(t):
        case SnfClass.L_TERM:
            head, pt, qf = t.left.left, t.left.right, t.right
            flipped = Not(head) if isinstance(head, Atom) else head.arg
            return Or(And(flipped, neg_nf(qf)), neg_nf(pt))
        case SnfClass.C_TERM:
            return Or(neg_star(t.left), neg_star(t.right))
        case SnfClass.D_TERM:
            return And(neg_star(t.left), neg_star(t.right))
        case _:
            raise _reject(t, "*-term")


def and_nf(p: Term, q: Term) -> Term:
    """Conjoin two terms in normal form into one.

    A T-term first argument leaves the second argument's category
    unchanged; an F-term first argument is returned as-is.
    """
    pc, qc = classify(p), classify(q)
    if not in_normal_form(qc):
        raise _reject(q, "term in normal form")
    match pc:
        case SnfClass.T_TERM:
            if p == TRUE:
                return q
            a, pt, qt = p.left.left, p.left.right, p.right
            if qc is SnfClass.T_TERM:
                return Or(And(a, and_nf(pt, q)), and_nf(qt, q))
            if qc is SnfClass.F_TERM:
                return And(Or(a, and_nf(qt, q)), and_nf(pt, q))
            return And(and_nf(p, q.left), q.right)
        case SnfClass.F_TERM:
            return p
        case SnfClass.T_STAR_TERM:
            if qc is SnfClass.T_TERM:
                return And(p.left, and_star_tterm(p.right, q))
            if qc is SnfClass.F_TERM:
                return and_nf(p.left, and_star_fterm(p.right, q))
            return And(p.left, and_star_tstar(p.right, q))
        case _:
            raise _reject(p, "term in normal form")


def and_star_tterm(s: Term, r: Term) -> Term:
    """Conjoin a *-term with a T-term; the result is again a *-term."""
    if classify(r) is not SnfClass.T_TERM:
        raise _reject(r, "T-term")
    match classify(s):
        case SnfClass.L_TERM:
            # (^a && p) || q  ->  (^a && (p . r)) || q
            return Or(And(s.left.left, and_nf(s.left.right, r)), s.right)
        case SnfClass.C_TERM:
            return And(s.left, and_star_tterm(s.right, r))
        case SnfClass.D_TERM:
            return Or(and_star_tterm(s.left, r), and_star_tterm(s.right, r))
        case _:
            raise _reject(s, "*-term")


def and_star_fterm(s: Term, r: Term) -> Term:
    """Conjoin a *-term with an F-term; the result is an F-term."""
    if classify(r) is not SnfClass.F_TERM:
        raise _reject(r, "F-term")
    match classify(s):
        case SnfClass.L_TERM:
            head, pt, qf = s.left.left, s.left.right, s.right
            if isinstance(head, Atom):
                return And(Or(head, qf), and_nf(pt, r))
            return And(Or(head.arg, and_nf(pt, r)), qf)
        case SnfClass.C_TERM:
            return and_star_fterm(s.left, and_star_fterm(s.right, r))
        case SnfClass.D_TERM:
            return and_star_fterm(
                neg_star(and_star_tterm(s.left, neg_nf(r))),
                and_star_fterm(s.right, r),
            )
        case _:
            raise _reject(s, "*-term")


def and_star_tstar(s: Term, q: Term) -> Term:
    """Conjoin a *-term with a T-*-term; the result is again a *-term."""
    if classify(q) is not SnfClass.T_STAR_TERM:
        raise _reject(q, "T-*-term")
    qt, qs = q.left, q.right
    match classify(qs):
        case SnfClass.L_TERM | SnfClass.D_TERM:
            return And(and_star_tterm(s, qt), qs)
        case SnfClass.C_TERM:
            return And(and_star_tstar(s, And(qt, qs.left)), qs.right)
        case _:  # pragma: no cover - T-*-terms always carry a *-term
            raise _reject(qs, "*-term")


def or_nf(p: Term, q: Term) -> Term:
    """Disjoin two terms in normal form, via negation of the conjunction."""
    return neg_nf(and_nf(neg_nf(p), neg_nf(q)))


def decide_eq(
    p: Term, q: Term, engine: str = "tree", cap: int | None = DEFAULT_NODE_CAP
) -> bool:
    """Decide whether two closed terms have the same evaluation tree.

    Engine ``"tree"`` compares the evaluation trees directly; engine
    ``"nf"`` compares normal forms structurally.  The two agree on every
    closed short-circuit pair.
    """
    if engine == "tree":
        return eval_tree(p, cap) == eval_tree(q, cap)
    if engine == "nf":
        return nf(p, cap) == nf(q, cap)
    raise ValueError(f"unknown engine: {engine!r}")
