"""Evaluation trees and the short-circuit evaluation of closed terms.

A tree is a finite binary tree over atoms whose leaves are T or F; the left
branch of a node is taken when its atom evaluates to true.  Trees used as
decomposition contexts may additionally carry hole leaves (``^``).  Nodes
cache size, depth, leaf flags, and a structural hash, so those queries and
structural comparisons stay cheap on shared subtrees; ``size`` counts the
logical tree, not the shared object graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

from .errors import ModeViolation, NonClosedTerm, ParseError, TreeTooLarge
from .terms import And, Atom, Cond, Const, FullAnd, FullOr, Not, Or, Term, Var

DEFAULT_NODE_CAP = 1_000_000


class Tree:
    """Base class for tree nodes."""

    def __str__(self) -> str:
        return format_tree(self)


class Leaf(Tree, Enum):
    TRUE = "T"
    FALSE = "F"
    HOLE = "^"

    @property
    def size(self) -> int:
        return 1

    @property
    def depth(self) -> int:
        return 0

    @property
    def has_true(self) -> bool:
        return self is Leaf.TRUE

    @property
    def has_false(self) -> bool:
        return self is Leaf.FALSE

    @property
    def has_hole(self) -> bool:
        return self is Leaf.HOLE

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class Node(Tree):
    atom: str
    left: Tree
    right: Tree

    def __post_init__(self):
        l, r = self.left, self.right
        object.__setattr__(self, "size", 1 + l.size + r.size)
        object.__setattr__(self, "depth", 1 + max(l.depth, r.depth))
        object.__setattr__(self, "has_true", l.has_true or r.has_true)
        object.__setattr__(self, "has_false", l.has_false or r.has_false)
        object.__setattr__(self, "has_hole", l.has_hole or r.has_hole)
        object.__setattr__(self, "_h", hash((self.atom, hash(l), hash(r))))

    def __hash__(self) -> int:
        return self._h

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, Node)
            and self._h == other._h
            and self.atom == other.atom
            and self.left == other.left
            and self.right == other.right
        )


class LeafProfile(NamedTuple):
    has_true: bool
    has_false: bool


def depth(x: Tree) -> int:
    return x.depth


def leaf_profile(x: Tree) -> LeafProfile:
    """Report which of the two truth-value leaves occur in ``x``."""
    return LeafProfile(x.has_true, x.has_false)


def subtrees(x: Tree) -> Iterator[Tree]:
    """Yield every subtree of ``x`` in preorder (including ``x`` itself)."""
    stack = [x]
    while stack:
        s = stack.pop()
        yield s
        if isinstance(s, Node):
            stack.append(s.right)
            stack.append(s.left)


def _node(atom: str, left: Tree, right: Tree, cap: int | None) -> Node:
    node = Node(atom, left, right)
    if cap is not None and node.size > cap:
        raise TreeTooLarge(f"tree exceeds the node cap of {cap}")
    return node


def replace(
    x: Tree,
    for_true: Tree = Leaf.TRUE,
    for_false: Tree = Leaf.FALSE,
    cap: int | None = None,
) -> Tree:
    """Substitute trees for the T- and F-leaves of ``x``.

    Omitted arguments default to the identity replacement.  Hole leaves are
    untouched.  Subtrees in which nothing changes are reused as-is.
    """
    if x is Leaf.TRUE:
        return for_true
    if x is Leaf.FALSE:
        return for_false
    if x is Leaf.HOLE:
        return x
    if (for_true is Leaf.TRUE or not x.has_true) and (
        for_false is Leaf.FALSE or not x.has_false
    ):
        return x
    left = replace(x.left, for_true, for_false, cap)
    right = replace(x.right, for_true, for_false, cap)
    if left is x.left and right is x.right:
        return x
    return _node(x.atom, left, right, cap)


def graft(context: Tree, filler: Tree, cap: int | None = None) -> Tree:
    """Replace every hole leaf of ``context`` with ``filler``."""
    if context is Leaf.HOLE:
        return filler
    if not context.has_hole:
        return context
    left = graft(context.left, filler, cap)
    right = graft(context.right, filler, cap)
    return _node(context.atom, left, right, cap)


def eval_tree(term: Term, cap: int | None = DEFAULT_NODE_CAP) -> Tree:
    """Map a closed term to the tree of all its sequential evaluations.

    An atom becomes a single node with leaves T and F; negation swaps the
    leaves; ``p && q`` continues into ``q`` at the T-leaves of ``p``;
    ``p || q`` continues at the F-leaves; ``x <| y |> z`` continues from
    ``y`` into ``x`` at T-leaves and ``z`` at F-leaves.
    """
    match term:
        case Const(v):
            return Leaf.TRUE if v else Leaf.FALSE
        case Atom(name):
            return _node(name, Leaf.TRUE, Leaf.FALSE, cap)
        case Var(name):
            raise NonClosedTerm(f"cannot evaluate open term: ${name}")
        case Not(p):
            return replace(eval_tree(p, cap), Leaf.FALSE, Leaf.TRUE, cap)
        case And(l, r):
            return replace(eval_tree(l, cap), for_true=eval_tree(r, cap), cap=cap)
        case Or(l, r):
            return replace(eval_tree(l, cap), for_false=eval_tree(r, cap), cap=cap)
        case Cond(a, g, b):
            return replace(
                eval_tree(g, cap), eval_tree(a, cap), eval_tree(b, cap), cap
            )
        case FullAnd(_, _) | FullOr(_, _):
            raise ModeViolation(
                "full-sequential connectives must be expanded before evaluation"
            )
        case _:  # pragma: no cover
            raise TypeError(f"not a term: {term!r}")


def format_tree(x: Tree) -> str:
    """Render ``x`` in the canonical text form ``(left <atom> right)``."""
    if isinstance(x, Leaf):
        return x.value
    return f"({format_tree(x.left)} <{x.atom}> {format_tree(x.right)})"


def parse_tree(text: str) -> Tree:
    """Parse the canonical text form back into a tree."""
    tree, pos = _parse_tree(text, _skip_ws(text, 0))
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ParseError(f"unexpected trailing {text[pos]!r}", pos)
    return tree


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_tree(text: str, pos: int) -> tuple[Tree, int]:
    if pos >= len(text):
        raise ParseError("unexpected end of input", pos)
    c = text[pos]
    if c == "T":
        return Leaf.TRUE, pos + 1
    if c == "F":
        return Leaf.FALSE, pos + 1
    if c == "^":
        return Leaf.HOLE, pos + 1
    if c != "(":
        raise ParseError(f"expected 'T', 'F', '^', or '(', found {c!r}", pos)
    left, pos = _parse_tree(text, _skip_ws(text, pos + 1))
    pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != "<":
        raise ParseError("expected '<atom>'", pos)
    end = text.find(">", pos)
    if end < 0:
        raise ParseError("unterminated '<atom>'", pos)
    atom = text[pos + 1 : end]
    if not atom.isidentifier() or atom in ("T", "F"):
        raise ParseError(f"invalid atom name {atom!r}", pos + 1)
    right, pos = _parse_tree(text, _skip_ws(text, end + 1))
    pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != ")":
        raise ParseError("expected ')'", pos)
    return Node(atom, left, right), pos + 1


def tree_to_json(x: Tree):
    """Encode ``x`` as the documented JSON object form."""
    if x is Leaf.TRUE:
        return {"leaf": "T"}
    if x is Leaf.FALSE:
        return {"leaf": "F"}
    if x is Leaf.HOLE:
        return {"leaf": "hole"}
    return {"node": x.atom, "l": tree_to_json(x.left), "r": tree_to_json(x.right)}


def tree_from_json(data, allow_hole: bool = True) -> Tree:
    """Decode the JSON object form; holes are rejected unless allowed."""
    if not isinstance(data, dict):
        raise ValueError(f"not a tree object: {data!r}")
    if "leaf" in data:
        leaf = data["leaf"]
        if leaf == "T":
            return Leaf.TRUE
        if leaf == "F":
            return Leaf.FALSE
        if leaf == "hole":
            if not allow_hole:
                raise ValueError("hole leaf not allowed here")
            return Leaf.HOLE
        raise ValueError(f"unknown leaf {leaf!r}")
    if "node" in data:
        return Node(
            data["node"],
            tree_from_json(data["l"], allow_hole),
            tree_from_json(data["r"], allow_hole),
        )
    raise ValueError(f"not a tree object: {data!r}")
