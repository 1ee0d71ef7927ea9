"""Finite interpretations of the short-circuit signature.

A finite model fixes a small carrier, unary/binary operation tables, the
two constants, and atom values; ``validates`` checks an equation by
exhausting every variable assignment.  The independence suite packages the
eight fixed models, each of which satisfies all reduced-set axioms except
the one it refutes, together with the cited closed refutation.

``valid_in_free_model`` checks an equation against tree semantics under
seeded random closed substitutions instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from random import Random
from typing import Mapping, Sequence

from .axioms import eqfscl_minus
from .errors import ModeViolation, UninterpretedAtom, UnboundVariable
from .generate import random_substitution
from .terms import (
    FALSE,
    TRUE,
    And,
    Atom,
    Cond,
    Const,
    Equation,
    FullAnd,
    FullOr,
    Not,
    Or,
    Term,
    Var,
    substitute,
)
from .trees import DEFAULT_NODE_CAP, eval_tree

Assignment = Mapping[str, int]


@dataclass(frozen=True)
class FiniteModel:
    name: str
    size: int
    neg_table: tuple[int, ...]
    and_table: tuple[tuple[int, ...], ...]
    or_table: tuple[tuple[int, ...], ...]
    true_value: int = 1
    false_value: int = 0
    atom_values: Mapping[str, int] = field(default_factory=dict)
    default_atom_value: int | None = None

    def __post_init__(self):
        n = self.size
        rows = {self.true_value, self.false_value, *self.neg_table}
        if len(self.neg_table) != n:
            raise ValueError("negation table must have one entry per element")
        for table in (self.and_table, self.or_table):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError("binary tables must be size x size")
            rows.update(v for row in table for v in row)
        rows.update(self.atom_values.values())
        if self.default_atom_value is not None:
            rows.add(self.default_atom_value)
        if any(not 0 <= v < n for v in rows):
            raise ValueError("table entries must lie within the carrier")

    def atom_value(self, name: str) -> int:
        if name in self.atom_values:
            return self.atom_values[name]
        if self.default_atom_value is not None:
            return self.default_atom_value
        raise UninterpretedAtom(f"model {self.name} has no value for atom {name}")


def eval_in_model(m: FiniteModel, t: Term, assignment: Assignment | None = None) -> int:
    """Evaluate a term over the model's tables under a variable assignment."""
    env = assignment or {}
    match t:
        case Const(v):
            return m.true_value if v else m.false_value
        case Atom(name):
            return m.atom_value(name)
        case Var(name):
            try:
                return env[name]
            except KeyError:
                raise UnboundVariable(f"no value for variable ${name}") from None
        case Not(p):
            return m.neg_table[eval_in_model(m, p, env)]
        case And(l, r):
            return m.and_table[eval_in_model(m, l, env)][eval_in_model(m, r, env)]
        case Or(l, r):
            return m.or_table[eval_in_model(m, l, env)][eval_in_model(m, r, env)]
        case Cond(_, _, _) | FullAnd(_, _) | FullOr(_, _):
            raise ModeViolation(
                f"{type(t).__name__} nodes have no interpretation in finite models"
            )
        case _:  # pragma: no cover
            raise TypeError(f"not a term: {t!r}")


@dataclass(frozen=True)
class ValidationResult:
    valid: bool
    counterexample: dict[str, int] | None
    assignments_checked: int

    def __bool__(self) -> bool:
        return self.valid


def validates(m: FiniteModel, eq: Equation) -> ValidationResult:
    """Exhaustively check an equation over all variable assignments.

    The first counterexample in lexicographic assignment order (variables
    sorted by name) is reported.
    """
    names = sorted(eq.variables)
    checked = 0
    for values in itertools.product(range(m.size), repeat=len(names)):
        env = dict(zip(names, values))
        checked += 1
        if eval_in_model(m, eq.lhs, env) != eval_in_model(m, eq.rhs, env):
            return ValidationResult(False, env, checked)
    return ValidationResult(True, None, checked)


@dataclass(frozen=True)
class IndependenceEntry:
    model: FiniteModel
    tag: str
    refutation: Equation
    note: str | None = None


def _model(name, neg, and_rows, or_rows, atom_a=None, default=None):
    return FiniteModel(
        name=name,
        size=len(neg),
        neg_table=tuple(neg),
        and_table=tuple(tuple(r) for r in and_rows),
        or_table=tuple(tuple(r) for r in or_rows),
        atom_values={"a": atom_a} if atom_a is not None else {},
        default_atom_value=default,
    )


_A, _B = Atom("a"), Atom("b")


def independence_suite() -> list[IndependenceEntry]:
    """The eight fixed models, each refuting exactly one reduced-set axiom.

    Every model interprets F as 0 and T as 1.  Entries carry the cited
    closed refutation; the final model needs a second atom (all atoms
    other than ``a`` take the default value 3).
    """
    return [
        IndependenceEntry(
            _model("M_F2", (1, 1), ((0, 0), (0, 1)), ((0, 0), (1, 0))),
            "F2",
            Equation(Or(FALSE, FALSE), Not(And(Not(TRUE), Not(TRUE))), "F2-refutation"),
        ),
        IndependenceEntry(
            _model("M_F4", (0, 1), ((0, 0), (1, 1)), ((0, 0), (1, 1))),
            "F4",
            Equation(And(TRUE, FALSE), FALSE, "F4-refutation"),
        ),
        IndependenceEntry(
            _model("M_F5", (0, 0), ((0, 0), (0, 1)), ((0, 0), (0, 0))),
            "F5",
            Equation(Or(TRUE, FALSE), TRUE, "F5-refutation"),
        ),
        IndependenceEntry(
            _model(
                "M_F6",
                (1, 0, 2),
                ((0, 0, 2), (0, 1, 2), (0, 2, 2)),
                ((0, 1, 2), (1, 1, 2), (2, 1, 2)),
                atom_a=2,
            ),
            "F6",
            Equation(And(FALSE, _A), FALSE, "F6-refutation"),
        ),
        IndependenceEntry(
            _model(
                "M_F7",
                (1, 0, 2, 3),
                ((0, 0, 0, 0), (0, 1, 2, 3), (3, 2, 0, 3), (3, 3, 2, 3)),
                ((0, 1, 2, 3), (1, 1, 1, 1), (2, 3, 1, 3), (3, 3, 2, 3)),
                atom_a=2,
            ),
            "F7",
            Equation(
                And(And(_A, FALSE), _A), And(_A, And(FALSE, _A)), "F7-refutation"
            ),
        ),
        IndependenceEntry(
            _model(
                "M_F8",
                (1, 0, 3, 2),
                ((0, 0, 0, 0), (0, 1, 2, 3), (2, 2, 2, 2), (3, 3, 3, 3)),
                ((0, 1, 2, 3), (1, 1, 1, 1), (2, 2, 2, 2), (3, 3, 3, 3)),
                atom_a=2,
            ),
            "F8",
            Equation(And(Not(_A), FALSE), And(_A, FALSE), "F8-refutation"),
        ),
        IndependenceEntry(
            _model(
                "M_F9",
                (1, 0, 2, 4, 3),
                (
                    (0, 0, 0, 0, 0),
                    (0, 1, 2, 3, 4),
                    (3, 2, 2, 3, 2),
                    (3, 3, 3, 3, 3),
                    (3, 4, 4, 3, 4),
                ),
                (
                    (0, 1, 2, 3, 4),
                    (1, 1, 1, 1, 1),
                    (2, 4, 2, 2, 4),
                    (3, 4, 3, 3, 4),
                    (4, 4, 4, 4, 4),
                ),
                atom_a=2,
            ),
            "F9",
            Equation(
                Or(And(_A, FALSE), _A), And(Or(_A, TRUE), _A), "F9-refutation"
            ),
        ),
        IndependenceEntry(
            _model(
                "M_F10",
                (1, 0, 2, 3),
                ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 0, 0), (3, 3, 3, 3)),
                ((0, 1, 2, 3), (1, 1, 1, 1), (2, 1, 1, 1), (3, 3, 3, 3)),
                atom_a=2,
                default=3,
            ),
            "F10",
            Equation(
                Or(And(_A, _A), And(_B, FALSE)),
                And(Or(_A, And(_B, FALSE)), Or(_A, And(_B, FALSE))),
                "F10-refutation",
            ),
            note="needs at least two atoms; atoms other than 'a' take value 3",
        ),
    ]


def check_independence() -> tuple[bool, list[str]]:
    """Verify the whole suite: each model refutes exactly its axiom.

    Returns overall success and one report line per (model, axiom) pair
    plus one per refutation.
    """
    lines = []
    ok = True
    axioms = eqfscl_minus()
    for entry in independence_suite():
        for ax in axioms:
            result = validates(entry.model, ax)
            expected = ax.tag != entry.tag
            if result.valid != expected:
                ok = False
            status = "ok" if result.valid == expected else "UNEXPECTED"
            word = "valid" if result.valid else "refuted"
            lines.append(f"{entry.model.name} {ax.tag}: {word} ({status})")
        lhs = eval_in_model(entry.model, entry.refutation.lhs)
        rhs = eval_in_model(entry.model, entry.refutation.rhs)
        if lhs == rhs:
            ok = False
        lines.append(
            f"{entry.model.name} refutation {entry.refutation}: {lhs} != {rhs}"
        )
    return ok, lines


@dataclass(frozen=True)
class FreeModelCheck:
    valid: bool
    witness: dict[str, Term] | None
    samples: int

    def __bool__(self) -> bool:
        return self.valid


def valid_in_free_model(
    eq: Equation,
    samples: int = 500,
    seed: int = 0,
    atoms: Sequence[str] = ("a", "b", "c"),
    max_depth: int = 6,
    cap: int | None = DEFAULT_NODE_CAP,
) -> FreeModelCheck:
    """Check an equation against tree semantics under random closed
    substitutions; a failure reports the witnessing substitution."""
    rng = Random(seed)
    names = sorted(eq.variables)
    for i in range(samples):
        subst = random_substitution(rng, names, atoms, max_depth)
        lhs = eval_tree(substitute(eq.lhs, subst), cap)
        rhs = eval_tree(substitute(eq.rhs, subst), cap)
        if lhs != rhs:
            return FreeModelCheck(False, subst, i + 1)
    return FreeModelCheck(True, None, samples)


def model_to_json(m: FiniteModel):
    """Encode a model with its tables flattened row-major."""
    return {
        "name": m.name,
        "size": m.size,
        "neg": list(m.neg_table),
        "and": [v for row in m.and_table for v in row],
        "or": [v for row in m.or_table for v in row],
        "true": m.true_value,
        "false": m.false_value,
        "atoms": dict(sorted(m.atom_values.items())),
        "default_atom": m.default_atom_value,
    }


def model_from_json(data) -> FiniteModel:
    n = data["size"]
    unflatten = lambda flat: tuple(
        tuple(flat[i * n : (i + 1) * n]) for i in range(n)
    )
    return FiniteModel(
        name=data["name"],
        size=n,
        neg_table=tuple(data["neg"]),
        and_table=unflatten(data["and"]),
        or_table=unflatten(data["or"]),
        true_value=data.get("true", 1),
        false_value=data.get("false", 0),
        atom_values=data.get("atoms", {}),
        default_atom_value=data.get("default_atom"),
    )
