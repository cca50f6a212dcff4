"""Propositional normal logic programs.

Rules have the shape ``h :- a1, ..., ak, not b1, ..., not bm.``.  Derivation
is hypothesis-based: a hypothesis is a set of atoms assumed false, the
program is reduced by it, and the remaining positive rules are closed under
immediate consequence.  Stable models are found by brute force over all
hypotheses, which is what makes this module usable as an oracle.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

from ._order import sorted_labels, sorted_sets
from .errors import InputError, ParseError, SizeWarning

ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*")
STABLE_MODEL_CAP = 20

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>%[^\n]*)"
    r"|(?P<neck>:-)|(?P<comma>,)|(?P<dot>\.)|(?P<atom>[a-z][A-Za-z0-9_]*)"
)


def is_atom(name) -> bool:
    return isinstance(name, str) and ATOM_RE.fullmatch(name) is not None and name != "not"


def _dedup(atoms):
    seen = []
    for a in atoms:
        if a not in seen:
            seen.append(a)
    return tuple(seen)


@dataclass(frozen=True)
class Rule:
    id: int
    head: str
    body_plus: tuple[str, ...] = ()
    body_minus: tuple[str, ...] = ()

    def __post_init__(self):
        for atom in (self.head, *self.body_plus, *self.body_minus):
            if not is_atom(atom):
                raise InputError(f"invalid atom name {atom!r} in rule r{self.id}")
        object.__setattr__(self, "body_plus", _dedup(self.body_plus))
        object.__setattr__(self, "body_minus", _dedup(self.body_minus))

    @property
    def label(self) -> str:
        return f"r{self.id}"

    @property
    def atoms(self) -> frozenset[str]:
        return frozenset((self.head, *self.body_plus, *self.body_minus))

    def is_fact(self) -> bool:
        return not self.body_plus and not self.body_minus

    def __str__(self):
        if self.is_fact():
            return f"{self.head}."
        lits = list(self.body_plus) + [f"not {b}" for b in self.body_minus]
        return f"{self.head} :- {', '.join(lits)}."


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        ids = [r.id for r in self.rules]
        if len(set(ids)) != len(ids):
            raise InputError("rule ids must be unique within a program")

    @classmethod
    def from_rules(cls, specs: Iterable[tuple]) -> Program:
        """Build a program from ``(head, body_plus, body_minus)`` triples, numbering rules from 1."""
        rules = []
        for i, spec in enumerate(specs, start=1):
            head, plus, minus = (tuple(spec) + ((), ()))[:3]
            rules.append(Rule(i, head, tuple(plus), tuple(minus)))
        return cls(tuple(rules))

    @cached_property
    def language(self) -> frozenset[str]:
        return frozenset().union(*(r.atoms for r in self.rules))

    @cached_property
    def by_id(self) -> dict[int, Rule]:
        return {r.id: r for r in self.rules}

    def rule(self, rule_id: int) -> Rule:
        try:
            return self.by_id[rule_id]
        except KeyError:
            raise InputError(f"no rule with id {rule_id}") from None

    def subprogram(self, rule_ids: Iterable[int]) -> Program:
        wanted = set(rule_ids)
        for rid in wanted:
            self.rule(rid)
        return Program(tuple(r for r in self.rules if r.id in wanted))

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __str__(self):
        return serialize_program(self)


@dataclass(frozen=True)
class Hypothesis:
    """A set of default literals ``not A``, stored as the atoms assumed false."""

    assumed_false: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "assumed_false", frozenset(self.assumed_false))

    @classmethod
    def of(cls, *atoms: str) -> Hypothesis:
        return cls(frozenset(atoms))

    def literals(self) -> list[str]:
        return [f"not {a}" for a in sorted_labels(self.assumed_false)]

    def __len__(self):
        return len(self.assumed_false)

    def __iter__(self):
        return iter(sorted_labels(self.assumed_false))

    def __le__(self, other):
        return self.assumed_false <= other.assumed_false

    def __lt__(self, other):
        return self.assumed_false < other.assumed_false

    def __str__(self):
        return "{" + ", ".join(self.literals()) + "}"


def parse_program(text: str) -> Program:
    """Parse LP text into a program; rules are numbered in textual order."""
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append((kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(("eof", "", line, pos - line_start + 1))

    rules = []
    i = 0

    def expect(*kinds):
        nonlocal i
        kind, value, ln, col = tokens[i]
        if kind not in kinds:
            shown = "end of input" if kind == "eof" else repr(value)
            raise ParseError(f"expected {' or '.join(kinds)}, found {shown}", ln, col)
        i += 1
        return value, ln, col

    while tokens[i][0] != "eof":
        head, ln, col = expect("atom")
        if head == "not":
            raise ParseError("'not' cannot be used as a rule head", ln, col)
        plus, minus = [], []
        sep, _, _ = expect("dot", "neck")
        if sep == ":-":
            while True:
                name, ln, col = expect("atom")
                if name == "not":
                    name, ln, col = expect("atom")
                    if name == "not":
                        raise ParseError("double negation is not supported", ln, col)
                    minus.append(name)
                else:
                    plus.append(name)
                sep, _, _ = expect("comma", "dot")
                if sep == ".":
                    break
        rules.append(Rule(len(rules) + 1, head, tuple(plus), tuple(minus)))
    return Program(tuple(rules))


def serialize_program(program: Program) -> str:
    return "".join(f"{r}\n" for r in program.rules)


def reduce_by_hypothesis(program: Program, delta: Hypothesis) -> tuple[Program, Program]:
    """Return ``(P_delta, P_delta_plus)``.

    ``P_delta`` drops every ``not A`` with ``A`` assumed false; ``P_delta_plus``
    keeps only the rules of ``P_delta`` left without negative literals.
    """
    reduced = tuple(
        Rule(r.id, r.head, r.body_plus, tuple(b for b in r.body_minus if b not in delta.assumed_false))
        for r in program.rules
    )
    positive = tuple(r for r in reduced if not r.body_minus)
    return Program(reduced), Program(positive)


def least_model(program: Program) -> frozenset[str]:
    """Least fixpoint of the immediate-consequence operator of a positive program."""
    for r in program.rules:
        if r.body_minus:
            raise InputError(f"least_model needs a positive program; rule r{r.id} has negative literals")
    model: set[str] = set()
    pending = list(program.rules)
    changed = True
    while changed:
        changed = False
        rest = []
        for r in pending:
            if r.head in model:
                continue
            if all(b in model for b in r.body_plus):
                model.add(r.head)
                changed = True
            else:
                rest.append(r)
        pending = rest
    return frozenset(model)


def derive(program: Program, delta: Hypothesis) -> frozenset[str]:
    """Atoms derivable from ``delta`` using the rules of ``program``."""
    return least_model(reduce_by_hypothesis(program, delta)[1])


def stable_models(program: Program, cap: int = STABLE_MODEL_CAP) -> list[frozenset[str]]:
    language = sorted_labels(program.language)
    if len(language) > cap:
        warnings.warn(
            f"stable model enumeration over {len(language)} atoms (soft cap {cap})",
            SizeWarning,
            stacklevel=2,
        )
    models = []
    universe = frozenset(language)
    for k in range(len(language) + 1):
        for chosen in combinations(language, k):
            candidate = frozenset(chosen)
            if derive(program, Hypothesis(universe - candidate)) == candidate:
                models.append(candidate)
    return sorted_sets(models)


def hypothesis_attacks(program: Program, delta: Hypothesis, other: Hypothesis) -> bool:
    return not derive(program, delta).isdisjoint(other.assumed_false)


def is_self_consistent(program: Program, delta: Hypothesis) -> bool:
    return not hypothesis_attacks(program, delta, delta)
