"""Transfer of argumentation semantics to normal logic programs.

Rules become arguments.  A rule with an empty positive body attacks every
rule whose negative body mentions its head.  Extensions of that framework
are sets of enabled rules; their consequences, when consistent with the
enabled rules, are the atoms the program derives under the semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ._order import sorted_labels, sorted_sets
from .af import ArgumentationFramework, extensions, maximal_sets
from .errors import InputError
from .lp import Hypothesis, Program


@dataclass(frozen=True)
class RuleArgMap:
    to_arg: dict[int, str]
    to_rule: dict[str, int]

    def __hash__(self):
        return hash(tuple(sorted(self.to_arg.items())))

    def rules_of(self, ext: Iterable[str]) -> frozenset[int]:
        return frozenset(self.to_rule[a] for a in ext)

    def args_of(self, rule_ids: Iterable[int]) -> frozenset[str]:
        return frozenset(self.to_arg[r] for r in rule_ids)


@dataclass(frozen=True)
class TransferOutcome:
    rule_in: frozenset[int]
    in_as: frozenset[str]
    consistent: bool

    @property
    def derived(self) -> frozenset[str] | None:
        return self.in_as if self.consistent else None

    def to_json(self) -> dict:
        derived = self.derived
        return {
            "rule_in": [f"r{i}" for i in sorted(self.rule_in)],
            "in_as": sorted_labels(self.in_as),
            "consistent": self.consistent,
            "derived": None if derived is None else sorted_labels(derived),
        }


def build_af_over(program: Program) -> tuple[ArgumentationFramework, RuleArgMap]:
    to_arg = {r.id: r.label for r in program.rules}
    attacks = set()
    for r1 in program.rules:
        if r1.body_plus:
            continue
        for r2 in program.rules:
            if r1.head in r2.body_minus:
                attacks.add((r1.label, r2.label))
    af = ArgumentationFramework(frozenset(to_arg.values()), frozenset(attacks))
    return af, RuleArgMap(to_arg, {a: r for r, a in to_arg.items()})


def _check_ids(program, rule_ids):
    rule_ids = frozenset(rule_ids)
    missing = rule_ids - set(program.by_id)
    if missing:
        raise InputError(f"unknown rule ids: {sorted(missing)}")
    return rule_ids


def enabled_rule_sets(program: Program, semantics) -> list[frozenset[int]]:
    af, psi = build_af_over(program)
    return [psi.rules_of(e) for e in extensions(af, semantics)]


def in_as(program: Program, rule_in: Iterable[int]) -> frozenset[str]:
    """Least atom set closed under the enabled rules, negative bodies ignored."""
    rules = [program.by_id[i] for i in sorted(_check_ids(program, rule_in))]
    atoms: set[str] = set()
    changed = True
    while changed:
        changed = False
        for r in rules:
            if r.head not in atoms and all(b in atoms for b in r.body_plus):
                atoms.add(r.head)
                changed = True
    return frozenset(atoms)


def is_consistent_with(atoms: Iterable[str], rule_ids: Iterable[int], program: Program) -> bool:
    atoms = frozenset(atoms)
    return all(atoms.isdisjoint(program.by_id[i].body_minus) for i in _check_ids(program, rule_ids))


def outcome_for(program: Program, rule_in: Iterable[int]) -> TransferOutcome:
    rule_in = frozenset(rule_in)
    atoms = in_as(program, rule_in)
    return TransferOutcome(rule_in, atoms, is_consistent_with(atoms, rule_in, program))


def derived_atoms(program: Program, semantics) -> list[TransferOutcome]:
    """One outcome per enabled rule set, in the canonical order of the extensions."""
    return [outcome_for(program, r) for r in enabled_rule_sets(program, semantics)]


def _maximal_consistent_subsets(program, rules):
    rules = sorted(rules)
    found = []
    # largest first, so a consistent set found earlier can rule out its subsets
    for k in range(len(rules), -1, -1):
        for subset in combinations(rules, k):
            sub = frozenset(subset)
            if any(sub < f for f in found):
                continue
            if is_consistent_with(in_as(program, sub), sub, program):
                found.append(sub)
    return found


def derived_atoms_maximal(program: Program, semantics) -> list[frozenset[str]]:
    """Repaired derivation: consequences of maximal consistent subsets of each enabled rule set.

    Only the subset-maximal atom sets are kept.  This variant is opt-in; it
    does not treat all semantics uniformly.
    """
    collected = set()
    for enabled in enabled_rule_sets(program, semantics):
        for sub in _maximal_consistent_subsets(program, enabled):
            collected.add(in_as(program, sub))
    return maximal_sets(collected)


def delta_for(program: Program, rule_ids: Iterable[int]) -> Hypothesis:
    rule_ids = _check_ids(program, rule_ids)
    atoms = set()
    for i in rule_ids:
        atoms.update(program.by_id[i].body_minus)
    return Hypothesis(frozenset(atoms))


def outcome_sets(outcomes: Iterable[TransferOutcome]) -> list[frozenset[str]]:
    """Distinct derived atom sets among the consistent outcomes."""
    return sorted_sets({o.in_as for o in outcomes if o.consistent})
