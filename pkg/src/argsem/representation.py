"""From argumentation frameworks to logic programs and back."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ._order import sorted_labels, sorted_sets
from .af import ArgumentationFramework, Semantics, extensions
from .errors import InputError
from .lp import Program, Rule, is_atom
from .transfer import derived_atoms


@dataclass(frozen=True)
class Violation:
    code: str
    location: str

    def __str__(self):
        return f"{self.code} at {self.location}"


@dataclass(frozen=True)
class RepresentationReport:
    valid: bool
    framework: ArgumentationFramework | None = None
    violations: tuple[Violation, ...] = ()


def _require_atoms(af):
    bad = [a for a in af.order if not is_atom(a)]
    if bad:
        raise InputError(f"argument labels are not valid atom names: {', '.join(bad)}")


def sanitize_labels(af: ArgumentationFramework) -> tuple[ArgumentationFramework, dict[str, str]]:
    """Rename labels that are not atom names; returns the renamed AF and ``{new: old}``."""
    taken = {a for a in af.args if is_atom(a)}
    rename = {}
    for a in af.order:
        if a in taken:
            continue
        stem = "arg_" + re.sub(r"[^A-Za-z0-9_]", "_", a)
        candidate, n = stem, 1
        while candidate in taken:
            n += 1
            candidate = f"{stem}_{n}"
        taken.add(candidate)
        rename[a] = candidate
    if not rename:
        return af, {a: a for a in af.args}
    new = lambda x: rename.get(x, x)  # noqa: E731
    renamed = ArgumentationFramework(
        frozenset(new(a) for a in af.args), frozenset((new(a), new(b)) for a, b in af.attacks)
    )
    return renamed, {new(a): a for a in af.args}


def af_to_program(af: ArgumentationFramework) -> Program:
    """One rule per argument: ``a :- not b1, ..., not bk`` over the attackers of ``a``."""
    _require_atoms(af)
    rules = []
    for i, a in enumerate(af.order, start=1):
        rules.append(Rule(i, a, (), tuple(sorted_labels(af.attackers[a]))))
    return Program(tuple(rules))


def program_represents_af(program: Program) -> RepresentationReport:
    violations = []
    heads: dict[str, list[int]] = {}
    for r in program.rules:
        heads.setdefault(r.head, []).append(r.id)
        if r.body_plus:
            violations.append(Violation("positive-body", f"r{r.id}"))
    for atom in sorted_labels(program.language):
        ids = heads.get(atom, [])
        if not ids:
            violations.append(Violation("no-defining-rule", atom))
        elif len(ids) > 1:
            violations.append(Violation("multiple-defining-rules", f"{atom} (" + ", ".join(f"r{i}" for i in ids) + ")"))
    if violations:
        return RepresentationReport(False, None, tuple(violations))
    attacks = frozenset((b, r.head) for r in program.rules for b in r.body_minus)
    return RepresentationReport(True, ArgumentationFramework(frozenset(heads), attacks), ())


def canonical_program(af: ArgumentationFramework) -> Program:
    """One rule ``a :- not b`` per attack ``(a, b)``, plus a fact per argument outside every attack."""
    _require_atoms(af)
    involved = {x for pair in af.attacks for x in pair}
    rank = {a: i for i, a in enumerate(af.order)}
    specs = []
    for a in af.order:
        targets = sorted((b for b in af.attacked_by[a]), key=rank.__getitem__)
        specs.extend((a, (), (b,)) for b in targets)
        if a not in involved:
            specs.append((a, (), ()))
    return Program.from_rules(specs)


@dataclass(frozen=True)
class RoundtripReport:
    semantics: Semantics
    af_extensions: tuple[frozenset[str], ...]
    program_extensions: tuple[frozenset[str], ...]
    missing_from_program: tuple[frozenset[str], ...] = field(default=())
    extra_in_program: tuple[frozenset[str], ...] = field(default=())

    @property
    def equal(self) -> bool:
        return not self.missing_from_program and not self.extra_in_program

    def to_json(self) -> dict:
        enc = lambda sets: [sorted_labels(s) for s in sets]  # noqa: E731
        return {
            "semantics": self.semantics.value,
            "equal": self.equal,
            "af_extensions": enc(self.af_extensions),
            "program_extensions": enc(self.program_extensions),
            "missing_from_program": enc(self.missing_from_program),
            "extra_in_program": enc(self.extra_in_program),
        }


def roundtrip_check(af: ArgumentationFramework, semantics) -> RoundtripReport:
    """Compare the semantics on ``af`` with its transfer through the representing program."""
    sem = Semantics.parse(semantics)
    direct = extensions(af, sem)
    safe, back = sanitize_labels(af)
    program = af_to_program(safe)
    transferred = []
    for outcome in derived_atoms(program, sem):
        if outcome.consistent:
            transferred.append(frozenset(back[a] for a in outcome.in_as))
    transferred = sorted_sets(set(transferred))
    direct_set, transferred_set = set(direct), set(transferred)
    return RoundtripReport(
        sem,
        tuple(direct),
        tuple(transferred),
        tuple(sorted_sets(direct_set - transferred_set)),
        tuple(sorted_sets(transferred_set - direct_set)),
    )
