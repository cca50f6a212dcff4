"""Abstract argumentation frameworks and the classical Dung semantics.

Extensions are frozensets of argument labels.  Every function returning a
collection of extensions returns a list in canonical order (size first, then
member labels), so outputs are reproducible byte-for-byte once serialized.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator

from ._order import sorted_labels, sorted_sets
from .errors import InputError, ParseError, SizeWarning

ENUMERATION_CAP = 22

Extension = frozenset


class Semantics(str, Enum):
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    STABLE = "stable"
    COMPLETE = "complete"
    CF1 = "cf1"
    CF2 = "cf2"
    AD1 = "ad1"
    AD2 = "ad2"

    @classmethod
    def parse(cls, name) -> Semantics:
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            known = ", ".join(s.value for s in cls)
            raise InputError(f"unknown semantics {name!r} (expected one of: {known})") from None


@dataclass(frozen=True)
class ArgumentationFramework:
    args: frozenset[str] = field(default_factory=frozenset)
    attacks: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "args", frozenset(self.args))
        object.__setattr__(self, "attacks", frozenset(tuple(p) for p in self.attacks))
        for a, b in self.attacks:
            if a not in self.args or b not in self.args:
                raise InputError(f"attack ({a}, {b}) mentions an unknown argument")

    @classmethod
    def build(cls, args: Iterable[str], attacks: Iterable[tuple[str, str]] = ()) -> ArgumentationFramework:
        return cls(frozenset(args), frozenset(attacks))

    @cached_property
    def attackers(self) -> dict[str, frozenset[str]]:
        out = {a: set() for a in self.args}
        for a, b in self.attacks:
            out[b].add(a)
        return {a: frozenset(s) for a, s in out.items()}

    @cached_property
    def attacked_by(self) -> dict[str, frozenset[str]]:
        out = {a: set() for a in self.args}
        for a, b in self.attacks:
            out[a].add(b)
        return {a: frozenset(s) for a, s in out.items()}

    @cached_property
    def order(self) -> list[str]:
        return sorted_labels(self.args)

    def __len__(self):
        return len(self.args)


def _check_members(af, s):
    stray = set(s) - af.args
    if stray:
        raise InputError(f"not arguments of the framework: {', '.join(sorted_labels(stray))}")


def is_conflict_free(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    s = frozenset(s)
    _check_members(af, s)
    return all(not (af.attackers[b] & s) for b in s)


def set_attacks(af: ArgumentationFramework, s: Iterable[str], a: str) -> bool:
    if a not in af.args:
        raise InputError(f"{a!r} is not an argument of the framework")
    return not af.attackers[a].isdisjoint(s)


def is_admissible(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    s = frozenset(s)
    if not is_conflict_free(af, s):
        return False
    defeated = _attacked_set(af, s)
    return all(af.attackers[a] <= defeated for a in s)


def _attacked_set(af, s):
    out = set()
    for a in s:
        out |= af.attacked_by[a]
    return out


def characteristic(af: ArgumentationFramework, s: Iterable[str]) -> frozenset[str]:
    """Arguments acceptable with respect to ``s``: every attacker is attacked by ``s``."""
    s = frozenset(s)
    _check_members(af, s)
    defeated = _attacked_set(af, s)
    return frozenset(a for a in af.args if af.attackers[a] <= defeated)


def grounded(af: ArgumentationFramework) -> frozenset[str]:
    current = frozenset()
    while True:
        nxt = characteristic(af, current)
        if nxt == current:
            return current
        current = nxt


def _warn_size(af):
    if len(af.args) > ENUMERATION_CAP:
        warnings.warn(
            f"exhaustive extension search over {len(af.args)} arguments (soft cap {ENUMERATION_CAP})",
            SizeWarning,
            stacklevel=3,
        )


def conflict_free_sets(af: ArgumentationFramework) -> Iterator[frozenset[str]]:
    """All conflict-free sets, by backtracking with conflict pruning."""
    order = af.order
    index = {a: i for i, a in enumerate(order)}
    clash = [0] * len(order)
    for a, b in af.attacks:
        clash[index[a]] |= 1 << index[b]
        clash[index[b]] |= 1 << index[a]

    def walk(i, chosen, blocked):
        if i == len(order):
            yield frozenset(order[j] for j in range(len(order)) if chosen >> j & 1)
            return
        bit = 1 << i
        if not blocked & bit and not clash[i] & bit:
            yield from walk(i + 1, chosen | bit, blocked | clash[i])
        yield from walk(i + 1, chosen, blocked)

    yield from walk(0, 0, 0)


def maximal_sets(sets: Iterable[frozenset]) -> list[frozenset]:
    """The subset-maximal members of a collection of sets."""
    kept = []
    for s in sorted(set(sets), key=len, reverse=True):
        if not any(s < k for k in kept):
            kept.append(s)
    return sorted_sets(kept)


def admissible_sets(af: ArgumentationFramework) -> list[frozenset[str]]:
    _warn_size(af)
    return sorted_sets(s for s in conflict_free_sets(af) if is_admissible(af, s))


def preferred(af: ArgumentationFramework) -> list[frozenset[str]]:
    return maximal_sets(admissible_sets(af))


def stable(af: ArgumentationFramework) -> list[frozenset[str]]:
    _warn_size(af)
    found = []
    for s in conflict_free_sets(af):
        if len(s) + len(_attacked_set(af, s) - s) == len(af.args):
            found.append(s)
    return sorted_sets(found)


def complete(af: ArgumentationFramework) -> list[frozenset[str]]:
    return sorted_sets(s for s in admissible_sets(af) if characteristic(af, s) <= s)


def extensions(af: ArgumentationFramework, semantics) -> list[frozenset[str]]:
    """Extensions of ``af`` under the named semantics, canonically ordered.

    An empty list means the semantics assigns no extension at all, which is
    different from ``[frozenset()]``.
    """
    sem = Semantics.parse(semantics)
    if sem is Semantics.GROUNDED:
        return [grounded(af)]
    if sem is Semantics.PREFERRED:
        return preferred(af)
    if sem is Semantics.STABLE:
        return stable(af)
    if sem is Semantics.COMPLETE:
        return complete(af)
    from . import scc

    return {
        Semantics.CF1: scc.cf1,
        Semantics.CF2: scc.cf2,
        Semantics.AD1: scc.ad1,
        Semantics.AD2: scc.ad2,
    }[sem](af)


# -- APX format ---------------------------------------------------------------

_APX_LINE = re.compile(r"(arg|att)\s*\(\s*([^(),\s]+)\s*(?:,\s*([^(),\s]+)\s*)?\)\s*\.")


def parse_apx(text: str) -> ArgumentationFramework:
    args, attacks = [], []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        pos = 0
        while pos < len(line):
            m = _APX_LINE.match(line, pos)
            if m is None:
                raise ParseError(f"cannot parse {line[pos:]!r}", ln, len(raw) - len(raw.lstrip()) + pos + 1)
            kind, first, second = m.groups()
            if kind == "arg":
                if second is not None:
                    raise ParseError("arg/1 takes one argument", ln, pos + 1)
                if first not in args:
                    args.append(first)
            else:
                if second is None:
                    raise ParseError("att/2 takes two arguments", ln, pos + 1)
                attacks.append((first, second, ln))
            pos = m.end()
            while pos < len(line) and line[pos].isspace():
                pos += 1
    known = set(args)
    for a, b, ln in attacks:
        for x in (a, b):
            if x not in known:
                raise ParseError(f"attack refers to undeclared argument {x!r}", ln)
    return ArgumentationFramework(frozenset(args), frozenset((a, b) for a, b, _ in attacks))


def serialize_apx(af: ArgumentationFramework) -> str:
    lines = [f"arg({a})." for a in af.order]
    rank = {a: i for i, a in enumerate(af.order)}
    for a, b in sorted(af.attacks, key=lambda p: (rank[p[0]], rank[p[1]])):
        lines.append(f"att({a},{b}).")
    return "".join(line + "\n" for line in lines)
