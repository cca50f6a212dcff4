"""Definitional brute-force oracles and a seeded differential harness.

Nothing here reuses the enumeration code of the solver modules: every
semantics is checked subset by subset straight from its definition, and
components come from a transitive closure rather than Tarjan's algorithm.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import chain, combinations

from ._order import sorted_sets
from .af import ArgumentationFramework, Semantics, extensions
from .errors import InputError
from .lp import Program, Rule, derive, stable_models
from .representation import roundtrip_check
from .transfer import delta_for, derived_atoms

DUNG = (Semantics.GROUNDED, Semantics.PREFERRED, Semantics.STABLE, Semantics.COMPLETE)
SCC_RECURSIVE = (Semantics.CF1, Semantics.CF2, Semantics.AD1, Semantics.AD2)


def subsets(items):
    items = sorted(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


# -- Dung semantics, by definition ---------------------------------------------


def bf_attacks(af, s, a):
    return any((b, a) in af.attacks for b in s)


def bf_conflict_free(af, s):
    return not any((a, b) in af.attacks for a in s for b in s)


def bf_acceptable(af, s, a):
    return all(bf_attacks(af, s, b) for (b, x) in af.attacks if x == a)


def bf_admissible(af, s):
    return bf_conflict_free(af, s) and all(bf_acceptable(af, s, a) for a in s)


def bf_preferred(af):
    adm = [s for s in subsets(af.args) if bf_admissible(af, s)]
    return sorted_sets(s for s in adm if not any(s < t for t in adm))


def bf_stable(af):
    return sorted_sets(
        s for s in subsets(af.args) if bf_conflict_free(af, s) and all(bf_attacks(af, s, a) for a in af.args - s)
    )


def bf_complete(af):
    return sorted_sets(
        s
        for s in subsets(af.args)
        if bf_admissible(af, s) and all(a in s for a in af.args if bf_acceptable(af, s, a))
    )


def bf_grounded(af):
    comp = bf_complete(af)
    least = [s for s in comp if all(s <= t for t in comp)]
    assert len(least) == 1
    return least


# -- SCC-recursive semantics, by membership check ------------------------------


def bf_components(af):
    reach = {a: {a} for a in af.args}
    changed = True
    while changed:
        changed = False
        for a, b in af.attacks:
            new = reach[b] - reach[a]
            if new:
                reach[a] |= new
                changed = True
    comps = {frozenset(b for b in af.args if b in reach[a] and a in reach[b]) for a in af.args}
    return list(comps)


def bf_restrict(af, s):
    return ArgumentationFramework(frozenset(s), frozenset(p for p in af.attacks if p[0] in s and p[1] in s))


def bf_in_base(af, e, c, admissible_base):
    if admissible_base:
        ok = lambda s: s <= c and bf_admissible(af, s)  # noqa: E731
    else:
        ok = lambda s: bf_conflict_free(af, s)  # noqa: E731
    return ok(e) and not any(e < t and ok(t) for t in subsets(af.args))


def bf_is_scc_extension(af, e, c, admissible_base, keep_provisional):
    """Does ``e`` satisfy the recursive SCC definition on ``af`` with candidates ``c``?"""
    comps = bf_components(af)
    if len(comps) <= 1:
        return bf_in_base(af, e, c, admissible_base)
    for s in comps:
        outside_e = e - s
        d, p, u = set(), set(), set()
        for a in s:
            attackers = {b for (b, x) in af.attacks if x == a and b not in s}
            if attackers & outside_e:
                d.add(a)
            elif all(bf_attacks(af, e, b) for b in attackers):
                u.add(a)
            else:
                p.add(a)
        if keep_provisional:
            kept, c_next = u | p, u & c
        else:
            hit_by_p = {x for (b, x) in af.attacks if b in p}
            kept, c_next = u, (u & c) - hit_by_p
        if not (e & s) <= kept:
            return False
        if not bf_is_scc_extension(bf_restrict(af, kept), e & s, frozenset(c_next), admissible_base, keep_provisional):
            return False
    return True


_SCC_FLAGS = {
    Semantics.CF1: (False, False),
    Semantics.CF2: (False, True),
    Semantics.AD1: (True, False),
    Semantics.AD2: (True, True),
}


def bf_extensions(af, semantics):
    sem = Semantics.parse(semantics)
    if sem is Semantics.GROUNDED:
        return bf_grounded(af)
    if sem is Semantics.PREFERRED:
        return bf_preferred(af)
    if sem is Semantics.STABLE:
        return bf_stable(af)
    if sem is Semantics.COMPLETE:
        return bf_complete(af)
    admissible_base, keep_p = _SCC_FLAGS[sem]
    return sorted_sets(s for s in subsets(af.args) if bf_is_scc_extension(af, s, af.args, admissible_base, keep_p))


def bf_maximal_conflict_free(af):
    cf = [s for s in subsets(af.args) if bf_conflict_free(af, s)]
    return sorted_sets(s for s in cf if not any(s < t for t in cf))


# -- logic programs --------------------------------------------------------------


def gl_stable_models(program: Program):
    """Stable models via the Gelfond-Lifschitz reduct, checked for every candidate set."""
    found = []
    for m in subsets(program.language):
        reduct = [r for r in program.rules if not set(r.body_minus) & m]
        model = set()
        while True:
            nxt = model | {r.head for r in reduct if set(r.body_plus) <= model}
            if nxt == model:
                break
            model = nxt
        if model == m:
            found.append(m)
    return sorted_sets(found)


# -- random instances ------------------------------------------------------------


def random_af(rng: random.Random, max_size: int, density: float | None = None) -> ArgumentationFramework:
    n = rng.randint(0, max_size)
    args = [f"a{i}" for i in range(n)]
    p = rng.uniform(0.1, 0.5) if density is None else density
    attacks = {(a, b) for a in args for b in args if rng.random() < (p / 3 if a == b else p)}
    return ArgumentationFramework(frozenset(args), frozenset(attacks))


def random_acyclic_af(rng: random.Random, max_size: int) -> ArgumentationFramework:
    n = rng.randint(1, max_size)
    args = [f"a{i}" for i in range(n)]
    rng.shuffle(args)
    p = rng.uniform(0.1, 0.6)
    attacks = {(args[i], args[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return ArgumentationFramework(frozenset(args), frozenset(attacks))


def random_single_scc_af(rng: random.Random, max_size: int) -> ArgumentationFramework:
    n = rng.randint(1, max_size)
    args = [f"a{i}" for i in range(n)]
    rng.shuffle(args)
    attacks = {(args[i], args[(i + 1) % n]) for i in range(n)} if n > 1 else set()
    p = rng.uniform(0.0, 0.4)
    attacks |= {(a, b) for a in args for b in args if rng.random() < p}
    return ArgumentationFramework(frozenset(args), frozenset(attacks))


def random_program(rng: random.Random, max_rules: int = 10, max_atoms: int = 8) -> Program:
    atoms = [f"p{i}" for i in range(rng.randint(1, max_atoms))]
    rules = []
    for i in range(1, rng.randint(0, max_rules) + 1):
        head = rng.choice(atoms)
        plus = tuple(a for a in atoms if rng.random() < 0.15)
        minus = tuple(a for a in atoms if rng.random() < 0.25)
        rules.append(Rule(i, head, plus, minus))
    return Program(tuple(rules))


# -- harness -----------------------------------------------------------------------


@dataclass
class OracleReport:
    seed: int
    count: int
    max_size: int
    passed: dict[str, int] = field(default_factory=dict)
    failed: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def record(self, check: str, ok: bool, detail: str = ""):
        self.passed.setdefault(check, 0)
        self.failed.setdefault(check, 0)
        if ok:
            self.passed[check] += 1
        else:
            self.failed[check] += 1
            if len(self.failures) < 20:
                self.failures.append(f"{check}: {detail}")

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def to_json(self) -> dict:
        checks = sorted(self.passed)
        return {
            "seed": self.seed,
            "count": self.count,
            "max_size": self.max_size,
            "ok": self.ok,
            "checks": {c: {"passed": self.passed[c], "failed": self.failed[c]} for c in checks},
            "failures": list(self.failures),
        }


def proposition_holds(program: Program, semantics) -> bool:
    """Consistent transfer outcomes equal the hypothesis-based derivation over the enabled rules."""
    for outcome in derived_atoms(program, semantics):
        if not outcome.consistent:
            continue
        enabled = program.subprogram(outcome.rule_in)
        if derive(enabled, delta_for(program, outcome.rule_in)) != outcome.in_as:
            return False
    return True


def oracle_check(seed: int, count: int, max_size: int) -> OracleReport:
    if max_size > 8:
        raise InputError("oracle_check is limited to max_size <= 8")
    rng = random.Random(seed)
    report = OracleReport(seed, count, max_size)
    for i in range(count):
        af = random_af(rng, max_size)
        for sem in DUNG + SCC_RECURSIVE:
            got = extensions(af, sem)
            report.record(f"semantics:{sem.value}", got == bf_extensions(af, sem), f"instance {i}")
            rt = roundtrip_check(af, sem)
            report.record(f"roundtrip:{sem.value}", rt.equal, f"instance {i}")
        program = random_program(rng, max_rules=max_size + 2, max_atoms=max_size)
        report.record("stable-models", stable_models(program) == gl_stable_models(program), f"instance {i}")
        for sem in DUNG + SCC_RECURSIVE:
            report.record(f"proposition:{sem.value}", proposition_holds(program, sem), f"instance {i}")
    return report

