"""Hypotheses as arguments.

Arguments are the self-consistent hypotheses over a program's language; a
hypothesis attacks another when it derives an atom the other assumes false.
Building the framework needs a derivation per hypothesis, so it is capped.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ._order import label_key, sorted_labels, sorted_sets
from .af import ArgumentationFramework, extensions
from .errors import CapExceeded
from .lp import Hypothesis, Program, derive

HYPOTHESIS_CAP = 12


@dataclass(frozen=True)
class HypothesisFramework:
    framework: ArgumentationFramework
    arg_to_hypothesis: dict[str, Hypothesis]
    derivations: dict[str, frozenset[str]]

    def __hash__(self):
        return hash(self.framework)

    @property
    def arguments(self) -> list[Hypothesis]:
        return sorted(self.arg_to_hypothesis.values(), key=hypothesis_key)

    def hypotheses(self, ext) -> list[Hypothesis]:
        return sorted((self.arg_to_hypothesis[a] for a in ext), key=hypothesis_key)


def hypothesis_key(h: Hypothesis):
    return len(h), [label_key(a) for a in sorted_labels(h.assumed_false)]


def _hypotheses(language):
    atoms = sorted_labels(language)
    for k in range(len(atoms) + 1):
        for chosen in combinations(atoms, k):
            yield Hypothesis(frozenset(chosen))


def build_hypothesis_af(program: Program, cap: int = HYPOTHESIS_CAP) -> HypothesisFramework:
    n = len(program.language)
    if n > cap:
        raise CapExceeded("program language", n, cap)
    arg_to_hyp, derived = {}, {}
    for delta in _hypotheses(program.language):
        atoms = derive(program, delta)
        if atoms.isdisjoint(delta.assumed_false):
            label = str(delta)
            arg_to_hyp[label] = delta
            derived[label] = atoms
    attacks = frozenset(
        (a, b) for a in arg_to_hyp for b in arg_to_hyp if not derived[a].isdisjoint(arg_to_hyp[b].assumed_false)
    )
    af = ArgumentationFramework(frozenset(arg_to_hyp), attacks)
    return HypothesisFramework(af, arg_to_hyp, derived)


def maximal_hypotheses(hyps):
    return [h for h in hyps if not any(h < other for other in hyps)]


def hypothesis_extensions(hf: HypothesisFramework, semantics) -> list[list[Hypothesis]]:
    return [hf.hypotheses(e) for e in extensions(hf.framework, semantics)]


def hypothesis_transfer(
    program: Program, semantics, maximal_only: bool = True, cap: int = HYPOTHESIS_CAP
) -> list[list[frozenset[str]]]:
    """Per extension of the hypothesis framework, the distinct atom sets its hypotheses derive."""
    hf = build_hypothesis_af(program, cap)
    result = []
    for hyps in hypothesis_extensions(hf, semantics):
        kept = maximal_hypotheses(hyps) if maximal_only else hyps
        result.append(sorted_sets({hf.derivations[str(h)] for h in kept}))
    return result
