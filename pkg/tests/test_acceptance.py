"""Exit criteria.  Each test is one criterion; the terminal summary prints PASS/FAIL per criterion."""

import json
import os
import random
import subprocess
import sys
import time

from argsem import (
    build_af_over,
    build_hypothesis_af,
    cf1,
    cf2,
    ad1,
    ad2,
    delta_for,
    derive,
    derived_atoms,
    derived_atoms_maximal,
    enabled_rule_sets,
    extensions,
    grounded,
    hypothesis_transfer,
    in_as,
    maximal_conflict_free,
    roundtrip_check,
    sccs,
    stable_models,
)
from argsem.cli import run
from argsem.hypo import hypothesis_extensions
from argsem.oracles import (
    bf_extensions,
    random_acyclic_af,
    random_af,
    random_program,
    random_single_scc_af,
)
from argsem.lp import Hypothesis
from instances import (
    CHAIN,
    CHAIN_WITH_LOOP,
    HIDDEN_ATTACK,
    ODD_CYCLE,
    POSITIVE_GUARD,
    SELF_DEFEAT,
    SELF_LOOP_AF,
    fs,
)

ALL = ("grounded", "preferred", "stable", "complete", "cf1", "cf2", "ad1", "ad2")


def report(n, ok, detail=""):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, detail


def test_criterion_01_chain_program_regression():
    start = time.perf_counter()
    af, _ = build_af_over(CHAIN)
    sem_ok = all(set(extensions(af, s)) == {fs("r1", "r3")} for s in ("preferred", "grounded", "stable", "complete"))
    (outcome,) = derived_atoms(CHAIN, "preferred")
    derived_ok = outcome.derived == fs("a", "c")
    stable_ok = stable_models(CHAIN) == [fs("a", "c")]
    elapsed = time.perf_counter() - start
    report(1, sem_ok and derived_ok and stable_ok and elapsed < 1.0, f"({elapsed:.3f}s)")


def test_criterion_02_hidden_attack_regression():
    af, _ = build_af_over(HIDDEN_ATTACK)
    (outcome,) = derived_atoms(HIDDEN_ATTACK, "preferred")
    code, out, _ = run(["lp-transfer", "--sem", "preferred", "--repair"], str(HIDDEN_ATTACK).encode())
    checks = [
        af.attacks == frozenset(),
        enabled_rule_sets(HIDDEN_ATTACK, "preferred") == [fs(1, 2, 3)],
        outcome.in_as == fs("a", "b", "c"),
        outcome.consistent is False,
        outcome.derived is None,
        derived_atoms_maximal(HIDDEN_ATTACK, "preferred") == [fs("a", "c"), fs("b", "c")],
        code == 0 and json.loads(out)["derived"] == [["a", "c"], ["b", "c"]],
    ]
    report(2, all(checks), str(checks))


def test_criterion_03_odd_cycle_suite():
    af2, _ = build_af_over(ODD_CYCLE)
    (loop_pref,) = derived_atoms(CHAIN_WITH_LOOP, "preferred")
    (loop_grd,) = derived_atoms(CHAIN_WITH_LOOP, "grounded")
    (cf2_out,) = derived_atoms(SELF_DEFEAT, "cf2")
    singletons = [fs("r1"), fs("r2"), fs("r3")]
    checks = [
        stable_models(ODD_CYCLE) == [],
        extensions(af2, "stable") == [],
        extensions(af2, "preferred") == [fs()],
        cf1(af2) == singletons and cf2(af2) == singletons,
        [o.derived for o in derived_atoms(ODD_CYCLE, "cf1")] == [fs("a"), fs("b"), fs("c")],
        loop_pref.derived == fs("a", "c") and loop_grd.derived == fs("a", "c"),
        cf2(SELF_LOOP_AF) == [fs("r2")],
        cf2_out.derived == fs("b"),
    ]
    report(3, all(checks), str(checks))


def test_criterion_04_representation_theorem():
    rng = random.Random(2024)
    start = time.perf_counter()
    failures = 0
    for _ in range(200):
        af = random_af(rng, 7)
        failures += sum(not roundtrip_check(af, s).equal for s in ALL)
    elapsed = time.perf_counter() - start
    report(4, failures == 0 and elapsed < 60.0, f"({failures} mismatches, {elapsed:.1f}s)")


def test_criterion_05_derivation_proposition():
    rng = random.Random(2025)
    checked = failures = 0
    for _ in range(200):
        p = random_program(rng, max_rules=10, max_atoms=8)
        for sem in ALL:
            for o in derived_atoms(p, sem):
                if not o.consistent:
                    continue
                checked += 1
                if derive(p.subprogram(o.rule_in), delta_for(p, o.rule_in)) != in_as(p, o.rule_in):
                    failures += 1
    report(5, failures == 0 and checked > 0, f"({checked} consistent outcomes, {failures} failures)")


def test_criterion_06_dung_semantics_against_definitions():
    rng = random.Random(2026)
    start = time.perf_counter()
    failures = 0
    for _ in range(500):
        af = random_af(rng, 8)
        failures += sum(extensions(af, s) != bf_extensions(af, s) for s in ("grounded", "preferred", "stable", "complete"))
    elapsed = time.perf_counter() - start
    report(6, failures == 0 and elapsed < 120.0, f"({failures} mismatches, {elapsed:.1f}s)")


def test_criterion_07_scc_recursive_properties():
    rng = random.Random(2027)
    acyclic_bad = single_bad = 0
    for _ in range(200):
        af = random_acyclic_af(rng, 8)
        expected = [grounded(af)]
        acyclic_bad += not (cf1(af) == cf2(af) == ad1(af) == ad2(af) == expected)
    for _ in range(200):
        af = random_single_scc_af(rng, 8)
        assert len(sccs(af).components) == 1
        single_bad += not (cf1(af) == cf2(af) == maximal_conflict_free(af))
    report(7, acyclic_bad == 0 and single_bad == 0, f"(acyclic {acyclic_bad}, single-SCC {single_bad} failures)")


def test_criterion_08_hypothesis_framework_regression():
    H = Hypothesis.of
    hf = build_hypothesis_af(HIDDEN_ATTACK)
    checks = [
        hf.arguments == [H(), H("a"), H("b"), H("d"), H("a", "d")],
        hypothesis_extensions(hf, "preferred") == [[H(), H("a"), H("d"), H("a", "d")]],
        hypothesis_transfer(HIDDEN_ATTACK, "preferred", maximal_only=True) == [[fs("b", "c")]],
        hypothesis_transfer(HIDDEN_ATTACK, "preferred", maximal_only=False) == [[fs("c"), fs("b", "c")]],
    ]
    report(8, all(checks), str(checks))


def test_criterion_09_documented_errata_e1_e2_e3():
    # erratum E1: positive-guard program, In_AS of the enabled rules
    af, _ = build_af_over(POSITIVE_GUARD)
    (o,) = derived_atoms(POSITIVE_GUARD, "stable")
    e1 = o.in_as == fs("a", "p") and o.in_as != fs("a", "b", "p") and not o.consistent
    # erratum E2: the same framework does have a stable extension
    e2 = af.attacks == frozenset() and extensions(af, "stable") == [fs("r1", "r2", "r3")]
    # erratum E3: the hypothesis framework has the attacks the worked example leaves out
    hf = build_hypothesis_af(HIDDEN_ATTACK)
    pairs = {(str(hf.arg_to_hypothesis[a]), str(hf.arg_to_hypothesis[b])) for a, b in hf.framework.attacks}
    listed = {("{not d}", "{not b}"), ("{not a, not d}", "{not b}")}
    missing = {("{not b}", "{not a}"), ("{not b}", "{not a, not d}")}
    e3 = pairs == listed | missing
    report(9, e1 and e2 and e3, f"(E1={e1}, E2={e2}, E3={e3})")


REGRESSION_INPUTS = [
    (["af-solve", "--sem", "stable"], b"arg(a).arg(b).arg(c).\natt(a,b).att(b,c).att(c,a).\n"),
    (["af-solve", "--sem", "cf2"], b"arg(r1).arg(r2).\natt(r1,r1).att(r1,r2).\n"),
    (["lp-transfer", "--sem", "preferred"], str(CHAIN).encode()),
    (["lp-transfer", "--sem", "preferred", "--repair"], str(HIDDEN_ATTACK).encode()),
    (["lp-transfer", "--sem", "cf1"], str(ODD_CYCLE).encode()),
    (["lp-transfer", "--sem", "grounded"], str(CHAIN_WITH_LOOP).encode()),
    (["lp-stable"], str(POSITIVE_GUARD).encode()),
    (["hypo", "--sem", "preferred", "--no-maximal-only"], str(HIDDEN_ATTACK).encode()),
    (["roundtrip"], b"arg(a).arg(b).arg(c).arg(d).arg(e).\natt(a,b).att(c,b).att(c,d).att(d,c).att(d,e).att(e,e).\n"),
    (["to-canonical"], b"arg(a).arg(b).arg(c).\natt(a,b).att(b,c).att(c,a).\n"),
]


def test_criterion_10_cli_output_is_deterministic():
    bad = []
    for argv, stdin in REGRESSION_INPUTS:
        outputs = set()
        for seed in ("0", "1", "4242"):
            env = dict(os.environ, PYTHONHASHSEED=seed)
            proc = subprocess.run(
                [sys.executable, "-m", "argsem", *argv], input=stdin, capture_output=True, env=env, check=False
            )
            outputs.add((proc.returncode, proc.stdout))
        if len(outputs) != 1 or next(iter(outputs))[0] != 0:
            bad.append(argv)
    report(10, not bad, f"(non-deterministic or failing: {bad})")

