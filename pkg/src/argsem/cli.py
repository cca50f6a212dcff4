"""Command-line interface.

Exit codes: 0 on success, 1 on malformed input (or a failing oracle check),
2 when an input exceeds the size cap of an exponential construction.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from ._order import sorted_labels
from .af import Semantics, extensions, parse_apx, serialize_apx
from .errors import ArgsemError, CapExceeded, InputError
from .hypo import HYPOTHESIS_CAP, build_hypothesis_af, hypothesis_extensions, maximal_hypotheses
from .lp import STABLE_MODEL_CAP, parse_program, serialize_program, stable_models
from .oracles import oracle_check
from .representation import (
    af_to_program,
    canonical_program,
    program_represents_af,
    roundtrip_check,
    sanitize_labels,
)
from .transfer import derived_atoms, derived_atoms_maximal, outcome_sets

AF_CAP = 22
SEMANTICS = [s.value for s in Semantics]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n"


def _sets(sets):
    return [sorted_labels(s) for s in sets]


def _text_sets(sets):
    if not sets:
        return "(none)\n"
    return "".join("{" + ", ".join(sorted_labels(s)) + "}\n" for s in sets)


def _cap(args, default):
    if args.cap is not None:
        return args.cap
    env = os.environ.get("ARGSEM_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"ARGSEM_CAP must be an integer, got {env!r}") from None
    return default


def _check_cap(what, size, cap):
    if size > cap:
        raise CapExceeded(what, size, cap)


def _af_solve(args, text):
    af = parse_apx(text)
    _check_cap("framework", len(af.args), _cap(args, AF_CAP))
    exts = extensions(af, args.sem)
    if args.output == "text":
        return f"{args.sem} extensions:\n" + _text_sets(exts)
    return _dump({"semantics": args.sem, "extensions": _sets(exts)})


def _lp_transfer(args, text):
    program = parse_program(text)
    _check_cap("program", len(program), _cap(args, AF_CAP))
    if args.repair:
        derived = derived_atoms_maximal(program, args.sem)
        if args.output == "text":
            return f"{args.sem} (repaired) derived atom sets:\n" + _text_sets(derived)
        return _dump({"semantics": args.sem, "repair": True, "derived": _sets(derived)})
    outcomes = derived_atoms(program, args.sem)
    if args.output == "text":
        lines = [f"{args.sem} transfer:"]
        if not outcomes:
            lines.append("(no enabled rule sets)")
        for o in outcomes:
            rec = o.to_json()
            verdict = "derived {" + ", ".join(rec["derived"]) + "}" if o.consistent else "inconsistent, nothing derived"
            lines.append(
                "rules {" + ", ".join(rec["rule_in"]) + "}: In_AS {" + ", ".join(rec["in_as"]) + "}, " + verdict
            )
        return "\n".join(lines) + "\n"
    return _dump(
        {
            "semantics": args.sem,
            "outcomes": [o.to_json() for o in outcomes],
            "derived": _sets(outcome_sets(outcomes)),
        }
    )


def _lp_stable(args, text):
    program = parse_program(text)
    _check_cap("program language", len(program.language), _cap(args, STABLE_MODEL_CAP))
    models = stable_models(program, cap=_cap(args, STABLE_MODEL_CAP))
    if args.output == "text":
        return "stable models:\n" + _text_sets(models)
    return _dump({"stable_models": _sets(models)})


def _mapping_comments(mapping):
    renamed = {new: old for new, old in mapping.items() if new != old}
    return "".join(f"% {new} = {old}\n" for new, old in sorted(renamed.items()))


def _to_lp(args, text):
    af, mapping = sanitize_labels(parse_apx(text))
    return _mapping_comments(mapping) + serialize_program(af_to_program(af))


def _to_canonical(args, text):
    af, mapping = sanitize_labels(parse_apx(text))
    return _mapping_comments(mapping) + serialize_program(canonical_program(af))


def _from_lp(args, text):
    report = program_represents_af(parse_program(text))
    if args.output == "text":
        if report.valid:
            return serialize_apx(report.framework)
        return "not a representation of any framework:\n" + "".join(f"{v}\n" for v in report.violations)
    fw = None
    if report.framework is not None:
        order = report.framework.order
        rank = {a: i for i, a in enumerate(order)}
        fw = {
            "args": order,
            "attacks": [list(p) for p in sorted(report.framework.attacks, key=lambda p: (rank[p[0]], rank[p[1]]))],
        }
    return _dump(
        {
            "valid": report.valid,
            "framework": fw,
            "violations": [{"code": v.code, "location": v.location} for v in report.violations],
        }
    )


def _roundtrip(args, text):
    af = parse_apx(text)
    _check_cap("framework", len(af.args), _cap(args, AF_CAP))
    sems = SEMANTICS if args.sem == "all" else [args.sem]
    reports = [roundtrip_check(af, s) for s in sems]
    if args.output == "text":
        return "".join(f"{r.semantics.value}: {'equal' if r.equal else 'MISMATCH'}\n" for r in reports)
    return _dump({"equal": all(r.equal for r in reports), "reports": [r.to_json() for r in reports]})


def _hypo(args, text):
    program = parse_program(text)
    hf = build_hypothesis_af(program, cap=_cap(args, HYPOTHESIS_CAP))
    exts = hypothesis_extensions(hf, args.sem)
    flat = []
    for i, hyps in enumerate(exts):
        kept = maximal_hypotheses(hyps) if args.maximal_only else hyps
        for h in kept:
            flat.append(
                {
                    "extension": i,
                    "hypothesis": h.literals(),
                    "atoms": sorted_labels(hf.derivations[str(h)]),
                }
            )
    if args.output == "text":
        lines = ["arguments: " + ", ".join(str(h) for h in hf.arguments)]
        for rec in flat:
            lines.append(
                f"E{rec['extension']} {{{', '.join(rec['hypothesis'])}}} => {{{', '.join(rec['atoms'])}}}"
            )
        return "\n".join(lines) + "\n"
    return _dump(
        {
            "semantics": args.sem,
            "maximal_only": args.maximal_only,
            "arguments": [h.literals() for h in hf.arguments],
            "extensions": [[h.literals() for h in hyps] for hyps in exts],
            "characterizations": flat,
        }
    )


def _oracle_check(args, text):
    report = oracle_check(args.seed, args.count, args.max_size)
    if args.output == "text":
        lines = [f"oracle check seed={args.seed} count={args.count} max_size={args.max_size}"]
        for name, counts in report.to_json()["checks"].items():
            lines.append(f"{name}: {counts['passed']} passed, {counts['failed']} failed")
        lines.append("OK" if report.ok else "FAILED")
        out = "\n".join(lines) + "\n"
    else:
        out = _dump(report.to_json())
    return out, (0 if report.ok else 1)


COMMANDS = {
    "af-solve": (_af_solve, "APX framework -> extensions"),
    "lp-transfer": (_lp_transfer, "LP program -> transferred semantics"),
    "lp-stable": (_lp_stable, "LP program -> stable models"),
    "to-lp": (_to_lp, "APX framework -> representing program"),
    "to-canonical": (_to_canonical, "APX framework -> canonical program"),
    "from-lp": (_from_lp, "LP program -> represented framework, if any"),
    "roundtrip": (_roundtrip, "check framework semantics against its program transfer"),
    "hypo": (_hypo, "LP program -> hypothesis framework characterizations"),
    "oracle-check": (_oracle_check, "randomized differential check against brute force"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="argsem", description="Argumentation semantics and their transfer to logic programs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, helptext) in COMMANDS.items():
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--output", choices=["json", "text"], default="json")
        if name == "oracle-check":
            p.add_argument("--seed", type=int, default=1)
            p.add_argument("--count", type=int, default=100)
            p.add_argument("--max-size", type=int, default=6)
            continue
        p.add_argument("input", nargs="?", default="-", help="input file, or - for stdin")
        if name in ("af-solve", "lp-transfer", "hypo"):
            p.add_argument("--sem", choices=SEMANTICS, required=name == "af-solve", default="preferred")
        if name == "roundtrip":
            p.add_argument("--sem", choices=SEMANTICS + ["all"], default="all")
        if name in ("af-solve", "lp-transfer", "lp-stable", "roundtrip", "hypo"):
            p.add_argument("--cap", type=int, default=None)
        if name == "lp-transfer":
            p.add_argument("--repair", action="store_true", help="maximal-consistent-subset derivation")
        if name == "hypo":
            p.add_argument("--maximal-only", action=argparse.BooleanOptionalAction, default=True)
    return parser


def run(argv: list[str], stdin: bytes | None = None) -> tuple[int, str, str]:
    """Run one invocation; returns ``(exit_code, stdout, stderr)``.

    ``stdin`` supplies the input when the input path is ``-``; when it is
    ``None`` the process's standard input is read.
    """
    try:
        args = build_parser().parse_args(argv)
        text = ""
        if hasattr(args, "input"):
            if args.input == "-":
                data = sys.stdin.buffer.read() if stdin is None else stdin
                text = data.decode("utf-8")
            else:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
        result = COMMANDS[args.command][0](args, text)
        if isinstance(result, tuple):
            return result[1], result[0], ""
        return 0, result, ""
    except CapExceeded as exc:
        return 2, "", f"argsem: {exc}\n"
    except (ArgsemError, OSError, UnicodeDecodeError) as exc:
        return 1, "", f"argsem: {exc}\n"


def main(argv=None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
