"""Extension semantics of argumentation frameworks and their transfer to logic programs."""

from .af import (
    ArgumentationFramework,
    Semantics,
    characteristic,
    complete,
    extensions,
    grounded,
    is_admissible,
    is_conflict_free,
    parse_apx,
    preferred,
    serialize_apx,
    set_attacks,
    stable,
)
from .errors import ArgsemError, CapExceeded, InputError, ParseError, SizeWarning
from .hypo import HypothesisFramework, build_hypothesis_af, hypothesis_transfer
from .lp import (
    Hypothesis,
    Program,
    Rule,
    derive,
    hypothesis_attacks,
    is_self_consistent,
    least_model,
    parse_program,
    reduce_by_hypothesis,
    serialize_program,
    stable_models,
)
from .representation import (
    RepresentationReport,
    af_to_program,
    canonical_program,
    program_represents_af,
    roundtrip_check,
)
from .scc import ad1, ad2, cf1, cf2, dpu, gf, maximal_conflict_free, restrict, scc_graph, sccs
from .transfer import (
    RuleArgMap,
    TransferOutcome,
    build_af_over,
    delta_for,
    derived_atoms,
    derived_atoms_maximal,
    enabled_rule_sets,
    in_as,
    is_consistent_with,
)

__version__ = "0.1.0"
