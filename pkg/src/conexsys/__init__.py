"""Connectionist expert systems generated from declarative fault scenarios.

The toolkit covers the full loop: describe a diagnosis problem as a deep
model plus a noise model, train an integer winner-take-all matrix on
dynamically corrupted examples with the pocket algorithm, then consult
the result under partial information with dominance-bound inference,
question selection, and IF-THEN justification of every elimination.
"""

from .engine import (
    ConsultSession,
    Justification,
    SessionStateError,
    Verdict,
    VerdictKind,
    dominance_bound,
)
from .evaluation import (
    EvalReport,
    baselines,
    clean_accuracy,
    evaluate,
    expected_accuracy,
    figure_of_merit,
)
from .kb import (
    KBFormatError,
    KnowledgeBase,
    TruthValue,
    dumps_kb,
    encode_assignment,
    goal_scores,
    kb_fingerprint,
    load_kb,
    loads_kb,
    save_kb,
    weighted_sum,
    winner,
)
from .pocket import PocketState, TrainerConfig, TrainResult, group_perceptron_step, train
from .rng import SplitMix64
from .scenario import (
    Example,
    FailureMode,
    InputVar,
    Scenario,
    ScenarioError,
    inject_noise,
    load_scenario,
    loads_scenario,
    sample_clean,
    sample_noisy,
)

__version__ = "0.1.0"

__all__ = [
    "ConsultSession",
    "EvalReport",
    "Example",
    "FailureMode",
    "InputVar",
    "Justification",
    "KBFormatError",
    "KnowledgeBase",
    "PocketState",
    "Scenario",
    "ScenarioError",
    "SessionStateError",
    "SplitMix64",
    "TrainResult",
    "TrainerConfig",
    "TruthValue",
    "Verdict",
    "VerdictKind",
    "baselines",
    "clean_accuracy",
    "dominance_bound",
    "dumps_kb",
    "encode_assignment",
    "evaluate",
    "expected_accuracy",
    "figure_of_merit",
    "goal_scores",
    "group_perceptron_step",
    "inject_noise",
    "kb_fingerprint",
    "load_kb",
    "load_scenario",
    "loads_kb",
    "loads_scenario",
    "sample_clean",
    "sample_noisy",
    "save_kb",
    "train",
    "weighted_sum",
    "winner",
]
