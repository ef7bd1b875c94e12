"""Compression-based classification of cellular automata and small Turing
machines.

Evolve a machine, serialize the space-time diagram canonically, and let a
pinned DEFLATE compressor approximate its program-size complexity; sorting,
clustering, and differencing those lengths then recovers behavioral
classes, phase-transition profiles, and sensitivity coefficients.
"""

__version__ = "0.1.0"

from .automaton import (CA, TM, RuleSpec, SpaceTimeDiagram, TmConfiguration,
                        ca_step, evolve_ca, reached_states_sequence,
                        state_sequence, tm_step)
from .classify import (ClassificationEntry, ClassificationReport,
                       classify_eca, cluster_1d, rank_rules,
                       sample_rule_space, with_clusters)
from .complexity import (DEFAULT_COMPRESSOR, ComplexityEstimate,
                         CompressorConfig, ca_complexity, compressed_length,
                         deflate, encode_diagram, encode_sequence,
                         tm_complexity)
from .initcond import (InitialCondition, damerau_levenshtein, gray_derivate,
                       gray_integrate, initial_condition,
                       initial_condition_number)
from .transition import (CoefficientReport, IcProfile, InterestingIcs,
                         TransitionRecord, characteristic_exponent,
                         coefficient_classification, detect_spikes,
                         ic_profile, interesting_initial_conditions,
                         least_squares_fit, transition_coefficient,
                         transition_record, transition_sequence)

__all__ = [
    "CA", "TM", "RuleSpec", "SpaceTimeDiagram", "TmConfiguration",
    "ca_step", "evolve_ca", "tm_step", "reached_states_sequence",
    "state_sequence",
    "InitialCondition", "gray_derivate", "gray_integrate",
    "initial_condition", "initial_condition_number", "damerau_levenshtein",
    "CompressorConfig", "DEFAULT_COMPRESSOR", "ComplexityEstimate",
    "deflate", "compressed_length", "encode_diagram", "encode_sequence",
    "ca_complexity", "tm_complexity",
    "ClassificationEntry", "ClassificationReport", "rank_rules",
    "cluster_1d", "classify_eca", "with_clusters", "sample_rule_space",
    "IcProfile", "TransitionRecord", "InterestingIcs", "CoefficientReport",
    "ic_profile", "detect_spikes", "characteristic_exponent",
    "transition_sequence", "least_squares_fit", "transition_coefficient",
    "transition_record", "interesting_initial_conditions",
    "coefficient_classification",
    "__version__",
]
