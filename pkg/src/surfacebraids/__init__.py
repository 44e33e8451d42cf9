"""Surface pure braid groups: presentations, derivation checking,
nilpotent quotients and the almost-direct-product certificate."""

from .words import (GeneratorId, Word, commutator, conj_lower, conj_upper,
                    exponent_vector, format_word, invert, multiply,
                    parse_word, reduce, substitute)
from .presentations import (Presentation, RelationInstance, build_presentation,
                            enumerate_instances, instantiate, translate,
                            translate_back)
from .nilpotent import (CollectedWord, HallBasis, LcsQuotients,
                        abelian_invariants, evaluate_in_quotient, hall_collect,
                        lcs_quotients, smith_normal_form, witt_rank)
from .derivations import (Ambient, DerivationScript, RewriteStep, apply_step,
                          builtin_suite, check_derivation, search_derivation)
from .splitting import (ActionMatrix, KernelAlphabet, SectionMap,
                        action_matrix, almost_direct_check, forward_rule,
                        kernel_alphabet, project, section, section_map,
                        verify_section_relator)

__version__ = "0.1.0"
