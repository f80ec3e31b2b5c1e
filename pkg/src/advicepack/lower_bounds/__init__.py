"""Lower-bound constructions: adversarial families, counting, reductions, formulas."""
from .bounds import (binpack_bound, binpack_coefficient, guessing_bound,
                     guessing_bound_known_zeros, guessing_coefficient)
from .counting import count_weighted_solutions, weighted_solutions_bound
from .families import (IndexVector, index_family, index_family_member, index_family_packing,
                       index_family_sequence, index_family_size, level_family,
                       level_family_packing, level_family_sequence, levels_from_bins)
from .reduction import (GuessingFromSeparation, KnownPartitionSeparation,
                        SeparationFromBinPacking, random_bits, reduce_with_known_partition,
                        reduce_with_packer, run_guessing)
