"""Online algorithms that read an advice tape, each with its offline oracle."""
from .bad_bins import (HarmonicType3, PairPacker, harmonic_type3, harmonic_weight,
                       pair_packer_oracle, perfect_pairing)
from .four_thirds import FourThirds, four_thirds_oracle, header_length, is_good_bin
from .optimal import (ADVICE_INCONSISTENT, DistinctReplay, FullIndex, frequency_oracle,
                      full_index_oracle)
from .three_halves import ThreeHalves, size_class, three_halves_oracle

__all__ = [
    "ADVICE_INCONSISTENT", "DistinctReplay", "FourThirds", "FullIndex", "HarmonicType3",
    "PairPacker", "ThreeHalves", "four_thirds_oracle", "frequency_oracle",
    "full_index_oracle", "harmonic_type3", "harmonic_weight", "header_length",
    "is_good_bin", "pair_packer_oracle", "perfect_pairing", "size_class",
    "three_halves_oracle",
]
