"""Online bin packing with advice: exact-arithmetic algorithms, oracles and lower bounds."""
from .baselines import BestFit, FirstFit, Harmonic, NextFit, OnlineAlgorithm, run_online
from .errors import AdvicePackError
from .model import (Bin, Packing, RunResult, as_sequence, load_instance, parse_size,
                    replay, save_instance, verify_packing)
from .oracle import lower_bound, opt_cost, opt_exact
from .tape import AdviceTape, encode_self_delimited, self_delimited_length

__version__ = "0.1.0"

__all__ = [
    "AdviceTape", "AdvicePackError", "BestFit", "Bin", "FirstFit", "Harmonic", "NextFit",
    "OnlineAlgorithm", "Packing", "RunResult", "as_sequence", "encode_self_delimited",
    "load_instance", "lower_bound", "opt_cost", "opt_exact", "parse_size", "replay",
    "run_online", "save_instance", "self_delimited_length", "verify_packing",
]
