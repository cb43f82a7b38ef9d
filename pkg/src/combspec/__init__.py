"""Spectra of comb graphs P_n > P_k and of combs with an infinite tail."""

from .errors import (
    CombSpecError,
    ConvergenceError,
    InternalConsistencyError,
    InvalidArgument,
    PoleError,
    PrecisionError,
    SingularBlockError,
    ValidationFailure,
)
from .finite_spectrum import SpectrumReport, char_poly_eval, count_above_two, eigenvalues, lambda1
from .graphs import CombSpec, Graph, adjacency, comb, comb_product, couple_with_bridge, path, truncated_tail
from .tail_spectrum import TailSpectrumReport, count_formula, discrete_spectrum, truncation_check

__version__ = "0.1.0"
