from .beam import BeamModel, BeamProblem, beam_objective
from .chebyshev import ChebyshevProblem
from .puc import PucProblem, puc_objective, ripley_k, ripley_k_batch
from .type0 import Type0Problem, type0_random_instance

__all__ = [
    "BeamModel", "BeamProblem", "beam_objective", "ChebyshevProblem",
    "PucProblem", "puc_objective", "ripley_k", "ripley_k_batch",
    "Type0Problem", "type0_random_instance",
]
