"""Machine-to-machine constructions."""

from ..funcmath import complete_to_bijection
from .behavior import (BehaviorState, StateSpace, mrfa_state_space_size, srfa_to_mrfa,
                       srfa_to_three_pass, srfa_to_two_pass, three_pass_closed_form,
                       three_pass_state_space, three_pass_upper_bounds)
from .common import TransformError
from .determinize import mrfa_to_dfa, sweeping_to_one_way, to_dfa
from .dfa import AlphabetMismatch, EquivResult, complete, dfa_accepts, dfa_equiv, minimize
from .sweeping import both_sides_to_one_side
from .unary import decompose, unary_mrfa_to_srfa

dfa_minimize = minimize

__all__ = [
    "AlphabetMismatch", "BehaviorState", "EquivResult", "StateSpace", "TransformError",
    "both_sides_to_one_side", "complete", "complete_to_bijection", "decompose", "dfa_accepts",
    "dfa_equiv", "dfa_minimize", "minimize", "mrfa_state_space_size", "mrfa_to_dfa",
    "srfa_to_mrfa", "srfa_to_three_pass", "srfa_to_two_pass", "sweeping_to_one_way",
    "three_pass_closed_form", "three_pass_state_space", "three_pass_upper_bounds", "to_dfa",
    "unary_mrfa_to_srfa",
]
