"""Exact sl2 weight system on chord diagrams and the wheels formula for the unknot."""

from .algebra import C, CasimirPoly, EvenSeries, Poly, lagrange_interpolate, rebase_even_to_casimir
from .bernoulli import bernoulli_poly, modified_bernoulli, q_poly
from .diagram import (
    ChordDiagram,
    DiagramError,
    DiagramSum,
    FourTermSpec,
    canonicalize,
    connected_sum,
    crossings,
    diagram_from_permutation,
    enumerate_matchings,
    four_term_element,
    parse_dow,
    split_factors,
)
from .oracle import casimir_value, eval_oracle, irrep_action, word_scalar
from .series import main_series, q_series, verify, wheels_exp_series
from .weight import SixTermSpec, eval_cv, eval_sum, kernel_witness, six_term_element
from .wheels import WheelMonomial, eval_sigma, eval_wheel_union

__version__ = "0.1.0"
