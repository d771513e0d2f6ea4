"""Ternary cyclic codes C_(1,v) with few weights, their duals and the
exponential sums and m-sequence correlations behind them."""

from .codes import (
    CodeSpec,
    Codeword,
    WeightDistribution,
    code_spec,
    codeword,
    cyclic_shift,
    expected_distribution,
    table_distribution,
    weight,
    weight_distribution,
    weight_via_sums,
)
from .cosets import coset, cosets_disjoint, minimal_polynomial, parity_check_polynomial
from .dualcheck import (
    check_conditions,
    circle_solutions_ext,
    dual_min_distance,
    dual_report,
    find_dual_word,
    gcd_facts,
    hyperbola_solutions,
    sphere_packing_max_d,
)
from .eisenstein import EisensteinInteger
from .errors import CodesError
from .expsums import lemma2_closed_form, lemma2_distribution, lemma_key_check, r_sum, t_sum
from .families import FamilyParams, family_v, valid_instances, validate_family
from .field import FieldConfig, FieldElement, chi, fixed_nonsquare, is_square, make_field, trace
from .kernels import BACKEND
from .poly import Polynomial
from .sequences import crosscorrelation, m_sequence
from .verify import run_suite

__version__ = "0.1.0"
