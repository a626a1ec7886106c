"""Exact Alexander polynomials of braid closures and the h-series universal
invariant obtained from Gaussian-kernel evaluation of the Burau matrix."""

from .alexander import AlexanderPoly, alexander_reduced, alexander_thm2, lemma2_check
from .braid import BraidWord, cable, exponent_sum, is_knot_closure, parse_braid
from .burau import block_decompose, psi_unreduced, reduced_burau
from .ring import LaurentPoly, RingMatrix, TruncSeries, series_inverse, t_to_hbar
from .rt import GaussianState, gaussian_contract, theorem1_check, universal_invariant

__version__ = "0.1.0"
