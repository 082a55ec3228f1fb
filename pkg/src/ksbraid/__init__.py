"""Exact categorified braid action: complexes over A_m, curves, Burau oracle."""

from .braid_functors import BraidWord, apply_word, grothendieck_class, r_apply, tl_check
from .burau import LaurentMatrix, LaurentPoly, burau_matrix, euler_pairing, reduced_burau
from .complexes import BigradedPoly, ProjComplex, fingerprint, hom_poincare, projective, reduce, shift
from .curves import (
    BigradedNormalCurve,
    KString,
    apply_word_curve,
    basic_curve,
    curve_shift,
    decompose_kstrings,
    gin_basic,
    ibigr_basic,
    is_identity_word,
    l_complex,
    twist,
)
from .path_algebra import AlgebraElement, AlgebraSpec, Coefficients

__version__ = "0.1.0"
