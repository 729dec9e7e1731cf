"""Clifford-algebra helicity toolkit.

Weyl-basis gamma matrices, bilinear covariants, charge conjugation and
momentum-space spinors, with numerical checks that K = hJ for a chiral Dirac
spinor yields the eigenvalue equations of sigma . p_hat, and a block-trace
reconstruction of the graphene vertex Hamiltonian.
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .bilinears import (
    BilinearSet,
    HelicityResult,
    NotProportional,
    SlashPair,
    ZeroCurrent,
    bilinear_set,
    block_form_J,
    block_form_K,
    expanded_slash_pair,
    extract_helicity,
    slash_pair,
)
from .clifford import GammaSet, build_basis16, build_gamma_set
from .spinors import UnitMomentum, charge_conj2, charge_conj4, phi_L, phi_R, projector
from .theorem import Handedness, verify_main_result
