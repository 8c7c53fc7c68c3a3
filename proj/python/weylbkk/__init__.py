"""Weyl algebra arithmetic in positive characteristic.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from weylbkk._core import (  # noqa: F401
    AlgebraError,
    Morphism,
    Poly,
    Ring,
    SymplectoMap,
    WeylElement,
    ad_pow,
    center_restriction,
    classical_bracket,
    classical_symplecto,
    commutator,
    default_primes,
    dominant_check,
    embed_center,
    extract_center,
    frobenius_poly_check,
    homomorphism_check,
    independence_report,
    is_central,
    mul_naive,
    parse_center,
    parse_morphism,
    parse_weyl,
    phi_p,
    poisson_bracket,
    random_tame,
    ultra,
    untwist,
    validate_morphism,
    verify_symplectic,
    __version__,
)
