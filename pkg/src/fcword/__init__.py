"""Fully commutative elements of the finite and affine symmetric groups:
membership tests, enumeration, canonical words, and the braid-group
identities behind the affine period decomposition."""

from .coxeter import (
    AffineA,
    DomainError,
    FiniteA,
    InputError,
    describe,
    parse_word,
    render_word,
    type_from_string,
)
from .fc import (
    commutation_class,
    count_fc_finite,
    enumerate_fc,
    is_fully_commutative,
    support_profile,
)
from .normalform import (
    AffineNF,
    FiniteNF,
    affine_nf,
    affine_nf_record,
    affine_nf_to_word,
    block_decomposition,
    finite_nf,
    finite_nf_record,
    finite_nf_to_word,
)
from .braid import tower_decompose, tower_map
from .garside import affine_braids_equal, braids_equal, normal_form
from .perm import Element, identity, invert, length, multiply, word_to_element

__version__ = "0.1.0"

__all__ = [
    "AffineA",
    "AffineNF",
    "DomainError",
    "Element",
    "FiniteA",
    "FiniteNF",
    "InputError",
    "affine_braids_equal",
    "affine_nf",
    "affine_nf_record",
    "affine_nf_to_word",
    "block_decomposition",
    "braids_equal",
    "commutation_class",
    "count_fc_finite",
    "describe",
    "enumerate_fc",
    "finite_nf",
    "finite_nf_record",
    "finite_nf_to_word",
    "identity",
    "invert",
    "is_fully_commutative",
    "length",
    "multiply",
    "normal_form",
    "parse_word",
    "render_word",
    "support_profile",
    "tower_decompose",
    "tower_map",
    "type_from_string",
    "word_to_element",
]
