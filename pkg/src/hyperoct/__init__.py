"""Public-key cryptosystems on the hyperoctahedral group B_n of signed permutations."""

from .group import (
    SignedCycle,
    SignedPermutation,
    compose,
    cycle_decompose,
    group_order,
    identity,
    inverse,
    order,
    power,
    random_element,
    validate,
)
from .codec import (
    HyperoctDigits,
    bytes_to_units,
    digits_to_int,
    digits_to_signed_perm,
    int_to_digits,
    int_to_signed_perm,
    perm_to_subexceedant,
    signed_perm_to_digits,
    signed_perm_to_int,
    subexceedant_to_perm,
    units_to_bytes,
)

__version__ = "0.1.0"
