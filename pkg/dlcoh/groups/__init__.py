"""GL_n over finite fields: arithmetic, flag cosets and counting."""

from .counting import (
    Composition,
    flag_point_polynomial,
    gaussian_multinomial,
    group_order,
    levi_composition,
    parabolic_index,
    parabolic_order,
    steinberg_dim,
)
from .fields import FieldSpec, FqMatrix, build_field, field_for_order
from .flags import (
    FlagCoset,
    coset_projection,
    count_flag_stabilizer,
    enumerate_cosets,
    flag_of,
    random_group_element,
    random_parabolic_element,
)

__all__ = [
    "Composition",
    "FieldSpec",
    "FlagCoset",
    "FqMatrix",
    "build_field",
    "coset_projection",
    "count_flag_stabilizer",
    "enumerate_cosets",
    "field_for_order",
    "flag_of",
    "flag_point_polynomial",
    "gaussian_multinomial",
    "group_order",
    "levi_composition",
    "parabolic_index",
    "parabolic_order",
    "random_group_element",
    "random_parabolic_element",
    "steinberg_dim",
]
