"""Integral Picard groups of stacks of uniform cyclic covers of curves."""

from .fgab import (
    FgAbGroup,
    IntegerMatrix,
    Presentation,
    SmithDecomposition,
    hermite_normal_form,
    lattice_contains,
    presentation_to_group,
    product_to_invariant_factors,
    smith_normal_form,
)
from .picard import (
    DivisorClass,
    GenusRegime,
    class_equal,
    det_pushforward_class,
    discriminant_class,
    genus1_character_consistency,
)
from .theorem import (
    CoverParams,
    build_presentation,
    closed_form_structure,
    degree_invariant,
    verify,
)

__version__ = "0.1.0"
