"""Exact computations in the genus-2 Goeritz group H_2 = H_P *_{H_E} H_M."""

from .amalgam import (
    IDENTITY,
    AmalgamElem,
    Membership,
    Syllable,
    amal_inv,
    amal_mul,
    equal,
    is_identity,
    membership,
    normal_form,
    order,
    relators,
    render_elem,
    theta_twist,
)
from .homology import HomMatrix, generator_matrix, invariant_form, represent
from .tree import (
    BASE_M,
    BASE_P,
    Vertex,
    descend,
    distance,
    enumerate_ball,
    gamma_adjacent,
    geodesic,
    neighbors,
    triangle,
    vertex_of,
)
from .words import Letter, free_reduce, parse_word, random_word, render

__version__ = "0.1.0"
