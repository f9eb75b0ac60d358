"""Block number and last descent on 321-avoiding permutations."""

from .bijection import f_inverse, f_map, trace
from .catalan import ballot, catalan, gf_coefficients
from .perm_core import (
    Permutation, PositionSet, avoids, block_number, blocks, des_set, direct_sum,
    enumerate_avoiders, ides, imaj, inverse, ldes, left_multiply, ltr_set,
)
from .symfun import (
    QSymVector, SchurVector, check_pair, is_schur_positive, q_of,
    restricted_character_image, schur_basis_vector, schur_expand,
)
from .tableaux import Shape, SkewShape, StandardTableau, rotate_180, rsk, rsk_inverse, syt_enumerate

__version__ = "0.1.0"
