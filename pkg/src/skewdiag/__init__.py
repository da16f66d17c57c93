"""Exact decompositions of matrices over division rings.

Sums and products of diagonalizable matrices with verifiable
certificates, Sylvester-equation corner elimination, Waring-type
witnesses over the floating quaternions, and exhaustive width tables
over tiny fields.
"""

from .canonical import (CompanionMatrix, JordanPartition, RCFResult,
                        diagonalize_central_companion, diagonalize_involution,
                        diagonalize_weighted_reversal,
                        is_diagonalizable_bruteforce, is_nilpotent,
                        jordan_nilpotent, rcf, reversal, weighted_reversal)
from .certificates import (DiagCertificate, Decomposition, VerifyReport,
                           WaringWitness, block_diag_certificate,
                           conjugate_certificate, trivial_certificate,
                           verify_certificate)
from .matrices import DRMatrix, conjugate, mat_arith
from .products import (product_char2, product_decompose,
                       product_two_central_rich, product_two_char_ne2)
from .rings import (ASQ, GF2, GF3, GF4, HF, HQ, QQ, RINGS, CentralPolynomial,
                    central_sample, is_central, kth_root, ring_arith,
                    ring_by_name)
from .sharpness import WidthTable, enumerate_diagonalizable, width_table
from .sums import (build_shift_split, shift_matrix, sum_decompose,
                   sum_three_char2_companion, sum_two_companion,
                   sum_two_nilpotent)
from .sylvester import SylvesterInstance, eliminate_corner, solve_sylvester
from .waring import (DiagonalPolynomial, diagonal_preimage, lincomb_two,
                     product_two_squares, waring_two)

__version__ = "0.1.0"
