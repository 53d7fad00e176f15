"""K-theory of flip crossed products (A (x) A) x Z/2 from the K-theory of A."""

from .fgab import (FgAbGroup, GroupMap, canonicalize, compose, cyclic, direct_sum,
                   is_isomorphic, map_equal, tensor, tor)
from .flipcalc import (Block, BlockContribution, FlipReport, assemble, block_k,
                       cross_term, decompose, diag_flip, flip_crossed)
from .intlin import (Cokernel, IntMatrix, SnfResult, cokernel, elementary_divisors,
                     flip_matrix, kernel, snf)
from .kdata import KData, kunneth, suspend

__version__ = "0.1.0"
