"""Exact-arithmetic engine for Sullivan models, Massey products, and
centers of (twisted) Pontrjagin rings."""

__version__ = "0.1.0"

from .algebra import GradedAlgebra, Poly, rat
from .dga import (DgaModel, CohomologySpace, Derivation, ModelError,
                  NotClosedError, check_d_squared, cohomology, basis_in_degree,
                  extend_derivation, quadratic_part, cup_products_trivial,
                  loopify, models_equal)
from .massey import (CohomologyClass, MasseyResult, MasseyUndefinedError,
                     class_of, bound, massey_triple,
                     classes_equal_mod_indeterminacy)
from .lie import (FiniteTable, SemidirectFree, UeaElement,
                  InsufficientBracketData, uea_mul, graded_commutator,
                  twisted_mul, jacobi_check)
from .centers import (CenterReport, center, twisted_center, zee,
                      free_lie_dimension, extract_lie, is_abelian,
                      is_ordinary_central, rescale_finite_table)
from . import models
