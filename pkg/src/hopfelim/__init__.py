"""Exact arithmetic in the free algebra ``T(V + W)`` viewed as generated by ``H = T(W)`` and ``V``.

The package provides the concatenation/unshuffle Hopf algebra on words, the
free Lie algebra in the Lyndon basis, the adjoint action of ``T(W)``, the
maps between ``T(V + W)`` and the smash product ``T(U) # T(W)`` over the free
generators ``u[alpha; v] = alpha . v``, and Lie elimination
``F(V + W) = F(U) + F(W)`` together with its dimension audit.
"""

from .elimination import (AuditRow, DecompositionFailure, SmashElement, UGenerator, bigraded_dimension_audit,
                          eliminate_lie, embed_lie, embed_smash, free_generators, map_I, map_i, map_i1, map_J,
                          map_j1, smash_multiply, smash_normal_form)
from .exact import LinComb, as_rational, format_rational
from .free_lie import LiePolynomial, NotALieElement, bracket, expand, is_primitive, lie_extract
from .tensor import (NotInHopfSubalgebra, Tensor, TensorPair, TensorPower, adjoint_action, antipode,
                     concat_product, coproduct, counit, n_fold_diagonal)
from .words import (Alphabet, Letter, MixedAlphabet, UAlphabet, graded_lyndon_count, is_lyndon, lyndon_words,
                    standard_factorization, witt_dimension)

__version__ = "0.1.0"

__all__ = [
    "LinComb",
    "as_rational",
    "format_rational",
    "LiePolynomial",
    "NotALieElement",
    "bracket",
    "expand",
    "is_primitive",
    "lie_extract",
    "AuditRow",
    "DecompositionFailure",
    "SmashElement",
    "UGenerator",
    "bigraded_dimension_audit",
    "eliminate_lie",
    "embed_lie",
    "embed_smash",
    "free_generators",
    "map_I",
    "map_i",
    "map_i1",
    "map_J",
    "map_j1",
    "smash_multiply",
    "smash_normal_form",
    "NotInHopfSubalgebra",
    "Tensor",
    "TensorPair",
    "TensorPower",
    "adjoint_action",
    "antipode",
    "concat_product",
    "coproduct",
    "counit",
    "n_fold_diagonal",
    "Alphabet",
    "Letter",
    "MixedAlphabet",
    "UAlphabet",
    "graded_lyndon_count",
    "is_lyndon",
    "lyndon_words",
    "standard_factorization",
    "witt_dimension",
]
