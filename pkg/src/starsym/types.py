from collections.abc import Sequence

# Exponent vector of a monomial in F_1..F_s; position j-1 holds the exponent of F_j.
FMonomial = tuple[int, ...]
# Set of 1-based form indices.
FormSubset = frozenset[int]
Partition = tuple[int, ...]
DiophantineSolution = tuple[int, ...]
LayerChain = tuple[FormSubset, ...]

MonomialLike = Sequence[int]
