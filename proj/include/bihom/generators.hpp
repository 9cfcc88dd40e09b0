#ifndef BIHOM_GENERATORS_HPP
#define BIHOM_GENERATORS_HPP

#include <cstddef>
#include <random>

#include "bihom/algebra.hpp"
#include "bihom/matrix.hpp"
#include "bihom/subspace.hpp"

namespace bihom {

/// Matrix with small random rational entries (numerators -3..3, denominators
/// 1..2); deterministic for a given generator state.
Matrix random_rational_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols);

/// Random subspace of K^ambient spanned by up to `ambient` random vectors.
Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient);

/// Random valid instance built by twisting an associative core (zero
/// product, truncated polynomials, a cyclic convolution product, or a
/// diagonal product) by commuting endomorphisms of it, optionally relabeled
/// by a basis permutation. Every output passes validate_algebra.
FDBiHomAlgebra random_bihom_algebra(std::mt19937_64& rng, std::size_t max_dim);

} // namespace bihom

#endif
