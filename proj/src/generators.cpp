#include "bihom/generators.hpp"

#include <algorithm>
#include <numeric>

namespace bihom {

Matrix random_rational_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 2);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient) {
    std::uniform_int_distribution<std::size_t> count(0, ambient);
    std::size_t k = count(rng);
    return Subspace::span(ambient, random_rational_matrix(rng, k, ambient));
}

namespace {

Matrix permutation_matrix(const std::vector<std::size_t>& perm) {
    Matrix q(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) q.at(perm[j], j) = Rational(1);
    return q;
}

Matrix matrix_power(const Matrix& m, std::size_t e) {
    Matrix r = Matrix::identity(m.rows());
    for (std::size_t t = 0; t < e; ++t) r = r * m;
    return r;
}

/// Small-integer polynomial in a single matrix; any two of these commute.
Matrix random_polynomial_in(std::mt19937_64& rng, const Matrix& m) {
    std::uniform_int_distribution<long> coeff(-2, 2);
    std::size_t n = m.rows();
    Matrix acc(n, n);
    Matrix power = Matrix::identity(n);
    for (int d = 0; d <= 2; ++d) {
        acc = acc + power.scaled(Rational(coeff(rng)));
        power = power * m;
    }
    return acc;
}

} // namespace

FDBiHomAlgebra random_bihom_algebra(std::mt19937_64& rng, std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
    std::uniform_int_distribution<int> kind_dist(0, 3);
    std::uniform_int_distribution<long> scalar(-3, 3);
    std::size_t n = dim_dist(rng);
    int kind = kind_dist(rng);

    Matrix core(n, n * n);
    Matrix alpha(n, n), beta(n, n);

    switch (kind) {
        case 0: {
            // zero product; any commuting pair of maps twists it
            Matrix seed(n, n);
            std::uniform_int_distribution<long> entry(-2, 2);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) seed.at(i, j) = Rational(entry(rng));
            alpha = random_polynomial_in(rng, seed);
            beta = random_polynomial_in(rng, seed);
            break;
        }
        case 1: {
            // truncated polynomials: e_i e_j = e_{i+j} below the cutoff,
            // twisted by the substitutions x -> c x and x -> d x
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i + j < n) core.at(i + j, i * n + j) = Rational(1);
            Rational c(scalar(rng)), d(scalar(rng));
            for (std::size_t i = 0; i < n; ++i) {
                alpha.at(i, i) = c.pow(static_cast<unsigned long>(i));
                beta.at(i, i) = d.pow(static_cast<unsigned long>(i));
            }
            break;
        }
        case 2: {
            // cyclic convolution: e_i e_j = e_{i+j mod n}, twisted by the
            // index-multiplication maps e_i -> e_{k i mod n}
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) core.at((i + j) % n, i * n + j) = Rational(1);
            std::uniform_int_distribution<std::size_t> mult(0, n - 1);
            std::size_t k1 = mult(rng), k2 = mult(rng);
            for (std::size_t i = 0; i < n; ++i) {
                alpha.at(k1 * i % n, i) = Rational(1);
                beta.at(k2 * i % n, i) = Rational(1);
            }
            break;
        }
        default: {
            // diagonal product: e_i e_j = [i=j] e_i, twisted by powers of a
            // single basis permutation
            for (std::size_t i = 0; i < n; ++i) core.at(i, i * n + i) = Rational(1);
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            std::shuffle(perm.begin(), perm.end(), rng);
            Matrix p = permutation_matrix(perm);
            std::uniform_int_distribution<std::size_t> power(0, n);
            alpha = matrix_power(p, power(rng));
            beta = matrix_power(p, power(rng));
            break;
        }
    }

    // optional relabeling: conjugate the whole structure by a permutation
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix q = permutation_matrix(perm);
        Matrix qt = q.transpose();
        core = q * core * kronecker(qt, qt);
        alpha = q * alpha * qt;
        beta = q * beta * qt;
    }

    return yau_twist(core, alpha, beta);
}

} // namespace bihom
