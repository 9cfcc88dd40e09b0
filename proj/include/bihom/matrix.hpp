#ifndef BIHOM_MATRIX_HPP
#define BIHOM_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

using Vec = std::vector<Rational>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
Rational dot(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& v);
/// e_i (x) e_j |-> index i*len(b) + j.
Vec tensor(const Vec& a, const Vec& b);

/// Dense matrix of exact rationals, row-major. A rows x cols matrix
/// represents a linear map from K^cols to K^rows acting on column vectors.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_row(std::size_t i, const Vec& v);

    Matrix transpose() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    /// Matrix applied to a column vector.
    Vec apply(const Vec& v) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& c) const;
    bool operator==(const Matrix& o) const = default;

    /// Rows of `o` appended below this matrix (column counts must agree).
    Matrix vstack(const Matrix& o) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Kronecker product on the lexicographic tensor basis:
/// (a (x) b)(e_i (x) e_j) = a(e_i) (x) b(e_j).
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Reduced row-echelon form and the pivot columns in increasing order.
/// Pivot choice: first nonzero column, topmost unused row, leading entry 1.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One solution x of a x = b, or nullopt when inconsistent. Free variables 0.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Coordinates c with c^T rows = v, i.e. v as a combination of the rows.
std::optional<Vec> solve_coords(const Matrix& rows, const Vec& v);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// s with a s = identity(a.rows()), or nullopt when a has deficient row rank.
std::optional<Matrix> right_inverse(const Matrix& a);

/// "2*e0 - e1/3" style rendering of v against basis labels; "0" when zero.
std::string format_combination(const Vec& v, const std::vector<std::string>& labels);

} // namespace bihom

#endif
