#include "bihom/matrix.hpp"

#include <sstream>

#include "bihom/error.hpp"

namespace bihom {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch in addition");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch in subtraction");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch in dot product");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec tensor(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
    return r;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InputError("row length mismatch building matrix");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw InputError("row length mismatch in set_row");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s;
        for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = c * data_[i];
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (rows_ != 0 && o.rows_ != 0 && cols_ != o.cols_)
        throw InputError("vstack column mismatch");
    std::size_t cols = rows_ != 0 ? cols_ : o.cols_;
    Matrix r(rows_ + o.rows_, cols);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return r;
}

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != lead)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(lead, j));
        Rational inv = Rational(1) / r.at(lead, col);
        for (std::size_t j = 0; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            Rational f = r.at(i, col);
            for (std::size_t j = 0; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {r, pivots};
}

std::size_t rank(const Matrix& m) {
    return rref(m).second.size();
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw InputError("solve: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto [r, pivots] = rref(aug);
    for (std::size_t t = 0; t < pivots.size(); ++t)
        if (pivots[t] == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = r.at(t, a.cols());
    return x;
}

std::optional<Vec> solve_coords(const Matrix& rows, const Vec& v) {
    return solve(rows.transpose(), v);
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw InputError("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    auto [r, pivots] = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

std::optional<Matrix> right_inverse(const Matrix& a) {
    Matrix s(a.cols(), a.rows());
    for (std::size_t t = 0; t < a.rows(); ++t) {
        Vec e(a.rows());
        e[t] = Rational(1);
        auto x = solve(a, e);
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < a.cols(); ++i) s.at(i, t) = (*x)[i];
    }
    return s;
}

std::string format_combination(const Vec& v, const std::vector<std::string>& labels) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        Rational c = v[i];
        if (first) {
            if (c < Rational(0)) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < Rational(0) ? " - " : " + ");
            if (c < Rational(0)) c = -c;
        }
        std::string label = i < labels.size() ? labels[i] : "e" + std::to_string(i);
        if (c == Rational(1))
            os << label;
        else
            os << c.str() << "*" << label;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

} // namespace bihom
