#include "bihom/subspace.hpp"

#include <algorithm>

#include "bihom/error.hpp"

namespace bihom {

namespace {

Matrix drop_zero_rows(const Matrix& m) {
    std::vector<Vec> kept;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec r = m.row(i);
        if (!vec_is_zero(r)) kept.push_back(std::move(r));
    }
    return Matrix::from_rows(kept, m.cols());
}

std::vector<std::size_t> pivot_columns(const Matrix& canonical_basis) {
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < canonical_basis.rows(); ++i) {
        std::size_t j = 0;
        while (j < canonical_basis.cols() && canonical_basis.at(i, j).is_zero()) ++j;
        pivots.push_back(j);
    }
    return pivots;
}

} // namespace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(std::size_t ambient, const Matrix& rows) {
    if (rows.rows() != 0 && rows.cols() != ambient)
        throw InputError("span: rows have length " + std::to_string(rows.cols()) +
                         ", ambient dimension is " + std::to_string(ambient));
    Subspace s(ambient);
    s.basis_ = drop_zero_rows(rref(rows).first);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    return membership(*this, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw InputError("contains: ambient dimensions differ");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<Vec> membership(const Subspace& s, const Vec& v) {
    if (v.size() != s.ambient_dim())
        throw InputError("membership: vector length does not match ambient dimension");
    // The basis is in reduced row-echelon form, so the coordinate of basis
    // row i is just the entry of v at that row's pivot column.
    const Matrix& b = s.basis();
    std::vector<std::size_t> pivots = pivot_columns(b);
    Vec coords(b.rows());
    Vec rest = v;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        coords[i] = rest[pivots[i]];
        if (!coords[i].is_zero()) rest = vec_sub(rest, vec_scale(coords[i], b.row(i)));
    }
    if (!vec_is_zero(rest)) return std::nullopt;
    return coords;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InputError("intersect: ambient dimensions differ");
    // U = ker(ann(U)) for the standard pairing, so the intersection is the
    // kernel of the two annihilators stacked.
    Subspace ann_a = kernel_basis(a.basis());
    Subspace ann_b = kernel_basis(b.basis());
    return kernel_basis(ann_a.basis().vstack(ann_b.basis()));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InputError("sum: ambient dimensions differ");
    return Subspace::span(a.ambient_dim(), a.basis().vstack(b.basis()));
}

Subspace kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<Vec> rows;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(i, f);
        rows.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), Matrix::from_rows(rows, m.cols()));
}

QuotientData quotient(const Subspace& s) {
    std::size_t n = s.ambient_dim();
    std::size_t d = s.dim();
    std::size_t q = n - d;

    std::vector<std::size_t> pivots = pivot_columns(s.basis());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    // Full basis of K^n: the subspace basis first, then the standard basis
    // vectors at non-pivot positions.
    std::vector<Vec> frows;
    for (std::size_t i = 0; i < d; ++i) frows.push_back(s.basis().row(i));
    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        complement.push_back(j);
        Vec e(n);
        e[j] = Rational(1);
        frows.push_back(std::move(e));
    }

    Matrix f_cols = Matrix::from_rows(frows, n).transpose();
    std::optional<Matrix> inv = inverse(f_cols);
    if (!inv) throw Error("quotient: change-of-basis matrix is singular");

    Matrix projection(q, n);
    for (std::size_t i = 0; i < q; ++i)
        projection.set_row(i, inv->row(d + i));

    Matrix section(n, q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < n; ++j)
            section.at(j, i) = frows[d + i][j];

    return QuotientData{n, s, std::move(projection), std::move(section)};
}

} // namespace bihom
