#ifndef BIHOM_SUBSPACE_HPP
#define BIHOM_SUBSPACE_HPP

#include <cstddef>
#include <optional>

#include "bihom/matrix.hpp"

namespace bihom {

/// Linear subspace of K^n. The basis is kept in reduced row-echelon form
/// with zero rows dropped, so equal subspaces compare equal as matrices.
class Subspace {
public:
    /// The zero subspace of K^ambient.
    explicit Subspace(std::size_t ambient);

    /// Row span of `rows` inside K^ambient; rows need not be independent.
    static Subspace span(std::size_t ambient, const Matrix& rows);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t codim() const { return ambient_ - dim(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const = default;

private:
    std::size_t ambient_;
    Matrix basis_;
};

/// Coordinates of v in the subspace basis, or nullopt when v is outside.
std::optional<Vec> membership(const Subspace& s, const Vec& v);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Row span of the solution set of m v = 0, inside K^cols.
Subspace kernel_basis(const Matrix& m);

/// Quotient of K^n by a subspace: a projection onto K^codim whose kernel is
/// exactly the subspace, and a section with projection * section = identity.
struct QuotientData {
    std::size_t ambient_dim;
    Subspace subspace;
    Matrix projection; // codim x ambient
    Matrix section;    // ambient x codim

    std::size_t codim() const { return projection.rows(); }
};

QuotientData quotient(const Subspace& s);

} // namespace bihom

#endif
