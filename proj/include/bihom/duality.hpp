#ifndef BIHOM_DUALITY_HPP
#define BIHOM_DUALITY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/coalgebra.hpp"
#include "bihom/matrix.hpp"
#include "bihom/report.hpp"
#include "bihom/subspace.hpp"

namespace bihom {

/// Dual coalgebra of a validated algebra: the comultiplication is the
/// transpose of the multiplication, and the twists swap sides (psi is the
/// transpose of beta, phi the transpose of alpha).
FDBiHomCoalgebra dual_coalgebra(const FDBiHomAlgebra& a);

/// Transpose of an algebra map, as a map between the dual coalgebras in the
/// reverse direction. The map itself is not validated here: transposition
/// turns morphisms into morphisms and non-morphisms into non-morphisms, and
/// the two validators agree (tested as an equivalence).
CoalgebraMorphism dual_algebra_morphism(const AlgebraMorphism& f);

/// Kernel of the tensor product of two quotient projections, together with
/// a report asserting it equals (full ⊗ j) + (i ⊗ full) and that the
/// quotient dimension is the product of the codimensions.
struct TensorQuotientKernel {
    Subspace kernel;
    ValidationReport report;
};

TensorQuotientKernel tensor_quotient_kernel(std::size_t dim_a, std::size_t dim_b,
                                            const Subspace& i, const Subspace& j);

/// A linear functional on an algebra carrying a certificate: an ideal of
/// finite codimension that the functional annihilates.
struct SweedlerFunctional {
    FDBiHomAlgebra algebra;
    Vec coeffs; // coordinates in the dual basis
    IdealHandle witness;
};

/// Checks annihilation of the witness basis and wraps; PreconditionError
/// names the first ideal basis vector the functional fails to kill.
SweedlerFunctional sweedler_wrap(const FDBiHomAlgebra& a, const Vec& coeffs,
                                 const IdealHandle& j);

/// Sum of functionals; the combined witness is the intersection of the two
/// witness ideals, and annihilation is re-verified.
SweedlerFunctional sweedler_add(const SweedlerFunctional& f, const SweedlerFunctional& g);

/// Comultiplication of a certified functional, computed through the quotient
/// by its witness ideal: descend the functional and the product to the
/// quotient, read off the coefficient matrix, and pull the dual-basis
/// factors back along the projection (each factor keeps the same witness).
struct SweedlerDelta {
    std::vector<std::pair<SweedlerFunctional, SweedlerFunctional>> pairs;
    Vec tensor_form; // length dim^2 on the dual tensor basis, the sum of the pairs
};

SweedlerDelta sweedler_delta(const SweedlerFunctional& f);

enum class TwistChoice { Alpha, Beta };

/// Precompose with the chosen twist; the witness survives because certified
/// ideals are twist-closed.
SweedlerFunctional sweedler_twist(const SweedlerFunctional& f, TwistChoice which);

/// Pull a certified functional back along a validated morphism; the new
/// witness is the preimage ideal of the old one.
SweedlerFunctional sweedler_dual_morphism(const AlgebraMorphism& f, const SweedlerFunctional& b);

} // namespace bihom

#endif
