#ifndef BIHOM_IO_HPP
#define BIHOM_IO_HPP

#include <cstddef>
#include <string>

#include <json.hpp>

#include "bihom/algebra.hpp"
#include "bihom/coalgebra.hpp"
#include "bihom/duality.hpp"
#include "bihom/module.hpp"
#include "bihom/subspace.hpp"

namespace bihom {

using json = nlohmann::json;

/// Parse a rational from a JSON string ("p", "p/q") or integer.
Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

/// Row-major dense matrix from a flat JSON array of rationals.
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                        const std::string& what);
json matrix_to_json(const Matrix& m);

/// { "ambient": n, "basis": [[...], ...] }; rows may be empty.
Subspace subspace_from_json(const json& j);
json subspace_to_json(const Subspace& s);

/// { "dim", "basis", "mu": [[i, j, k, coeff], ...], "alpha", "beta" };
/// omitted mu entries are zero, duplicates are rejected.
FDBiHomAlgebra algebra_from_json(const json& j);
json algebra_to_json(const FDBiHomAlgebra& a);

/// { "dim", "basis", "delta": [[i, j, k, coeff], ...], "psi", "phi" } where
/// the entry holds the e_j⊗e_k coefficient of delta(e_i).
FDBiHomCoalgebra coalgebra_from_json(const json& j);
json coalgebra_to_json(const FDBiHomCoalgebra& c);

/// { "source": <algebra or file ref>, "target": <...>, "map": [...] };
/// base_dir resolves relative file refs.
AlgebraMorphism morphism_from_json(const json& j, const std::string& base_dir);
json morphism_to_json(const AlgebraMorphism& f);

CoalgebraMorphism coalgebra_morphism_from_json(const json& j, const std::string& base_dir);
json coalgebra_morphism_to_json(const CoalgebraMorphism& g);

/// { "algebra": <embedded or file ref>, "dim_m", "basis", "rho": [[p, j, q,
/// coeff], ...], "kappa", "tau" }.
FDBiHomModule module_from_json(const json& j, const std::string& base_dir);
json module_to_json(const FDBiHomModule& m);

/// { "coalgebra": <embedded or file ref>, "dim_a", "basis", "gamma": [[p, q,
/// k, coeff], ...], "omega", "theta" }.
FDBiHomComodule comodule_from_json(const json& j, const std::string& base_dir);
json comodule_to_json(const FDBiHomComodule& c);

/// { "source": <module or file ref>, "target": <...>, "map": [...] }.
ModuleMorphism module_morphism_from_json(const json& j, const std::string& base_dir);
json module_morphism_to_json(const ModuleMorphism& s);

ComoduleMorphism comodule_morphism_from_json(const json& j, const std::string& base_dir);
json comodule_morphism_to_json(const ComoduleMorphism& s);

/// { "coeffs": [...], "witness": { "basis": [[...]] } }; the witness ideal
/// is re-certified against the given algebra on load.
SweedlerFunctional functional_from_json(const json& j, const FDBiHomAlgebra& a);
json functional_to_json(const SweedlerFunctional& f);

ModuleSweedlerFunctional module_functional_from_json(const json& j, const FDBiHomModule& m);
json module_functional_to_json(const ModuleSweedlerFunctional& f);

/// Sorted keys, two-space indent, trailing newline: serializing a parsed
/// canonical file reproduces it byte for byte.
std::string canonical_dump(const json& j);

/// Read and parse; parse failures become InputError with the position.
json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);

} // namespace bihom

#endif
