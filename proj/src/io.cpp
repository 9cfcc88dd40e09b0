#include "bihom/io.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <set>
#include <utility>
#include <vector>

#include "bihom/error.hpp"

namespace bihom {

namespace {

const json& field(const json& j, const char* key, const std::string& what) {
    if (!j.is_object()) throw InputError(what + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(what + ": missing field \"" + std::string(key) + "\"");
    return *it;
}

std::size_t size_from_json(const json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InputError(what + ": expected a nonnegative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

std::vector<std::string> labels_from_json(const json& j, std::size_t dim,
                                          const std::string& what) {
    if (!j.is_array())
        throw InputError(what + ": expected an array of strings");
    if (j.size() != dim)
        throw InputError(what + ": expected " + std::to_string(dim) + " labels, got " +
                         std::to_string(j.size()));
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (const auto& entry : j) {
        if (!entry.is_string()) throw InputError(what + ": labels must be strings");
        labels.push_back(entry.get<std::string>());
    }
    return labels;
}

json labels_to_json(const std::vector<std::string>& labels) {
    return json(labels);
}

Vec vec_from_json(const json& j, std::size_t len, const std::string& what) {
    if (!j.is_array())
        throw InputError(what + ": expected an array of rationals");
    if (j.size() != len)
        throw InputError(what + ": expected " + std::to_string(len) + " entries, got " +
                         std::to_string(j.size()));
    Vec v;
    v.reserve(len);
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rational_from_json(j[i]));
    return v;
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rational_to_json(x));
    return out;
}

/// Sparse trilinear table [[i, j, k, coeff], ...] poured into a dense matrix
/// through `place`, which maps an index triple to a (row, col) cell.
template <typename Place>
Matrix sparse_table_from_json(const json& j, const std::array<std::size_t, 3>& bounds,
                              std::size_t rows, std::size_t cols, const std::string& what,
                              Place place) {
    if (!j.is_array())
        throw InputError(what + ": expected an array of [i, j, k, coeff] entries");
    Matrix m(rows, cols);
    std::set<std::array<std::size_t, 3>> seen;
    for (std::size_t n = 0; n < j.size(); ++n) {
        const json& e = j[n];
        const std::string here = what + "[" + std::to_string(n) + "]";
        if (!e.is_array() || e.size() != 4)
            throw InputError(here + ": expected [i, j, k, coeff]");
        std::array<std::size_t, 3> idx{};
        for (std::size_t t = 0; t < 3; ++t) {
            idx[t] = size_from_json(e[t], here);
            if (idx[t] >= bounds[t])
                throw InputError(here + ": index " + std::to_string(idx[t]) +
                                 " out of range (bound " + std::to_string(bounds[t]) + ")");
        }
        if (!seen.insert(idx).second)
            throw InputError(here + ": duplicate entry for indices (" + std::to_string(idx[0]) +
                             "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]) + ")");
        auto [r, c] = place(idx[0], idx[1], idx[2]);
        m.at(r, c) = rational_from_json(e[3]);
    }
    return m;
}

/// Emit the non-zero cells of a trilinear table in index order.
template <typename Fetch>
json sparse_table_to_json(const std::array<std::size_t, 3>& bounds, Fetch fetch) {
    json out = json::array();
    for (std::size_t i = 0; i < bounds[0]; ++i)
        for (std::size_t j = 0; j < bounds[1]; ++j)
            for (std::size_t k = 0; k < bounds[2]; ++k) {
                const Rational& c = fetch(i, j, k);
                if (c.is_zero()) continue;
                out.push_back(json::array({i, j, k, rational_to_json(c)}));
            }
    return out;
}

/// An embedded object, or a string naming a file to load (relative paths
/// resolve against the referencing file's directory).
json resolve_ref(const json& j, const std::string& base_dir, const std::string& what) {
    if (j.is_object()) return j;
    if (j.is_string()) {
        std::filesystem::path p(j.get<std::string>());
        if (p.is_relative() && !base_dir.empty())
            p = std::filesystem::path(base_dir) / p;
        return load_json(p.string());
    }
    throw InputError(what + ": expected an embedded object or a file path string");
}

Subspace witness_subspace_from_json(const json& j, std::size_t ambient,
                                    const std::string& what) {
    const json& rows = field(j, "basis", what);
    if (!rows.is_array())
        throw InputError(what + ".basis: expected an array of rows");
    std::vector<Vec> v;
    v.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        v.push_back(vec_from_json(rows[i], ambient, what + ".basis[" + std::to_string(i) + "]"));
    return Subspace::span(ambient, Matrix::from_rows(v, ambient));
}

json basis_rows_to_json(const Matrix& basis) {
    json rows = json::array();
    for (std::size_t i = 0; i < basis.rows(); ++i)
        rows.push_back(vec_to_json(basis.row(i)));
    return rows;
}

} // namespace

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw InputError("expected a rational as \"p\", \"p/q\" or an integer, got " +
                     std::string(j.type_name()));
}

json rational_to_json(const Rational& r) {
    return json(r.str());
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                        const std::string& what) {
    Vec flat = vec_from_json(j, rows * cols, what);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = flat[r * cols + c];
    return m;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out.push_back(rational_to_json(m.at(r, c)));
    return out;
}

Subspace subspace_from_json(const json& j) {
    std::size_t ambient = size_from_json(field(j, "ambient", "subspace"), "subspace.ambient");
    return witness_subspace_from_json(j, ambient, "subspace");
}

json subspace_to_json(const Subspace& s) {
    json out;
    out["ambient"] = s.ambient_dim();
    out["basis"] = basis_rows_to_json(s.basis());
    return out;
}

FDBiHomAlgebra algebra_from_json(const json& j) {
    const std::string what = "algebra";
    std::size_t dim = size_from_json(field(j, "dim", what), what + ".dim");
    std::vector<std::string> labels = j.contains("basis")
        ? labels_from_json(j["basis"], dim, what + ".basis")
        : default_labels(dim);
    Matrix mu = sparse_table_from_json(
        field(j, "mu", what), {dim, dim, dim}, dim, dim * dim, what + ".mu",
        [dim](std::size_t i, std::size_t jj, std::size_t k) {
            return std::pair<std::size_t, std::size_t>(k, i * dim + jj);
        });
    Matrix alpha = matrix_from_json(field(j, "alpha", what), dim, dim, what + ".alpha");
    Matrix beta = matrix_from_json(field(j, "beta", what), dim, dim, what + ".beta");
    return FDBiHomAlgebra(dim, std::move(labels), std::move(mu), std::move(alpha),
                          std::move(beta));
}

json algebra_to_json(const FDBiHomAlgebra& a) {
    json out;
    out["dim"] = a.dim();
    out["basis"] = labels_to_json(a.basis_labels());
    out["mu"] = sparse_table_to_json(
        {a.dim(), a.dim(), a.dim()},
        [&a](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
            return a.c(i, j, k);
        });
    out["alpha"] = matrix_to_json(a.alpha());
    out["beta"] = matrix_to_json(a.beta());
    return out;
}

FDBiHomCoalgebra coalgebra_from_json(const json& j) {
    const std::string what = "coalgebra";
    std::size_t dim = size_from_json(field(j, "dim", what), what + ".dim");
    std::vector<std::string> labels = j.contains("basis")
        ? labels_from_json(j["basis"], dim, what + ".basis")
        : default_labels(dim);
    Matrix delta = sparse_table_from_json(
        field(j, "delta", what), {dim, dim, dim}, dim * dim, dim, what + ".delta",
        [dim](std::size_t i, std::size_t jj, std::size_t k) {
            return std::pair<std::size_t, std::size_t>(jj * dim + k, i);
        });
    Matrix psi = matrix_from_json(field(j, "psi", what), dim, dim, what + ".psi");
    Matrix phi = matrix_from_json(field(j, "phi", what), dim, dim, what + ".phi");
    return FDBiHomCoalgebra(dim, std::move(labels), std::move(delta), std::move(psi),
                            std::move(phi));
}

json coalgebra_to_json(const FDBiHomCoalgebra& c) {
    json out;
    out["dim"] = c.dim();
    out["basis"] = labels_to_json(c.basis_labels());
    out["delta"] = sparse_table_to_json(
        {c.dim(), c.dim(), c.dim()},
        [&c](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
            return c.d(i, j, k);
        });
    out["psi"] = matrix_to_json(c.psi());
    out["phi"] = matrix_to_json(c.phi());
    return out;
}

AlgebraMorphism morphism_from_json(const json& j, const std::string& base_dir) {
    const std::string what = "morphism";
    FDBiHomAlgebra source =
        algebra_from_json(resolve_ref(field(j, "source", what), base_dir, what + ".source"));
    FDBiHomAlgebra target =
        algebra_from_json(resolve_ref(field(j, "target", what), base_dir, what + ".target"));
    Matrix map = matrix_from_json(field(j, "map", what), target.dim(), source.dim(),
                                  what + ".map");
    return AlgebraMorphism{std::move(source), std::move(target), std::move(map)};
}

json morphism_to_json(const AlgebraMorphism& f) {
    json out;
    out["source"] = algebra_to_json(f.source);
    out["target"] = algebra_to_json(f.target);
    out["map"] = matrix_to_json(f.map);
    return out;
}

CoalgebraMorphism coalgebra_morphism_from_json(const json& j, const std::string& base_dir) {
    const std::string what = "coalgebra morphism";
    FDBiHomCoalgebra source =
        coalgebra_from_json(resolve_ref(field(j, "source", what), base_dir, what + ".source"));
    FDBiHomCoalgebra target =
        coalgebra_from_json(resolve_ref(field(j, "target", what), base_dir, what + ".target"));
    Matrix map = matrix_from_json(field(j, "map", what), target.dim(), source.dim(),
                                  what + ".map");
    return CoalgebraMorphism{std::move(source), std::move(target), std::move(map)};
}

json coalgebra_morphism_to_json(const CoalgebraMorphism& g) {
    json out;
    out["source"] = coalgebra_to_json(g.source);
    out["target"] = coalgebra_to_json(g.target);
    out["map"] = matrix_to_json(g.map);
    return out;
}

FDBiHomModule module_from_json(const json& j, const std::string& base_dir) {
    const std::string what = "module";
    FDBiHomAlgebra algebra =
        algebra_from_json(resolve_ref(field(j, "algebra", what), base_dir, what + ".algebra"));
    std::size_t dim_m = size_from_json(field(j, "dim_m", what), what + ".dim_m");
    std::size_t dim_g = algebra.dim();
    std::vector<std::string> labels = j.contains("basis")
        ? labels_from_json(j["basis"], dim_m, what + ".basis")
        : std::vector<std::string>{};
    Matrix rho = sparse_table_from_json(
        field(j, "rho", what), {dim_m, dim_g, dim_m}, dim_m, dim_m * dim_g, what + ".rho",
        [dim_g](std::size_t p, std::size_t jj, std::size_t q) {
            return std::pair<std::size_t, std::size_t>(q, p * dim_g + jj);
        });
    Matrix kappa = matrix_from_json(field(j, "kappa", what), dim_m, dim_m, what + ".kappa");
    Matrix tau = matrix_from_json(field(j, "tau", what), dim_m, dim_m, what + ".tau");
    return FDBiHomModule(std::move(algebra), dim_m, std::move(labels), std::move(rho),
                         std::move(kappa), std::move(tau));
}

json module_to_json(const FDBiHomModule& m) {
    json out;
    out["algebra"] = algebra_to_json(m.algebra());
    out["dim_m"] = m.dim_m();
    out["basis"] = labels_to_json(m.basis_labels());
    out["rho"] = sparse_table_to_json(
        {m.dim_m(), m.algebra().dim(), m.dim_m()},
        [&m](std::size_t p, std::size_t j, std::size_t q) -> const Rational& {
            return m.r(p, j, q);
        });
    out["kappa"] = matrix_to_json(m.kappa());
    out["tau"] = matrix_to_json(m.tau());
    return out;
}

FDBiHomComodule comodule_from_json(const json& j, const std::string& base_dir) {
    const std::string what = "comodule";
    FDBiHomCoalgebra coalgebra = coalgebra_from_json(
        resolve_ref(field(j, "coalgebra", what), base_dir, what + ".coalgebra"));
    std::size_t dim_a = size_from_json(field(j, "dim_a", what), what + ".dim_a");
    std::size_t dim_c = coalgebra.dim();
    std::vector<std::string> labels = j.contains("basis")
        ? labels_from_json(j["basis"], dim_a, what + ".basis")
        : std::vector<std::string>{};
    Matrix gamma = sparse_table_from_json(
        field(j, "gamma", what), {dim_a, dim_a, dim_c}, dim_a * dim_c, dim_a, what + ".gamma",
        [dim_c](std::size_t p, std::size_t q, std::size_t k) {
            return std::pair<std::size_t, std::size_t>(q * dim_c + k, p);
        });
    Matrix omega = matrix_from_json(field(j, "omega", what), dim_a, dim_a, what + ".omega");
    Matrix theta = matrix_from_json(field(j, "theta", what), dim_a, dim_a, what + ".theta");
    return FDBiHomComodule(std::move(coalgebra), dim_a, std::move(labels), std::move(gamma),
                           std::move(omega), std::move(theta));
}

json comodule_to_json(const FDBiHomComodule& c) {
    json out;
    out["coalgebra"] = coalgebra_to_json(c.coalgebra());
    out["dim_a"] = c.dim_a();
    out["basis"] = labels_to_json(c.basis_labels());
    out["gamma"] = sparse_table_to_json(
        {c.dim_a(), c.dim_a(), c.coalgebra().dim()},
        [&c](std::size_t p, std::size_t q, std::size_t k) -> const Rational& {
            return c.g(p, q, k);
        });
    out["omega"] = matrix_to_json(c.omega());
    out["theta"] = matrix_to_json(c.theta());
    return out;
}

ModuleMorphism module_morphism_from_json(const json& j, const std::string& base_dir) {
    const std::string what = "module morphism";
    FDBiHomModule source =
        module_from_json(resolve_ref(field(j, "source", what), base_dir, what + ".source"),
                         base_dir);
    FDBiHomModule target =
        module_from_json(resolve_ref(field(j, "target", what), base_dir, what + ".target"),
                         base_dir);
    Matrix map = matrix_from_json(field(j, "map", what), target.dim_m(), source.dim_m(),
                                  what + ".map");
    return ModuleMorphism{std::move(source), std::move(target), std::move(map)};
}

json module_morphism_to_json(const ModuleMorphism& s) {
    json out;
    out["source"] = module_to_json(s.source);
    out["target"] = module_to_json(s.target);
    out["map"] = matrix_to_json(s.map);
    return out;
}

ComoduleMorphism comodule_morphism_from_json(const json& j, const std::string& base_dir) {
    const std::string what = "comodule morphism";
    FDBiHomComodule source =
        comodule_from_json(resolve_ref(field(j, "source", what), base_dir, what + ".source"),
                           base_dir);
    FDBiHomComodule target =
        comodule_from_json(resolve_ref(field(j, "target", what), base_dir, what + ".target"),
                           base_dir);
    Matrix map = matrix_from_json(field(j, "map", what), target.dim_a(), source.dim_a(),
                                  what + ".map");
    return ComoduleMorphism{std::move(source), std::move(target), std::move(map)};
}

json comodule_morphism_to_json(const ComoduleMorphism& s) {
    json out;
    out["source"] = comodule_to_json(s.source);
    out["target"] = comodule_to_json(s.target);
    out["map"] = matrix_to_json(s.map);
    return out;
}

SweedlerFunctional functional_from_json(const json& j, const FDBiHomAlgebra& a) {
    const std::string what = "functional";
    Vec coeffs = vec_from_json(field(j, "coeffs", what), a.dim(), what + ".coeffs");
    Subspace s =
        witness_subspace_from_json(field(j, "witness", what), a.dim(), what + ".witness");
    return sweedler_wrap(a, coeffs, make_ideal(a, s));
}

json functional_to_json(const SweedlerFunctional& f) {
    json out;
    out["coeffs"] = vec_to_json(f.coeffs);
    out["witness"] = json{{"basis", basis_rows_to_json(f.witness.subspace.basis())}};
    return out;
}

ModuleSweedlerFunctional module_functional_from_json(const json& j, const FDBiHomModule& m) {
    const std::string what = "module functional";
    Vec coeffs = vec_from_json(field(j, "coeffs", what), m.dim_m(), what + ".coeffs");
    Subspace s = witness_subspace_from_json(field(j, "witness", what), m.algebra().dim(),
                                            what + ".witness");
    return module_sweedler_wrap(m, coeffs, make_ideal(m.algebra(), s));
}

json module_functional_to_json(const ModuleSweedlerFunctional& f) {
    json out;
    out["coeffs"] = vec_to_json(f.coeffs);
    out["witness"] = json{{"basis", basis_rows_to_json(f.witness.subspace.basis())}};
    return out;
}

std::string canonical_dump(const json& j) {
    return j.dump(2) + "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open file for writing");
    out << canonical_dump(j);
    if (!out) throw InputError(path + ": write failed");
}

} // namespace bihom
