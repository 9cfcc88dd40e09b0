#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "bihom/duality.hpp"
#include "bihom/error.hpp"
#include "bihom/generators.hpp"
#include "bihom/io.hpp"
#include "bihom/module.hpp"
#include "bihom/poly.hpp"

using namespace bihom;

namespace {

struct CliReport {
    std::string command;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    std::optional<json> artifact;
    std::string artifact_path;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

bool color_enabled() {
    if (const char* e = std::getenv("BIHOM_COLOR")) return std::string(e) != "0";
    return isatty(fileno(stdout)) != 0;
}

void render_text(const CliReport& rep) {
    const bool color = color_enabled();
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* reset = color ? "\033[0m" : "";
    std::cout << "command: " << rep.command << "\n";
    std::size_t passed = 0;
    for (const auto& c : rep.checks) {
        if (c.passed) {
            ++passed;
            std::cout << "check: " << c.name << " " << green << "pass" << reset << "\n";
        } else {
            std::cout << "check: " << c.name << " " << red << "FAIL" << reset << "\n";
            std::cout << "  witness: " << c.witness << "\n";
        }
    }
    for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
    if (!rep.artifact_path.empty())
        std::cout << "artifact: " << rep.artifact_path << "\n";
    else if (rep.artifact)
        std::cout << "artifact:\n" << canonical_dump(*rep.artifact);
    if (rep.checks.empty()) {
        std::cout << "result: " << green << "ok" << reset << "\n";
    } else if (rep.all_passed()) {
        std::cout << "result: " << green << "pass" << reset << " (" << passed << " of "
                  << rep.checks.size() << " checks)\n";
    } else {
        std::cout << "result: " << red << "FAIL" << reset << " (" << passed << " of "
                  << rep.checks.size() << " checks passed)\n";
    }
}

void render_json(const CliReport& rep) {
    json j;
    j["command"] = rep.command;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        if (!c.passed) e["witness"] = c.witness;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["notes"] = json(rep.notes);
    if (!rep.artifact_path.empty())
        j["artifact_path"] = rep.artifact_path;
    else if (rep.artifact)
        j["artifact"] = *rep.artifact;
    j["passed"] = rep.all_passed();
    std::cout << canonical_dump(j);
}

struct Options {
    std::string format = "text";
    std::string out;
};

/// Runs a command body, turning a PreconditionError into a failed check, and
/// renders the report. Returns the process exit code.
int execute(const std::string& echo, const Options& opts,
            const std::function<void(CliReport&)>& body) {
    CliReport rep;
    rep.command = echo;
    try {
        body(rep);
    } catch (const PreconditionError& e) {
        rep.checks.push_back({"precondition", false, e.what()});
    }
    if (opts.format == "json")
        render_json(rep);
    else
        render_text(rep);
    return rep.all_passed() ? 0 : 1;
}

void append_checks(CliReport& rep, const ValidationReport& vr, const std::string& prefix = "") {
    for (const auto& c : vr.checks)
        rep.checks.push_back({prefix.empty() ? c.name : prefix + c.name, c.passed, c.witness});
}

/// Stores the artifact at -o (listing the path) or inlines it in the report.
void emit_artifact(CliReport& rep, const json& artifact, const Options& opts) {
    if (opts.out.empty()) {
        rep.artifact = artifact;
    } else {
        save_json(artifact, opts.out);
        rep.artifact_path = opts.out;
    }
}

std::string dir_of(const std::string& path) {
    return std::filesystem::path(path).parent_path().string();
}

std::vector<std::string> dual_labels(const FDBiHomAlgebra& a) {
    std::vector<std::string> out;
    for (const auto& l : a.basis_labels()) out.push_back(l + "*");
    return out;
}

std::vector<std::string> dual_labels(const FDBiHomModule& m) {
    std::vector<std::string> out;
    for (const auto& l : m.basis_labels()) out.push_back(l + "*");
    return out;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) {
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        parts.push_back(a == std::string::npos ? "" : piece.substr(a, b - a + 1));
    }
    return parts;
}

MultiIndex parse_multi_index(const std::string& text, const std::string& what) {
    MultiIndex m;
    for (const auto& p : split_csv(text)) {
        if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
            throw InputError(what + ": expected a comma-separated list of nonnegative integers, got \"" +
                             text + "\"");
        m.push_back(static_cast<std::size_t>(std::stoull(p)));
    }
    if (m.empty()) throw InputError(what + ": empty multi-index");
    return m;
}

Matrix parse_square_matrix(const std::string& text, std::size_t n, const std::string& what) {
    std::vector<std::string> parts = split_csv(text);
    if (parts.size() != n * n)
        throw InputError(what + ": expected " + std::to_string(n * n) +
                         " comma-separated rationals, got " + std::to_string(parts.size()));
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational::parse(parts[i * n + j]);
    return m;
}

CofiniteMonomialIdeal parse_ideal_spec(const std::string& text, std::size_t vars) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw InputError("ideal spec: expected \"TotalDegree:<d>\" or \"Staircase:<n1,...>\", got \"" +
                         text + "\"");
    std::string kind = text.substr(0, colon);
    std::string args = text.substr(colon + 1);
    if (kind == "TotalDegree") {
        MultiIndex d = parse_multi_index(args, "ideal spec");
        if (d.size() != 1) throw InputError("ideal spec: TotalDegree takes one integer");
        return CofiniteMonomialIdeal::total_degree(vars, d[0]);
    }
    if (kind == "Staircase") return CofiniteMonomialIdeal::staircase(parse_multi_index(args, "ideal spec"));
    throw InputError("ideal spec: unknown kind \"" + kind + "\"");
}

json poly_to_json(std::size_t vars, const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(json::array({json(m), rational_to_json(c)}));
    json out;
    out["vars"] = vars;
    out["terms"] = terms;
    return out;
}

json dual_functional_to_json(const DualFunctional& f) {
    json terms = json::array();
    for (const auto& [n, c] : f.terms)
        terms.push_back(json::array({json(n), rational_to_json(c)}));
    return json{{"terms", terms}};
}

Subspace load_subspace(const std::string& path, std::size_t expected_ambient,
                       const std::string& what) {
    Subspace s = subspace_from_json(load_json(path));
    if (s.ambient_dim() != expected_ambient)
        throw InputError(what + ": ambient dimension " + std::to_string(s.ambient_dim()) +
                         " does not match the structure dimension " +
                         std::to_string(expected_ambient));
    return s;
}

/// Pre-validate a structure before a construction that requires validity;
/// on failure the report carries the failing checks and the body stops.
template <typename Validate, typename Structure>
bool gate(CliReport& rep, Validate validate, const Structure& s, const std::string& prefix = "") {
    ValidationReport vr = validate(s);
    append_checks(rep, vr, prefix);
    return vr.all_passed();
}

} // namespace

int main(int argc, char** argv) {
    std::string echo = "bihom";
    for (int i = 1; i < argc; ++i) echo += std::string(" ") + argv[i];

    CLI::App app{"exact validators, duals and finite-dual comultiplication for twisted algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--format", opts.format, "report rendering: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int exit_code = 0;
    auto run = [&](const std::function<void(CliReport&)>& body) {
        exit_code = execute(echo, opts, body);
    };

    // Shared argument holders; exactly one leaf command parses per run.
    std::string file1, file2, file3, which;
    std::size_t vars = 1;
    std::string twist_a, twist_b, index1, index2, ideal_spec;
    std::size_t degree_bound = 4;
    std::uint64_t seed = 0;
    std::size_t bound = 5;

    // validate ------------------------------------------------------------
    CLI::App* validate = app.add_subcommand("validate", "check the axioms of a structure file");
    validate->require_subcommand(1);
    validate->fallthrough();

    CLI::App* v_alg = validate->add_subcommand("algebra", "twisted algebra axioms");
    v_alg->fallthrough();
    v_alg->add_option("file", file1, "algebra json file")->required();
    v_alg->callback([&] {
        run([&](CliReport& rep) {
            append_checks(rep, validate_algebra(algebra_from_json(load_json(file1))));
        });
    });

    CLI::App* v_coalg = validate->add_subcommand("coalgebra", "twisted coalgebra axioms");
    v_coalg->fallthrough();
    v_coalg->add_option("file", file1, "coalgebra json file")->required();
    v_coalg->callback([&] {
        run([&](CliReport& rep) {
            append_checks(rep, validate_coalgebra(coalgebra_from_json(load_json(file1))));
        });
    });

    CLI::App* v_mod = validate->add_subcommand("module", "right module axioms");
    v_mod->fallthrough();
    v_mod->add_option("file", file1, "module json file")->required();
    v_mod->callback([&] {
        run([&](CliReport& rep) {
            append_checks(rep, validate_module(module_from_json(load_json(file1), dir_of(file1))));
        });
    });

    CLI::App* v_comod = validate->add_subcommand("comodule", "right comodule axioms");
    v_comod->fallthrough();
    v_comod->add_option("file", file1, "comodule json file")->required();
    v_comod->callback([&] {
        run([&](CliReport& rep) {
            append_checks(rep,
                          validate_comodule(comodule_from_json(load_json(file1), dir_of(file1))));
        });
    });

    CLI::App* v_mor = validate->add_subcommand(
        "morphism", "morphism compatibility; the kind is read off the source structure");
    v_mor->fallthrough();
    v_mor->add_option("file", file1, "morphism json file")->required();
    v_mor->callback([&] {
        run([&](CliReport& rep) {
            json j = load_json(file1);
            if (!j.is_object() || !j.contains("source"))
                throw InputError("morphism: missing field \"source\"");
            json src = j["source"].is_string()
                           ? load_json((std::filesystem::path(dir_of(file1)) /
                                        j["source"].get<std::string>())
                                           .string())
                           : j["source"];
            if (!src.is_object())
                throw InputError("morphism.source: expected an object or a file path string");
            if (src.contains("mu")) {
                rep.notes.push_back("source carries a product: validating as an algebra morphism");
                append_checks(rep, validate_morphism(morphism_from_json(j, dir_of(file1))));
            } else if (src.contains("delta")) {
                rep.notes.push_back(
                    "source carries a comultiplication: validating as a coalgebra morphism");
                append_checks(rep, validate_coalgebra_morphism(
                                       coalgebra_morphism_from_json(j, dir_of(file1))));
            } else if (src.contains("rho")) {
                rep.notes.push_back("source carries an action: validating as a module morphism");
                append_checks(rep, validate_module_morphism(
                                       module_morphism_from_json(j, dir_of(file1))));
            } else if (src.contains("gamma")) {
                rep.notes.push_back(
                    "source carries a coaction: validating as a comodule morphism");
                append_checks(rep, validate_comodule_morphism(
                                       comodule_morphism_from_json(j, dir_of(file1))));
            } else {
                throw InputError("morphism.source: no mu, delta, rho or gamma field to identify "
                                 "the structure kind");
            }
        });
    });

    // dualize -------------------------------------------------------------
    CLI::App* dualize = app.add_subcommand("dualize", "transpose a structure onto its dual space");
    dualize->require_subcommand(1);
    dualize->fallthrough();

    CLI::App* d_alg = dualize->add_subcommand("algebra", "dual coalgebra of a valid algebra");
    d_alg->fallthrough();
    d_alg->add_option("file", file1, "algebra json file")->required();
    d_alg->add_option("-o,--out", opts.out, "write the dual coalgebra here");
    d_alg->callback([&] {
        run([&](CliReport& rep) {
            FDBiHomAlgebra a = algebra_from_json(load_json(file1));
            if (!gate(rep, validate_algebra, a)) return;
            FDBiHomCoalgebra c = dual_coalgebra(a);
            rep.notes.push_back("dual coalgebra on the dual basis: comultiplication is the "
                                "transpose of the product, twists swap sides");
            emit_artifact(rep, coalgebra_to_json(c), opts);
        });
    });

    CLI::App* d_mor = dualize->add_subcommand("morphism",
                                              "transpose an algebra morphism between the duals");
    d_mor->fallthrough();
    d_mor->add_option("file", file1, "algebra morphism json file")->required();
    d_mor->add_option("-o,--out", opts.out, "write the dual coalgebra morphism here");
    d_mor->callback([&] {
        run([&](CliReport& rep) {
            AlgebraMorphism f = morphism_from_json(load_json(file1), dir_of(file1));
            if (!gate(rep, validate_morphism, f)) return;
            if (!gate(rep, validate_algebra, f.source, "source:")) return;
            if (!gate(rep, validate_algebra, f.target, "target:")) return;
            CoalgebraMorphism g = dual_algebra_morphism(f);
            rep.notes.push_back("the dual map runs opposite to the original: from the dual of "
                                "the target to the dual of the source");
            emit_artifact(rep, coalgebra_morphism_to_json(g), opts);
        });
    });

    CLI::App* d_mod = dualize->add_subcommand("module", "dual comodule of a valid module");
    d_mod->fallthrough();
    d_mod->add_option("file", file1, "module json file")->required();
    d_mod->add_option("-o,--out", opts.out, "write the dual comodule here");
    d_mod->callback([&] {
        run([&](CliReport& rep) {
            FDBiHomModule m = module_from_json(load_json(file1), dir_of(file1));
            if (!gate(rep, validate_algebra, m.algebra(), "algebra:")) return;
            if (!gate(rep, validate_module, m, "module:")) return;
            FDBiHomComodule c = dual_comodule(m);
            rep.notes.push_back("dual comodule over the dual coalgebra: the coaction is the "
                                "transpose of the action");
            emit_artifact(rep, comodule_to_json(c), opts);
        });
    });

    // ideal ---------------------------------------------------------------
    CLI::App* ideal = app.add_subcommand("ideal", "two-sided twist-closed ideals of an algebra");
    ideal->require_subcommand(1);
    ideal->fallthrough();

    CLI::App* i_check = ideal->add_subcommand("check", "absorption and twist closure of a subspace");
    i_check->fallthrough();
    i_check->add_option("algebra", file1, "algebra json file")->required();
    i_check->add_option("subspace", file2, "subspace json file")->required();
    i_check->callback([&] {
        run([&](CliReport& rep) {
            FDBiHomAlgebra a = algebra_from_json(load_json(file1));
            Subspace s = load_subspace(file2, a.dim(), "subspace");
            append_checks(rep, check_ideal(a, s));
            rep.notes.push_back("subspace dimension " + std::to_string(s.dim()) +
                                ", codimension " + std::to_string(s.codim()));
        });
    });

    CLI::App* i_closure =
        ideal->add_subcommand("closure", "smallest ideal containing the given subspace");
    i_closure->fallthrough();
    i_closure->add_option("algebra", file1, "algebra json file")->required();
    i_closure->add_option("subspace", file2, "generating subspace json file")->required();
    i_closure->add_option("-o,--out", opts.out, "write the closure subspace here");
    i_closure->callback([&] {
        run([&](CliReport& rep) {
            FDBiHomAlgebra a = algebra_from_json(load_json(file1));
            Subspace s = load_subspace(file2, a.dim(), "subspace");
            std::vector<Vec> gens;
            for (std::size_t i = 0; i < s.basis().rows(); ++i) gens.push_back(s.basis().row(i));
            IdealHandle h = ideal_closure(a, gens);
            rep.notes.push_back("closure has dimension " + std::to_string(h.subspace.dim()) +
                                ", codimension " + std::to_string(h.codim));
            emit_artifact(rep, subspace_to_json(h.subspace), opts);
        });
    });

    CLI::App* i_intersect = ideal->add_subcommand("intersect", "intersection of two ideals");
    i_intersect->fallthrough();
    i_intersect->add_option("algebra", file1, "algebra json file")->required();
    i_intersect->add_option("first", file2, "first ideal subspace json file")->required();
    i_intersect->add_option("second", file3, "second ideal subspace json file")->required();
    i_intersect->add_option("-o,--out", opts.out, "write the intersection subspace here");
    i_intersect->callback([&] {
        run([&](CliReport& rep) {
            FDBiHomAlgebra a = algebra_from_json(load_json(file1));
            IdealHandle j = make_ideal(a, load_subspace(file2, a.dim(), "first"));
            IdealHandle h = make_ideal(a, load_subspace(file3, a.dim(), "second"));
            IdealHandle both = intersect_ideals(j, h);
            rep.notes.push_back("intersection has dimension " +
                                std::to_string(both.subspace.dim()) + ", codimension " +
                                std::to_string(both.codim));
            emit_artifact(rep, subspace_to_json(both.subspace), opts);
        });
    });

    CLI::App* i_preimage =
        ideal->add_subcommand("preimage", "preimage of an ideal under an algebra morphism");
    i_preimage->fallthrough();
    i_preimage->add_option("morphism", file1, "algebra morphism json file")->required();
    i_preimage->add_option("subspace", file2, "ideal subspace json file (in the target)")
        ->required();
    i_preimage->add_option("-o,--out", opts.out, "write the preimage subspace here");
    i_preimage->callback([&] {
        run([&](CliReport& rep) {
            AlgebraMorphism f = morphism_from_json(load_json(file1), dir_of(file1));
            if (!gate(rep, validate_morphism, f)) return;
            IdealHandle j = make_ideal(f.target, load_subspace(file2, f.target.dim(), "subspace"));
            IdealHandle pre = preimage_ideal(f, j);
            rep.notes.push_back("preimage has dimension " + std::to_string(pre.subspace.dim()) +
                                ", codimension " + std::to_string(pre.codim));
            emit_artifact(rep, subspace_to_json(pre.subspace), opts);
        });
    });

    // quotient ------------------------------------------------------------
    CLI::App* quot = app.add_subcommand("quotient", "quotient algebra by a certified ideal");
    quot->fallthrough();
    quot->add_option("algebra", file1, "algebra json file")->required();
    quot->add_option("subspace", file2, "ideal subspace json file")->required();
    quot->add_option("-o,--out", opts.out, "write the quotient algebra here");
    quot->callback([&] {
        run([&](CliReport& rep) {
            FDBiHomAlgebra a = algebra_from_json(load_json(file1));
            IdealHandle j = make_ideal(a, load_subspace(file2, a.dim(), "subspace"));
            QuotientAlgebra q = quotient_algebra(a, j);
            rep.notes.push_back("quotient has dimension " + std::to_string(q.algebra.dim()));
            emit_artifact(rep, algebra_to_json(q.algebra), opts);
        });
    });

    // sweedler ------------------------------------------------------------
    CLI::App* sweedler =
        app.add_subcommand("sweedler", "finite-dual functionals certified by ideal witnesses");
    sweedler->require_subcommand(1);
    sweedler->fallthrough();

    CLI::App* s_delta = sweedler->add_subcommand(
        "delta", "comultiplication of a certified functional through its witness quotient");
    s_delta->fallthrough();
    s_delta->add_option("algebra", file1, "algebra json file")->required();
    s_delta->add_option("functional", file2, "functional json file")->required();
    s_delta->add_option("-o,--out", opts.out, "write the comultiplication here");
    s_delta->callback([&] {
        run([&](CliReport& rep) {
            FDBiHomAlgebra a = algebra_from_json(load_json(file1));
            SweedlerFunctional f = functional_from_json(load_json(file2), a);
            SweedlerDelta d = sweedler_delta(f);
            std::vector<std::string> labels = dual_labels(a);
            for (const auto& [left, right] : d.pairs)
                rep.notes.push_back("(" + format_combination(left.coeffs, labels) + ") ⊗ (" +
                                    format_combination(right.coeffs, labels) + ")");
            json pairs = json::array();
            for (const auto& [left, right] : d.pairs)
                pairs.push_back(json::array(
                    {functional_to_json(left), functional_to_json(right)}));
            json artifact;
            artifact["pairs"] = pairs;
            artifact["tensor"] = [&] {
                json t = json::array();
                for (const auto& x : d.tensor_form) t.push_back(rational_to_json(x));
                return t;
            }();
            emit_artifact(rep, artifact, opts);
        });
    });

    CLI::App* s_add = sweedler->add_subcommand("add", "sum of two certified functionals");
    s_add->fallthrough();
    s_add->add_option("algebra", file1, "algebra json file")->required();
    s_add->add_option("first", file2, "first functional json file")->required();
    s_add->add_option("second", file3, "second functional json file")->required();
    s_add->add_option("-o,--out", opts.out, "write the sum here");
    s_add->callback([&] {
        run([&](CliReport& rep) {
            FDBiHomAlgebra a = algebra_from_json(load_json(file1));
            SweedlerFunctional f = functional_from_json(load_json(file2), a);
            SweedlerFunctional g = functional_from_json(load_json(file3), a);
            SweedlerFunctional sum = sweedler_add(f, g);
            rep.notes.push_back("combined witness has codimension " +
                                std::to_string(sum.witness.codim));
            emit_artifact(rep, functional_to_json(sum), opts);
        });
    });

    CLI::App* s_twist =
        sweedler->add_subcommand("twist", "precompose a certified functional with a twist");
    s_twist->fallthrough();
    s_twist->add_option("algebra", file1, "algebra json file")->required();
    s_twist->add_option("functional", file2, "functional json file")->required();
    s_twist->add_option("which", which, "alpha or beta")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta"}));
    s_twist->add_option("-o,--out", opts.out, "write the twisted functional here");
    s_twist->callback([&] {
        run([&](CliReport& rep) {
            FDBiHomAlgebra a = algebra_from_json(load_json(file1));
            SweedlerFunctional f = functional_from_json(load_json(file2), a);
            SweedlerFunctional t =
                sweedler_twist(f, which == "alpha" ? TwistChoice::Alpha : TwistChoice::Beta);
            emit_artifact(rep, functional_to_json(t), opts);
        });
    });

    CLI::App* s_mor = sweedler->add_subcommand(
        "morphism", "pull a certified functional back along an algebra morphism");
    s_mor->fallthrough();
    s_mor->add_option("morphism", file1, "algebra morphism json file")->required();
    s_mor->add_option("functional", file2, "functional json file (over the target)")->required();
    s_mor->add_option("-o,--out", opts.out, "write the pullback here");
    s_mor->callback([&] {
        run([&](CliReport& rep) {
            AlgebraMorphism f = morphism_from_json(load_json(file1), dir_of(file1));
            if (!gate(rep, validate_morphism, f)) return;
            SweedlerFunctional b = functional_from_json(load_json(file2), f.target);
            SweedlerFunctional pulled = sweedler_dual_morphism(f, b);
            rep.notes.push_back("pullback witness is the preimage ideal, codimension " +
                                std::to_string(pulled.witness.codim));
            emit_artifact(rep, functional_to_json(pulled), opts);
        });
    });

    // module-sweedler -------------------------------------------------------
    CLI::App* msw = app.add_subcommand(
        "module-sweedler", "finite-dual functionals on modules and their coaction");
    msw->require_subcommand(1);
    msw->fallthrough();

    CLI::App* m_coaction = msw->add_subcommand(
        "coaction", "coaction of a certified module functional over the witness quotients");
    m_coaction->fallthrough();
    m_coaction->add_option("module", file1, "module json file")->required();
    m_coaction->add_option("functional", file2, "module functional json file")->required();
    m_coaction->add_option("-o,--out", opts.out, "write the coaction here");
    m_coaction->callback([&] {
        run([&](CliReport& rep) {
            FDBiHomModule m = module_from_json(load_json(file1), dir_of(file1));
            ModuleSweedlerFunctional xi = module_functional_from_json(load_json(file2), m);
            ModuleSweedlerCoaction co = module_sweedler_coaction(xi);
            std::vector<std::string> mlabels = dual_labels(m);
            std::vector<std::string> glabels = dual_labels(m.algebra());
            for (const auto& [left, right] : co.pairs)
                rep.notes.push_back("(" + format_combination(left.coeffs, mlabels) + ") ⊗ (" +
                                    format_combination(right.coeffs, glabels) + ")");
            json pairs = json::array();
            for (const auto& [left, right] : co.pairs)
                pairs.push_back(json::array(
                    {module_functional_to_json(left), functional_to_json(right)}));
            json artifact;
            artifact["pairs"] = pairs;
            artifact["tensor"] = [&] {
                json t = json::array();
                for (const auto& x : co.tensor_form) t.push_back(rational_to_json(x));
                return t;
            }();
            emit_artifact(rep, artifact, opts);
        });
    });

    CLI::App* m_add = msw->add_subcommand("add", "sum of two certified module functionals");
    m_add->fallthrough();
    m_add->add_option("module", file1, "module json file")->required();
    m_add->add_option("first", file2, "first module functional json file")->required();
    m_add->add_option("second", file3, "second module functional json file")->required();
    m_add->add_option("-o,--out", opts.out, "write the sum here");
    m_add->callback([&] {
        run([&](CliReport& rep) {
            FDBiHomModule m = module_from_json(load_json(file1), dir_of(file1));
            ModuleSweedlerFunctional x = module_functional_from_json(load_json(file2), m);
            ModuleSweedlerFunctional y = module_functional_from_json(load_json(file3), m);
            ModuleSweedlerFunctional sum = module_sweedler_add(x, y);
            rep.notes.push_back("combined witness has codimension " +
                                std::to_string(sum.witness.codim));
            emit_artifact(rep, module_functional_to_json(sum), opts);
        });
    });

    CLI::App* m_mor = msw->add_subcommand(
        "morphism", "pull a certified module functional back along a module morphism");
    m_mor->fallthrough();
    m_mor->add_option("morphism", file1, "module morphism json file")->required();
    m_mor->add_option("functional", file2, "module functional json file (over the target)")
        ->required();
    m_mor->add_option("-o,--out", opts.out, "write the pullback here");
    m_mor->callback([&] {
        run([&](CliReport& rep) {
            ModuleMorphism s = module_morphism_from_json(load_json(file1), dir_of(file1));
            if (!gate(rep, validate_module_morphism, s)) return;
            ModuleSweedlerFunctional xi = module_functional_from_json(load_json(file2), s.target);
            ModuleSweedlerFunctional pulled = dual_module_morphism(s, xi);
            emit_artifact(rep, module_functional_to_json(pulled), opts);
        });
    });

    // poly ------------------------------------------------------------------
    CLI::App* poly = app.add_subcommand(
        "poly", "polynomial algebra twisted by a pair of commuting substitutions");
    poly->require_subcommand(1);
    poly->fallthrough();
    poly->add_option("--vars", vars, "number of variables")->required();
    poly->add_option("--twist-a", twist_a, "first substitution, row-major rationals")->required();
    poly->add_option("--twist-b", twist_b, "second substitution, row-major rationals")
        ->required();

    auto make_poly_algebra = [&] {
        return PolyBiHomAlgebra(vars, parse_square_matrix(twist_a, vars, "--twist-a"),
                                parse_square_matrix(twist_b, vars, "--twist-b"));
    };

    CLI::App* p_product = poly->add_subcommand("product", "twisted product of two monomials");
    p_product->fallthrough();
    p_product->add_option("--left", index1, "left exponent vector")->required();
    p_product->add_option("--right", index2, "right exponent vector")->required();
    p_product->add_option("-o,--out", opts.out, "write the product polynomial here");
    p_product->callback([&] {
        run([&](CliReport& rep) {
            PolyBiHomAlgebra alg = make_poly_algebra();
            MultiIndex m = parse_multi_index(index1, "--left");
            MultiIndex n = parse_multi_index(index2, "--right");
            Poly p = twisted_product(alg, m, n);
            rep.notes.push_back(monomial_str(m) + " * " + monomial_str(n) + " = " + poly_str(p));
            emit_artifact(rep, poly_to_json(vars, p), opts);
        });
    });

    CLI::App* p_twist = poly->add_subcommand("twist", "substitution image of a monomial");
    p_twist->fallthrough();
    p_twist->add_option("--which", which, "a or b")
        ->required()
        ->check(CLI::IsMember({"a", "b"}));
    p_twist->add_option("--index", index1, "exponent vector")->required();
    p_twist->add_option("-o,--out", opts.out, "write the image polynomial here");
    p_twist->callback([&] {
        run([&](CliReport& rep) {
            PolyBiHomAlgebra alg = make_poly_algebra();
            MultiIndex m = parse_multi_index(index1, "--index");
            PolyTwist w = which == "a" ? PolyTwist::A : PolyTwist::B;
            Poly p = twist_apply(alg, w, m);
            Poly q = twist_apply_by_powers(alg, w, m);
            rep.checks.push_back({"expansion-cross-check", p == q,
                                  p == q ? "" : "multinomial and repeated-product routes differ"});
            rep.notes.push_back("image of " + monomial_str(m) + " = " + poly_str(p));
            emit_artifact(rep, poly_to_json(vars, p), opts);
        });
    });

    CLI::App* p_delta = poly->add_subcommand(
        "delta", "comultiplication of a coordinate functional, one pair per splitting");
    p_delta->fallthrough();
    p_delta->add_option("--index", index1, "exponent vector")->required();
    p_delta->add_option("-o,--out", opts.out, "write the pair list here");
    p_delta->callback([&] {
        run([&](CliReport& rep) {
            PolyBiHomAlgebra alg = make_poly_algebra();
            MultiIndex n = parse_multi_index(index1, "--index");
            auto pairs = delta_dual(alg, n);
            for (const auto& [left, right] : pairs)
                rep.notes.push_back("(" + functional_str(left) + ") ⊗ (" + functional_str(right) +
                                    ")");
            json jp = json::array();
            for (const auto& [left, right] : pairs)
                jp.push_back(json::array(
                    {dual_functional_to_json(left), dual_functional_to_json(right)}));
            json artifact;
            artifact["index"] = json(n);
            artifact["pairs"] = jp;
            emit_artifact(rep, artifact, opts);
        });
    });

    CLI::App* p_pair = poly->add_subcommand(
        "pairing-check", "comultiplication against the twisted product on monomials up to a bound");
    p_pair->fallthrough();
    p_pair->add_option("--index", index1, "exponent vector")->required();
    p_pair->add_option("--degree-bound", degree_bound, "largest monomial total degree checked");
    p_pair->callback([&] {
        run([&](CliReport& rep) {
            PolyBiHomAlgebra alg = make_poly_algebra();
            BoundedReport br =
                pairing_check(alg, parse_multi_index(index1, "--index"), degree_bound);
            rep.notes.push_back("degree bound " + std::to_string(br.degree_bound));
            append_checks(rep, br.report);
        });
    });

    CLI::App* p_coassoc = poly->add_subcommand(
        "coassoc-check", "twisted coassociativity through the pairing on monomial triples");
    p_coassoc->fallthrough();
    p_coassoc->add_option("--index", index1, "exponent vector")->required();
    p_coassoc->add_option("--degree-bound", degree_bound,
                          "largest monomial total degree checked");
    p_coassoc->callback([&] {
        run([&](CliReport& rep) {
            PolyBiHomAlgebra alg = make_poly_algebra();
            BoundedReport br =
                coassoc_check(alg, parse_multi_index(index1, "--index"), degree_bound);
            rep.notes.push_back("degree bound " + std::to_string(br.degree_bound));
            append_checks(rep, br.report);
        });
    });

    CLI::App* p_ideal = poly->add_subcommand(
        "ideal-check", "absorption and substitution stability of a cofinite monomial ideal");
    p_ideal->fallthrough();
    p_ideal->add_option("--ideal", ideal_spec, "TotalDegree:<d> or Staircase:<n1,...>")
        ->required();
    p_ideal->add_option("--bound,--degree-bound", degree_bound,
                        "largest monomial total degree checked");
    p_ideal->callback([&] {
        run([&](CliReport& rep) {
            PolyBiHomAlgebra alg = make_poly_algebra();
            CofiniteMonomialIdeal spec = parse_ideal_spec(ideal_spec, vars);
            BoundedReport br = ideal_absorption_check(alg, spec, degree_bound);
            rep.notes.push_back(spec.str() + " has " + std::to_string(spec.complement().size()) +
                                " monomials outside it");
            rep.notes.push_back("degree bound " + std::to_string(br.degree_bound));
            append_checks(rep, br.report);
        });
    });

    // lemma-zz ----------------------------------------------------------------
    CLI::App* lemma = app.add_subcommand(
        "lemma-zz",
        "kernel of a tensor product of quotient maps: ker = full⊗second + first⊗full");
    lemma->fallthrough();
    lemma->add_option("first", file1, "first subspace json file");
    lemma->add_option("second", file2, "second subspace json file");
    CLI::Option* seed_opt =
        lemma->add_option("--seed", seed, "run a seeded random suite instead of files");
    lemma->add_option("--bound", bound, "largest ambient dimension in the random suite");
    lemma->callback([&] {
        run([&](CliReport& rep) {
            if (!seed_opt->empty()) {
                std::mt19937_64 rng(seed);
                const std::size_t iterations = 50;
                rep.notes.push_back("seed " + std::to_string(seed) + ", " +
                                    std::to_string(iterations) + " iterations, ambient up to " +
                                    std::to_string(bound));
                for (std::size_t t = 0; t < iterations; ++t) {
                    std::uniform_int_distribution<std::size_t> dim_dist(1, bound);
                    std::size_t da = dim_dist(rng);
                    std::size_t db = dim_dist(rng);
                    Subspace i = random_subspace(rng, da);
                    Subspace j = random_subspace(rng, db);
                    TensorQuotientKernel k = tensor_quotient_kernel(da, db, i, j);
                    auto fail = k.report.first_failure();
                    std::string tag = "iteration-" + std::to_string(t);
                    if (fail)
                        rep.checks.push_back({tag, false, fail->name + ": " + fail->witness});
                    else
                        rep.checks.push_back({tag, true, ""});
                }
                return;
            }
            if (file1.empty() || file2.empty())
                throw InputError("lemma-zz: give two subspace files, or --seed for the random "
                                 "suite");
            Subspace i = subspace_from_json(load_json(file1));
            Subspace j = subspace_from_json(load_json(file2));
            TensorQuotientKernel k = tensor_quotient_kernel(i.ambient_dim(), j.ambient_dim(), i, j);
            rep.notes.push_back("kernel has dimension " + std::to_string(k.kernel.dim()) +
                                " inside dimension " +
                                std::to_string(i.ambient_dim() * j.ambient_dim()));
            append_checks(rep, k.report);
        });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
