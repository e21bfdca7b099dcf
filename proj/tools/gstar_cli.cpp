// Command-line driver for the verification engine.
//
//   gstar verify FILE [--suite NAME]       run declared (or one named) suite
//   gstar descent FILE --seed EXPR         build and check a descent sequence
//   gstar bv FILE                          antifield checks (dw-4d-bv files)
//   gstar cohomology FILE --window a..b    Weil-complex cohomology dimensions
//   gstar report FILE [--format text|json] full report over declared suites
//
// Files use the `gstar-theory v1` format (see docs/theory-format.md).
// Diagnostics go to stderr with their stable code; any failed check or
// diagnostic makes the exit status nonzero.  Output is deterministic.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "gstar/theory_loader.hpp"
#include "gstar/weil.hpp"

using namespace gstar;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

LoadedTheory load_file(const std::string& path) {
    LoadedTheory lt = load_theory(slurp(path));
    for (auto& w : lt.warnings) std::cerr << "warning: " << w.str() << "\n";
    return lt;
}

void print_suite(const SuiteReport& r) {
    std::cout << "suite " << r.fixture << "/" << r.suite << "\n";
    for (auto& c : r.checks) {
        std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id;
        if (!c.pass) std::cout << "  (" << c.residual_terms << " residual terms)";
        std::cout << "\n";
        if (!c.pass) std::cout << "         " << c.citation << "\n";
    }
}

int run_suites(LoadedTheory& lt, const std::vector<std::string>& suites) {
    bool ok = true;
    for (auto& s : suites) {
        SuiteReport r = lt.fixture->run(s);
        print_suite(r);
        ok = ok && r.pass();
    }
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& path, const std::string& suite) {
    LoadedTheory lt = load_file(path);
    std::vector<std::string> suites = lt.ast.suites;
    if (!suite.empty()) {
        bool declared = false;
        for (auto& s : lt.fixture->suites()) declared = declared || s == suite;
        if (!declared)
            throw dsl::ParseError({"E009", 1, 1, "unknown suite '" + suite + "'"});
        suites = {suite};
    }
    if (suites.empty()) suites = lt.fixture->suites();
    return run_suites(lt, suites);
}

int cmd_descent(const std::string& path, const std::string& seed) {
    LoadedTheory lt = load_file(path);
    if (lt.indexed)
        throw std::runtime_error("descent sequences need a component theory file");
    TheoryEnv env = lt.env();
    Poly O0 = env.eval_scalar(*dsl::parse_expression(seed));
    QKGStructure st = lt.structure();
    auto seq = st.standard_k_sequence(O0);
    auto rep = st.verify_descent(seq);
    for (size_t p = 0; p < seq.O.size(); ++p) {
        std::cout << "O^(" << p << ") = " << poly_to_dsl(lt.ctx()->alg(), seq.O[p]) << "\n";
        std::cout << "  descent residual: "
                  << (rep.residuals[p].zero() ? "0" : rep.residuals[p].str()) << "\n";
    }
    std::cout << (rep.pass ? "descent equations hold" : "DESCENT FAILED") << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_bv(const std::string& path) {
    LoadedTheory lt = load_file(path);
    if (!lt.dwbv)
        throw std::runtime_error("antifield checks need a theory with antifields (dw-4d-bv)");
    return run_suites(lt, lt.fixture->suites());
}

int cmd_cohomology(const std::string& path, const std::string& window) {
    LoadedTheory lt = load_file(path);
    auto dots = window.find("..");
    if (dots == std::string::npos)
        throw std::runtime_error("--window expects the form a..b");
    int lo = std::stoi(window.substr(0, dots));
    int hi = std::stoi(window.substr(dots + 2));
    if (lo < 0 || hi < lo) throw std::runtime_error("--window expects 0 <= a <= b");
    LieAlgebraSpec spec = LieAlgebraSpec::su2();
    std::string label = "su2";
    if (lt.ast.algebra == "abelian") {
        spec = LieAlgebraSpec::abelian(lt.ast.algebra_dim > 0 ? lt.ast.algebra_dim : 1);
        label = "abelian " + std::to_string(spec.dim);
    } else if (!lt.ast.algebra.empty() && lt.ast.algebra != "su2") {
        throw std::runtime_error("unknown algebra '" + lt.ast.algebra + "'");
    }
    GStarAlgebra W = weil_algebra(spec);
    auto dims = cohomology_dims(*W.alg, W.d, lo, hi);
    std::cout << "Weil complex of " << label << ", differential cohomology:\n";
    for (int k = lo; k <= hi; ++k)
        std::cout << "  dim H^" << k << " = " << dims[k - lo] << "\n";
    return 0;
}

int cmd_report(const std::string& path, const std::string& format) {
    LoadedTheory lt = load_file(path);
    std::vector<std::string> suites = lt.ast.suites;
    if (suites.empty()) suites = lt.fixture->suites();
    bool ok = true;
    if (format == "json") {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (auto& s : suites) {
            SuiteReport r = lt.fixture->run(s);
            ok = ok && r.pass();
            for (auto& c : r.checks)
                checks.push_back({{"id", r.suite + "." + c.id},
                                  {"status", c.pass ? "pass" : "fail"},
                                  {"residual_terms", c.residual_terms},
                                  {"citation", c.citation}});
        }
        std::cout << checks.dump(2) << "\n";
    } else {
        for (auto& s : suites) {
            SuiteReport r = lt.fixture->run(s);
            ok = ok && r.pass();
            print_suite(r);
        }
        std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    // Accepted for interface stability; the engine is single-threaded.
    if (const char* t = std::getenv("GSTAR_THREADS")) (void)t;

    CLI::App app{"Exact verification of graded field-theory identities"};
    app.require_subcommand(1);

    std::string path, suite, seed, window = "0..6", format = "text";

    auto* verify = app.add_subcommand("verify", "run identity-check suites from a theory file");
    verify->add_option("file", path, "theory file")->required();
    verify->add_option("--suite", suite, "run only this suite");

    auto* descent = app.add_subcommand("descent", "build a descent sequence from a seed form");
    descent->add_option("file", path, "theory file")->required();
    descent->add_option("--seed", seed, "Q-closed seed expression")->required();

    auto* bv = app.add_subcommand("bv", "antifield (master-action) checks");
    bv->add_option("file", path, "theory file with antifields")->required();

    auto* coh = app.add_subcommand("cohomology", "Weil-complex cohomology dimensions");
    coh->add_option("file", path, "theory file declaring the Lie algebra")->required();
    coh->add_option("--window", window, "degree window a..b (default 0..6)");

    auto* report = app.add_subcommand("report", "full report over the declared suites");
    report->add_option("file", path, "theory file")->required();
    report->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(path, suite);
        if (descent->parsed()) return cmd_descent(path, seed);
        if (bv->parsed()) return cmd_bv(path);
        if (coh->parsed()) return cmd_cohomology(path, window);
        if (report->parsed()) return cmd_report(path, format);
    } catch (const dsl::ParseError& e) {
        std::cerr << "error: " << e.diag.str() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
