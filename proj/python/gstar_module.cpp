// Python bindings for the main operations of the verification engine:
// fixtures and their check suites, theory-file loading and canonicalization,
// expression evaluation, descent sequences, and Weil-complex cohomology.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gstar/theory_loader.hpp"
#include "gstar/weil.hpp"

namespace py = pybind11;
using namespace gstar;

namespace {

py::dict check_to_dict(const CheckResult& c) {
    py::dict d;
    d["id"] = c.id;
    d["pass"] = c.pass;
    d["residual_terms"] = c.residual_terms;
    d["citation"] = c.citation;
    return d;
}

py::list suite_to_list(const SuiteReport& r) {
    py::list out;
    for (auto& c : r.checks) out.append(check_to_dict(c));
    return out;
}

LoadedTheory load_or_raise(const std::string& source) {
    try {
        return load_theory(source);
    } catch (const dsl::ParseError& e) {
        throw py::value_error(e.diag.str());
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verification of graded field-theory identities";

    m.def("fixture_names", &fixture_names, "Names of the built-in theories.");

    m.def(
        "fixture_suites",
        [](const std::string& name) { return load_fixture(name)->suites(); },
        py::arg("theory"), "Check-suite names declared by a built-in theory.");

    m.def(
        "run_suite",
        [](const std::string& name, const std::string& suite) {
            return suite_to_list(load_fixture(name)->run(suite));
        },
        py::arg("theory"), py::arg("suite"),
        "Run one check suite of a built-in theory; returns a list of dicts "
        "with id, pass, residual_terms and citation.");

    m.def(
        "load_theory",
        [](const std::string& source) {
            LoadedTheory lt = load_or_raise(source);
            py::dict d;
            d["name"] = lt.ast.name;
            d["suites"] = lt.ast.suites;
            py::list warn;
            for (auto& w : lt.warnings) warn.append(w.str());
            d["warnings"] = warn;
            return d;
        },
        py::arg("source"),
        "Load a `gstar-theory v1` source string, proving it structurally "
        "equal to the built-in theory it names.  Raises ValueError with a "
        "stable diagnostic code on failure.");

    m.def(
        "verify",
        [](const std::string& source) {
            LoadedTheory lt = load_or_raise(source);
            std::vector<std::string> suites = lt.ast.suites;
            if (suites.empty()) suites = lt.fixture->suites();
            py::list out;
            for (auto& s : suites)
                for (auto h : suite_to_list(lt.fixture->run(s))) out.append(h);
            return out;
        },
        py::arg("source"), "Load a theory source and run all declared suites.");

    m.def(
        "canonical_form",
        [](const std::string& source) {
            try {
                return dsl::serialize(dsl::parse(source));
            } catch (const dsl::ParseError& e) {
                throw py::value_error(e.diag.str());
            }
        },
        py::arg("source"), "Parse a theory source and re-serialize it canonically.");

    m.def(
        "eval_expression",
        [](const std::string& source, const std::string& expr) {
            LoadedTheory lt = load_or_raise(source);
            TheoryEnv env = lt.env();
            try {
                Poly p = env.eval_scalar(*dsl::parse_expression(expr));
                return poly_to_dsl(lt.ctx()->alg(), p);
            } catch (const dsl::ParseError& e) {
                throw py::value_error(e.diag.str());
            }
        },
        py::arg("source"), py::arg("expression"),
        "Evaluate a scalar expression in the theory's jet algebra and return "
        "its canonical printed form.");

    m.def(
        "descent",
        [](const std::string& source, const std::string& seed) {
            LoadedTheory lt = load_or_raise(source);
            if (lt.indexed)
                throw py::value_error("descent sequences need a component theory");
            TheoryEnv env = lt.env();
            Poly O0 = env.eval_scalar(*dsl::parse_expression(seed));
            QKGStructure st = lt.structure();
            auto seq = st.standard_k_sequence(O0);
            auto rep = st.verify_descent(seq);
            py::dict d;
            d["pass"] = rep.pass;
            py::list levels, residual_terms;
            for (size_t p = 0; p < seq.O.size(); ++p) {
                levels.append(poly_to_dsl(lt.ctx()->alg(), seq.O[p]));
                residual_terms.append((long)rep.residuals[p].terms().size());
            }
            d["levels"] = levels;
            d["residual_terms"] = residual_terms;
            return d;
        },
        py::arg("source"), py::arg("seed"),
        "Build the standard descent sequence from a Q-closed seed and check "
        "the descent equations level by level.");

    m.def(
        "weil_cohomology",
        [](const std::string& algebra, int k, int lo, int hi) {
            LieAlgebraSpec spec = algebra == "su2" ? LieAlgebraSpec::su2()
                                                   : LieAlgebraSpec::abelian(k);
            if (algebra != "su2" && algebra != "abelian")
                throw py::value_error("algebra must be 'su2' or 'abelian'");
            GStarAlgebra W = weil_algebra(spec);
            return cohomology_dims(*W.alg, W.d, lo, hi);
        },
        py::arg("algebra"), py::arg("dim") = 1, py::arg("lo") = 0, py::arg("hi") = 6,
        "Cohomology dimensions of the Weil complex of su(2) or an abelian "
        "Lie algebra over the degree window [lo, hi].");

    m.def(
        "cartan_relations_hold",
        []() { return weil_algebra(LieAlgebraSpec::su2()).verify_cartan().pass(); },
        "All seven Cartan-calculus relations on the Weil model of su(2).");
}
