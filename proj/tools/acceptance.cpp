// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion re-runs the corresponding verification end to end
// (nothing is cached from the unit tests) and reports its wall-clock time
// against the budget.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "gstar/theory_loader.hpp"
#include "gstar/weil.hpp"
#include "random_forms.hpp"

using namespace gstar;
namespace fs = std::filesystem;

namespace {

struct Gate {
    int failures = 0;

    void criterion(int n, const std::string& what, double budget_s, bool (*body)()) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string err;
        try {
            ok = body();
        } catch (const std::exception& e) {
            err = e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = dt <= budget_s;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("criterion %d: %s (%.2fs of %.0fs) %s%s%s\n", n, pass ? "PASS" : "FAIL", dt,
                    budget_s, what.c_str(), ok || err.empty() ? "" : (" — " + err).c_str(),
                    ok && !in_budget ? " — over time budget" : "");
        std::fflush(stdout);
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

bool run_all_suites(const std::string& theory) {
    auto f = load_fixture(theory);
    for (auto& s : f->suites())
        if (!f->run(s).pass()) return false;
    return true;
}

// ---- criterion bodies ---------------------------------------------------

bool cartan_relations() {
    return weil_algebra(LieAlgebraSpec::su2()).verify_cartan().pass();
}

bool weil_acyclicity() {
    auto W = weil_algebra(LieAlgebraSpec::su2());
    auto dims = cohomology_dims(*W.alg, W.d, 0, 6);
    if (dims[0] != 1) return false;
    for (int k = 1; k <= 6; ++k)
        if (dims[k] != 0) return false;
    return true;
}

bool kalkman_conjugation() {
    auto W1 = weil_algebra(LieAlgebraSpec::su2());
    auto W2 = weil_algebra(LieAlgebraSpec::su2());
    auto M = make_tensor_model(W1, W2);
    auto K = kalkman_conjugate(M);
    if (!K.dK_formula.pass() || !K.iota_conj.pass()) return false;
    const Algebra* A = M.T.alg.get();
    LinOp zero{{}, [A](const Poly&) { return Poly(A); }};
    return check_relation(A, compose(as_op(K.dK), as_op(K.dK)), zero, M.T.gens).pass();
}

bool susy_flat() { return run_all_suites("susy-qm-flat"); }

bool susy_curved_and_morse() {
    return run_all_suites("susy-qm-curved") && run_all_suites("susy-qm-morse");
}

bool dw_4d() {
    return run_all_suites("dw-4d-canonical") && run_all_suites("dw-4d-deformed");
}

bool dw_4d_bv() { return run_all_suites("dw-4d-bv"); }

// Randomized structural properties, >= 1000 homogeneous forms per
// configuration (mirrors the dedicated property test suite).
bool property_suites() {
    using gstar::testing::RandomFormSpec;
    using gstar::testing::random_local_form;
    struct Cfg {
        int dim;
        std::vector<std::pair<std::string, int>> fields;
    };
    const std::vector<Cfg> cfgs = {{1, {{"u", 0}, {"psi", 1}, {"chi", -1}}},
                                   {2, {{"u", 0}, {"v", 0}, {"psi", 1}}},
                                   {4, {{"u", 0}, {"c", 1}, {"b", -1}}}};
    for (auto& cfg : cfgs) {
        JetContext ctx(cfg.dim, cfg.dim == 1 ? "t" : "x");
        std::vector<std::string> names;
        for (auto& [n, g] : cfg.fields) {
            ctx.declare_field(n, g);
            names.push_back(n);
        }
        std::mt19937 rng(99);
        const Derivation &dh = ctx.dh(), &dv = ctx.dv();
        int leibniz_checked = 0;
        for (int t = 0; t < 1400; ++t) {
            RandomFormSpec spec;
            spec.terms = 2;
            spec.jets_per_term = 1 + (int)(t % 2);
            spec.n_dx = (int)(t % 2);
            spec.n_delta = (int)(t % 3);
            Poly p = random_local_form(ctx, rng, names, spec);
            if (!dh(dh(p)).zero() || !dv(dv(p)).zero()) return false;
            if (!(dh(dv(p)) - dv(dh(p))).zero()) return false;
            // Graded Leibniz rule on the monomials of p against a second form.
            spec.terms = 1;
            Poly a = random_local_form(ctx, rng, names, spec);
            Poly b = random_local_form(ctx, rng, names, spec);
            auto da = a.degree();
            if (!a.zero() && !b.zero() && da) {
                ++leibniz_checked;
                Rat sh(koszul_sign(Tridegree{1, 0, 0}, *da));
                Rat sv(koszul_sign(Tridegree{0, 1, 0}, *da));
                if (!(dh(a * b) - dh(a) * b - sh * a * dh(b)).zero()) return false;
                if (!(dv(a * b) - dv(a) * b - sv * a * dv(b)).zero()) return false;
            }
        }
        if (leibniz_checked < 1000) return false;
        for (int t = 0; t < 500; ++t) {
            RandomFormSpec spec;
            spec.terms = 2;
            spec.jets_per_term = 1;
            spec.max_jet_order = cfg.dim > 2 ? 1 : 2;
            spec.n_delta = 1 + (int)(t % 2);
            spec.n_dx = cfg.dim;
            Poly p = random_local_form(ctx, rng, names, spec);
            Poly ip = ctx.interior_euler(p);
            if (!(ctx.interior_euler(ip) - ip).zero()) return false;
            spec.n_dx = cfg.dim - 1;
            Poly q = random_local_form(ctx, rng, names, spec);
            if (!ctx.interior_euler(ctx.dh()(q)).zero()) return false;
        }
        // Normalization: associativity/idempotence on random generator words.
        std::vector<Poly> gens;
        for (auto& n : names) {
            gens.push_back(ctx.jp(n, {}));
            gens.push_back(ctx.vjp(n));
        }
        for (int mu = 1; mu <= cfg.dim; ++mu) gens.push_back(ctx.dxp(mu));
        for (int t = 0; t < 1000; ++t) {
            int len = 2 + (int)(rng() % 4);
            std::vector<int> word;
            for (int i = 0; i < len; ++i) word.push_back((int)(rng() % gens.size()));
            Poly left(ctx.alg(), 1), right(ctx.alg(), 1);
            for (int id : word) left = left * gens[id];
            for (auto it = word.rbegin(); it != word.rend(); ++it) right = gens[*it] * right;
            if (!(left == right)) return false;
        }
        // Graded Jacobi identity for the evolutionary bracket.
        for (int t = 0; t < 60; ++t) {
            auto rnd_char = [&](int tg) {
                Poly out(ctx.alg());
                for (int k = 0; k < 2; ++k) {
                    Poly term(ctx.alg(), Rat((int)(rng() % 3) + 1));
                    int g = tg;
                    auto mul = [&](int gh) {
                        for (auto& [n, fg] : cfg.fields)
                            if (fg == gh) {
                                term = term * ctx.jp(n, gstar::testing::random_index(
                                                           rng, ctx.dim(), 1));
                                return true;
                            }
                        return false;
                    };
                    while (g > 0 && mul(1)) --g;
                    while (g < 0 && mul(-1)) ++g;
                    if (g != 0) continue;
                    if (rng() % 2) mul(0);
                    out += term;
                }
                return out;
            };
            int gx = (int)(rng() % 2), gy = (int)(rng() % 2), gz = (int)(rng() % 2);
            auto make = [&](const std::string& n, int g) {
                std::map<std::string, Poly> chars;
                for (auto& [f, fg] : cfg.fields) chars[f] = rnd_char(fg + g);
                return ctx.evolutionary(n, g, std::move(chars));
            };
            auto X = make("X", gx), Y = make("Y", gy), Z = make("Z", gz);
            auto xyz = ctx.ev_bracket(ctx.ev_bracket(X, Y), Z);
            auto yzx = ctx.ev_bracket(ctx.ev_bracket(Y, Z), X);
            auto zxy = ctx.ev_bracket(ctx.ev_bracket(Z, X), Y);
            Rat sx((gx * gz) % 2 ? -1 : 1), sy((gy * gx) % 2 ? -1 : 1),
                sz((gz * gy) % 2 ? -1 : 1);
            for (auto& [f, fg] : cfg.fields) {
                Poly r = sx * xyz.chars.at(f) + sy * yzx.chars.at(f) + sz * zxy.chars.at(f);
                if (!r.zero()) return false;
            }
        }
    }
    return true;
}

// Every shipped theory file loads and all of its declared suites pass; every
// broken-corpus file raises the stable diagnostic code its name carries.
bool cli_round_trip() {
    static const char* shipped[] = {"susy-qm-flat",    "susy-qm-curved", "susy-qm-morse",
                                    "dw-4d-canonical", "dw-4d-deformed", "dw-4d-bv"};
    for (const char* name : shipped) {
        LoadedTheory lt = load_theory(slurp(fs::path(THEORY_DIR) / (std::string(name) + ".th")));
        for (auto& s : lt.ast.suites)
            if (!lt.fixture->run(s).pass()) return false;
    }
    int broken = 0;
    for (auto& entry : fs::directory_iterator(fs::path(THEORY_DIR) / "broken")) {
        std::string fname = entry.path().filename().string();
        std::string code = fname.substr(0, 4);
        for (auto& c : code) c = (char)std::toupper(c);
        std::string src = slurp(entry.path());
        if (code[0] == 'W') {
            LoadedTheory lt = load_theory(src);
            if (lt.warnings.empty() || lt.warnings[0].code != code) return false;
        } else {
            try {
                load_theory(src);
                return false;  // expected a diagnostic
            } catch (const dsl::ParseError& e) {
                if (e.diag.code != code) return false;
            }
            ++broken;
        }
    }
    return broken >= 10;
}

}  // namespace

int main() {
    Gate g;
    g.criterion(1, "Cartan relations on the Weil model of su(2)", 1, cartan_relations);
    g.criterion(2, "Weil-complex acyclicity in degrees 1..6 with H^0 = Q", 10, weil_acyclicity);
    g.criterion(3, "Kalkman conjugation on the doubled Weil model", 10, kalkman_conjugation);
    g.criterion(4, "flat supersymmetric mechanics: nilpotency, currents, conservation", 5,
                susy_flat);
    g.criterion(5, "curved and Morse supersymmetric mechanics via indexed rewriting", 30,
                susy_curved_and_morse);
    g.criterion(6, "4d gauge theory: deformation, preobservables, descent sequence", 60, dw_4d);
    g.criterion(7, "antifield extension: master action, gauge fixing, boundary tower", 300,
                dw_4d_bv);
    g.criterion(8, "randomized structural property suites (>= 1000 forms per configuration)",
                120, property_suites);
    g.criterion(9, "theory-file round-trip and diagnostic corpus", 300, cli_round_trip);
    if (g.failures) {
        std::printf("ACCEPTANCE FAILED: %d criterion(s)\n", g.failures);
        return 1;
    }
    std::printf("ACCEPTANCE PASSED\n");
    return 0;
}
