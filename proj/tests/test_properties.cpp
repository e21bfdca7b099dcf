// Randomized property suites over the variational bicomplex.
//
// For each configuration (base dimension + field content) at least a thousand
// pseudo-random homogeneous local forms are pushed through the structural
// identities: d_h^2 = 0, d_v^2 = 0, d_h d_v + d_v d_h = 0, the interior Euler
// operator is idempotent and annihilates d_h-exact forms, both differentials
// satisfy the graded Leibniz rule, the evolutionary-field bracket satisfies
// the graded Jacobi identity, and monomial normalization is idempotent and
// associative.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gstar/jet.hpp"
#include "random_forms.hpp"

using namespace gstar;
using gstar::testing::RandomFormSpec;
using gstar::testing::random_local_form;

namespace {

struct Config {
    std::string name;
    int dim;
    std::vector<std::pair<std::string, int>> fields;  // name, ghost
    int forms;                                        // forms for the bulk loop
};

const std::vector<Config>& configs() {
    static const std::vector<Config> cs = {
        {"mechanics (1d, ghosts -1..1)", 1, {{"u", 0}, {"psi", 1}, {"chi", -1}}, 1200},
        {"surface (2d, ghosts 0..1)", 2, {{"u", 0}, {"v", 0}, {"psi", 1}}, 1200},
        {"spacetime (4d, ghosts -1..1)", 4, {{"u", 0}, {"c", 1}, {"b", -1}}, 1000},
    };
    return cs;
}

std::unique_ptr<JetContext> make_ctx(const Config& cfg) {
    auto ctx = std::make_unique<JetContext>(cfg.dim, cfg.dim == 1 ? "t" : "x");
    for (auto& [n, g] : cfg.fields) ctx->declare_field(n, g);
    return ctx;
}

std::vector<std::string> field_names(const Config& cfg) {
    std::vector<std::string> out;
    for (auto& [n, g] : cfg.fields) out.push_back(n);
    return out;
}

// A random single-monomial (hence homogeneous) form; may be zero when odd
// factors collide.
Poly random_monomial(JetContext& ctx, std::mt19937& rng, const std::vector<std::string>& fields,
                     RandomFormSpec spec) {
    spec.terms = 1;
    return random_local_form(ctx, rng, fields, spec);
}

// A random characteristic polynomial of degree (0, 0, field_ghost + dg):
// plain jets only, with the ghost number balanced by construction.
Poly random_char(JetContext& ctx, std::mt19937& rng, const Config& cfg, int target_ghost) {
    std::vector<std::string> by_ghost[3];  // ghost -1, 0, +1
    for (auto& [n, g] : cfg.fields)
        if (g >= -1 && g <= 1) by_ghost[g + 1].push_back(n);
    Poly out(ctx.alg());
    int terms = 1 + (int)(rng() % 2);
    for (int t = 0; t < terms; ++t) {
        Poly term(ctx.alg(), Rat((int)(rng() % 3) + 1));
        int g = target_ghost;
        auto mul_jet = [&](int ghost) {
            auto& pool = by_ghost[ghost + 1];
            if (pool.empty()) return false;
            const std::string& f = pool[rng() % pool.size()];
            term = term * ctx.jp(f, gstar::testing::random_index(rng, ctx.dim(), 1));
            return true;
        };
        while (g > 0 && mul_jet(1)) --g;
        while (g < 0 && mul_jet(-1)) ++g;
        if (g != 0) continue;  // configuration lacks the needed parity
        if (rng() % 2) mul_jet(0);
        if (rng() % 3 == 0 && mul_jet(1)) {
            if (!mul_jet(-1)) term = Poly(ctx.alg());  // keep ghost balanced
        }
        out += term;
    }
    return out;
}

}  // namespace

TEST_CASE("differentials: nilpotence and anticommutation") {
    for (auto& cfg : configs()) {
        CAPTURE(cfg.name);
        auto ctx = make_ctx(cfg);
        auto fields = field_names(cfg);
        std::mt19937 rng(2024);
        const Derivation &dh = ctx->dh(), &dv = ctx->dv();
        for (int t = 0; t < cfg.forms; ++t) {
            RandomFormSpec spec;
            spec.terms = 2;
            spec.jets_per_term = 1 + (int)(t % 2);
            spec.n_dx = (int)(t % 2);
            spec.n_delta = (int)(t % 3);
            Poly p = random_local_form(*ctx, rng, fields, spec);
            CHECK(dh(dh(p)).zero());
            CHECK(dv(dv(p)).zero());
            // The (1,0,0)-(0,1,0) Koszul pairing vanishes, so the graded
            // commutator of the two differentials is the plain commutator.
            CHECK((dh(dv(p)) - dv(dh(p))).zero());
        }
    }
}

TEST_CASE("differentials: graded Leibniz rule on homogeneous factors") {
    for (auto& cfg : configs()) {
        CAPTURE(cfg.name);
        auto ctx = make_ctx(cfg);
        auto fields = field_names(cfg);
        std::mt19937 rng(77);
        const Derivation &dh = ctx->dh(), &dv = ctx->dv();
        int checked = 0;
        for (int t = 0; t < 2 * cfg.forms; ++t) {
            RandomFormSpec spec;
            spec.jets_per_term = 1;
            spec.n_dx = (int)(t % 2);
            spec.n_delta = (int)(t % 2);
            Poly a = random_monomial(*ctx, rng, fields, spec);
            Poly b = random_monomial(*ctx, rng, fields, spec);
            auto da = a.degree();
            if (a.zero() || b.zero() || !da) continue;
            ++checked;
            Rat sh(koszul_sign(Tridegree{1, 0, 0}, *da));
            Rat sv(koszul_sign(Tridegree{0, 1, 0}, *da));
            CHECK((dh(a * b) - dh(a) * b - sh * a * dh(b)).zero());
            CHECK((dv(a * b) - dv(a) * b - sv * a * dv(b)).zero());
        }
        CHECK(checked >= 1000);
    }
}

TEST_CASE("interior Euler operator: idempotence and d_h-exact kernel") {
    for (auto& cfg : configs()) {
        CAPTURE(cfg.name);
        auto ctx = make_ctx(cfg);
        auto fields = field_names(cfg);
        std::mt19937 rng(4242);
        for (int t = 0; t < cfg.forms / 2; ++t) {
            RandomFormSpec spec;
            spec.terms = 2;
            spec.jets_per_term = 1;
            spec.max_jet_order = cfg.dim > 2 ? 1 : 2;
            spec.n_dx = cfg.dim;
            spec.n_delta = 1 + (int)(t % 2);
            Poly p = random_local_form(*ctx, rng, fields, spec);
            Poly ip = ctx->interior_euler(p);
            CHECK((ctx->interior_euler(ip) - ip).zero());
        }
        for (int t = 0; t < cfg.forms / 2; ++t) {
            RandomFormSpec spec;
            spec.terms = 2;
            spec.jets_per_term = 1;
            spec.max_jet_order = cfg.dim > 2 ? 1 : 2;
            spec.n_dx = cfg.dim - 1;
            spec.n_delta = 1 + (int)(t % 2);
            Poly q = random_local_form(*ctx, rng, fields, spec);
            CHECK(ctx->interior_euler(ctx->dh()(q)).zero());
        }
    }
}

TEST_CASE("evolutionary fields: graded Jacobi identity") {
    for (auto& cfg : configs()) {
        CAPTURE(cfg.name);
        auto ctx = make_ctx(cfg);
        std::mt19937 rng(31337);
        for (int t = 0; t < 150; ++t) {
            int gx = (int)(rng() % 2), gy = (int)(rng() % 2), gz = (int)(rng() % 2);
            auto make = [&](const std::string& n, int g) {
                std::map<std::string, Poly> chars;
                for (auto& [f, fg] : cfg.fields)
                    chars[f] = random_char(*ctx, rng, cfg, fg + g);
                return ctx->evolutionary(n, g, std::move(chars));
            };
            auto X = make("X", gx), Y = make("Y", gy), Z = make("Z", gz);
            auto xyz = ctx->ev_bracket(ctx->ev_bracket(X, Y), Z);
            auto yzx = ctx->ev_bracket(ctx->ev_bracket(Y, Z), X);
            auto zxy = ctx->ev_bracket(ctx->ev_bracket(Z, X), Y);
            Rat sx((gx * gz) % 2 ? -1 : 1);
            Rat sy((gy * gx) % 2 ? -1 : 1);
            Rat sz((gz * gy) % 2 ? -1 : 1);
            for (auto& [f, fg] : cfg.fields) {
                CAPTURE(f);
                Poly r = sx * xyz.chars.at(f) + sy * yzx.chars.at(f) + sz * zxy.chars.at(f);
                CHECK(r.zero());
            }
        }
    }
}

TEST_CASE("normalization: idempotent and associative on random words") {
    for (auto& cfg : configs()) {
        CAPTURE(cfg.name);
        auto ctx = make_ctx(cfg);
        std::mt19937 rng(909);
        std::vector<Poly> gens;
        for (auto& [n, g] : cfg.fields) {
            gens.push_back(ctx->jp(n, {}));
            gens.push_back(ctx->jp(n, {1}));
            gens.push_back(ctx->vjp(n));
        }
        for (int mu = 1; mu <= cfg.dim; ++mu) gens.push_back(ctx->dxp(mu));
        for (int t = 0; t < 1100; ++t) {
            int len = 2 + (int)(rng() % 4);
            std::vector<int> word;
            for (int i = 0; i < len; ++i) word.push_back((int)(rng() % gens.size()));
            Poly left(ctx->alg(), 1), right(ctx->alg(), 1);
            for (int id : word) left = left * gens[id];
            for (auto it = word.rbegin(); it != word.rend(); ++it) right = gens[*it] * right;
            CHECK(left == right);
            // Splitting the word at any point and multiplying the halves
            // reproduces the same canonical form.
            int cut = (int)(rng() % (len + 1));
            Poly lo(ctx->alg(), 1), hi(ctx->alg(), 1);
            for (int i = 0; i < cut; ++i) lo = lo * gens[word[i]];
            for (int i = cut; i < len; ++i) hi = hi * gens[word[i]];
            CHECK(lo * hi == left);
        }
    }
}
