// Shared helper for property tests: pseudo-random local forms over a jet
// context, with controllable horizontal/vertical content.

#pragma once

#include <random>

#include "gstar/jet.hpp"

namespace gstar::testing {

struct RandomFormSpec {
    int terms = 3;
    int max_jet_order = 2;    // max |I| on any jet factor
    int jets_per_term = 2;    // plain jet factors per monomial
    int n_dx = 0;             // exact number of distinct dx factors (-1 = random subset)
    int n_delta = 0;          // vertical jet factors per monomial
    bool allow_x = false;     // explicit base-coordinate factors
};

inline MultiIndex random_index(std::mt19937& rng, int n, int max_order) {
    MultiIndex I;
    int len = (int)(rng() % (max_order + 1));
    for (int i = 0; i < len; ++i) I.push_back(1 + (int)(rng() % n));
    return I;
}

// A random local form; may occasionally have fewer than `terms` terms when
// odd factors collide.
inline Poly random_local_form(JetContext& ctx, std::mt19937& rng,
                              const std::vector<std::string>& fields, const RandomFormSpec& spec) {
    int n = ctx.dim();
    Poly out(ctx.alg());
    for (int t = 0; t < spec.terms; ++t) {
        Poly term(ctx.alg(), Rat((int)(rng() % 5) - 2));
        if (term.zero()) term = Poly(ctx.alg(), 1);
        for (int j = 0; j < spec.jets_per_term; ++j) {
            const std::string& f = fields[rng() % fields.size()];
            term = term * ctx.jp(f, random_index(rng, n, spec.max_jet_order));
        }
        if (spec.allow_x && rng() % 2) term = term * ctx.xp(1 + (int)(rng() % n));
        int ndx = spec.n_dx >= 0 ? spec.n_dx : (int)(rng() % (n + 1));
        // Pick `ndx` distinct directions.
        std::vector<int> dirs;
        for (int mu = 1; mu <= n; ++mu) dirs.push_back(mu);
        std::shuffle(dirs.begin(), dirs.end(), rng);
        for (int k = 0; k < ndx; ++k) term = term * ctx.dxp(dirs[k]);
        for (int k = 0; k < spec.n_delta; ++k) {
            const std::string& f = fields[rng() % fields.size()];
            term = term * ctx.vjp(f, random_index(rng, n, spec.max_jet_order));
        }
        out += term;
    }
    return out;
}

}  // namespace gstar::testing
