// N=2 supersymmetric particle on a flat target over a one-dimensional base.
//
// The theory is the canonical shift-paired structure on the pairs (x, psi)
// and (chi, b), with a conjugate supersymmetry Qbar, the gauge-fermion
// Lagrangian L = Q(chi_m (xdot^m - b^m)) dt, and the two Noether currents
// of the supersymmetries.  The flat metric is the identity, so upper and
// lower component indices coincide.

#pragma once

#include "gstar/qk_descent.hpp"

namespace gstar {

class FlatSusyQM {
  public:
    static constexpr int DIM = 3;  // target components
    using EvField = JetContext::EvolutionaryField;

    JetContext ctx{1, "t"};

    FlatSusyQM() {
        for (int m = 1; m <= DIM; ++m) ctx.declare_field(x_n(m), 0);
        for (int m = 1; m <= DIM; ++m) ctx.declare_field(psi_n(m), 1);
        for (int m = 1; m <= DIM; ++m) ctx.declare_field(chi_n(m), -1);
        for (int m = 1; m <= DIM; ++m) ctx.declare_field(b_n(m), 0);
        structure_ = std::make_unique<QKGStructure>(canonical_qk(&ctx, shift_pairs()));
    }

    static std::string x_n(int m) { return "x" + std::to_string(m); }
    static std::string psi_n(int m) { return "psi" + std::to_string(m); }
    static std::string chi_n(int m) { return "chi" + std::to_string(m); }
    static std::string b_n(int m) { return "b" + std::to_string(m); }

    static std::vector<std::pair<std::string, std::string>> shift_pairs() {
        std::vector<std::pair<std::string, std::string>> p;
        for (int m = 1; m <= DIM; ++m) p.emplace_back(x_n(m), psi_n(m));
        for (int m = 1; m <= DIM; ++m) p.emplace_back(chi_n(m), b_n(m));
        return p;
    }

    QKGStructure& structure() { return *structure_; }
    const EvField& Q() const { return structure_->Q(); }

    // Conjugate supersymmetry: x -> chi, psi -> xdot - b, chi -> 0, b -> chidot.
    const EvField& Qbar() {
        if (qbar_.chars.empty()) {
            std::map<std::string, Poly> ch;
            for (int m = 1; m <= DIM; ++m) {
                ch[x_n(m)] = ctx.jp(chi_n(m));
                ch[psi_n(m)] = ctx.jp(x_n(m), {1}) - ctx.jp(b_n(m));
                ch[chi_n(m)] = Poly(ctx.alg());
                ch[b_n(m)] = ctx.jp(chi_n(m), {1});
            }
            qbar_ = ctx.evolutionary("Qbar", -1, std::move(ch));
        }
        return qbar_;
    }

    // Gauge fermion V = chi_m (xdot^m - b^m) dt and Lagrangian L = Q(V).
    Poly V() {
        Poly s(ctx.alg());
        for (int m = 1; m <= DIM; ++m)
            s += ctx.jp(chi_n(m)) * (ctx.jp(x_n(m), {1}) - ctx.jp(b_n(m)));
        return s * ctx.dxp(1);
    }
    Poly L() { return Q().lie()(V()); }

    // Displayed Noether currents of the two supersymmetries.
    Poly current_Q_displayed() {
        Poly s(ctx.alg());
        for (int m = 1; m <= DIM; ++m) s -= ctx.jp(b_n(m)) * ctx.jp(psi_n(m));
        return s;
    }
    Poly current_Qbar_displayed() {
        Poly s(ctx.alg());
        for (int m = 1; m <= DIM; ++m) s -= ctx.jp(b_n(m)) * ctx.jp(chi_n(m));
        return s;
    }

  private:
    std::unique_ptr<QKGStructure> structure_;
    EvField qbar_;
};

}  // namespace gstar
