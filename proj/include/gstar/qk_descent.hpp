// QKG-structures on jet field spaces: an odd nilpotent evolutionary field Q,
// a family K_mu whose graded brackets with Q are the coordinate translations,
// and an optional gauge family I_lambda.  Provides the homotopy operator
// K = dx^mu ^ Lie_{K_mu}, standard and general K-sequences, descent-equation
// verification, the Mathai-Quillen conjugation exp(K~), structure
// deformations with compatibility classification, and coordinate changes of
// the whole structure through a prolonged zero-jet substitution.

#pragma once

#include "gstar/jet.hpp"

namespace gstar {

// Algebra endomorphism of a jet context determined by images of the zero
// jets: u_I -> D_I(image(u)), delta-u_I -> D_I(d_v image(u)); base
// coordinates, horizontal forms, and parameters are fixed.
class JetSubstitution {
  public:
    JetSubstitution(JetContext* ctx, std::map<std::string, Poly> images)
        : ctx_(ctx), images_(std::move(images)) {
        for (auto& [f, img] : images_)
            if (!ctx_->has_field(f))
                throw std::runtime_error("substitution image for unknown field: " + f);
    }

    Poly on_gen(int g) const {
        const JetContext::JetInfo* ji = ctx_->jet_info(g);
        if (!ji) return Poly::generator(ctx_->alg(), g);
        const std::string& f = ctx_->fields()[ji->field].name;
        auto it = images_.find(f);
        if (it == images_.end()) return Poly::generator(ctx_->alg(), g);
        Poly base = ji->vertical ? ctx_->dv()(it->second) : it->second;
        return ctx_->D_I(ji->idx, std::move(base));
    }

    Poly operator()(const Poly& p) const {
        Poly out(ctx_->alg());
        for (auto& [m, c] : p.terms()) {
            Poly term(ctx_->alg(), c);
            for (auto& [g, e] : m.factors)
                for (int k = 0; k < e; ++k) term = term * on_gen(g);
            out += term;
        }
        return out;
    }

  private:
    JetContext* ctx_;
    std::map<std::string, Poly> images_;
};

class QKGStructure {
  public:
    using EvField = JetContext::EvolutionaryField;

    struct Check {
        std::string name;
        Poly residual;  // nonzero residual of the first failing generator
        bool pass;
    };

    QKGStructure(JetContext* ctx, EvField Q, std::vector<EvField> K,
                 std::vector<std::string> spectators = {})
        : ctx_(ctx), Q_(std::move(Q)), K_(std::move(K)), spectators_(std::move(spectators)) {
        if ((int)K_.size() != ctx_->dim())
            throw std::runtime_error("QKGStructure: need one K per base dimension");
    }

    JetContext* ctx() const { return ctx_; }
    const EvField& Q() const { return Q_; }
    const EvField& Kmu(int mu) const { return K_.at(mu - 1); }
    const std::vector<std::string>& spectators() const { return spectators_; }

    // Translation field: characteristic u_(mu) on every non-spectator field.
    EvField xi(int mu) const {
        std::map<std::string, Poly> chars;
        for (auto& f : ctx_->fields())
            if (!is_spectator(f.name)) chars[f.name] = ctx_->jp(f.name, {mu});
        return ctx_->evolutionary("xi_" + std::to_string(mu), 0, std::move(chars));
    }

    // ---- Structure brackets on the field generators ---------------------

    bool ev_is_zero(const EvField& X) const {
        for (auto& [f, q] : X.chars)
            if (!q.zero()) return false;
        return true;
    }
    // X == Y as evolutionary fields (characteristic-wise).
    Poly ev_defect(const EvField& X, const EvField& Y) const {
        for (auto& f : ctx_->fields()) {
            Poly qx = X.chars.count(f.name) ? X.chars.at(f.name) : Poly(ctx_->alg());
            Poly qy = Y.chars.count(f.name) ? Y.chars.at(f.name) : Poly(ctx_->alg());
            Poly d = qx - qy;
            if (!d.zero()) return d;
        }
        return Poly(ctx_->alg());
    }

    std::vector<Check> verify_structure() const {
        std::vector<Check> out;
        auto add = [&](const std::string& name, const Poly& r) {
            out.push_back({name, r, r.zero()});
        };
        // Q^2 = 0: the bracket [Q, Q] = 2 Q^2 on characteristics.
        {
            EvField qq = ctx_->ev_bracket(Q_, Q_);
            Poly r(ctx_->alg());
            for (auto& [f, q] : qq.chars)
                if (!q.zero()) {
                    r = q;
                    break;
                }
            add("Q^2 = 0", r);
        }
        int n = ctx_->dim();
        for (int mu = 1; mu <= n; ++mu) {
            EvField qk = ctx_->ev_bracket(Q_, Kmu(mu));
            add("[Q, K_" + std::to_string(mu) + "] = xi_" + std::to_string(mu),
                ev_defect(qk, xi(mu)));
            for (int nu = mu; nu <= n; ++nu) {
                EvField kk = ctx_->ev_bracket(Kmu(mu), Kmu(nu));
                Poly r(ctx_->alg());
                for (auto& [f, q] : kk.chars)
                    if (!q.zero()) {
                        r = q;
                        break;
                    }
                add("[K_" + std::to_string(mu) + ", K_" + std::to_string(nu) + "] = 0", r);
            }
            for (int nu = 1; nu <= n; ++nu) {
                EvField xk = ctx_->ev_bracket(xi(mu), Kmu(nu));
                Poly r(ctx_->alg());
                for (auto& [f, q] : xk.chars)
                    if (!q.zero()) {
                        r = q;
                        break;
                    }
                add("[xi_" + std::to_string(mu) + ", K_" + std::to_string(nu) + "] = 0", r);
            }
        }
        return out;
    }

    static bool all_pass(const std::vector<Check>& cs) {
        for (auto& c : cs)
            if (!c.pass) return false;
        return true;
    }

    // ---- The homotopy operator K ---------------------------------------

    // K = dx^mu ^ Lie_{K_mu}, degree (1, 0, -1); a derivation.
    const Derivation& K_op() const {
        if (!Kop_.defined()) {
            Derivation s = Derivation::zero(ctx_->alg(), {1, 0, -1});
            for (int mu = 1; mu <= ctx_->dim(); ++mu)
                s = s + Derivation::lmul_compose(ctx_->dxp(mu), {1, 0, 0}, Kmu(mu).lie());
            Kop_ = Derivation(ctx_->alg(), "K", {1, 0, -1}, [s](int g) { return s.on(g); });
        }
        return Kop_;
    }

    // Graded operator relations of Q, K, d_{h,inv}, iota_Q, K_0, verified on a
    // generator list (jets, vertical jets, horizontal forms; no bare x^mu).
    std::vector<Check> verify_operator_relations(const std::vector<int>& gens) const {
        std::vector<Check> out;
        LinOp K = as_op(K_op());
        LinOp LQ = as_op(Q_.lie());
        LinOp iQ = as_op(Q_.iota());
        LinOp dhi = as_op(ctx_->dh_inv());
        LinOp K0 = as_op(ctx_->K0());
        LinOp zero{{0, 0, 0}, [this](const Poly&) { return Poly(ctx_->alg()); }};
        auto add = [&](const std::string& name, const LinOp& lhs, const LinOp& rhs) {
            RelationReport rep = check_relation(ctx_->alg(), lhs, rhs, gens);
            Poly r(ctx_->alg());
            if (!rep.pass()) r = rep.failures.front().residual;
            out.push_back({name, r, rep.pass()});
        };
        add("[Q, K] = d_h_inv", op_bracket(LQ, K), dhi);
        add("[K, d_h_inv] = 0", op_bracket(K, dhi), zero);
        add("[K, iota_Q] = K_0", op_bracket(K, iQ), K0);
        add("[Q, K_0] = 0", op_bracket(LQ, K0), zero);
        return out;
    }

    // ---- Descent sequences ----------------------------------------------

    struct DescentSequence {
        std::vector<Poly> O;  // O[p], p = 0..n
    };
    struct DescentReport {
        std::vector<Poly> residuals;  // level p: Q O^(p) - d_h O^(p-1) (p=0: Q O^(0))
        bool pass = true;
    };

    void require_x_independent(const Poly& w) const {
        for (auto& [m, c] : w.terms())
            for (auto& [g, e] : m.factors)
                if (ctx_->alg()->gen(g).kind == GenKind::BaseCoord)
                    throw std::runtime_error("form depends explicitly on a base coordinate");
    }

    DescentSequence standard_k_sequence(const Poly& O0) const {
        require_x_independent(O0);
        Poly qo = Q_.lie()(O0);
        if (!qo.zero())
            throw std::runtime_error("standard_k_sequence: seed not Q-closed: " + qo.str());
        DescentSequence seq;
        seq.O.push_back(O0);
        Poly cur = O0;
        Rat fact = 1;
        for (int p = 1; p <= ctx_->dim(); ++p) {
            cur = K_op()(cur);
            fact *= p;
            seq.O.push_back((Rat(1) / fact) * cur);
        }
        return seq;
    }

    // O^(p) = K^p/p! O^(0) + sum_{q<=p} K^{p-q}/(p-q)! W^(q).
    DescentSequence general_k_sequence(const Poly& O0, const std::map<int, Poly>& W) const {
        DescentSequence seq = standard_k_sequence(O0);
        for (auto& [q, Wq] : W) {
            if (q < 1 || q > ctx_->dim()) throw std::runtime_error("W^(q) level out of range");
            require_x_independent(Wq);
            Poly qw = Q_.lie()(Wq);
            if (!qw.zero())
                throw std::runtime_error("general_k_sequence: W^(q) not Q-closed: " + qw.str());
            Poly cur = Wq;
            Rat fact = 1;
            for (int p = q; p <= ctx_->dim(); ++p) {
                if (p > q) {
                    cur = K_op()(cur);
                    fact *= (p - q);
                }
                seq.O[p] += (Rat(1) / fact) * cur;
            }
        }
        return seq;
    }

    DescentReport verify_descent(const DescentSequence& seq) const {
        DescentReport rep;
        for (size_t p = 0; p < seq.O.size(); ++p) {
            Poly r = Q_.lie()(seq.O[p]);
            if (p > 0) r -= ctx_->dh()(seq.O[p - 1]);
            rep.residuals.push_back(r);
            rep.pass = rep.pass && r.zero();
        }
        return rep;
    }

    // ---- Mathai-Quillen conjugation ------------------------------------

    // K~ w = (-1)^{d_tot(w) - n} K w, per homogeneous total degree.
    Poly mq_tilde_K(const Poly& w) const { return tilde_apply(K_op(), w); }
    Poly mq_tilde_dh_inv(const Poly& w) const { return tilde_apply(ctx_->dh_inv(), w); }

    // exp(K~); terminates because K strictly raises horizontal degree.
    Poly mq_conjugate(const Poly& w) const {
        Poly result = w;
        Poly power = w;
        Rat fact = 1;
        for (int k = 1; k <= ctx_->dim() + 1; ++k) {
            power = mq_tilde_K(power);
            if (power.zero()) return result;
            fact *= k;
            result += (Rat(1) / fact) * power;
        }
        throw std::runtime_error("mq_conjugate: K not nilpotent within dimension bound");
    }

    // Residual of the conjugation identity (Q - d~_{h,inv})(exp(K~) w)
    // = exp(K~)(Q w); zero for every w.
    Poly mq_residual(const Poly& w) const {
        Poly jw = mq_conjugate(w);
        return Q_.lie()(jw) - mq_tilde_dh_inv(jw) - mq_conjugate(Q_.lie()(w));
    }

    // ---- Deformations ---------------------------------------------------

    struct DeformationReport {
        Poly q_residual;    // [Q, K'_mu] (first nonzero)
        Poly kk_residual;   // [K'_mu, K'_nu]
        Poly full_residual; // [K'_mu, K_nu]; zero = fully compatible
        bool admissible() const { return q_residual.zero() && kk_residual.zero(); }
        bool fully_compatible() const { return full_residual.zero(); }
    };

    QKGStructure deform(const std::vector<EvField>& Kprime, DeformationReport* rep = nullptr) const {
        if ((int)Kprime.size() != ctx_->dim())
            throw std::runtime_error("deform: need one K' per base dimension");
        DeformationReport r{Poly(ctx_->alg()), Poly(ctx_->alg()), Poly(ctx_->alg())};
        int n = ctx_->dim();
        auto first_nonzero = [&](const EvField& X) {
            for (auto& [f, q] : X.chars)
                if (!q.zero()) return q;
            return Poly(ctx_->alg());
        };
        for (int mu = 1; mu <= n && r.q_residual.zero(); ++mu)
            r.q_residual = first_nonzero(ctx_->ev_bracket(Q_, Kprime[mu - 1]));
        for (int mu = 1; mu <= n && r.kk_residual.zero(); ++mu)
            for (int nu = mu; nu <= n && r.kk_residual.zero(); ++nu)
                r.kk_residual = first_nonzero(ctx_->ev_bracket(Kprime[mu - 1], Kprime[nu - 1]));
        for (int mu = 1; mu <= n && r.full_residual.zero(); ++mu)
            for (int nu = 1; nu <= n && r.full_residual.zero(); ++nu)
                r.full_residual = first_nonzero(ctx_->ev_bracket(Kprime[mu - 1], K_[nu - 1]));
        if (rep) *rep = r;
        if (!r.admissible())
            throw std::runtime_error("deform: deformation axioms fail: " +
                                     (r.q_residual.zero() ? r.kk_residual : r.q_residual).str());
        std::vector<EvField> Knew;
        for (int mu = 1; mu <= n; ++mu) {
            std::map<std::string, Poly> chars;
            for (auto& f : ctx_->fields()) {
                Poly a = Kmu(mu).chars.count(f.name) ? Kmu(mu).chars.at(f.name)
                                                     : Poly(ctx_->alg());
                Poly b = Kprime[mu - 1].chars.count(f.name) ? Kprime[mu - 1].chars.at(f.name)
                                                            : Poly(ctx_->alg());
                Poly s = a + b;
                if (!s.zero()) chars[f.name] = s;
            }
            Knew.push_back(ctx_->evolutionary("K_" + std::to_string(mu) + "'", -1,
                                              std::move(chars)));
        }
        return QKGStructure(ctx_, Q_, std::move(Knew), spectators_);
    }

    // ---- Coordinate changes ---------------------------------------------

    // Conjugates every table through sigma . X . sigma^{-1}; sigma must be
    // invertible on the zero jets (verified).
    QKGStructure change_coordinates(const JetSubstitution& sigma,
                                    const JetSubstitution& sigma_inv) const {
        for (auto& f : ctx_->fields()) {
            Poly rt = sigma(sigma_inv(ctx_->jp(f.name))) - ctx_->jp(f.name);
            if (!rt.zero())
                throw std::runtime_error("change_coordinates: substitution not invertible on " +
                                         f.name + ": " + rt.str());
        }
        auto conj = [&](const EvField& X) {
            std::map<std::string, Poly> chars;
            Derivation lx = X.lie();
            for (auto& f : ctx_->fields()) {
                Poly c = sigma(lx(sigma_inv(ctx_->jp(f.name))));
                if (!c.zero()) chars[f.name] = c;
            }
            return ctx_->evolutionary(X.name + "~", X.ghost, std::move(chars));
        };
        std::vector<EvField> Knew;
        for (int mu = 1; mu <= ctx_->dim(); ++mu) Knew.push_back(conj(Kmu(mu)));
        return QKGStructure(ctx_, conj(Q_), std::move(Knew), spectators_);
    }

  private:
    bool is_spectator(const std::string& f) const {
        return std::find(spectators_.begin(), spectators_.end(), f) != spectators_.end();
    }

    Poly tilde_apply(const Derivation& D, const Poly& w) const {
        // Split into homogeneous total-degree pieces and sign each one.
        const Algebra* A = ctx_->alg();
        int n = ctx_->dim();
        Poly out(A);
        for (auto& [m, c] : w.terms()) {
            Tridegree d{};
            for (auto& [g, e] : m.factors) {
                const Tridegree& gd = A->gen(g).deg;
                d.h += gd.h * e;
                d.v += gd.v * e;
                d.g += gd.g * e;
            }
            int dtot = d.h + d.v + d.g;
            Poly piece(A);
            piece.add_term(m, c);
            Poly im = D(piece);
            out += ((dtot - n) % 2 ? Rat(-1) : Rat(1)) * im;
        }
        return out;
    }

    JetContext* ctx_;
    EvField Q_;
    std::vector<EvField> K_;
    std::vector<std::string> spectators_;
    mutable Derivation Kop_;
};

// The canonical structure of a shift-paired theory: Q Phi = Psi, Q Psi = 0,
// K_mu Phi = 0, K_mu Psi = Phi_(mu).  Pairs are given componentwise; every
// field must appear in a pair or among the spectators.
inline QKGStructure canonical_qk(JetContext* ctx,
                                 const std::vector<std::pair<std::string, std::string>>& pairs,
                                 std::vector<std::string> spectators = {}) {
    std::set<std::string> seen(spectators.begin(), spectators.end());
    std::map<std::string, Poly> qchars;
    for (auto& [phi, psi] : pairs) {
        if (!ctx->has_field(phi) || !ctx->has_field(psi))
            throw std::runtime_error("canonical_qk: unknown field in pair " + phi + "/" + psi);
        seen.insert(phi);
        seen.insert(psi);
        qchars[phi] = ctx->jp(psi);
        qchars[psi] = Poly(ctx->alg());
    }
    for (auto& f : ctx->fields())
        if (!seen.count(f.name))
            throw std::runtime_error("canonical_qk: unpaired field " + f.name);
    QKGStructure::EvField Q = ctx->evolutionary("Q", 1, std::move(qchars));
    std::vector<QKGStructure::EvField> K;
    for (int mu = 1; mu <= ctx->dim(); ++mu) {
        std::map<std::string, Poly> kchars;
        for (auto& [phi, psi] : pairs) {
            kchars[phi] = Poly(ctx->alg());
            kchars[psi] = ctx->jp(phi, {mu});
        }
        K.push_back(ctx->evolutionary("K_" + std::to_string(mu), -1, std::move(kchars)));
    }
    return QKGStructure(ctx, std::move(Q), std::move(K), std::move(spectators));
}

}  // namespace gstar
