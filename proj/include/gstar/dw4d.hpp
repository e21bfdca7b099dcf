// Four-dimensional cohomological gauge theory with structure group SU(2):
// component fields theta (ghost 1), A (connection 1-form), chi (2-form,
// ghost -1), phi (ghost 2), upsilon (1-form, ghost 1), b (2-form); canonical
// and deformed QKG-structures, the Mathai-Quillen-style coordinate change of
// the tables, gauge families, the five-term descent sequence seeded by
// Tr(phi^2), and the Lagrangian Tr(F ^ F)/2 + Q Tr(chi ^ (F + b)).

#pragma once

#include "gstar/qk_descent.hpp"

namespace gstar {

class DW4d {
  public:
    static constexpr int LDIM = 3;  // su(2) components
    static constexpr int N = 4;     // base dimension
    using Lie = std::array<Poly, LDIM>;
    using EvField = JetContext::EvolutionaryField;

    JetContext ctx{N};

    explicit DW4d(bool with_antifields = false) : has_antifields_(with_antifields) {
        for (int a = 1; a <= LDIM; ++a) ctx.declare_field(theta_n(a), 1);
        for (int a = 1; a <= LDIM; ++a)
            for (int mu = 1; mu <= N; ++mu) ctx.declare_field(A_n(a, mu), 0);
        for (int a = 1; a <= LDIM; ++a)
            for (auto [mu, nu] : pairs()) ctx.declare_field(chi_n(a, mu, nu), -1);
        for (int a = 1; a <= LDIM; ++a) ctx.declare_field(phi_n(a), 2);
        for (int a = 1; a <= LDIM; ++a)
            for (int mu = 1; mu <= N; ++mu) ctx.declare_field(ups_n(a, mu), 1);
        for (int a = 1; a <= LDIM; ++a)
            for (auto [mu, nu] : pairs()) ctx.declare_field(b_n(a, mu, nu), 0);
        // Symbolic gauge parameters (spectators of the structure).
        for (int a = 1; a <= LDIM; ++a) ctx.declare_field(lam_n(a, 0), 0);
        for (int a = 1; a <= LDIM; ++a) ctx.declare_field(lam_n(a, 1), 0);
        if (with_antifields) {
            // One antifield per field, with complementary horizontal form
            // degree (carried by explicit dx factors in the form accessors)
            // and ghost number -1 - ghost(field).
            auto anti = [this](const std::string& n, int ghost) {
                ctx.declare_field(n, ghost, GenKind::Antifield);
            };
            for (int a = 1; a <= LDIM; ++a) anti(thp_n(a), -2);  // 4-form
            for (int a = 1; a <= LDIM; ++a)
                for (auto& t : triples()) anti(Ap_n(a, t[0], t[1], t[2]), -1);  // 3-form
            for (int a = 1; a <= LDIM; ++a)
                for (auto [mu, nu] : pairs()) anti(chp_n(a, mu, nu), 0);  // 2-form
            for (int a = 1; a <= LDIM; ++a) anti(php_n(a), -3);           // 4-form
            for (int a = 1; a <= LDIM; ++a)
                for (auto& t : triples()) anti(upp_n(a, t[0], t[1], t[2]), -2);  // 3-form
            for (int a = 1; a <= LDIM; ++a)
                for (auto [mu, nu] : pairs()) anti(bp_n(a, mu, nu), -1);  // 2-form
        }
    }

    bool has_antifields() const { return has_antifields_; }

    // ---- Names and index bookkeeping ------------------------------------

    static std::string theta_n(int a) { return "theta" + std::to_string(a); }
    static std::string phi_n(int a) { return "phi" + std::to_string(a); }
    static std::string A_n(int a, int mu) {
        return "A" + std::to_string(a) + "_" + std::to_string(mu);
    }
    static std::string ups_n(int a, int mu) {
        return "u" + std::to_string(a) + "_" + std::to_string(mu);
    }
    static std::string chi_n(int a, int mu, int nu) {
        return "chi" + std::to_string(a) + "_" + std::to_string(mu) + std::to_string(nu);
    }
    static std::string b_n(int a, int mu, int nu) {
        return "b" + std::to_string(a) + "_" + std::to_string(mu) + std::to_string(nu);
    }
    static std::string lam_n(int a, int which) {
        return (which ? "lamp" : "lam") + std::to_string(a);
    }
    // Antifield component names (ghost -1 - ghost(field), complementary form
    // degree): thp/php are 4-form densities, Ap/upp 3-forms, chp/bp 2-forms.
    static std::string thp_n(int a) { return "thp" + std::to_string(a); }
    static std::string php_n(int a) { return "php" + std::to_string(a); }
    static std::string Ap_n(int a, int i, int j, int k) {
        return "Ap" + std::to_string(a) + "_" + std::to_string(i) + std::to_string(j) +
               std::to_string(k);
    }
    static std::string upp_n(int a, int i, int j, int k) {
        return "upp" + std::to_string(a) + "_" + std::to_string(i) + std::to_string(j) +
               std::to_string(k);
    }
    static std::string chp_n(int a, int mu, int nu) {
        return "chp" + std::to_string(a) + "_" + std::to_string(mu) + std::to_string(nu);
    }
    static std::string bp_n(int a, int mu, int nu) {
        return "bp" + std::to_string(a) + "_" + std::to_string(mu) + std::to_string(nu);
    }
    static const std::vector<std::pair<int, int>>& pairs() {
        static const std::vector<std::pair<int, int>> p = {{1, 2}, {1, 3}, {1, 4},
                                                           {2, 3}, {2, 4}, {3, 4}};
        return p;
    }
    static const std::vector<std::array<int, 3>>& triples() {
        static const std::vector<std::array<int, 3>> t = {
            {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
        return t;
    }
    std::vector<std::string> spectators() const {
        std::vector<std::string> s;
        for (int a = 1; a <= LDIM; ++a) {
            s.push_back(lam_n(a, 0));
            s.push_back(lam_n(a, 1));
        }
        return s;
    }

    // ---- su(2)-valued form algebra --------------------------------------

    static int eps(int a, int b, int c) {
        if (a == b || b == c || a == c) return 0;
        return ((b - a + 3) % 3 == 1) ? 1 : -1;  // cyclic (1,2,3) -> +1
    }

    Lie lie_zero() const { return {Poly(ctx.alg()), Poly(ctx.alg()), Poly(ctx.alg())}; }

    // [X, Y]^a = eps_abc X^b ^ Y^c.
    Lie lbk(const Lie& X, const Lie& Y) const {
        Lie out = lie_zero();
        for (int a = 1; a <= LDIM; ++a)
            for (int b = 1; b <= LDIM; ++b)
                for (int c = 1; c <= LDIM; ++c) {
                    int e = eps(a, b, c);
                    if (e) out[a - 1] += Rat(e) * X[b - 1] * Y[c - 1];
                }
        return out;
    }
    // Invariant pairing Tr(X ^ Y) = sum_a X^a ^ Y^a.
    Poly tr(const Lie& X, const Lie& Y) const {
        Poly out(ctx.alg());
        for (int a = 0; a < LDIM; ++a) out += X[a] * Y[a];
        return out;
    }
    Lie ladd(const Lie& X, const Lie& Y) const {
        Lie out = lie_zero();
        for (int a = 0; a < LDIM; ++a) out[a] = X[a] + Y[a];
        return out;
    }
    Lie lsub(const Lie& X, const Lie& Y) const {
        Lie out = lie_zero();
        for (int a = 0; a < LDIM; ++a) out[a] = X[a] - Y[a];
        return out;
    }
    Lie lscale(const Rat& c, const Lie& X) const {
        Lie out = lie_zero();
        for (int a = 0; a < LDIM; ++a) out[a] = c * X[a];
        return out;
    }
    Lie lmap(const std::function<Poly(const Poly&)>& f, const Lie& X) const {
        Lie out = lie_zero();
        for (int a = 0; a < LDIM; ++a) out[a] = f(X[a]);
        return out;
    }

    // ---- Field forms -----------------------------------------------------

    Lie theta() { return lie0([this](int a) { return ctx.jp(theta_n(a)); }); }
    Lie phi() { return lie0([this](int a) { return ctx.jp(phi_n(a)); }); }
    Lie lam(int which = 0) {
        return lie0([this, which](int a) { return ctx.jp(lam_n(a, which)); });
    }
    Lie A() {
        return lie0([this](int a) {
            Poly s(ctx.alg());
            for (int mu = 1; mu <= N; ++mu) s += ctx.dxp(mu) * ctx.jp(A_n(a, mu));
            return s;
        });
    }
    Lie ups() {
        return lie0([this](int a) {
            Poly s(ctx.alg());
            for (int mu = 1; mu <= N; ++mu) s += ctx.dxp(mu) * ctx.jp(ups_n(a, mu));
            return s;
        });
    }
    Lie chi() { return two_form([this](int a, int mu, int nu) { return ctx.jp(chi_n(a, mu, nu)); }); }
    Lie b() { return two_form([this](int a, int mu, int nu) { return ctx.jp(b_n(a, mu, nu)); }); }

    // Vertical one-forms (variations) of the field families, as su(2)-valued
    // forms with the same horizontal factor structure as the fields.
    Lie vtheta() { return lie0([this](int a) { return ctx.vjp(theta_n(a)); }); }
    Lie vphi() { return lie0([this](int a) { return ctx.vjp(phi_n(a)); }); }
    Lie vA() {
        return lie0([this](int a) {
            Poly s(ctx.alg());
            for (int mu = 1; mu <= N; ++mu) s += ctx.dxp(mu) * ctx.vjp(A_n(a, mu));
            return s;
        });
    }
    Lie vups() {
        return lie0([this](int a) {
            Poly s(ctx.alg());
            for (int mu = 1; mu <= N; ++mu) s += ctx.dxp(mu) * ctx.vjp(ups_n(a, mu));
            return s;
        });
    }
    Lie vchi() {
        return two_form([this](int a, int mu, int nu) { return ctx.vjp(chi_n(a, mu, nu)); });
    }
    Lie vb() {
        return two_form([this](int a, int mu, int nu) { return ctx.vjp(b_n(a, mu, nu)); });
    }

    // Antifield forms.
    Lie thp() { return lie0([this](int a) { return ctx.dvol() * ctx.jp(thp_n(a)); }); }
    Lie php() { return lie0([this](int a) { return ctx.dvol() * ctx.jp(php_n(a)); }); }
    Lie Ap() {
        return three_form([this](int a, int i, int j, int k) { return ctx.jp(Ap_n(a, i, j, k)); });
    }
    Lie upp() {
        return three_form(
            [this](int a, int i, int j, int k) { return ctx.jp(upp_n(a, i, j, k)); });
    }
    Lie chp() { return two_form([this](int a, int mu, int nu) { return ctx.jp(chp_n(a, mu, nu)); }); }
    Lie bp() { return two_form([this](int a, int mu, int nu) { return ctx.jp(bp_n(a, mu, nu)); }); }

    Lie dh(const Lie& X) { return lmap([this](const Poly& p) { return ctx.dh()(p); }, X); }
    // Covariant differential d_A X = d_h X + [A, X].
    Lie dA(const Lie& X) { return ladd(dh(X), lbk(A(), X)); }
    // Curvature F = d_h A + [A, A]/2.
    Lie F() { return ladd(dh(A()), lscale(Rat(1, 2), lbk(A(), A()))); }

    // ---- Component extraction -------------------------------------------

    // Coefficient of dx^{mu_1} ^ ... ^ dx^{mu_p} (ascending) in w.
    Poly comp(Poly w, const std::vector<int>& mus) {
        for (int mu : mus) w = dx_contract(mu)(w);
        return w;
    }
    // Antisymmetric 2-form component lookup.
    Poly comp2(const Poly& w, int mu, int nu) {
        if (mu == nu) return Poly(ctx.alg());
        if (mu < nu) return comp(w, {mu, nu});
        return -comp(w, {nu, mu});
    }
    // Antisymmetric higher component lookups (ascending components stored).
    Poly comp_asym(const Poly& w, std::vector<int> mus) {
        int sign = 1;
        for (size_t i = 0; i + 1 < mus.size(); ++i)
            for (size_t j = 0; j + 1 < mus.size() - i; ++j) {
                if (mus[j] == mus[j + 1]) return Poly(ctx.alg());
                if (mus[j] > mus[j + 1]) {
                    std::swap(mus[j], mus[j + 1]);
                    sign = -sign;
                }
            }
        return Rat(sign) * comp(w, mus);
    }
    Poly comp3(const Poly& w, int mu, int nu, int rho) { return comp_asym(w, {mu, nu, rho}); }
    Poly comp4(const Poly& w, int mu, int nu, int rho, int sg) {
        return comp_asym(w, {mu, nu, rho, sg});
    }

    // Evolutionary field from Lie-valued images of the six field families.
    EvField ev_from_lie(const std::string& name, int ghost, const Lie& im_theta, const Lie& im_A,
                        const Lie& im_chi, const Lie& im_phi, const Lie& im_ups,
                        const Lie& im_b) {
        std::map<std::string, Poly> chars;
        for (int a = 1; a <= LDIM; ++a) {
            chars[theta_n(a)] = im_theta[a - 1];
            chars[phi_n(a)] = im_phi[a - 1];
            for (int mu = 1; mu <= N; ++mu) {
                chars[A_n(a, mu)] = comp(im_A[a - 1], {mu});
                chars[ups_n(a, mu)] = comp(im_ups[a - 1], {mu});
            }
            for (auto [mu, nu] : pairs()) {
                chars[chi_n(a, mu, nu)] = comp(im_chi[a - 1], {mu, nu});
                chars[b_n(a, mu, nu)] = comp(im_b[a - 1], {mu, nu});
            }
        }
        return ctx.evolutionary(name, ghost, std::move(chars));
    }

    // ---- Structures ------------------------------------------------------

    // Canonical shift structure on the pairs (theta,phi), (A,ups), (chi,b).
    QKGStructure canonical() {
        std::vector<std::pair<std::string, std::string>> prs;
        for (int a = 1; a <= LDIM; ++a) {
            prs.emplace_back(theta_n(a), phi_n(a));
            for (int mu = 1; mu <= N; ++mu) prs.emplace_back(A_n(a, mu), ups_n(a, mu));
            for (auto [mu, nu] : pairs()) prs.emplace_back(chi_n(a, mu, nu), b_n(a, mu, nu));
        }
        return canonical_qk(&ctx, prs, spectators());
    }

    // Displayed tables after the coordinate change phi -> phi - [theta,theta]/2,
    // ups -> ups + d_A theta, b -> b - [theta, chi].
    EvField Q_displayed() {
        Lie th = theta(), ph = phi(), u = ups(), c = chi(), bb = b();
        return ev_from_lie("Q", 1,
                           /*theta*/ lsub(ph, lscale(Rat(1, 2), lbk(th, th))),
                           /*A*/ ladd(u, dA(th)),
                           /*chi*/ lsub(bb, lbk(th, c)),
                           /*phi*/ lscale(Rat(-1), lbk(th, ph)),
                           /*ups*/ lsub(lscale(Rat(-1), lbk(th, u)), dA(ph)),
                           /*b*/ ladd(lscale(Rat(-1), lbk(th, bb)), lbk(ph, c)));
    }

    JetSubstitution mq_sub(int direction /* +1 forward, -1 inverse */) {
        std::map<std::string, Poly> images;
        Lie th = theta(), c = chi();
        Lie thth = lbk(th, th), thchi = lbk(th, c), dath = dA(th);
        Rat d(direction);
        for (int a = 1; a <= LDIM; ++a) {
            images[phi_n(a)] = ctx.jp(phi_n(a)) - d * Rat(1, 2) * thth[a - 1];
            for (int mu = 1; mu <= N; ++mu)
                images[ups_n(a, mu)] = ctx.jp(ups_n(a, mu)) + d * comp(dath[a - 1], {mu});
            for (auto [mu, nu] : pairs())
                images[b_n(a, mu, nu)] = ctx.jp(b_n(a, mu, nu)) - d * comp(thchi[a - 1], {mu, nu});
        }
        return JetSubstitution(&ctx, std::move(images));
    }

    // The flat-space deformation of the canonical K-family (before the
    // coordinate change): K'_mu theta = A_mu, K'_mu phi = -ups_mu.
    std::vector<EvField> K_deformation() {
        std::vector<EvField> out;
        for (int mu = 1; mu <= N; ++mu) {
            std::map<std::string, Poly> chars;
            for (int a = 1; a <= LDIM; ++a) {
                chars[theta_n(a)] = ctx.jp(A_n(a, mu));
                chars[phi_n(a)] = -ctx.jp(ups_n(a, mu));
            }
            out.push_back(ctx.evolutionary("K'_" + std::to_string(mu), -1, std::move(chars)));
        }
        return out;
    }

    // Displayed deformed K-family after the coordinate change: K_mu theta =
    // A_mu, K_mu phi = -ups_mu, K_mu A = 0, K_mu ups_nu = F_{mu nu},
    // K_mu chi = 0, K_mu b_{nu rho} = covariant derivative of chi.
    std::vector<EvField> K_displayed() {
        std::vector<EvField> out;
        Lie Fc = F();
        Lie Am = A(), c = chi();
        for (int mu = 1; mu <= N; ++mu) {
            std::map<std::string, Poly> chars;
            for (int a = 1; a <= LDIM; ++a) {
                chars[theta_n(a)] = ctx.jp(A_n(a, mu));
                chars[phi_n(a)] = -ctx.jp(ups_n(a, mu));
                for (int nu = 1; nu <= N; ++nu)
                    chars[ups_n(a, nu)] = comp2(Fc[a - 1], mu, nu);
                for (auto [nu, rho] : pairs()) {
                    Poly dmu_chi = ctx.jp(chi_n(a, nu, rho), {mu});
                    for (int bb = 1; bb <= LDIM; ++bb)
                        for (int cc = 1; cc <= LDIM; ++cc) {
                            int e = eps(a, bb, cc);
                            if (e)
                                dmu_chi += Rat(e) * ctx.jp(A_n(bb, mu)) *
                                           ctx.jp(chi_n(cc, nu, rho));
                        }
                    chars[b_n(a, nu, rho)] = dmu_chi;
                }
            }
            out.push_back(ctx.evolutionary("K_" + std::to_string(mu), -1, std::move(chars)));
        }
        return out;
    }

    QKGStructure displayed_deformed() {
        return QKGStructure(&ctx, Q_displayed(), K_displayed(), spectators());
    }

    // ---- Gauge family ----------------------------------------------------

    // Canonical gauge contraction: I phi = -[l, theta], I ups = d_A l,
    // I b = -[l, chi]; parameter l given componentwise.
    EvField I_canonical(const Lie& l, const std::string& name = "I") {
        std::map<std::string, Poly> chars;
        Lie th = theta(), c = chi();
        Lie lth = lbk(l, th), lchi = lbk(l, c);
        for (int a = 1; a <= LDIM; ++a) {
            chars[theta_n(a)] = Poly(ctx.alg());
            chars[phi_n(a)] = -lth[a - 1];
            for (int mu = 1; mu <= N; ++mu) {
                chars[A_n(a, mu)] = Poly(ctx.alg());
                Poly dal = ctx.Dmu(mu)(l[a - 1]);
                for (int bb = 1; bb <= LDIM; ++bb)
                    for (int cc = 1; cc <= LDIM; ++cc) {
                        int e = eps(a, bb, cc);
                        if (e) dal += Rat(e) * ctx.jp(A_n(bb, mu)) * l[cc - 1];
                    }
                chars[ups_n(a, mu)] = dal;
            }
            for (auto [mu, nu] : pairs()) {
                chars[chi_n(a, mu, nu)] = Poly(ctx.alg());
                chars[b_n(a, mu, nu)] = -comp(lchi[a - 1], {mu, nu});
            }
        }
        return ctx.evolutionary(name, -1, std::move(chars));
    }

    // Deformed gauge contraction after the coordinate change: I theta = l only.
    EvField I_deformed(const Lie& l, const std::string& name = "I~") {
        std::map<std::string, Poly> chars;
        for (int a = 1; a <= LDIM; ++a) chars[theta_n(a)] = l[a - 1];
        return ctx.evolutionary(name, -1, std::move(chars));
    }

    Lie dlam(const Lie& l, int mu) {
        return lmap([this, mu](const Poly& p) { return ctx.Dmu(mu)(p); }, l);
    }

    // ---- Preobservables and Lagrangian ----------------------------------

    std::vector<Poly> preobservables() {
        Lie ph = phi(), u = ups(), Fc = F();
        return {tr(ph, ph), Rat(-2) * tr(ph, u), tr(u, u) - Rat(2) * tr(ph, Fc),
                Rat(2) * tr(u, Fc), tr(Fc, Fc)};
    }

    Poly V() {
        Lie c = chi();
        return tr(c, ladd(F(), b()));
    }
    Poly L_top() { return Rat(1, 2) * tr(F(), F()); }
    Poly lagrangian(const EvField& Q) { return L_top() + Q.lie()(V()); }
    Poly lagrangian_displayed() {
        Lie c = chi(), bb = b(), Fc = F(), u = ups(), ph = phi();
        return Rat(1, 2) * tr(Fc, Fc) + tr(bb, ladd(Fc, bb)) - tr(c, dA(u)) -
               tr(c, lbk(ph, c));
    }

  protected:
    Lie lie0(const std::function<Poly(int)>& f) {
        Lie out = lie_zero();
        for (int a = 1; a <= LDIM; ++a) out[a - 1] = f(a);
        return out;
    }
    Lie two_form(const std::function<Poly(int, int, int)>& f) {
        return lie0([this, &f](int a) {
            Poly s(ctx.alg());
            for (auto [mu, nu] : pairs()) s += ctx.dxp(mu) * ctx.dxp(nu) * f(a, mu, nu);
            return s;
        });
    }
    Lie three_form(const std::function<Poly(int, int, int, int)>& f) {
        return lie0([this, &f](int a) {
            Poly s(ctx.alg());
            for (auto& t : triples())
                s += ctx.dxp(t[0]) * ctx.dxp(t[1]) * ctx.dxp(t[2]) * f(a, t[0], t[1], t[2]);
            return s;
        });
    }
    bool has_antifields_ = false;
    const Derivation& dx_contract(int mu) {
        if (dxc_.empty())
            for (int m = 1; m <= N; ++m)
                dxc_.push_back(Derivation::from_table(
                    ctx.algebra_ptr(), "ddx_" + std::to_string(m), {-1, 0, 0},
                    {{"dx" + std::to_string(m), Poly(ctx.alg(), 1)}}));
        return dxc_.at(mu - 1);
    }
    std::vector<Derivation> dxc_;
};

}  // namespace gstar
