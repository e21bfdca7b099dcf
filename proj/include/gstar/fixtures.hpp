// Built-in theory fixtures and their named check suites.
//
// Each fixture assembles one of the worked models (flat / curved / Morse
// supersymmetric quantum mechanics, the four-dimensional SU(2) cohomological
// gauge theory in its canonical, deformed and antifield variants) and exposes
// named suites of exact identity checks.  Every check reports the identity it
// verifies, its pass/fail status, and the residual when it fails.

#pragma once

#include <memory>

#include "gstar/bv.hpp"
#include "gstar/susy_curved.hpp"
#include "gstar/susy_flat.hpp"

namespace gstar {

struct CheckResult {
    std::string id;
    bool pass = false;
    long residual_terms = 0;
    std::string residual;  // printed residual; empty when the check passes
    std::string citation;  // self-contained statement of the identity checked
};

struct SuiteReport {
    std::string fixture;
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

class Fixture {
  public:
    virtual ~Fixture() = default;
    virtual std::string name() const = 0;
    virtual std::vector<std::string> suites() const = 0;
    SuiteReport run(const std::string& suite) {
        for (auto& s : suites())
            if (s == suite) {
                SuiteReport r;
                r.fixture = name();
                r.suite = suite;
                fill(suite, r);
                return r;
            }
        throw std::runtime_error("fixture " + name() + ": unknown suite '" + suite + "'");
    }

  protected:
    virtual void fill(const std::string& suite, SuiteReport& r) = 0;

    static void add(SuiteReport& r, std::string id, const Poly& residual, std::string citation) {
        CheckResult c;
        c.id = std::move(id);
        c.pass = residual.zero();
        c.residual_terms = static_cast<long>(residual.terms().size());
        if (!c.pass) c.residual = residual.str();
        c.citation = std::move(citation);
        r.checks.push_back(std::move(c));
    }
    static void add(SuiteReport& r, const QKGStructure::Check& ck, std::string citation) {
        CheckResult c;
        c.id = ck.name;
        c.pass = ck.pass;
        c.residual_terms = static_cast<long>(ck.residual.terms().size());
        if (!c.pass) c.residual = ck.residual.str();
        c.citation = std::move(citation);
        r.checks.push_back(std::move(c));
    }
    // First nonzero characteristic of an evolutionary field (zero if none).
    static Poly first_char(const JetContext& ctx, const JetContext::EvolutionaryField& X) {
        for (auto& [f, p] : X.chars)
            if (!p.zero()) return p;
        return Poly(ctx.alg());
    }
};

// ---- N=2 supersymmetric particle, flat target ---------------------------

class SusyQmFlatFixture : public Fixture {
  public:
    std::string name() const override { return "susy-qm-flat"; }
    std::vector<std::string> suites() const override { return {"relations"}; }

  protected:
    void fill(const std::string&, SuiteReport& r) override {
        FlatSusyQM t;
        auto& c = t.ctx;
        for (auto& ck : t.structure().verify_structure())
            add(r, ck, "canonical shift-pair structure relation " + ck.name);
        add(r, "qbar-nilpotent", first_char(c, c.ev_bracket(t.Qbar(), t.Qbar())),
            "Qbar^2 = 0 on all fields");
        {
            auto br = c.ev_bracket(t.Q(), t.Qbar());
            auto xi = t.structure().xi(1);
            Poly res(c.alg());
            for (auto& fi : c.fields()) {
                Poly got = br.chars.count(fi.name) ? br.chars.at(fi.name) : Poly(c.alg());
                Poly d = got - xi.chars.at(fi.name);
                if (!d.zero()) {
                    res = d;
                    break;
                }
            }
            add(r, "anticommutator", res, "[Q, Qbar] equals the time translation on all fields");
        }
        add(r, "qbar-gauge-fermion", t.Qbar().lie()(t.V()),
            "Qbar annihilates the gauge fermion chi_m (xdot - b)^m dt");
        Poly L = t.L();
        auto nQ = c.noether_current(t.Q(), L);
        add(r, "noether-q", nQ.j - t.current_Q_displayed(),
            "Noether current of Q equals -b_m psi^m");
        add(r, "noether-q-conserved", nQ.current_residual,
            "d_h j_Q equals the Q-contracted Euler-Lagrange form");
        auto nQb = c.noether_current(t.Qbar(), L);
        add(r, "noether-qbar", nQb.j - t.current_Qbar_displayed(),
            "Noether current of Qbar equals -b_m chi^m");
        add(r, "noether-qbar-conserved", nQb.current_residual,
            "d_h j_Qbar equals the Qbar-contracted Euler-Lagrange form");
    }
};

// ---- N=2 supersymmetric particle, curved target (optionally Morse) ------

class SusyQmCurvedFixture : public Fixture {
  public:
    explicit SusyQmCurvedFixture(bool morse) : morse_(morse) {}
    std::string name() const override { return morse_ ? "susy-qm-morse" : "susy-qm-curved"; }
    std::vector<std::string> suites() const override { return {"relations"}; }

  protected:
    void fill(const std::string&, SuiteReport& r) override {
        CurvedSusyQM t(morse_);
        {
            Poly res(t.ctx.alg());
            for (const Poly& g : t.structure_generators()) {
                res += t.q0_square(g);
                res += t.qbar0_square(g);
            }
            add(r, "canonical-nilpotent", res, "Q0^2 = Qbar0^2 = 0 on all generators");
        }
        {
            Poly res(t.ctx.alg());
            for (const Poly& g : t.structure_generators()) res += t.anticommutator_defect(g);
            add(r, "canonical-anticommutator", res,
                "[Q0, Qbar0] equals the time translation on all generators");
        }
        {
            Poly res(t.ctx.alg());
            for (const Poly& g : t.table_generators()) res += t.substitution_roundtrip(g);
            add(r, "shift-roundtrip", res, "the auxiliary-field shift is invertible");
        }
        for (const char* head : {"x", "psi", "chi", "b"}) {
            add(r, std::string("table-q-") + head, t.table_residual(t.Q, t.Qc, head),
                std::string("displayed curved Q table on ") + head +
                    " equals the shift conjugate of the canonical table");
            add(r, std::string("table-qbar-") + head, t.table_residual(t.Qbar, t.Qbarc, head),
                std::string("displayed curved Qbar table on ") + head +
                    " equals the shift conjugate of the canonical table");
        }
        add(r, "qbar-gauge-fermion", t.qbar_V_reduced(),
            morse_ ? "Qbar V = 0 after the Hessian-symmetry and lowering rewrites"
                   : "Qbar V = 0 after the Bianchi-antisymmetry and lowering rewrites");
        add(r, "horizontal-potential", t.alphaQ_residual(),
            "Q of the topological term is the total derivative of df_m psi^m");
        add(r, "noether-q", t.noether_Q() - t.noether_Q_expected(),
            morse_ ? "Noether current of Q equals (df_m - b_m) psi^m"
                   : "Noether current of Q equals -b_m psi^m");
        add(r, "noether-qbar", t.noether_Qbar() - t.noether_Qbar_expected(),
            "Noether current of Qbar equals -b_m chi^m");
        add(r, "lagrangian-expansion", t.lagrangian_expansion_residual(),
            "L expands into the displayed curvature-coupled closed form");
    }

  private:
    bool morse_;
};

// ---- Four-dimensional SU(2) cohomological gauge theory ------------------

class Dw4dFixture : public Fixture {
  public:
    enum class Mode { Canonical, Deformed, Bv };
    explicit Dw4dFixture(Mode m) : mode_(m) {}
    std::string name() const override {
        switch (mode_) {
            case Mode::Canonical: return "dw-4d-canonical";
            case Mode::Deformed: return "dw-4d-deformed";
            default: return "dw-4d-bv";
        }
    }
    std::vector<std::string> suites() const override {
        switch (mode_) {
            case Mode::Canonical: return {"relations", "descent"};
            case Mode::Deformed: return {"relations", "descent", "k-sequence"};
            default: return {"relations", "descent"};
        }
    }

  protected:
    void fill(const std::string& suite, SuiteReport& r) override {
        switch (mode_) {
            case Mode::Canonical: fill_canonical(suite, r); break;
            case Mode::Deformed: fill_deformed(suite, r); break;
            default: fill_bv(suite, r); break;
        }
    }

  private:
    void fill_canonical(const std::string& suite, SuiteReport& r) {
        DW4d t;
        QKGStructure can = t.canonical();
        if (suite == "relations") {
            for (auto& ck : can.verify_structure())
                add(r, ck, "canonical shift-pair structure relation " + ck.name);
            auto I1 = t.I_canonical(t.lam(0), "I1");
            auto I2 = t.I_canonical(t.lam(1), "I2");
            add(r, "gauge-contraction-bracket", first_char(t.ctx, t.ctx.ev_bracket(I1, I2)),
                "[I_lambda, I_mu] = 0 for the canonical gauge contractions");
            {
                auto delta1 = t.ctx.ev_bracket(can.Q(), I1);
                auto di = t.ctx.ev_bracket(delta1, I2);
                auto Ibk = t.I_canonical(t.lbk(t.lam(0), t.lam(1)), "Ibk");
                add(r, "gauge-variation-bracket", can.ev_defect(di, Ibk),
                    "[[Q, I_lambda], I_mu] = I_[lambda, mu]");
            }
        } else {  // descent under the canonical structure
            auto seq = can.standard_k_sequence(t.tr(t.phi(), t.phi()) * Rat(1, 2));
            auto rep = can.verify_descent(seq);
            for (size_t p = 0; p < rep.residuals.size(); ++p)
                add(r, "descent-" + std::to_string(p), rep.residuals[p],
                    "level-" + std::to_string(p) +
                        " descent equation of the canonical sequence of Tr(phi^2)/2");
        }
    }

    void fill_deformed(const std::string& suite, SuiteReport& r) {
        DW4d t;
        QKGStructure disp = t.displayed_deformed();
        if (suite == "relations") {
            for (auto& ck : disp.verify_structure())
                add(r, ck, "deformed structure relation " + ck.name);
            // Displayed deformation-family table rows.
            Derivation K = disp.K_op();
            auto row = [&](const char* id, const DW4d::Lie& got, const DW4d::Lie& want,
                           const char* cite) {
                Poly res(t.ctx.alg());
                for (int a = 0; a < DW4d::LDIM; ++a)
                    if (!(got[a] - want[a]).zero()) {
                        res = got[a] - want[a];
                        break;
                    }
                add(r, id, res, cite);
            };
            row("k-theta", t.lmap([&](const Poly& p) { return K(p); }, t.theta()), t.A(),
                "K theta = A");
            row("k-b", t.lmap([&](const Poly& p) { return K(p); }, t.b()), t.dA(t.chi()),
                "K b = d_A chi");
            // Gauge invariance of the Lagrangian.
            Poly L = t.lagrangian(disp.Q());
            add(r, "lagrangian-displayed", L - t.lagrangian_displayed(),
                "L_top + Q(V) equals the displayed Lagrangian");
            auto Iprime = t.I_deformed(t.lam(0));
            add(r, "gauge-contraction-invariance", Iprime.lie()(L),
                "I_lambda L = 0: the Lagrangian does not depend on theta");
            auto delta = t.ctx.ev_bracket(disp.Q(), Iprime);
            auto anti = t.ctx.dh_antiderivative(delta.lie()(L));
            add(r, "gauge-variation-exact", anti.residual,
                "the gauge variation of L is an exact horizontal differential");
        } else if (suite == "descent") {
            QKGStructure::DescentSequence seq{t.preobservables()};
            auto rep = disp.verify_descent(seq);
            for (size_t p = 0; p < rep.residuals.size(); ++p)
                add(r, "descent-" + std::to_string(p), rep.residuals[p],
                    "level-" + std::to_string(p) + " descent equation of the preobservables");
        } else {  // k-sequence
            auto seq = disp.standard_k_sequence(t.preobservables()[0]);
            auto obs = t.preobservables();
            for (size_t p = 0; p < obs.size(); ++p)
                add(r, "k-term-" + std::to_string(p), seq.O[p] - obs[p],
                    "K-sequence term " + std::to_string(p) +
                        " of Tr(phi^2)/2 equals the displayed preobservable");
            auto rep = disp.verify_descent(seq);
            for (size_t p = 0; p < rep.residuals.size(); ++p)
                add(r, "k-descent-" + std::to_string(p), rep.residuals[p],
                    "level-" + std::to_string(p) + " descent equation of the K-sequence");
        }
    }

    void fill_bv(const std::string& suite, SuiteReport& r) {
        DW4dBV t;
        auto& c = t.ctx;
        EvField Q = t.Q_BV_displayed();
        if (suite == "relations") {
            {
                auto sq = c.ev_bracket(Q, Q);
                add(r, "q-bv-nilpotent", first_char(c, sq),
                    "Q_BV^2 = 0 on all twelve generator families");
            }
            auto ext = t.theory().bv_extend(t.L_brst(), t.Q_displayed());
            {
                Poly d(c.alg());
                for (auto& fi : c.fields()) {
                    Poly a = ext.Q_BV.chars.count(fi.name) ? ext.Q_BV.chars.at(fi.name)
                                                           : Poly(c.alg());
                    Poly b = Q.chars.count(fi.name) ? Q.chars.at(fi.name) : Poly(c.alg());
                    if (!(a - b).zero()) {
                        d = a - b;
                        break;
                    }
                }
                add(r, "q-bv-computed", d,
                    "the cotangent-lifted differential equals the displayed table");
            }
            add(r, "master-lagrangian", ext.L_BV - t.L_BV_displayed(),
                "the master Lagrangian equals its displayed closed form");
            {
                Poly lhs = Q.iota()(t.theory().omega_ct()) - c.dv()(ext.L_BV);
                Poly rhs = -c.dh()(t.gamma_boundary_displayed());
                add(r, "boundary-one-form", lhs - rhs,
                    "iota_Q omega - d_v L_BV is minus the horizontal differential of the "
                    "displayed boundary form");
            }
        } else {  // descent: the exponential boundary tower and its identities
            std::vector<EvField> K = t.K_bv();
            QKGStructure s(&c, Q, K, t.spectators());
            BVBFVTower tw = ascend_exp_k(&c, s.K_op(), Q, t.gamma_seed(), t.Delta_seed());
            auto gd = t.gamma_tower_displayed();
            auto dd = t.Delta_tower_displayed();
            for (int p = 0; p < 5; ++p) {
                add(r, "gamma-" + std::to_string(p), tw.gamma[p] - gd[p],
                    "boundary-form tower level " + std::to_string(p) +
                        " equals its displayed closed form");
                add(r, "delta-" + std::to_string(p), tw.Delta[p] - dd[p],
                    "boundary-action tower level " + std::to_string(p) +
                        " equals its displayed closed form");
            }
            add(r, "l0", tw.L[0] - t.L0_displayed(),
                "the codimension-four action equals its displayed closed form");
            for (auto& ck : verify_bvbfv(&c, Q, tw))
                add(r, ck, "boundary-tower structural identity " + ck.name);
        }
    }

    Mode mode_;
};

// ---- Registry -----------------------------------------------------------

inline std::vector<std::string> fixture_names() {
    return {"susy-qm-flat",    "susy-qm-curved", "susy-qm-morse",
            "dw-4d-canonical", "dw-4d-deformed", "dw-4d-bv"};
}

inline std::unique_ptr<Fixture> load_fixture(const std::string& name) {
    if (name == "susy-qm-flat") return std::make_unique<SusyQmFlatFixture>();
    if (name == "susy-qm-curved") return std::make_unique<SusyQmCurvedFixture>(false);
    if (name == "susy-qm-morse") return std::make_unique<SusyQmCurvedFixture>(true);
    if (name == "dw-4d-canonical") return std::make_unique<Dw4dFixture>(Dw4dFixture::Mode::Canonical);
    if (name == "dw-4d-deformed") return std::make_unique<Dw4dFixture>(Dw4dFixture::Mode::Deformed);
    if (name == "dw-4d-bv") return std::make_unique<Dw4dFixture>(Dw4dFixture::Mode::Bv);
    throw std::runtime_error("unknown fixture '" + name + "'");
}

}  // namespace gstar
