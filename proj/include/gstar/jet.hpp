// The variational tricomplex over a declared base dimension and field content:
// jets declared on demand, total derivatives, horizontal/vertical
// differentials, evolutionary vector fields with prolongation, the interior
// Euler operator, Euler-Lagrange and boundary forms, a deterministic
// d_h-antiderivative, and Noether currents.
//
// Conventions.  Base coordinates x^mu have degree (0,0,0), dx^mu (1,0,0); a
// field of ghost number k contributes jets u_I of degree (0,0,k) and vertical
// generators delta-u_I of degree (0,1,k).  The tables d_h(u_I) = dx^mu u_{I,mu}
// and d_h(delta-u_I) = dx^mu delta-u_{I,mu} make d_h and d_v commute,
// [d_h, d_v] = 0, consistent with the tri-graded Koszul pairing (a (1,0,0)
// operator pairs trivially with a (0,1,0) one).

#pragma once

#include <algorithm>
#include <set>
#include <tuple>

#include "gstar/derivation.hpp"
#include "gstar/linalg.hpp"

namespace gstar {

// Sorted multi-index over base directions 1..n.
using MultiIndex = std::vector<int>;

inline std::string multi_index_str(const MultiIndex& I) {
    std::string s = "(";
    for (size_t i = 0; i < I.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(I[i]);
    }
    return s + ")";
}

class JetContext {
  public:
    struct FieldInfo {
        std::string name;
        int ghost = 0;
    };
    struct JetInfo {
        int field;       // index into fields()
        MultiIndex idx;  // sorted
        bool vertical;
    };

    explicit JetContext(int n, std::string base_name = "x")
        : A_(std::make_shared<Algebra>()), n_(n), base_name_(std::move(base_name)) {
        for (int mu = 1; mu <= n_; ++mu) {
            std::string suffix = n_ == 1 ? "" : std::to_string(mu);
            x_.push_back(A_->declare({base_name_ + suffix, {0, 0, 0}, GenKind::BaseCoord}));
            dx_.push_back(A_->declare({"d" + base_name_ + suffix, {1, 0, 0}, GenKind::HorizontalForm}));
        }
    }
    JetContext(const JetContext&) = delete;
    JetContext& operator=(const JetContext&) = delete;

    const AlgebraPtr& algebra_ptr() const { return A_; }
    const Algebra* alg() const { return A_.get(); }
    int dim() const { return n_; }
    const std::vector<FieldInfo>& fields() const { return fields_; }

    // Declares a field (and its zero jet / vertical zero jet).  Antifields and
    // ghosts are ordinary fields with the appropriate ghost number.
    void declare_field(const std::string& name, int ghost, GenKind kind = GenKind::Field) {
        if (field_index_.count(name)) throw std::runtime_error("field already declared: " + name);
        int f = (int)fields_.size();
        field_index_[name] = f;
        fields_.push_back({name, ghost});
        zero_jet_kind_.push_back(kind);
        jet(name);   // materialize u
        vjet(name);  // and delta-u
    }
    bool has_field(const std::string& name) const { return field_index_.count(name) > 0; }

    // Central even parameters (deformation couplings).
    int declare_parameter(const std::string& name) {
        return A_->declare({name, {0, 0, 0}, GenKind::Parameter});
    }

    int x(int mu) const { return x_.at(mu - 1); }
    int dx(int mu) const { return dx_.at(mu - 1); }
    Poly xp(int mu) const { return Poly::generator(alg(), x(mu)); }
    Poly dxp(int mu) const { return Poly::generator(alg(), dx(mu)); }
    // Volume form dx^1 ... dx^n.
    Poly dvol() const {
        Poly v(alg(), 1);
        for (int mu = 1; mu <= n_; ++mu) v = v * dxp(mu);
        return v;
    }

    // Jet generator ids, declared on demand; the multi-index is sorted.
    int jet(const std::string& field, MultiIndex I = {}) { return jet_id(field, std::move(I), false); }
    int vjet(const std::string& field, MultiIndex I = {}) { return jet_id(field, std::move(I), true); }
    Poly jp(const std::string& field, MultiIndex I = {}) {
        return Poly::generator(alg(), jet(field, std::move(I)));
    }
    Poly vjp(const std::string& field, MultiIndex I = {}) {
        return Poly::generator(alg(), vjet(field, std::move(I)));
    }

    const JetInfo* jet_info(int gen) const {
        auto it = info_.find(gen);
        return it == info_.end() ? nullptr : &it->second;
    }

    // Hooks for coefficient symbols (GenKind::IndexedSymbol): their total
    // derivative and vertical differential, zero by default.
    std::function<Poly(int gen, int mu)> symbol_Dmu;
    std::function<Poly(int gen)> symbol_dv;

    // Total derivative in direction mu: degree (0,0,0); raises jets, kills dx,
    // x^nu -> delta^nu_mu.
    const Derivation& Dmu(int mu) {
        if (Dmu_.empty()) {
            for (int m = 1; m <= n_; ++m) {
                Dmu_.push_back(Derivation(alg(), "D_" + std::to_string(m), {0, 0, 0},
                                          [this, m](int g) { return total_derivative_of(g, m); }));
            }
        }
        return Dmu_.at(mu - 1);
    }
    Poly D_I(const MultiIndex& I, Poly p) {
        for (int mu : I) p = Dmu(mu)(p);
        return p;
    }

    // Horizontal differential d_h = sum_mu dx^mu D_mu, degree (1,0,0).
    const Derivation& dh() {
        if (!dh_.defined()) {
            Derivation s = Derivation::zero(alg(), {1, 0, 0});
            for (int mu = 1; mu <= n_; ++mu)
                s = s + Derivation::lmul_compose(dxp(mu), {1, 0, 0}, Dmu(mu));
            dh_ = Derivation(alg(), "d_h", {1, 0, 0}, [s](int g) { return s.on(g); });
        }
        return dh_;
    }

    // Vertical differential, degree (0,1,0): u_I -> delta-u_I.
    const Derivation& dv() {
        if (!dv_.defined()) {
            dv_ = Derivation(alg(), "d_v", {0, 1, 0}, [this](int g) {
                const Generator& gen = A_->gen(g);
                if (gen.kind == GenKind::IndexedSymbol)
                    return symbol_dv ? symbol_dv(g) : Poly(alg());
                auto it = info_.find(g);
                if (it == info_.end() || it->second.vertical) return Poly(alg());
                return Poly::generator(alg(), vjet_by_info(it->second));
            });
        }
        return dv_;
    }

    // ---- Evolutionary vector fields ------------------------------------

    struct EvolutionaryField {
        JetContext* ctx = nullptr;
        std::string name;
        int ghost = 0;                      // ghost-number shift
        std::map<std::string, Poly> chars;  // field -> characteristic

        const Poly& characteristic(const std::string& field) const {
            auto it = chars.find(field);
            if (it == chars.end()) throw std::runtime_error("missing characteristic: " + field);
            return it->second;
        }
        // Contraction iota_X, degree (0,-1,ghost): delta-u_I -> D_I(char).
        Derivation iota() const {
            JetContext* c = ctx;
            auto ch = chars;
            return Derivation(c->alg(), "iota_" + name, {0, -1, ghost}, [c, ch](int g) {
                const JetInfo* ji = c->jet_info(g);
                if (!ji || !ji->vertical) return Poly(c->alg());
                auto it = ch.find(c->fields()[ji->field].name);
                if (it == ch.end()) return Poly(c->alg());
                return c->D_I(ji->idx, it->second);
            });
        }
        // Lie derivative Lie_X = [iota_X, d_v], degree (0,0,ghost); on u_I it
        // is the I-th total derivative of the characteristic (prolongation).
        Derivation lie() const { return bracket(iota(), ctx->dv(), "Lie_" + name); }
        Derivation prolonged() const { return lie(); }
    };

    EvolutionaryField evolutionary(const std::string& name, int ghost,
                                   std::map<std::string, Poly> chars) {
        for (auto& [f, q] : chars) {
            if (!field_index_.count(f)) throw std::runtime_error("characteristic for unknown field: " + f);
            auto d = q.degree();
            if (!q.zero() && d && !(*d == Tridegree{0, 0, fields_[field_index_[f]].ghost + ghost}))
                throw std::runtime_error("characteristic of wrong degree for field " + f);
        }
        return EvolutionaryField{this, name, ghost, std::move(chars)};
    }

    // Graded commutator of evolutionary fields: characteristic of [X, Y] on f
    // is X(Y^f) - (-1)^{g_X g_Y} Y(X^f).
    EvolutionaryField ev_bracket(const EvolutionaryField& X, const EvolutionaryField& Y) {
        Derivation lx = X.lie(), ly = Y.lie();
        int sgn = (X.ghost * Y.ghost) % 2;
        std::map<std::string, Poly> chars;
        for (auto& f : fields_) {
            Poly qx = X.chars.count(f.name) ? X.chars.at(f.name) : Poly(alg());
            Poly qy = Y.chars.count(f.name) ? Y.chars.at(f.name) : Poly(alg());
            chars[f.name] = lx(qy) - Rat(sgn ? -1 : 1) * ly(qx);
        }
        return evolutionary("[" + X.name + "," + Y.name + "]", X.ghost + Y.ghost, std::move(chars));
    }

    // The homotopy operator K_0 = sum_mu dx^mu iota_{E_mu} and the invariant
    // horizontal differential d_{h,inv} = sum_mu dx^mu Lie_{E_mu}, where E_mu
    // has characteristic u_{(mu)} for every field.  On x-independent forms
    // [d_v, K_0] = d_{h,inv} = d_h and K_0^2 = 0.
    Derivation K0() {
        Derivation s = Derivation::zero(alg(), {1, -1, 0});
        for (int mu = 1; mu <= n_; ++mu)
            s = s + Derivation::lmul_compose(dxp(mu), {1, 0, 0}, frame_field(mu).iota());
        return Derivation(alg(), "K_0", {1, -1, 0}, [s](int g) { return s.on(g); });
    }
    Derivation dh_inv() {
        Derivation s = Derivation::zero(alg(), {1, 0, 0});
        for (int mu = 1; mu <= n_; ++mu)
            s = s + Derivation::lmul_compose(dxp(mu), {1, 0, 0}, frame_field(mu).lie());
        return Derivation(alg(), "d_h_inv", {1, 0, 0}, [s](int g) { return s.on(g); });
    }

    // ---- Interior Euler operator and Euler-Lagrange forms --------------

    // I(w) = (1/s) sum_{f,I} delta-u^f (-D)_I (d/d(delta-u^f_I) w) on forms of
    // horizontal degree n and vertical degree s >= 1; idempotent, kills d_h.
    // Mixed vertical degrees are handled sector by sector.
    Poly interior_euler(const Poly& w) {
        if (w.zero()) return w;
        std::map<int, Poly> by_v;
        for (auto& [m, c] : w.terms()) {
            Tridegree d = m.degree(*A_);
            if (d.h != n_ || d.v < 1)
                throw std::runtime_error("interior_euler: needs degree (n, s>=1)");
            by_v.try_emplace(d.v, alg()).first->second.add_term(m, c);
        }
        Poly out(alg());
        for (auto& [s, part] : by_v) out += interior_euler_sector(part, s);
        return out;
    }

  private:
    Poly interior_euler_sector(const Poly& w, int s) {
        // Collect the vertical jets present.
        std::set<int> vgens;
        for (auto& [m, c] : w.terms())
            for (auto& [g, e] : m.factors) {
                const JetInfo* ji = jet_info(g);
                if (ji && ji->vertical) vgens.insert(g);
            }
        Poly out(alg());
        for (int g : vgens) {
            const JetInfo& ji = info_.at(g);
            const FieldInfo& f = fields_[ji.field];
            Tridegree gd = A_->gen(g).deg;
            Derivation contract = Derivation::from_table(
                A_, "d/d(" + A_->gen(g).name + ")", {0, -1, -gd.g}, {{A_->gen(g).name, Poly(alg(), 1)}});
            Poly c = contract(w);
            c = D_I(ji.idx, c);
            if (ji.idx.size() % 2) c = -c;
            out += vjp(f.name) * c;
        }
        return Rat(1, s) * out;
    }

  public:
    Poly euler_lagrange(const Poly& L) { return interior_euler(dv()(L)); }

    // ---- d_h antiderivative --------------------------------------------

    struct AntiderivResult {
        Poly alpha;     // candidate with d_h alpha = w - residual
        Poly residual;  // zero iff w was d_h-exact over the candidate space
        bool exact() const { return residual.zero(); }
    };

    // Deterministic inversion of d_h on its image: builds the finite space of
    // candidate monomials obtained by removing one dx factor and lowering one
    // jet index (or absorbing the dx into an explicit x factor when the target
    // depends on x), closes it under d_h-image re-lowering, and solves the
    // exact sparse linear system.  Free coefficients are pinned to zero, so
    // the result is canonical; inexactness is reported as a residual.
    AntiderivResult dh_antiderivative(const Poly& w) {
        AntiderivResult res{Poly(alg()), Poly(alg())};
        if (w.zero()) return res;
        bool use_x = false;
        int max_x_deg = 0;
        for (auto& [m, c] : w.terms()) {
            int xdeg = 0;
            for (auto& [g, e] : m.factors)
                if (A_->gen(g).kind == GenKind::BaseCoord) xdeg += e;
            use_x = use_x || xdeg > 0;
            max_x_deg = std::max(max_x_deg, xdeg);
        }
        std::set<Monomial> cands;
        std::vector<Monomial> queue;
        auto add_from = [&](const Monomial& m) {
            for (const Monomial& c : lowerings(m, use_x, max_x_deg + 1))
                if (cands.insert(c).second) queue.push_back(c);
        };
        for (auto& [m, c] : w.terms()) add_from(m);
        std::vector<Monomial> cand_list;
        std::vector<std::map<Monomial, Rat>> cols;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            if (qi > 50000) throw std::runtime_error("dh_antiderivative: candidate blow-up");
            Monomial c = queue[qi];
            Poly cp(alg());
            cp.add_term(c, 1);
            Poly im = dh()(cp);
            for (auto& [m2, c2] : im.terms()) add_from(m2);
            cand_list.push_back(c);
            cols.push_back(im.terms());
        }
        auto sol = sparse_solve(cols, w.terms());
        if (!sol.solution) {
            for (auto& [m, c] : sol.residual) res.residual.add_term(m, c);
            return res;
        }
        for (size_t i = 0; i < cand_list.size(); ++i)
            res.alpha.add_term(cand_list[i], (*sol.solution)[i]);
        // The solve was over the candidate span; certify exactly.
        res.residual = w - dh()(res.alpha);
        return res;
    }

    // ---- Lagrangian structure ------------------------------------------

    struct VariationResult {
        Poly EL;        // source form I(d_v L)
        Poly gamma;     // boundary form: d_v L = EL + d_h gamma
        Poly residual;  // d_v L - EL - d_h gamma (zero on success)
        bool pass() const { return residual.zero(); }
    };

    VariationResult first_variation(const Poly& L) {
        VariationResult r;
        r.EL = euler_lagrange(L);
        Poly rest = dv()(L) - r.EL;
        auto anti = dh_antiderivative(rest);
        r.gamma = anti.alpha;
        r.residual = anti.residual;
        return r;
    }
    Poly boundary_form(const Poly& L) {
        auto r = first_variation(L);
        if (!r.pass())
            throw std::runtime_error("boundary_form: d_v L - EL not d_h-exact: " + r.residual.str());
        return r.gamma;
    }

    // ---- Noether currents ----------------------------------------------

    struct NoetherResult {
        Poly alpha;              // Lie_X L = d_h alpha
        Poly gamma;              // boundary form of L
        Poly j;                  // alpha - iota_X gamma
        Poly symmetry_residual;  // nonzero iff Lie_X L is not d_h-exact
        Poly current_residual;   // d_h j - iota_X EL
        bool pass() const { return symmetry_residual.zero() && current_residual.zero(); }
    };

    NoetherResult noether_current(const EvolutionaryField& X, const Poly& L) {
        NoetherResult r;
        auto var = first_variation(L);
        if (!var.pass())
            throw std::runtime_error("noether_current: boundary form failure: " + var.residual.str());
        r.gamma = var.gamma;
        auto anti = dh_antiderivative(X.lie()(L));
        r.alpha = anti.alpha;
        r.symmetry_residual = anti.residual;
        r.j = r.alpha - X.iota()(var.gamma);
        r.current_residual = dh()(r.j) - X.iota()(var.EL);
        return r;
    }

    struct NoetherPair {
        Poly j;
        EvolutionaryField X;
    };

    struct NoetherBracketResult {
        NoetherPair pair;
        Poly current_residual;  // d_h j - iota_{[X1,X2]} EL
        bool pass() const { return current_residual.zero(); }
    };

    // {(j1,X1),(j2,X2)} = (Lie_{X1} j2 - (-1)^{g1 g2} Lie_{X2} j1, [X1,X2]).
    // The output satisfies the Noether-pair relation whenever the doubly
    // contracted second variation iota_{X2} iota_{X1} d_v EL vanishes; the
    // certified defect is returned as the residual otherwise.
    NoetherBracketResult noether_bracket(const NoetherPair& p1, const NoetherPair& p2,
                                         const Poly& EL) {
        int sgn = (p1.X.ghost * p2.X.ghost) % 2;
        Poly j = p1.X.lie()(p2.j) - Rat(sgn ? -1 : 1) * p2.X.lie()(p1.j);
        NoetherBracketResult r{{j, ev_bracket(p1.X, p2.X)}, Poly(alg())};
        r.current_residual = dh()(j) - r.pair.X.iota()(EL);
        return r;
    }

    // ---- Substitution endomorphisms ------------------------------------

    // Algebra endomorphism determined by zero-jet images, prolonged to jets by
    // total derivatives and to vertical jets by d_v of the image; identity on
    // x, dx, parameters and symbols.  Commutes with d_h and d_v by
    // construction.
    class Substitution {
      public:
        Substitution(JetContext* ctx, std::map<std::string, Poly> images)
            : ctx_(ctx), images_(std::move(images)) {}

        const std::map<std::string, Poly>& images() const { return images_; }

        Poly on_gen(int g) const {
            auto it = cache_.find(g);
            if (it != cache_.end()) return it->second;
            Poly r = compute(g);
            cache_.emplace(g, r);
            return r;
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

        // Inverse by fixed-point iteration w <- w + (u - sigma(w)); converges
        // when the zero-jet shifts are nilpotent (ghost-graded perturbations).
        Substitution inverse(int bound = 16) const {
            std::map<std::string, Poly> inv;
            for (auto& [f, img] : images_) inv[f] = ctx_->jp(f);
            for (int it = 0; it < bound; ++it) {
                bool done = true;
                for (auto& [f, w] : inv) {
                    Substitution cur(ctx_, inv);
                    Poly err = ctx_->jp(f) - cur(images_.at(f));
                    if (!err.zero()) {
                        done = false;
                        w += err;
                    }
                }
                if (done) return Substitution(ctx_, inv);
            }
            throw std::runtime_error("Substitution::inverse: no fixed point within bound");
        }

      private:
        Poly compute(int g) const {
            const Generator& gen = ctx_->alg()->gen(g);
            const JetInfo* ji = ctx_->jet_info(g);
            if (!ji) return Poly::generator(ctx_->alg(), g);
            const std::string& f = ctx_->fields()[ji->field].name;
            auto it = images_.find(f);
            if (it == images_.end()) return Poly::generator(ctx_->alg(), g);
            Poly base = it->second;
            if (ji->vertical) base = ctx_->dv()(base);
            (void)gen;
            return ctx_->D_I(ji->idx, base);
        }

        JetContext* ctx_;
        std::map<std::string, Poly> images_;
        mutable std::map<int, Poly> cache_;
    };

    Substitution substitution(std::map<std::string, Poly> images) {
        for (auto& [f, img] : images)
            if (!field_index_.count(f)) throw std::runtime_error("substitution of unknown field: " + f);
        return Substitution(this, std::move(images));
    }

  private:
    int jet_id(const std::string& field, MultiIndex I, bool vertical) {
        auto fit = field_index_.find(field);
        if (fit == field_index_.end()) throw std::runtime_error("undeclared field: " + field);
        std::sort(I.begin(), I.end());
        for (int mu : I)
            if (mu < 1 || mu > n_) throw std::runtime_error("jet direction out of range");
        auto key = std::make_tuple(fit->second, I, vertical);
        auto it = jets_.find(key);
        if (it != jets_.end()) return it->second;
        const FieldInfo& f = fields_[fit->second];
        std::string name = f.name;
        if (!I.empty()) name += "_" + multi_index_str(I);
        Tridegree deg{0, 0, f.ghost};
        GenKind kind = I.empty() ? zero_jet_kind_[fit->second] : GenKind::Jet;
        if (vertical) {
            name = "\xce\xb4" + name;  // delta prefix
            deg.v = 1;
            kind = GenKind::VerticalForm;
        }
        int id = A_->declare({name, deg, kind});
        jets_.emplace(key, id);
        info_.emplace(id, JetInfo{fit->second, I, vertical});
        return id;
    }

    int vjet_by_info(const JetInfo& ji) {
        return jet_id(fields_[ji.field].name, ji.idx, true);
    }

    Poly total_derivative_of(int g, int mu) {
        const Generator& gen = A_->gen(g);
        switch (gen.kind) {
            case GenKind::BaseCoord:
                return Poly(alg(), g == x(mu) ? 1 : 0);
            case GenKind::HorizontalForm:
            case GenKind::Parameter:
                return Poly(alg());
            case GenKind::IndexedSymbol:
                return symbol_Dmu ? symbol_Dmu(g, mu) : Poly(alg());
            default: {
                const JetInfo& ji = info_.at(g);
                MultiIndex I = ji.idx;
                I.push_back(mu);
                return Poly::generator(alg(), jet_id(fields_[ji.field].name, std::move(I), ji.vertical));
            }
        }
    }

    // E_mu: the evolutionary frame field with characteristic u_{(mu)}.
    EvolutionaryField frame_field(int mu) {
        std::map<std::string, Poly> chars;
        for (auto& f : fields_) chars[f.name] = jp(f.name, {mu});
        return EvolutionaryField{this, "E_" + std::to_string(mu), 0, std::move(chars)};
    }

    // All monomials c with one dx factor removed and one jet index lowered (or
    // one explicit x power added) such that m may appear in d_h(c).
    std::vector<Monomial> lowerings(const Monomial& m, bool use_x, int x_cap) {
        std::vector<Monomial> out;
        for (auto& [gdx, edx] : m.factors) {
            if (A_->gen(gdx).kind != GenKind::HorizontalForm) continue;
            int mu = 0;
            for (int k = 1; k <= n_; ++k)
                if (dx(k) == gdx) mu = k;
            if (mu == 0) continue;
            // Lower a jet index mu on some jet factor.
            for (auto& [gj, ej] : m.factors) {
                const JetInfo* ji = jet_info(gj);
                if (!ji) continue;
                auto pos = std::find(ji->idx.begin(), ji->idx.end(), mu);
                if (pos == ji->idx.end()) continue;
                MultiIndex I = ji->idx;
                I.erase(I.begin() + (pos - ji->idx.begin()));
                int lowered = jet_id(fields_[ji->field].name, std::move(I), ji->vertical);
                auto cand = rebuild(m, {{gdx, -1}, {gj, -1}, {lowered, +1}});
                if (cand) out.push_back(*cand);
            }
            // Absorb dx^mu into an explicit x^mu factor.
            if (use_x && m.exponent(x(mu)) + 1 <= x_cap) {
                auto cand = rebuild(m, {{gdx, -1}, {x(mu), +1}});
                if (cand) out.push_back(*cand);
            }
        }
        return out;
    }

    // Applies exponent deltas to a monomial and re-canonicalizes; nullopt when
    // an odd generator would exceed exponent 1.
    std::optional<Monomial> rebuild(const Monomial& m, const std::vector<std::pair<int, int>>& deltas) {
        std::map<int, int> exp;
        for (auto& [g, e] : m.factors) exp[g] += e;
        for (auto& [g, d] : deltas) exp[g] += d;
        Monomial out;
        for (auto& [g, e] : exp) {
            if (e < 0) return std::nullopt;
            if (e == 0) continue;
            if (e > 1 && A_->gen(g).odd()) return std::nullopt;
            out.factors.push_back({g, e});
        }
        return out;
    }

    AlgebraPtr A_;
    int n_;
    std::string base_name_;
    std::vector<int> x_, dx_;
    std::vector<FieldInfo> fields_;
    std::vector<GenKind> zero_jet_kind_;
    std::map<std::string, int> field_index_;
    std::map<std::tuple<int, MultiIndex, bool>, int> jets_;
    std::map<int, JetInfo> info_;
    std::vector<Derivation> Dmu_;
    Derivation dh_, dv_;
};

using EvolutionaryField = JetContext::EvolutionaryField;

}  // namespace gstar
