// Riemannian coefficient symbols over an indexed context: metric, Christoffel
// symbols, curvature, and the gradient/Hessian family of a scalar potential,
// together with the directed rewrite rules relating them and an exact
// finite-dimensional model (dimension 3, polynomial metric, evaluated at a
// point) that validates every rule by exhaustive index summation.
//
// Slot conventions (derivative slots first):
//   h[a,b]            metric, symmetric
//   dh[s,a,b]         partial_s h_{ab}
//   ddh[t,s,a,b]      partial_t partial_s h_{ab}
//   Gam[m,r,n]        Christoffel Gamma^m_{rn}, symmetric in (r,n)
//   dGam[s,m,r,n]     partial_s Gamma^m_{rn}
//   Riem[m,n,r,s]     curvature R^m_{nrs}, antisymmetric in (r,s)
//   Rlo[a,n,r,s]      lowered curvature h_{am} R^m_{nrs}: antisymmetric pairs
//                     (a,n), (r,s) and pair exchange
//   df[m]             partial_m f
//   ddf[s,m]          partial_s partial_m f, symmetric
//   gradf[m]          h^{mn} partial_n f
//   dgradf[s,m]       partial_s gradf^m
//   ngradf[r,m]       nabla_r gradf^m = dgradf[r,m] + Gam[m,r,n] gradf[n]
//   Hessf[a,r]        covariant Hessian, symmetric
// plus one more derivative level of each family for nilpotency checks.

#pragma once

#include <random>

#include "gstar/indexed.hpp"

namespace gstar {

inline void declare_riemann_heads(IndexedContext& c, bool with_potential = true) {
    using SG = IndexedContext::SlotGroup;
    c.declare_head({"h", 2, {0, 0, 0}, {SG{{0, 1}, false}}});
    c.declare_head({"dh", 3, {0, 0, 0}, {SG{{1, 2}, false}}});
    c.declare_head({"ddh", 4, {0, 0, 0}, {SG{{0, 1}, false}, SG{{2, 3}, false}}});
    c.declare_head({"dddh", 5, {0, 0, 0}, {SG{{0, 1, 2}, false}, SG{{3, 4}, false}}});
    c.declare_head({"Gam", 3, {0, 0, 0}, {SG{{1, 2}, false}}});
    c.declare_head({"dGam", 4, {0, 0, 0}, {SG{{2, 3}, false}}});
    c.declare_head({"ddGam", 5, {0, 0, 0}, {SG{{0, 1}, false}, SG{{3, 4}, false}}});
    c.declare_head({"Riem", 4, {0, 0, 0}, {SG{{2, 3}, true}}});
    c.declare_head({"Rlo", 4, {0, 0, 0}, {SG{{0, 1}, true}, SG{{2, 3}, true}}, true});
    if (with_potential) {
        c.declare_head({"df", 1, {0, 0, 0}, {}});
        c.declare_head({"ddf", 2, {0, 0, 0}, {SG{{0, 1}, false}}});
        c.declare_head({"dddf", 3, {0, 0, 0}, {SG{{0, 1, 2}, false}}});
        c.declare_head({"gradf", 1, {0, 0, 0}, {}});
        c.declare_head({"dgradf", 2, {0, 0, 0}, {}});
        c.declare_head({"ddgradf", 3, {0, 0, 0}, {SG{{0, 1}, false}}});
        c.declare_head({"ngradf", 2, {0, 0, 0}, {}});
        c.declare_head({"Hessf", 2, {0, 0, 0}, {SG{{0, 1}, false}}});
    }
}

// Derivative tower: head -> head of its partial derivative (new slot first).
inline const std::map<std::string, std::string>& riemann_derivative_heads() {
    static const std::map<std::string, std::string> t = {
        {"h", "dh"},         {"dh", "ddh"},         {"ddh", "dddh"},
        {"Gam", "dGam"},     {"dGam", "ddGam"},     {"df", "ddf"},
        {"ddf", "dddf"},     {"gradf", "dgradf"},   {"dgradf", "ddgradf"},
    };
    return t;
}

// Image template for a vertical vector field v with v(x^s) = vhead[s]: every
// x-dependent symbol S maps to dS[s,...] * vhead[s].
inline IndexedContext::Template partial_image(std::string dhead, std::string vhead) {
    return [dhead = std::move(dhead), vhead = std::move(vhead)](
               IndexedContext& c, const std::vector<std::string>& labels) {
        std::string s = c.fresh_dummy();
        std::vector<std::string> dl{s};
        dl.insert(dl.end(), labels.begin(), labels.end());
        return c.sym(dhead, dl) * c.sym(vhead, {s});
    };
}

// Adds the symbol-tower images S -> dS * vhead[s] for every head in the tower
// to a template table (e.g. for a supersymmetry generator or a total
// derivative with vhead = velocity).
inline void add_riemann_partial_images(std::map<std::string, IndexedContext::Template>& tpl,
                                       const std::string& vhead) {
    for (auto& [head, dhead] : riemann_derivative_heads()) tpl[head] = partial_image(dhead, vhead);
}

namespace riemann_detail {
struct Factor {
    size_t pos;
    int gen;
    const std::string* head;
    const std::vector<std::string>* labels;
};
inline std::vector<Factor> indexed_factors(const IndexedContext& c, const std::vector<int>& flat) {
    std::vector<Factor> out;
    for (size_t i = 0; i < flat.size(); ++i) {
        const auto* info = c.indexed_info(flat[i]);
        if (info) out.push_back({i, flat[i], &info->first, &info->second});
    }
    return out;
}
}  // namespace riemann_detail

// --- Directed rewrite rules -------------------------------------------------
//
// All rewritten factors carry degree (0,0,0), so moving the replacement to the
// position of the first removed factor introduces no Koszul signs.

// h[a,m] Gam[m,r,n]  ->  (dh[r,a,n] + dh[n,a,r] - dh[a,r,n]) / 2
// (Levi-Civita connection with the free index lowered).
inline IndexedContext::Rule rule_lower_gamma() {
    return {"lower-gamma",
            [](IndexedContext& c, const Monomial& m) -> std::optional<Poly> {
                auto flat = c.flat_factors(m);
                auto fs = riemann_detail::indexed_factors(c, flat);
                for (auto& fh : fs) {
                    if (*fh.head != "h") continue;
                    for (auto& fg : fs) {
                        if (*fg.head != "Gam") continue;
                        const std::string& shared = (*fg.labels)[0];
                        int slot = (*fh.labels)[0] == shared ? 0
                                   : (*fh.labels)[1] == shared ? 1
                                                               : -1;
                        if (slot < 0) continue;
                        const std::string& a = (*fh.labels)[1 - slot];
                        const std::string& r = (*fg.labels)[1];
                        const std::string& n = (*fg.labels)[2];
                        Poly ins = (c.sym("dh", {r, a, n}) + c.sym("dh", {n, a, r}) -
                                    c.sym("dh", {a, r, n})) *
                                   Rat(1, 2);
                        return c.rebuild(flat, {fh.pos, fg.pos}, ins);
                    }
                }
                return std::nullopt;
            }};
}

// h[a,m] Riem[m,n,r,s] -> Rlo[a,n,r,s].
inline IndexedContext::Rule rule_lower_riemann() {
    return {"lower-riemann",
            [](IndexedContext& c, const Monomial& m) -> std::optional<Poly> {
                auto flat = c.flat_factors(m);
                auto fs = riemann_detail::indexed_factors(c, flat);
                for (auto& fh : fs) {
                    if (*fh.head != "h") continue;
                    for (auto& fr : fs) {
                        if (*fr.head != "Riem") continue;
                        const std::string& shared = (*fr.labels)[0];
                        int slot = (*fh.labels)[0] == shared ? 0
                                   : (*fh.labels)[1] == shared ? 1
                                                               : -1;
                        if (slot < 0) continue;
                        Poly ins = c.sym("Rlo", {(*fh.labels)[1 - slot], (*fr.labels)[1],
                                                 (*fr.labels)[2], (*fr.labels)[3]});
                        return c.rebuild(flat, {fh.pos, fr.pos}, ins);
                    }
                }
                return std::nullopt;
            }};
}

// Rlo contracted with three identical anticommuting odd fields vanishes: the
// contraction antisymmetrizes three slots of the lowered curvature, which is
// zero by the first Bianchi identity (validated on the finite model below).
inline IndexedContext::Rule rule_bianchi_odd3() {
    return {"bianchi-odd3",
            [](IndexedContext& c, const Monomial& m) -> std::optional<Poly> {
                auto flat = c.flat_factors(m);
                auto fs = riemann_detail::indexed_factors(c, flat);
                for (auto& fr : fs) {
                    if (*fr.head != "Rlo") continue;
                    std::map<std::string, int> partners;
                    for (const std::string& l : *fr.labels)
                        for (auto& ff : fs) {
                            if (ff.pos == fr.pos || ff.labels->size() != 1) continue;
                            if ((*ff.labels)[0] == l && c.alg()->gen(ff.gen).odd())
                                ++partners[*ff.head];
                        }
                    for (auto& [head, n] : partners)
                        if (n >= 3) return Poly(c.alg());
                }
                return std::nullopt;
            }};
}

// Riem[m,n,r,s] -> dGam[r,m,s,n] - dGam[s,m,r,n]
//                  + Gam[m,r,l] Gam[l,s,n] - Gam[m,s,l] Gam[l,r,n].
inline IndexedContext::Rule rule_riemann_def() {
    return {"riemann-def",
            [](IndexedContext& c, const Monomial& m) -> std::optional<Poly> {
                auto flat = c.flat_factors(m);
                auto fs = riemann_detail::indexed_factors(c, flat);
                for (auto& fr : fs) {
                    if (*fr.head != "Riem") continue;
                    const auto& L = *fr.labels;
                    std::string l = c.fresh_dummy();
                    Poly ins = c.sym("dGam", {L[2], L[0], L[3], L[1]}) -
                               c.sym("dGam", {L[3], L[0], L[2], L[1]}) +
                               c.sym("Gam", {L[0], L[2], l}) * c.sym("Gam", {l, L[3], L[1]}) -
                               c.sym("Gam", {L[0], L[3], l}) * c.sym("Gam", {l, L[2], L[1]});
                    return c.rebuild(flat, {fr.pos}, ins);
                }
                return std::nullopt;
            }};
}

// ngradf[r,m] -> dgradf[r,m] + Gam[m,r,n] gradf[n].
inline IndexedContext::Rule rule_nabla_gradf_def() {
    return {"nabla-gradf-def",
            [](IndexedContext& c, const Monomial& m) -> std::optional<Poly> {
                auto flat = c.flat_factors(m);
                auto fs = riemann_detail::indexed_factors(c, flat);
                for (auto& fn : fs) {
                    if (*fn.head != "ngradf") continue;
                    const auto& L = *fn.labels;
                    std::string n = c.fresh_dummy();
                    Poly ins = c.sym("dgradf", {L[0], L[1]}) +
                               c.sym("Gam", {L[1], L[0], n}) * c.sym("gradf", {n});
                    return c.rebuild(flat, {fn.pos}, ins);
                }
                return std::nullopt;
            }};
}

// h[a,m] ngradf[r,m] -> Hessf[a,r]  (metric compatibility).
inline IndexedContext::Rule rule_hess() {
    return {"lower-nabla-gradf",
            [](IndexedContext& c, const Monomial& m) -> std::optional<Poly> {
                auto flat = c.flat_factors(m);
                auto fs = riemann_detail::indexed_factors(c, flat);
                for (auto& fh : fs) {
                    if (*fh.head != "h") continue;
                    for (auto& fn : fs) {
                        if (*fn.head != "ngradf") continue;
                        const std::string& shared = (*fn.labels)[1];
                        int slot = (*fh.labels)[0] == shared ? 0
                                   : (*fh.labels)[1] == shared ? 1
                                                               : -1;
                        if (slot < 0) continue;
                        Poly ins = c.sym("Hessf", {(*fh.labels)[1 - slot], (*fn.labels)[0]});
                        return c.rebuild(flat, {fh.pos, fn.pos}, ins);
                    }
                }
                return std::nullopt;
            }};
}

// h[a,m] gradf[m] -> df[a].
inline IndexedContext::Rule rule_lower_gradf() {
    return {"lower-gradf",
            [](IndexedContext& c, const Monomial& m) -> std::optional<Poly> {
                auto flat = c.flat_factors(m);
                auto fs = riemann_detail::indexed_factors(c, flat);
                for (auto& fh : fs) {
                    if (*fh.head != "h") continue;
                    for (auto& fg : fs) {
                        if (*fg.head != "gradf") continue;
                        const std::string& shared = (*fg.labels)[0];
                        int slot = (*fh.labels)[0] == shared ? 0
                                   : (*fh.labels)[1] == shared ? 1
                                                               : -1;
                        if (slot < 0) continue;
                        return c.rebuild(flat, {fh.pos, fg.pos},
                                         c.sym("df", {(*fh.labels)[1 - slot]}));
                    }
                }
                return std::nullopt;
            }};
}

// Rules that push every expression towards lowered, potential-level normal
// form (used to verify the displayed vanishing statements).
inline std::vector<IndexedContext::Rule> riemann_lowering_rules() {
    return {rule_lower_gamma(), rule_lower_riemann(), rule_bianchi_odd3(), rule_hess(),
            rule_lower_gradf()};
}

// Definitional expansions down to Christoffel level (used to compare displayed
// transformation tables with coordinate-change conjugates).
inline std::vector<IndexedContext::Rule> riemann_definition_rules() {
    return {rule_riemann_def(), rule_nabla_gradf_def()};
}

// --- Exact finite model -----------------------------------------------------
//
// Dimension-3 Riemannian manifold with a random polynomial metric
// h_{ab}(x) = S_ab + B_abs x^s + C_abst x^s x^t and a random cubic potential,
// with every derived tensor (Christoffel symbols, curvature, gradient,
// Hessian) computed exactly at x = 0 over the rationals.

class RiemannModel {
  public:
    static constexpr int DIM = 3;

    explicit RiemannModel(unsigned seed) : rng_(seed) { build(); }

    // Value of a symbol head at the given (0-based) index tuple.
    const Rat& value(const std::string& head, const std::vector<int>& idx) const {
        auto it = data_.find(head);
        if (it == data_.end()) throw std::runtime_error("finite model: unknown head " + head);
        return it->second[flatten(idx)];
    }

    // Exhaustive numeric check that an indexed polynomial (symbol heads only)
    // vanishes identically: dummies are summed, free labels enumerated.
    bool vanishes(const IndexedContext& c, const Poly& p) const {
        // Collect the union of free labels.
        std::vector<std::string> free_labels;
        struct Term {
            Rat coeff;
            std::vector<std::pair<std::string, std::vector<std::string>>> factors;
            std::vector<std::string> dummies;
        };
        std::vector<Term> terms;
        for (auto& [m, coeff] : p.terms()) {
            Term t;
            t.coeff = coeff;
            std::map<std::string, int> count;
            for (auto& [g, e] : m.factors) {
                const auto* info = c.indexed_info(g);
                if (!info)
                    throw std::runtime_error("finite model: non-symbol factor in identity");
                for (int k = 0; k < e; ++k) t.factors.push_back(*info);
                for (int k = 0; k < e; ++k)
                    for (auto& l : info->second) ++count[l];
            }
            for (auto& [l, n] : count) {
                if (n == 2)
                    t.dummies.push_back(l);
                else if (std::find(free_labels.begin(), free_labels.end(), l) ==
                         free_labels.end())
                    free_labels.push_back(l);
            }
            terms.push_back(std::move(t));
        }
        size_t nf = free_labels.size();
        std::vector<int> fidx(nf, 0);
        while (true) {
            std::map<std::string, int> assign;
            for (size_t i = 0; i < nf; ++i) assign[free_labels[i]] = fidx[i];
            Rat total = 0;
            for (const auto& t : terms) total += t.coeff * term_value(t.factors, t.dummies, assign);
            if (total != 0) return false;
            size_t i = 0;
            for (; i < nf; ++i) {
                if (++fidx[i] < DIM) break;
                fidx[i] = 0;
            }
            if (i == nf) break;
            if (nf == 0) break;
        }
        return true;
    }

    bool validates(const IndexedContext& c, const Poly& lhs, const Poly& rhs) const {
        return vanishes(c, lhs - rhs);
    }

  private:
    template <typename Factors>
    Rat term_value(const Factors& factors, const std::vector<std::string>& dummies,
                   std::map<std::string, int> assign) const {
        size_t nd = dummies.size();
        std::vector<int> didx(nd, 0);
        Rat sum = 0;
        while (true) {
            for (size_t i = 0; i < nd; ++i) assign[dummies[i]] = didx[i];
            Rat prod = 1;
            for (auto& [head, labels] : factors) {
                std::vector<int> idx;
                for (auto& l : labels) idx.push_back(assign.at(l));
                prod *= value(head, idx);
            }
            sum += prod;
            size_t i = 0;
            for (; i < nd; ++i) {
                if (++didx[i] < DIM) break;
                didx[i] = 0;
            }
            if (i == nd) break;
            if (nd == 0) break;
        }
        return sum;
    }

    static size_t flatten(const std::vector<int>& idx) {
        size_t k = 0;
        for (int i : idx) {
            if (i < 0 || i >= DIM) throw std::runtime_error("finite model: index out of range");
            k = k * DIM + (size_t)i;
        }
        return k;
    }

    Rat rnd() {
        // Small random rationals, denominators 1..3, numerators -4..4.
        int num = (int)(rng_() % 9) - 4;
        int den = 1 + (int)(rng_() % 3);
        return Rat(num, den);
    }

    std::vector<Rat>& tensor(const std::string& head, int slots) {
        size_t size = 1;
        for (int i = 0; i < slots; ++i) size *= DIM;
        return data_.emplace(head, std::vector<Rat>(size, Rat(0))).first->second;
    }

    void build() {
        const int D = DIM;
        // Metric Taylor data: S symmetric invertible, B sym in (a,b), C sym in
        // (a,b) and (s,t).
        Rat S[3][3], B[3][3][3], C[3][3][3][3];
        while (true) {
            for (int a = 0; a < D; ++a)
                for (int b = a; b < D; ++b) S[a][b] = S[b][a] = (a == b ? Rat(a + 2) : rnd());
            // Determinant of the symmetric 3x3.
            Rat det = S[0][0] * (S[1][1] * S[2][2] - S[1][2] * S[2][1]) -
                      S[0][1] * (S[1][0] * S[2][2] - S[1][2] * S[2][0]) +
                      S[0][2] * (S[1][0] * S[2][1] - S[1][1] * S[2][0]);
            if (det != 0) {
                det_ = det;
                break;
            }
        }
        for (int a = 0; a < D; ++a)
            for (int b = a; b < D; ++b)
                for (int s = 0; s < D; ++s) B[a][b][s] = B[b][a][s] = rnd();
        for (int a = 0; a < D; ++a)
            for (int b = a; b < D; ++b)
                for (int s = 0; s < D; ++s)
                    for (int t = s; t < D; ++t)
                        C[a][b][s][t] = C[a][b][t][s] = C[b][a][s][t] = C[b][a][t][s] = rnd();
        // Inverse metric at 0 by adjugate.
        Rat hi[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                // Cofactor transpose: entry (j,i) of the cofactor matrix.
                hi[i][j] = (S[r0][c0] * S[r1][c1] - S[r0][c1] * S[r1][c0]) / det_;
                // Symmetric matrices: adjugate is symmetric, ordering immaterial.
            }
        // d(h^{-1}) = -h^{-1} dh h^{-1} at 0.
        Rat dhi[3][3][3];
        for (int s = 0; s < D; ++s)
            for (int m = 0; m < D; ++m)
                for (int k = 0; k < D; ++k) {
                    Rat acc = 0;
                    for (int a = 0; a < D; ++a)
                        for (int b = 0; b < D; ++b) acc += hi[m][a] * B[a][b][s] * hi[b][k];
                    dhi[s][m][k] = -acc;
                }

        auto& th = tensor("h", 2);
        auto& tdh = tensor("dh", 3);
        auto& tddh = tensor("ddh", 4);
        for (int a = 0; a < D; ++a)
            for (int b = 0; b < D; ++b) {
                th[flatten({a, b})] = S[a][b];
                for (int s = 0; s < D; ++s) {
                    tdh[flatten({s, a, b})] = B[a][b][s];
                    for (int t = 0; t < D; ++t) tddh[flatten({t, s, a, b})] = 2 * C[a][b][t][s];
                }
            }

        auto gam_low = [&](int s, int r, int n) {
            return (B[s][n][r] + B[s][r][n] - B[r][n][s]) / 2;
        };
        auto& tG = tensor("Gam", 3);
        for (int m = 0; m < D; ++m)
            for (int r = 0; r < D; ++r)
                for (int n = 0; n < D; ++n) {
                    Rat acc = 0;
                    for (int k = 0; k < D; ++k) acc += hi[m][k] * gam_low(k, r, n);
                    tG[flatten({m, r, n})] = acc;
                }
        auto& tdG = tensor("dGam", 4);
        for (int s = 0; s < D; ++s)
            for (int m = 0; m < D; ++m)
                for (int r = 0; r < D; ++r)
                    for (int n = 0; n < D; ++n) {
                        Rat acc = 0;
                        for (int k = 0; k < D; ++k) {
                            acc += dhi[s][m][k] * gam_low(k, r, n);
                            // d_s of the lowered bracket, via ddh.
                            Rat dlow = (tddh[flatten({s, r, k, n})] + tddh[flatten({s, n, k, r})] -
                                        tddh[flatten({s, k, r, n})]) /
                                       2;
                            acc += hi[m][k] * dlow;
                        }
                        tdG[flatten({s, m, r, n})] = acc;
                    }
        auto& tR = tensor("Riem", 4);
        auto& tRl = tensor("Rlo", 4);
        for (int m = 0; m < D; ++m)
            for (int n = 0; n < D; ++n)
                for (int r = 0; r < D; ++r)
                    for (int s = 0; s < D; ++s) {
                        Rat acc = tdG[flatten({r, m, s, n})] - tdG[flatten({s, m, r, n})];
                        for (int l = 0; l < D; ++l)
                            acc += tG[flatten({m, r, l})] * tG[flatten({l, s, n})] -
                                   tG[flatten({m, s, l})] * tG[flatten({l, r, n})];
                        tR[flatten({m, n, r, s})] = acc;
                    }
        for (int a = 0; a < D; ++a)
            for (int n = 0; n < D; ++n)
                for (int r = 0; r < D; ++r)
                    for (int s = 0; s < D; ++s) {
                        Rat acc = 0;
                        for (int m = 0; m < D; ++m)
                            acc += S[a][m] * tR[flatten({m, n, r, s})];
                        tRl[flatten({a, n, r, s})] = acc;
                    }

        // Potential: f with random first and second derivatives at 0.
        Rat fa[3], fb[3][3];
        for (int m = 0; m < D; ++m) fa[m] = rnd();
        for (int m = 0; m < D; ++m)
            for (int n = m; n < D; ++n) fb[m][n] = fb[n][m] = rnd();
        auto& tdf = tensor("df", 1);
        auto& tddf = tensor("ddf", 2);
        auto& tgf = tensor("gradf", 1);
        auto& tdgf = tensor("dgradf", 2);
        auto& tngf = tensor("ngradf", 2);
        auto& tHf = tensor("Hessf", 2);
        for (int m = 0; m < D; ++m) {
            tdf[flatten({m})] = fa[m];
            for (int n = 0; n < D; ++n) tddf[flatten({m, n})] = fb[m][n];
        }
        for (int m = 0; m < D; ++m) {
            Rat acc = 0;
            for (int n = 0; n < D; ++n) acc += hi[m][n] * fa[n];
            tgf[flatten({m})] = acc;
        }
        for (int s = 0; s < D; ++s)
            for (int m = 0; m < D; ++m) {
                Rat acc = 0;
                for (int n = 0; n < D; ++n) acc += dhi[s][m][n] * fa[n] + hi[m][n] * fb[s][n];
                tdgf[flatten({s, m})] = acc;
            }
        for (int r = 0; r < D; ++r)
            for (int m = 0; m < D; ++m) {
                Rat acc = tdgf[flatten({r, m})];
                for (int n = 0; n < D; ++n)
                    acc += tG[flatten({m, r, n})] * tgf[flatten({n})];
                tngf[flatten({r, m})] = acc;
            }
        for (int a = 0; a < D; ++a)
            for (int r = 0; r < D; ++r) {
                Rat acc = fb[a][r];
                for (int l = 0; l < D; ++l) acc -= tG[flatten({l, a, r})] * fa[l];
                tHf[flatten({a, r})] = acc;
            }
    }

    std::mt19937 rng_;
    Rat det_;
    std::map<std::string, std::vector<Rat>> data_;
};

}  // namespace gstar
