// Equivariant models: Weil algebras, the Cartan calculus checks, tensor
// G*-algebras, the Mathai-Quillen/Kalkman conjugation, basic subspaces and
// finite-degree cohomology over the rationals.
//
// Conventions: a G*-algebra carries a differential d (total degree +1),
// contractions iota_a (degree -1) and Lie derivatives Lie_a (degree 0) for a
// basis of the Lie algebra, subject to
//   [Lie_a, Lie_b] = f^c_{ab} Lie_c      [Lie_a, iota_b] = f^c_{ab} iota_c
//   [Lie_a, d] = 0                       d^2 = 0
//   iota_a iota_b + iota_b iota_a = 0    d iota_a + iota_a d = Lie_a
// The grading lives in the ghost slot of the tri-degree.

#pragma once

#include <vector>

#include "gstar/derivation.hpp"
#include "gstar/linalg.hpp"

namespace gstar {

struct LieAlgebraSpec {
    int dim = 0;
    // f[c][a][b] = structure constant f^c_{ab}.
    std::vector<std::vector<std::vector<Rat>>> f;

    Rat fc(int c, int a, int b) const { return f[c][a][b]; }

    static LieAlgebraSpec su2() {
        LieAlgebraSpec g;
        g.dim = 3;
        g.f.assign(3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, 0)));
        // f^a_{bc} = epsilon_{abc}
        int eps[3][3] = {{0, 3, -2}, {-3, 0, 1}, {2, -1, 0}};  // eps[b][c] = signed (a+1)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                int v = eps[b][c];
                if (v) g.f[std::abs(v) - 1][b][c] = v > 0 ? 1 : -1;
            }
        return g;
    }

    static LieAlgebraSpec abelian(int k) {
        LieAlgebraSpec g;
        g.dim = k;
        g.f.assign(k, std::vector<std::vector<Rat>>(k, std::vector<Rat>(k, 0)));
        return g;
    }

    // Antisymmetry and the Jacobi identity; throws on failure.
    void validate() const {
        for (int c = 0; c < dim; ++c)
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b)
                    if (f[c][a][b] != -f[c][b][a])
                        throw std::runtime_error("structure constants not antisymmetric");
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                for (int c = 0; c < dim; ++c)
                    for (int e = 0; e < dim; ++e) {
                        Rat s = 0;
                        for (int d = 0; d < dim; ++d)
                            s += f[e][a][d] * f[d][b][c] + f[e][b][d] * f[d][c][a] +
                                 f[e][c][d] * f[d][a][b];
                        if (s != 0) throw std::runtime_error("Jacobi identity fails");
                    }
    }
};

struct GStarAlgebra {
    AlgebraPtr alg;
    LieAlgebraSpec lie;
    Derivation d;
    std::vector<Derivation> iota;  // iota_a
    std::vector<Derivation> lieD;  // Lie_a
    std::vector<int> gens;         // generator ids of the underlying algebra

    // All seven Cartan-calculus relations, tested on every generator.
    RelationReport verify_cartan() const {
        RelationReport rep;
        auto merge = [&rep](const std::string& tag, const RelationReport& r) {
            for (auto& row : r.failures)
                rep.failures.push_back({tag + " @ " + row.generator, row.residual});
        };
        const Algebra* A = alg.get();
        int n = lie.dim;
        LinOp dop = as_op(d);
        LinOp zero{{}, [A](const Poly&) { return Poly(A); }};
        // d^2 = 0
        merge("d^2", check_relation(A, compose(dop, dop), zero, gens));
        for (int a = 0; a < n; ++a) {
            // [Lie_a, d] = 0
            merge("[Lie,d]", check_relation(A, op_bracket(as_op(lieD[a]), dop), zero, gens));
            // d iota_a + iota_a d = Lie_a
            merge("[d,iota]=Lie",
                  check_relation(A, op_bracket(dop, as_op(iota[a])), as_op(lieD[a]), gens));
            for (int b = 0; b < n; ++b) {
                // iota_a iota_b + iota_b iota_a = 0
                merge("[iota,iota]",
                      check_relation(A, op_bracket(as_op(iota[a]), as_op(iota[b])), zero, gens));
                // [Lie_a, iota_b] = f^c_{ab} iota_c ; [Lie_a, Lie_b] = f^c_{ab} Lie_c
                LinOp fiota = zero, flie = zero;
                for (int c = 0; c < n; ++c) {
                    Rat k = lie.fc(c, a, b);
                    if (k == 0) continue;
                    fiota = op_add(fiota, op_scale(k, as_op(iota[c])));
                    flie = op_add(flie, op_scale(k, as_op(lieD[c])));
                }
                fiota.deg = iota[0].deg();
                flie.deg = lieD[0].deg();
                merge("[Lie,iota]=f*iota",
                      check_relation(A, op_bracket(as_op(lieD[a]), as_op(iota[b])), fiota, gens));
                merge("[Lie,Lie]=f*Lie",
                      check_relation(A, op_bracket(as_op(lieD[a]), as_op(lieD[b])), flie, gens));
            }
        }
        return rep;
    }
};

// Rename-homomorphism: map generators of p through genmap into `target`.
inline Poly map_poly(const Poly& p, const Algebra* target, const std::vector<int>& genmap) {
    Poly out(target);
    for (auto& [m, c] : p.terms()) {
        Poly term(target, c);
        for (auto& [g, e] : m.factors)
            for (int k = 0; k < e; ++k) term = term * Poly::generator(target, genmap[g]);
        out += term;
    }
    return out;
}

// The Weil algebra W(g): connection generators th^a of degree 1 and curvature
// generators ph^a of degree 2 with
//   d th^a = ph^a - 1/2 f^a_{bc} th^b th^c      d ph^a = f^a_{bc} ph^b th^c
//   iota_a th^b = delta_a^b                     iota_a ph^b = 0
//   Lie_a th^b = -f^b_{ac} th^c                 Lie_a ph^b = -f^b_{ac} ph^c
inline GStarAlgebra weil_algebra(const LieAlgebraSpec& g, const std::string& prefix = "") {
    g.validate();
    GStarAlgebra W;
    W.lie = g;
    W.alg = std::make_shared<Algebra>();
    int n = g.dim;
    std::vector<int> th(n), ph(n);
    for (int a = 0; a < n; ++a)
        th[a] = W.alg->declare({prefix + "th" + std::to_string(a + 1), {0, 0, 1}, GenKind::Field});
    for (int a = 0; a < n; ++a)
        ph[a] = W.alg->declare({prefix + "ph" + std::to_string(a + 1), {0, 0, 2}, GenKind::Field});
    W.gens.insert(W.gens.end(), th.begin(), th.end());
    W.gens.insert(W.gens.end(), ph.begin(), ph.end());
    const Algebra* A = W.alg.get();

    auto gen = [A](int id) { return Poly::generator(A, id); };
    std::map<std::string, Poly> dtab;
    for (int a = 0; a < n; ++a) {
        Poly dth = gen(ph[a]);
        Poly dph(A);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Rat k = g.fc(a, b, c);
                if (k == 0) continue;
                dth -= Rat(1, 2) * k * (gen(th[b]) * gen(th[c]));
                dph += k * (gen(ph[b]) * gen(th[c]));
            }
        dtab[A->gen(th[a]).name] = dth;
        dtab[A->gen(ph[a]).name] = dph;
    }
    W.d = Derivation::from_table(W.alg, "d", {0, 0, 1}, dtab);

    for (int a = 0; a < n; ++a) {
        std::map<std::string, Poly> itab, ltab;
        for (int b = 0; b < n; ++b) {
            itab[A->gen(th[b]).name] = Poly(A, a == b ? 1 : 0);
            Poly lth(A), lph(A);
            for (int c = 0; c < n; ++c) {
                Rat k = g.fc(b, a, c);
                if (k == 0) continue;
                lth -= k * gen(th[c]);
                lph -= k * gen(ph[c]);
            }
            ltab[A->gen(th[b]).name] = lth;
            ltab[A->gen(ph[b]).name] = lph;
        }
        W.iota.push_back(
            Derivation::from_table(W.alg, "iota" + std::to_string(a + 1), {0, 0, -1}, itab));
        W.lieD.push_back(
            Derivation::from_table(W.alg, "Lie" + std::to_string(a + 1), {0, 0, 0}, ltab));
    }
    auto rep = W.verify_cartan();
    if (!rep.pass()) throw std::runtime_error("Weil algebra failed Cartan relations");
    return W;
}

// Tensor product of two G*-algebras over the same Lie algebra.  Generators of
// the factors are renamed with "L."/"R." prefixes; d_W = d (x) 1 + 1 (x) d and
// iota/Lie act as graded tensor extensions (automatic via the Leibniz rule).
inline GStarAlgebra tensor_gstar(const GStarAlgebra& A, const GStarAlgebra& B) {
    if (A.lie.dim != B.lie.dim || A.lie.f != B.lie.f)
        throw std::runtime_error("tensor_gstar: mismatched Lie algebras");
    GStarAlgebra T;
    T.lie = A.lie;
    T.alg = std::make_shared<Algebra>();
    std::vector<int> mapA(A.alg->size()), mapB(B.alg->size());
    for (int i = 0; i < A.alg->size(); ++i) {
        Generator g = A.alg->gen(i);
        g.name = "L." + g.name;
        mapA[i] = T.alg->declare(g);
    }
    for (int i = 0; i < B.alg->size(); ++i) {
        Generator g = B.alg->gen(i);
        g.name = "R." + g.name;
        mapB[i] = T.alg->declare(g);
    }
    for (int i = 0; i < T.alg->size(); ++i) T.gens.push_back(i);
    const Algebra* TA = T.alg.get();

    auto lift = [TA](const GStarAlgebra& S, const std::vector<int>& genmap, const Derivation& D,
                     std::string name) {
        std::map<std::string, Poly> tab;
        for (int i = 0; i < S.alg->size(); ++i)
            tab[TA->gen(genmap[i]).name] = map_poly(D.on(i), TA, genmap);
        // from_table needs the AlgebraPtr; reconstruct rule directly instead.
        std::unordered_map<int, Poly> t;
        for (auto& [n2, p] : tab) t.emplace(TA->require(n2), p);
        return Derivation(TA, std::move(name), D.deg(), [t = std::move(t), TA](int g) {
            auto it = t.find(g);
            return it == t.end() ? Poly(TA) : it->second;
        });
    };
    T.d = lift(A, mapA, A.d, "dL") + lift(B, mapB, B.d, "dR");
    for (int a = 0; a < T.lie.dim; ++a) {
        T.iota.push_back(lift(A, mapA, A.iota[a], "iotaL") + lift(B, mapB, B.iota[a], "iotaR"));
        T.lieD.push_back(lift(A, mapA, A.lieD[a], "LieL") + lift(B, mapB, B.lieD[a], "LieR"));
    }
    auto rep = T.verify_cartan();
    if (!rep.pass()) throw std::runtime_error("tensor_gstar failed Cartan relations");
    return T;
}

// Pieces of a tensor model W(g) (x) A needed for the Kalkman conjugation: the
// left-factor Weil generators and the right-factor operator families.
struct TensorModel {
    GStarAlgebra T;          // combined algebra (first 2*dim generators are L.th, L.ph)
    std::vector<int> th, ph;  // left Weil generator ids
    std::vector<Derivation> iotaR, lieR;  // right-factor-only families
};

inline TensorModel make_tensor_model(const GStarAlgebra& W, const GStarAlgebra& B) {
    TensorModel M;
    M.T = tensor_gstar(W, B);
    const Algebra* A = M.T.alg.get();
    int n = W.lie.dim;
    for (int a = 0; a < n; ++a) {
        M.th.push_back(A->require("L.th" + std::to_string(a + 1)));
        M.ph.push_back(A->require("L.ph" + std::to_string(a + 1)));
    }
    // Right-only families: actions of B's operators on R.* generators, zero on L.*.
    int offset = W.alg->size();
    std::vector<int> mapB(B.alg->size());
    for (int i = 0; i < B.alg->size(); ++i) mapB[i] = offset + i;
    for (int a = 0; a < n; ++a) {
        Derivation ib = B.iota[a], lb = B.lieD[a];
        M.iotaR.push_back(Derivation(A, "iotaR" + std::to_string(a + 1), ib.deg(),
                                     [A, ib, mapB, offset](int g) {
                                         if (g < offset) return Poly(A);
                                         return map_poly(ib.on(g - offset), A, mapB);
                                     }));
        M.lieR.push_back(Derivation(A, "LieR" + std::to_string(a + 1), lb.deg(),
                                    [A, lb, mapB, offset](int g) {
                                        if (g < offset) return Poly(A);
                                        return map_poly(lb.on(g - offset), A, mapB);
                                    }));
    }
    return M;
}

// Kalkman conjugation: with j = exp(-th^a (x) iota_a),
//   d_K := j d_W j^{-1} = d_W + th^a (x) Lie_a - ph^a (x) iota_a,
// and j (iota_a (x) 1 + 1 (x) iota_a) j^{-1} = iota_a (x) 1.
struct KalkmanResult {
    Derivation dK;              // conjugated differential (tabulated on generators)
    RelationReport dK_formula;  // residuals of d_K against the three-term formula
    RelationReport iota_conj;   // residuals of the contraction conjugation
};

inline KalkmanResult kalkman_conjugate(const TensorModel& M) {
    const Algebra* A = M.T.alg.get();
    int n = M.T.lie.dim;
    // N = sum_a th^a * iota_a^R : an even derivation, nilpotent on polynomials.
    Derivation N = Derivation::zero(A, {0, 0, 0});
    for (int a = 0; a < n; ++a) {
        Derivation term = Derivation::lmul_compose(Poly::generator(A, M.th[a]), {0, 0, 1},
                                                   M.iotaR[a], "th*iotaR");
        N = a == 0 ? term : N + term;
    }
    // Our N composes the right-factor contraction first and then multiplies by
    // th^a on the left, so the contraction crosses the left tensor factor with
    // its Koszul sign; with this ordering the conjugating automorphism is
    // exp(+N) (the conventional minus sign is absorbed by the crossing signs).
    auto j = [N](const Poly& p) { return exp_apply(N, p); };
    auto jinv = [N](const Poly& p) { return exp_apply(Rat(-1) * N, p); };

    KalkmanResult R;
    R.dK = Derivation::conjugate(j, jinv, M.T.d, "dK");
    // Three-term formula.
    Derivation formula = M.T.d;
    for (int a = 0; a < n; ++a) {
        formula = formula + Derivation::lmul_compose(Poly::generator(A, M.th[a]), {0, 0, 1},
                                                     M.lieR[a], "th*LieR");
        formula = formula - Derivation::lmul_compose(Poly::generator(A, M.ph[a]), {0, 0, 2},
                                                     M.iotaR[a], "ph*iotaR");
    }
    R.dK_formula = check_relation(A, as_op(R.dK), as_op(formula), M.T.gens);
    // iota_a (x) 1 = j (iota_a (x) 1 + 1 (x) iota_a) j^{-1} on generators.
    for (int a = 0; a < n; ++a) {
        Derivation conj = Derivation::conjugate(j, jinv, M.T.iota[a], "j iota j^-1");
        Derivation iotaL = M.T.iota[a] - M.iotaR[a];
        auto rep = check_relation(A, as_op(conj), as_op(iotaL), M.T.gens);
        for (auto& row : rep.failures)
            R.iota_conj.failures.push_back({"a=" + std::to_string(a + 1) + " @ " + row.generator,
                                            row.residual});
    }
    return R;
}

// Monomials of the given total ghost degree (all generators assumed of
// positive ghost degree, so the enumeration is finite).
inline void degree_basis_rec(const Algebra& A, int from, int remaining, Monomial& cur,
                             std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int g = from; g < A.size(); ++g) {
        const Generator& gen = A.gen(g);
        int d = gen.deg.total();
        if (d <= 0 || d > remaining) continue;
        int maxe = gen.odd() ? 1 : remaining / d;
        for (int e = 1; e <= maxe; ++e) {
            cur.factors.push_back({g, e});
            degree_basis_rec(A, g + 1, remaining - e * d, cur, out);
            cur.factors.pop_back();
        }
    }
}

inline std::vector<Monomial> degree_basis(const Algebra& A, int total_degree) {
    std::vector<Monomial> out;
    Monomial cur;
    degree_basis_rec(A, 0, total_degree, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Matrix of a linear operator between two monomial bases.
inline RatMatrix operator_matrix(const Algebra& A, const LinOp& op,
                                 const std::vector<Monomial>& domain,
                                 const std::vector<Monomial>& codomain) {
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < codomain.size(); ++i) index[codomain[i]] = i;
    RatMatrix M(codomain.size(), domain.size());
    for (size_t j = 0; j < domain.size(); ++j) {
        Poly x(&A);
        x.add_term(domain[j], 1);
        Poly y = op(x);
        for (auto& [m, c] : y.terms()) {
            auto it = index.find(m);
            if (it == index.end()) throw std::runtime_error("operator leaves codomain basis");
            M.at(it->second, j) = c;
        }
    }
    return M;
}

// dim H^k for k in [lo, hi] of the complex graded by total degree with the
// given differential (degree +1).
inline std::vector<size_t> cohomology_dims(const Algebra& A, const Derivation& d, int lo, int hi) {
    std::vector<size_t> dims;
    std::map<int, std::vector<Monomial>> bases;
    for (int k = lo; k <= hi + 1; ++k) bases[k] = degree_basis(A, k);
    std::map<int, size_t> ranks;  // rank of d_k : deg k -> deg k+1
    for (int k = lo - 1; k <= hi; ++k) {
        std::vector<Monomial> dom = bases.count(k) ? bases[k] : degree_basis(A, k);
        std::vector<Monomial> cod = bases.count(k + 1) ? bases[k + 1] : degree_basis(A, k + 1);
        ranks[k] = k < 0 ? 0 : operator_matrix(A, as_op(d), dom, cod).rank();
    }
    for (int k = lo; k <= hi; ++k) {
        size_t dim_k = (bases.count(k) ? bases[k] : degree_basis(A, k)).size();
        dims.push_back(dim_k - ranks[k] - ranks[k - 1]);
    }
    return dims;
}

// Basis of the basic subspace (kernel of all iota_a and Lie_a) in the given
// total degree.
inline std::vector<std::vector<Rat>> basic_subspace(const GStarAlgebra& G, int degree,
                                                    std::vector<Monomial>* basis_out = nullptr) {
    const Algebra& A = *G.alg;
    std::vector<Monomial> basis = degree_basis(A, degree);
    if (basis_out) *basis_out = basis;
    if (basis.empty()) return {};
    // Stack the matrices of every iota_a and Lie_a.
    std::vector<RatMatrix> mats;
    size_t total_rows = 0;
    for (int a = 0; a < G.lie.dim; ++a) {
        std::vector<Monomial> cod_i = degree_basis(A, degree - 1);
        mats.push_back(operator_matrix(A, as_op(G.iota[a]), basis, cod_i));
        std::vector<Monomial> cod_l = degree_basis(A, degree);
        mats.push_back(operator_matrix(A, as_op(G.lieD[a]), basis, cod_l));
    }
    for (auto& m : mats) total_rows += m.rows();
    RatMatrix S(total_rows, basis.size());
    size_t r0 = 0;
    for (auto& m : mats) {
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) S.at(r0 + i, j) = m.at(i, j);
        r0 += m.rows();
    }
    return S.kernel();
}

// Gauge fixing of a finite BRST system: returns S + Q(Psi) and certifies that
// the result is Q-closed and basic whenever S and Psi are.
struct BrstGaugeFixResult {
    Poly fixed;            // S + Q(Psi)
    RelationReport audit;  // violations: non-closedness or non-basicness
};

inline BrstGaugeFixResult finite_brst_system(const GStarAlgebra& G, const Derivation& Q,
                                             const Poly& S, const Poly& Psi) {
    BrstGaugeFixResult R{S + Q(Psi), {}};
    auto check = [&](const std::string& tag, const Poly& p) {
        if (!p.zero()) R.audit.failures.push_back({tag, p});
    };
    check("Q(S)", Q(S));
    for (int a = 0; a < G.lie.dim; ++a) {
        check("iota_" + std::to_string(a + 1) + "(S)", G.iota[a](S));
        check("Lie_" + std::to_string(a + 1) + "(S)", G.lieD[a](S));
        check("iota_" + std::to_string(a + 1) + "(Psi)", G.iota[a](Psi));
        check("Lie_" + std::to_string(a + 1) + "(Psi)", G.lieD[a](Psi));
        check("iota_" + std::to_string(a + 1) + "(S+Q Psi)", G.iota[a](R.fixed));
        check("Lie_" + std::to_string(a + 1) + "(S+Q Psi)", G.lieD[a](R.fixed));
    }
    check("Q(S+Q Psi)", Q(R.fixed));
    return R;
}

}  // namespace gstar
