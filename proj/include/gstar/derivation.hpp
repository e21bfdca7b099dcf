// Graded derivations and operator calculus.
//
// A derivation is determined by its tri-degree and its action on generators
// (a rule, usually a finite table, possibly a prolongation rule for jet
// families); it extends to polynomials by the graded Leibniz rule
//   D(ab) = D(a) b + (-1)^{<a,D>} a D(b)
// with the same Koszul pairing that governs commutativity.  Graded brackets
// of derivations are again derivations and are tabulated lazily; generic
// compositions are handled by LinOp, which is applied but never tabulated.

#pragma once

#include <functional>
#include <memory>
#include <unordered_map>

#include "gstar/poly.hpp"

namespace gstar {

class Derivation {
  public:
    using Rule = std::function<Poly(int)>;  // generator id -> action polynomial

    Derivation() = default;
    Derivation(const Algebra* A, std::string name, Tridegree deg, Rule rule)
        : impl_(std::make_shared<Impl>(Impl{A, std::move(name), deg, std::move(rule), {}})) {}

    // Derivation with a finite action table (names -> polynomials); all other
    // generators map to zero.
    static Derivation from_table(const AlgebraPtr& A, std::string name, Tridegree deg,
                                 const std::map<std::string, Poly>& table) {
        std::unordered_map<int, Poly> t;
        for (auto& [gname, p] : table) t.emplace(A->require(gname), p);
        const Algebra* Araw = A.get();
        return Derivation(Araw, std::move(name), deg, [t = std::move(t), Araw](int g) {
            auto it = t.find(g);
            return it == t.end() ? Poly(Araw) : it->second;
        });
    }

    static Derivation zero(const Algebra* A, Tridegree deg = {}) {
        return Derivation(A, "0", deg, [A](int) { return Poly(A); });
    }

    bool defined() const { return impl_ != nullptr; }
    const Tridegree& deg() const { return impl_->deg; }
    const std::string& name() const { return impl_->name; }
    const Algebra* algebra() const { return impl_->alg; }

    // Cached action on a generator.
    const Poly& on(int gen) const {
        auto it = impl_->cache.find(gen);
        if (it != impl_->cache.end()) return it->second;
        Poly p = impl_->rule(gen);
        return impl_->cache.emplace(gen, std::move(p)).first->second;
    }

    // Leibniz extension to polynomials.
    Poly operator()(const Poly& p) const {
        const Algebra& A = *impl_->alg;
        Poly result(impl_->alg);
        for (auto& [m, c] : p.terms()) {
            // Walk the factors left to right, accumulating the Koszul pairing
            // of the prefix with the derivation degree.
            int prefix_pair = 0;
            for (size_t fi = 0; fi < m.factors.size(); ++fi) {
                auto [g, e] = m.factors[fi];
                const Tridegree& dg = A.gen(g).deg;
                int step = koszul_pair(dg, impl_->deg);
                const Poly& act = on(g);
                if (!act.zero()) {
                    // Differentiate each of the e copies in turn.  The prefix
                    // for copy k also contains k copies of g itself.
                    for (int k = 0; k < e; ++k) {
                        Monomial pre, post;
                        pre.factors.assign(m.factors.begin(), m.factors.begin() + fi);
                        if (k > 0) pre.factors.push_back({g, k});
                        if (e - 1 - k > 0) post.factors.push_back({g, e - 1 - k});
                        post.factors.insert(post.factors.end(), m.factors.begin() + fi + 1,
                                            m.factors.end());
                        int sgn = (prefix_pair + k * step) % 2;
                        Poly pre_p(impl_->alg);
                        pre_p.add_term(pre, sgn ? -c : c);
                        Poly post_p(impl_->alg);
                        post_p.add_term(post, 1);
                        result += pre_p * act * post_p;
                    }
                }
                prefix_pair = (prefix_pair + e * step) % 2;
            }
        }
        return result;
    }

    // Graded commutator [D1, D2] = D1 D2 - (-1)^{<D1,D2>} D2 D1, tabulated lazily.
    friend Derivation bracket(const Derivation& a, const Derivation& b, std::string name = "") {
        const Algebra* A = a.algebra();
        int sgn = koszul_pair(a.deg(), b.deg());
        if (name.empty()) name = "[" + a.name() + "," + b.name() + "]";
        Derivation ac = a, bc = b;
        return Derivation(A, std::move(name), a.deg() + b.deg(), [ac, bc, sgn](int g) {
            Poly r = ac(bc.on(g)) - (sgn ? Rat(-1) : Rat(1)) * bc(ac.on(g));
            return r;
        });
    }

    friend Derivation operator+(const Derivation& a, const Derivation& b) {
        if (!(a.deg() == b.deg())) throw std::runtime_error("sum of derivations of unequal degree");
        Derivation ac = a, bc = b;
        return Derivation(a.algebra(), a.name() + "+" + b.name(), a.deg(),
                          [ac, bc](int g) { return ac.on(g) + bc.on(g); });
    }
    friend Derivation operator-(const Derivation& a, const Derivation& b) {
        if (!(a.deg() == b.deg()))
            throw std::runtime_error("difference of derivations of unequal degree");
        Derivation ac = a, bc = b;
        return Derivation(a.algebra(), a.name() + "-" + b.name(), a.deg(),
                          [ac, bc](int g) { return ac.on(g) - bc.on(g); });
    }
    friend Derivation operator*(const Rat& c, const Derivation& a) {
        Derivation ac = a;
        return Derivation(a.algebra(), "scaled:" + a.name(), a.deg(),
                          [ac, c](int g) { return c * ac.on(g); });
    }

    // Left multiplication by a homogeneous element composed with a derivation
    // (c * D) is again a derivation; used for dx^mu wedge total-derivative
    // style operators.
    static Derivation lmul_compose(const Poly& c, Tridegree cdeg, const Derivation& d,
                                   std::string name = "") {
        Derivation dc = d;
        Poly cc = c;
        if (name.empty()) name = "c*" + d.name();
        return Derivation(d.algebra(), std::move(name), cdeg + d.deg(),
                          [cc, dc](int g) { return cc * dc.on(g); });
    }

    // Conjugation phi o D o phi^{-1} by an algebra morphism given as a pair of
    // polynomial maps; again a derivation.
    static Derivation conjugate(std::function<Poly(const Poly&)> phi,
                                std::function<Poly(const Poly&)> phi_inv, const Derivation& d,
                                std::string name) {
        Derivation dc = d;
        const Algebra* A = d.algebra();
        return Derivation(A, std::move(name), d.deg(), [phi, phi_inv, dc, A](int g) {
            return phi(dc(phi_inv(Poly::generator(A, g))));
        });
    }

  private:
    struct Impl {
        const Algebra* alg;
        std::string name;
        Tridegree deg;
        Rule rule;
        std::unordered_map<int, Poly> cache;
    };
    std::shared_ptr<Impl> impl_;
};

// exp(D) p = sum_k D^k(p)/k!, requiring D to annihilate p within `bound` steps.
inline Poly exp_apply(const Derivation& D, const Poly& p, int bound = 64) {
    Poly result = p;
    Poly power = p;
    Rat fact = 1;
    for (int k = 1; k <= bound; ++k) {
        power = D(power);
        if (power.zero()) return result;
        fact *= k;
        result += power * (Rat(1) / fact);
    }
    throw std::runtime_error("exp_apply: derivation not nilpotent on argument within bound");
}

// A graded linear operator: composition/sum/bracket of derivations and left
// multiplications, applied but never tabulated.
struct LinOp {
    Tridegree deg;
    std::function<Poly(const Poly&)> f;

    Poly operator()(const Poly& p) const { return f(p); }
};

inline LinOp as_op(const Derivation& d) {
    Derivation dc = d;
    return {d.deg(), [dc](const Poly& p) { return dc(p); }};
}
inline LinOp compose(const LinOp& a, const LinOp& b) {
    return {a.deg + b.deg, [a, b](const Poly& p) { return a(b(p)); }};
}
inline LinOp op_add(const LinOp& a, const LinOp& b) {
    return {a.deg, [a, b](const Poly& p) { return a(p) + b(p); }};
}
inline LinOp op_sub(const LinOp& a, const LinOp& b) {
    return {a.deg, [a, b](const Poly& p) { return a(p) - b(p); }};
}
inline LinOp op_scale(const Rat& c, const LinOp& a) {
    return {a.deg, [a, c](const Poly& p) { return c * a(p); }};
}
inline LinOp op_lmul(const Poly& c, Tridegree cdeg) {
    return {cdeg, [c](const Poly& p) { return c * p; }};
}
// Graded commutator of operators.
inline LinOp op_bracket(const LinOp& a, const LinOp& b) {
    int sgn = koszul_pair(a.deg, b.deg);
    return {a.deg + b.deg,
            [a, b, sgn](const Poly& p) { return a(b(p)) - (sgn ? Rat(-1) : Rat(1)) * b(a(p)); }};
}

// Equality of two operators tested on a generator list; returns per-generator
// residuals (empty = pass).
struct RelationReport {
    struct Row {
        std::string generator;
        Poly residual;
    };
    std::vector<Row> failures;
    bool pass() const { return failures.empty(); }
};

inline RelationReport check_relation(const Algebra* A, const LinOp& lhs, const LinOp& rhs,
                                     const std::vector<int>& gens) {
    RelationReport rep;
    for (int g : gens) {
        Poly x = Poly::generator(A, g);
        Poly r = lhs(x) - rhs(x);
        if (!r.zero()) rep.failures.push_back({A->gen(g).name, r});
    }
    return rep;
}

}  // namespace gstar
