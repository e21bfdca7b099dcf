// Exact polynomials over a tri-graded commutative generator set.
//
// A monomial is a list of (generator id, exponent) pairs sorted by id; odd
// generators never appear with exponent > 1 (their squares vanish).  Any
// product is normalized to this canonical order, the sign of the implied
// permutation being computed from the pairwise Koszul pairings and absorbed
// into the rational coefficient.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "gstar/algebra.hpp"

namespace gstar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rat& r) { return r.str(); }

struct Monomial {
    // Sorted by generator id; exponents >= 1.
    std::vector<std::pair<int, int>> factors;

    bool empty() const { return factors.empty(); }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors < b.factors; }

    bool contains(int gen) const {
        for (auto& [g, e] : factors)
            if (g == gen) return true;
        return false;
    }
    int exponent(int gen) const {
        for (auto& [g, e] : factors)
            if (g == gen) return e;
        return 0;
    }

    Tridegree degree(const Algebra& A) const {
        Tridegree d;
        for (auto& [g, e] : factors) {
            const Tridegree& dg = A.gen(g).deg;
            d.h += e * dg.h;
            d.v += e * dg.v;
            d.g += e * dg.g;
        }
        return d;
    }
};

// Merge two canonical monomials, returning the merged monomial and the Koszul
// sign exponent, or nullopt when the product vanishes (odd square).
inline std::optional<std::pair<Monomial, int>> merge_monomials(const Algebra& A, const Monomial& a,
                                                               const Monomial& b) {
    const auto& fa = a.factors;
    const auto& fb = b.factors;
    // Suffix degree sums of `a`: (sum of e*h, sum of e*(v+g)) over factors >= i.
    size_t na = fa.size();
    std::vector<long long> sufH(na + 1, 0), sufW(na + 1, 0);
    for (size_t i = na; i-- > 0;) {
        const Tridegree& d = A.gen(fa[i].first).deg;
        sufH[i] = sufH[i + 1] + (long long)fa[i].second * d.h;
        sufW[i] = sufW[i + 1] + (long long)fa[i].second * (d.v + d.g);
    }
    Monomial out;
    out.factors.reserve(na + fb.size());
    long long signexp = 0;
    size_t i = 0, j = 0;
    while (i < na || j < fb.size()) {
        if (j == fb.size() || (i < na && fa[i].first < fb[j].first)) {
            out.factors.push_back(fa[i]);
            ++i;
        } else {
            const auto& [gb, eb] = fb[j];
            const Tridegree& db = A.gen(gb).deg;
            if (i < na && fa[i].first == gb) {
                const Generator& gen = A.gen(gb);
                if (gen.odd()) return std::nullopt;  // odd square
                // b's copies cross the strict suffix after position i.
                signexp += (long long)eb * (db.h * sufH[i + 1] + (long long)(db.v + db.g) * sufW[i + 1]);
                out.factors.push_back({gb, fa[i].second + eb});
                ++i;
            } else {
                // b's copies cross the whole remaining suffix of a.
                signexp += (long long)eb * (db.h * sufH[i] + (long long)(db.v + db.g) * sufW[i]);
                out.factors.push_back({gb, eb});
            }
            ++j;
        }
    }
    return std::make_pair(std::move(out), (int)((signexp % 2 + 2) % 2));
}

class Poly {
  public:
    Poly() = default;
    explicit Poly(const Algebra* A) : alg_(A) {}
    Poly(const Algebra* A, const Rat& c) : alg_(A) {
        if (c != 0) terms_[Monomial{}] = c;
    }

    static Poly generator(const Algebra* A, int gen, const Rat& c = 1) {
        Poly p(A);
        if (c != 0) {
            Monomial m;
            m.factors.push_back({gen, 1});
            p.terms_[m] = c;
        }
        return p;
    }

    const Algebra* algebra() const { return alg_; }
    bool zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Homogeneity: returns the common tri-degree, or nullopt if mixed/zero.
    std::optional<Tridegree> degree() const {
        std::optional<Tridegree> d;
        for (auto& [m, c] : terms_) {
            Tridegree dm = m.degree(*alg_);
            if (!d)
                d = dm;
            else if (!(*d == dm))
                return std::nullopt;
        }
        return d;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        if (!r.alg_) r.alg_ = b.alg_;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        if (!r.alg_) r.alg_ = b.alg_;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    friend Poly operator-(const Poly& a) { return a * Rat(-1); }

    friend Poly operator*(const Poly& a, const Rat& c) {
        Poly r(a.alg_);
        if (c != 0)
            for (auto& [m, k] : a.terms_) r.terms_[m] = k * c;
        return r;
    }
    friend Poly operator*(const Rat& c, const Poly& a) { return a * c; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.alg_ && b.alg_ && a.alg_ != b.alg_)
            throw std::runtime_error("product of polynomials from different algebras");
        const Algebra* A = a.alg_ ? a.alg_ : b.alg_;
        Poly r(A);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                auto merged = merge_monomials(*A, ma, mb);
                if (!merged) continue;
                Rat prod = ca * cb;
                r.add_term(merged->first, merged->second ? Rat(-prod) : prod);
            }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Canonical text form: terms in monomial order, explicit rational coefficients.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Rat ac = c < 0 ? Rat(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            bool coeff_shown = !(ac == 1) || m.empty();
            if (coeff_shown) os << rat_str(ac);
            bool firstfac = true;
            for (auto& [g, e] : m.factors) {
                if (!firstfac || coeff_shown) os << "*";
                firstfac = false;
                os << alg_->gen(g).name;
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    const Algebra* alg_ = nullptr;
    std::map<Monomial, Rat> terms_;
};

}  // namespace gstar
