// Indexed coefficient symbols with abstract index labels: canonicalization
// with monoterm slot symmetries and dummy relabeling, template-driven
// derivations, head-level substitution endomorphisms, and a directed rewrite
// engine.
//
// A term is a product of indexed generators (head + label list) and plain
// generators.  A label appearing twice in a term is a contracted dummy, a
// label appearing once is free; three occurrences are malformed.
// Canonicalization slot-sorts every factor under its declared monoterm
// symmetries (symmetric / antisymmetric groups, Riemann pair exchange) and
// minimizes over all bijections of the dummies onto a canonical name
// sequence, tracking Koszul signs; a term whose canonical form is reachable
// with both signs is zero (symmetric-against-antisymmetric contraction).

#pragma once

#include <algorithm>
#include <optional>

#include "gstar/derivation.hpp"

namespace gstar {

class IndexedContext {
  public:
    struct SlotGroup {
        std::vector<int> slots;  // positions within the label list
        bool antisym = false;
    };
    struct HeadSpec {
        std::string name;
        int nslots = 0;
        Tridegree deg;
        std::vector<SlotGroup> groups;
        // Exchange symmetry of the two antisymmetric pairs (0,1) <-> (2,3).
        bool pair_exchange = false;
        GenKind kind = GenKind::IndexedSymbol;
    };

    IndexedContext() : A_(std::make_shared<Algebra>()) {}
    IndexedContext(const IndexedContext&) = delete;
    IndexedContext& operator=(const IndexedContext&) = delete;

    const AlgebraPtr& algebra_ptr() const { return A_; }
    const Algebra* alg() const { return A_.get(); }

    void declare_head(HeadSpec spec) {
        if (heads_.count(spec.name)) throw std::runtime_error("head already declared: " + spec.name);
        heads_.emplace(spec.name, std::move(spec));
    }
    const HeadSpec& head(const std::string& name) const {
        auto it = heads_.find(name);
        if (it == heads_.end()) throw std::runtime_error("unknown head: " + name);
        return it->second;
    }
    bool has_head(const std::string& name) const { return heads_.count(name) > 0; }

    // Plain (label-free) generator, e.g. the base 1-form of a 1d theory.
    int declare_plain(const std::string& name, Tridegree deg, GenKind kind = GenKind::Field) {
        return A_->declare({name, deg, kind});
    }

    // (head, labels) of an indexed generator, nullptr for plain generators.
    const std::pair<std::string, std::vector<std::string>>* indexed_info(int g) const {
        auto it = geninfo_.find(g);
        return it == geninfo_.end() ? nullptr : &it->second;
    }

    std::string fresh_dummy() { return "i" + std::to_string(++dummy_counter_); }

    // Slot-sorted signed generator: applies the monoterm symmetries of the
    // head and returns the generator polynomial with the permutation sign
    // (zero for a repeated label in an antisymmetric group).
    Poly sym(const std::string& headname, std::vector<std::string> labels) {
        const HeadSpec& h = head(headname);
        if ((int)labels.size() != h.nslots)
            throw std::runtime_error("wrong slot count for head " + headname);
        int sign = 0;
        for (const SlotGroup& grp : h.groups) {
            // Insertion sort on the group's slots, counting swaps.
            for (size_t i = 1; i < grp.slots.size(); ++i)
                for (size_t j = i; j > 0 && labels[grp.slots[j - 1]] > labels[grp.slots[j]]; --j) {
                    std::swap(labels[grp.slots[j - 1]], labels[grp.slots[j]]);
                    if (grp.antisym) sign ^= 1;
                }
            if (grp.antisym)
                for (size_t i = 1; i < grp.slots.size(); ++i)
                    if (labels[grp.slots[i - 1]] == labels[grp.slots[i]]) return Poly(alg());
        }
        if (h.pair_exchange) {
            if (std::make_pair(labels[2], labels[3]) < std::make_pair(labels[0], labels[1])) {
                std::swap(labels[0], labels[2]);
                std::swap(labels[1], labels[3]);
            }
        }
        return Poly::generator(alg(), raw_gen(headname, labels), sign ? -1 : 1);
    }

    // ---- Canonicalization ----------------------------------------------

    Poly canonicalize(const Poly& p) {
        Poly out(alg());
        for (auto& [m, c] : p.terms()) {
            auto cm = canonical_monomial(m);
            if (!cm) continue;
            out.add_term(cm->first, cm->second ? -c : c);
        }
        return out;
    }

    // ---- Derivations and substitutions ---------------------------------

    // Action of a derivation / substitution on one indexed generator, as a
    // function of its labels.  Implementations allocate internal dummies via
    // fresh_dummy(), which never collide with other labels.
    using Template = std::function<Poly(IndexedContext&, const std::vector<std::string>&)>;

    Derivation derivation(std::string name, Tridegree deg, std::map<std::string, Template> tpl,
                          std::map<std::string, Poly> plain = {}) {
        std::map<int, Poly> plain_ids;
        for (auto& [n, q] : plain) plain_ids.emplace(A_->require(n), q);
        return Derivation(alg(), std::move(name), deg,
                          [this, tpl = std::move(tpl), plain_ids = std::move(plain_ids)](int g) {
                              auto pit = plain_ids.find(g);
                              if (pit != plain_ids.end()) return pit->second;
                              auto it = geninfo_.find(g);
                              if (it == geninfo_.end()) return Poly(alg());
                              auto t = tpl.find(it->second.first);
                              if (t == tpl.end()) return Poly(alg());
                              return t->second(*this, it->second.second);
                          });
    }

    // Head-level algebra endomorphism; heads without an image map identically.
    class Substitution {
      public:
        Substitution(IndexedContext* ctx, std::map<std::string, Template> images)
            : ctx_(ctx), images_(std::move(images)) {}

        Poly on_gen(int g) const {
            const auto* info = ctx_->indexed_info(g);
            if (!info) return Poly::generator(ctx_->alg(), g);
            auto it = images_.find(info->first);
            if (it == images_.end()) return Poly::generator(ctx_->alg(), g);
            return it->second(*ctx_, info->second);
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
        IndexedContext* ctx_;
        std::map<std::string, Template> images_;
    };

    Substitution substitution(std::map<std::string, Template> images) {
        return Substitution(this, std::move(images));
    }

    // ---- Rewriting ------------------------------------------------------

    // A rule inspects one canonical monomial and either returns the rewritten
    // polynomial (for the coefficient-1 monomial) or declines.
    struct Rule {
        std::string name;
        std::function<std::optional<Poly>(IndexedContext&, const Monomial&)> apply;
    };

    struct RewriteReport {
        bool converged = true;
        int steps = 0;
        std::vector<std::string> trace;
    };

    Poly rewrite_fixpoint(Poly p, const std::vector<Rule>& rules, int step_limit = 200,
                          RewriteReport* report = nullptr) {
        p = canonicalize(p);
        for (int step = 0; step < step_limit; ++step) {
            bool changed = false;
            Poly next(alg());
            for (auto& [m, c] : p.terms()) {
                std::optional<Poly> repl;
                const Rule* fired = nullptr;
                for (const Rule& r : rules) {
                    repl = r.apply(*this, m);
                    if (repl) {
                        fired = &r;
                        break;
                    }
                }
                if (repl) {
                    changed = true;
                    if (report) report->trace.push_back(fired->name);
                    next += c * *repl;
                } else {
                    next.add_term(m, c);
                }
            }
            if (report) report->steps = step + 1;
            if (!changed) return p;
            p = canonicalize(next);
        }
        if (report)
            report->converged = false;
        else
            throw std::runtime_error("rewrite_fixpoint: step limit exceeded");
        return p;
    }

    // ---- Rule-construction helpers --------------------------------------

    // Flat factor list (with multiplicity) of a monomial, in canonical order.
    std::vector<int> flat_factors(const Monomial& m) const {
        std::vector<int> out;
        for (auto& [g, e] : m.factors)
            for (int k = 0; k < e; ++k) out.push_back(g);
        return out;
    }

    // Rebuilds the monomial as a polynomial with the factors at `positions`
    // removed and `insert` placed at the first removed position; the graded
    // product takes care of all reordering signs.
    Poly rebuild(const std::vector<int>& flat, std::vector<size_t> positions, const Poly& insert) {
        std::sort(positions.begin(), positions.end());
        Poly out(alg(), 1);
        bool inserted = false;
        for (size_t i = 0; i < flat.size(); ++i) {
            if (std::find(positions.begin(), positions.end(), i) != positions.end()) {
                if (!inserted) {
                    out = out * insert;
                    inserted = true;
                }
                continue;
            }
            out = out * Poly::generator(alg(), flat[i]);
        }
        return out;
    }

  private:
    int raw_gen(const std::string& headname, const std::vector<std::string>& labels) {
        std::string name = headname + "[";
        for (size_t i = 0; i < labels.size(); ++i) {
            if (i) name += ",";
            name += labels[i];
        }
        name += "]";
        int id = A_->find(name);
        if (id >= 0) return id;
        const HeadSpec& h = head(headname);
        id = A_->declare({name, h.deg, h.kind});
        geninfo_.emplace(id, std::make_pair(headname, labels));
        return id;
    }

    // Canonical (monomial, sign-exponent) or nullopt when the term vanishes.
    std::optional<std::pair<Monomial, int>> canonical_monomial(const Monomial& m) {
        std::vector<int> flat = flat_factors(m);
        // Count label occurrences.
        std::map<std::string, int> count;
        for (int g : flat) {
            const auto* info = indexed_info(g);
            if (!info) continue;
            for (const std::string& l : info->second) {
                if (++count[l] > 2)
                    throw std::runtime_error("malformed contraction: label " + l +
                                             " appears more than twice");
            }
        }
        std::vector<std::string> dummies;
        for (auto& [l, n] : count)
            if (n == 2) dummies.push_back(l);
        size_t k = dummies.size();
        if (k > 7) throw std::runtime_error("too many dummy indices for canonicalization");
        std::vector<std::string> target;
        for (size_t i = 0; i < k; ++i) target.push_back("c" + std::to_string(i + 1));
        std::vector<size_t> perm(k);
        for (size_t i = 0; i < k; ++i) perm[i] = i;
        std::optional<Monomial> best;
        int best_sign = 0;
        bool both_signs = false;
        do {
            std::map<std::string, std::string> ren;
            for (size_t i = 0; i < k; ++i) ren[dummies[i]] = target[perm[i]];
            Poly prod(alg(), 1);
            for (int g : flat) {
                const auto* info = indexed_info(g);
                if (!info) {
                    prod = prod * Poly::generator(alg(), g);
                    continue;
                }
                std::vector<std::string> labels = info->second;
                for (std::string& l : labels) {
                    auto it = ren.find(l);
                    if (it != ren.end()) l = it->second;
                }
                prod = prod * sym(info->first, std::move(labels));
            }
            if (prod.zero()) return std::nullopt;  // uniform over relabelings
            if (prod.term_count() != 1)
                throw std::runtime_error("canonical_monomial: non-monomial product");
            const auto& [mono, coeff] = *prod.terms().begin();
            int sign = coeff < 0 ? 1 : 0;
            if (!best || mono < *best) {
                best = mono;
                best_sign = sign;
                both_signs = false;
            } else if (mono == *best && sign != best_sign) {
                both_signs = true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (both_signs) return std::nullopt;
        return std::make_pair(*best, best_sign);
    }

    AlgebraPtr A_;
    std::map<std::string, HeadSpec> heads_;
    std::map<int, std::pair<std::string, std::vector<std::string>>> geninfo_;
    int dummy_counter_ = 0;
};

}  // namespace gstar
