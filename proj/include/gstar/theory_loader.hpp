// Loading of theory-definition files against the built-in fixtures.
//
// A parsed TheoryFile names one of the built-in theories.  Loading evaluates
// every declared derivation table, substitution and Lagrangian in the named
// theory's own context, checks homogeneity of every right-hand side against
// the declared degrees, and verifies that each declared table coincides with
// the built-in one, so a file that loads successfully is structurally equal
// to the fixture it names.  Indexed-symbol theories (the curved models)
// declare their symbol heads and rewrite-rule sets as metadata, which is
// validated against the built-in declaration.

#pragma once

#include <optional>

#include "gstar/dsl.hpp"
#include "gstar/fixtures.hpp"

namespace gstar {

// ---- Expression evaluation ----------------------------------------------

// A DSL value: either a scalar local form or an su(2)-valued triple of
// components.  Products of two Lie values contract through the invariant
// pairing Tr(xi_a xi_b) = delta_ab.
struct DslValue {
    bool is_lie = false;
    Poly scalar;
    DW4d::Lie lie;
};

class TheoryEnv {
  public:
    TheoryEnv(JetContext* ctx, DW4d* dw) : ctx_(ctx), dw_(dw) {}

    std::vector<dsl::Diagnostic> warnings;

    Poly eval_scalar(const dsl::Expr& e) {
        DslValue v = eval(e);
        if (v.is_lie)
            fail("E003", e, "expected a scalar expression, found a Lie-algebra-valued one");
        return v.scalar;
    }

    DslValue eval(const dsl::Expr& e) {
        using K = dsl::Expr::Kind;
        switch (e.kind) {
            case K::Num: return scalar(Poly(ctx_->alg(), e.num));
            case K::Sym: return lookup(e);
            case K::Var: {
                if (!ctx_->has_field(e.name))
                    fail("E002", e, "unknown field '" + e.name + "' in variation");
                return scalar(ctx_->vjp(e.name));
            }
            case K::Neg: {
                DslValue v = eval(*e.kids[0]);
                if (v.is_lie) {
                    for (auto& p : v.lie) p = -p;
                } else {
                    v.scalar = -v.scalar;
                }
                return v;
            }
            case K::Add:
            case K::Sub: {
                DslValue a = eval(*e.kids[0]), b = eval(*e.kids[1]);
                Rat s = e.kind == K::Add ? 1 : -1;
                if (a.is_lie != b.is_lie)
                    fail("E003", e, "cannot add a scalar and a Lie-algebra-valued form");
                if (a.is_lie) {
                    for (int i = 0; i < DW4d::LDIM; ++i) a.lie[i] += s * b.lie[i];
                } else {
                    a.scalar += s * b.scalar;
                }
                return a;
            }
            case K::Mul: return mul(eval(*e.kids[0]), eval(*e.kids[1]), e);
            case K::Pow: {
                DslValue b = eval(*e.kids[0]);
                if (e.power < 0) fail("E003", e, "negative power");
                DslValue r = scalar(Poly(ctx_->alg(), Rat(1)));
                bool base_zero = b.is_lie ? lie_zero(b.lie) : b.scalar.zero();
                for (int i = 0; i < e.power; ++i) r = mul(r, b, e);
                if (!base_zero && !r.is_lie && r.scalar.zero() && e.power >= 2)
                    warnings.push_back({"W001", e.line, e.col,
                                        "odd square normalizes to zero"});
                return r;
            }
            case K::Bracket: {
                DslValue a = eval(*e.kids[0]), b = eval(*e.kids[1]);
                if (!a.is_lie || !b.is_lie || !dw_)
                    fail("E003", e, "Lie bracket requires Lie-algebra-valued operands");
                return lie(dw_->lbk(a.lie, b.lie));
            }
            case K::Tr: {
                DslValue a = eval(*e.kids[0]);
                if (a.is_lie)
                    fail("E003", e,
                         "Tr of an unpaired Lie-algebra-valued form; pair it with a second "
                         "factor first");
                return a;
            }
            case K::DH: {
                DslValue a = eval(*e.kids[0]);
                if (a.is_lie) return lie(dw_->dh(a.lie));
                return scalar(ctx_->dh()(a.scalar));
            }
            case K::DA: {
                DslValue a = eval(*e.kids[0]);
                if (!a.is_lie || !dw_)
                    fail("E003", e, "d_A requires a Lie-algebra-valued operand");
                return lie(dw_->dA(a.lie));
            }
        }
        fail("E001", e, "unreachable expression kind");
    }

    void add_family(const std::string& name, DW4d::Lie value) {
        families_[name] = std::move(value);
    }

  private:
    static bool lie_zero(const DW4d::Lie& l) {
        for (auto& p : l)
            if (!p.zero()) return false;
        return true;
    }
    DslValue scalar(Poly p) {
        DslValue v;
        v.scalar = std::move(p);
        return v;
    }
    DslValue lie(DW4d::Lie l) {
        DslValue v;
        v.is_lie = true;
        v.lie = std::move(l);
        v.scalar = Poly(ctx_->alg());
        return v;
    }

    DslValue lookup(const dsl::Expr& e) {
        auto fam = families_.find(e.name);
        if (fam != families_.end()) {
            if (!e.jets.empty())
                fail("E003", e, "jet indices on the Lie-valued family '" + e.name + "'");
            return lie(fam->second);
        }
        if (ctx_->has_field(e.name)) {
            MultiIndex I(e.jets.begin(), e.jets.end());
            return scalar(ctx_->jp(e.name, std::move(I)));
        }
        if (e.jets.empty()) {
            int g = ctx_->alg()->find(e.name);
            if (g >= 0) return scalar(Poly::generator(ctx_->alg(), g));
        }
        fail("E002", e, "unknown symbol '" + e.name + "'");
    }

    DslValue mul(DslValue a, DslValue b, const dsl::Expr& at) {
        if (!a.is_lie && !b.is_lie) return scalar(a.scalar * b.scalar);
        if (a.is_lie && b.is_lie) {
            // Invariant pairing of the two su(2) factors.
            Poly s(ctx_->alg());
            for (int i = 0; i < DW4d::LDIM; ++i) s += a.lie[i] * b.lie[i];
            return scalar(std::move(s));
        }
        DW4d::Lie out;
        for (int i = 0; i < DW4d::LDIM; ++i)
            out[i] = a.is_lie ? a.lie[i] * b.scalar : a.scalar * b.lie[i];
        (void)at;
        return lie(std::move(out));
    }

    [[noreturn]] void fail(const char* code, const dsl::Expr& e, std::string msg) {
        throw dsl::ParseError({code, e.line, e.col, std::move(msg)});
    }

    JetContext* ctx_;
    DW4d* dw_;
    std::map<std::string, DW4d::Lie> families_;
};

// ---- Poly -> DSL text ----------------------------------------------------

inline std::string poly_to_dsl(const Algebra* alg, const Poly& p) {
    if (p.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool star = false;
        if (a != 1 || m.factors.empty()) {
            os << a;
            star = true;
        }
        for (auto& [g, e] : m.factors) {
            if (star) os << "*";
            star = true;
            std::string n = alg->gen(g).name;
            const std::string delta = "\xce\xb4";  // vertical-variation prefix
            if (n.rfind(delta, 0) == 0) n = "$" + n.substr(delta.size());
            os << n;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

// ---- Loader -------------------------------------------------------------

class LoadedTheory {
  public:
    dsl::TheoryFile ast;
    std::vector<dsl::Diagnostic> warnings;
    std::unique_ptr<Fixture> fixture;

    // Exactly one backend is active for component theories; the indexed
    // curved models validate metadata only.
    std::unique_ptr<FlatSusyQM> flat;
    std::unique_ptr<DW4dBV> dwbv;
    std::unique_ptr<DW4d> dw;
    bool indexed = false;

    JetContext* ctx() {
        if (flat) return &flat->ctx;
        if (dwbv) return &dwbv->ctx;
        if (dw) return &dw->ctx;
        return nullptr;
    }
    DW4d* dw_model() { return dwbv ? static_cast<DW4d*>(dwbv.get()) : dw.get(); }

    TheoryEnv env() {
        TheoryEnv e(ctx(), dw_model());
        if (DW4d* m = dw_model()) {
            e.add_family("theta", m->theta());
            e.add_family("A", m->A());
            e.add_family("chi", m->chi());
            e.add_family("phi", m->phi());
            e.add_family("ups", m->ups());
            e.add_family("b", m->b());
            e.add_family("F", m->F());
            if (m->has_antifields()) {
                e.add_family("thetap", m->thp());
                e.add_family("Ap", m->Ap());
                e.add_family("chip", m->chp());
                e.add_family("phip", m->php());
                e.add_family("upsp", m->upp());
                e.add_family("bp", m->bp());
            }
        }
        return e;
    }

    // The verification structure of the loaded theory (component theories).
    QKGStructure structure() {
        if (flat) return canonical_qk(&flat->ctx, FlatSusyQM::shift_pairs());
        if (dwbv) return QKGStructure(&dwbv->ctx, dwbv->Q_BV_displayed(), dwbv->K_bv(),
                                      dwbv->spectators());
        if (ast.name == "dw-4d-canonical") return dw->canonical();
        return dw->displayed_deformed();
    }
};

namespace loader_detail {

inline std::optional<Tridegree> degree_of(const Algebra* alg, const Poly& p) {
    std::optional<Tridegree> deg;
    for (auto& [m, c] : p.terms()) {
        Tridegree d{};
        for (auto& [g, e] : m.factors) {
            const Tridegree& gd = alg->gen(g).deg;
            d.h += gd.h * e;
            d.v += gd.v * e;
            d.g += gd.g * e;
        }
        if (deg && !(deg->h == d.h && deg->v == d.v && deg->g == d.g)) return std::nullopt;
        deg = d;
    }
    return deg ? deg : std::optional<Tridegree>(Tridegree{0, 0, 0});
}

[[noreturn]] inline void fail(const char* code, int line, int col, std::string msg) {
    throw dsl::ParseError({code, line, col, std::move(msg)});
}

}  // namespace loader_detail

inline LoadedTheory load_theory(const std::string& source) {
    using loader_detail::fail;
    LoadedTheory lt;
    lt.ast = dsl::parse(source);
    const dsl::TheoryFile& f = lt.ast;

    bool known = false;
    for (auto& n : fixture_names()) known = known || n == f.name;
    if (!known) fail("E006", 1, 1, "unknown theory name '" + f.name + "'");
    lt.fixture = load_fixture(f.name);

    // Declared suites must exist on the fixture.
    for (auto& s : f.suites) {
        bool ok = false;
        for (auto& have : lt.fixture->suites()) ok = ok || have == s;
        if (!ok) fail("E009", 1, 1, "unknown suite '" + s + "' for theory " + f.name);
    }

    // ---- Indexed (curved) theories: metadata validation only ----
    if (f.name == "susy-qm-curved" || f.name == "susy-qm-morse") {
        lt.indexed = true;
        if (f.base_dim != 1) fail("E003", 1, 1, "base dimension must be 1");
        static const std::vector<std::pair<std::string, int>> expected = {
            {"x", 0},   {"xd", 0},   {"xdd", 0}, {"b", 0},   {"bd", 0},
            {"psi", 1}, {"psid", 1}, {"chi", -1}, {"chid", -1}};
        for (auto& fd : f.fields) {
            bool found = false;
            for (auto& [n, g] : expected)
                if (n == fd.name) {
                    found = true;
                    if (g != fd.ghost)
                        fail("E003", fd.line, fd.col,
                             "ghost degree of head '" + fd.name + "' differs from the theory");
                    if (fd.indices != 1)
                        fail("E003", fd.line, fd.col, "head '" + fd.name + "' carries one index");
                }
            if (!found) fail("E002", fd.line, fd.col, "unknown head '" + fd.name + "'");
        }
        if (f.fields.size() != expected.size())
            fail("E008", 1, 1, "field table differs from the built-in theory");
        static const std::vector<std::string> rule_sets = {"definition", "lowering"};
        for (auto& r : f.rules) {
            bool ok = false;
            for (auto& have : rule_sets) ok = ok || have == r;
            if (!ok) fail("E002", 1, 1, "unknown rewrite rule set '" + r + "'");
        }
        return lt;
    }

    // ---- Component theories ----
    if (f.name == "susy-qm-flat") {
        lt.flat = std::make_unique<FlatSusyQM>();
        if (f.base_dim != 1) fail("E003", 1, 1, "base dimension must be 1");
    } else {
        if (f.base_dim != 4) fail("E003", 1, 1, "base dimension must be 4");
        if (f.algebra != "su2") fail("E002", 1, 1, "theory requires 'algebra su2'");
        if (f.name == "dw-4d-bv")
            lt.dwbv = std::make_unique<DW4dBV>();
        else
            lt.dw = std::make_unique<DW4d>();
    }
    JetContext* ctx = lt.ctx();

    // Field table must match the built-in declaration exactly.
    {
        std::map<std::string, int> have;
        for (auto& fi : ctx->fields()) have[fi.name] = fi.ghost;
        for (auto& fd : f.fields) {
            auto it = have.find(fd.name);
            if (it == have.end())
                fail("E002", fd.line, fd.col, "unknown field '" + fd.name + "'");
            if (it->second != fd.ghost)
                fail("E003", fd.line, fd.col,
                     "ghost degree of '" + fd.name + "' differs from the theory");
        }
        if (f.fields.size() != have.size())
            fail("E008", 1, 1, "field table differs from the built-in theory: " +
                                   std::to_string(f.fields.size()) + " declared, " +
                                   std::to_string(have.size()) + " expected");
    }

    // Built-in derivation tables to compare against.
    std::map<std::string, std::pair<int, std::map<std::string, Poly>>> builtin;
    if (lt.flat) {
        builtin["Q"] = {1, lt.flat->structure().Q().chars};
        builtin["Qbar"] = {-1, lt.flat->Qbar().chars};
    } else if (lt.dwbv) {
        builtin["Q"] = {1, lt.dwbv->Q_BV_displayed().chars};
    } else if (f.name == "dw-4d-canonical") {
        QKGStructure can = lt.dw->canonical();
        builtin["Q"] = {1, can.Q().chars};
        for (int mu = 1; mu <= 4; ++mu)
            builtin["K" + std::to_string(mu)] = {-1, can.Kmu(mu).chars};
    } else {
        builtin["Q"] = {1, lt.dw->Q_displayed().chars};
        auto K = lt.dw->K_displayed();
        for (int mu = 1; mu <= 4; ++mu)
            builtin["K" + std::to_string(mu)] = {-1, K[mu - 1].chars};
    }

    TheoryEnv env = lt.env();
    for (auto& d : f.derivations) {
        auto it = builtin.find(d.name);
        if (it == builtin.end()) fail("E002", 1, 1, "unknown derivation '" + d.name + "'");
        if (it->second.first != d.ghost)
            fail("E003", 1, 1, "derivation '" + d.name + "' has the wrong ghost degree");
        std::map<std::string, Poly> declared;
        for (auto& row : d.rows) {
            if (!ctx->has_field(row.lhs))
                fail("E002", row.line, row.col, "unknown field '" + row.lhs + "'");
            Poly rhs = env.eval_scalar(*row.rhs);
            // Homogeneity: char degree = field degree shifted by the ghost.
            auto want = ctx->alg()->gen(ctx->jet(row.lhs)).deg;
            want.g += d.ghost;
            auto got = loader_detail::degree_of(ctx->alg(), rhs);
            if (!rhs.zero() && (!got || !(got->h == want.h && got->v == want.v &&
                                          got->g == want.g)))
                fail("E003", row.line, row.col,
                     "degree mismatch in " + d.name + " " + row.lhs);
            declared[row.lhs] = std::move(rhs);
        }
        for (auto& fi : ctx->fields()) {
            Poly want = it->second.second.count(fi.name) ? it->second.second.at(fi.name)
                                                         : Poly(ctx->alg());
            Poly got = declared.count(fi.name) ? declared.at(fi.name) : Poly(ctx->alg());
            if (!(want - got).zero())
                fail("E008", 1, 1,
                     "table " + d.name + " differs from the built-in theory on " + fi.name);
        }
    }

    // Substitutions: degree-preserving images of declared fields.
    for (auto& s : f.substitutions)
        for (auto& row : s.rows) {
            if (!ctx->has_field(row.lhs))
                fail("E002", row.line, row.col, "unknown field '" + row.lhs + "'");
            Poly rhs = env.eval_scalar(*row.rhs);
            auto want = ctx->alg()->gen(ctx->jet(row.lhs)).deg;
            auto got = loader_detail::degree_of(ctx->alg(), rhs);
            if (!rhs.zero() &&
                (!got || !(got->h == want.h && got->v == want.v && got->g == want.g)))
                fail("E003", row.line, row.col, "degree mismatch in substitution " + s.name);
        }

    // Lagrangians must reproduce the built-in densities.
    for (auto& l : f.lagrangians) {
        Poly want(ctx->alg());
        if (l.name == "L" && lt.flat)
            want = lt.flat->L();
        else if (l.name == "L" && f.name == "dw-4d-deformed")
            want = lt.dw->lagrangian_displayed();
        else if (l.name == "L" && f.name == "dw-4d-canonical")
            want = lt.dw->L_top();
        else if (l.name == "L_BV" && lt.dwbv)
            want = lt.dwbv->L_BV_displayed();
        else
            fail("E002", 1, 1, "unknown lagrangian '" + l.name + "'");
        Poly got = env.eval_scalar(*l.expr);
        if (!(want - got).zero())
            fail("E008", 1, 1, "lagrangian " + l.name + " differs from the built-in theory");
    }

    lt.warnings = env.warnings;
    return lt;
}

}  // namespace gstar
