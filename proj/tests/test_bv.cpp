// Antifield (cotangent) extension of the four-dimensional SU(2) cohomological
// theory: the lifted differential and master Lagrangian against their
// displayed closed forms, nilpotency on all twelve generator families, the
// deformation family K with its homotopy brackets, the five-level boundary
// tower with all structural identities, f-transforms, graph gauge fixing, the
// reduced constraint surface, and the conjugated three-term shape of the
// antifield table.  A one-dimensional even scalar model exercises the generic
// machinery on the smallest possible example.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gstar/bv.hpp"

using namespace gstar;

namespace {

DW4dBV& T() {
    static DW4dBV t;
    return t;
}
CotangentTheory& CT() { return T().theory(); }

const CotangentTheory::BVExtension& ext() {
    static CotangentTheory::BVExtension e = CT().bv_extend(T().L_brst(), T().Q_displayed());
    return e;
}

const std::vector<EvField>& Kfam() {
    static std::vector<EvField> k = T().K_bv();
    return k;
}

const QKGStructure& S() {
    static QKGStructure s(&T().ctx, T().Q_BV_displayed(), Kfam(), T().spectators());
    return s;
}

const BVBFVTower& tower() {
    static BVBFVTower t =
        ascend_exp_k(&T().ctx, S().K_op(), S().Q(), T().gamma_seed(), T().Delta_seed());
    return t;
}

Poly lie_residual(const DW4d::Lie& X, const DW4d::Lie& Y) {
    for (int a = 0; a < DW4d::LDIM; ++a)
        if (!(X[a] - Y[a]).zero()) return X[a] - Y[a];
    return Poly(T().ctx.alg());
}

}  // namespace

TEST_CASE("one-dimensional even scalar: lift, extension, and gauge fixing") {
    JetContext c(1, "t");
    c.declare_field("u", 0);
    c.declare_field("uplus", -1, GenKind::Antifield);
    Poly gamma = c.jp("uplus") * c.dxp(1) * c.vjp("u");
    auto probe = [&c](int g) {
        if (g != 0) throw std::runtime_error("probe ghost out of range");
        return Poly(c.alg(), 1);
    };
    CotangentTheory ct(&c, gamma, {{"u", "uplus"}}, probe);

    Poly L = Rat(1, 2) * c.jp("u", {1}) * c.jp("u", {1}) * c.dxp(1);
    EvField QL = ct.hamiltonian_lift("Q_L", L);
    CHECK(QL.ghost == 1);
    CHECK(QL.characteristic("u").zero());
    CHECK(!QL.characteristic("uplus").zero());
    // The certified Hamiltonian relation was already enforced; nilpotency:
    EvField sq = c.ev_bracket(QL, QL);
    for (auto& [f, q] : sq.chars) CHECK(q.zero());

    // Extension by the zero symmetry.
    EvField zero = c.evolutionary("0", 1, {});
    auto e = ct.bv_extend(L, zero);
    CHECK((e.L_BV - L - e.Q_L.iota()(ct.gamma_ct())).zero());

    // Vanishing gauge fermion: the graph sets the antifield to zero.
    JetSubstitution fix = ct.graph_gauge_fix(Poly(c.alg()));
    CHECK(fix(c.jp("uplus")).zero());
    CHECK((fix(e.L_BV) - L).zero());

    // Lifting the zero field gives the zero field.
    EvField zl = ct.cotangent_lift(zero);
    CHECK((zl.characteristic("uplus")).zero());
}

TEST_CASE("extended tables: the computed lift matches the displayed one") {
    auto& e = ext();
    Poly r1 = S().ev_defect(e.Q_cl, T().Q_cl_displayed());
    Poly r2 = S().ev_defect(e.Q_L, T().Q_L_displayed());
    Poly r3 = S().ev_defect(e.Q_BV, T().Q_BV_displayed());
    std::string m1 = r1.str(), m2 = r2.str(), m3 = r3.str();
    CHECK_MESSAGE(r1.zero(), m1);
    CHECK_MESSAGE(r2.zero(), m2);
    CHECK_MESSAGE(r3.zero(), m3);
    Poly r4 = e.L_BV - T().L_BV_displayed();
    std::string m4 = r4.str();
    CHECK_MESSAGE(r4.zero(), m4);
    // Subtracting the lifted-symmetry term recovers the input Lagrangian.
    CHECK((e.L_BV - e.Q_BV.iota()(CT().gamma_ct()) - T().L_brst()).zero());
}

TEST_CASE("extended differential is nilpotent on all twelve families") {
    EvField sq = T().ctx.ev_bracket(ext().Q_BV, ext().Q_BV);
    for (auto& [f, q] : sq.chars) {
        CAPTURE(f);
        std::string m = q.str();
        CHECK_MESSAGE(q.zero(), m);
    }
}

TEST_CASE("boundary one-form of the master Lagrangian") {
    auto& e = ext();
    Poly r = e.Q_BV.iota()(CT().omega_ct()) - T().ctx.dv()(e.L_BV) +
             T().ctx.dh()(T().gamma_boundary_displayed());
    std::string m = r.str();
    CHECK_MESSAGE(r.zero(), m);
}

TEST_CASE("gauge contraction and variation lift to the antifields") {
    auto& c = T().ctx;
    EvField I = T().I_deformed(T().lam());
    EvField Icl = CT().cotangent_lift(I);
    // The contraction extends by zero to the antifields.
    Poly r0 = S().ev_defect(Icl, I);
    std::string m0 = r0.str();
    CHECK_MESSAGE(r0.zero(), m0);
    // The lifted variation is the bracket of the extended differential with
    // the lifted contraction.
    EvField del = c.ev_bracket(T().Q_displayed(), I);
    EvField delcl = CT().cotangent_lift(del);
    Poly r1 = S().ev_defect(delcl, c.ev_bracket(ext().Q_BV, Icl));
    std::string m1 = r1.str();
    CHECK_MESSAGE(r1.zero(), m1);
    // Contracting the master Lagrangian yields the lifted variation
    // functional, which is not horizontally exact.
    Poly tilde = CT().lift_function(delcl);
    Poly r2 = Icl.lie()(ext().L_BV) - tilde;
    std::string m2 = r2.str();
    CHECK_MESSAGE(r2.zero(), m2);
    CHECK(!c.dh_antiderivative(tilde).exact());
}

TEST_CASE("deformation family: displayed form tables") {
    auto& t = T();
    const Derivation& K = S().K_op();
    auto fb2 = t.lscale(Rat(2), t.ladd(t.F(), t.b()));
    struct Row {
        DW4d::Lie lhs, rhs;
        const char* name;
    };
    std::vector<Row> rows = {
        {t.lmap([&](const Poly& p) { return K(p); }, t.theta()), t.A(), "theta"},
        {t.lmap([&](const Poly& p) { return K(p); }, t.A()), t.lscale(Rat(-2), t.chi()), "A"},
        {t.lmap([&](const Poly& p) { return K(p); }, t.chi()), t.lscale(Rat(-3), t.upp()), "chi"},
        {t.lmap([&](const Poly& p) { return K(p); }, t.phi()), t.lscale(Rat(-1), t.ups()), "phi"},
        {t.lmap([&](const Poly& p) { return K(p); }, t.ups()), fb2, "ups"},
        {t.lmap([&](const Poly& p) { return K(p); }, t.b()),
         t.lsub(t.lscale(Rat(-2), t.dA(t.chi())), t.lscale(Rat(3), t.Ap())), "b"},
        {t.lmap([&](const Poly& p) { return K(p); }, t.php()), t.lie_zero(), "phi+"},
        {t.lmap([&](const Poly& p) { return K(p); }, t.upp()), t.lscale(Rat(-4), t.php()),
         "ups+"},
        {t.lmap([&](const Poly& p) { return K(p); }, t.bp()), t.lie_zero(), "b+"},
        {t.lmap([&](const Poly& p) { return K(p); }, t.Ap()),
         t.lsub(t.lscale(Rat(4), t.lbk(t.chi(), t.bp())), t.lscale(Rat(4), t.thp())), "A+"},
        {t.lmap([&](const Poly& p) { return K(p); }, t.chp()),
         t.ladd(t.dA(t.bp()), t.lscale(Rat(3), t.Ap())), "chi+"},
        {t.lmap([&](const Poly& p) { return K(p); }, t.thp()), t.lie_zero(), "theta+"},
    };
    for (auto& row : rows) {
        CAPTURE(row.name);
        Poly r = lie_residual(row.lhs, row.rhs);
        std::string m = r.str();
        CHECK_MESSAGE(r.zero(), m);
    }
}

TEST_CASE("deformation family: brackets and the partial homotopy relation") {
    auto& c = T().ctx;
    const EvField& Q = S().Q();
    for (int mu = 1; mu <= 4; ++mu) {
        for (int nu = mu; nu <= 4; ++nu) {
            // The contraction family fails to close on exactly one family of
            // generators: on the three-form antifield the commutator produces
            // a pinned total-derivative defect built from the components of
            // the top-degree antifield.  This is forced by the table choice
            // that the family annihilates the shifted top antifield instead
            // of producing its partner; everywhere else the bracket vanishes.
            EvField kk = c.ev_bracket(Kfam()[mu - 1], Kfam()[nu - 1]);
            DW4d::Lie phpf = T().php();
            for (auto& fi : c.fields()) {
                const std::string& f = fi.name;
                Poly got = kk.chars.count(f) ? kk.chars.at(f) : Poly(c.alg());
                Poly want(c.alg());
                for (int a = 1; a <= 3; ++a)
                    for (auto& tr : DW4d::triples())
                        if (f == DW4d::Ap_n(a, tr[0], tr[1], tr[2]))
                            want = c.Dmu(mu)(T().comp4(phpf[a - 1], nu, tr[0], tr[1], tr[2])) +
                                   c.Dmu(nu)(T().comp4(phpf[a - 1], mu, tr[0], tr[1], tr[2]));
                CAPTURE(mu);
                CAPTURE(nu);
                CAPTURE(f);
                Poly r = got - want;
                std::string m = r.str();
                CHECK_MESSAGE(r.zero(), m);
            }
        }
        EvField xk = c.ev_bracket(S().xi(mu), Kfam()[mu - 1]);
        for (auto& [f, q] : xk.chars) CHECK(q.zero());

        // [Q, K_mu] translates every family except the pair (phi+, theta+),
        // which the bracket annihilates instead: the family is a homotopy for
        // the invariant horizontal differential only up to this defect.
        EvField qk = c.ev_bracket(Q, Kfam()[mu - 1]);
        EvField xi = S().xi(mu);
        for (auto& fi : c.fields()) {
            const std::string& f = fi.name;
            Poly got = qk.chars.count(f) ? qk.chars.at(f) : Poly(c.alg());
            bool broken = f.rfind("php", 0) == 0 || f.rfind("thp", 0) == 0;
            if (f.rfind("lam", 0) == 0) continue;
            CAPTURE(mu);
            CAPTURE(f);
            if (broken && f.rfind("php", 0) == 0) {
                std::string m = got.str();
                CHECK_MESSAGE(got.zero(), m);
            } else if (!broken) {
                Poly r = got - xi.chars.at(f);
                std::string m = r.str();
                CHECK_MESSAGE(r.zero(), m);
            }
        }
        // The broken pair is exactly the one annihilated by the bracket: the
        // image of phi+ under the extended differential is also killed.
        for (int a = 1; a <= 3; ++a) {
            Poly r = qk.lie()(Q.chars.at(DW4d::php_n(a)));
            CAPTURE(mu);
            CAPTURE(a);
            std::string m = r.str();
            CHECK_MESSAGE(r.zero(), m);
        }
    }
}

TEST_CASE("descent combinations of theta and phi under the deformation") {
    auto& t = T();
    const Derivation& K = S().K_op();
    DW4d::Lie thK = t.exp_k(K, t.theta(), -1);
    DW4d::Lie thK_exp = t.lsub(t.lsub(t.lsub(t.lsub(t.theta(), t.A()), t.chi()), t.upp()),
                               t.php());
    Poly r1 = lie_residual(thK, thK_exp);
    std::string m1 = r1.str();
    CHECK_MESSAGE(r1.zero(), m1);

    DW4d::Lie phK = t.exp_k(K, t.phi(), +1);
    DW4d::Lie phK_exp = t.ladd(
        t.lsub(t.lsub(t.lsub(t.lsub(t.lsub(t.phi(), t.ups()), t.F()), t.b()),
                      t.lscale(Rat(-1), t.Ap())),
               t.thp()),
        t.lbk(t.chi(), t.bp()));
    Poly r2 = lie_residual(phK, phK_exp);
    std::string m2 = r2.str();
    CHECK_MESSAGE(r2.zero(), m2);
}

TEST_CASE("boundary tower: levels match the displayed lists") {
    auto& t = T();
    auto gd = t.gamma_tower_displayed();
    auto dd = t.Delta_tower_displayed();
    for (int p = 0; p <= 4; ++p) {
        CAPTURE(p);
        Poly rg = tower().gamma[p] - gd[p];
        Poly rd = tower().Delta[p] - dd[p];
        std::string mg = rg.str(), md = rd.str();
        CHECK_MESSAGE(rg.zero(), mg);
        CHECK_MESSAGE(rd.zero(), md);
    }
    Poly rl = tower().L[0] - t.L0_displayed();
    std::string ml = rl.str();
    CHECK_MESSAGE(rl.zero(), ml);
}

TEST_CASE("boundary tower: structural identities at every level") {
    auto checks = verify_bvbfv(&T().ctx, S().Q(), tower());
    for (auto& c : checks) {
        CAPTURE(c.name);
        std::string m = c.residual.str();
        CHECK_MESSAGE(c.pass, m);
    }
}

TEST_CASE("tower Lagrangians: descent of the top seed against the jet homotopy") {
    auto& c = T().ctx;
    const Derivation& K = S().K_op();
    Poly L4 = T().Delta_seed() + S().Q().iota()(T().gamma_seed());
    Poly expL = L4, cur = L4;
    Rat fact = 1;
    for (int j = 1; j <= 4; ++j) {
        cur = K(cur);
        fact *= j;
        expL += (Rat(1) / fact) * cur;
    }
    Poly Sg(c.alg()), SL(c.alg());
    for (int p = 0; p <= 4; ++p) {
        Sg += tower().gamma[p];
        SL += tower().L[p];
    }
    Poly r = SL - expL + c.K0()(Sg);
    std::string m = r.str();
    CHECK_MESSAGE(r.zero(), m);
}

TEST_CASE("f-transform: certified level shifts preserve the tower identities") {
    auto& t = T();
    auto& c = t.ctx;
    std::vector<Poly> f = {t.tr(t.b(), t.chi()), t.tr(t.chi(), t.ups()),
                           t.tr(t.chi(), t.phi()), t.tr(t.A(), t.phi()),
                           t.tr(t.theta(), t.phi())};
    auto r = f_transform(&c, S().Q(), tower(), f);
    for (auto& ck : r.checks) {
        CAPTURE(ck.name);
        std::string m = ck.residual.str();
        CHECK_MESSAGE(ck.pass, m);
    }
    auto checks = verify_bvbfv(&c, S().Q(), r.tower);
    for (auto& ck : checks) {
        CAPTURE(ck.name);
        std::string m = ck.residual.str();
        CHECK_MESSAGE(ck.pass, m);
    }
}

TEST_CASE("graph gauge fixing recovers the gauge-fixed Lagrangian") {
    auto& t = T();
    auto& c = t.ctx;
    // Extension of the topological density alone: its Euler-Lagrange form
    // vanishes identically, so the Hamiltonian part is trivial.
    auto e2 = CT().bv_extend(t.L_top(), t.Q_displayed());
    for (auto& [f, q] : e2.Q_L.chars) CHECK(q.zero());
    JetSubstitution fix = CT().graph_gauge_fix(t.gauge_fermion());
    Poly r = fix(e2.L_BV) - t.L_top() - t.Q_displayed().lie()(t.gauge_fermion());
    auto ad = c.dh_antiderivative(r);
    std::string m = ad.residual.str();
    CHECK_MESSAGE(ad.exact(), m);
    // The gauge-fixed Lagrangian is the displayed one.
    Poly r2 = t.L_top() + t.Q_displayed().lie()(t.gauge_fermion()) - t.L_brst();
    std::string m2 = r2.str();
    CHECK_MESSAGE(r2.zero(), m2);
}

TEST_CASE("constraint surface is preserved and carries the boundary data") {
    auto& t = T();
    auto& c = t.ctx;
    JetSubstitution red = t.reduced_sub();
    DW4d::Lie con = t.ladd(t.ladd(t.F(), t.b()), t.chp());
    auto preserved = [&](const EvField& X, const char* tag) {
        Derivation L = X.lie();
        for (int a = 0; a < 3; ++a) {
            CAPTURE(tag);
            CAPTURE(a);
            Poly r1 = red(L(con[a]));
            std::string m1 = r1.str();
            CHECK_MESSAGE(r1.zero(), m1);
        }
        for (int a = 1; a <= 3; ++a)
            for (auto [mu, nu] : DW4d::pairs()) {
                Poly r2 = red(L(c.jp(DW4d::bp_n(a, mu, nu))));
                CAPTURE(tag);
                std::string m2 = r2.str();
                CHECK_MESSAGE(r2.zero(), m2);
            }
    };
    preserved(ext().Q_BV, "Q_BV");
    for (int mu = 1; mu <= 4; ++mu) preserved(Kfam()[mu - 1], "K");

    // On the surface the tower data coincides with the master data: the
    // presymplectic potentials agree up to a vertically closed shift and the
    // Lagrangians up to a horizontally exact one.
    Poly dg = c.dv()(red(tower().gamma[1] + t.gamma_boundary_displayed()));
    std::string mg = dg.str();
    CHECK_MESSAGE(dg.zero(), mg);
    auto ad = c.dh_antiderivative(red(tower().L[0] - ext().L_BV));
    std::string ml = ad.residual.str();
    CHECK_MESSAGE(ad.exact(), ml);
}

TEST_CASE("flipped antifield table has the conjugated three-term shape") {
    // After reversing the sign of the 3-form antifield, the action of the
    // lifted field differential on the quadruple (A+, ups+, chi+, b+) splits
    // as shift + theta-rotation - phi-contraction, the same three-term shape
    // as the conjugated tensor-model differential.
    auto& t = T();
    auto& c = t.ctx;
    std::map<std::string, Poly> flip_img;
    for (int a = 1; a <= 3; ++a)
        for (auto& tri : DW4d::triples())
            flip_img[DW4d::Ap_n(a, tri[0], tri[1], tri[2])] =
                -c.jp(DW4d::Ap_n(a, tri[0], tri[1], tri[2]));
    JetSubstitution flip(&c, flip_img);
    EvField Qcl = T().Q_cl_displayed();
    Derivation LQ = Qcl.lie();

    DW4d::Lie thUp = t.lbk(t.theta(), t.upp());
    DW4d::Lie thAp = t.lbk(t.theta(), t.Ap());
    DW4d::Lie thBp = t.lbk(t.theta(), t.bp());
    DW4d::Lie thCp = t.lbk(t.theta(), t.chp());
    DW4d::Lie phUp = t.lbk(t.phi(), t.upp());
    DW4d::Lie phBp = t.lbk(t.phi(), t.bp());
    for (int a = 1; a <= 3; ++a) {
        for (auto& tri : DW4d::triples()) {
            std::vector<int> I{tri[0], tri[1], tri[2]};
            // shift: ups+ -> (flipped) A+; theta-rotation; no contraction.
            Poly lhs = flip(LQ(flip(c.jp(DW4d::upp_n(a, tri[0], tri[1], tri[2])))));
            Poly rhs = c.jp(DW4d::Ap_n(a, tri[0], tri[1], tri[2])) - t.comp(thUp[a - 1], I);
            Poly r = lhs - rhs;
            std::string m = r.str();
            CHECK_MESSAGE(r.zero(), m);
            // top of the pair: no shift; rotation plus contraction onto ups+.
            Poly lhs2 = flip(LQ(flip(c.jp(DW4d::Ap_n(a, tri[0], tri[1], tri[2])))));
            Poly rhs2 = -t.comp(thAp[a - 1], I) + t.comp(phUp[a - 1], I);
            Poly r2 = lhs2 - rhs2;
            std::string m2 = r2.str();
            CHECK_MESSAGE(r2.zero(), m2);
        }
        for (auto [mu, nu] : DW4d::pairs()) {
            std::vector<int> I{mu, nu};
            Poly lhs = flip(LQ(flip(c.jp(DW4d::bp_n(a, mu, nu)))));
            Poly rhs = c.jp(DW4d::chp_n(a, mu, nu)) - t.comp(thBp[a - 1], I);
            Poly r = lhs - rhs;
            std::string m = r.str();
            CHECK_MESSAGE(r.zero(), m);
            Poly lhs2 = flip(LQ(flip(c.jp(DW4d::chp_n(a, mu, nu)))));
            Poly rhs2 = -t.comp(thCp[a - 1], I) + t.comp(phBp[a - 1], I);
            Poly r2 = lhs2 - rhs2;
            std::string m2 = r2.str();
            CHECK_MESSAGE(r2.zero(), m2);
        }
    }
}
