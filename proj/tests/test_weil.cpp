// Tests for the equivariant models: tensor G*-algebras, the Kalkman
// conjugation, basic subspaces, finite-degree cohomology and finite BRST
// gauge fixing.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gstar/weil.hpp"

using namespace gstar;

TEST_CASE("tensor of two Weil models passes Cartan relations") {
    auto W1 = weil_algebra(LieAlgebraSpec::su2());
    auto W2 = weil_algebra(LieAlgebraSpec::su2());
    auto T = tensor_gstar(W1, W2);
    CHECK(T.verify_cartan().pass());
    const Algebra* A = T.alg.get();
    // iota_1 on L.th1 -> 1, on R.th1 -> 1 (sum rule), on L.ph -> 0
    CHECK(T.iota[0](Poly::generator(A, A->require("L.th1"))) == Poly(A, 1));
    CHECK(T.iota[0](Poly::generator(A, A->require("R.th1"))) == Poly(A, 1));
    CHECK(T.iota[0](Poly::generator(A, A->require("L.ph1"))).zero());
    // d_W^2 = 0 spot check on a product
    Poly p = Poly::generator(A, A->require("L.th1")) * Poly::generator(A, A->require("R.th2"));
    CHECK(T.d(T.d(p)).zero());
}

TEST_CASE("Kalkman conjugation equals the three-term differential") {
    auto W1 = weil_algebra(LieAlgebraSpec::su2());
    auto W2 = weil_algebra(LieAlgebraSpec::su2());
    auto M = make_tensor_model(W1, W2);
    auto K = kalkman_conjugate(M);
    CHECK(K.dK_formula.pass());
    CHECK(K.iota_conj.pass());
    // d_K^2 = 0
    const Algebra* A = M.T.alg.get();
    LinOp zero{{}, [A](const Poly&) { return Poly(A); }};
    CHECK(check_relation(A, compose(as_op(K.dK), as_op(K.dK)), zero, M.T.gens).pass());
}

TEST_CASE("Kalkman conjugation is trivial for abelian algebra with trivial action") {
    // Right factor: polynomial algebra on one degree-2 generator with zero
    // iota/Lie and zero differential; j = exp(-th (x) iota) = id.
    auto W = weil_algebra(LieAlgebraSpec::abelian(1));
    GStarAlgebra B;
    B.lie = LieAlgebraSpec::abelian(1);
    B.alg = std::make_shared<Algebra>();
    int x = B.alg->declare({"x", {0, 0, 2}, GenKind::Field});
    B.gens = {x};
    B.d = Derivation::zero(B.alg.get(), {0, 0, 1});
    B.iota = {Derivation::zero(B.alg.get(), {0, 0, -1})};
    B.lieD = {Derivation::zero(B.alg.get(), {0, 0, 0})};
    auto M = make_tensor_model(W, B);
    auto K = kalkman_conjugate(M);
    CHECK(K.dK_formula.pass());
    for (int g : M.T.gens) CHECK(K.dK.on(g) == M.T.d.on(g));
}

TEST_CASE("Weil algebra of su(2) is acyclic in degrees 1..6") {
    auto W = weil_algebra(LieAlgebraSpec::su2());
    auto dims = cohomology_dims(*W.alg, W.d, 0, 6);
    CHECK(dims[0] == 1);  // H^0 = Q
    for (int k = 1; k <= 6; ++k) CHECK(dims[k] == 0);
}

TEST_CASE("cohomology of the zero differential is the whole component") {
    auto W = weil_algebra(LieAlgebraSpec::su2());
    auto basis3 = degree_basis(*W.alg, 3);
    Derivation z = Derivation::zero(W.alg.get(), {0, 0, 1});
    auto dims = cohomology_dims(*W.alg, z, 3, 3);
    CHECK(dims[0] == basis3.size());
}

TEST_CASE("basic subspace of W(su(2))") {
    auto W = weil_algebra(LieAlgebraSpec::su2());
    // Degree 1: no basic elements.
    CHECK(basic_subspace(W, 1).empty());
    // Degree 4: spanned by delta_{ab} ph^a ph^b.
    std::vector<Monomial> basis;
    auto B = basic_subspace(W, 4, &basis);
    REQUIRE(B.size() == 1);
    const Algebra* A = W.alg.get();
    Poly v(A);
    for (size_t j = 0; j < basis.size(); ++j) v.add_term(basis[j], B[0][j]);
    Poly expect(A);
    for (int a = 1; a <= 3; ++a) {
        Poly ph = Poly::generator(A, A->require("ph" + std::to_string(a)));
        expect += ph * ph;
    }
    // Same line: v is a rational multiple of sum_a (ph^a)^2.
    Rat ratio;
    bool first = true;
    for (auto& [m, c] : expect.terms()) {
        Rat cv = 0;
        auto it = v.terms().find(m);
        if (it != v.terms().end()) cv = it->second;
        if (first) {
            REQUIRE(cv != 0);
            ratio = cv / c;
            first = false;
        }
    }
    CHECK(v == ratio * expect);
    // Restricting d to basic elements in degree 4: d vanishes there (invariant
    // polynomial), so H_bas^4 has dimension 1.
    CHECK(W.d(v).zero());
}

TEST_CASE("basic subspace of abelian rank-1 Weil algebra, degree 2") {
    auto W = weil_algebra(LieAlgebraSpec::abelian(1));
    std::vector<Monomial> basis;
    auto B = basic_subspace(W, 2, &basis);
    REQUIRE(B.size() == 1);
    const Algebra* A = W.alg.get();
    Poly v(A);
    for (size_t j = 0; j < basis.size(); ++j) v.add_term(basis[j], B[0][j]);
    Poly ph = Poly::generator(A, A->require("ph1"));
    CHECK((v == ph || v == -ph));
}

TEST_CASE("finite BRST gauge fixing") {
    auto W1 = weil_algebra(LieAlgebraSpec::su2());
    auto W2 = weil_algebra(LieAlgebraSpec::su2());
    auto T = tensor_gstar(W1, W2);
    const Algebra* A = T.alg.get();
    // S = sum_a (L.ph^a)^2: iota-horizontal, Lie-invariant (delta contraction
    // of two adjoint vectors) and d-closed (f-antisymmetry).
    Poly S(A);
    for (int a = 1; a <= 3; ++a) {
        Poly ph = Poly::generator(A, A->require("L.ph" + std::to_string(a)));
        S += ph * ph;
    }
    // Psi = 0: S unchanged, all audits pass when S is basic and closed.
    auto R0 = finite_brst_system(T, T.d, S, Poly(A));
    CHECK(R0.fixed == S);
    CHECK(R0.audit.pass());
    // Basic fermion: Psi0 = sum_a (L.th^a - R.th^a)(L.ph^a + R.ph^a); the
    // theta difference is killed by every iota and the delta contraction is
    // Lie-invariant.
    Poly Psi0(A);
    for (int a = 1; a <= 3; ++a) {
        Poly tdiff = Poly::generator(A, A->require("L.th" + std::to_string(a))) -
                     Poly::generator(A, A->require("R.th" + std::to_string(a)));
        Poly psum = Poly::generator(A, A->require("L.ph" + std::to_string(a))) +
                    Poly::generator(A, A->require("R.ph" + std::to_string(a)));
        Psi0 += tdiff * psum;
    }
    auto Rb = finite_brst_system(T, T.d, S, Psi0);
    CHECK(Rb.audit.pass());
    CHECK(Rb.fixed == S + T.d(Psi0));
    // Non-basic fermion (iota does not kill L.th alone): violation report.
    Poly Psi1 = Poly::generator(A, A->require("L.th1")) * Poly::generator(A, A->require("L.ph1"));
    auto R1 = finite_brst_system(T, T.d, S, Psi1);
    CHECK(!R1.audit.pass());
    CHECK(R1.fixed == S + T.d(Psi1));
}
