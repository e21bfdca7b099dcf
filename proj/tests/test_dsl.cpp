// Theory-definition language: parser, serializer, loader, diagnostics.
//
// Every shipped theory file must load (which certifies structural equality
// with the built-in fixture it names) and survive a serialize/reparse round
// trip.  Every file in the broken corpus must raise exactly the diagnostic
// code its filename carries.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "gstar/theory_loader.hpp"

using namespace gstar;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE_MESSAGE(in.good(), "cannot open " << p.string());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

const char* kShipped[] = {"susy-qm-flat",    "susy-qm-curved", "susy-qm-morse",
                          "dw-4d-canonical", "dw-4d-deformed", "dw-4d-bv"};

}  // namespace

TEST_CASE("every shipped theory file loads without warnings") {
    for (const char* name : kShipped) {
        CAPTURE(name);
        std::string src = slurp(fs::path(THEORY_DIR) / (std::string(name) + ".th"));
        LoadedTheory lt = load_theory(src);
        CHECK(lt.ast.name == name);
        CHECK(lt.warnings.empty());
        CHECK(!lt.ast.suites.empty());
    }
}

TEST_CASE("serialization round-trips through the parser") {
    for (const char* name : kShipped) {
        CAPTURE(name);
        std::string src = slurp(fs::path(THEORY_DIR) / (std::string(name) + ".th"));
        dsl::TheoryFile f = dsl::parse(src);
        std::string canon = dsl::serialize(f);
        dsl::TheoryFile g = dsl::parse(canon);
        CHECK(dsl::serialize(g) == canon);
        // The canonical form still loads against the built-in theory.
        LoadedTheory lt = load_theory(canon);
        CHECK(lt.ast.name == name);
    }
}

TEST_CASE("broken corpus raises the diagnostic code in the filename") {
    int seen = 0;
    for (auto& entry : fs::directory_iterator(fs::path(THEORY_DIR) / "broken")) {
        std::string fname = entry.path().filename().string();
        CAPTURE(fname);
        std::string code = fname.substr(0, 4);
        for (auto& c : code) c = static_cast<char>(std::toupper(c));
        std::string src = slurp(entry.path());
        if (code[0] == 'W') {
            // Lint files load successfully but carry the warning.
            LoadedTheory lt = load_theory(src);
            REQUIRE(!lt.warnings.empty());
            CHECK(lt.warnings[0].code == code);
        } else {
            try {
                load_theory(src);
                FAIL_CHECK("expected " << code << " from " << fname);
            } catch (const dsl::ParseError& e) {
                CHECK(e.diag.code == code);
                CHECK(e.diag.line > 0);
            }
        }
        ++seen;
    }
    CHECK(seen >= 10);
}

TEST_CASE("standalone expressions evaluate in a theory environment") {
    std::string src = slurp(fs::path(THEORY_DIR) / "susy-qm-flat.th");
    LoadedTheory lt = load_theory(src);
    TheoryEnv env = lt.env();
    JetContext* ctx = lt.ctx();

    SUBCASE("an integer power binds to the preceding atom, not the product") {
        Poly p = env.eval_scalar(*dsl::parse_expression("dt*b1^2"));
        Poly want = ctx->dxp(1) * ctx->jp("b1", {}) * ctx->jp("b1", {});
        CHECK((p - want).zero());
    }
    SUBCASE("jets and variations") {
        Poly p = env.eval_scalar(*dsl::parse_expression("x1_(1,1) + $psi2"));
        Poly want = ctx->jp("x1", {1, 1}) + ctx->vjp("psi2");
        CHECK((p - want).zero());
    }
    SUBCASE("horizontal differential") {
        Poly p = env.eval_scalar(*dsl::parse_expression("d x1"));
        CHECK((p - ctx->dh()(ctx->jp("x1", {}))).zero());
    }
    SUBCASE("unknown symbols are rejected") {
        CHECK_THROWS_AS(env.eval_scalar(*dsl::parse_expression("zork")), dsl::ParseError);
    }
    SUBCASE("odd squares trigger the normalization lint") {
        Poly p = env.eval_scalar(*dsl::parse_expression("psi1^2"));
        CHECK(p.zero());
        REQUIRE(!env.warnings.empty());
        CHECK(env.warnings.back().code == "W001");
    }
}

TEST_CASE("Lie-valued expressions in the gauge-theory environment") {
    std::string src = slurp(fs::path(THEORY_DIR) / "dw-4d-deformed.th");
    LoadedTheory lt = load_theory(src);
    TheoryEnv env = lt.env();
    DW4d* m = lt.dw_model();
    REQUIRE(m != nullptr);

    SUBCASE("Tr pairs two Lie factors through the invariant metric") {
        Poly p = env.eval_scalar(*dsl::parse_expression("Tr(phi^phi)"));
        Poly want(lt.ctx()->alg());
        for (int a = 0; a < DW4d::LDIM; ++a) want += m->phi()[a] * m->phi()[a];
        CHECK((p - want).zero());
    }
    SUBCASE("Tr of an unpaired Lie value is a degree error") {
        CHECK_THROWS_AS(env.eval_scalar(*dsl::parse_expression("Tr(phi)")), dsl::ParseError);
    }
    SUBCASE("bracket and covariant differential") {
        Poly p = env.eval_scalar(*dsl::parse_expression("Tr([phi,chi]^theta)"));
        Poly q = env.eval_scalar(*dsl::parse_expression("Tr(d_A phi ^ ups)"));
        CHECK(!p.zero());
        CHECK(!q.zero());
    }
}
