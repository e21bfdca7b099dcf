// Every built-in fixture's every declared suite passes with zero residuals.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gstar/fixtures.hpp"

using namespace gstar;

TEST_CASE("registry rejects unknown names and unknown suites") {
    CHECK_THROWS(load_fixture("no-such-theory"));
    auto f = load_fixture("susy-qm-flat");
    CHECK_THROWS(f->run("no-such-suite"));
}

TEST_CASE("all fixture suites pass") {
    for (auto& name : fixture_names()) {
        auto f = load_fixture(name);
        CHECK(f->name() == name);
        for (auto& suite : f->suites()) {
            SuiteReport rep = f->run(suite);
            CHECK(rep.fixture == name);
            CHECK(!rep.checks.empty());
            for (auto& ck : rep.checks) {
                CAPTURE(name);
                CAPTURE(suite);
                CAPTURE(ck.id);
                CHECK_MESSAGE(ck.pass, ck.residual);
            }
        }
    }
}
