#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <braidtrees/checks.hpp>

#include <string>
#include <vector>

using namespace braidtrees;

namespace {

Braiding q_plane() {
    std::vector<BraidingEntry> entries = {
        {1, 1, {{Rational(2), 1, 1}}},
        {2, 2, {{Rational(2), 2, 2}}},
        {1, 2, {{Rational(1), 2, 1}}},
        {2, 1, {{Rational(1), 1, 2}, {Rational(3, 2), 2, 1}}},
    };
    return Braiding::explicit_entries(2, entries);
}

// Flip everywhere except that e1 (x) e1 maps to zero: not invertible, so
// the braid-relation check must reject it.
Braiding broken_table() {
    std::vector<BraidingEntry> entries = {
        {1, 1, {}},
        {2, 2, {{Rational(1), 2, 2}}},
        {1, 2, {{Rational(1), 2, 1}}},
        {2, 1, {{Rational(1), 1, 2}}},
    };
    return Braiding::explicit_entries(2, entries);
}

std::vector<AlgebraEntry> componentwise_entries(int dim) {
    std::vector<AlgebraEntry> entries;
    for (std::int32_t i = 1; i <= dim; ++i)
        entries.push_back({i, i, i, Rational(1)});
    return entries;
}

void require_all_pass(const SuiteReport& report) {
    for (const IdentityResult& r : report.identities) {
        CAPTURE(report.suite);
        CAPTURE(r.name);
        CAPTURE(r.counterexample);
        CHECK(r.pass);
    }
    CHECK(report.all_pass());
    CHECK(!report.identities.empty());
}

}  // namespace

TEST_CASE("every suite passes for the flip braiding on two letters") {
    const Braiding flip = Braiding::flip(2);
    require_all_pass(check_yang_baxter(flip));
    require_all_pass(check_dendriform_suite(flip, 3));
    require_all_pass(check_binary_hopf_suite(flip, 3));
    require_all_pass(check_forest_hopf_suite(flip, 3));
    require_all_pass(check_theta_iso(flip, 3));
    require_all_pass(check_tridendriform_suite(flip, 3));
    require_all_pass(check_angular_hopf_suite(flip, 3));
    require_all_pass(
        check_lush_quotient_suite(2, componentwise_entries(2), flip, 3));
}

TEST_CASE("every suite passes for a diagonal braiding on one letter") {
    const Braiding diag = Braiding::diagonal_uniform(1, Rational(2));
    require_all_pass(check_dendriform_suite(diag, 3));
    require_all_pass(check_binary_hopf_suite(diag, 3));
    require_all_pass(check_forest_hopf_suite(diag, 3));
    require_all_pass(check_theta_iso(diag, 3));
    require_all_pass(check_tridendriform_suite(diag, 3));
    require_all_pass(check_angular_hopf_suite(diag, 3));
}

TEST_CASE("a multi-term braiding table passes the crossing identities") {
    const Braiding qp = q_plane();
    require_all_pass(check_yang_baxter(qp));
    require_all_pass(check_dendriform_suite(qp, 2));
    require_all_pass(check_binary_hopf_suite(qp, 2));
    require_all_pass(check_forest_hopf_suite(qp, 2));
    require_all_pass(check_theta_iso(qp, 2));
    require_all_pass(check_tridendriform_suite(qp, 2));
    require_all_pass(check_angular_hopf_suite(qp, 2));
}

TEST_CASE("a broken table is reported with a witness") {
    const SuiteReport report = check_yang_baxter(broken_table());
    CHECK(!report.all_pass());
    REQUIRE(report.identities.size() == 1);
    CHECK(report.identities[0].name == "yang-baxter");
    CHECK(!report.identities[0].counterexample.empty());
}

TEST_CASE("a broken table fails the precondition of a dependent suite") {
    const SuiteReport report = check_dendriform_suite(broken_table(), 2);
    CHECK(!report.all_pass());
    const IdentityResult* yb = report.find("yang-baxter");
    REQUIRE(yb != nullptr);
    CHECK(!yb->pass);
    CHECK(!yb->counterexample.empty());
    // The braiding-free axioms still hold.
    const IdentityResult* prec = report.find("prec-axiom");
    REQUIRE(prec != nullptr);
    CHECK(prec->pass);
}

TEST_CASE("the quotient suite rejects an algebra the braiding breaks") {
    // A unital product is incompatible with a scalar braiding other than
    // the flip, so validation must fail and the dependent identities
    // must be omitted rather than reported.
    const Braiding diag = Braiding::diagonal_uniform(1, Rational(2));
    const SuiteReport report =
        check_lush_quotient_suite(1, componentwise_entries(1), diag, 3);
    CHECK(!report.all_pass());
    REQUIRE(report.identities.size() == 1);
    CHECK(report.identities[0].name == "algebra-validates");
    CHECK(!report.identities[0].pass);
    CHECK(!report.identities[0].counterexample.empty());
}

TEST_CASE("the quotient suite accepts the zero algebra with any braiding") {
    const Braiding diag = Braiding::diagonal_uniform(1, Rational(2));
    require_all_pass(check_lush_quotient_suite(1, {}, diag, 3));
}

TEST_CASE("the quotient suite passes on one componentwise letter") {
    const Braiding flip = Braiding::flip(1);
    const SuiteReport report =
        check_lush_quotient_suite(1, componentwise_entries(1), flip, 4);
    require_all_pass(report);
    CHECK(report.find("ideal-dimension-count") != nullptr);
    CHECK(report.find("biideal-containment") != nullptr);
}

TEST_CASE("suite reports expose lookup by identity name") {
    const SuiteReport report = check_yang_baxter(Braiding::flip(1));
    CHECK(report.find("yang-baxter") != nullptr);
    CHECK(report.find("no-such-identity") == nullptr);
    CHECK(report.suite == "yang-baxter");
}
