#pragma once

// Executable verification suites.  Each suite exhaustively checks a family
// of identities on the decorated basis up to a degree bound and reports one
// result per identity, carrying the first counterexample found (inputs in
// canonical notation) when an identity fails.  All arithmetic is exact, so
// a pass is a proof for the covered range and a failure is reproducible.
//
// Every suite that depends on a braiding first verifies the braid relation
// itself; when that precondition fails the remaining identities are still
// checked (they are meaningful per basis element) but the report makes the
// root cause visible as its own line.
//
// The lush-quotient suite receives the finite algebra as raw data (dimension
// and structure constants) rather than a constructed object, because the
// construction itself validates associativity and braiding compatibility;
// the suite's first identity reports that validation honestly instead of
// letting the exception escape.  When it fails, the dependent identities
// are omitted from the report.

#include <braidtrees/angular_algebra.hpp>
#include <braidtrees/braiding.hpp>

#include <string>
#include <vector>

namespace braidtrees {

struct IdentityResult {
    std::string name;
    bool pass = true;
    // Empty when the identity holds; otherwise the first failing instance.
    std::string counterexample;
};

struct SuiteReport {
    std::string suite;
    std::vector<IdentityResult> identities;

    bool all_pass() const;
    // The result with the given name, or nullptr.
    const IdentityResult* find(const std::string& name) const;
};

// The braid relation on every basis triple, plus invertibility.
SuiteReport check_yang_baxter(const Braiding& sigma);

// The two one-sided products on decorated binary trees: splitting axioms,
// unit rules, associativity of their sum, compatibility with the braiding,
// the branch-by-branch crossing of grafted trees, and grading.
SuiteReport check_dendriform_suite(const Braiding& sigma, int max_degree);

// The braided Hopf structure on decorated binary trees: coassociativity,
// counit laws, the product-coproduct law, coalgebra/counit crossings, the
// two-sided antipode, agreement of the recursive and cut coproducts, and
// grading of coproduct terms.
SuiteReport check_binary_hopf_suite(const Braiding& sigma, int max_degree);

// The same Hopf-level identities for decorated forests, plus the root-graft
// recursion of the coproduct and the crossing rules for grafted factors.
SuiteReport check_forest_hopf_suite(const Braiding& sigma, int max_degree);

// The graded isomorphism between the binary tree and forest algebras:
// mutual inverses, product/coproduct/counit/antipode intertwining, braiding
// intertwining, grading, and the dimension count of the graded pieces.
SuiteReport check_theta_iso(const Braiding& sigma, int max_degree);

// The three products on decorated angular trees: the seven splitting
// axioms, unit rules, associativity of the sum, braiding compatibility of
// each product, the branch-by-branch crossing of grafted trees, grading.
SuiteReport check_tridendriform_suite(const Braiding& sigma, int max_degree);

// The braided Hopf structure on decorated angular trees, including the
// agreement of the recursive coproduct with the cut-and-shuffle form.
SuiteReport check_angular_hopf_suite(const Braiding& sigma, int max_degree);

// The quotient of the angular tree algebra by the relations that multiply
// adjacent angle letters through the given finite algebra: validation of
// the algebra itself, closure of the merged operations on lush trees, the
// seven axioms in the quotient, the reduction map's projection properties,
// the dimension of the ideal in each degree, and coideal containment.
SuiteReport check_lush_quotient_suite(int dim,
                                      const std::vector<AlgebraEntry>& entries,
                                      const Braiding& sigma, int max_degree);

}  // namespace braidtrees
