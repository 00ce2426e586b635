#pragma once
// Decorated planar rooted forests as a braided Hopf algebra, plus the
// graded isomorphism with the decorated binary tree algebra.
//
//  * Basis elements are forests of planar rooted trees whose vertices
//    carry letters in depth-first preorder, reading the trees left to
//    right; the empty forest is the unit.
//  * The product is concatenation, with decoration words concatenated
//    in the same order.
//  * The coproduct of a tree removes a descendant-closed vertex set:
//    the removed subtrees (left to right) form the left tensor factor,
//    the rest forms the right one, and the braiding reorders the
//    decoration word along the minimal crossing that sorts the removed
//    positions to the front.  On multi-tree forests the coproduct
//    extends as a braided algebra morphism.  `coproduct_cocycle`
//    computes the same map through an independent recursion: grafting
//    under a new root inserts one primitive-like term and crosses the
//    root letter over the left coproduct leg.
//  * theta rewrites a binary tree into forests: a tree whose left
//    subtree is a leaf maps to the image of its right subtree grafted
//    under the root letter, and general trees are first decomposed
//    into products of such generators.  The map does not depend on the
//    braiding, yet for every braiding it intertwines the products,
//    braidings, coproducts, counits and antipodes of the two algebras.

#include <braidtrees/binary_algebra.hpp>
#include <braidtrees/legs.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace braidtrees {

using DecForest = Dec<Forest>;
using ForestElem = LinComb<DecForest>;
using ForestPair = LinComb<Pair2<DecForest, DecForest>>;

DecForest forest_unit();
DecForest forest_vertex(std::int32_t letter);
DecForest forest_concat(const DecForest& a, const DecForest& b);
ForestElem forest_concat(const ForestElem& a, const ForestElem& b);

// New root decorated by `letter` over the whole forest; the result is a
// single tree whose preorder word starts with the root letter.
DecForest bplus(std::int32_t letter, const DecForest& f);
ForestElem bplus(std::int32_t letter, const ForestElem& f);

class ForestHopf {
  public:
    explicit ForestHopf(Braiding sigma);

    const Braiding& braiding() const { return sigma_; }

    // Braiding of two basis forests: blocks of decoration letters cross
    // according to the forests' vertex counts.
    ForestPair braid_pair(const DecForest& a, const DecForest& b) const;

    // Subforest-cut coproduct, extended to multi-tree forests as a
    // braided algebra morphism.
    ForestPair coproduct(const DecForest& d) const;
    ForestPair coproduct(const ForestElem& e) const;

    // Same map computed by peeling roots instead of enumerating cuts.
    ForestPair coproduct_cocycle(const DecForest& d) const;
    ForestPair coproduct_cocycle(const ForestElem& e) const;

    // Coefficient of the empty forest.
    Rational counit(const ForestElem& e) const;

    ForestElem antipode(const DecForest& d) const;
    ForestElem antipode(const ForestElem& e) const;

  private:
    // Couples two coproducts into the coproduct of a concatenation:
    // braid the inner legs past each other, then concatenate
    // componentwise.
    ForestPair braided_pair_product(const ForestPair& a,
                                    const ForestPair& b) const;

    Braiding sigma_;
    mutable std::map<std::string, ForestPair> coproduct_memo_;
    mutable std::map<std::string, ForestPair> cocycle_memo_;
    mutable std::map<std::string, ForestElem> antipode_memo_;
};

// The algebra isomorphism onto forests and its inverse.  Both are
// braiding-independent; see the header comment.
ForestElem theta(const DecBin& d);
ForestElem theta(const BinElem& e);
BinElem theta_inverse(const DecForest& f);
BinElem theta_inverse(const ForestElem& e);

}  // namespace braidtrees
