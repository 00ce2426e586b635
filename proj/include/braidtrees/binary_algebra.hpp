#pragma once

#include <braidtrees/braiding.hpp>
#include <braidtrees/decorated.hpp>
#include <braidtrees/legs.hpp>
#include <braidtrees/lincomb.hpp>
#include <braidtrees/trees.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// The algebra of decorated planar binary trees: the free object for the pair
// of one-sided products
//
//   Y < Y' = Y_1 v_u (Y_2 * Y'),   Y > Y' = (Y * Y_1') v_v Y_2',
//
// (writing v for grafting, * = < + >, and the leaf | for the unit of *, with
// Y < | = Y, | > Y = Y, | < Y = Y > | = 0 and | < |, | > | undefined).  The
// one-sided products never touch the braiding: the decoration words simply
// concatenate.
//
// Together with a braiding of the letter space the graded algebra carries a
// braided Hopf structure: the braiding crosses whole trees by block-crossing
// their words, and the coproduct is defined recursively by
//
//   cop(|) = | (x) |,
//   cop(Y v_x Y') = (Y v_x Y') (x) |
//                 + (* (x) v) . swap_23 . swap_34 (cop(Y) (x) x (x) cop(Y')),
//
// where the swaps braid the middle legs into place.  The same coproduct has
// a closed form as a sum over subtree cuts with braided letter shuffles,
// implemented independently as coproduct_cuts.

namespace braidtrees {

using DecBin = Dec<BinTree>;
using BinElem = LinComb<DecBin>;
using BinPair = LinComb<Pair2<DecBin, DecBin>>;

// Pairwise tensor of two combinations.
template <class A, class B>
LinComb<Pair2<A, B>> tensor_combine(const LinComb<A>& a, const LinComb<B>& b) {
    LinComb<Pair2<A, B>> out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out += ta.coeff * tb.coeff *
                   LinComb<Pair2<A, B>>::single({ta.elem, tb.elem});
    return out;
}

DecBin bin_unit();
DecBin bin_vertex(std::int32_t letter);
DecBin bin_graft(const DecBin& l, std::int32_t letter, const DecBin& r);

// Shape-level products; decorated products concatenate the words.
LinComb<BinTree> shape_prec(const BinTree& l, const BinTree& r);
LinComb<BinTree> shape_succ(const BinTree& l, const BinTree& r);
LinComb<BinTree> shape_star(const BinTree& l, const BinTree& r);

BinElem bt_prec(const DecBin& a, const DecBin& b);
BinElem bt_succ(const DecBin& a, const DecBin& b);
BinElem bt_star(const DecBin& a, const DecBin& b);
BinElem bt_prec(const BinElem& a, const BinElem& b);
BinElem bt_succ(const BinElem& a, const BinElem& b);
BinElem bt_star(const BinElem& a, const BinElem& b);

class BinaryHopf {
 public:
    explicit BinaryHopf(Braiding sigma);

    const Braiding& braiding() const { return sigma_; }

    // The braiding of two decorated trees: shapes swap, words block-cross.
    BinPair braid_pair(const DecBin& a, const DecBin& b) const;

    BinPair coproduct(const DecBin& d) const;
    BinPair coproduct(const BinElem& e) const;
    // Independent closed form: sum over subtree cuts, each letter word acted
    // on by the lift of the inverse positioning shuffle.
    BinPair coproduct_cuts(const DecBin& d) const;

    Rational counit(const BinElem& e) const;

    BinElem antipode(const DecBin& d) const;
    BinElem antipode(const BinElem& e) const;

 private:
    Braiding sigma_;
    mutable std::map<std::string, BinPair> coproduct_memo_;
    mutable std::map<std::string, BinElem> antipode_memo_;
};

// A product of trees whose left subtree is the leaf; such trees generate the
// associative algebra freely, via the rewriting
//   Y_1 v_x Y_2 = Y_1 * (| v_x Y_2) - Y_11 v_u (Y_12 * (| v_x Y_2)).
struct GenWord {
    std::vector<DecBin> factors;

    friend bool operator==(const GenWord& a, const GenWord& b) {
        return a.factors == b.factors;
    }
    friend bool operator!=(const GenWord& a, const GenWord& b) {
        return !(a == b);
    }
};

std::string canonical_key(const GenWord& w);

using GenElem = LinComb<GenWord>;

bool is_generator(const DecBin& d);
GenElem generator_decomposition(const DecBin& d);
GenElem generator_decomposition(const BinElem& e);
BinElem evaluate_generators(const GenWord& w);
BinElem evaluate_generators(const GenElem& e);

// The structure map induced on any carrier of the two one-sided products:
// sends the one-vertex tree on letter x to model.gen(x) and each graft to
//   (image of left) succ gen(x) prec (image of right),
// dropping the missing side at a leaf.  Defined for trees of degree >= 1.
template <class Model>
typename Model::Elem universal_dendriform(const Model& model, const DecBin& d) {
    if (d.degree() == 0)
        throw DomainError("the induced map is defined on degree >= 1");
    int m = d.shape.left().degree();
    std::int32_t x = d.word[m];
    typename Model::Elem mid = model.gen(x);
    bool left_unit = d.shape.left().is_leaf();
    bool right_unit = d.shape.right().is_leaf();
    DecBin l{d.shape.left(), TensorWord(d.word.begin(), d.word.begin() + m)};
    DecBin r{d.shape.right(),
             TensorWord(d.word.begin() + m + 1, d.word.end())};
    if (left_unit && right_unit) return mid;
    if (left_unit) return model.prec(mid, universal_dendriform(model, r));
    if (right_unit) return model.succ(universal_dendriform(model, l), mid);
    return model.prec(model.succ(universal_dendriform(model, l), mid),
                      universal_dendriform(model, r));
}

}  // namespace braidtrees
