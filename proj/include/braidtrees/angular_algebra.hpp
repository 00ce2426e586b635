#pragma once

#include <braidtrees/binary_algebra.hpp>
#include <braidtrees/braiding.hpp>
#include <braidtrees/decorated.hpp>
#include <braidtrees/legs.hpp>
#include <braidtrees/lincomb.hpp>
#include <braidtrees/trees.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// The algebra of decorated angular trees: the free object for the triple of
// products
//
//   T < T' = T_0 v_1 ... v_k (T_k * T'),
//   T > T' = (T * T_0') v_{k+1} ... v_{k+l} T_l',
//   T . T' = T_0 v_1 ... v_k (T_k * T_0') v_{k+1} ... v_{k+l} T_l',
//
// writing T = T_0 v_1 T_1 ... v_k T_k for the branch decomposition at the
// root, * = < + > + ., and the leaf | for the unit of * (with T < | = T,
// | > T = T, | < T = T > | = T . | = | . T = 0 and a unit on both sides of
// a single operation undefined).  The products never touch the braiding:
// the decoration words simply concatenate.
//
// Together with a braiding of the letter space the graded algebra carries a
// braided Hopf structure.  The braiding crosses whole trees by
// block-crossing their words; the coproduct splits each tree along the
// branches at the root, braids every left coproduct leg leftwards past the
// material before it, then multiplies the collected left legs and regrafts
// the right legs.  The same coproduct has a closed form as a sum over
// branch-closed families of subtrees with braided letter shuffles,
// implemented independently as coproduct_cuts.
//
// A finite-dimensional algebra A on the letter space whose multiplication
// is compatible with the braiding induces a quotient: the middle product of
// two trees meeting leaf-to-leaf at the root multiplies the adjacent angle
// letters through A instead of keeping both.  The quotient is spanned by
// the trees none of whose inner root branches is a leaf, and the projection
// reduce_mod_ideal evaluates a tree through its own structure map into that
// span.

namespace braidtrees {

using DecAng = Dec<AngTree>;
using AngElem = LinComb<DecAng>;
using AngPair = LinComb<Pair2<DecAng, DecAng>>;

DecAng ang_unit();
DecAng ang_vertex(std::int32_t letter);
// Graft branches around angle letters; one more branch than letters, at
// least two branches, words interleaved in reading order.
DecAng ang_graft(const std::vector<DecAng>& branches,
                 const std::vector<std::int32_t>& letters);

// Number of root angles (0 for the leaf).
int root_angles(const DecAng& d);
// The decorated branches at the root, left to right (the leaf has none).
std::vector<DecAng> ang_branches(const DecAng& d);
// The root angle letters, left to right.
std::vector<std::int32_t> ang_angle_letters(const DecAng& d);

AngElem at_prec(const DecAng& a, const DecAng& b);
AngElem at_succ(const DecAng& a, const DecAng& b);
AngElem at_dot(const DecAng& a, const DecAng& b);
AngElem at_star(const DecAng& a, const DecAng& b);
AngElem at_prec(const AngElem& a, const AngElem& b);
AngElem at_succ(const AngElem& a, const AngElem& b);
AngElem at_dot(const AngElem& a, const AngElem& b);
AngElem at_star(const AngElem& a, const AngElem& b);

// One structure constant of a finite-dimensional algebra on the letter
// space: e_i e_j gets the coefficient c on e_k.
struct AlgebraEntry {
    std::int32_t i = 0;
    std::int32_t j = 0;
    std::int32_t k = 0;
    Rational c;
};

// A finite-dimensional associative algebra on the letter space together
// with a braiding the multiplication is compatible with:
//
//   (mul (x) id) sigma_2 sigma_1 = sigma (id (x) mul),
//   (id (x) mul) sigma_1 sigma_2 = sigma (mul (x) id).
//
// Associativity and both compatibilities are verified on every basis
// triple at construction; a violation throws DomainError.
class FiniteAlgebra {
 public:
    FiniteAlgebra(int dim, const std::vector<AlgebraEntry>& entries,
                  Braiding sigma);
    // e_i e_i = e_i and e_i e_j = 0 for i != j.
    static FiniteAlgebra componentwise(int dim, Braiding sigma);
    // The zero multiplication; compatible with every braiding.
    static FiniteAlgebra zero(int dim, Braiding sigma);
    // {"dim": d, "mult": [{"i", "j", "k", "c"}...], "braiding": ...} with
    // rational coefficients as strings.
    static FiniteAlgebra from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    int dim() const { return dim_; }
    const Braiding& braiding() const { return sigma_; }

    // Coefficients of e_i e_j on e_1 .. e_dim.
    const std::vector<Rational>& product(std::int32_t i, std::int32_t j) const;

 private:
    int dim_;
    // table_[(i-1)*dim_ + (j-1)][k-1] = coefficient of e_k in e_i e_j.
    std::vector<std::vector<Rational>> table_;
    Braiding sigma_;
};

// The quotient operations: as above, except that when the middle product
// joins two trees leaf-to-leaf at the root, the two adjacent angle letters
// multiply through the algebra instead of both surviving.  On trees with
// no inner leaf branches these close up, and the evaluation map
// reduce_mod_ideal carries every tree onto that span.
AngElem at_prec_lush(const FiniteAlgebra& alg, const DecAng& a,
                     const DecAng& b);
AngElem at_succ_lush(const FiniteAlgebra& alg, const DecAng& a,
                     const DecAng& b);
AngElem at_dot_lush(const FiniteAlgebra& alg, const DecAng& a,
                    const DecAng& b);
AngElem at_star_lush(const FiniteAlgebra& alg, const DecAng& a,
                     const DecAng& b);
AngElem at_prec_lush(const FiniteAlgebra& alg, const AngElem& a,
                     const AngElem& b);
AngElem at_succ_lush(const FiniteAlgebra& alg, const AngElem& a,
                     const AngElem& b);
AngElem at_dot_lush(const FiniteAlgebra& alg, const AngElem& a,
                    const AngElem& b);
AngElem at_star_lush(const FiniteAlgebra& alg, const AngElem& a,
                     const AngElem& b);

// The projection onto the span of trees without inner leaf root branches:
// evaluate the tree through its structure map, sending each letter to its
// one-vertex tree and each operation to its quotient counterpart.  It is
// idempotent, restricts to the identity on the span, and intertwines the
// free operations with the quotient ones.
AngElem reduce_mod_ideal(const FiniteAlgebra& alg, const DecAng& d);
AngElem reduce_mod_ideal(const FiniteAlgebra& alg, const AngElem& e);

// Rank of (id - reduce_mod_ideal) on the decorated basis in the given
// degree: the number of independent directions the projection kills.
int ideal_dimension(const FiniteAlgebra& alg, int degree);

class AngularHopf {
 public:
    explicit AngularHopf(Braiding sigma);

    const Braiding& braiding() const { return sigma_; }

    // The braiding of two decorated trees: shapes swap, words block-cross.
    AngPair braid_pair(const DecAng& a, const DecAng& b) const;

    AngPair coproduct(const DecAng& d) const;
    AngPair coproduct(const AngElem& e) const;
    // Independent closed form: sum over branch-closed subtree families,
    // each letter word acted on by the lift of the inverse positioning
    // shuffle, the extracted parts multiplied left to right.
    AngPair coproduct_cuts(const DecAng& d) const;

    Rational counit(const AngElem& e) const;

    AngElem antipode(const DecAng& d) const;
    AngElem antipode(const AngElem& e) const;

 private:
    Braiding sigma_;
    mutable std::map<std::string, AngPair> coproduct_memo_;
    mutable std::map<std::string, AngElem> antipode_memo_;
};

// The structure map induced on any carrier of the three products: writing
// T = T_0 v_1 T_1 ... v_k T_k, the middle factor is
//
//   k = 1:  gen(v_1),
//   k = 2:  (gen(v_1) prec image(T_1)) dot gen(v_2),
//   k > 2:  (gen(v_1) dot image(T_1 v_2 ... v_{k-1} T_{k-1})) dot gen(v_k),
//
// then the image of T_0 is applied with succ on the left and the image of
// T_k with prec on the right, dropping the side when the branch is a leaf
// (as is the prec in the k = 2 factor when T_1 is a leaf).  Defined for
// trees of degree >= 1.
template <class Model>
typename Model::Elem universal_tridendriform(const Model& model,
                                             const DecAng& d) {
    if (d.degree() == 0)
        throw DomainError("the induced map is defined on degree >= 1");
    const std::vector<DecAng> branches = ang_branches(d);
    const std::vector<std::int32_t> letters = ang_angle_letters(d);
    const int k = static_cast<int>(letters.size());
    typename Model::Elem mid;
    if (k == 1) {
        mid = model.gen(letters[0]);
    } else if (k == 2) {
        mid = model.gen(letters[0]);
        if (!branches[1].shape.is_leaf())
            mid = model.prec(mid, universal_tridendriform(model, branches[1]));
        mid = model.dot(mid, model.gen(letters[1]));
    } else {
        const std::vector<DecAng> inner(branches.begin() + 1,
                                        branches.end() - 1);
        const std::vector<std::int32_t> inner_letters(letters.begin() + 1,
                                                      letters.end() - 1);
        const DecAng core = ang_graft(inner, inner_letters);
        mid = model.dot(model.dot(model.gen(letters.front()),
                                  universal_tridendriform(model, core)),
                        model.gen(letters.back()));
    }
    if (!branches.front().shape.is_leaf())
        mid = model.succ(universal_tridendriform(model, branches.front()),
                         mid);
    if (!branches.back().shape.is_leaf())
        mid = model.prec(mid, universal_tridendriform(model, branches.back()));
    return mid;
}

}  // namespace braidtrees
