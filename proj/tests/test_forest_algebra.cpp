#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <braidtrees/forest_algebra.hpp>

#include <string>
#include <vector>

using namespace braidtrees;

namespace {

DecForest fdec(const std::string& text) {
    return parse_decorated_forest(text);
}
ForestElem felem(const std::string& text) {
    return ForestElem::single(fdec(text));
}
ForestPair fpair(const std::string& l, const std::string& r) {
    return ForestPair::single({fdec(l), fdec(r)});
}

Braiding q_plane() {
    std::vector<BraidingEntry> entries = {
        {1, 1, {{Rational(2), 1, 1}}},
        {2, 2, {{Rational(2), 2, 2}}},
        {1, 2, {{Rational(1), 2, 1}}},
        {2, 1, {{Rational(1), 1, 2}, {Rational(3, 2), 2, 1}}},
    };
    return Braiding::explicit_entries(2, entries);
}

// All decorated forests of the given degree over letters 1..dim.
std::vector<DecForest> all_forests(int degree, int dim) {
    std::vector<DecForest> out;
    for (const Forest& shape : forest_shapes(degree)) {
        TensorWord word(degree, 1);
        while (true) {
            out.emplace_back(shape, word);
            int i = degree - 1;
            while (i >= 0 && word[i] == dim) word[i--] = 1;
            if (i < 0) break;
            ++word[i];
        }
        if (degree == 0) break;
    }
    return out;
}

std::vector<Dec<BinTree>> all_binary(int degree, int dim) {
    std::vector<Dec<BinTree>> out;
    for (const BinTree& shape : binary_shapes(degree)) {
        TensorWord word(degree, 1);
        while (true) {
            out.emplace_back(shape, word);
            int i = degree - 1;
            while (i >= 0 && word[i] == dim) word[i--] = 1;
            if (i < 0) break;
            ++word[i];
        }
        if (degree == 0) break;
    }
    return out;
}

}  // namespace

TEST_CASE("concatenation is unital, associative, and adds degrees") {
    DecForest u = forest_unit();
    CHECK(canonical_key(u) == "()");
    CHECK(u.degree() == 0);

    DecForest a = fdec("e1(e2)");
    DecForest b = fdec("e3");
    CHECK(forest_concat(u, a) == a);
    CHECK(forest_concat(a, u) == a);

    DecForest ab = forest_concat(a, b);
    CHECK(canonical_key(ab) == "e1(e2) e3");
    CHECK(ab.degree() == 3);
    CHECK(ab.word == TensorWord{1, 2, 3});

    DecForest c = fdec("e2 e1");
    CHECK(forest_concat(forest_concat(a, b), c) ==
          forest_concat(a, forest_concat(b, c)));

    CHECK(forest_vertex(7) == fdec("e7"));
    CHECK(forest_concat(forest_vertex(1), forest_vertex(2)) == fdec("e1 e2"));

    // Linear extension is bilinear.
    ForestElem s = felem("e1") + felem("e2");
    CHECK(forest_concat(s, felem("e3")) ==
          felem("e1 e3") + felem("e2 e3"));
}

TEST_CASE("grafting a forest under a new root puts the root letter first") {
    CHECK(bplus(4, forest_unit()) == fdec("e4"));
    CHECK(bplus(1, fdec("e2 e3")) == fdec("e1(e2 e3)"));
    CHECK(bplus(1, fdec("e2(e3)")) == fdec("e1(e2(e3))"));
    ForestElem two = felem("e2") + felem("e3");
    CHECK(bplus(1, two) == felem("e1(e2)") + felem("e1(e3)"));
}

TEST_CASE("forest braiding crosses whole decoration blocks") {
    ForestHopf flip(Braiding::flip(3));
    // An empty factor crosses anything without effect.
    CHECK(flip.braid_pair(forest_unit(), fdec("e1(e2)")) ==
          fpair("e1(e2)", "()"));
    CHECK(flip.braid_pair(fdec("e1(e2)"), forest_unit()) ==
          fpair("()", "e1(e2)"));
    // Flip moves the right block in front of the left block.
    CHECK(flip.braid_pair(fdec("e1(e2)"), fdec("e3")) ==
          fpair("e3", "e1(e2)"));
    CHECK(flip.braid_pair(fdec("e1 e2"), fdec("e3(e1)")) ==
          fpair("e3(e1)", "e1 e2"));

    ForestHopf qp(q_plane());
    CHECK(qp.braid_pair(fdec("e2"), fdec("e1")) ==
          fpair("e1", "e2") + Rational(3, 2) * fpair("e2", "e1"));
}

TEST_CASE("braided algebra axioms hold for concatenation") {
    // (mu (x) id) sigma_2 sigma_1 = sigma (id (x) mu) and the mirror
    // law, checked through leg rows against the direct braiding of a
    // concatenated pair.
    std::vector<std::vector<std::string>> triples = {
        {"e1", "e2", "e1(e1)"},
        {"e2(e1)", "e1", "e2"},
        {"e1 e2", "e2", "e1"},
    };
    for (const Braiding& sigma :
         {Braiding::flip(2), Braiding::diagonal_uniform(2, Rational(2)),
          q_plane()}) {
        ForestHopf hopf(sigma);
        for (const auto& t : triples) {
            DecForest a = fdec(t[0]), b = fdec(t[1]), c = fdec(t[2]);
            TensorWord word = a.word;
            word.insert(word.end(), b.word.begin(), b.word.end());
            word.insert(word.end(), c.word.begin(), c.word.end());
            LegRow<Forest> row{{a.shape, b.shape, c.shape}, word};

            // a across (b.c): swap at 1 then at 2, concat legs 2,3.
            ForestPair lhs1;
            const auto rows1 = apply_schedule(row, {1, 2}, sigma);
            for (const auto& term : rows1.terms())
                lhs1 += term.coeff *
                        ForestPair::single({forest_concat(
                                                leg_dec(term.elem, 1),
                                                leg_dec(term.elem, 2)),
                                            leg_dec(term.elem, 3)});
            CHECK(lhs1 == hopf.braid_pair(a, forest_concat(b, c)));

            // (a.b) across c: swap at 2 then at 1, concat legs 2,3.
            ForestPair lhs2;
            const auto rows2 = apply_schedule(row, {2, 1}, sigma);
            for (const auto& term : rows2.terms())
                lhs2 += term.coeff *
                        ForestPair::single({leg_dec(term.elem, 1),
                                            forest_concat(
                                                leg_dec(term.elem, 2),
                                                leg_dec(term.elem, 3))});
            CHECK(lhs2 == hopf.braid_pair(forest_concat(a, b), c));
        }
    }
}

TEST_CASE("five-vertex coproduct expands to the eleven subforest cuts") {
    ForestHopf flip(Braiding::flip(5));
    ForestPair expect =
        fpair("e1(e2 e3(e4 e5))", "()") +
        fpair("e2 e3(e4 e5)", "e1") +
        fpair("e3(e4 e5)", "e1(e2)") +
        fpair("e2 e4 e5", "e1(e3)") +
        fpair("e4 e5", "e1(e2 e3)") +
        fpair("e2 e4", "e1(e3(e5))") +
        fpair("e2 e5", "e1(e3(e4))") +
        fpair("e2", "e1(e3(e4 e5))") +
        fpair("e4", "e1(e2 e3(e5))") +
        fpair("e5", "e1(e2 e3(e4))") +
        fpair("()", "e1(e2 e3(e4 e5))");
    DecForest t = fdec("e1(e2 e3(e4 e5))");
    CHECK(flip.coproduct(t) == expect);
    CHECK(flip.coproduct_cocycle(t) == expect);
}

TEST_CASE("single vertices are primitive") {
    for (const Braiding& sigma :
         {Braiding::flip(2), Braiding::diagonal_uniform(2, Rational(2)),
          q_plane()}) {
        ForestHopf hopf(sigma);
        for (int v : {1, 2}) {
            DecForest dot = forest_vertex(v);
            ForestPair expect =
                ForestPair::single({dot, forest_unit()}) +
                ForestPair::single({forest_unit(), dot});
            CHECK(hopf.coproduct(dot) == expect);
        }
        CHECK(hopf.coproduct(forest_unit()) ==
              ForestPair::single({forest_unit(), forest_unit()}));
    }
}

TEST_CASE("braided coproduct of a ladder picks up the diagonal factor") {
    ForestHopf diag(Braiding::diagonal_uniform(2, Rational(2)));
    ForestPair expect = fpair("e1(e2)", "()") +
                        Rational(2) * fpair("e2", "e1") +
                        fpair("()", "e1(e2)");
    CHECK(diag.coproduct(fdec("e1(e2)")) == expect);
    CHECK(diag.coproduct_cocycle(fdec("e1(e2)")) == expect);
}

TEST_CASE("braided coproduct of a ladder expands under the two-letter table") {
    // The crossing of e2 over e1 contributes two summands.
    ForestHopf qp(q_plane());
    ForestPair expect = fpair("e2(e1)", "()") +
                        fpair("e1", "e2") +
                        Rational(3, 2) * fpair("e2", "e1") +
                        fpair("()", "e2(e1)");
    CHECK(qp.coproduct(fdec("e2(e1)")) == expect);
    CHECK(qp.coproduct_cocycle(fdec("e2(e1)")) == expect);
}

TEST_CASE("cut and cocycle coproduct routes agree on every small forest") {
    std::vector<Braiding> braidings = {
        Braiding::flip(2), Braiding::diagonal_uniform(2, Rational(2)),
        q_plane()};
    for (const Braiding& sigma : braidings) {
        ForestHopf hopf(sigma);
        for (int degree = 0; degree <= 3; ++degree)
            for (const DecForest& f : all_forests(degree, 2))
                CHECK(hopf.coproduct(f) == hopf.coproduct_cocycle(f));
    }
}

TEST_CASE("whole-forest cut lifting matches the split-and-braid coproduct") {
    // Lifting the combined shuffle over the full decoration word of a
    // multi-tree forest reproduces the coproduct assembled tree by tree.
    std::vector<Braiding> braidings = {
        Braiding::flip(2), Braiding::diagonal_uniform(2, Rational(2)),
        q_plane()};
    for (const Braiding& sigma : braidings) {
        ForestHopf hopf(sigma);
        for (int degree = 0; degree <= 3; ++degree)
            for (const DecForest& f : all_forests(degree, 2)) {
                int n = f.degree();
                ForestPair direct;
                for (const ForestCut& cut : forest_cuts(f.shape)) {
                    Perm w = shuffle_from_positions(n, cut.positions);
                    const LinComb<TensorWord> words = sigma.lift(
                        perm_inverse(w),
                        LinComb<TensorWord>::single(f.word));
                    int taken = static_cast<int>(cut.positions.size());
                    for (const auto& tw : words.terms()) {
                        DecForest parts{
                            cut.parts,
                            TensorWord(tw.elem.begin(),
                                       tw.elem.begin() + taken)};
                        DecForest rest{
                            cut.quotient,
                            TensorWord(tw.elem.begin() + taken,
                                       tw.elem.end())};
                        direct += tw.coeff *
                                  ForestPair::single({parts, rest});
                    }
                }
                CHECK(direct == hopf.coproduct(f));
            }
    }
}

TEST_CASE("cut positions are increasing and keep the canonical order") {
    // Decorating a shape with the identity word 1..n, every cut of the
    // flip coproduct hands the removed part exactly the letters at its
    // positions, in increasing position order.
    for (int degree = 1; degree <= 4; ++degree)
        for (const Forest& shape : forest_shapes(degree)) {
            for (const ForestCut& cut : forest_cuts(shape)) {
                for (std::size_t i = 1; i < cut.positions.size(); ++i)
                    CHECK(cut.positions[i - 1] < cut.positions[i]);
                CHECK(static_cast<int>(cut.positions.size()) ==
                      slot_count(cut.parts));
            }
            TensorWord word(degree);
            for (int i = 0; i < degree; ++i) word[i] = i + 1;
            ForestHopf flip(Braiding::flip(degree));
            const ForestPair cop = flip.coproduct(DecForest{shape, word});
            for (const auto& term : cop.terms()) {
                const TensorWord& left = term.elem.left.word;
                for (std::size_t i = 1; i < left.size(); ++i)
                    CHECK(left[i - 1] < left[i]);
                const TensorWord& right = term.elem.right.word;
                for (std::size_t i = 1; i < right.size(); ++i)
                    CHECK(right[i - 1] < right[i]);
            }
        }
}

TEST_CASE("counit kills everything except the empty forest") {
    ForestHopf flip(Braiding::flip(2));
    CHECK(flip.counit(ForestElem::single(forest_unit())) == Rational(1));
    CHECK(flip.counit(felem("e1")) == Rational(0));
    CHECK(flip.counit(Rational(5) * ForestElem::single(forest_unit()) -
                      felem("e1(e2)")) == Rational(5));
}

TEST_CASE("coproduct satisfies the counit laws") {
    std::vector<Braiding> braidings = {Braiding::flip(2), q_plane()};
    for (const Braiding& sigma : braidings) {
        ForestHopf hopf(sigma);
        for (int degree = 0; degree <= 3; ++degree)
            for (const DecForest& f : all_forests(degree, 2)) {
                const ForestPair cop = hopf.coproduct(f);
                ForestElem left, right;
                for (const auto& term : cop.terms()) {
                    left += term.coeff *
                            hopf.counit(ForestElem::single(term.elem.left)) *
                            ForestElem::single(term.elem.right);
                    right += term.coeff *
                             hopf.counit(
                                 ForestElem::single(term.elem.right)) *
                             ForestElem::single(term.elem.left);
                }
                CHECK(left == ForestElem::single(f));
                CHECK(right == ForestElem::single(f));
            }
    }
}

TEST_CASE("coproduct is coassociative") {
    using Triple = LinComb<std::string>;
    std::vector<Braiding> braidings = {Braiding::flip(2), q_plane()};
    for (const Braiding& sigma : braidings) {
        ForestHopf hopf(sigma);
        for (int degree = 0; degree <= 3; ++degree)
            for (const DecForest& f : all_forests(degree, 2)) {
                Triple lhs, rhs;
                const ForestPair cop = hopf.coproduct(f);
                for (const auto& term : cop.terms()) {
                    const ForestPair again_l =
                        hopf.coproduct(term.elem.left);
                    for (const auto& inner : again_l.terms())
                        lhs += term.coeff * inner.coeff *
                               Triple::single(
                                   canonical_key(inner.elem.left) + " (x) " +
                                   canonical_key(inner.elem.right) +
                                   " (x) " +
                                   canonical_key(term.elem.right));
                    const ForestPair again_r =
                        hopf.coproduct(term.elem.right);
                    for (const auto& inner : again_r.terms())
                        rhs += term.coeff * inner.coeff *
                               Triple::single(
                                   canonical_key(term.elem.left) + " (x) " +
                                   canonical_key(inner.elem.left) +
                                   " (x) " +
                                   canonical_key(inner.elem.right));
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("coproduct is a braided algebra morphism for concatenation") {
    // coproduct(x.y) = (concat (x) concat) applied after braiding the
    // two middle tensor factors.
    std::vector<std::pair<std::string, std::string>> cases = {
        {"e1", "e2"},
        {"e1(e2)", "e1"},
        {"e2 e1", "e2(e2)"},
        {"e1(e1 e2)", "e2"},
    };
    std::vector<Braiding> braidings = {Braiding::flip(2), q_plane()};
    for (const Braiding& sigma : braidings) {
        ForestHopf hopf(sigma);
        for (const auto& [xs, ys] : cases) {
            DecForest x = fdec(xs), y = fdec(ys);
            const ForestPair cop_x = hopf.coproduct(x);
            const ForestPair cop_y = hopf.coproduct(y);
            ForestPair expect;
            for (const auto& tx : cop_x.terms())
                for (const auto& ty : cop_y.terms()) {
                    TensorWord word = tx.elem.left.word;
                    auto append = [&word](const TensorWord& w) {
                        word.insert(word.end(), w.begin(), w.end());
                    };
                    append(tx.elem.right.word);
                    append(ty.elem.left.word);
                    append(ty.elem.right.word);
                    LegRow<Forest> row{{tx.elem.left.shape,
                                        tx.elem.right.shape,
                                        ty.elem.left.shape,
                                        ty.elem.right.shape},
                                       word};
                    const auto swapped = swap_legs(row, 2, sigma);
                    for (const auto& sr : swapped.terms())
                        expect += tx.coeff * ty.coeff * sr.coeff *
                                  ForestPair::single(
                                      {forest_concat(leg_dec(sr.elem, 1),
                                                     leg_dec(sr.elem, 2)),
                                       forest_concat(leg_dec(sr.elem, 3),
                                                     leg_dec(sr.elem, 4))});
                }
            CHECK(hopf.coproduct(forest_concat(x, y)) == expect);
        }
    }
}

TEST_CASE("grafting obeys the twisted cocycle identity") {
    // coproduct(B+_v(F)) = B+_v(F) (x) () + (id (x) B+) after crossing
    // the new root letter over the left coproduct leg.
    std::vector<Braiding> braidings = {
        Braiding::flip(2), Braiding::diagonal_uniform(2, Rational(2)),
        q_plane()};
    for (const Braiding& sigma : braidings) {
        ForestHopf hopf(sigma);
        for (int degree = 0; degree <= 2; ++degree)
            for (const DecForest& f : all_forests(degree, 2))
                for (int v : {1, 2}) {
                    DecForest grafted = bplus(v, f);
                    ForestPair expect = ForestPair::single(
                        {grafted, forest_unit()});
                    const ForestPair cop = hopf.coproduct(f);
                    for (const auto& term : cop.terms()) {
                        TensorWord word{v};
                        auto append = [&word](const TensorWord& w) {
                            word.insert(word.end(), w.begin(), w.end());
                        };
                        append(term.elem.left.word);
                        append(term.elem.right.word);
                        LegRow<Forest> row{{std::nullopt,
                                            term.elem.left.shape,
                                            term.elem.right.shape},
                                           word};
                        const auto swapped = swap_legs(row, 1, sigma);
                        for (const auto& sr : swapped.terms())
                            expect += term.coeff * sr.coeff *
                                      ForestPair::single(
                                          {leg_dec(sr.elem, 1),
                                           bplus(leg_letter(sr.elem, 2),
                                                 leg_dec(sr.elem, 3))});
                    }
                    CHECK(hopf.coproduct(grafted) == expect);
                }
    }
}

TEST_CASE("braiding a grafted factor routes the root letter correctly") {
    // Crossing B+_v(F) over F' equals crossing v and F over F'
    // separately and regrafting, and symmetrically from the right.
    std::vector<std::pair<std::string, std::string>> cases = {
        {"()", "e1"},
        {"e2", "e1"},
        {"e1 e2", "e2(e1)"},
        {"e2(e1)", "e1 e1"},
    };
    std::vector<Braiding> braidings = {Braiding::flip(2), q_plane()};
    for (const Braiding& sigma : braidings) {
        ForestHopf hopf(sigma);
        for (const auto& [fs, gs] : cases)
            for (int v : {1, 2}) {
                DecForest f = fdec(fs), g = fdec(gs);

                // Left law: graft on the left factor.
                {
                    TensorWord word{v};
                    auto append = [&word](const TensorWord& w) {
                        word.insert(word.end(), w.begin(), w.end());
                    };
                    append(f.word);
                    append(g.word);
                    LegRow<Forest> row{{std::nullopt, f.shape, g.shape},
                                       word};
                    const auto rows = apply_schedule(row, {2, 1}, sigma);
                    ForestPair expect;
                    for (const auto& term : rows.terms())
                        expect += term.coeff *
                                  ForestPair::single(
                                      {leg_dec(term.elem, 1),
                                       bplus(leg_letter(term.elem, 2),
                                             leg_dec(term.elem, 3))});
                    CHECK(hopf.braid_pair(bplus(v, f), g) == expect);
                }

                // Right law: graft on the right factor.
                {
                    TensorWord word = f.word;
                    word.push_back(v);
                    word.insert(word.end(), g.word.begin(), g.word.end());
                    LegRow<Forest> row{{f.shape, std::nullopt, g.shape},
                                       word};
                    const auto rows = apply_schedule(row, {1, 2}, sigma);
                    ForestPair expect;
                    for (const auto& term : rows.terms())
                        expect += term.coeff *
                                  ForestPair::single(
                                      {bplus(leg_letter(term.elem, 1),
                                             leg_dec(term.elem, 2)),
                                       leg_dec(term.elem, 3)});
                    CHECK(hopf.braid_pair(f, bplus(v, g)) == expect);
                }
            }
    }
}

TEST_CASE("antipode values on small forests") {
    ForestHopf flip(Braiding::flip(2));
    CHECK(flip.antipode(forest_unit()) ==
          ForestElem::single(forest_unit()));
    CHECK(flip.antipode(fdec("e1")) == -felem("e1"));
    CHECK(flip.antipode(fdec("e1(e2)")) ==
          felem("e2 e1") - felem("e1(e2)"));
    CHECK(flip.antipode(fdec("e1 e2")) == felem("e2 e1"));

    ForestHopf diag(Braiding::diagonal_uniform(2, Rational(2)));
    CHECK(diag.antipode(fdec("e1")) == -felem("e1"));
    CHECK(diag.antipode(fdec("e1(e2)")) ==
          Rational(2) * felem("e2 e1") - felem("e1(e2)"));
}

TEST_CASE("antipode is a two-sided convolution inverse") {
    std::vector<Braiding> braidings = {Braiding::flip(2), q_plane()};
    for (const Braiding& sigma : braidings) {
        ForestHopf hopf(sigma);
        for (int degree = 0; degree <= 3; ++degree)
            for (const DecForest& f : all_forests(degree, 2)) {
                const ForestPair cop = hopf.coproduct(f);
                ForestElem left, right;
                for (const auto& term : cop.terms()) {
                    left += term.coeff *
                            forest_concat(
                                hopf.antipode(term.elem.left),
                                ForestElem::single(term.elem.right));
                    right += term.coeff *
                             forest_concat(
                                 ForestElem::single(term.elem.left),
                                 hopf.antipode(term.elem.right));
                }
                ForestElem expect =
                    hopf.counit(ForestElem::single(f)) *
                    ForestElem::single(forest_unit());
                CHECK(left == expect);
                CHECK(right == expect);
            }
    }
}

TEST_CASE("theta maps the worked three-vertex tree to two forests") {
    BinElem y = BinElem::single(parse_decorated_binary(
        "((| e1 (| e2 |)) e3 |)"));
    CHECK(theta(y) == felem("e1(e2) e3") - felem("e1(e2 e3)"));
}

TEST_CASE("theta sends grafted generators through the root operator") {
    CHECK(theta(parse_decorated_binary("|")) ==
          ForestElem::single(forest_unit()));
    CHECK(theta(parse_decorated_binary("(| e4 |)")) == felem("e4"));
    CHECK(theta(parse_decorated_binary("(| e1 (| e2 |))")) ==
          felem("e1(e2)"));
    CHECK(theta(parse_decorated_binary("((| e2 |) e1 |)")) ==
          felem("e2 e1") - felem("e2(e1)"));
}

TEST_CASE("theta keeps every decoration word in canonical order") {
    for (int degree = 1; degree <= 4; ++degree) {
        TensorWord word(degree);
        for (int i = 0; i < degree; ++i) word[i] = i + 1;
        for (const BinTree& shape : binary_shapes(degree)) {
            const ForestElem img = theta(Dec<BinTree>{shape, word});
            for (const auto& term : img.terms()) {
                CHECK(term.elem.word == word);
                CHECK(term.elem.degree() == degree);
            }
        }
    }
}

TEST_CASE("theta and its inverse are mutually inverse") {
    for (int degree = 0; degree <= 3; ++degree) {
        for (const Dec<BinTree>& d : all_binary(degree, 2))
            CHECK(theta_inverse(theta(d)) == BinElem::single(d));
        for (const DecForest& f : all_forests(degree, 2))
            CHECK(theta(theta_inverse(f)) == ForestElem::single(f));
    }
    // Shape coverage one degree higher with a single letter.
    for (const Dec<BinTree>& d : all_binary(4, 1))
        CHECK(theta_inverse(theta(d)) == BinElem::single(d));
    for (const DecForest& f : all_forests(4, 1))
        CHECK(theta(theta_inverse(f)) == ForestElem::single(f));
}

TEST_CASE("theta turns the tree product into concatenation") {
    std::vector<std::pair<std::string, std::string>> cases = {
        {"(| e1 |)", "(| e2 |)"},
        {"(| e1 (| e2 |))", "(| e3 |)"},
        {"((| e1 |) e2 |)", "(| e3 (| e4 |))"},
    };
    for (const auto& [xs, ys] : cases) {
        DecBin x = parse_decorated_binary(xs);
        DecBin y = parse_decorated_binary(ys);
        CHECK(theta(bt_star(x, y)) ==
              forest_concat(theta(x), theta(y)));
    }
}

TEST_CASE("theta intertwines the braidings") {
    std::vector<std::pair<std::string, std::string>> cases = {
        {"(| e1 |)", "(| e2 |)"},
        {"(| e2 (| e1 |))", "(| e2 |)"},
        {"((| e1 |) e2 |)", "(| e1 (| e2 |))"},
    };
    std::vector<Braiding> braidings = {Braiding::flip(2), q_plane()};
    for (const Braiding& sigma : braidings) {
        BinaryHopf bt(sigma);
        ForestHopf rt(sigma);
        for (const auto& [xs, ys] : cases) {
            DecBin x = parse_decorated_binary(xs);
            DecBin y = parse_decorated_binary(ys);
            const BinPair before = bt.braid_pair(x, y);
            ForestPair lhs;
            for (const auto& term : before.terms()) {
                const ForestElem il = theta(term.elem.left);
                const ForestElem ir = theta(term.elem.right);
                for (const auto& l : il.terms())
                    for (const auto& r : ir.terms())
                        lhs += term.coeff * l.coeff * r.coeff *
                               ForestPair::single({l.elem, r.elem});
            }
            ForestPair rhs;
            const ForestElem ix = theta(x);
            const ForestElem iy = theta(y);
            for (const auto& l : ix.terms())
                for (const auto& r : iy.terms())
                    rhs += l.coeff * r.coeff *
                           rt.braid_pair(l.elem, r.elem);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("theta intertwines the coproducts and antipodes") {
    std::vector<Braiding> braidings = {Braiding::flip(2), q_plane()};
    for (const Braiding& sigma : braidings) {
        BinaryHopf bt(sigma);
        ForestHopf rt(sigma);
        for (int degree = 0; degree <= 3; ++degree)
            for (const Dec<BinTree>& d : all_binary(degree, 2)) {
                const BinPair cop = bt.coproduct(d);
                ForestPair lhs;
                for (const auto& term : cop.terms()) {
                    const ForestElem il = theta(term.elem.left);
                    const ForestElem ir = theta(term.elem.right);
                    for (const auto& l : il.terms())
                        for (const auto& r : ir.terms())
                            lhs += term.coeff * l.coeff * r.coeff *
                                   ForestPair::single({l.elem, r.elem});
                }
                const ForestElem img = theta(d);
                CHECK(lhs == rt.coproduct(img));
                CHECK(theta(bt.antipode(d)) == rt.antipode(img));
            }
    }
}
