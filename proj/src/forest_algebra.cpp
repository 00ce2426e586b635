#include <braidtrees/forest_algebra.hpp>

#include <utility>
#include <vector>

namespace braidtrees {

DecForest forest_unit() { return DecForest{Forest(), {}}; }

DecForest forest_vertex(std::int32_t letter) {
    return DecForest{Forest({RootedTree()}), {letter}};
}

DecForest forest_concat(const DecForest& a, const DecForest& b) {
    std::vector<RootedTree> trees = a.shape.trees;
    trees.insert(trees.end(), b.shape.trees.begin(), b.shape.trees.end());
    TensorWord word = a.word;
    word.insert(word.end(), b.word.begin(), b.word.end());
    return DecForest{Forest(std::move(trees)), std::move(word)};
}

ForestElem forest_concat(const ForestElem& a, const ForestElem& b) {
    ForestElem out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            out += x.coeff * y.coeff *
                   ForestElem::single(forest_concat(x.elem, y.elem));
    return out;
}

DecForest bplus(std::int32_t letter, const DecForest& f) {
    TensorWord word{letter};
    word.insert(word.end(), f.word.begin(), f.word.end());
    return DecForest{Forest({bplus(f.shape)}), std::move(word)};
}

ForestElem bplus(std::int32_t letter, const ForestElem& f) {
    ForestElem out;
    for (const auto& term : f.terms())
        out += term.coeff * ForestElem::single(bplus(letter, term.elem));
    return out;
}

namespace {

// First tree of a multi-tree forest and the remaining forest, each with
// its slice of the decoration word.
std::pair<DecForest, DecForest> split_first_tree(const DecForest& d) {
    const RootedTree& head = d.shape.trees.front();
    int k = head.size();
    DecForest first{Forest({head}),
                    TensorWord(d.word.begin(), d.word.begin() + k)};
    DecForest rest{
        Forest(std::vector<RootedTree>(d.shape.trees.begin() + 1,
                                       d.shape.trees.end())),
        TensorWord(d.word.begin() + k, d.word.end())};
    return {std::move(first), std::move(rest)};
}

}  // namespace

ForestHopf::ForestHopf(Braiding sigma) : sigma_(std::move(sigma)) {}

ForestPair ForestHopf::braid_pair(const DecForest& a,
                                  const DecForest& b) const {
    TensorWord word = a.word;
    word.insert(word.end(), b.word.begin(), b.word.end());
    LegRow<Forest> row{{a.shape, b.shape}, std::move(word)};
    const LinComb<LegRow<Forest>> swapped = swap_legs(row, 1, sigma_);
    ForestPair out;
    for (const auto& term : swapped.terms())
        out += term.coeff * ForestPair::single({leg_dec(term.elem, 1),
                                                leg_dec(term.elem, 2)});
    return out;
}

ForestPair ForestHopf::braided_pair_product(const ForestPair& a,
                                            const ForestPair& b) const {
    ForestPair out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) {
            TensorWord word = x.elem.left.word;
            auto append = [&word](const TensorWord& w) {
                word.insert(word.end(), w.begin(), w.end());
            };
            append(x.elem.right.word);
            append(y.elem.left.word);
            append(y.elem.right.word);
            LegRow<Forest> row{{x.elem.left.shape, x.elem.right.shape,
                                y.elem.left.shape, y.elem.right.shape},
                               std::move(word)};
            const LinComb<LegRow<Forest>> swapped =
                swap_legs(row, 2, sigma_);
            for (const auto& sr : swapped.terms())
                out += x.coeff * y.coeff * sr.coeff *
                       ForestPair::single(
                           {forest_concat(leg_dec(sr.elem, 1),
                                          leg_dec(sr.elem, 2)),
                            forest_concat(leg_dec(sr.elem, 3),
                                          leg_dec(sr.elem, 4))});
        }
    return out;
}

ForestPair ForestHopf::coproduct(const DecForest& d) const {
    const std::string key = canonical_key(d);
    auto it = coproduct_memo_.find(key);
    if (it != coproduct_memo_.end()) return it->second;

    ForestPair out;
    if (d.shape.trees.empty()) {
        out = ForestPair::single({forest_unit(), forest_unit()});
    } else if (d.shape.trees.size() == 1) {
        int n = d.degree();
        for (const ForestCut& cut : forest_cuts(d.shape)) {
            Perm w = shuffle_from_positions(n, cut.positions);
            const LinComb<TensorWord> words = sigma_.lift(
                perm_inverse(w), LinComb<TensorWord>::single(d.word));
            int taken = static_cast<int>(cut.positions.size());
            for (const auto& tw : words.terms()) {
                DecForest parts{cut.parts,
                                TensorWord(tw.elem.begin(),
                                           tw.elem.begin() + taken)};
                DecForest rest{cut.quotient,
                               TensorWord(tw.elem.begin() + taken,
                                          tw.elem.end())};
                out += tw.coeff * ForestPair::single({parts, rest});
            }
        }
    } else {
        const auto [first, rest] = split_first_tree(d);
        out = braided_pair_product(coproduct(first), coproduct(rest));
    }
    coproduct_memo_.emplace(key, out);
    return out;
}

ForestPair ForestHopf::coproduct(const ForestElem& e) const {
    ForestPair out;
    for (const auto& term : e.terms()) out += term.coeff * coproduct(term.elem);
    return out;
}

ForestPair ForestHopf::coproduct_cocycle(const DecForest& d) const {
    const std::string key = canonical_key(d);
    auto it = cocycle_memo_.find(key);
    if (it != cocycle_memo_.end()) return it->second;

    ForestPair out;
    if (d.shape.trees.empty()) {
        out = ForestPair::single({forest_unit(), forest_unit()});
    } else if (d.shape.trees.size() == 1) {
        const RootedTree& t = d.shape.trees.front();
        std::int32_t v = d.word.front();
        DecForest children{Forest(t.children()),
                           TensorWord(d.word.begin() + 1, d.word.end())};
        out = ForestPair::single({d, forest_unit()});
        const ForestPair inner = coproduct_cocycle(children);
        for (const auto& term : inner.terms()) {
            TensorWord word{v};
            auto append = [&word](const TensorWord& w) {
                word.insert(word.end(), w.begin(), w.end());
            };
            append(term.elem.left.word);
            append(term.elem.right.word);
            LegRow<Forest> row{{std::nullopt, term.elem.left.shape,
                                term.elem.right.shape},
                               std::move(word)};
            const LinComb<LegRow<Forest>> swapped =
                swap_legs(row, 1, sigma_);
            for (const auto& sr : swapped.terms())
                out += term.coeff * sr.coeff *
                       ForestPair::single(
                           {leg_dec(sr.elem, 1),
                            bplus(leg_letter(sr.elem, 2),
                                  leg_dec(sr.elem, 3))});
        }
    } else {
        const auto [first, rest] = split_first_tree(d);
        out = braided_pair_product(coproduct_cocycle(first),
                                   coproduct_cocycle(rest));
    }
    cocycle_memo_.emplace(key, out);
    return out;
}

ForestPair ForestHopf::coproduct_cocycle(const ForestElem& e) const {
    ForestPair out;
    for (const auto& term : e.terms())
        out += term.coeff * coproduct_cocycle(term.elem);
    return out;
}

Rational ForestHopf::counit(const ForestElem& e) const {
    return e.coeff_of_key("()");
}

ForestElem ForestHopf::antipode(const DecForest& d) const {
    if (d.degree() == 0) return ForestElem::single(d);
    const std::string key = canonical_key(d);
    auto it = antipode_memo_.find(key);
    if (it != antipode_memo_.end()) return it->second;

    ForestElem out = -ForestElem::single(d);
    const ForestPair cop = coproduct(d);
    for (const auto& term : cop.terms()) {
        if (term.elem.left.degree() == 0 || term.elem.right.degree() == 0)
            continue;
        out -= term.coeff * forest_concat(antipode(term.elem.left),
                                          ForestElem::single(
                                              term.elem.right));
    }
    antipode_memo_.emplace(key, out);
    return out;
}

ForestElem ForestHopf::antipode(const ForestElem& e) const {
    ForestElem out;
    for (const auto& term : e.terms()) out += term.coeff * antipode(term.elem);
    return out;
}

ForestElem theta(const DecBin& d) {
    static std::map<std::string, ForestElem> memo;
    const std::string key = canonical_key(d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    ForestElem out;
    if (d.degree() == 0) {
        out = ForestElem::single(forest_unit());
    } else if (is_generator(d)) {
        DecBin right{d.shape.right(),
                     TensorWord(d.word.begin() + 1, d.word.end())};
        out = bplus(d.word.front(), theta(right));
    } else {
        const GenElem decomp = generator_decomposition(d);
        for (const auto& gw : decomp.terms()) {
            ForestElem img = ForestElem::single(forest_unit());
            for (const DecBin& factor : gw.elem.factors)
                img = forest_concat(img, theta(factor));
            out += gw.coeff * img;
        }
    }
    memo.emplace(key, out);
    return out;
}

ForestElem theta(const BinElem& e) {
    ForestElem out;
    for (const auto& term : e.terms()) out += term.coeff * theta(term.elem);
    return out;
}

BinElem theta_inverse(const DecForest& f) {
    static std::map<std::string, BinElem> memo;
    const std::string key = canonical_key(f);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    BinElem out;
    if (f.shape.trees.empty()) {
        out = BinElem::single(bin_unit());
    } else if (f.shape.trees.size() == 1) {
        const RootedTree& t = f.shape.trees.front();
        DecForest children{Forest(t.children()),
                           TensorWord(f.word.begin() + 1, f.word.end())};
        const BinElem inner = theta_inverse(children);
        for (const auto& term : inner.terms())
            out += term.coeff *
                   BinElem::single(
                       bin_graft(bin_unit(), f.word.front(), term.elem));
    } else {
        const auto [first, rest] = split_first_tree(f);
        out = bt_star(theta_inverse(first), theta_inverse(rest));
    }
    memo.emplace(key, out);
    return out;
}

BinElem theta_inverse(const ForestElem& e) {
    BinElem out;
    for (const auto& term : e.terms())
        out += term.coeff * theta_inverse(term.elem);
    return out;
}

}  // namespace braidtrees
