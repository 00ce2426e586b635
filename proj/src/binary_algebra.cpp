#include <braidtrees/binary_algebra.hpp>

#include <braidtrees/permutation.hpp>

#include <utility>

namespace braidtrees {

namespace {

// In-order split of a decorated tree with at least one vertex.
struct Split {
    DecBin left;
    std::int32_t letter;
    DecBin right;
};

Split split_root(const DecBin& d) {
    if (d.degree() == 0) throw DomainError("cannot split the leaf");
    int m = d.shape.left().degree();
    return Split{
        DecBin{d.shape.left(), TensorWord(d.word.begin(), d.word.begin() + m)},
        d.word[m],
        DecBin{d.shape.right(),
               TensorWord(d.word.begin() + m + 1, d.word.end())}};
}

BinElem decorate_shapes(const LinComb<BinTree>& shapes, const TensorWord& word) {
    BinElem out;
    for (const auto& t : shapes.terms())
        out += t.coeff * BinElem::single(DecBin{t.elem, word});
    return out;
}

}  // namespace

DecBin bin_unit() { return DecBin{BinTree{}, {}}; }

DecBin bin_vertex(std::int32_t letter) {
    return DecBin{graft(BinTree{}, BinTree{}), {letter}};
}

DecBin bin_graft(const DecBin& l, std::int32_t letter, const DecBin& r) {
    TensorWord word = l.word;
    word.push_back(letter);
    word.insert(word.end(), r.word.begin(), r.word.end());
    return DecBin{graft(l.shape, r.shape), std::move(word)};
}

LinComb<BinTree> shape_prec(const BinTree& l, const BinTree& r) {
    if (r.is_leaf()) {
        if (l.is_leaf())
            throw DomainError("| < | is undefined");
        return LinComb<BinTree>::single(l);
    }
    if (l.is_leaf()) return LinComb<BinTree>::zero();
    static std::map<std::pair<std::string, std::string>, LinComb<BinTree>> memo;
    auto key = std::make_pair(canonical_key(l), canonical_key(r));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    LinComb<BinTree> out;
    const LinComb<BinTree> tail = shape_star(l.right(), r);
    for (const auto& t : tail.terms())
        out += t.coeff * LinComb<BinTree>::single(graft(l.left(), t.elem));
    memo.emplace(std::move(key), out);
    return out;
}

LinComb<BinTree> shape_succ(const BinTree& l, const BinTree& r) {
    if (l.is_leaf()) {
        if (r.is_leaf())
            throw DomainError("| > | is undefined");
        return LinComb<BinTree>::single(r);
    }
    if (r.is_leaf()) return LinComb<BinTree>::zero();
    static std::map<std::pair<std::string, std::string>, LinComb<BinTree>> memo;
    auto key = std::make_pair(canonical_key(l), canonical_key(r));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    LinComb<BinTree> out;
    const LinComb<BinTree> head = shape_star(l, r.left());
    for (const auto& t : head.terms())
        out += t.coeff * LinComb<BinTree>::single(graft(t.elem, r.right()));
    memo.emplace(std::move(key), out);
    return out;
}

LinComb<BinTree> shape_star(const BinTree& l, const BinTree& r) {
    if (l.is_leaf()) return LinComb<BinTree>::single(r);
    if (r.is_leaf()) return LinComb<BinTree>::single(l);
    return shape_prec(l, r) + shape_succ(l, r);
}

BinElem bt_prec(const DecBin& a, const DecBin& b) {
    return decorate_shapes(shape_prec(a.shape, b.shape),
                           word_concat(a.word, b.word));
}

BinElem bt_succ(const DecBin& a, const DecBin& b) {
    return decorate_shapes(shape_succ(a.shape, b.shape),
                           word_concat(a.word, b.word));
}

BinElem bt_star(const DecBin& a, const DecBin& b) {
    return decorate_shapes(shape_star(a.shape, b.shape),
                           word_concat(a.word, b.word));
}

namespace {

template <class Op>
BinElem bilinear(const BinElem& a, const BinElem& b, Op&& op) {
    BinElem out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out += ta.coeff * tb.coeff * op(ta.elem, tb.elem);
    return out;
}

}  // namespace

BinElem bt_prec(const BinElem& a, const BinElem& b) {
    return bilinear(a, b, [](const DecBin& x, const DecBin& y) {
        return bt_prec(x, y);
    });
}

BinElem bt_succ(const BinElem& a, const BinElem& b) {
    return bilinear(a, b, [](const DecBin& x, const DecBin& y) {
        return bt_succ(x, y);
    });
}

BinElem bt_star(const BinElem& a, const BinElem& b) {
    return bilinear(a, b, [](const DecBin& x, const DecBin& y) {
        return bt_star(x, y);
    });
}

BinaryHopf::BinaryHopf(Braiding sigma) : sigma_(std::move(sigma)) {}

BinPair BinaryHopf::braid_pair(const DecBin& a, const DecBin& b) const {
    LegRow<BinTree> row{{a.shape, b.shape}, word_concat(a.word, b.word)};
    BinPair out;
    const LinComb<LegRow<BinTree>> swapped = swap_legs(row, 1, sigma_);
    for (const auto& t : swapped.terms())
        out += t.coeff * BinPair::single({leg_dec(t.elem, 1),
                                          leg_dec(t.elem, 2)});
    return out;
}

BinPair BinaryHopf::coproduct(const DecBin& d) const {
    if (d.degree() == 0)
        return BinPair::single({bin_unit(), bin_unit()});
    std::string key = canonical_key(d);
    auto it = coproduct_memo_.find(key);
    if (it != coproduct_memo_.end()) return it->second;

    Split s = split_root(d);
    BinPair left_cop = coproduct(s.left);
    BinPair right_cop = coproduct(s.right);

    BinPair out = BinPair::single({d, bin_unit()});
    for (const auto& tl : left_cop.terms()) {
        for (const auto& tr : right_cop.terms()) {
            LegRow<BinTree> row;
            row.legs = {tl.elem.left.shape, tl.elem.right.shape, std::nullopt,
                        tr.elem.left.shape, tr.elem.right.shape};
            row.word = word_concat(
                word_concat(tl.elem.left.word, tl.elem.right.word),
                word_concat({s.letter}, word_concat(tr.elem.left.word,
                                                    tr.elem.right.word)));
            // Braid the right factor's primary part over to the left: first
            // the letter past it, then across the left factor's secondary
            // part.  Afterwards the legs read (A0, A1, B0, x, B1); the left
            // tensor slot is A0 * A1 and the right is the graft B0 v_x B1.
            const LinComb<LegRow<BinTree>> rows =
                apply_schedule(row, {3, 2}, sigma_);
            for (const auto& t : rows.terms()) {
                BinElem star =
                    bt_star(leg_dec(t.elem, 1), leg_dec(t.elem, 2));
                DecBin grafted =
                    bin_graft(leg_dec(t.elem, 3), leg_letter(t.elem, 4),
                              leg_dec(t.elem, 5));
                out += tl.coeff * tr.coeff * t.coeff *
                       tensor_combine(star, BinElem::single(grafted));
            }
        }
    }
    coproduct_memo_.emplace(std::move(key), out);
    return out;
}

BinPair BinaryHopf::coproduct(const BinElem& e) const {
    return e.map([&](const DecBin& d) { return coproduct(d); });
}

BinPair BinaryHopf::coproduct_cuts(const DecBin& d) const {
    int n = d.degree();
    BinPair out;
    for (const BinCut& cut : binary_cuts(d.shape)) {
        Perm w = shuffle_from_positions(n, cut.positions);
        LinComb<TensorWord> words =
            sigma_.lift(perm_inverse(w), LinComb<TensorWord>::single(d.word));
        int taken = static_cast<int>(cut.positions.size());
        for (const auto& tw : words.terms()) {
            BinElem left = BinElem::single(bin_unit());
            int offset = 0;
            for (const BinTree& part : cut.parts) {
                DecBin piece{part,
                             TensorWord(tw.elem.begin() + offset,
                                        tw.elem.begin() + offset +
                                            part.degree())};
                left = bt_star(left, BinElem::single(piece));
                offset += part.degree();
            }
            DecBin right{cut.quotient,
                         TensorWord(tw.elem.begin() + taken, tw.elem.end())};
            out += tw.coeff * tensor_combine(left, BinElem::single(right));
        }
    }
    return out;
}

Rational BinaryHopf::counit(const BinElem& e) const {
    return e.coeff_of_key("|");
}

BinElem BinaryHopf::antipode(const DecBin& d) const {
    if (d.degree() == 0) return BinElem::single(bin_unit());
    std::string key = canonical_key(d);
    auto it = antipode_memo_.find(key);
    if (it != antipode_memo_.end()) return it->second;
    BinElem out = -BinElem::single(d);
    const BinPair cop = coproduct(d);
    for (const auto& t : cop.terms()) {
        if (t.elem.left.degree() == 0 || t.elem.right.degree() == 0) continue;
        out -= t.coeff * bt_star(antipode(t.elem.left),
                                 BinElem::single(t.elem.right));
    }
    antipode_memo_.emplace(std::move(key), out);
    return out;
}

BinElem BinaryHopf::antipode(const BinElem& e) const {
    return e.map([&](const DecBin& d) { return antipode(d); });
}

std::string canonical_key(const GenWord& w) {
    if (w.factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        if (i > 0) out += " . ";
        out += canonical_key(w.factors[i]);
    }
    return out;
}

bool is_generator(const DecBin& d) {
    return d.degree() >= 1 && d.shape.left().is_leaf();
}

GenElem generator_decomposition(const DecBin& d) {
    if (d.degree() == 0) return GenElem::single(GenWord{});
    if (is_generator(d)) return GenElem::single(GenWord{{d}});
    static std::map<std::string, GenElem> memo;
    std::string key = canonical_key(d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Split s = split_root(d);
    DecBin gen = bin_graft(bin_unit(), s.letter, s.right);

    // d = left * gen - left_left v_u (left_right * gen); the first summand's
    // decomposition appends the generator to each monomial of the left
    // factor, the second recurses on trees with a strictly smaller left
    // subtree.
    GenElem out;
    const GenElem left_dec = generator_decomposition(s.left);
    for (const auto& t : left_dec.terms()) {
        GenWord extended = t.elem;
        extended.factors.push_back(gen);
        out += t.coeff * GenElem::single(std::move(extended));
    }
    Split sl = split_root(s.left);
    BinElem rewritten;
    const BinElem tailprod =
        bt_star(BinElem::single(sl.right), BinElem::single(gen));
    for (const auto& t : tailprod.terms())
        rewritten += t.coeff *
                     BinElem::single(bin_graft(sl.left, sl.letter, t.elem));
    out -= generator_decomposition(rewritten);
    memo.emplace(std::move(key), out);
    return out;
}

GenElem generator_decomposition(const BinElem& e) {
    return e.map([](const DecBin& d) { return generator_decomposition(d); });
}

BinElem evaluate_generators(const GenWord& w) {
    BinElem out = BinElem::single(bin_unit());
    for (const DecBin& f : w.factors) out = bt_star(out, BinElem::single(f));
    return out;
}

BinElem evaluate_generators(const GenElem& e) {
    return e.map([](const GenWord& w) { return evaluate_generators(w); });
}

}  // namespace braidtrees
