#pragma once

#include <braidtrees/rational.hpp>
#include <braidtrees/tensor.hpp>
#include <braidtrees/trees.hpp>

#include <cstdint>
#include <string>
#include <utility>

// Decorated tree shapes: a shape together with a word of basis letters, one
// letter per decoration slot.  Slot order follows each family's canonical
// reading of the shape:
//   - binary trees: in-order (left subtree, vertex, right subtree);
//   - rooted trees and forests: preorder, trees left to right;
//   - angular trees: root angles interleaved with branches left to right.
//
// A decorated element serializes with the letter written in each slot, e.g.
// "(| e1 (| e2 |))", "e1(e2 e3)", "e2 e1" (a forest), "[| e1 [| e2 |]]".

namespace braidtrees {

// Number of decoration slots a shape carries.
inline int slot_count(const BinTree& t) { return t.degree(); }
inline int slot_count(const RootedTree& t) { return t.size(); }
inline int slot_count(const Forest& f) { return f.size(); }
inline int slot_count(const AngTree& t) { return t.angles(); }

template <class S>
struct Dec {
    S shape{};
    TensorWord word{};

    Dec() = default;
    Dec(S s, TensorWord w) : shape(std::move(s)), word(std::move(w)) {
        if (static_cast<int>(word.size()) != slot_count(shape)) {
            throw DomainError("decoration word length " +
                              std::to_string(word.size()) +
                              " does not match the " +
                              std::to_string(slot_count(shape)) +
                              " slots of shape " + canonical_key(shape));
        }
    }

    int degree() const { return static_cast<int>(word.size()); }

    friend bool operator==(const Dec& a, const Dec& b) {
        return a.shape == b.shape && a.word == b.word;
    }
    friend bool operator!=(const Dec& a, const Dec& b) { return !(a == b); }
};

std::string decorated_key(const BinTree& shape, const TensorWord& word);
std::string decorated_key(const RootedTree& shape, const TensorWord& word);
std::string decorated_key(const Forest& shape, const TensorWord& word);
std::string decorated_key(const AngTree& shape, const TensorWord& word);

template <class S>
std::string canonical_key(const Dec<S>& d) {
    return decorated_key(d.shape, d.word);
}

// Parsers for the serializations above.  They accept exactly the strings the
// serializers produce (single spaces, letters written as e<k> with k >= 1)
// and throw DomainError otherwise.
Dec<BinTree> parse_decorated_binary(const std::string& text);
Dec<RootedTree> parse_decorated_rooted(const std::string& text);
Dec<Forest> parse_decorated_forest(const std::string& text);
Dec<AngTree> parse_decorated_angular(const std::string& text);

// A basis element of a two-fold tensor product, used for coproduct values.
template <class L, class R = L>
struct Pair2 {
    L left{};
    R right{};

    friend bool operator==(const Pair2& a, const Pair2& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator!=(const Pair2& a, const Pair2& b) { return !(a == b); }
};

template <class L, class R>
std::string canonical_key(const Pair2<L, R>& p) {
    return canonical_key(p.left) + " (x) " + canonical_key(p.right);
}

}  // namespace braidtrees
