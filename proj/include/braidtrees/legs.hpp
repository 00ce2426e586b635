#pragma once

#include <braidtrees/braiding.hpp>
#include <braidtrees/decorated.hpp>
#include <braidtrees/lincomb.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Leg rows: the working representation for multi-factor tensor expressions
// over decorated shapes.  A row is a list of legs -- each leg either a shape
// (owning as many letters as it has slots) or a bare vector-space slot owning
// exactly one letter -- together with the concatenated letter word.  Every
// braiding of adjacent tensor factors acts the same way: the two legs swap
// places and the word is braided by the block crossing of their letter
// counts.  Legs with zero letters (empty shapes) swap with no effect on the
// word, which gives the unit-slot rules for free.
//
// Operations that combine legs (products, grafts) are expressed by replacing
// a span of legs with the terms of a linear combination computed from them;
// the replacement's letters splice into the word at the span's offset.

namespace braidtrees {

template <class S>
struct LegRow {
    // nullopt marks a vector-space leg (one letter); a shape leg owns
    // slot_count(shape) letters.
    std::vector<std::optional<S>> legs;
    TensorWord word;

    friend bool operator==(const LegRow& a, const LegRow& b) {
        return a.legs == b.legs && a.word == b.word;
    }
    friend bool operator!=(const LegRow& a, const LegRow& b) {
        return !(a == b);
    }
};

template <class S>
int leg_slots(const std::optional<S>& leg) {
    return leg ? slot_count(*leg) : 1;
}

template <class S>
int row_slots(const LegRow<S>& row) {
    int total = 0;
    for (const auto& leg : row.legs) total += leg_slots(leg);
    return total;
}

template <class S>
std::string canonical_key(const LegRow<S>& row) {
    std::string out;
    bool first = true;
    for (const auto& leg : row.legs) {
        if (!first) out += " % ";
        first = false;
        out += leg ? canonical_key(*leg) : std::string("#v");
    }
    out += " @ ";
    out += canonical_key(row.word);
    return out;
}

// 0-based offset into row.word of the first letter owned by leg i (1-based).
template <class S>
int leg_offset(const LegRow<S>& row, int i) {
    if (row_slots(row) != static_cast<int>(row.word.size()))
        throw DomainError("row word has " + std::to_string(row.word.size()) +
                          " letters for legs owning " +
                          std::to_string(row_slots(row)) + " slots");
    if (i < 1 || i > static_cast<int>(row.legs.size()))
        throw DomainError("leg index out of range");
    int off = 0;
    for (int k = 0; k < i - 1; ++k) off += leg_slots(row.legs[k]);
    return off;
}

template <class S>
TensorWord leg_word(const LegRow<S>& row, int i) {
    int off = leg_offset(row, i);
    int len = leg_slots(row.legs[i - 1]);
    return TensorWord(row.word.begin() + off, row.word.begin() + off + len);
}

template <class S>
Dec<S> leg_dec(const LegRow<S>& row, int i) {
    if (!row.legs[i - 1])
        throw DomainError("leg " + std::to_string(i) + " is not a shape");
    return Dec<S>{*row.legs[i - 1], leg_word(row, i)};
}

template <class S>
std::int32_t leg_letter(const LegRow<S>& row, int i) {
    if (row.legs[i - 1])
        throw DomainError("leg " + std::to_string(i) +
                          " is not a vector-space slot");
    return row.word[leg_offset(row, i)];
}

// Braids legs i and i+1 past each other (1-based i).
template <class S>
LinComb<LegRow<S>> swap_legs(const LegRow<S>& row, int i,
                             const Braiding& sigma) {
    if (i < 1 || i + 1 > static_cast<int>(row.legs.size()))
        throw DomainError("swap position out of range");
    int m = leg_slots(row.legs[i - 1]);
    int n = leg_slots(row.legs[i]);
    int offset = leg_offset(row, i) + 1;
    LinComb<TensorWord> braided =
        sigma.block_at(m, n, offset, LinComb<TensorWord>::single(row.word));
    std::vector<std::optional<S>> legs = row.legs;
    std::swap(legs[i - 1], legs[i]);
    LinComb<LegRow<S>> result;
    for (const auto& term : braided.terms())
        result += term.coeff * LinComb<LegRow<S>>::single({legs, term.elem});
    return result;
}

// Applies adjacent swaps at the given positions, first entry first.
template <class S>
LinComb<LegRow<S>> apply_schedule(const LinComb<LegRow<S>>& rows,
                                  const std::vector<int>& positions,
                                  const Braiding& sigma) {
    LinComb<LegRow<S>> acc = rows;
    for (int pos : positions) {
        acc = acc.map(
            [&](const LegRow<S>& r) { return swap_legs(r, pos, sigma); });
    }
    return acc;
}

template <class S>
LinComb<LegRow<S>> apply_schedule(const LegRow<S>& row,
                                  const std::vector<int>& positions,
                                  const Braiding& sigma) {
    return apply_schedule(LinComb<LegRow<S>>::single(row), positions, sigma);
}

// Replaces legs [i, i+count) by one shape leg per term of `merged`, splicing
// each term's letters over the span's letters.  Every term must carry exactly
// as many letters as the span owns.
template <class S>
LinComb<LegRow<S>> merge_legs(const LegRow<S>& row, int i, int count,
                              const LinComb<Dec<S>>& merged) {
    if (i < 1 || count < 1 || i + count - 1 > static_cast<int>(row.legs.size()))
        throw DomainError("merge span out of range");
    int offset = leg_offset(row, i);
    int span = 0;
    for (int k = 0; k < count; ++k) span += leg_slots(row.legs[i - 1 + k]);
    LinComb<LegRow<S>> result;
    for (const auto& term : merged.terms()) {
        if (term.elem.degree() != span)
            throw DomainError("merge replacement has " +
                              std::to_string(term.elem.degree()) +
                              " letters for a span of " + std::to_string(span));
        LegRow<S> next;
        next.legs.assign(row.legs.begin(), row.legs.begin() + (i - 1));
        next.legs.emplace_back(term.elem.shape);
        next.legs.insert(next.legs.end(), row.legs.begin() + (i - 1 + count),
                         row.legs.end());
        next.word.assign(row.word.begin(), row.word.begin() + offset);
        next.word.insert(next.word.end(), term.elem.word.begin(),
                         term.elem.word.end());
        next.word.insert(next.word.end(), row.word.begin() + offset + span,
                         row.word.end());
        result += term.coeff * LinComb<LegRow<S>>::single(std::move(next));
    }
    return result;
}

}  // namespace braidtrees
