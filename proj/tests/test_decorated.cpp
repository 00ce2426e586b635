#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <braidtrees/decorated.hpp>
#include <braidtrees/legs.hpp>

#include <string>
#include <vector>

using namespace braidtrees;

namespace {

BinTree leaf() { return BinTree{}; }
BinTree vertex() { return graft(leaf(), leaf()); }
RootedTree node(std::vector<RootedTree> cs) { return bplus(Forest{std::move(cs)}); }

Dec<BinTree> dec_bin(const std::string& text) {
    return parse_decorated_binary(text);
}

Braiding q_plane() {
    // A two-dimensional braiding that is neither a flip nor diagonal.
    std::vector<BraidingEntry> entries = {
        {1, 1, {{Rational(2), 1, 1}}},
        {2, 2, {{Rational(2), 2, 2}}},
        {1, 2, {{Rational(1), 2, 1}}},
        {2, 1, {{Rational(1), 1, 2}, {Rational(3, 2), 2, 1}}},
    };
    return Braiding::explicit_entries(2, entries);
}

}  // namespace

TEST_CASE("decoration slot counts and word validation") {
    CHECK(slot_count(leaf()) == 0);
    CHECK(slot_count(vertex()) == 1);
    CHECK(slot_count(node({node({}), node({})})) == 3);
    CHECK(slot_count(Forest{{node({}), node({})}}) == 2);
    CHECK(slot_count(angular({AngTree{}, AngTree{}, AngTree{}})) == 2);

    CHECK_NOTHROW(Dec<BinTree>(vertex(), {3}));
    CHECK_THROWS_AS(Dec<BinTree>(vertex(), {1, 2}), DomainError);
    CHECK_THROWS_AS(Dec<BinTree>(leaf(), {1}), DomainError);
}

TEST_CASE("decorated binary trees serialize in in-order") {
    CHECK(canonical_key(Dec<BinTree>{leaf(), {}}) == "|");
    CHECK(canonical_key(Dec<BinTree>{vertex(), {1}}) == "(| e1 |)");
    CHECK(canonical_key(Dec<BinTree>{graft(vertex(), vertex()), {1, 2, 3}}) ==
          "((| e1 |) e2 (| e3 |))");
    CHECK(canonical_key(Dec<BinTree>{graft(leaf(), vertex()), {1, 2}}) ==
          "(| e1 (| e2 |))");
    CHECK(canonical_key(Dec<BinTree>{graft(vertex(), leaf()), {2, 1}}) ==
          "((| e2 |) e1 |)");
}

TEST_CASE("decorated rooted trees and forests serialize in preorder") {
    RootedTree single = node({});
    CHECK(canonical_key(Dec<RootedTree>{single, {4}}) == "e4");
    CHECK(canonical_key(Dec<RootedTree>{node({single}), {1, 2}}) == "e1(e2)");
    CHECK(canonical_key(Dec<RootedTree>{node({single, single}), {1, 2, 3}}) ==
          "e1(e2 e3)");
    CHECK(canonical_key(Dec<RootedTree>{node({node({single}), single}),
                                        {1, 2, 3, 4}}) == "e1(e2(e3) e4)");

    CHECK(canonical_key(Dec<Forest>{Forest{{}}, {}}) == "()");
    CHECK(canonical_key(Dec<Forest>{Forest{{single, single}}, {2, 1}}) ==
          "e2 e1");
    CHECK(canonical_key(Dec<Forest>{Forest{{node({single}), single}},
                                    {1, 2, 3}}) == "e1(e2) e3");
}

TEST_CASE("decorated angular trees interleave branches and letters") {
    AngTree l;
    CHECK(canonical_key(Dec<AngTree>{l, {}}) == "|");
    CHECK(canonical_key(Dec<AngTree>{angular({l, l}), {1}}) == "[| e1 |]");
    CHECK(canonical_key(Dec<AngTree>{angular({l, l, l}), {1, 2}}) ==
          "[| e1 | e2 |]");
    CHECK(canonical_key(Dec<AngTree>{angular({l, angular({l, l})}), {1, 2}}) ==
          "[| e1 [| e2 |]]");
    CHECK(canonical_key(Dec<AngTree>{angular({angular({l, l}), l}), {2, 1}}) ==
          "[[| e2 |] e1 |]");
}

TEST_CASE("decorated parsers invert the serializers") {
    for (const std::string& text : std::vector<std::string>{"|", "(| e1 |)", "((| e1 |) e2 (| e3 |))", "(| e12 (| e2 |))"}) {
        CHECK(canonical_key(parse_decorated_binary(text)) == text);
    }
    for (const std::string& text : std::vector<std::string>{"e1", "e1(e2)", "e1(e2(e3) e4)"}) {
        CHECK(canonical_key(parse_decorated_rooted(text)) == text);
    }
    for (const std::string& text : std::vector<std::string>{"()", "e2 e1", "e1(e2) e3", "e1 e2 e3"}) {
        CHECK(canonical_key(parse_decorated_forest(text)) == text);
    }
    for (const std::string& text : std::vector<std::string>{"|", "[| e1 |]", "[| e1 | e2 |]", "[[| e2 |] e1 [| e3 |]]"}) {
        CHECK(canonical_key(parse_decorated_angular(text)) == text);
    }
}

TEST_CASE("decorated parsers reject malformed input") {
    CHECK_THROWS_AS(parse_decorated_binary(""), DomainError);
    CHECK_THROWS_AS(parse_decorated_binary("x"), DomainError);
    CHECK_THROWS_AS(parse_decorated_binary("(| e1 |"), DomainError);
    CHECK_THROWS_AS(parse_decorated_binary("(| e0 |)"), DomainError);
    CHECK_THROWS_AS(parse_decorated_binary("(| e1 |) "), DomainError);
    CHECK_THROWS_AS(parse_decorated_binary("(|  e1 |)"), DomainError);
    CHECK_THROWS_AS(parse_decorated_rooted("e"), DomainError);
    CHECK_THROWS_AS(parse_decorated_rooted("e1()"), DomainError);
    CHECK_THROWS_AS(parse_decorated_forest("e1  e2"), DomainError);
    CHECK_THROWS_AS(parse_decorated_angular("[| e1]"), DomainError);
    CHECK_THROWS_AS(parse_decorated_angular("[|]"), DomainError);
}

TEST_CASE("tensor pair keys") {
    Pair2<Dec<BinTree>> p{dec_bin("(| e1 |)"), dec_bin("|")};
    CHECK(canonical_key(p) == "(| e1 |) (x) |");
}

TEST_CASE("leg rows expose offsets, slices, and typed accessors") {
    LegRow<BinTree> row;
    row.legs = {vertex(), std::nullopt, graft(leaf(), vertex())};
    row.word = {3, 1, 2, 2};
    CHECK(row_slots(row) == 4);
    CHECK(leg_offset(row, 1) == 0);
    CHECK(leg_offset(row, 2) == 1);
    CHECK(leg_offset(row, 3) == 2);
    CHECK(leg_word(row, 3) == TensorWord{2, 2});
    CHECK(leg_dec(row, 1) == dec_bin("(| e3 |)"));
    CHECK(leg_letter(row, 2) == 1);
    CHECK_THROWS_AS(leg_dec(row, 2), DomainError);
    CHECK_THROWS_AS(leg_letter(row, 1), DomainError);
    CHECK_THROWS_AS(leg_offset(row, 4), DomainError);
    LegRow<BinTree> short_row{{vertex(), vertex()}, {1}};
    CHECK_THROWS_AS(leg_offset(short_row, 1), DomainError);
    CHECK(canonical_key(row) == "(| * |) % #v % (| * (| * |)) @ e3 e1 e2 e2");
}

TEST_CASE("swapping legs over a flip crosses the letter blocks") {
    Braiding flip = Braiding::flip(3);

    LegRow<BinTree> row;
    row.legs = {vertex(), graft(leaf(), vertex())};
    row.word = {1, 2, 3};
    auto swapped = swap_legs(row, 1, flip);
    REQUIRE(swapped.terms().size() == 1);
    const auto& t = swapped.terms()[0];
    CHECK(t.coeff == Rational(1));
    CHECK(t.elem.legs[0] == std::optional<BinTree>(graft(leaf(), vertex())));
    CHECK(t.elem.legs[1] == std::optional<BinTree>(vertex()));
    CHECK(t.elem.word == TensorWord{2, 3, 1});

    // A unit leg crosses without touching the word.
    LegRow<BinTree> unit_row;
    unit_row.legs = {leaf(), vertex()};
    unit_row.word = {1};
    auto u = swap_legs(unit_row, 1, flip);
    REQUIRE(u.terms().size() == 1);
    CHECK(u.terms()[0].elem.word == TensorWord{1});
    CHECK(u.terms()[0].elem.legs[0] == std::optional<BinTree>(vertex()));

    // A vector-space slot braids like a one-letter block.
    LegRow<BinTree> mixed;
    mixed.legs = {std::nullopt, graft(leaf(), vertex())};
    mixed.word = {1, 2, 3};
    auto m = swap_legs(mixed, 1, flip);
    REQUIRE(m.terms().size() == 1);
    CHECK(m.terms()[0].elem.word == TensorWord{2, 3, 1});
    CHECK_FALSE(m.terms()[0].elem.legs[1].has_value());
}

TEST_CASE("swapping legs over a non-diagonal braiding expands into terms") {
    Braiding sigma = q_plane();
    LegRow<BinTree> row;
    row.legs = {vertex(), vertex()};
    row.word = {2, 1};
    auto swapped = swap_legs(row, 1, sigma);
    // sigma(e2 (x) e1) = e1 (x) e2 + 3/2 e2 (x) e1.
    LinComb<LegRow<BinTree>> expected;
    expected += LinComb<LegRow<BinTree>>::single(
        {{vertex(), vertex()}, TensorWord{1, 2}});
    expected += Rational(3, 2) * LinComb<LegRow<BinTree>>::single(
                                     {{vertex(), vertex()}, TensorWord{2, 1}});
    CHECK(swapped == expected);
}

TEST_CASE("leg swaps satisfy the braid relation on three legs") {
    Braiding sigma = q_plane();
    // Legs of letter sizes 1, 2, 1 exercise the block crossings.
    LegRow<BinTree> row;
    row.legs = {vertex(), graft(leaf(), vertex()), std::nullopt};
    row.word = {2, 1, 2, 1};
    auto lhs = apply_schedule(row, {1, 2, 1}, sigma);
    auto rhs = apply_schedule(row, {2, 1, 2}, sigma);
    CHECK(lhs == rhs);
    CHECK(!lhs.is_zero());
}

TEST_CASE("merging legs splices replacement letters over the span") {
    LegRow<BinTree> row;
    row.legs = {vertex(), std::nullopt, vertex()};
    row.word = {1, 2, 3};
    // Replace legs 2..3 (letters e2 e3) by a two-slot tree carrying them.
    LinComb<Dec<BinTree>> merged =
        LinComb<Dec<BinTree>>::single(dec_bin("(| e2 (| e3 |))"));
    auto rows = merge_legs(row, 2, 2, merged);
    REQUIRE(rows.terms().size() == 1);
    const auto& r = rows.terms()[0].elem;
    CHECK(r.legs.size() == 2);
    CHECK(r.legs[1] == std::optional<BinTree>(graft(leaf(), vertex())));
    CHECK(r.word == TensorWord{1, 2, 3});
    CHECK(canonical_key(r) == "(| * |) % (| * (| * |)) @ e1 e2 e3");

    // Length mismatches are rejected.
    LinComb<Dec<BinTree>> bad =
        LinComb<Dec<BinTree>>::single(dec_bin("(| e2 |)"));
    CHECK_THROWS_AS(merge_legs(row, 2, 2, bad), DomainError);
    CHECK_THROWS_AS(merge_legs(row, 3, 2, merged), DomainError);

    // An empty replacement annihilates the row.
    CHECK(merge_legs(row, 2, 2, LinComb<Dec<BinTree>>::zero()).is_zero());
}
