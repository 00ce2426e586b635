#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <braidtrees/permutation.hpp>

#include <algorithm>
#include <set>

using namespace braidtrees;

namespace {

Perm apply_word(int n, const std::vector<int>& word) {
  // Multiplies the adjacent transpositions left to right as functions:
  // s_{i1} ∘ s_{i2} ∘ ... ∘ s_{il}.
  Perm w = perm_identity(n);
  for (int i : word) {
    // w := w ∘ s_i post-composes by a transposition, i.e. swaps the ENTRIES
    // at positions i, i+1 of the one-line form; left-to-right accumulation
    // therefore builds s_{i1} ∘ s_{i2} ∘ ... ∘ s_{il}.
    std::swap(w[i - 1], w[i]);
  }
  return w;
}

}  // namespace

TEST_CASE("composition and inversion conventions") {
  // u = (2,3,1) sends 1->2, 2->3, 3->1.
  Perm u{2, 3, 1};
  Perm v{2, 1, 3};
  // (u o v)(1) = u(v(1)) = u(2) = 3.
  Perm uv = perm_compose(u, v);
  CHECK(uv == Perm{3, 2, 1});
  CHECK(perm_compose(u, perm_inverse(u)) == perm_identity(3));
  CHECK(perm_inverse(u) == Perm{3, 1, 2});
}

TEST_CASE("inversion count equals reduced word length") {
  // Hand counts: identity 0; (2,1) 1; (3,2,1) 3; (2,3,1) 2.
  CHECK(perm_inversions(perm_identity(4)) == 0);
  CHECK(perm_inversions(Perm{2, 1}) == 1);
  CHECK(perm_inversions(Perm{3, 2, 1}) == 3);
  CHECK(perm_inversions(Perm{2, 3, 1}) == 2);
  for (const Perm& w : all_permutations(4)) {
    const auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == perm_inversions(w));
    CHECK(apply_word(4, word) == w);
  }
}

TEST_CASE("all reduced words multiply back to the permutation") {
  // The longest element of S3 = (3,2,1) has exactly the two reduced words
  // s1 s2 s1 and s2 s1 s2.
  auto words = all_reduced_words(Perm{3, 2, 1});
  REQUIRE(words.size() == 2);
  std::set<std::vector<int>> got(words.begin(), words.end());
  CHECK(got.count({1, 2, 1}) == 1);
  CHECK(got.count({2, 1, 2}) == 1);

  for (const Perm& w : all_permutations(4)) {
    for (const auto& word : all_reduced_words(w)) {
      CHECK(static_cast<int>(word.size()) == perm_inversions(w));
      CHECK(apply_word(4, word) == w);
    }
  }
  // S4 longest element has 16 reduced words (standard count).
  CHECK(all_reduced_words(Perm{4, 3, 2, 1}).size() == 16);
}

TEST_CASE("block crossing permutation") {
  // chi_{m,n} sends 1..m to n+1..n+m and m+1..m+n to 1..n.
  // chi_{2,1}: 1->2, 2->3, 3->1; chi_{1,2}: 1->3, 2->1, 3->2.
  CHECK(block_cross(2, 1) == Perm{2, 3, 1});
  CHECK(block_cross(1, 2) == Perm{3, 1, 2});
  CHECK(block_cross(0, 3) == perm_identity(3));
  CHECK(block_cross(3, 0) == perm_identity(3));
  CHECK(perm_inversions(block_cross(3, 4)) == 12);
}

TEST_CASE("shuffle families") {
  // |S_{i,j}| = binomial(i+j, i); boundary families contain only the identity.
  CHECK(shuffles(0, 3) == std::vector<Perm>{perm_identity(3)});
  CHECK(shuffles(3, 0) == std::vector<Perm>{perm_identity(3)});
  CHECK(shuffles(1, 1).size() == 2);
  CHECK(shuffles(2, 2).size() == 6);
  CHECK(shuffles(2, 3).size() == 10);
  for (const Perm& w : shuffles(2, 3)) {
    CHECK(w[0] < w[1]);
    CHECK(w[2] < w[3]);
    CHECK(w[3] < w[4]);
  }
}

TEST_CASE("the unique shuffle hitting a prescribed position set") {
  // w(1..d) = positions ascending, complement ascending afterwards.
  CHECK(shuffle_from_positions(3, {2}) == Perm{2, 1, 3});
  CHECK(shuffle_from_positions(5, {2, 3, 5}) == Perm{2, 3, 5, 1, 4});
  CHECK(shuffle_from_positions(4, {}) == perm_identity(4));
  CHECK(shuffle_from_positions(4, {1, 2, 3, 4}) == perm_identity(4));
  // Uniqueness: no other (d, n-d)-shuffle maps {1..d} onto the position set.
  const Perm w = shuffle_from_positions(5, {2, 3, 5});
  int hits = 0;
  for (const Perm& s : shuffles(3, 2)) {
    if (s[0] == 2 && s[1] == 3 && s[2] == 5) ++hits;
    if (s == w) CHECK(true);
  }
  CHECK(hits == 1);
}
