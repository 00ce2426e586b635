// Permutations in one-line notation, reduced words, and shuffle families.
#pragma once

#include <vector>

namespace braidtrees {

// One-line notation with 1-based images: w[i-1] = w(i).
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_valid(const Perm& w);
Perm perm_inverse(const Perm& w);
// Function composition: (u ∘ v)(i) = u(v(i)).
Perm perm_compose(const Perm& u, const Perm& v);
int perm_inversions(const Perm& w);

// One reduced word for w, produced by repeatedly removing the leftmost
// descent: factors listed left to right, so w = s_{i1} s_{i2} ... s_{il}.
std::vector<int> reduced_word(const Perm& w);

// Every reduced word of w (exponential in general; intended for small n).
std::vector<std::vector<int>> all_reduced_words(const Perm& w);

std::vector<Perm> all_permutations(int n);

// The (i,j)-shuffles: w in S_{i+j} increasing on 1..i and on i+1..i+j,
// listed in lexicographic order of one-line notation.
std::vector<Perm> shuffles(int i, int j);

// The block crossing chi_{m,n}: 1..m -> n+1..n+m, m+1..m+n -> 1..n.
Perm block_cross(int m, int n);

// The unique (d, n-d)-shuffle w with w({1..d}) = positions (ascending),
// where d = positions.size(). positions must be strictly increasing in 1..n.
Perm shuffle_from_positions(int n, const std::vector<int>& positions);

}  // namespace braidtrees
