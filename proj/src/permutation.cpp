#include <braidtrees/permutation.hpp>

#include <braidtrees/rational.hpp>

#include <algorithm>
#include <numeric>

namespace braidtrees {

Perm perm_identity(int n) {
  Perm w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

bool perm_valid(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[x - 1]) return false;
    seen[x - 1] = true;
  }
  return true;
}

Perm perm_inverse(const Perm& w) {
  Perm inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

Perm perm_compose(const Perm& u, const Perm& v) {
  if (u.size() != v.size()) throw DomainError("composing permutations of different degrees");
  Perm out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[v[i] - 1];
  return out;
}

int perm_inversions(const Perm& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++count;
    }
  }
  return count;
}

std::vector<int> reduced_word(const Perm& w) {
  // Right-multiplying by s_i swaps the entries at positions i, i+1 and, when
  // those entries descend, shortens the permutation. Collecting the swaps
  // that sort w and reversing gives w = s_{i1} ... s_{il} with l minimal.
  Perm cur = w;
  std::vector<int> swaps;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);
        swaps.push_back(static_cast<int>(i) + 1);
        progressed = true;
        break;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

namespace {

void collect_reduced_words(const Perm& w, std::vector<int>& suffix,
                           std::vector<std::vector<int>>& out) {
  bool any_descent = false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) {
      any_descent = true;
      Perm shorter = w;
      std::swap(shorter[i], shorter[i + 1]);
      // w = shorter * s_{i+1}, so s_{i+1} is the last factor of these words.
      suffix.push_back(static_cast<int>(i) + 1);
      collect_reduced_words(shorter, suffix, out);
      suffix.pop_back();
    }
  }
  if (!any_descent) {
    std::vector<int> word(suffix.rbegin(), suffix.rend());
    out.push_back(std::move(word));
  }
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Perm& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  collect_reduced_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> all_permutations(int n) {
  Perm w = perm_identity(n);
  std::vector<Perm> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Perm> shuffles(int i, int j) {
  // Choose the image positions of the first block; both blocks ascend.
  const int n = i + j;
  std::vector<Perm> out;
  std::vector<int> pick(static_cast<std::size_t>(i));
  // Iterate i-subsets of {1..n} in lexicographic order.
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  std::fill(mask.begin(), mask.begin() + i, true);
  // std::prev_permutation over the mask enumerates subsets; collect and sort
  // the resulting permutations lexicographically instead for clarity.
  do {
    Perm w(static_cast<std::size_t>(n));
    int a = 0, b = 0;
    std::vector<int> first, second;
    for (int p = 1; p <= n; ++p) {
      if (mask[p - 1]) {
        first.push_back(p);
      } else {
        second.push_back(p);
      }
    }
    for (int k = 0; k < i; ++k) w[k] = first[a++];
    for (int k = i; k < n; ++k) w[k] = second[b++];
    out.push_back(std::move(w));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Perm block_cross(int m, int n) {
  Perm w(static_cast<std::size_t>(m + n));
  for (int p = 1; p <= m; ++p) w[p - 1] = n + p;
  for (int q = 1; q <= n; ++q) w[m + q - 1] = q;
  return w;
}

Perm shuffle_from_positions(int n, const std::vector<int>& positions) {
  const int d = static_cast<int>(positions.size());
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  Perm w(static_cast<std::size_t>(n));
  for (int k = 0; k < d; ++k) {
    const int p = positions[k];
    if (p < 1 || p > n || used[p - 1] || (k > 0 && positions[k - 1] >= p)) {
      throw DomainError("positions must be strictly increasing within 1..n");
    }
    used[p - 1] = true;
    w[k] = p;
  }
  int slot = d;
  for (int p = 1; p <= n; ++p) {
    if (!used[p - 1]) w[slot++] = p;
  }
  return w;
}

}  // namespace braidtrees
