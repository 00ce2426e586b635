#include "braidtrees/sequences.hpp"

#include <cstddef>

namespace braidtrees {

namespace {

void require_nonnegative(int n) {
  if (n < 0) throw DomainError("sequence index must be non-negative");
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int double_factorial_odd(int n) {  // n!! for odd n >= -1
  Int f = 1;
  for (int i = n; i >= 3; i -= 2) f *= i;
  return f;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

}  // namespace

Int catalan(int n) {
  require_nonnegative(n);
  static std::vector<Int> cache = {1};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    Int next = 0;
    for (int i = 0; i < m; ++i) next += cache[i] * cache[m - 1 - i];
    cache.push_back(next);
  }
  return cache[n];
}

Int schroeder_little(int n) {
  if (n < 1) throw DomainError("little Schroeder numbers start at index 1");
  static std::vector<Int> cache = {0, 1, 1};  // s_0 unused
  while (static_cast<int>(cache.size()) <= n) {
    // (m+1) s_{m+1} = 3 (2m-1) s_m - (m-2) s_{m-1}
    int m = static_cast<int>(cache.size()) - 1;
    Int numerator = Int(3) * (2 * m - 1) * cache[m] - Int(m - 2) * cache[m - 1];
    if (numerator % (m + 1) != 0)
      throw DomainError("internal error: Schroeder recurrence not integral");
    cache.push_back(numerator / (m + 1));
  }
  return cache[n];
}

namespace {

// Sum over (possibly empty) sequences of parts >= 2 composing s of the
// product of g_{part-1}.
Int lush_middle(int s, const std::vector<Int>& g) {
  static std::vector<Int> cache = {1};
  while (static_cast<int>(cache.size()) <= s) {
    int m = static_cast<int>(cache.size());
    Int total = 0;
    for (int k = 2; k <= m; ++k) total += g[k - 1] * cache[m - k];
    cache.push_back(total);
  }
  return cache[s];
}

}  // namespace

Int lush_count_recursive(int n) {
  require_nonnegative(n);
  static std::vector<Int> cache = {1, 1};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    // Split m+1 as first + middle + last with first, last >= 1 and
    // every middle part >= 2.
    Int total = 0;
    for (int first = 1; first <= m; ++first)
      for (int last = 1; last + first <= m + 1; ++last)
        total += cache[first - 1] * cache[last - 1] *
                 lush_middle(m + 1 - first - last, cache);
    cache.push_back(total);
  }
  return cache[n];
}

Int lush_count_closed(int n) {
  require_nonnegative(n);
  if (n <= 1) return 1;
  Rational total = 0;
  for (int r = 2; r <= n + 1; ++r) {
    Rational term = Rational(Int(1) << (r - 2)) *
                    Rational(double_factorial_odd(2 * r - 3), factorial(r)) *
                    Rational(binomial(r, n + 1 - r));
    total += term;
  }
  if (denominator(total) != 1)
    throw DomainError("internal error: closed form did not sum to an integer");
  return numerator(total);
}

Int a141200(int m) {
  if (m < 1) throw DomainError("the comparison sequence starts at index 1");
  static std::vector<Int> cache = {0, 1};  // index 0 unused
  while (static_cast<int>(cache.size()) <= m) {
    int t = static_cast<int>(cache.size());
    // a_t = sum_{r >= 1, 2r <= t} a_r * (compositions of t into 2r
    // parts, weighted by products of a).
    //
    // parts_sum[p][s] = sum over compositions of s into exactly p
    // parts of the product of a-values; built over known a_1..a_{t-1}.
    std::vector<std::vector<Int>> parts_sum(
        static_cast<std::size_t>(t) + 1,
        std::vector<Int>(static_cast<std::size_t>(t) + 1, 0));
    parts_sum[0][0] = 1;
    for (int p = 1; p <= t; ++p)
      for (int s = p; s <= t; ++s) {
        Int acc = 0;
        // Parts are values a_1..a_{t-1}; a composition of t into at
        // least two parts never needs a_t itself.
        for (int i = 1; i <= s - p + 1 && i < t; ++i)
          acc += cache[i] * parts_sum[p - 1][s - i];
        parts_sum[p][s] = acc;
      }
    Int total = 0;
    for (int r = 1; 2 * r <= t; ++r) total += cache[r] * parts_sum[2 * r][t];
    cache.push_back(total);
  }
  return cache[m];
}

std::vector<Rational> gf_residual(int max_degree) {
  require_nonnegative(max_degree);
  // G_k = g_{k-1} for k >= 1, G_0 = 0.
  std::vector<Int> G(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int k = 1; k <= max_degree; ++k) G[k] = lush_count_recursive(k - 1);
  std::vector<Rational> residual(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int k = 0; k <= max_degree; ++k) {
    Rational c = 0;
    for (int i = 0; i <= k; ++i) c += Rational(G[i] * G[k - i]) * 2;
    if (k >= 1) c -= Rational(G[k - 1]) * 2;
    c -= Rational(G[k]);
    if (k == 1 || k == 2) c += 1;
    residual[k] = c;
  }
  return residual;
}

Int composition_catalan_sum(int n) {
  require_nonnegative(n);
  static std::vector<Int> cache = {1};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    Int total = 0;
    for (int k = 1; k <= m; ++k) total += catalan(k - 1) * cache[m - k];
    cache.push_back(total);
  }
  return cache[n];
}

}  // namespace braidtrees
