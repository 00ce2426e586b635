// Tensor words over a fixed basis e1, e2, ... of the decoration space.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidtrees {

// A pure tensor of basis vectors, stored as 1-based basis indices.
using TensorWord = std::vector<std::int32_t>;

inline std::string basis_label(std::int32_t index) {
  return "e" + std::to_string(index);
}

inline std::string canonical_key(const TensorWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += basis_label(w[i]);
  }
  return out;
}

inline TensorWord word_concat(const TensorWord& a, const TensorWord& b) {
  TensorWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace braidtrees
