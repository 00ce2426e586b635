#pragma once

// A braiding is an invertible linear endomorphism of V (x) V, given on
// basis vectors by sigma(e_i (x) e_j) = sum c^{kl}_{ij} e_k (x) e_l,
// that satisfies the braid relation on V (x) V (x) V:
//
//   sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2,
//
// where sigma_p applies sigma at tensor positions (p, p+1).  Thanks to
// the braid relation, a permutation w lifts to a well-defined operator
// T_w = sigma_{i_1} ... sigma_{i_l} along any reduced word
// w = s_{i_1} ... s_{i_l} (the rightmost factor acts first).  The block
// crossing beta_{m,n} is the lift of the permutation that moves the
// first m tensor legs past the last n.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "braidtrees/lincomb.hpp"
#include "braidtrees/permutation.hpp"
#include "braidtrees/rational.hpp"
#include "braidtrees/tensor.hpp"

namespace braidtrees {

// One output term of a basis-pair image: coeff * e_k (x) e_l.
struct BraidingTerm {
  Rational coeff;
  std::int32_t k = 0;
  std::int32_t l = 0;
};

// The full image of one basis pair: sigma(e_i (x) e_j) = sum of terms.
struct BraidingEntry {
  std::int32_t i = 0;
  std::int32_t j = 0;
  std::vector<BraidingTerm> terms;
};

class Braiding {
 public:
  // The flip v (x) w -> w (x) v.
  static Braiding flip(int dim);
  // sigma(e_i (x) e_j) = q[i][j] e_j (x) e_i (entries 0-indexed in q).
  // Diagonal braidings satisfy the braid relation for any scalars.
  static Braiding diagonal(int dim, const std::vector<std::vector<Rational>>& q);
  // Diagonal braiding with one scalar for every basis pair.
  static Braiding diagonal_uniform(int dim, const Rational& q);
  // Arbitrary table of basis-pair images.  Every pair (i, j) in
  // 1..dim x 1..dim must appear exactly once.  The table is not
  // required to satisfy the braid relation; run yang_baxter_failures()
  // to verify it.
  static Braiding explicit_entries(int dim, const std::vector<BraidingEntry>& entries);
  // Parse a command-line spec: "flip", "diag:<rational>", or
  // "file:<path>" (a JSON file as produced by to_json).  For file
  // specs the file's own dimension is authoritative and the dim
  // argument is ignored.
  static Braiding from_spec(const std::string& spec, int dim);
  static Braiding from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  int dim() const { return dim_; }
  bool is_flip() const { return kind_ == Kind::Flip; }

  // sigma(e_i (x) e_j) as a combination of two-letter words.
  const LinComb<TensorWord>& pair(std::int32_t i, std::int32_t j) const;

  // Apply sigma at tensor positions (pos, pos+1), 1-based, to every
  // term.  Each term must be at least pos+1 letters long.
  LinComb<TensorWord> apply_adjacent(const LinComb<TensorWord>& v, int pos) const;

  // T_w: every term must have exactly w.size() letters.
  LinComb<TensorWord> lift(const Perm& w, const LinComb<TensorWord>& v) const;

  // beta_{m,n}: cross the first m letters past the last n.  Terms must
  // have exactly m + n letters.
  LinComb<TensorWord> block(int m, int n, const LinComb<TensorWord>& v) const;

  // beta_{m,n} applied to the letter window starting at 1-based
  // position `offset`; letters outside the window are untouched.
  LinComb<TensorWord> block_at(int m, int n, int offset,
                               const LinComb<TensorWord>& v) const;

  // Verify the braid relation on every basis triple and invertibility
  // of the matrix on V (x) V.  Returns human-readable descriptions of
  // the failures; empty means the table is a genuine braiding.
  std::vector<std::string> yang_baxter_failures() const;

 private:
  enum class Kind { Flip, Diagonal, Explicit };

  Braiding(Kind kind, int dim, std::vector<LinComb<TensorWord>> images)
      : kind_(kind), dim_(dim), images_(std::move(images)) {}

  Kind kind_;
  int dim_;
  // images_[(i-1)*dim_ + (j-1)] = sigma(e_i (x) e_j).
  std::vector<LinComb<TensorWord>> images_;
};

}  // namespace braidtrees
