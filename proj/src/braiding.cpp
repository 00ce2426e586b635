#include "braidtrees/braiding.hpp"

#include <fstream>
#include <utility>

#include "braidtrees/linalg.hpp"

namespace braidtrees {

namespace {

void require_dim(int dim) {
  if (dim < 1) throw DomainError("braiding dimension must be at least 1");
}

std::size_t pair_index(int dim, std::int32_t i, std::int32_t j) {
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(dim) +
         static_cast<std::size_t>(j - 1);
}

void require_letter(int dim, std::int32_t a) {
  if (a < 1 || a > dim)
    throw DomainError("letter " + std::to_string(a) +
                      " outside basis range 1.." + std::to_string(dim));
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("expected a rational as a string or integer");
}

}  // namespace

Braiding Braiding::flip(int dim) {
  require_dim(dim);
  std::vector<LinComb<TensorWord>> images(
      static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (std::int32_t i = 1; i <= dim; ++i)
    for (std::int32_t j = 1; j <= dim; ++j)
      images[pair_index(dim, i, j)] = LinComb<TensorWord>::single({j, i});
  return Braiding(Kind::Flip, dim, std::move(images));
}

Braiding Braiding::diagonal(int dim, const std::vector<std::vector<Rational>>& q) {
  require_dim(dim);
  if (q.size() != static_cast<std::size_t>(dim))
    throw DomainError("diagonal braiding needs a dim x dim scalar table");
  std::vector<LinComb<TensorWord>> images(
      static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (std::int32_t i = 1; i <= dim; ++i) {
    if (q[i - 1].size() != static_cast<std::size_t>(dim))
      throw DomainError("diagonal braiding needs a dim x dim scalar table");
    for (std::int32_t j = 1; j <= dim; ++j)
      images[pair_index(dim, i, j)] =
          LinComb<TensorWord>::single({j, i}, q[i - 1][j - 1]);
  }
  return Braiding(Kind::Diagonal, dim, std::move(images));
}

Braiding Braiding::diagonal_uniform(int dim, const Rational& q) {
  require_dim(dim);
  std::vector<std::vector<Rational>> table(
      static_cast<std::size_t>(dim),
      std::vector<Rational>(static_cast<std::size_t>(dim), q));
  return diagonal(dim, table);
}

Braiding Braiding::explicit_entries(int dim,
                                    const std::vector<BraidingEntry>& entries) {
  require_dim(dim);
  const std::size_t cells =
      static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  std::vector<LinComb<TensorWord>> images(cells);
  std::vector<char> seen(cells, 0);
  for (const BraidingEntry& e : entries) {
    require_letter(dim, e.i);
    require_letter(dim, e.j);
    std::size_t idx = pair_index(dim, e.i, e.j);
    if (seen[idx])
      throw DomainError("duplicate braiding entry for basis pair (" +
                        std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
    seen[idx] = 1;
    LinComb<TensorWord> image;
    for (const BraidingTerm& t : e.terms) {
      require_letter(dim, t.k);
      require_letter(dim, t.l);
      image += LinComb<TensorWord>::single({t.k, t.l}, t.coeff);
    }
    images[idx] = std::move(image);
  }
  for (std::int32_t i = 1; i <= dim; ++i)
    for (std::int32_t j = 1; j <= dim; ++j)
      if (!seen[pair_index(dim, i, j)])
        throw DomainError("missing braiding entry for basis pair (" +
                          std::to_string(i) + ", " + std::to_string(j) + ")");
  return Braiding(Kind::Explicit, dim, std::move(images));
}

Braiding Braiding::from_spec(const std::string& spec, int dim) {
  if (spec == "flip") return flip(dim);
  if (spec.rfind("diag:", 0) == 0)
    return diagonal_uniform(dim, rational_from_string(spec.substr(5)));
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open braiding file: " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("invalid braiding JSON: ") + e.what());
    }
    return from_json(j);
  }
  throw DomainError("unrecognized braiding spec '" + spec +
                    "' (expected flip, diag:<rational>, or file:<path>)");
}

Braiding Braiding::from_json(const nlohmann::json& j) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    int dim = j.at("dim").get<int>();
    if (kind == "flip") return flip(dim);
    if (kind == "diagonal") {
      require_dim(dim);
      const nlohmann::json& qj = j.at("q");
      if (!qj.is_array() || qj.size() != static_cast<std::size_t>(dim))
        throw DomainError("diagonal braiding needs a dim x dim scalar table");
      std::vector<std::vector<Rational>> q;
      for (const auto& rowj : qj) {
        if (!rowj.is_array() || rowj.size() != static_cast<std::size_t>(dim))
          throw DomainError("diagonal braiding needs a dim x dim scalar table");
        std::vector<Rational> row;
        for (const auto& cell : rowj) row.push_back(rational_from_json(cell));
        q.push_back(std::move(row));
      }
      return diagonal(dim, q);
    }
    if (kind == "explicit") {
      std::vector<BraidingEntry> entries;
      for (const auto& ej : j.at("entries")) {
        BraidingEntry e;
        e.i = ej.at("i").get<std::int32_t>();
        e.j = ej.at("j").get<std::int32_t>();
        for (const auto& tj : ej.at("terms")) {
          BraidingTerm t;
          t.coeff = rational_from_json(tj.at("coeff"));
          t.k = tj.at("k").get<std::int32_t>();
          t.l = tj.at("l").get<std::int32_t>();
          e.terms.push_back(std::move(t));
        }
        entries.push_back(std::move(e));
      }
      return explicit_entries(dim, entries);
    }
    throw DomainError("unrecognized braiding kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid braiding JSON: ") + e.what());
  }
}

nlohmann::json Braiding::to_json() const {
  nlohmann::json j;
  j["dim"] = dim_;
  switch (kind_) {
    case Kind::Flip:
      j["kind"] = "flip";
      break;
    case Kind::Diagonal: {
      j["kind"] = "diagonal";
      nlohmann::json q = nlohmann::json::array();
      for (std::int32_t i = 1; i <= dim_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::int32_t jj = 1; jj <= dim_; ++jj)
          row.push_back(
              rational_to_string(pair(i, jj).coeff_of(TensorWord{jj, i})));
        q.push_back(std::move(row));
      }
      j["q"] = std::move(q);
      break;
    }
    case Kind::Explicit: {
      j["kind"] = "explicit";
      nlohmann::json entries = nlohmann::json::array();
      for (std::int32_t i = 1; i <= dim_; ++i)
        for (std::int32_t jj = 1; jj <= dim_; ++jj) {
          nlohmann::json ej;
          ej["i"] = i;
          ej["j"] = jj;
          nlohmann::json terms = nlohmann::json::array();
          for (const auto& t : pair(i, jj).terms()) {
            nlohmann::json tj;
            tj["coeff"] = rational_to_string(t.coeff);
            tj["k"] = t.elem[0];
            tj["l"] = t.elem[1];
            terms.push_back(std::move(tj));
          }
          ej["terms"] = std::move(terms);
          entries.push_back(std::move(ej));
        }
      j["entries"] = std::move(entries);
      break;
    }
  }
  return j;
}

const LinComb<TensorWord>& Braiding::pair(std::int32_t i, std::int32_t j) const {
  require_letter(dim_, i);
  require_letter(dim_, j);
  return images_[pair_index(dim_, i, j)];
}

LinComb<TensorWord> Braiding::apply_adjacent(const LinComb<TensorWord>& v,
                                             int pos) const {
  if (pos < 1) throw DomainError("tensor position must be at least 1");
  return v.map([&](const TensorWord& w) {
    if (w.size() < static_cast<std::size_t>(pos) + 1)
      throw DomainError("tensor position " + std::to_string(pos) +
                        " out of range for a word of " +
                        std::to_string(w.size()) + " letters");
    const LinComb<TensorWord>& image = pair(w[pos - 1], w[pos]);
    return image.map([&](const TensorWord& kl) {
      TensorWord out(w);
      out[pos - 1] = kl[0];
      out[pos] = kl[1];
      return LinComb<TensorWord>::single(std::move(out));
    });
  });
}

LinComb<TensorWord> Braiding::lift(const Perm& w,
                                   const LinComb<TensorWord>& v) const {
  for (const auto& t : v.terms())
    if (t.elem.size() != w.size())
      throw DomainError("permutation lift needs words of exactly " +
                        std::to_string(w.size()) + " letters");
  std::vector<int> word = reduced_word(w);
  LinComb<TensorWord> acc = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = apply_adjacent(acc, *it);
  return acc;
}

LinComb<TensorWord> Braiding::block(int m, int n,
                                    const LinComb<TensorWord>& v) const {
  if (m < 0 || n < 0) throw DomainError("block sizes must be non-negative");
  for (const auto& t : v.terms())
    if (t.elem.size() != static_cast<std::size_t>(m) + static_cast<std::size_t>(n))
      throw DomainError("block crossing needs words of exactly " +
                        std::to_string(m + n) + " letters");
  return block_at(m, n, 1, v);
}

LinComb<TensorWord> Braiding::block_at(int m, int n, int offset,
                                       const LinComb<TensorWord>& v) const {
  if (m < 0 || n < 0) throw DomainError("block sizes must be non-negative");
  if (offset < 1) throw DomainError("block offset must be at least 1");
  if (m == 0 || n == 0) return v;
  std::vector<int> word = reduced_word(block_cross(m, n));
  LinComb<TensorWord> acc = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = apply_adjacent(acc, offset - 1 + *it);
  return acc;
}

std::vector<std::string> Braiding::yang_baxter_failures() const {
  std::vector<std::string> failures;
  for (std::int32_t i = 1; i <= dim_; ++i)
    for (std::int32_t j = 1; j <= dim_; ++j)
      for (std::int32_t k = 1; k <= dim_; ++k) {
        LinComb<TensorWord> base = LinComb<TensorWord>::single({i, j, k});
        LinComb<TensorWord> lhs =
            apply_adjacent(apply_adjacent(apply_adjacent(base, 1), 2), 1);
        LinComb<TensorWord> rhs =
            apply_adjacent(apply_adjacent(apply_adjacent(base, 2), 1), 2);
        if (lhs != rhs)
          failures.push_back("braid relation fails on basis triple (" +
                             std::to_string(i) + ", " + std::to_string(j) +
                             ", " + std::to_string(k) + ")");
      }
  // Invertibility of the matrix on V (x) V.
  const std::size_t cells =
      static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_);
  std::vector<std::vector<Rational>> matrix(
      cells, std::vector<Rational>(cells, Rational(0)));
  for (std::int32_t i = 1; i <= dim_; ++i)
    for (std::int32_t j = 1; j <= dim_; ++j) {
      std::size_t col = pair_index(dim_, i, j);
      for (const auto& t : pair(i, j).terms())
        matrix[pair_index(dim_, t.elem[0], t.elem[1])][col] += t.coeff;
    }
  if (matrix_rank(std::move(matrix)) < static_cast<int>(cells))
    failures.push_back("the map on the two-fold tensor space is singular");
  return failures;
}

}  // namespace braidtrees
