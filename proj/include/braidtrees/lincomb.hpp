// Formal linear combinations over an ordered basis with exact coefficients.
//
// Any type B with a free function `std::string canonical_key(const B&)`
// (found by ADL) can serve as a basis. Terms are kept sorted by that key,
// which makes every combination — and therefore every serialized output —
// byte-deterministic.
#pragma once

#include <braidtrees/rational.hpp>
// Tensor words are std::vector typedefs, so their canonical_key overload is
// not reachable through ADL; it must be visible before the templates below.
#include <braidtrees/tensor.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace braidtrees {

// Plain strings may serve as an ad-hoc basis, keyed by themselves.
inline const std::string& canonical_key(const std::string& s) { return s; }

template <class B>
class LinComb {
 public:
  struct Term {
    B elem;
    Rational coeff;
    std::string key;
  };

  LinComb() = default;

  static LinComb single(B b, Rational c = Rational(1)) {
    LinComb out;
    if (c != 0) {
      std::string k = canonical_key(b);
      out.terms_.push_back(Term{std::move(b), std::move(c), std::move(k)});
    }
    return out;
  }

  static LinComb zero() { return LinComb(); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LinComb& operator+=(const LinComb& other) {
    if (other.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
      const int cmp = terms_[i].key.compare(other.terms_[j].key);
      if (cmp < 0) {
        merged.push_back(std::move(terms_[i++]));
      } else if (cmp > 0) {
        merged.push_back(other.terms_[j++]);
      } else {
        Rational c = terms_[i].coeff + other.terms_[j].coeff;
        if (c != 0) {
          merged.push_back(Term{std::move(terms_[i].elem), std::move(c),
                                std::move(terms_[i].key)});
        }
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
    for (; j < other.terms_.size(); ++j) merged.push_back(other.terms_[j]);
    if (merged.size() > max_terms()) {
      throw LimitError("expansion exceeds BRAIDTREES_MAX_TERMS (" +
                       std::to_string(max_terms()) + " terms)");
    }
    terms_ = std::move(merged);
    return *this;
  }

  LinComb& operator-=(const LinComb& other) { return *this += other * Rational(-1); }

  LinComb& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (Term& t : terms_) t.coeff *= c;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

  bool operator==(const LinComb& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].key != other.terms_[i].key ||
          terms_[i].coeff != other.terms_[i].coeff) {
        return false;
      }
    }
    return true;
  }
  bool operator!=(const LinComb& other) const { return !(*this == other); }

  Rational coeff_of_key(const std::string& key) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), key,
        [](const Term& t, const std::string& k) { return t.key < k; });
    if (it != terms_.end() && it->key == key) return it->coeff;
    return Rational(0);
  }

  Rational coeff_of(const B& b) const { return coeff_of_key(canonical_key(b)); }

  // Linear extension: f maps a basis element to a LinComb (possibly over a
  // different basis); the result is sum coeff * f(elem).
  template <class F>
  auto map(F&& f) const -> decltype(f(std::declval<const B&>())) {
    decltype(f(std::declval<const B&>())) out;
    for (const Term& t : terms_) out += f(t.elem) * t.coeff;
    return out;
  }

  // Like map but f also receives the coefficient and returns a full LinComb
  // contribution (already scaled).
  template <class F>
  auto map_terms(F&& f) const
      -> decltype(f(std::declval<const B&>(), std::declval<const Rational&>())) {
    decltype(f(std::declval<const B&>(), std::declval<const Rational&>())) out;
    for (const Term& t : terms_) out += f(t.elem, t.coeff);
    return out;
  }

  // Human-readable form: terms joined with " + ", coefficient omitted when 1.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i > 0) out += " + ";
      if (terms_[i].coeff != 1) {
        out += rational_to_string(terms_[i].coeff);
        out += ' ';
      }
      out += terms_[i].key;
    }
    return out;
  }

 private:
  std::vector<Term> terms_;  // sorted by key, no zero coefficients
};

}  // namespace braidtrees
