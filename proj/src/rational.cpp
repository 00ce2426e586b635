#include <braidtrees/rational.hpp>

#include <cstdlib>

namespace braidtrees {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::size_t g_max_terms = 1000000;

}  // namespace

Rational rational_from_string(const std::string& s) {
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(s)) throw DomainError("invalid rational: '" + s + "'");
    return Rational(Int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw DomainError("invalid rational: '" + s + "'");
  }
  Int n(num);
  Int d(den);
  if (d == 0) throw DomainError("zero denominator in rational: '" + s + "'");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

std::string rational_to_string(const Rational& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::size_t max_terms() { return g_max_terms; }

void refresh_limits() {
  const char* env = std::getenv("BRAIDTREES_MAX_TERMS");
  if (env == nullptr) {
    g_max_terms = 1000000;
    return;
  }
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    throw DomainError("BRAIDTREES_MAX_TERMS must be a positive integer");
  }
  g_max_terms = static_cast<std::size_t>(v);
}

}  // namespace braidtrees
