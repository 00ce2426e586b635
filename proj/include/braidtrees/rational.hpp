// Exact arbitrary-precision rational scalars and the project's error types.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace braidtrees {

using Int = boost::multiprecision::cpp_int;
// Always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Raised for invalid input or operations outside an operation's domain
// (e.g. the unit-on-unit half-products). CLI maps this to exit code 2.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an expansion exceeds the configured term cap. Exit code 2.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p", "-p", "p/q" (optional sign on either part); rejects anything
// else. The result is canonical regardless of the input's form.
Rational rational_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rational_to_string(const Rational& r);

// Maximum number of terms a single linear combination (or enumeration) may
// hold; configured by BRAIDTREES_MAX_TERMS, default 1'000'000.
std::size_t max_terms();
// Re-reads BRAIDTREES_MAX_TERMS (used after setenv by tests and CLI entry).
void refresh_limits();

}  // namespace braidtrees
