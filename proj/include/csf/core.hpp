#pragma once

// Exact integer arithmetic and the error types shared by every module.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace csf {

using Integer = boost::multiprecision::cpp_int;

/// A caller violated a documented precondition (bad parameters, weight
/// mismatch, malformed input).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the closed-form dispatchers when no formula covers the request.
/// Callers are expected to fall back to brute force.
class NoClosedForm : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The recursion-node cap of an exhaustive count was hit. Counts are never
/// truncated silently.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("recursion budget of " + std::to_string(budget) +
                           " nodes exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

/// A reproduced identity did not hold.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Indicator of a proposition as an integer.
inline constexpr int chi(bool p) noexcept { return p ? 1 : 0; }

/// C(n, k), zero whenever k < 0 or k > n (including negative n).
inline Integer binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer factorial(long long n) {
  Integer r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Exact division; throws if `den` does not divide `num`.
inline Integer exact_div(const Integer& num, const Integer& den) {
  if (den == 0 || num % den != 0)
    throw std::logic_error("non-exact division " + num.str() + " / " + den.str());
  return num / den;
}

}  // namespace csf
