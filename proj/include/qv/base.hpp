#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qv {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/** Thrown when an enumeration or counting routine would exceed its budget.
    Callers that can degrade gracefully catch this; the CLI maps it to exit
    code 2. */
class budget_exceeded : public std::runtime_error {
public:
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/** Resource limits for the enumerative routines.  Budgets bound work, not
    correctness: a computation either finishes exactly or throws. */
struct Budget {
  // cap on the product of (b_i + 1) for box enumerations of vectors <= b
  long long max_box = 100'000'000;
  // cap on nodes visited while enumerating multiset decompositions
  long long max_decomp_nodes = 50'000'000;
  // hyperplane count beyond which the intersection-poset chamber count refuses
  int max_hyperplanes = 40;
  // hyperplane count beyond which the deletion-restriction cross-check refuses
  int max_hyperplanes_dr = 18;
  // rank beyond which graph canonicalization refuses
  int max_iso_rank = 12;
  int threads = 1;
};

inline BigInt factorial(Int n) {
  BigInt r = 1;
  for (Int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (Int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

inline BigInt pow2(Int n) {
  BigInt r = 1;
  return r << static_cast<unsigned>(n);
}

} // namespace qv
