#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyn4 {

// Arbitrary-precision integer and rational scalars. mpq_class keeps values
// canonical (lowest terms, positive denominator), which is exactly the
// invariant Rat requires.
using Int = mpz_class;
using Rat = mpq_class;

// Multiset of positive integers, sorted descending. Used for factor degrees
// over Q or F_p and for permutation cycle types.
using DegreeMultiset = std::vector<int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct NonExactDivision : Error {
  using Error::Error;
};
struct DegenerateInput : Error {
  using Error::Error;
};
struct PoleError : Error {
  using Error::Error;
};
struct BoundExceeded : Error {
  using Error::Error;
};
struct DepthExceeded : Error {
  using Error::Error;
};
struct InsufficientPrecision : Error {
  using Error::Error;
};
struct InsufficientLength : Error {
  using Error::Error;
};
struct InconsistentMembership : Error {
  using Error::Error;
};
struct MismatchError : Error {
  using Error::Error;
};

inline Int numerator(const Rat& q) { return q.get_num(); }
inline Int denominator(const Rat& q) { return q.get_den(); }

inline Rat make_rat(long n, long d = 1) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

// max(|num|, den); the usual naive height of a rational.
inline Int height(const Rat& q) {
  Int n = abs(q.get_num());
  return n > q.get_den() ? n : Int(q.get_den());
}

// "p/q" or "p"; optional leading sign; throws ParseError on anything else.
Rat parse_rat(std::string_view s);

std::string rat_string(const Rat& q);

// Exact integer square root if n is a perfect square.
std::optional<Int> exact_isqrt(const Int& n);

// p-adic valuation of a nonzero integer.
long int_valuation(Int n, const Int& p);

// Valuation of a nonzero rational: v(num) - v(den).
long rat_valuation(const Rat& q, const Int& p);

bool is_prime(const Int& n);

// Sorted (descending) copy helper for degree multisets.
DegreeMultiset sorted_multiset(std::vector<int> parts);

std::string multiset_string(const DegreeMultiset& m);

}  // namespace dyn4
