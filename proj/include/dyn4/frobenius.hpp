#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "dyn4/classifier.hpp"

namespace dyn4 {

// Factor-degree multiset of Phi_4(c, x) mod p, or nullopt when p is bad for
// c (divides the discriminant numerator or a coefficient denominator).
std::optional<DegreeMultiset> degree_multiset_mod_p(const Rat& c, std::uint64_t p);

/// Empirical mod-p root statistics for Phi_4(c, x) against the
/// group-predicted Chebotarev distribution. The estimator counts primes up
/// to a bound, so it reports an empirical natural density; for these sets it
/// agrees with the Dirichlet density being approximated.
struct SampleReport {
  Rat c;
  std::uint64_t bound = 0;
  long primes_used = 0;
  long primes_skipped = 0;  // bad primes
  Rat empirical_root_fraction;
  std::map<DegreeMultiset, long> histogram;
  Rat predicted_density;
  // Empty when c is one of the tabulated special values (no permutation
  // representation is available for those groups).
  std::map<DegreeMultiset, Rat> predicted_distribution;
  std::optional<Rat> total_variation;
  // True iff every observed multiset lies in the support of the predicted
  // distribution; a violation falsifies the classification.
  bool support_ok = true;

  bool operator==(const SampleReport& o) const = default;
};

SampleReport sample_density(const Rat& c, std::uint64_t bound);

// Ascending primes <= bound.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace dyn4
