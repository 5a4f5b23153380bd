#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dyn4/fp_poly.hpp"
#include "dyn4/upoly.hpp"

namespace dyn4 {

// Default seed for the probabilistic equal-degree splitting; fixed so runs
// reproduce, overridable from the CLI.
inline constexpr std::uint64_t kDefaultFactorSeed = 0x71C4D9A2B35E11ULL;

struct FpFactor {
  FpPoly factor;  // monic irreducible
  int multiplicity;
};

struct FpFactorization {
  std::uint64_t unit;  // leading coefficient of the input
  std::vector<FpFactor> factors;
};

// Complete factorization over F_p: squarefree decomposition, distinct-degree
// splitting, then equal-degree splitting (Cantor-Zassenhaus for odd p,
// exhaustive search for p = 2). Factors come back sorted for determinism.
FpFactorization factor_mod_p(const FpPoly& f, std::uint64_t seed = kDefaultFactorSeed);

// Degrees of the irreducible factors with multiplicity, by distinct-degree
// splitting only. Deterministic; used for Frobenius sampling.
DegreeMultiset fp_degree_multiset(const FpPoly& f);

struct QFactor {
  UPoly factor;  // primitive integer polynomial, positive leading coefficient
  int multiplicity;
};

struct QFactorization {
  Rat unit;  // input = unit * prod factor^multiplicity
  std::vector<QFactor> factors;
};

// Factorization over Q by squarefree (Yun) decomposition, factoring modulo a
// good prime, quadratic Hensel lifting past the Landau-Mignotte bound, and
// Zassenhaus subset recombination. The result is certified by multiplying
// back; a mismatch throws (it would be an implementation bug).
QFactorization factor_q(const UPoly& f, std::uint64_t seed = kDefaultFactorSeed);

DegreeMultiset factorization_type(const UPoly& f, std::uint64_t seed = kDefaultFactorSeed);

// All rational roots with multiplicity, ascending. Divisor enumeration of the
// (factored) constant and leading coefficients after clearing denominators.
std::vector<std::pair<Rat, int>> rational_roots(const UPoly& f);

// sqrt(q) in Q if q is a rational square (0 included), otherwise nullopt.
std::optional<Rat> rational_sqrt(const Rat& q);

}  // namespace dyn4
