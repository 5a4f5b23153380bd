#pragma once

#include <vector>

#include "dyn4/core.hpp"

namespace dyn4 {

// True iff q is a square in Q_p: even valuation, and the unit part is a
// quadratic residue mod p (odd p) or congruent to 1 mod 8 (p = 2). q != 0.
bool is_square_qp(const Rat& q, const Int& p);

/// Finite-precision p-adic value p^valuation * unit + O(p^(valuation+N)),
/// with the unit coprime to p, or an exactly-zero flag.
class PadicApprox {
 public:
  // Exact rational input; the valuation is exact, the unit kept mod p^N.
  static PadicApprox from_rational(const Rat& q, const Int& p, int precision);
  static PadicApprox exact_zero(const Int& p);
  static PadicApprox from_parts(const Int& p, long valuation, const Int& unit, int precision);

  const Int& prime() const { return p_; }
  bool is_exact_zero() const { return zero_; }
  long valuation() const;       // throws on exact zero
  const Int& unit() const { return unit_; }
  int precision() const { return precision_; }
  // Exponent A with value known modulo p^A (valuation + N).
  long absolute_precision() const { return valuation_ + precision_; }

 private:
  PadicApprox(const Int& p) : p_(p) {}
  Int p_;
  bool zero_ = false;
  long valuation_ = 0;
  Int unit_ = 0;
  int precision_ = 1;
};

// Upper bound on the number of zeros in Z_p of a power series with the given
// leading coefficients: the largest index attaining the minimal valuation,
// valid once the tail is dominated per the n - log_p(n) criterion. Throws
// InsufficientLength if that criterion fails for n = coeffs.size() - 1, and
// InsufficientPrecision if some coefficient is too coarse to certify the
// minimum.
int strassmann_bound(const std::vector<PadicApprox>& coeffs);

}  // namespace dyn4
