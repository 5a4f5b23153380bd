#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyn4/core.hpp"

namespace dyn4 {

/// Arithmetic in F_p for word-sized p (p < 2^62); products go through
/// 128-bit intermediates.
struct FpCtx {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t reduce_int(const Int& n) const;
  std::uint64_t reduce_rat(const Rat& q) const;  // throws if p divides the denominator
};

/// Dense polynomial over F_p, ascending coefficients, no leading zeros.
class FpPoly {
 public:
  FpPoly() : p_(2) {}
  explicit FpPoly(std::uint64_t p) : p_(p) {}
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    normalize();
  }

  std::uint64_t prime() const { return p_; }
  FpCtx ctx() const { return FpCtx{p_}; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t coeff(int k) const {
    return (k < 0 || static_cast<size_t>(k) >= c_.size()) ? 0 : c_[static_cast<size_t>(k)];
  }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const FpPoly& o) const { return !(*this == o); }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(std::uint64_t a) const;

  std::pair<FpPoly, FpPoly> divrem(const FpPoly& b) const;
  FpPoly monic() const;
  FpPoly derivative() const;
  std::uint64_t evaluate(std::uint64_t x0) const;

  std::string str(char var = 'x') const;

  static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }
  static FpPoly constant(std::uint64_t p, std::uint64_t a) { return FpPoly(p, {a}); }

 private:
  void normalize();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

FpPoly fp_gcd(FpPoly a, FpPoly b);
// base^e mod m in F_p[x]
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m);

// Reduce a rational polynomial mod p (throws if p divides a denominator).
class UPoly;
FpPoly reduce_mod_p(const UPoly& f, std::uint64_t p);

}  // namespace dyn4
