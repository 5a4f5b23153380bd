#pragma once

#include <string>
#include <vector>

#include "dyn4/upoly.hpp"

namespace dyn4 {

/// Element of Q[t][x]: dense in x, each x-coefficient a polynomial in t.
class BPoly {
 public:
  BPoly() = default;
  explicit BPoly(std::vector<UPoly> x_coeffs) : c_(std::move(x_coeffs)) { normalize(); }

  static BPoly zero() { return BPoly(); }
  static BPoly constant(const UPoly& t_poly);
  // t_coeff * x^k
  static BPoly monomial(const UPoly& t_coeff, int k);
  static BPoly x() { return monomial(UPoly::constant(1), 1); }
  static BPoly t() { return constant(UPoly::identity()); }

  bool is_zero() const { return c_.empty(); }
  int degree_x() const { return static_cast<int>(c_.size()) - 1; }
  int degree_t() const;

  const UPoly& coeff(int k) const;
  const std::vector<UPoly>& coeffs() const { return c_; }

  bool operator==(const BPoly& o) const { return c_ == o.c_; }
  bool operator!=(const BPoly& o) const { return c_ != o.c_; }

  BPoly operator-() const;
  BPoly operator+(const BPoly& o) const;
  BPoly operator-(const BPoly& o) const;
  BPoly operator*(const BPoly& o) const;

  // Division in (Q[t])[x]; every coefficient division must be exact, so this
  // throws NonExactDivision unless the divisor genuinely divides.
  BPoly exact_div(const BPoly& b) const;

  // this(x := inner(x)), coefficients stay in Q[t].
  BPoly compose_x(const BPoly& inner) const;

  // Substitutes t = c in every coefficient.
  UPoly specialize(const Rat& c) const;

  std::string str() const;

 private:
  void normalize();
  std::vector<UPoly> c_;
};

// disc_x P as a polynomial in t, by specializing t at enough sample points
// and interpolating. Requires the leading x-coefficient of P to be a nonzero
// constant (then specialization commutes with the discriminant everywhere).
UPoly discriminant_in_t(const BPoly& P);

// den(t)^clear_power * P(num(t)/den(t), x), which lands back in Q[t][x] when
// clear_power >= deg_t P.
BPoly substitute_t_rational(const BPoly& P, const UPoly& num, const UPoly& den, int clear_power);

}  // namespace dyn4
