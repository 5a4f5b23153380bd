#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dyn4/core.hpp"

namespace dyn4 {

/// Dense univariate polynomial over Q. Coefficients are stored ascending
/// (index = degree of the term); the leading coefficient is nonzero unless
/// the polynomial is zero. Values are immutable in spirit: every operation
/// returns a fresh polynomial.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
  UPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }

  static UPoly zero() { return UPoly(); }
  static UPoly constant(const Rat& a);
  // a * x^k
  static UPoly monomial(const Rat& a, int k);
  static UPoly identity() { return monomial(1, 1); }

  // deg 0 polynomials and the zero polynomial both report is_constant().
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Rat& coeff(int k) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return c_ != o.c_; }

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rat& a) const;

  // Quotient and remainder with deg r < deg b. Exact over Q; throws on b = 0.
  std::pair<UPoly, UPoly> divrem(const UPoly& b) const;
  // Division that must leave remainder zero; throws NonExactDivision.
  UPoly exact_div(const UPoly& b) const;

  UPoly derivative() const;
  Rat evaluate(const Rat& x0) const;
  // this(inner(x))
  UPoly compose(const UPoly& inner) const;
  UPoly pow(int e) const;

  // f(x + a), computed by repeated synthetic division.
  UPoly taylor_shift(const Rat& a) const;

  // Largest rational c with f = c * (primitive integer polynomial with
  // positive leading coefficient); {0, zero poly} for f = 0.
  std::pair<Rat, UPoly> content_primitive() const;

  bool has_integer_coeffs() const;
  std::vector<Int> integer_coeffs() const;

  std::string str(char var = 'x') const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

inline UPoly operator*(const Rat& a, const UPoly& f) { return f * a; }

UPoly upoly_from_integers(const std::vector<long>& coeffs);
UPoly upoly_from_big(const std::vector<Int>& coeffs);

// Parses the canonical text form "c_k*x^k + ... + c_0" with rationals as
// "p/q". Accepts omitted coefficients ("x^2"), omitted exponents ("3*x"),
// and free whitespace.
UPoly parse_upoly(std::string_view text, char var = 'x');

// Resultant with respect to x, as the determinant of the Sylvester matrix
// with the rows of f first. Pinned convention: res(x-a, x-b) = a-b.
Rat resultant(const UPoly& f, const UPoly& g);

// disc f = (-1)^(d(d-1)/2) res(f, f') / lc(f), d = deg f >= 2.
Rat discriminant(const UPoly& f);

// Monic gcd over Q (primitive PRS underneath). gcd(0, 0) = 0.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);

// f / gcd(f, f'): same roots, all simple.
UPoly squarefree_part(const UPoly& f);

// f raised to the n-th compositional power; degree (deg f)^n must stay
// within max_degree.
UPoly iterate_poly(const UPoly& f, int n, int max_degree = 4096);

}  // namespace dyn4
