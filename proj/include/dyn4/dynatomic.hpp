#pragma once

#include "dyn4/bpoly.hpp"
#include "dyn4/upoly.hpp"

namespace dyn4 {

// Moebius function via trial factorization.
int mobius(long n);

/// Result of conjugating a rational quadratic into the x^2 + c family.
/// The conjugator l(x) = alpha*x + beta satisfies l(f(l^{-1}(x))) = x^2 + c,
/// re-verified symbolically on construction.
struct NormalizedQuadratic {
  Rat c;
  Rat alpha;
  Rat beta;
};

// n-th dynatomic polynomial of f: product over d | n of (f^d(x) - x)^mu(n/d),
// computed as an exact division of the mu = +1 product by the mu = -1
// product. Degree of f must be >= 2 and (deg f)^n <= max_degree.
UPoly dynatomic(const UPoly& f, int n, int max_degree = 4096);

// Same for the generic quadratic x^2 + t over Q[t].
BPoly dynatomic_generic(int n, int max_degree = 4096);

// The specialization-ready Phi_4(t, x) from its hard-coded coefficient
// table. Equal to dynatomic_generic(4); classifier start-up asserts this.
const BPoly& phi4_reference();

// Phi_4(c, x).
UPoly phi4_at(const Rat& c);

NormalizedQuadratic normalize_quadratic(const UPoly& f);

}  // namespace dyn4
