#include "dyn4/dynatomic.hpp"

#include <vector>

namespace dyn4 {

int mobius(long n) {
  if (n < 1) throw Error("mobius requires n >= 1");
  int prime_count = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++prime_count;
    }
  }
  if (n > 1) ++prime_count;
  return prime_count % 2 == 0 ? 1 : -1;
}

namespace {

std::vector<int> divisors(int n) {
  std::vector<int> ds;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  return ds;
}

}  // namespace

UPoly dynatomic(const UPoly& f, int n, int max_degree) {
  if (n < 1) throw Error("dynatomic requires n >= 1");
  if (f.degree() < 2) throw Error("dynatomic requires deg f >= 2");
  UPoly numer = UPoly::constant(1);
  UPoly denom = UPoly::constant(1);
  const UPoly x = UPoly::identity();
  for (int d : divisors(n)) {
    int mu = mobius(n / d);
    if (mu == 0) continue;
    UPoly factor = iterate_poly(f, d, max_degree) - x;
    if (mu == 1)
      numer = numer * factor;
    else
      denom = denom * factor;
  }
  return numer.exact_div(denom);
}

BPoly dynatomic_generic(int n, int max_degree) {
  if (n < 1) throw Error("dynatomic requires n >= 1");
  double deg = 1.0;
  for (int i = 0; i < n; ++i) {
    deg *= 2;
    if (deg > max_degree) throw BoundExceeded("dynatomic: 2^n exceeds degree bound");
  }
  const BPoly f = BPoly::x() * BPoly::x() + BPoly::t();
  const BPoly x = BPoly::x();
  BPoly numer = BPoly::constant(UPoly::constant(1));
  BPoly denom = numer;
  for (int d : divisors(n)) {
    int mu = mobius(n / d);
    if (mu == 0) continue;
    BPoly iter = f;
    for (int i = 1; i < d; ++i) iter = iter.compose_x(f);
    BPoly factor = iter - x;
    if (mu == 1)
      numer = numer * factor;
    else
      denom = denom * factor;
  }
  return numer.exact_div(denom);
}

const BPoly& phi4_reference() {
  static const BPoly phi4 = [] {
    auto T = [](std::vector<long> tc) { return upoly_from_integers(tc); };
    std::vector<UPoly> c(13);
    c[12] = T({1});
    c[10] = T({0, 6});
    c[9] = T({1});
    c[8] = T({0, 3, 15});
    c[7] = T({0, 4});
    c[6] = T({1, 0, 12, 20});
    c[5] = T({0, 2, 6});
    c[4] = T({0, 4, 3, 18, 15});
    c[3] = T({1, 0, 4, 4});
    c[2] = T({0, 1, 5, 6, 12, 6});
    c[1] = T({0, 2, 1, 2, 1});
    c[0] = T({1, 0, 2, 3, 3, 3, 1});
    return BPoly(std::move(c));
  }();
  return phi4;
}

UPoly phi4_at(const Rat& c) { return phi4_reference().specialize(c); }

NormalizedQuadratic normalize_quadratic(const UPoly& f) {
  if (f.degree() != 2) throw DegenerateInput("normalize_quadratic requires degree 2");
  const Rat a = f.coeff(2);
  const Rat b = f.coeff(1);
  const Rat d = f.coeff(0);
  NormalizedQuadratic out;
  out.alpha = a;
  out.beta = b / 2;
  out.c = a * d + b / 2 - b * b / 4;
  // Verify l(f(l^{-1}(x))) = x^2 + c before trusting the formula.
  const UPoly l{out.beta, out.alpha};
  const UPoly l_inv{-out.beta / out.alpha, Rat(1) / out.alpha};
  const UPoly conjugated = l.compose(f.compose(l_inv));
  const UPoly expected{out.c, Rat(0), Rat(1)};
  if (conjugated != expected) throw Error("conjugation identity failed (internal bug)");
  return out;
}

}  // namespace dyn4
