#include "dyn4/fp_poly.hpp"

#include <sstream>

#include "dyn4/upoly.hpp"

namespace dyn4 {

std::uint64_t FpCtx::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FpCtx::inv(std::uint64_t a) const {
  if (a % p == 0) throw Error("inverse of zero mod p");
  return pow(a % p, p - 2);
}

std::uint64_t FpCtx::reduce_int(const Int& n) const {
  Int m = n % Int(static_cast<unsigned long>(p));
  if (m < 0) m += Int(static_cast<unsigned long>(p));
  return m.get_ui();
}

std::uint64_t FpCtx::reduce_rat(const Rat& q) const {
  std::uint64_t d = reduce_int(Int(q.get_den()));
  if (d == 0) throw Error("denominator divisible by p");
  return mul(reduce_int(q.get_num()), inv(d));
}

void FpPoly::normalize() {
  for (auto& a : c_) a %= p_;
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  FpCtx f = ctx();
  std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = f.add(r[i], o.c_[i]);
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  FpCtx f = ctx();
  std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = f.sub(r[i], o.c_[i]);
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(p_);
  FpCtx f = ctx();
  std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(c_[i], o.c_[j]));
  }
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scaled(std::uint64_t a) const {
  FpCtx f = ctx();
  std::vector<std::uint64_t> r = c_;
  for (auto& x0 : r) x0 = f.mul(x0, a % p_);
  return FpPoly(p_, std::move(r));
}

std::pair<FpPoly, FpPoly> FpPoly::divrem(const FpPoly& b) const {
  if (b.is_zero()) throw Error("division by zero polynomial");
  if (degree() < b.degree()) return {FpPoly(p_), *this};
  FpCtx f = ctx();
  std::vector<std::uint64_t> rem = c_;
  std::vector<std::uint64_t> quo(static_cast<size_t>(degree() - b.degree()) + 1, 0);
  std::uint64_t lead_inv = f.inv(b.leading());
  for (int k = degree() - b.degree(); k >= 0; --k) {
    std::uint64_t q = f.mul(rem[static_cast<size_t>(k + b.degree())], lead_inv);
    quo[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<size_t>(k + j)] =
          f.sub(rem[static_cast<size_t>(k + j)], f.mul(q, b.c_[static_cast<size_t>(j)]));
  }
  rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
  return {FpPoly(p_, std::move(quo)), FpPoly(p_, std::move(rem))};
}

FpPoly FpPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(ctx().inv(leading()));
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(p_);
  FpCtx f = ctx();
  std::vector<std::uint64_t> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = f.mul(c_[i], i % p_);
  return FpPoly(p_, std::move(r));
}

std::uint64_t FpPoly::evaluate(std::uint64_t x0) const {
  FpCtx f = ctx();
  std::uint64_t v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = f.add(f.mul(v, x0), c_[i]);
  return v;
}

std::string FpPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] != 1) os << c_[i] << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m) {
  FpPoly r = FpPoly::constant(base.prime(), 1);
  FpPoly b = base.divrem(m).second;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = (r * r).divrem(m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b).divrem(m).second;
  }
  return r;
}

FpPoly reduce_mod_p(const UPoly& f, std::uint64_t p) {
  FpCtx ctx{p};
  std::vector<std::uint64_t> c(f.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = ctx.reduce_rat(f.coeffs()[i]);
  return FpPoly(p, std::move(c));
}

}  // namespace dyn4
