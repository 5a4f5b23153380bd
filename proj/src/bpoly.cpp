#include "dyn4/bpoly.hpp"

#include <algorithm>
#include <sstream>

namespace dyn4 {

namespace {
const UPoly kZeroPoly;
}

void BPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BPoly BPoly::constant(const UPoly& t_poly) {
  BPoly p;
  if (!t_poly.is_zero()) p.c_ = {t_poly};
  return p;
}

BPoly BPoly::monomial(const UPoly& t_coeff, int k) {
  BPoly p;
  if (!t_coeff.is_zero()) {
    p.c_.assign(static_cast<size_t>(k) + 1, UPoly());
    p.c_.back() = t_coeff;
  }
  return p;
}

int BPoly::degree_t() const {
  int d = -1;
  for (const auto& q : c_) d = std::max(d, q.degree());
  return d;
}

const UPoly& BPoly::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return kZeroPoly;
  return c_[static_cast<size_t>(k)];
}

BPoly BPoly::operator-() const {
  BPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

BPoly BPoly::operator+(const BPoly& o) const {
  std::vector<UPoly> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
  return BPoly(std::move(r));
}

BPoly BPoly::operator-(const BPoly& o) const {
  std::vector<UPoly> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
  return BPoly(std::move(r));
}

BPoly BPoly::operator*(const BPoly& o) const {
  if (is_zero() || o.is_zero()) return BPoly();
  std::vector<UPoly> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return BPoly(std::move(r));
}

BPoly BPoly::exact_div(const BPoly& b) const {
  if (b.is_zero()) throw Error("division by zero polynomial");
  if (is_zero()) return BPoly();
  if (degree_x() < b.degree_x()) throw NonExactDivision("divisor degree exceeds dividend");
  std::vector<UPoly> rem = c_;
  std::vector<UPoly> quo(static_cast<size_t>(degree_x() - b.degree_x()) + 1);
  const UPoly& lead = b.c_.back();
  for (int k = degree_x() - b.degree_x(); k >= 0; --k) {
    const UPoly& top = rem[static_cast<size_t>(k + b.degree_x())];
    if (top.is_zero()) continue;
    UPoly q = top.exact_div(lead);  // throws NonExactDivision if not divisible
    quo[static_cast<size_t>(k)] = q;
    for (int j = 0; j <= b.degree_x(); ++j)
      rem[static_cast<size_t>(k + j)] = rem[static_cast<size_t>(k + j)] - q * b.c_[static_cast<size_t>(j)];
  }
  for (int j = 0; j < b.degree_x(); ++j)
    if (!rem[static_cast<size_t>(j)].is_zero())
      throw NonExactDivision("bivariate division left a remainder");
  return BPoly(std::move(quo));
}

BPoly BPoly::compose_x(const BPoly& inner) const {
  BPoly v;
  for (size_t i = c_.size(); i-- > 0;) v = v * inner + BPoly::constant(c_[i]);
  return v;
}

UPoly BPoly::specialize(const Rat& c) const {
  std::vector<Rat> out(c_.size(), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].evaluate(c);
  return UPoly(std::move(out));
}

UPoly discriminant_in_t(const BPoly& P) {
  if (P.degree_x() < 2) throw Error("discriminant_in_t needs x-degree >= 2");
  const UPoly& lead = P.coeff(P.degree_x());
  if (lead.degree() != 0) throw Error("discriminant_in_t needs a constant leading x-coefficient");
  // Degree bound for the interpolant: every Sylvester entry has t-degree at
  // most deg_t P, and the matrix has 2 deg_x - 1 rows.
  const int bound = P.degree_t() * (2 * P.degree_x() - 1) + 1;
  std::vector<Rat> xs, ys;
  for (int k = 0; static_cast<int>(xs.size()) < bound + 1; ++k) {
    for (int sign : {1, -1}) {
      if (k == 0 && sign == -1) continue;
      if (static_cast<int>(xs.size()) >= bound + 1) break;
      Rat tau = make_rat(sign * k);
      xs.push_back(tau);
      ys.push_back(discriminant(P.specialize(tau)));
    }
  }
  // Newton's divided differences.
  std::vector<Rat> coef = ys;
  for (size_t j = 1; j < coef.size(); ++j)
    for (size_t i = coef.size(); i-- > j;)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  UPoly result;
  for (size_t i = coef.size(); i-- > 0;) {
    UPoly lin{-xs[i], Rat(1)};
    result = result * lin + UPoly::constant(coef[i]);
  }
  return result;
}

BPoly substitute_t_rational(const BPoly& P, const UPoly& num, const UPoly& den, int clear_power) {
  if (clear_power < P.degree_t()) throw Error("substitute_t_rational: clearing power too small");
  std::vector<UPoly> out;
  out.reserve(P.coeffs().size());
  // Precompute num^i * den^(clear_power - i).
  std::vector<UPoly> num_pow{UPoly::constant(1)}, den_pow{UPoly::constant(1)};
  for (int i = 1; i <= clear_power; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  for (const UPoly& q : P.coeffs()) {
    UPoly acc;
    for (int i = 0; i <= q.degree(); ++i) {
      if (q.coeff(i) == 0) continue;
      acc = acc + num_pow[static_cast<size_t>(i)] *
                      den_pow[static_cast<size_t>(clear_power - i)] * q.coeff(i);
    }
    out.push_back(acc);
  }
  return BPoly(std::move(out));
}

std::string BPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const UPoly& q = c_[i];
    if (q.is_zero()) continue;
    // Single-term coefficients print inline; sums get parentheses.
    int terms = 0;
    for (const auto& a : q.coeffs())
      if (a != 0) ++terms;
    bool negative_single = terms == 1 && q.coeff(q.degree()) < 0;
    UPoly shown = negative_single ? -q : q;
    if (first) {
      if (negative_single) os << "-";
      first = false;
    } else {
      os << (negative_single ? " - " : " + ");
    }
    std::string cs = shown.str('t');
    bool is_one = shown.degree() == 0 && shown.coeff(0) == 1;
    if (i == 0) {
      os << (terms > 1 ? "(" + cs + ")" : cs);
    } else {
      if (!is_one) {
        os << (terms > 1 ? "(" + cs + ")" : cs) << "*";
      }
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace dyn4
