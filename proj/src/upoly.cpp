#include "dyn4/upoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dyn4 {

namespace {

const Rat kZero = 0;

Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace

void UPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rat& a) {
  UPoly p;
  if (a != 0) p.c_ = {a};
  return p;
}

UPoly UPoly::monomial(const Rat& a, int k) {
  UPoly p;
  if (a != 0) {
    p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
    p.c_.back() = a;
  }
  return p;
}

const Rat& UPoly::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return kZero;
  return c_[static_cast<size_t>(k)];
}

const Rat& UPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rat& a) const {
  if (a == 0) return UPoly();
  UPoly r = *this;
  for (auto& x : r.c_) x *= a;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& b) const {
  if (b.is_zero()) throw Error("division by zero polynomial");
  if (degree() < b.degree()) return {UPoly(), *this};
  std::vector<Rat> rem = c_;
  std::vector<Rat> quo(static_cast<size_t>(degree() - b.degree()) + 1, Rat(0));
  const Rat& lead = b.leading();
  for (int k = degree() - b.degree(); k >= 0; --k) {
    Rat q = rem[static_cast<size_t>(k + b.degree())] / lead;
    quo[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<size_t>(k + j)] -= q * b.c_[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::exact_div(const UPoly& b) const {
  auto [q, r] = divrem(b);
  if (!r.is_zero()) throw NonExactDivision("polynomial division left a remainder");
  return q;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UPoly(std::move(r));
}

Rat UPoly::evaluate(const Rat& x0) const {
  Rat v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = v * x0 + c_[i];
  return v;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly v;
  for (size_t i = c_.size(); i-- > 0;) v = v * inner + UPoly::constant(c_[i]);
  return v;
}

UPoly UPoly::pow(int e) const {
  UPoly r = UPoly::constant(1);
  UPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

UPoly UPoly::taylor_shift(const Rat& a) const {
  // Repeated synthetic division by (x - (-a)).
  std::vector<Rat> work = c_;
  std::vector<Rat> out(c_.size(), Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    for (size_t i = work.size() - 1; i > k; --i) work[i - 1] += work[i] * a;
    out[k] = work[k];
  }
  return UPoly(std::move(out));
}

std::pair<Rat, UPoly> UPoly::content_primitive() const {
  if (is_zero()) return {Rat(0), UPoly()};
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& a : c_) {
    num_gcd = int_gcd(num_gcd, a.get_num());
    den_lcm = int_lcm(den_lcm, a.get_den());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading() < 0) content = -content;
  UPoly prim = *this * (Rat(1) / content);
  return {content, prim};
}

bool UPoly::has_integer_coeffs() const {
  for (const auto& a : c_)
    if (a.get_den() != 1) return false;
  return true;
}

std::vector<Int> UPoly::integer_coeffs() const {
  std::vector<Int> out;
  out.reserve(c_.size());
  for (const auto& a : c_) {
    if (a.get_den() != 1) throw Error("polynomial has non-integer coefficients");
    out.push_back(a.get_num());
  }
  return out;
}

std::string UPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rat& a = c_[i];
    if (a == 0) continue;
    Rat mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UPoly upoly_from_integers(const std::vector<long>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long a : coeffs) c.emplace_back(a);
  return UPoly(std::move(c));
}

UPoly upoly_from_big(const std::vector<Int>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const Int& a : coeffs) c.emplace_back(a);
  return UPoly(std::move(c));
}

namespace {

struct PolyParser {
  std::string_view s;
  size_t pos = 0;
  char var;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() { return s[pos]; }

  Rat parse_number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    if (pos == start) throw ParseError("expected number in polynomial: " + std::string(s));
    return parse_rat(s.substr(start, pos - start));
  }

  int parse_exponent() {
    skip_ws();
    if (pos >= s.size() || s[pos] != '^') return 1;
    ++pos;
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected exponent: " + std::string(s));
    return std::stoi(std::string(s.substr(start, pos - start)));
  }

  // sign? [number] ['*'] [var ['^' exp]]
  std::pair<Rat, int> parse_term(bool first) {
    skip_ws();
    Rat sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms: " + std::string(s));
    }
    skip_ws();
    Rat coeff = 1;
    bool saw_coeff = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
      coeff = parse_number();
      saw_coeff = true;
    }
    skip_ws();
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      skip_ws();
    }
    int exp = 0;
    if (pos < s.size() && s[pos] == var) {
      ++pos;
      exp = parse_exponent();
    } else if (!saw_coeff) {
      throw ParseError("expected term: " + std::string(s));
    }
    return {sign * coeff, exp};
  }
};

}  // namespace

UPoly parse_upoly(std::string_view text, char var) {
  PolyParser p{text, 0, var};
  if (p.at_end()) throw ParseError("empty polynomial");
  std::vector<std::pair<Rat, int>> terms;
  bool first = true;
  while (!p.at_end()) {
    terms.push_back(p.parse_term(first));
    first = false;
  }
  int deg = 0;
  for (const auto& [a, e] : terms) deg = std::max(deg, e);
  std::vector<Rat> c(static_cast<size_t>(deg) + 1, Rat(0));
  for (const auto& [a, e] : terms) c[static_cast<size_t>(e)] += a;
  return UPoly(std::move(c));
}

namespace {

// Bareiss fraction-free determinant of an integer matrix (destroys m).
Int bareiss_det(std::vector<std::vector<Int>>& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

Rat resultant(const UPoly& f, const UPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error("resultant of zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0) {
    Rat r = 1;
    for (int i = 0; i < n; ++i) r *= f.leading();
    return r;
  }
  if (n == 0) {
    Rat r = 1;
    for (int i = 0; i < m; ++i) r *= g.leading();
    return r;
  }
  // Clear denominators: res(f, g) = res(F, G) / (df^n * dg^m).
  auto [cf, F] = f.content_primitive();
  auto [cg, G] = g.content_primitive();
  Rat scale = 1;
  for (int i = 0; i < n; ++i) scale *= cf;
  for (int i = 0; i < m; ++i) scale *= cg;
  const size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<Int>> mat(size, std::vector<Int>(size, Int(0)));
  auto fc = F.integer_coeffs();
  auto gc = G.integer_coeffs();
  // n rows of f coefficients (descending), then m rows of g.
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) mat[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = fc[static_cast<size_t>(m - j)];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      mat[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = gc[static_cast<size_t>(n - j)];
  Int det = bareiss_det(mat);
  return Rat(det) * scale;
}

Rat discriminant(const UPoly& f) {
  const int d = f.degree();
  if (d < 2) throw Error("discriminant needs degree >= 2");
  Rat res = resultant(f, f.derivative());
  Rat disc = res / f.leading();
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) disc = -disc;
  return disc;
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) return UPoly();
  if (a.is_zero()) return b * (Rat(1) / b.leading());
  if (b.is_zero()) return a * (Rat(1) / a.leading());
  // Primitive PRS over Z, stripping content at every step.
  UPoly f = a.content_primitive().second;
  UPoly g = b.content_primitive().second;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    // Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g stays integral.
    Rat scale = 1;
    for (int i = 0; i <= f.degree() - g.degree(); ++i) scale *= g.leading();
    UPoly r = (f * scale).divrem(g).second;
    f = g;
    g = r.is_zero() ? UPoly() : r.content_primitive().second;
  }
  if (f.is_constant()) return UPoly::constant(1);
  return f * (Rat(1) / f.leading());
}

UPoly squarefree_part(const UPoly& f) {
  if (f.is_zero()) throw Error("squarefree part of zero");
  if (f.degree() <= 1) return f;
  UPoly g = upoly_gcd(f, f.derivative());
  return f.exact_div(g);
}

UPoly iterate_poly(const UPoly& f, int n, int max_degree) {
  if (n < 1) throw Error("iterate requires n >= 1");
  if (f.degree() >= 2) {
    double deg = 1.0;
    for (int i = 0; i < n; ++i) {
      deg *= f.degree();
      if (deg > max_degree)
        throw BoundExceeded("iterate: degree " + std::to_string(deg) + " exceeds bound " +
                            std::to_string(max_degree));
    }
  }
  UPoly r = f;
  for (int i = 1; i < n; ++i) r = r.compose(f);
  return r;
}

}  // namespace dyn4
