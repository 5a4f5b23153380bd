#include "dyn4/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dyn4 {

Rat parse_rat(std::string_view s) {
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational");
  std::string buf(s);
  for (char ch : buf) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
      throw ParseError("bad rational: " + buf);
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), buf.c_str(), 10) != 0)
    throw ParseError("bad rational: " + buf);
  if (q.get_den() == 0) throw ParseError("zero denominator: " + buf);
  q.canonicalize();
  return q;
}

std::string rat_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::optional<Int> exact_isqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

long int_valuation(Int n, const Int& p) {
  if (n == 0) throw Error("valuation of zero");
  long v = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    n = q;
    ++v;
  }
}

long rat_valuation(const Rat& q, const Int& p) {
  if (q == 0) throw Error("valuation of zero");
  long v = 0;
  if (q.get_num() != 0) v += int_valuation(q.get_num(), p);
  v -= int_valuation(Int(q.get_den()), p);
  return v;
}

bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

DegreeMultiset sorted_multiset(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return parts;
}

std::string multiset_string(const DegreeMultiset& m) {
  std::string out = "{";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m[i]);
  }
  out += "}";
  return out;
}

}  // namespace dyn4
