#include "dyn4/padic.hpp"

namespace dyn4 {

namespace {

Int pow_int(const Int& p, long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Unit part of q: q / p^val(q), as a p-integral rational turned into an
// integer residue mod p^k.
Int unit_residue(const Rat& q, const Int& p, long val, long k) {
  Int pk = pow_int(p, k);
  Int num = q.get_num();
  Int den = q.get_den();
  if (val > 0)
    num /= pow_int(p, val);
  else if (val < 0)
    den /= pow_int(p, -val);
  Int dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pk.get_mpz_t()) == 0)
    throw Error("unit_residue: denominator not invertible (internal bug)");
  Int r = (num % pk) * dinv % pk;
  if (r < 0) r += pk;
  return r;
}

}  // namespace

bool is_square_qp(const Rat& q, const Int& p) {
  if (q == 0) throw Error("is_square_qp: q must be nonzero");
  if (!is_prime(p)) throw Error("is_square_qp: p must be prime");
  const long v = rat_valuation(q, p);
  if (v % 2 != 0) return false;
  if (p == 2) return unit_residue(q, p, v, 3) == 1;
  Int u = unit_residue(q, p, v, 1);
  return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == 1;
}

PadicApprox PadicApprox::from_rational(const Rat& q, const Int& p, int precision) {
  if (!is_prime(p)) throw Error("PadicApprox: p must be prime");
  if (precision < 1) throw Error("PadicApprox: precision must be >= 1");
  PadicApprox out(p);
  if (q == 0) {
    out.zero_ = true;
    return out;
  }
  out.valuation_ = rat_valuation(q, p);
  out.precision_ = precision;
  out.unit_ = unit_residue(q, p, out.valuation_, precision);
  return out;
}

PadicApprox PadicApprox::exact_zero(const Int& p) {
  PadicApprox out(p);
  out.zero_ = true;
  return out;
}

PadicApprox PadicApprox::from_parts(const Int& p, long valuation, const Int& unit, int precision) {
  if (!is_prime(p)) throw Error("PadicApprox: p must be prime");
  if (precision < 1) throw Error("PadicApprox: precision must be >= 1");
  if (unit % p == 0) throw Error("PadicApprox: unit must be coprime to p");
  PadicApprox out(p);
  out.valuation_ = valuation;
  out.precision_ = precision;
  out.unit_ = unit % pow_int(p, precision);
  if (out.unit_ < 0) out.unit_ += pow_int(p, precision);
  return out;
}

long PadicApprox::valuation() const {
  if (zero_) throw Error("valuation of exact zero");
  return valuation_;
}

int strassmann_bound(const std::vector<PadicApprox>& coeffs) {
  if (coeffs.empty()) throw Error("strassmann_bound: empty coefficient list");
  const Int& p = coeffs.front().prime();
  for (const auto& c : coeffs)
    if (c.prime() != p) throw Error("strassmann_bound: mixed primes");

  bool have_min = false;
  long min_val = 0;
  int last_min_index = -1;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_exact_zero()) continue;
    long v = coeffs[i].valuation();
    if (!have_min || v < min_val) {
      have_min = true;
      min_val = v;
      last_min_index = static_cast<int>(i);
    } else if (v == min_val) {
      last_min_index = static_cast<int>(i);
    }
  }
  if (!have_min) throw Error("strassmann_bound: identically zero series");

  // Every coefficient must be known past the candidate minimum, or the
  // minimum itself is uncertain.
  for (const auto& c : coeffs) {
    if (c.is_exact_zero()) continue;
    if (c.absolute_precision() <= min_val)
      throw InsufficientPrecision("coefficient precision does not exceed the minimal valuation");
  }

  // Tail criterion: with n the last supplied index, n - log_p(n) >= min_val
  // guarantees ord(b_i) > min_val for i > n, i.e. p^(n - min_val) >= n.
  const long n = static_cast<long>(coeffs.size()) - 1;
  if (n < 1) throw InsufficientLength("need at least two coefficients");
  if (n - min_val < 0) throw InsufficientLength("minimal valuation exceeds the index range");
  Int lhs;
  mpz_pow_ui(lhs.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n - min_val));
  if (lhs < n) throw InsufficientLength("tail domination criterion n - log_p(n) >= v fails");

  return last_min_index;
}

}  // namespace dyn4
