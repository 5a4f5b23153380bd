#include "dyn4/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace dyn4 {

namespace {

// ---------------------------------------------------------------------------
// Squarefree decomposition over F_p
// ---------------------------------------------------------------------------

// In F_p[x], f' = 0 means f = g(x^p); since a^p = a in F_p the coefficients
// of g are those of f at indices divisible by p.
FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.prime();
  std::vector<std::uint64_t> c;
  for (size_t i = 0; i < f.coeffs().size(); i += static_cast<size_t>(p))
    c.push_back(f.coeffs()[i]);
  return FpPoly(p, std::move(c));
}

void fp_squarefree_rec(const FpPoly& f, int mult, std::vector<std::pair<FpPoly, int>>& out) {
  const std::uint64_t p = f.prime();
  FpPoly d = f.derivative();
  if (d.is_zero()) {
    fp_squarefree_rec(pth_root(f), mult * static_cast<int>(p), out);
    return;
  }
  FpPoly g = fp_gcd(f, d);
  FpPoly w = f.divrem(g).first;
  int i = 1;
  while (w.degree() > 0) {
    FpPoly y = fp_gcd(w, g);
    FpPoly part = w.divrem(y).first;
    if (part.degree() > 0) out.emplace_back(part, i * mult);
    w = y;
    g = g.divrem(y).first;
    ++i;
  }
  if (g.degree() > 0) fp_squarefree_rec(pth_root(g), mult * static_cast<int>(p), out);
}

// Monic squarefree parts with multiplicities; input must be monic.
std::vector<std::pair<FpPoly, int>> fp_squarefree(const FpPoly& f) {
  std::vector<std::pair<FpPoly, int>> out;
  fp_squarefree_rec(f, 1, out);
  return out;
}

// ---------------------------------------------------------------------------
// Distinct-degree / equal-degree splitting
// ---------------------------------------------------------------------------

// (degree d, product of all monic irreducible factors of degree d).
std::vector<std::pair<int, FpPoly>> fp_distinct_degree(FpPoly f) {
  const std::uint64_t p = f.prime();
  std::vector<std::pair<int, FpPoly>> out;
  FpPoly h = FpPoly::x(p);
  const FpPoly x = FpPoly::x(p);
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.emplace_back(f.degree(), f);
      break;
    }
    h = fp_powmod(h, Int(static_cast<unsigned long>(p)), f);
    FpPoly g = fp_gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      f = f.divrem(g).first;
      h = h.divrem(f).second;
    }
  }
  return out;
}

void fp_equal_degree_p2(const FpPoly& f, int d, std::vector<FpPoly>& out) {
  // Exhaustive and deterministic: trial-divide by every monic polynomial of
  // degree d over F_2.
  FpPoly rest = f;
  while (rest.degree() > d) {
    bool found = false;
    for (std::uint64_t mask = 0; mask < (1ULL << d) && !found; ++mask) {
      std::vector<std::uint64_t> c(static_cast<size_t>(d) + 1, 0);
      for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = (mask >> i) & 1;
      c[static_cast<size_t>(d)] = 1;
      FpPoly cand(2, std::move(c));
      auto [q, r] = rest.divrem(cand);
      if (r.is_zero()) {
        out.push_back(cand);
        rest = q;
        found = true;
      }
    }
    if (!found) throw Error("equal-degree splitting failed at p = 2 (internal bug)");
  }
  out.push_back(rest);
}

void fp_equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const std::uint64_t p = f.prime();
  if (p == 2) {
    fp_equal_degree_p2(f, d, out);
    return;
  }
  // Cantor-Zassenhaus: gcd(a^((p^d-1)/2) - 1, f) splits with probability
  // about 1/2 per random a.
  Int exponent = 1;
  for (int i = 0; i < d; ++i) exponent *= static_cast<unsigned long>(p);
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    std::vector<std::uint64_t> c(static_cast<size_t>(f.degree()), 0);
    for (auto& a : c) a = dist(rng);
    FpPoly a(p, std::move(c));
    if (a.degree() < 1) continue;
    FpPoly b = fp_powmod(a, exponent, f) - FpPoly::constant(p, 1);
    FpPoly g = fp_gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      fp_equal_degree(g, d, rng, out);
      fp_equal_degree(f.divrem(g).first, d, rng, out);
      return;
    }
  }
}

bool fp_factor_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (size_t i = a.coeffs().size(); i-- > 0;)
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  return false;
}

}  // namespace

FpFactorization factor_mod_p(const FpPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error("factor_mod_p: zero polynomial");
  FpFactorization out;
  out.unit = f.leading();
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * f.prime()));
  for (const auto& [sf, mult] : fp_squarefree(f.monic())) {
    for (const auto& [d, product] : fp_distinct_degree(sf)) {
      std::vector<FpPoly> irreducibles;
      fp_equal_degree(product, d, rng, irreducibles);
      for (auto& g : irreducibles) out.factors.push_back({g, mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FpFactor& a, const FpFactor& b) { return fp_factor_less(a.factor, b.factor); });
  // The factorization must reproduce the input exactly.
  FpPoly check = FpPoly::constant(f.prime(), out.unit);
  for (const auto& [g, m] : out.factors)
    for (int i = 0; i < m; ++i) check = check * g;
  if (check != f) throw Error("factor_mod_p certification failed (internal bug)");
  return out;
}

DegreeMultiset fp_degree_multiset(const FpPoly& f) {
  if (f.is_zero()) throw Error("fp_degree_multiset: zero polynomial");
  std::vector<int> degrees;
  if (f.degree() == 0) return degrees;
  for (const auto& [sf, mult] : fp_squarefree(f.monic())) {
    for (const auto& [d, product] : fp_distinct_degree(sf)) {
      int count = product.degree() / d;
      for (int i = 0; i < count * mult; ++i) degrees.push_back(d);
    }
  }
  return sorted_multiset(std::move(degrees));
}

// ---------------------------------------------------------------------------
// Hensel lifting (monic factors of a monic integer polynomial)
// ---------------------------------------------------------------------------

namespace {

using ZVec = std::vector<Int>;  // ascending coefficients

void ztrim(ZVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZVec zmod(ZVec a, const Int& m) {
  for (auto& x : a) {
    x %= m;
    if (x < 0) x += m;
  }
  ztrim(a);
  return a;
}

ZVec zmul(const ZVec& a, const ZVec& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zmod(std::move(r), m);
}

ZVec zsub(const ZVec& a, const ZVec& b, const Int& m) {
  ZVec r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zmod(std::move(r), m);
}

ZVec zadd(const ZVec& a, const ZVec& b, const Int& m) {
  ZVec r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zmod(std::move(r), m);
}

// divrem by a monic divisor, all mod m.
std::pair<ZVec, ZVec> zdivrem_monic(const ZVec& a, const ZVec& b, const Int& m) {
  if (b.empty() || b.back() != 1) throw Error("zdivrem_monic: divisor not monic");
  ZVec rem = a;
  if (rem.size() < b.size()) return {{}, rem};
  ZVec quo(rem.size() - b.size() + 1, Int(0));
  for (size_t k = quo.size(); k-- > 0;) {
    Int q = rem[k + b.size() - 1] % m;
    if (q < 0) q += m;
    quo[k] = q;
    if (q == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) rem[k + j] -= q * b[j];
    for (size_t j = 0; j < b.size(); ++j) {
      rem[k + j] %= m;
      if (rem[k + j] < 0) rem[k + j] += m;
    }
  }
  rem.resize(b.size() - 1);
  ztrim(rem);
  ztrim(quo);
  return {quo, rem};
}

ZVec from_fp(const FpPoly& f) {
  ZVec out;
  out.reserve(f.coeffs().size());
  for (auto c : f.coeffs()) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m)
// with g, h monic, to the same relations mod m^2 (von zur Gathen & Gerhard,
// "Modern Computer Algebra", Alg. 15.10).
struct HenselPair {
  ZVec g, h, s, t;
};

HenselPair hensel_step(const ZVec& f, const HenselPair& in, const Int& m) {
  const Int m2 = m * m;
  ZVec e = zsub(zmod(f, m2), zmul(in.g, in.h, m2), m2);
  auto [q, r] = zdivrem_monic(zmul(in.s, e, m2), in.h, m2);
  ZVec g2 = zadd(zadd(in.g, zmul(in.t, e, m2), m2), zmul(q, in.g, m2), m2);
  ZVec h2 = zadd(in.h, r, m2);
  ZVec b = zsub(zadd(zmul(in.s, g2, m2), zmul(in.t, h2, m2), m2), ZVec{Int(1)}, m2);
  auto [c, d] = zdivrem_monic(zmul(in.s, b, m2), h2, m2);
  ZVec s2 = zsub(in.s, d, m2);
  ZVec t2 = zsub(zsub(in.t, zmul(in.t, b, m2), m2), zmul(c, g2, m2), m2);
  return {g2, h2, s2, t2};
}

// Lift the monic mod-p factorization of monic f to factors mod target (a
// power of p), recursing on a balanced split of the factor list.
void hensel_tree(const ZVec& f, const std::vector<FpPoly>& factors, size_t lo, size_t hi,
                 std::uint64_t p, const Int& target, std::vector<ZVec>& out) {
  if (hi - lo == 1) {
    out.push_back(zmod(f, target));
    return;
  }
  const size_t mid = lo + (hi - lo) / 2;
  FpPoly gp = FpPoly::constant(p, 1);
  FpPoly hp = FpPoly::constant(p, 1);
  for (size_t i = lo; i < mid; ++i) gp = gp * factors[i];
  for (size_t i = mid; i < hi; ++i) hp = hp * factors[i];
  // Bezout coefficients in F_p[x] via extended Euclid.
  FpPoly r0 = gp, r1 = hp;
  FpPoly s0 = FpPoly::constant(p, 1), s1 = FpPoly(p);
  FpPoly t0 = FpPoly(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    FpPoly s2 = s0 - q * s1;
    FpPoly t2 = t0 - q * t1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0) throw Error("hensel: factors not coprime mod p (bad prime)");
  std::uint64_t inv = FpCtx{p}.inv(r0.leading());
  HenselPair pair{from_fp(gp), from_fp(hp), from_fp(s0.scaled(inv)), from_fp(t0.scaled(inv))};
  Int m(static_cast<unsigned long>(p));
  while (m < target) {
    pair = hensel_step(f, pair, m);
    m *= m;
  }
  hensel_tree(pair.g, factors, lo, mid, p, target, out);
  hensel_tree(pair.h, factors, mid, hi, p, target, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus over Z
// ---------------------------------------------------------------------------

Int balanced(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

UPoly from_balanced(const ZVec& a, const Int& m) {
  std::vector<Rat> c;
  c.reserve(a.size());
  for (const auto& x : a) c.emplace_back(balanced(x, m));
  return UPoly(std::move(c));
}

Int sqrt_norm_bound(const std::vector<Int>& coeffs) {
  Int s = 0;
  for (const auto& c : coeffs) s += c * c;
  Int r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

// Factor a primitive squarefree integer polynomial with positive leading
// coefficient, degree >= 1.
std::vector<UPoly> factor_squarefree_z(const UPoly& g, std::uint64_t seed) {
  const int n = g.degree();
  if (n == 1) return {g};
  const Int lc = g.leading().get_num();

  // Monicize: h(x) = lc^(n-1) g(x/lc) is monic with integer coefficients and
  // the same factor degrees; factors map back through x -> lc x.
  std::vector<Int> gc = g.integer_coeffs();
  std::vector<Int> hc(gc.size());
  Int power = 1;
  for (int i = n; i >= 0; --i) {
    hc[static_cast<size_t>(i)] = gc[static_cast<size_t>(i)] * power;
    if (i > 0) power *= lc;
  }

  // Smallest good prime p >= 5: p keeps the leading coefficient and stays
  // squarefree (equivalently p does not divide disc).
  std::uint64_t p = 0;
  FpPoly hp;
  for (std::uint64_t q = 5;; ++q) {
    if (!is_prime(Int(static_cast<unsigned long>(q)))) continue;
    FpCtx ctx{q};
    if (ctx.reduce_int(lc) == 0) continue;
    std::vector<std::uint64_t> c(hc.size());
    for (size_t i = 0; i < hc.size(); ++i) c[i] = ctx.reduce_int(hc[i]);
    FpPoly cand(q, std::move(c));
    if (cand.degree() != n) continue;
    if (fp_gcd(cand, cand.derivative()).degree() != 0) continue;
    p = q;
    hp = cand;
    break;
  }

  FpFactorization modular = factor_mod_p(hp, seed);
  if (modular.factors.size() == 1) return {g};

  // Landau-Mignotte: coefficients of any monic factor of monic h are at most
  // 2^n * ||h||_2; lift until the modulus exceeds twice that.
  Int bound = sqrt_norm_bound(hc);
  bound <<= n;
  Int target(static_cast<unsigned long>(p));
  while (target <= 2 * bound) target *= target;

  std::vector<FpPoly> mod_factors;
  for (const auto& [f, m] : modular.factors) mod_factors.push_back(f);
  std::vector<ZVec> lifted;
  hensel_tree(zmod(hc, target), mod_factors, 0, mod_factors.size(), p, target, lifted);

  // Subset recombination on the monic lifted factors.
  std::vector<UPoly> monic_found;
  std::vector<size_t> live(lifted.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = i;
  UPoly h_cur = upoly_from_big(hc);

  auto try_subsets = [&](size_t take) -> bool {
    std::vector<size_t> idx(take);
    for (size_t i = 0; i < take; ++i) idx[i] = i;
    for (;;) {
      ZVec prod{Int(1)};
      for (size_t i : idx) prod = zmul(prod, lifted[live[i]], target);
      UPoly cand = from_balanced(prod, target);
      auto [q, r] = h_cur.divrem(cand);
      if (r.is_zero() && q.has_integer_coeffs()) {
        monic_found.push_back(cand);
        std::vector<size_t> next_live;
        for (size_t i = 0, j = 0; i < live.size(); ++i) {
          if (j < idx.size() && idx[j] == i)
            ++j;
          else
            next_live.push_back(live[i]);
        }
        live = std::move(next_live);
        h_cur = q;
        return true;
      }
      // next combination
      size_t i = take;
      while (i-- > 0) {
        if (idx[i] + (take - i) < live.size()) {
          ++idx[i];
          for (size_t j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) return false;
      }
      if (idx[0] + take > live.size()) return false;
    }
  };

  for (size_t take = 1; 2 * take <= live.size();) {
    if (!try_subsets(take))
      ++take;
  }
  if (h_cur.degree() > 0) monic_found.push_back(h_cur);

  // Map monic factors of h back to primitive factors of g.
  std::vector<UPoly> out;
  for (const auto& hf : monic_found) {
    std::vector<Rat> c(hf.coeffs().size());
    Rat scale = 1;
    for (size_t i = 0; i < c.size(); ++i) {
      c[i] = hf.coeffs()[i] * scale;
      scale *= lc;
    }
    UPoly mapped = UPoly(std::move(c)).content_primitive().second;
    out.push_back(mapped);
  }
  return out;
}

}  // namespace

QFactorization factor_q(const UPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error("factor_q: zero polynomial");
  QFactorization out;
  if (f.degree() == 0) {
    out.unit = f.coeff(0);
    return out;
  }
  auto [content, prim] = f.content_primitive();
  out.unit = content;

  // Yun's squarefree decomposition over Q.
  std::vector<std::pair<UPoly, int>> squarefree_parts;
  {
    UPoly w = prim, d = prim.derivative();
    UPoly g = upoly_gcd(w, d);
    if (g.degree() == 0) {
      squarefree_parts.emplace_back(prim, 1);
    } else {
      UPoly wi = w.exact_div(g);
      UPoly yi = d.exact_div(g);
      int i = 1;
      while (wi.degree() > 0) {
        UPoly z = yi - wi.derivative();
        UPoly ai = upoly_gcd(wi, z);
        if (ai.degree() > 0) squarefree_parts.emplace_back(ai, i);
        wi = wi.exact_div(ai);
        yi = z.exact_div(ai);
        ++i;
      }
    }
  }

  for (const auto& [part, mult] : squarefree_parts) {
    auto [pc, pp] = part.content_primitive();
    for (const auto& irf : factor_squarefree_z(pp, seed)) out.factors.push_back({irf, mult});
  }

  std::sort(out.factors.begin(), out.factors.end(), [](const QFactor& a, const QFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    for (int i = a.factor.degree(); i >= 0; --i) {
      if (a.factor.coeff(i) != b.factor.coeff(i)) return a.factor.coeff(i) < b.factor.coeff(i);
    }
    return a.multiplicity < b.multiplicity;
  });

  // Recover the exact unit and certify by multiplying back.
  UPoly prod = UPoly::constant(1);
  for (const auto& [g, m] : out.factors)
    for (int i = 0; i < m; ++i) prod = prod * g;
  if (prod.degree() != f.degree()) throw Error("factor_q lost degree (internal bug)");
  out.unit = f.leading() / prod.leading();
  if (prod * out.unit != f) throw Error("factor_q certification failed (internal bug)");
  return out;
}

DegreeMultiset factorization_type(const UPoly& f, std::uint64_t seed) {
  auto fac = factor_q(f, seed);
  std::vector<int> degrees;
  for (const auto& [g, m] : fac.factors)
    for (int i = 0; i < m; ++i) degrees.push_back(g.degree());
  return sorted_multiset(std::move(degrees));
}

// ---------------------------------------------------------------------------
// Rational roots
// ---------------------------------------------------------------------------

namespace {

void factor_integer_rec(Int n, std::map<Int, int>& out);

// Brent-style Pollard rho; n odd composite, not a prime power obstacle.
Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(12345u);
  for (;;) {
    Int x = rng.get_z_range(n - 2) + 1;
    Int c = rng.get_z_range(n - 2) + 1;
    Int y = x, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_integer_rec(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (long p = 2; p < 100000 && Int(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[Int(p)];
      n /= p;
    }
    if (n == 1) return;
    if (is_prime(n)) {
      ++out[n];
      return;
    }
  }
  Int d = pollard_rho(n);
  factor_integer_rec(d, out);
  factor_integer_rec(n / d, out);
}

std::vector<Int> all_divisors(const Int& n) {
  std::map<Int, int> fac;
  factor_integer_rec(n, fac);
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : fac) {
    const size_t base = divs.size();
    Int pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  return divs;
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const UPoly& f) {
  if (f.is_zero()) throw Error("rational_roots: zero polynomial");
  std::vector<std::pair<Rat, int>> out;
  if (f.degree() == 0) return out;
  UPoly prim = f.content_primitive().second;

  // Strip roots at zero.
  int zero_mult = 0;
  while (prim.coeff(0) == 0) {
    prim = prim.exact_div(UPoly::identity());
    ++zero_mult;
  }
  if (zero_mult > 0) out.emplace_back(Rat(0), zero_mult);
  if (prim.degree() == 0) return out;

  const Int a0 = abs(prim.coeff(0).get_num());
  const Int an = abs(prim.leading().get_num());
  std::vector<Int> num_divs = all_divisors(a0);
  std::vector<Int> den_divs = all_divisors(an);
  if (num_divs.size() * den_divs.size() > 4000000)
    throw Error("rational_roots: too many divisor candidates");

  std::vector<Rat> roots;
  for (const Int& u : num_divs) {
    for (const Int& v : den_divs) {
      Int g;
      mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
      if (g != 1) continue;
      for (int sign = 0; sign < 2; ++sign) {
        Rat r(sign ? -u : u, v);
        r.canonicalize();
        if (prim.evaluate(r) == 0) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());

  for (const Rat& r : roots) {
    const UPoly lin{-r, Rat(1)};
    int mult = 0;
    for (;;) {
      auto [q, rem] = prim.divrem(lin);
      if (!rem.is_zero()) break;
      prim = q;
      ++mult;
    }
    out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q == 0) return Rat(0);
  if (q < 0) return std::nullopt;
  auto rn = exact_isqrt(q.get_num());
  if (!rn) return std::nullopt;
  auto rd = exact_isqrt(q.get_den());
  if (!rd) return std::nullopt;
  Rat r(*rn, *rd);
  r.canonicalize();
  return r;
}

}  // namespace dyn4
