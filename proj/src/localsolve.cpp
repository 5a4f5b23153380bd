#include "dyn4/localsolve.hpp"

#include <algorithm>
#include <sstream>

#include "dyn4/padic.hpp"

namespace dyn4 {

namespace {

using ZVec = std::vector<Int>;

ZVec to_zvec(const UPoly& f) {
  std::vector<Int> out;
  for (const auto& c : f.coeffs()) {
    if (c.get_den() != 1) throw Error("curve model needs integer coefficients");
    out.push_back(c.get_num());
  }
  return out;
}

Int zeval(const ZVec& h, const Int& x0) {
  Int v = 0;
  for (size_t i = h.size(); i-- > 0;) v = v * x0 + h[i];
  return v;
}

ZVec zderiv(const ZVec& h) {
  ZVec out;
  for (size_t i = 1; i < h.size(); ++i) out.push_back(h[i] * static_cast<long>(i));
  return out;
}

// Coefficients of h(c + X): out[j] multiplies X^j.
ZVec zshift(const ZVec& h, const Int& c) {
  ZVec work = h;
  ZVec out(h.size(), Int(0));
  for (size_t k = 0; k < h.size(); ++k) {
    for (size_t i = work.size() - 1; i > k; --i) work[i - 1] += work[i] * c;
    out[k] = work[k];
  }
  return out;
}

constexpr long kInfinity = 1L << 40;

long zvalue_ord(const Int& v, const Int& p) { return v == 0 ? kInfinity : int_valuation(v, p); }

struct Solver {
  Int p;
  long cap;
  bool want_trace;
  std::vector<std::string> trace;
  const char* patch_name = "x";

  void note(const Int& center, long k, const std::string& what) {
    if (!want_trace) return;
    std::ostringstream os;
    os << patch_name << " = " << center << " + O(" << p << "^" << k << "): " << what;
    trace.push_back(os.str());
  }

  bool unit_square(const Int& value, long v) const {
    Int u = value;
    Int pv;
    mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v));
    mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), pv.get_mpz_t());
    if (p == 2) {
      Int r = u % 8;
      if (r < 0) r += 8;
      return r == 1;
    }
    return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == 1;
  }

  // Does {c + p^k t : t in Z_p} contain x0 with h(x0) a square in Q_p
  // (zero included)?
  bool branch(const ZVec& h, const ZVec& hd, const Int& center, long k) {
    const Int value = zeval(h, center);
    if (value == 0) {
      note(center, k, "exact root, point with y = 0");
      return true;
    }
    const long v = zvalue_ord(value, p);
    const Int dvalue = zeval(hd, center);
    const long dv = zvalue_ord(dvalue, p);

    // Newton: a root of h lies within p^(v - dv) of the center, giving a
    // point with y = 0, provided it stays inside this branch.
    if (dv < kInfinity && v > 2 * dv && v - dv >= k) {
      note(center, k, "Hensel root of f nearby, point with y = 0");
      return true;
    }

    // Valuation stability: h(center + p^k t) - h(center) has valuation at
    // least min_j (ord(a_j) + j k); when that clears v by the unit-window
    // width, every value in the branch shares ord v and the same square
    // class, so the branch is decided outright.
    const ZVec shifted = zshift(h, center);
    long delta = kInfinity;
    for (size_t j = 1; j < shifted.size(); ++j) {
      if (shifted[j] == 0) continue;
      long o = int_valuation(shifted[j], p) + static_cast<long>(j) * k;
      delta = std::min(delta, o);
    }
    const long window = p == 2 ? 3 : 1;
    if (delta >= v + window) {
      if (v % 2 == 0 && unit_square(value, v)) {
        note(center, k, "stable square value (ord " + std::to_string(v) + ")");
        return true;
      }
      note(center, k,
           v % 2 != 0 ? "stable value of odd ord " + std::to_string(v) + ", no points"
                      : "stable non-residue unit (ord " + std::to_string(v) + "), no points");
      return false;
    }

    if (k >= cap)
      throw DepthExceeded("residue refinement exceeded depth cap " + std::to_string(cap));
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
    for (Int a = 0; a < p; ++a)
      if (branch(h, hd, center + a * pk, k + 1)) return true;
    return false;
  }
};

long content_valuation(const ZVec& h, const Int& p) {
  Int g = 0;
  for (const auto& c : h) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g == 0 ? 0 : int_valuation(g, p);
}

long default_cap(const UPoly& f, const Int& p) {
  long cap = 4;
  if (f.degree() >= 2) {
    Rat d = discriminant(f);
    if (d != 0) cap += int_valuation(d.get_num(), p);
  }
  cap += 2 * content_valuation(to_zvec(f), p);
  if (p == 2) cap += 3;
  return cap;
}

}  // namespace

CurveModel::CurveModel(const UPoly& f) : f_(f) {
  if (f.is_zero()) throw Error("curve model: f must be nonzero");
  if (!f.has_integer_coeffs()) throw Error("curve model: f must have integer coefficients");
  if (f.degree() >= 1) {
    UPoly g = upoly_gcd(f, f.derivative());
    if (g.degree() != 0) throw Error("curve model: f must be squarefree");
  }
}

int CurveModel::genus() const {
  int d = f_.degree();
  return d <= 2 ? 0 : (d - 1) / 2;
}

CurveModel quadratic_twist(const CurveModel& curve, const Int& d) {
  if (d == 0) throw Error("twist by zero");
  Int a = abs(d);
  for (Int k = 2; k * k <= a; ++k)
    if (a % (k * k) == 0) throw Error("twist must be squarefree");
  return CurveModel(curve.f() * Rat(d));
}

bool has_r_points(const CurveModel& curve) {
  const UPoly& f = curve.f();
  if (f.degree() == 0) return f.coeff(0) >= 0;
  if (f.degree() % 2 == 1) return true;
  if (f.leading() > 0) return true;
  // Negative leading coefficient, even degree: f >= 0 somewhere iff f has a
  // real root. Count distinct real roots by Sturm's theorem over (-inf, inf).
  std::vector<UPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    const UPoly& a = seq[seq.size() - 2];
    const UPoly& b = seq.back();
    seq.push_back(-(a.divrem(b).second));
  }
  seq.pop_back();
  auto sign_at_inf = [](const UPoly& g, bool plus) {
    if (g.is_zero()) return 0;
    int s = g.leading() > 0 ? 1 : -1;
    if (!plus && g.degree() % 2 == 1) s = -s;
    return s;
  };
  int changes_minus = 0, changes_plus = 0;
  int prev_m = 0, prev_p = 0;
  for (const UPoly& g : seq) {
    int sm = sign_at_inf(g, false), sp = sign_at_inf(g, true);
    if (sm != 0) {
      if (prev_m != 0 && sm != prev_m) ++changes_minus;
      prev_m = sm;
    }
    if (sp != 0) {
      if (prev_p != 0 && sp != prev_p) ++changes_plus;
      prev_p = sp;
    }
  }
  return changes_minus - changes_plus > 0;
}

LocalVerdict solve_qp(const CurveModel& curve, const Int& p, const LocalSolveOptions& opts) {
  if (!is_prime(p)) throw Error("solve_qp: p must be prime");
  const UPoly& f = curve.f();
  LocalVerdict verdict{false, {}};

  if (f.degree() == 0) {
    verdict.has_points = is_square_qp(f.coeff(0), p);
    if (opts.want_trace)
      verdict.trace.push_back(std::string("constant curve: value is ") +
                              (verdict.has_points ? "a square" : "not a square") + " in Q_p");
    return verdict;
  }

  const ZVec h = to_zvec(f);
  const ZVec hd = zderiv(h);

  // Reversed patch v^2 = u^(2 ceil(deg/2)) f(1/u) reaches |x|_p > 1 through
  // u = 1/x in pZ_p; together the two patches cover P^1(Q_p).
  const int m = (f.degree() + 1) / 2;
  ZVec rev(static_cast<size_t>(2 * m) + 1, Int(0));
  for (size_t i = 0; i < h.size(); ++i) rev[static_cast<size_t>(2 * m) - i] = h[i];
  while (!rev.empty() && rev.back() == 0) rev.pop_back();
  const ZVec revd = zderiv(rev);

  UPoly rev_poly = upoly_from_big(rev);
  Solver affine{p, opts.depth_cap.value_or(default_cap(f, p)), opts.want_trace, {}, "x"};
  Solver infinite{p, opts.depth_cap.value_or(default_cap(rev_poly, p)), opts.want_trace, {}, "1/x"};

  verdict.has_points = affine.branch(h, hd, 0, 0) || infinite.branch(rev, revd, 0, 1);
  if (opts.want_trace) {
    verdict.trace = std::move(affine.trace);
    verdict.trace.insert(verdict.trace.end(), infinite.trace.begin(), infinite.trace.end());
  }
  return verdict;
}

bool has_qp_points(const CurveModel& curve, const Int& p) { return solve_qp(curve, p).has_points; }

}  // namespace dyn4
