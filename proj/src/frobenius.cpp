#include "dyn4/frobenius.hpp"

#include <algorithm>

#include "dyn4/factor.hpp"
#include "dyn4/fp_poly.hpp"

namespace dyn4 {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<bool> sieve(bound + 1, true);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    if (!sieve[n]) continue;
    out.push_back(n);
    for (std::uint64_t m = n * n; m <= bound; m += n) sieve[m] = false;
  }
  return out;
}

namespace {

struct SpecializedPhi4 {
  UPoly poly;
  Int disc_num;
  Int c_den;
};

SpecializedPhi4 specialize_for_sampling(const Rat& c) {
  SpecializedPhi4 out;
  out.poly = phi4_at(c);
  Rat disc = discriminant(out.poly);
  if (disc == 0) throw Error("Phi_4(c, x) unexpectedly has zero discriminant");
  out.disc_num = disc.get_num();
  out.c_den = c.get_den();
  return out;
}

bool bad_prime(const SpecializedPhi4& s, std::uint64_t p) {
  Int pz(static_cast<unsigned long>(p));
  if (s.c_den % pz == 0) return true;  // a coefficient denominator vanishes
  return s.disc_num % pz == 0;
}

}  // namespace

std::optional<DegreeMultiset> degree_multiset_mod_p(const Rat& c, std::uint64_t p) {
  if (!is_prime(Int(static_cast<unsigned long>(p)))) throw Error("degree_multiset_mod_p: p must be prime");
  SpecializedPhi4 s = specialize_for_sampling(c);
  if (bad_prime(s, p)) return std::nullopt;
  DegreeMultiset m = fp_degree_multiset(reduce_mod_p(s.poly, p));
  int sum = 0;
  for (int d : m) sum += d;
  if (sum != 12) throw Error("mod-p degree multiset does not sum to 12 (internal bug)");
  return m;
}

SampleReport sample_density(const Rat& c, std::uint64_t bound) {
  if (bound < 100) throw Error("sample_density: bound must be at least 100");
  SampleReport report;
  report.c = c;
  report.bound = bound;

  const ClassificationReport cls = classify(c);
  report.predicted_density = cls.density;
  if (cls.group_id_recomputable) {
    const NamedGroup* group = named_group(cls.group_label);
    if (group == nullptr) throw Error("classification names an unknown group");
    report.predicted_distribution = group->group->cycle_type_distribution();
  }

  const SpecializedPhi4 s = specialize_for_sampling(c);
  long with_root = 0;
  // Chunked iteration with a deterministic ascending merge; chunks are
  // independent, so this could fan out without changing the output.
  const std::vector<std::uint64_t> primes = primes_up_to(bound);
  const size_t chunk = 2048;
  for (size_t lo = 0; lo < primes.size(); lo += chunk) {
    const size_t hi = std::min(primes.size(), lo + chunk);
    std::map<DegreeMultiset, long> local;
    long local_skipped = 0;
    for (size_t i = lo; i < hi; ++i) {
      const std::uint64_t p = primes[i];
      if (bad_prime(s, p)) {
        ++local_skipped;
        continue;
      }
      local[fp_degree_multiset(reduce_mod_p(s.poly, p))]++;
    }
    report.primes_skipped += local_skipped;
    for (const auto& [type, count] : local) {
      report.histogram[type] += count;
      report.primes_used += count;
      if (!type.empty() && type.back() == 1) with_root += count;
    }
  }

  if (report.primes_used == 0) throw Error("sample_density: no good primes below bound");
  report.empirical_root_fraction = Rat(with_root, report.primes_used);
  report.empirical_root_fraction.canonicalize();

  if (!report.predicted_distribution.empty()) {
    for (const auto& [type, count] : report.histogram) {
      if (report.predicted_distribution.find(type) == report.predicted_distribution.end()) {
        report.support_ok = false;
      }
    }
    Rat tv = 0;
    auto add_term = [&](const Rat& a, const Rat& b) { tv += abs(a - b); };
    for (const auto& [type, prob] : report.predicted_distribution) {
      auto it = report.histogram.find(type);
      Rat emp = it == report.histogram.end()
                    ? Rat(0)
                    : Rat(it->second, report.primes_used);
      emp.canonicalize();
      add_term(emp, prob);
    }
    for (const auto& [type, count] : report.histogram) {
      if (report.predicted_distribution.find(type) != report.predicted_distribution.end()) continue;
      Rat emp(count, report.primes_used);
      emp.canonicalize();
      add_term(emp, Rat(0));
    }
    report.total_variation = tv / 2;
  }
  return report;
}

}  // namespace dyn4
