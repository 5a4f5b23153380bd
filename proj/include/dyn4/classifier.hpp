#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyn4/dynatomic.hpp"
#include "dyn4/imagesets.hpp"
#include "dyn4/permgroup.hpp"

namespace dyn4 {

enum class CaseLabel { GenericW, LambdaG, EtaH, RhoI, ExcludedTable };

std::string case_label_name(CaseLabel label);

struct GroupId {
  int order;
  int index;
  bool operator==(const GroupId&) const = default;
};

/// Everything the classification decides for one parameter c: which case of
/// the classification applies, the Galois group of the fourth dynatomic
/// polynomial of x^2 + c (as a catalog id), its factorization type over Q,
/// and the exact density of primes p for which that polynomial has a root in
/// Q_p. The seven tabulated special values carry catalog ids taken from the
/// literature ("paper" source); the four generic cases carry groups whose
/// data is recomputed from generators.
struct ClassificationReport {
  Rat c;
  CaseLabel label = CaseLabel::GenericW;
  std::string group_label;
  GroupId group_id{0, 0};
  bool group_id_recomputable = false;  // false = tabulated constant only
  DegreeMultiset factorization;
  Rat density;
  std::vector<MembershipWitness> witnesses;
  std::optional<NormalizedQuadratic> conjugation;  // set by classify_quadratic

  bool operator==(const ClassificationReport& o) const;
};

ClassificationReport classify(const Rat& c);
ClassificationReport classify_quadratic(const UPoly& f);

// c in Im(lambda) u Im(eta) u {-5/2}: the parameters where specializing
// t = c changes the generic Galois group or factorization type.
bool exceptional_set_test(const Rat& c);

struct ConsistencyReport {
  ClassificationReport classification;
  DegreeMultiset direct_factorization;
  Rat density_complement;  // 1 - density, always >= 25/64
  bool consistent;
};

// Cross-checks classify(c) against a direct factorization of Phi_4(c, x),
// throwing MismatchError on disagreement, and validates the density
// complement bound.
ConsistencyReport consistency_check(const Rat& c);

struct ExcludedRow {
  Rat c;
  DegreeMultiset factorization;
  GroupId group_id;
  Rat density;
};

// The seven special parameters with their tabulated data.
const std::vector<ExcludedRow>& excluded_table();

}  // namespace dyn4
