#include "dyn4/classifier.hpp"

#include <algorithm>

#include "dyn4/factor.hpp"

namespace dyn4 {

std::string case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::GenericW: return "generic";
    case CaseLabel::LambdaG: return "lambda-image";
    case CaseLabel::EtaH: return "eta-image";
    case CaseLabel::RhoI: return "rho-image";
    case CaseLabel::ExcludedTable: return "excluded";
  }
  return "?";
}

bool ClassificationReport::operator==(const ClassificationReport& o) const {
  bool base = c == o.c && label == o.label && group_label == o.group_label &&
              group_id == o.group_id && group_id_recomputable == o.group_id_recomputable &&
              factorization == o.factorization && density == o.density &&
              witnesses.size() == o.witnesses.size();
  if (!base) return false;
  for (size_t i = 0; i < witnesses.size(); ++i) {
    if (witnesses[i].fn != o.witnesses[i].fn || witnesses[i].preimage != o.witnesses[i].preimage)
      return false;
  }
  if (conjugation.has_value() != o.conjugation.has_value()) return false;
  if (conjugation &&
      (conjugation->c != o.conjugation->c || conjugation->alpha != o.conjugation->alpha ||
       conjugation->beta != o.conjugation->beta))
    return false;
  return true;
}

const std::vector<ExcludedRow>& excluded_table() {
  static const std::vector<ExcludedRow> table = {
      {make_rat(-5), {8, 4}, {64, 20}, Rat(23, 64)},
      {make_rat(-5, 2), {12}, {24, 5}, Rat(1, 6)},
      {make_rat(-155, 72), {8, 2, 2}, {32, 11}, Rat(1, 2)},
      {make_rat(-2), {8, 4}, {32, 3}, Rat(11, 32)},
      {make_rat(-5, 4), {8, 2, 2}, {64, 101}, Rat(39, 64)},
      {make_rat(0), {8, 4}, {8, 2}, Rat(1, 4)},
      {make_rat(19, 16), {8, 4}, {64, 101}, Rat(27, 64)},
  };
  return table;
}

namespace {

// The reference table and the Moebius-product construction must agree before
// any classification is trusted; evaluated once.
void verify_phi4_once() {
  static const bool ok = [] {
    if (dynatomic_generic(4) != phi4_reference())
      throw Error("dynatomic(x^2+t, 4) disagrees with the reference coefficient table");
    return true;
  }();
  (void)ok;
}

ClassificationReport generic_case(const Rat& c, CaseLabel label, const NamedGroup& group,
                                  DegreeMultiset type) {
  ClassificationReport r;
  r.c = c;
  r.label = label;
  r.group_label = group.label;
  r.group_id = {group.id_order, group.id_index};
  r.group_id_recomputable = true;
  r.factorization = std::move(type);
  r.density = group.density;
  return r;
}

}  // namespace

ClassificationReport classify(const Rat& c) {
  verify_phi4_once();
  for (const auto& row : excluded_table()) {
    if (row.c == c) {
      ClassificationReport r;
      r.c = c;
      r.label = CaseLabel::ExcludedTable;
      r.group_label = "table";
      r.group_id = row.group_id;
      r.group_id_recomputable = false;
      r.factorization = row.factorization;
      r.density = row.density;
      return r;
    }
  }
  auto lam = in_image_lambda(c);
  auto eta = in_image_eta(c);
  if (lam && eta)
    throw InconsistentMembership("non-excluded c in Im lambda and Im eta: " + rat_string(c));
  if (lam) {
    auto r = generic_case(c, CaseLabel::LambdaG, group_G(), {12});
    r.witnesses.push_back(*lam);
    return r;
  }
  if (eta) {
    if (auto rho = in_image_rho(c)) {
      auto r = generic_case(c, CaseLabel::RhoI, group_I(), {8, 2, 2});
      r.witnesses.push_back(*eta);
      r.witnesses.push_back(*rho);
      return r;
    }
    auto r = generic_case(c, CaseLabel::EtaH, group_H(), {8, 4});
    r.witnesses.push_back(*eta);
    return r;
  }
  return generic_case(c, CaseLabel::GenericW, group_W(), {12});
}

ClassificationReport classify_quadratic(const UPoly& f) {
  NormalizedQuadratic norm = normalize_quadratic(f);
  ClassificationReport r = classify(norm.c);
  r.conjugation = norm;
  return r;
}

bool exceptional_set_test(const Rat& c) {
  if (c == make_rat(-5, 2)) return true;
  return in_image_lambda(c).has_value() || in_image_eta(c).has_value();
}

ConsistencyReport consistency_check(const Rat& c) {
  ConsistencyReport out;
  out.classification = classify(c);
  out.direct_factorization = factorization_type(phi4_at(c));
  out.consistent = out.direct_factorization == out.classification.factorization;
  if (!out.consistent)
    throw MismatchError("classification of c = " + rat_string(c) + " predicts " +
                        multiset_string(out.classification.factorization) +
                        " but direct factorization gives " +
                        multiset_string(out.direct_factorization));
  out.density_complement = 1 - out.classification.density;
  if (out.density_complement < Rat(25, 64))
    throw MismatchError("density complement fell below 25/64 at c = " + rat_string(c));
  return out;
}

}  // namespace dyn4
