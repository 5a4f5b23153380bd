#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dyn4/core.hpp"

namespace dyn4 {

/// Permutation of {1,...,12}, stored 0-based. Composition convention:
/// (g * h)(i) = g(h(i)).
class Perm {
 public:
  static constexpr int kPoints = 12;

  Perm();  // identity
  explicit Perm(const std::array<std::uint8_t, kPoints>& images_zero_based);

  // image of a 1-based point
  int apply(int point) const { return images_[static_cast<size_t>(point - 1)] + 1; }

  Perm operator*(const Perm& h) const;
  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  DegreeMultiset cycle_type() const;
  bool fixes(int point) const { return apply(point) == point; }
  bool has_fixed_point() const;

  std::string cycle_string() const;

 private:
  std::array<std::uint8_t, kPoints> images_;
};

// Appendix-style cycle notation "(1,6,11,2)(3,8)"; whitespace-insensitive;
// fixed points may be omitted.
Perm parse_perm(std::string_view cycles);

/// Subgroup of S_12 given by generators, with the full element set enumerated
/// by breadth-first closure. Immutable once built.
class PermGroup {
 public:
  static PermGroup close(std::vector<Perm> generators, size_t bound = 1000000);

  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  size_t order() const { return elements_.size(); }
  bool contains(const Perm& g) const;

  std::vector<Perm> stabilizer(int point) const;

  // |union of the 12 point stabilizers| / |G|, in lowest terms.
  Rat point_density() const;

  std::map<DegreeMultiset, Rat> cycle_type_distribution() const;

  bool centralizes(const Perm& sigma) const;

 private:
  PermGroup() = default;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // sorted
};

/// One of the four named groups with its catalog identity and the exact
/// density of primes with a local root predicted for it.
struct NamedGroup {
  std::string label;
  int id_order;
  int id_index;
  const PermGroup* group;
  Rat density;
};

// The generic group W (centralizer of three aligned 4-cycles, order 384) and
// its three distinguished subgroups. Densities are computed from the group
// data at first use and checked against the expected constants 85/384,
// 43/192, 53/128, 39/64; a mismatch throws.
const NamedGroup& group_W();
const NamedGroup& group_G();
const NamedGroup& group_H();
const NamedGroup& group_I();
const NamedGroup* named_group(const std::string& label);

}  // namespace dyn4
