#include "dyn4/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace dyn4 {

Perm::Perm() {
  for (int i = 0; i < kPoints; ++i) images_[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
}

Perm::Perm(const std::array<std::uint8_t, kPoints>& images) : images_(images) {
  std::array<bool, kPoints> seen{};
  for (auto v : images_) {
    if (v >= kPoints || seen[v]) throw Error("not a permutation of 12 points");
    seen[v] = true;
  }
}

Perm Perm::operator*(const Perm& h) const {
  std::array<std::uint8_t, kPoints> r;
  for (int i = 0; i < kPoints; ++i)
    r[static_cast<size_t>(i)] = images_[h.images_[static_cast<size_t>(i)]];
  Perm out;
  out.images_ = r;
  return out;
}

Perm Perm::inverse() const {
  std::array<std::uint8_t, kPoints> r{};
  for (int i = 0; i < kPoints; ++i)
    r[images_[static_cast<size_t>(i)]] = static_cast<std::uint8_t>(i);
  Perm out;
  out.images_ = r;
  return out;
}

bool Perm::is_identity() const {
  for (int i = 0; i < kPoints; ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

DegreeMultiset Perm::cycle_type() const {
  std::array<bool, kPoints> seen{};
  std::vector<int> lengths;
  for (int i = 0; i < kPoints; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      j = images_[static_cast<size_t>(j)];
      ++len;
    }
    lengths.push_back(len);
  }
  return sorted_multiset(std::move(lengths));
}

bool Perm::has_fixed_point() const {
  for (int i = 1; i <= kPoints; ++i)
    if (fixes(i)) return true;
  return false;
}

std::string Perm::cycle_string() const {
  if (is_identity()) return "()";
  std::array<bool, kPoints> seen{};
  std::ostringstream os;
  for (int i = 0; i < kPoints; ++i) {
    if (seen[static_cast<size_t>(i)] || images_[static_cast<size_t>(i)] == i) continue;
    os << "(";
    int j = i;
    bool first = true;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      if (!first) os << ",";
      os << (j + 1);
      first = false;
      j = images_[static_cast<size_t>(j)];
    }
    os << ")";
  }
  return os.str();
}

Perm parse_perm(std::string_view text) {
  std::array<std::uint8_t, Perm::kPoints> images;
  for (int i = 0; i < Perm::kPoints; ++i) images[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected point number in cycle notation");
      int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v < 1 || v > Perm::kPoints) throw ParseError("point out of range in cycle notation");
      cycle.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')' in cycle notation");
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i] - 1;
      int to = cycle[(i + 1) % cycle.size()] - 1;
      images[static_cast<size_t>(from)] = static_cast<std::uint8_t>(to);
    }
    skip_ws();
  }
  return Perm(images);
}

PermGroup PermGroup::close(std::vector<Perm> generators, size_t bound) {
  PermGroup g;
  g.generators_ = std::move(generators);
  std::set<Perm> seen;
  std::deque<Perm> frontier;
  seen.insert(Perm());
  frontier.push_back(Perm());
  while (!frontier.empty()) {
    Perm cur = frontier.front();
    frontier.pop_front();
    for (const Perm& gen : g.generators_) {
      Perm next = gen * cur;
      if (seen.insert(next).second) {
        if (seen.size() > bound) throw BoundExceeded("group closure exceeded element bound");
        frontier.push_back(next);
      }
    }
  }
  g.elements_.assign(seen.begin(), seen.end());
  return g;
}

bool PermGroup::contains(const Perm& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::vector<Perm> PermGroup::stabilizer(int point) const {
  if (point < 1 || point > Perm::kPoints) throw Error("stabilizer point out of range");
  std::vector<Perm> out;
  for (const Perm& g : elements_)
    if (g.fixes(point)) out.push_back(g);
  return out;
}

Rat PermGroup::point_density() const {
  size_t fixing = 0;
  for (const Perm& g : elements_)
    if (g.has_fixed_point()) ++fixing;
  Rat d(static_cast<unsigned long>(fixing), static_cast<unsigned long>(order()));
  d.canonicalize();
  return d;
}

std::map<DegreeMultiset, Rat> PermGroup::cycle_type_distribution() const {
  std::map<DegreeMultiset, long> counts;
  for (const Perm& g : elements_) counts[g.cycle_type()]++;
  std::map<DegreeMultiset, Rat> out;
  for (const auto& [type, count] : counts) {
    Rat f(count, static_cast<unsigned long>(order()));
    f.canonicalize();
    out[type] = f;
  }
  return out;
}

bool PermGroup::centralizes(const Perm& sigma) const {
  for (const Perm& g : generators_)
    if (g * sigma != sigma * g) return false;
  return true;
}

namespace {

NamedGroup make_named(const std::string& label, int id_order, int id_index,
                      std::vector<std::string> cycles, const Rat& expected_density) {
  std::vector<Perm> gens;
  for (const auto& c : cycles) gens.push_back(parse_perm(c));
  auto* group = new PermGroup(PermGroup::close(std::move(gens)));
  NamedGroup named{label, id_order, id_index, group, group->point_density()};
  if (static_cast<int>(group->order()) != id_order)
    throw Error("group " + label + " closure order disagrees with its catalog order");
  if (named.density != expected_density)
    throw Error("group " + label + " density disagrees with the expected constant");
  return named;
}

}  // namespace

const NamedGroup& group_W() {
  static const NamedGroup g = make_named("W", 384, 5557,
                                         {"(1,6,11,2,7,12,3,8,9,4,5,10)",
                                          "(1,7,4,6,3,5,2,8)(9,10,11,12)"},
                                         Rat(85, 384));
  return g;
}

const NamedGroup& group_G() {
  static const NamedGroup g = make_named("G", 192, 944,
                                         {"(5,8,7,6)(9,12,11,10)",
                                          "(1,3)(2,4)(5,10,7,12)(6,11,8,9)",
                                          "(1,12,7)(2,9,8)(3,10,5)(4,11,6)"},
                                         Rat(43, 192));
  return g;
}

const NamedGroup& group_H() {
  static const NamedGroup g = make_named("H", 128, 490,
                                         {"(1,10,4,9,3,12,2,11)", "(1,9,3,11)(2,10,4,12)",
                                          "(1,11,4,10,3,9,2,12)(5,8,7,6)"},
                                         Rat(53, 128));
  return g;
}

const NamedGroup& group_I() {
  static const NamedGroup g = make_named("I", 64, 101,
                                         {"(1,4,3,2)", "(9,10,11,12)", "(1,10,4,9,3,12,2,11)",
                                          "(1,10)(2,11)(3,12)(4,9)(5,7)(6,8)"},
                                         Rat(39, 64));
  return g;
}

const NamedGroup* named_group(const std::string& label) {
  if (label == "W") return &group_W();
  if (label == "G") return &group_G();
  if (label == "H") return &group_H();
  if (label == "I") return &group_I();
  return nullptr;
}

}  // namespace dyn4
