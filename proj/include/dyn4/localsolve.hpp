#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyn4/upoly.hpp"

namespace dyn4 {

/// Hyperelliptic-style model y^2 = f(x) with integer squarefree f.
class CurveModel {
 public:
  explicit CurveModel(const UPoly& f);

  const UPoly& f() const { return f_; }
  int genus() const;

 private:
  UPoly f_;
};

// Model for y^2 = d * f(x); d squarefree and nonzero.
CurveModel quadratic_twist(const CurveModel& curve, const Int& d);

// True iff f attains a nonnegative value somewhere on R (equivalently the
// affine curve y^2 = f(x) has a real point). Exact, via sign analysis and
// Sturm root counting.
bool has_r_points(const CurveModel& curve);

struct LocalSolveOptions {
  // Extra refinement depth on top of the default cap
  // val_p(disc) + 2 val_p(content) + 4 (+3 when p = 2).
  std::optional<long> depth_cap;
  bool want_trace = false;
};

struct LocalVerdict {
  bool has_points;
  // Residue-refinement trace; for empty verdicts this is a certificate: every
  // listed branch is annotated with the reason it cannot hold a point.
  std::vector<std::string> trace;
};

// Decides existence of (x, y) in Q_p^2 with y^2 = f(x). Points with
// |x|_p > 1 are reached through the reversed model v^2 = x^(2 ceil(deg f / 2)) f(1/x)
// on the patch |u|_p < 1. Recursive residue refinement; each branch closes
// once squareness is decided by Hensel lifting or valuation stability.
LocalVerdict solve_qp(const CurveModel& curve, const Int& p, const LocalSolveOptions& opts = {});

bool has_qp_points(const CurveModel& curve, const Int& p);

}  // namespace dyn4
