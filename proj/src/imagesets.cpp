#include "dyn4/imagesets.hpp"

#include <algorithm>

#include "dyn4/factor.hpp"
#include "dyn4/upoly.hpp"

namespace dyn4 {

Rat eval_lambda(const Rat& z) {
  if (z == 0) throw PoleError("lambda has a pole at 0");
  return (z * z + 2 * z - 4) / (8 * z);
}

Rat eval_eta(const Rat& z) {
  if (z == 0) throw PoleError("eta has a pole at 0");
  return (4 - 3 * z - z * z * z) / (4 * z);
}

Rat eval_rho(const Rat& z) {
  if (z == 0 || z == 1 || z == -1) throw PoleError("rho has a pole at 0, 1, -1");
  const Rat z2 = z * z;
  const Rat z3 = z2 * z;
  return (1 + 4 * z3 - z3 * z3) / (4 * z2 * (z2 - 1));
}

std::string image_fn_name(ImageFn fn) {
  switch (fn) {
    case ImageFn::Lambda: return "lambda";
    case ImageFn::Eta: return "eta";
    case ImageFn::Rho: return "rho";
  }
  return "?";
}

namespace {

// Smallest height first; on equal height the positive candidate wins.
bool witness_less(const Rat& a, const Rat& b) {
  const Int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  if ((a > 0) != (b > 0)) return a > 0;
  return a < b;
}

std::optional<MembershipWitness> witness_from_roots(ImageFn fn, const Rat& c, const UPoly& defining,
                                                    Rat (*eval)(const Rat&)) {
  auto roots = rational_roots(defining);
  std::optional<Rat> best;
  for (const auto& [r, mult] : roots) {
    if (r == 0) continue;
    if (fn == ImageFn::Rho && (r == 1 || r == -1)) continue;
    if (!best || witness_less(r, *best)) best = r;
  }
  if (!best) return std::nullopt;
  if (eval(*best) != c) throw Error("membership witness failed verification (internal bug)");
  return MembershipWitness{fn, *best};
}

}  // namespace

std::optional<MembershipWitness> in_image_lambda(const Rat& c) {
  // lambda(z) = c  <=>  z^2 + (2 - 8c) z - 4 = 0; z = 0 is impossible since
  // the constant term is -4.
  const UPoly defining{Rat(-4), 2 - 8 * c, Rat(1)};
  return witness_from_roots(ImageFn::Lambda, c, defining, eval_lambda);
}

std::optional<MembershipWitness> in_image_eta(const Rat& c) {
  // eta(z) = c  <=>  z^3 + (4c + 3) z - 4 = 0.
  const UPoly defining{Rat(-4), 4 * c + 3, Rat(0), Rat(1)};
  return witness_from_roots(ImageFn::Eta, c, defining, eval_eta);
}

std::optional<MembershipWitness> in_image_rho(const Rat& c) {
  // rho(z) = c  <=>  z^6 + 4c z^4 - 4 z^3 - 4c z^2 - 1 = 0; z = 0, 1, -1
  // evaluate to -1, -4, 4, so the poles are never roots.
  const UPoly defining{Rat(-1), Rat(0), -4 * c, Rat(-4), 4 * c, Rat(0), Rat(1)};
  return witness_from_roots(ImageFn::Rho, c, defining, eval_rho);
}

}  // namespace dyn4
