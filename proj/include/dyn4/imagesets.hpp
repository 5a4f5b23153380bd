#pragma once

#include <optional>
#include <string>

#include "dyn4/core.hpp"

namespace dyn4 {

// The three rational functions whose images over nonzero rationals carve out
// the degenerate classification cases:
//   lambda(z) = (z^2 + 2z - 4) / (8z)
//   eta(z)    = (4 - 3z - z^3) / (4z)
//   rho(z)    = (1 + 4z^3 - z^6) / (4z^2 (z^2 - 1))
Rat eval_lambda(const Rat& z);
Rat eval_eta(const Rat& z);
Rat eval_rho(const Rat& z);

enum class ImageFn { Lambda, Eta, Rho };

std::string image_fn_name(ImageFn fn);

/// A certified preimage: evaluating the tagged function at `preimage`
/// reproduces the queried value exactly (asserted on construction).
struct MembershipWitness {
  ImageFn fn;
  Rat preimage;
};

// Membership is decided by exact rational-root finding on the defining
// polynomial relation. The returned witness is the smallest-height preimage
// (positive preferred on ties), so output is deterministic.
std::optional<MembershipWitness> in_image_lambda(const Rat& c);
std::optional<MembershipWitness> in_image_eta(const Rat& c);
std::optional<MembershipWitness> in_image_rho(const Rat& c);

}  // namespace dyn4
