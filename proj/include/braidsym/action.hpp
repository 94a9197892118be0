#pragma once

#include <vector>

#include "braidsym/braid.hpp"
#include "braidsym/endo.hpp"
#include "braidsym/report.hpp"

namespace braidsym {

/// Genus g >= 1 of the surface; the action is of B_{2g+2} on F_{2g}.
class GenusContext {
 public:
  explicit GenusContext(int genus);

  int genus() const noexcept { return genus_; }
  int rank() const noexcept { return 2 * genus_; }
  int strands() const noexcept { return 2 * genus_ + 2; }

  /// Basis indices: a_i is i, b_i is g + i.
  int a(int i) const noexcept { return i; }
  int b(int i) const noexcept { return genus_ + i; }

 private:
  int genus_;
};

/// The automorphism assigned to the braid generator sigma_i, 1 <= i <= 2g+1.
///
///   i = 1:          b_1 -> a_1 b_1
///   i = 2g+1:       b_g -> b_g a_g
///   i = 2k:         a_k -> b_k^-1 a_k
///   i = 2k+1 < 2g+1: b_k -> b_k a_k a_{k+1}^-1,  b_{k+1} -> a_{k+1} a_k^-1 b_{k+1}
///
/// All other generators are fixed.  The inverse is given in closed form and
/// checked by make_automorphism.
Automorphism generator_automorphism(int index, const GenusContext& ctx);

/// All 2g+1 generator automorphisms, index 0 holding sigma_1's.
std::vector<Automorphism> generator_automorphisms(const GenusContext& ctx);

/// Image of a braid on 2g+2 strands under the homomorphism B_{2g+2} -> Aut(F_{2g}).
Automorphism braid_action(const BraidWord& b, const GenusContext& ctx,
                          std::size_t length_cap = kDefaultLengthCap);

/// Commutation and braid relations among the generator automorphisms, one
/// check per unordered pair.
VerificationReport verify_u_braid_relations(const GenusContext& ctx);

/// Closed forms for the images of the generators under the image of
/// delta = s_1 ... s_{2g+1} and its square, and triviality of its
/// (2g+2)-th power.
VerificationReport verify_center_vanishes(const GenusContext& ctx);

}  // namespace braidsym
