#pragma once

#include <cstdint>
#include <span>

#include "braidsym/action.hpp"
#include "braidsym/braid.hpp"
#include "braidsym/matrix.hpp"
#include "braidsym/report.hpp"

namespace braidsym {

/// J = [[0, I_g], [-I_g, 0]] in the basis a_1..a_g, b_1..b_g.
IntMatrix symplectic_form(int genus);

/// M^T J M == J.  Throws DimensionMismatch unless M is 2g x 2g.
bool is_symplectic(const IntMatrix& m, int genus);

/// Abelianization of generator_automorphism(i, ctx).
IntMatrix generator_matrix(int index, const GenusContext& ctx);

/// Evaluates a braid word letterwise with sigma_i -> generators[i-1]
/// (and sigma_i^-1 -> its inverse).
IntMatrix evaluate(const BraidWord& b, std::span<const IntMatrix> generators);

/// The composite B_{2g+2} -> Aut(F_{2g}) -> GL_{2g}(Z), evaluated as a
/// product of generator matrices.
IntMatrix symplectic_image(const BraidWord& b, const GenusContext& ctx);

/// Every generator matrix is symplectic, for each genus in [genus_min, genus_max].
VerificationReport verify_symplectic_generators(int genus_min = 1, int genus_max = 4);

/// `count` random braid words of length up to `max_length`: the image is
/// symplectic, has determinant 1, and agrees with the abelianized action.
VerificationReport verify_random_symplectic_image(const GenusContext& ctx, int count,
                                                  int max_length, std::uint64_t seed);

}  // namespace braidsym
