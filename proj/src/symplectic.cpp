#include "braidsym/symplectic.hpp"

#include <cstdlib>
#include <cstdio>
#include <random>

#include "braidsym/error.hpp"

namespace braidsym {

IntMatrix symplectic_form(int genus) {
  const auto g = static_cast<std::size_t>(genus);
  IntMatrix j(2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& m, int genus) {
  if (genus < 1 || m.dim() != static_cast<std::size_t>(2 * genus)) {
    throw DimensionMismatch("is_symplectic: " + std::to_string(m.dim()) + "x" +
                            std::to_string(m.dim()) + " matrix for genus " +
                            std::to_string(genus));
  }
  const IntMatrix j = symplectic_form(genus);
  return transpose(m) * j * m == j;
}

IntMatrix generator_matrix(int index, const GenusContext& ctx) {
  return abelianization_matrix(generator_automorphism(index, ctx).forward());
}

IntMatrix evaluate(const BraidWord& b, std::span<const IntMatrix> generators) {
  if (generators.size() + 1 != static_cast<std::size_t>(b.strands())) {
    throw DimensionMismatch("evaluate: " + std::to_string(generators.size()) +
                            " generator matrices for " + std::to_string(b.strands()) +
                            " strands");
  }
  std::vector<IntMatrix> inverses;
  inverses.reserve(generators.size());
  for (const auto& m : generators) {
    inverses.push_back(inverse_unimodular(m));
  }
  IntMatrix result = IntMatrix::identity(generators.front().dim());
  for (int letter : b.letters()) {
    const auto k = static_cast<std::size_t>(std::abs(letter) - 1);
    result = result * (letter > 0 ? generators[k] : inverses[k]);
  }
  return result;
}

IntMatrix symplectic_image(const BraidWord& b, const GenusContext& ctx) {
  if (b.strands() != ctx.strands()) {
    throw DimensionMismatch("braid on " + std::to_string(b.strands()) + " strands, genus " +
                            std::to_string(ctx.genus()) + " needs " +
                            std::to_string(ctx.strands()));
  }
  std::vector<IntMatrix> gens;
  for (int i = 1; i <= 2 * ctx.genus() + 1; ++i) {
    gens.push_back(generator_matrix(i, ctx));
  }
  return evaluate(b, gens);
}

VerificationReport verify_symplectic_generators(int genus_min, int genus_max) {
  VerificationReport report;
  for (int g = genus_min; g <= genus_max; ++g) {
    const GenusContext ctx(g);
    for (int i = 1; i <= 2 * g + 1; ++i) {
      const IntMatrix m = generator_matrix(i, ctx);
      char id[48];
      std::snprintf(id, sizeof id, "symplectic.g%d.u%02d", g, i);
      report.add(id, "abelianized u" + std::to_string(i) + " preserves the alternating form",
                 is_symplectic(m, g), to_json(m));
    }
  }
  return report;
}

VerificationReport verify_random_symplectic_image(const GenusContext& ctx, int count,
                                                  int max_length, std::uint64_t seed) {
  VerificationReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length_dist(0, max_length);
  std::uniform_int_distribution<int> gen_dist(1, ctx.strands() - 1);
  std::bernoulli_distribution sign_dist(0.5);

  int symplectic_ok = 0;
  int det_ok = 0;
  int route_ok = 0;
  std::string first_failure;
  for (int n = 0; n < count; ++n) {
    std::vector<int> letters(static_cast<std::size_t>(length_dist(rng)));
    for (int& l : letters) {
      l = gen_dist(rng) * (sign_dist(rng) ? 1 : -1);
    }
    const BraidWord b(ctx.strands(), letters);
    const IntMatrix m = symplectic_image(b, ctx);
    const bool sym = is_symplectic(m, ctx.genus());
    const bool det = determinant(m) == 1;
    const bool route = abelianization_matrix(braid_action(b, ctx).forward()) == m;
    symplectic_ok += sym;
    det_ok += det;
    route_ok += route;
    if ((!sym || !det || !route) && first_failure.empty()) {
      first_failure = "braid '" + format_braid(b) + "' -> " + to_json(m);
    }
  }
  const std::string prefix = "symplectic.random.g" + std::to_string(ctx.genus()) + ".";
  const std::string tally = " (" + std::to_string(count) + " words, seed " +
                            std::to_string(seed) + ")";
  report.add(prefix + "form", "images preserve the alternating form" + tally,
             symplectic_ok == count, first_failure);
  report.add(prefix + "det", "images have determinant 1" + tally, det_ok == count,
             first_failure);
  report.add(prefix + "route", "matrix product equals abelianized automorphism" + tally,
             route_ok == count, first_failure);
  return report;
}

}  // namespace braidsym
