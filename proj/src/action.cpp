#include "braidsym/action.hpp"

#include <cstdio>
#include <cstdlib>

#include "braidsym/error.hpp"

namespace braidsym {

GenusContext::GenusContext(int genus) : genus_(genus) {
  if (genus < 1) {
    throw MalformedInput("genus must be >= 1, got " + std::to_string(genus));
  }
}

namespace {

// Small helper for spelling words as signed basis indices.
FreeWord word(const GenusContext& ctx, std::initializer_list<int> letters) {
  std::vector<Letter> out;
  for (int l : letters) {
    out.push_back(Letter::from_signed(l));
  }
  return FreeWord::reduce(out, ctx.rank());
}

std::vector<FreeWord> identity_images(const GenusContext& ctx) {
  const auto id = Endomorphism::identity(ctx.rank());
  return {id.images().begin(), id.images().end()};
}

void set(std::vector<FreeWord>& images, int generator, FreeWord w) {
  images[static_cast<std::size_t>(generator - 1)] = std::move(w);
}

}  // namespace

Automorphism generator_automorphism(int index, const GenusContext& ctx) {
  const int g = ctx.genus();
  if (index < 1 || index > 2 * g + 1) {
    throw MalformedInput("generator index " + std::to_string(index) + " out of range 1.." +
                         std::to_string(2 * g + 1));
  }
  auto fwd = identity_images(ctx);
  auto bwd = identity_images(ctx);
  if (index == 1) {
    set(fwd, ctx.b(1), word(ctx, {ctx.a(1), ctx.b(1)}));
    set(bwd, ctx.b(1), word(ctx, {-ctx.a(1), ctx.b(1)}));
  } else if (index == 2 * g + 1) {
    set(fwd, ctx.b(g), word(ctx, {ctx.b(g), ctx.a(g)}));
    set(bwd, ctx.b(g), word(ctx, {ctx.b(g), -ctx.a(g)}));
  } else if (index % 2 == 0) {
    const int i = index / 2;
    set(fwd, ctx.a(i), word(ctx, {-ctx.b(i), ctx.a(i)}));
    set(bwd, ctx.a(i), word(ctx, {ctx.b(i), ctx.a(i)}));
  } else {
    const int i = index / 2;
    set(fwd, ctx.b(i), word(ctx, {ctx.b(i), ctx.a(i), -ctx.a(i + 1)}));
    set(fwd, ctx.b(i + 1), word(ctx, {ctx.a(i + 1), -ctx.a(i), ctx.b(i + 1)}));
    set(bwd, ctx.b(i), word(ctx, {ctx.b(i), ctx.a(i + 1), -ctx.a(i)}));
    set(bwd, ctx.b(i + 1), word(ctx, {ctx.a(i), -ctx.a(i + 1), ctx.b(i + 1)}));
  }
  return make_automorphism(Endomorphism(std::move(fwd)), Endomorphism(std::move(bwd)));
}

std::vector<Automorphism> generator_automorphisms(const GenusContext& ctx) {
  std::vector<Automorphism> out;
  out.reserve(static_cast<std::size_t>(2 * ctx.genus() + 1));
  for (int i = 1; i <= 2 * ctx.genus() + 1; ++i) {
    out.push_back(generator_automorphism(i, ctx));
  }
  return out;
}

Automorphism braid_action(const BraidWord& b, const GenusContext& ctx, std::size_t length_cap) {
  if (b.strands() != ctx.strands()) {
    throw DimensionMismatch("braid on " + std::to_string(b.strands()) +
                            " strands, genus " + std::to_string(ctx.genus()) + " needs " +
                            std::to_string(ctx.strands()));
  }
  const auto gens = generator_automorphisms(ctx);
  Automorphism result = Automorphism::identity(ctx.rank());
  for (int letter : b.letters()) {
    const auto& u = gens[static_cast<std::size_t>(std::abs(letter) - 1)];
    result = compose(result, letter > 0 ? u : u.inverse(), length_cap);
  }
  return result;
}

VerificationReport verify_u_braid_relations(const GenusContext& ctx) {
  VerificationReport report;
  const auto u = generator_automorphisms(ctx);
  const int count = 2 * ctx.genus() + 1;
  const std::string prefix = "relations.g" + std::to_string(ctx.genus()) + ".";
  for (int i = 1; i <= count; ++i) {
    for (int j = i + 1; j <= count; ++j) {
      const auto& ui = u[static_cast<std::size_t>(i - 1)];
      const auto& uj = u[static_cast<std::size_t>(j - 1)];
      const std::string pair = "u" + std::to_string(i) + ",u" + std::to_string(j);
      char id[32];
      std::snprintf(id, sizeof id, "u%02d_u%02d", i, j);
      if (j - i > 1) {
        const auto lhs = compose(ui, uj);
        const auto rhs = compose(uj, ui);
        report.add(prefix + id, "commutation " + pair, lhs == rhs,
                   format_endomorphism(lhs.forward()) + " vs\n" +
                       format_endomorphism(rhs.forward()));
      } else {
        const auto lhs = compose(compose(ui, uj), ui);
        const auto rhs = compose(compose(uj, ui), uj);
        report.add(prefix + id, "braid relation " + pair, lhs == rhs,
                   format_endomorphism(lhs.forward()) + " vs\n" +
                       format_endomorphism(rhs.forward()));
      }
    }
  }
  return report;
}

VerificationReport verify_center_vanishes(const GenusContext& ctx) {
  VerificationReport report;
  const int g = ctx.genus();
  const std::string prefix = "center.g" + std::to_string(g) + ".";

  std::vector<int> cycle;
  for (int i = 1; i <= 2 * g + 1; ++i) {
    cycle.push_back(i);
  }
  const BraidWord delta(ctx.strands(), cycle);
  const Automorphism rot = braid_action(delta, ctx);
  const Automorphism rot2 = compose(rot, rot);

  // b_1 ... b_i
  const auto b_prefix = [&](int i) {
    std::vector<Letter> out;
    for (int k = 1; k <= i; ++k) {
      out.emplace_back(ctx.b(k), 1);
    }
    return FreeWord::reduce(out, ctx.rank());
  };

  const auto expect = [&](const std::string& id, const std::string& what, const FreeWord& got,
                          const FreeWord& want) {
    report.add(prefix + id, what + " = " + format_word(want), got == want,
               "got " + format_word(got) + ", expected " + format_word(want));
  };

  for (int i = 1; i <= g; ++i) {
    const std::string si = std::to_string(i);
    const auto ai = FreeWord::generator(ctx.a(i), ctx.rank());
    const auto bi = FreeWord::generator(ctx.b(i), ctx.rank());

    expect("delta.a" + si, "delta(a" + si + ")", rot.apply(ai), b_prefix(i).inverse());
    expect("delta.b" + si, "delta(b" + si + ")", rot.apply(bi),
           i != g ? word(ctx, {ctx.a(i), -ctx.a(i + 1)}) : word(ctx, {ctx.a(g)}));
    expect("delta2.a" + si, "delta^2(a" + si + ")", rot2.apply(ai),
           i != g ? word(ctx, {ctx.a(i + 1), -ctx.a(1)}) : word(ctx, {-ctx.a(1)}));
    expect("delta2.b" + si, "delta^2(b" + si + ")", rot2.apply(bi),
           i != g ? word(ctx, {ctx.b(i + 1)}) : b_prefix(g).inverse());
  }

  Automorphism acc = Automorphism::identity(ctx.rank());
  for (int k = 0; k < 2 * g + 2; ++k) {
    acc = compose(acc, rot);
  }
  report.add(prefix + "power", "delta^" + std::to_string(2 * g + 2) + " acts as the identity",
             acc == Automorphism::identity(ctx.rank()), format_endomorphism(acc.forward()));

  const BraidWord full_twist = braid_power(delta, 2 * g + 2);
  report.add(prefix + "braid_image",
             "image of the braid delta^" + std::to_string(2 * g + 2) + " is the identity",
             braid_action(full_twist, ctx) == Automorphism::identity(ctx.rank()));
  report.add(prefix + "central",
             "delta^" + std::to_string(2 * g + 2) + " commutes with every generator in B_" +
                 std::to_string(ctx.strands()),
             full_twist_center_check(ctx.strands()));
  return report;
}

}  // namespace braidsym
