// Acceptance suite: one PASS/FAIL line per criterion, exit status = number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "braidsym/action.hpp"
#include "braidsym/monoid.hpp"
#include "braidsym/sp4.hpp"
#include "braidsym/symplectic.hpp"
#include "support.hpp"

using namespace braidsym;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr int kPropertyCases = 250;

struct Outcome {
  bool ok = true;
  std::vector<std::string> detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail.push_back(what);
    }
  }
  void require(const VerificationReport& r) {
    for (const auto& c : r.checks()) {
      require(c.status != CheckStatus::fail, c.id + ": " + c.description);
    }
  }
  void require(const VerificationReport& r, const std::vector<std::string>& ids) {
    for (const auto& id : ids) {
      const Check* c = r.find(id);
      require(c != nullptr, id + ": missing");
      if (c) require(c->status != CheckStatus::fail, c->id + ": " + c->description);
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

Outcome braid_relations() {
  Outcome o;
  for (int g = 1; g <= 4; ++g) o.require(verify_u_braid_relations(GenusContext(g)));
  return o;
}

Outcome center() {
  Outcome o;
  for (int g = 1; g <= 3; ++g) o.require(verify_center_vanishes(GenusContext(g)));
  return o;
}

Outcome genus_one() {
  Outcome o;
  const GenusContext g1(1);
  const Endomorphism G = parse_endomorphism("a1 -> a1\nb1 -> a1 b1", 2);
  const Endomorphism D = parse_endomorphism("a1 -> b1 a1\nb1 -> b1", 2);
  const Endomorphism Gt = parse_endomorphism("a1 -> a1\nb1 -> b1 a1", 2);
  o.require(generator_automorphism(1, g1).forward() == G, "f(s1) = G");
  o.require(generator_automorphism(2, g1).backward() == D, "f(s2) = D^-1");
  o.require(generator_automorphism(3, g1).forward() == Gt, "f(s3) = G~");
  const IntMatrix A{{1, 1}, {0, 1}};
  const IntMatrix B{{1, 0}, {1, 1}};
  o.require(abelianization_matrix(G) == A, "pi(G) = A");
  o.require(abelianization_matrix(Gt) == A, "pi(G~) = A");
  o.require(abelianization_matrix(D) == B, "pi(D) = B");
  const IntMatrix Bi = inverse_unimodular(B);
  o.require(A * Bi * A == Bi * A * Bi, "A B^-1 A = B^-1 A B^-1");
  return o;
}

Outcome symplectic() {
  Outcome o;
  o.require(verify_symplectic_generators(1, 4));
  o.require(verify_random_symplectic_image(GenusContext(2), 500, 40, kSeed));
  return o;
}

Outcome golden_matrices() {
  Outcome o;
  o.require(sp4::verify_reference_matrices(),
            {"sp4.matrices.M1", "sp4.matrices.M2", "sp4.matrices.M3", "sp4.matrices.M4",
             "sp4.matrices.M5", "sp4.matrices.MDelta"});
  return o;
}

Outcome surjectivity() {
  Outcome o;
  o.require(sp4::verify_surjectivity_witnesses(),
            {"sp4.surj.x_beta", "sp4.surj.x_alpha+beta", "sp4.surj.x_2alpha+beta",
             "sp4.surj.x_alpha", "sp4.surj.w_alpha", "sp4.surj.w_beta"});
  return o;
}

Outcome exact_identities() {
  Outcome o;
  o.require(sp4::verify_gamma_identities());
  o.require(sp4::verify_gamma17_quotient(), {"sp4.g17.b2_jump"});
  return o;
}

Outcome kernel_generators() {
  Outcome o;
  o.require(sp4::verify_kernel_generators());
  return o;
}

Outcome presentation() {
  Outcome o;
  const auto r = sp4::verify_presentation();
  o.require(r.checks().size() == 14, "14 relations");
  o.require(r);
  return o;
}

Outcome monoid() {
  Outcome o;
  for (int g = 1; g <= 3; ++g) o.require(check_omega_alphabet(GenusContext(g)));
  for (int g = 2; g <= 3; ++g) o.require(verify_normal_form_roundtrip(GenusContext(g), 5));
  const auto oracle = free_monoid_oracle(10, 8);
  o.require(oracle);
  o.require(oracle.find("monoid.free_oracle.nontrivial")->description.find(" 2046 ") !=
                std::string::npos,
            "2046 words enumerated");
  o.require(verify_omega_injectivity(GenusContext(2), 4));
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  const GenusContext ctx(2);
  int bad_confluence = 0, bad_apply = 0, bad_compose = 0, bad_abel = 0, bad_artin = 0,
      bad_fbar = 0;
  for (int k = 0; k < kPropertyCases; ++k) {
    auto letters = testsupport::random_signed(rng, 4, testsupport::random_length(rng, 64));
    bad_confluence += testsupport::raw(FreeWord::reduce(testsupport::to_letters(letters), 4)) !=
                      testsupport::reduce_randomly(letters, rng);

    const Automorphism f = testsupport::random_automorphism(rng, ctx, 8);
    const Automorphism h = testsupport::random_automorphism(rng, ctx, 8);
    const FreeWord u = testsupport::random_word(rng, 4, 16);
    const FreeWord v = testsupport::random_word(rng, 4, 16);
    bad_apply += !(f.apply(u * v) == f.apply(u) * f.apply(v) &&
                   f.apply(invert(u)) == invert(f.apply(u)));
    bad_compose += !(compose(f, h).apply(u) == f.apply(h.apply(u)));
    bad_abel += !(abelianization_matrix(compose(f, h).forward()) ==
                  abelianization_matrix(f.forward()) * abelianization_matrix(h.forward()));

    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const BraidWord x = testsupport::random_braid(rng, n, 20);
    const BraidWord y = testsupport::random_braid(rng, n, 20);
    bad_artin += !(artin_action(x * y) == compose(artin_action(x), artin_action(y)));

    const BraidWord p = testsupport::random_braid(rng, 6, 25);
    const BraidWord q = testsupport::random_braid(rng, 6, 25);
    bad_fbar += !(symplectic_image(p * q, ctx) == symplectic_image(p, ctx) * symplectic_image(q, ctx));
  }
  const auto tally = [](int bad) {
    return std::to_string(bad) + " of " + std::to_string(kPropertyCases) + " cases failed";
  };
  o.require(bad_confluence == 0, "free reduction confluence: " + tally(bad_confluence));
  o.require(bad_apply == 0, "apply homomorphism: " + tally(bad_apply));
  o.require(bad_compose == 0, "compose law: " + tally(bad_compose));
  o.require(bad_abel == 0, "abelianization homomorphism: " + tally(bad_abel));
  o.require(bad_artin == 0, "Artin action homomorphism: " + tally(bad_artin));
  o.require(bad_fbar == 0, "matrix image functoriality: " + tally(bad_fbar));
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "braid relations among u_i, g = 1..4", 1.0, braid_relations},
      {2, "center vanishing, g = 1..3", 1.0, center},
      {3, "genus 1 regression", 0.1, genus_one},
      {4, "symplectic generators g = 1..4 and 500 random braids at g = 2", 2.0, symplectic},
      {5, "matrix golden set M1..M5, M_Delta", 0.1, golden_matrices},
      {6, "surjectivity witnesses", 0.1, surjectivity},
      {7, "braid identities decided exactly in B_6", 5.0, exact_identities},
      {8, "kernel generators", 1.0, kernel_generators},
      {9, "presentation of Sp_4(Z)", 0.1, presentation},
      {10, "monoid suite", 10.0, monoid},
      {11, "property suites (seed " + std::to_string(kSeed) + ")", 10.0, properties},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_seconds) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "took %.3f s, limit %.1f s", secs, c.limit_seconds);
      o.require(false, buf);
    }
    char line[160];
    std::snprintf(line, sizeof line, "[%s] criterion %2d: %s (%.3f s, limit %.1f s)",
                  o.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs, c.limit_seconds);
    std::cout << line << '\n';
    for (const auto& d : o.detail) std::cout << "       " << d << '\n';
    failures += !o.ok;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << " of " << criteria.size()
            << " criteria passed\n";
  return failures;
}
