#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <set>

#include "braidsym/error.hpp"
#include "braidsym/monoid.hpp"
#include "support.hpp"

using namespace braidsym;

TEST_CASE("Omega alphabet") {
  CHECK(is_omega_letter(1, 2));
  CHECK(is_omega_letter(5, 2));
  CHECK(is_omega_letter(-2, 2));
  CHECK(is_omega_letter(-4, 2));
  CHECK_FALSE(is_omega_letter(2, 2));
  CHECK_FALSE(is_omega_letter(3, 2));
  CHECK_FALSE(is_omega_letter(-3, 2));
  CHECK_FALSE(is_omega_letter(-6, 2));
  CHECK_FALSE(is_omega_letter(-1, 2));
  CHECK_THROWS_AS(OmegaWord(2, {3}), MalformedInput);
}

TEST_CASE("parse and format Omega words") {
  const OmegaWord w = parse_omega("u1 U2 u5 U4", 2);
  CHECK(w.letters() == std::vector<int>{1, -2, 5, -4});
  CHECK(format_omega(w) == "u1 U2 u5 U4");
  CHECK(parse_omega("", 2).empty());
  CHECK_THROWS_AS(parse_omega("u3", 2), ParseError);
  CHECK_THROWS_AS(parse_omega("u2", 2), ParseError);
  CHECK_THROWS_AS(parse_omega("x1", 2), ParseError);
  CHECK_THROWS_AS(parse_omega("u", 2), ParseError);
}

TEST_CASE("positivity of generators") {
  const GenusContext g2(2);
  CHECK(preserves_positive_monoid(generator_automorphism(1, g2).forward()));
  CHECK(preserves_positive_monoid(generator_automorphism(2, g2).backward()));
  CHECK_FALSE(preserves_positive_monoid(generator_automorphism(3, g2).forward()));
  CHECK_FALSE(preserves_positive_monoid(generator_automorphism(3, g2).backward()));
  CHECK_FALSE(preserves_positive_monoid(generator_automorphism(2, g2).forward()));

  const GenusContext g1(1);
  CHECK(preserves_positive_monoid(generator_automorphism(1, g1).forward()));
  CHECK(preserves_positive_monoid(generator_automorphism(2, g1).backward()));
  CHECK(preserves_positive_monoid(generator_automorphism(3, g1).forward()));

  for (int g = 1; g <= 3; ++g) {
    const auto r = check_omega_alphabet(GenusContext(g));
    CHECK(r.checks().size() == static_cast<std::size_t>(2 * (2 * g + 1)));
    CHECK(r.all_passed());
  }
}

TEST_CASE("positivity is closed under composition") {
  std::mt19937_64 rng(1212);
  for (int g : {2, 3}) {
    std::vector<int> alphabet{1, 2 * g + 1};
    for (int i = 1; i <= g; ++i) alphabet.push_back(-2 * i);
    for (int k = 0; k < 150; ++k) {
      std::vector<int> letters(static_cast<std::size_t>(testsupport::random_length(rng, 10)));
      for (int& l : letters) {
        l = alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
      }
      CHECK(preserves_positive_monoid(omega_automorphism(OmegaWord(g, letters)).forward()));
    }
  }
}

TEST_CASE("normal form examples") {
  const auto nf3 = omega_normal_form(OmegaWord(3, {7, -4, 1}));
  CHECK(nf3.prefix == std::vector<int>{1});
  CHECK(nf3.exponents == std::vector<unsigned>{1});
  CHECK(nf3.suffix == std::vector<int>{7});
  CHECK(omega_automorphism(nf3.to_word()) == omega_automorphism(OmegaWord(3, {7, -4, 1})));

  const auto nf2 = omega_normal_form(OmegaWord(2, {5, 1}));
  CHECK(nf2.prefix == std::vector<int>{1});
  CHECK(nf2.exponents.empty());
  CHECK(nf2.suffix == std::vector<int>{5});

  const auto kept = omega_normal_form(OmegaWord(2, {1, -2, 1}));
  CHECK(kept.prefix == std::vector<int>{1, -2, 1});
  CHECK(kept.suffix.empty());

  const auto mixed = omega_normal_form(OmegaWord(2, {-4, 1, 5, -2, -4}));
  CHECK(mixed.prefix == std::vector<int>{1, -2});
  CHECK(mixed.suffix == std::vector<int>{-4, 5, -4});

  CHECK_THROWS_AS(omega_normal_form(OmegaWord(1, {1})), MalformedInput);
}

TEST_CASE("normal form round trip and uniqueness") {
  CHECK(verify_normal_form_roundtrip(GenusContext(2), 5).all_passed());
  CHECK(verify_normal_form_roundtrip(GenusContext(3), 5).all_passed());
  CHECK(verify_normal_form_uniqueness(GenusContext(2), 4).all_passed());
}

TEST_CASE("section of the braid lift") {
  const GenusContext g2(2);
  const auto r = verify_omega_injectivity(g2, 4);
  CHECK(r.all_passed());
  // 1 + 4 + 16 + 64 + 256 words
  CHECK(r.checks().front().description.find(" 341 ") != std::string::npos);
  CHECK(omega_lift(OmegaWord(2, {1, -2, 5})) == BraidWord(6, {1, -2, 5}));
  CHECK(omega_automorphism(OmegaWord(2)) == Automorphism::identity(4));
}

TEST_CASE("free monoid oracle") {
  const auto small = free_monoid_oracle(1, 1);
  CHECK(small.all_passed());
  CHECK(small.checks().front().description.find(" 2 ") != std::string::npos);

  const auto r = free_monoid_oracle(10, 8);
  CHECK(r.all_passed());
  CHECK(r.find("monoid.free_oracle.nontrivial")->description.find(" 2046 ") != std::string::npos);
  CHECK(r.find("monoid.free_oracle.distinct")->description.find(" 510 ") != std::string::npos);

  // Independent count with machine integers.
  using M = std::array<long long, 4>;
  std::set<M> seen;
  std::size_t words = 0;
  for (int len = 1; len <= 8; ++len) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      M m{1, 0, 0, 1};
      for (int k = 0; k < len; ++k) {
        const bool b = (bits >> k) & 1u;
        // right-multiply by A = [[1,1],[0,1]] or B = [[1,0],[1,1]]
        m = b ? M{m[0] + m[1], m[1], m[2] + m[3], m[3]} : M{m[0], m[0] + m[1], m[2], m[2] + m[3]};
      }
      seen.insert(m);
      ++words;
    }
  }
  CHECK(words == 510);
  CHECK(seen.size() == 510);
  CHECK_THROWS_AS(free_monoid_oracle(0), MalformedInput);
}
