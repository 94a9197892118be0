#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "braidsym/sp4.hpp"
#include "braidsym/symplectic.hpp"

using namespace braidsym;
using namespace braidsym::sp4;

namespace {

const GenusContext g2(2);

IntMatrix image(const BraidWord& b) { return symplectic_image(b, g2); }

BraidWord b6(std::string_view text) { return parse_braid(text, 6); }

std::set<std::string> failing(const VerificationReport& r) {
  std::set<std::string> out;
  for (const auto& c : r.checks()) {
    if (c.status == CheckStatus::fail) out.insert(c.id);
  }
  return out;
}

}  // namespace

TEST_CASE("Behr generators are symplectic and the sigma images match") {
  const auto r = verify_reference_matrices();
  CHECK(failing(r).empty());
  const auto ref = reference_matrices();
  for (int i = 1; i <= 5; ++i) {
    CHECK(image(BraidWord::generator(i, 6)) == ref.sigma[static_cast<std::size_t>(i - 1)]);
  }
  CHECK(image(half_twist(6)) == ref.delta);
}

TEST_CASE("surjectivity witnesses and lifts") {
  CHECK(failing(verify_surjectivity_witnesses()).empty());
  const auto behr = behr_generators();
  for (const auto& [name, lift] : lift_table()) {
    CHECK(image(lift) == behr_by_name(behr, name));
  }
  CHECK_THROWS(behr_by_name(behr, "x_gamma"));
}

TEST_CASE("Behr relators and their lifts") {
  const auto r = verify_gamma_lifts();
  CHECK(failing(r).empty());
  CHECK(r.checks().size() == 3 * 7);

  const auto g = gamma_elements();
  CHECK(lift_behr(behr_relators().at(10)) == g.gamma10);
  CHECK(g.gamma10 == b6("4 5 4 4 5 4 4 5 4 4 5 4"));
}

TEST_CASE("kernel identities decided in B_6") {
  const auto g = gamma_elements();
  CHECK(braids_equal(g.gamma1, b6("3") * g.gamma2 * b6("-3")));
  CHECK(braids_equal(g.gamma13, g.gamma2.inverse()));
  CHECK(braids_equal(g.gamma14, g.gamma2));
  CHECK(braids_equal(g.gamma7, braid_power(b6("4 5"), 6) * braid_power(half_twist(6), 2)));
  CHECK(braids_equal(g.gamma10, braid_power(b6("4 5"), 6)));
  CHECK_FALSE(braids_equal(g.gamma13, g.gamma2));
  CHECK(failing(verify_gamma_identities()).empty());
}

TEST_CASE("action of the kernel generators on F_4") {
  CHECK(failing(verify_kernel_generators()) == std::set<std::string>{"sp4.kernel.alpha_beta"});
}

TEST_CASE("image of alpha beta") {
  // Expected values computed independently with exact rational arithmetic
  // from the five sigma images.
  const auto sb = special_braids();
  CHECK(image(sb.alpha) == IntMatrix{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
  CHECK(image(b6("1 2 1 2 1 2")) ==
        IntMatrix{{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
  CHECK(image(sb.alpha * sb.beta) ==
        IntMatrix{{-1, 0, 0, 2}, {0, -1, 2, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
  CHECK(image(sb.alpha * b6("1 2 1 2 1 2")) == -IntMatrix::identity(4));
  CHECK(image(sb.alpha * sb.alpha) == IntMatrix::identity(4));
  CHECK(image(braid_power(sb.alpha * sb.gamma, 2)) == IntMatrix::identity(4));
}

TEST_CASE("presentation relations under the sigma images") {
  const auto r = verify_presentation();
  CHECK(r.checks().size() == 14);
  CHECK(failing(r) == std::set<std::string>{"sp4.presentation.extra3_s12_3"});
}

TEST_CASE("gamma17 reduction") {
  const auto r = verify_gamma17_quotient();
  CHECK(failing(r) == std::set<std::string>{"sp4.g17.b2_jump", "sp4.g17.b3_jump_image",
                                            "sp4.g17.d5_conjugate"});
  CHECK(r.find("sp4.g17.b1_jump_flipped")->status == CheckStatus::pass);
  CHECK(r.find("sp4.g17.d1_step1")->status == CheckStatus::quotient_pass);

  const auto g = gamma_elements();
  CHECK(image(g.gamma17) == IntMatrix::identity(4));
  const BraidWord jumped = special_braids().alpha * b6("1 2 -1 3 -5 -2 -1") *
                           special_braids().alpha.inverse() * b6("-5 -4 -1 3 -5 4 5") *
                           special_braids().alpha * b6("1 2 -1 3 -5 -2 -1") * half_twist(6);
  CHECK(image(jumped) == IntMatrix{{1, -2, 0, 0}, {2, -3, 0, 0}, {0, 0, -3, -2}, {0, 0, 2, 1}});
}

TEST_CASE("full suite is sorted and carries notes") {
  const auto r = verify_all();
  CHECK(r.notes().size() == 2);
  CHECK(std::is_sorted(r.checks().begin(), r.checks().end(),
                       [](const Check& x, const Check& y) { return x.id < y.id; }));
  CHECK(r.count(CheckStatus::fail) == 5);
  CHECK_FALSE(r.all_passed());
}
