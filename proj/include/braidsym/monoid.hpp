#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidsym/action.hpp"
#include "braidsym/braid.hpp"
#include "braidsym/endo.hpp"
#include "braidsym/report.hpp"

namespace braidsym {

/// True for the g+2 letters u_1, u_{2g+1}, u_2^-1, u_4^-1, ..., u_{2g}^-1,
/// written as signed indices (+1, +(2g+1), -2i).
bool is_omega_letter(int letter, int genus);

/// Word over the positive alphabet above.
class OmegaWord {
 public:
  explicit OmegaWord(int genus);
  OmegaWord(int genus, std::vector<int> letters);

  int genus() const noexcept { return genus_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<int>& letters() const noexcept { return letters_; }

  friend bool operator==(const OmegaWord&, const OmegaWord&) = default;

 private:
  int genus_;
  std::vector<int> letters_;
};

/// Tokens `u1`, `u5`, `U2` (uppercase is the inverse letter).
OmegaWord parse_omega(std::string_view text, int genus);
std::string format_omega(const OmegaWord& w);

/// The automorphism the word realizes, letters composed left to right.
Automorphism omega_automorphism(const OmegaWord& w, std::size_t length_cap = kDefaultLengthCap);

/// u_i^{+-1} -> s_i^{+-1} in B_{2g+2}.
BraidWord omega_lift(const OmegaWord& w);

/// Every generator image is a positive word.
bool preserves_positive_monoid(const Endomorphism& e);

/// For every u_i and u_i^-1: positive exactly when it is an Omega letter.
/// Accepts g >= 1.
VerificationReport check_omega_alphabet(const GenusContext& ctx);

struct OmegaNormalForm {
  int genus = 0;
  std::vector<int> prefix;          // letters 1 and -2
  std::vector<unsigned> exponents;  // n_2 .. n_{g-1}, the powers of u_4^-1 .. u_{2g-2}^-1
  std::vector<int> suffix;          // letters -2g and 2g+1

  OmegaWord to_word() const;
  friend bool operator==(const OmegaNormalForm&, const OmegaNormalForm&) = default;
};

/// Moves letters into the three blocks by adjacent swaps of commuting letters,
/// keeping the order within each block.  Requires g >= 2.
OmegaNormalForm omega_normal_form(const OmegaWord& w);

/// Nonempty words in A = [[1,1],[0,1]] and B = [[1,0],[1,1]] up to max_len
/// are never I; words up to distinct_len are pairwise distinct.
VerificationReport free_monoid_oracle(int max_len, int distinct_len = 8);

/// f(lift(w)) equals the automorphism of w for all words up to max_len.
VerificationReport verify_omega_injectivity(const GenusContext& ctx, int max_len);

/// omega_normal_form realizes the same automorphism as its input, for all
/// words up to max_len.
VerificationReport verify_normal_form_roundtrip(const GenusContext& ctx, int max_len);

/// Words sharing a normal form realize the same automorphism, and words with
/// different normal forms realize different ones, up to max_len.
VerificationReport verify_normal_form_uniqueness(const GenusContext& ctx, int max_len);

}  // namespace braidsym
