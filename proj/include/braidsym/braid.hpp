#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidsym/endo.hpp"

namespace braidsym {

/// Word in the standard generators of B_n, stored freely reduced.
/// A letter +i is sigma_i and -i is sigma_i^-1, with 1 <= i <= n-1.
class BraidWord {
 public:
  /// The trivial braid on `strands` strands (strands >= 2).
  explicit BraidWord(int strands);
  BraidWord(int strands, std::span<const int> letters);
  BraidWord(int strands, std::initializer_list<int> letters)
      : BraidWord(strands, std::span<const int>(letters.begin(), letters.size())) {}

  static BraidWord generator(int index, int strands);

  int strands() const noexcept { return strands_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const int> letters() const noexcept { return letters_; }

  BraidWord inverse() const;

  /// Syntactic equality of reduced words.  Use braids_equal for equality in B_n.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void push(int letter);

  int strands_;
  std::vector<int> letters_;
};

BraidWord braid_concat(const BraidWord& lhs, const BraidWord& rhs);
BraidWord braid_invert(const BraidWord& b);
/// b^k; negative k raises the inverse.
BraidWord braid_power(const BraidWord& b, int k);
BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs);

/// Artin representation B_n -> Aut(F_n):
///   sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, other x_k fixed.
/// Words act through `compose`, so b1*b2 maps to compose(action(b1), action(b2)).
Automorphism artin_action(const BraidWord& b, std::size_t length_cap = kDefaultLengthCap);
/// Forward half of artin_action only; about half the work.
Endomorphism artin_endomorphism(const BraidWord& b, std::size_t length_cap = kDefaultLengthCap);

/// Decides b1 = b2 in B_n by comparing Artin images (the representation is faithful).
bool braids_equal(const BraidWord& lhs, const BraidWord& rhs,
                  std::size_t length_cap = kDefaultLengthCap);

/// Delta_n = (s_1 ... s_{n-1})(s_1 ... s_{n-2}) ... (s_1).
BraidWord half_twist(int strands);

/// Checks that (s_1 ... s_{n-1})^n commutes with every generator (n >= 3).
bool full_twist_center_check(int strands);

/// Whitespace-separated nonzero integers.  In B_6 the names DELTA6, ALPHA,
/// BETA and GAMMA expand to fixed words; a leading '-' on a name inverts it.
BraidWord parse_braid(std::string_view text, int strands);
std::string format_braid(const BraidWord& b);

}  // namespace braidsym
