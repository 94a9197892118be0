#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidsym {

/// A generator of F_n or its inverse.
///
/// Generators are 1-based.  For F_{2g} the basis order is a_1..a_g, b_1..b_g,
/// so a_i has index i and b_i has index g + i; this is the same order as the
/// rows and columns of abelianization matrices.
class Letter {
 public:
  Letter(int generator, int sign);

  /// +k is generator k, -k its inverse.
  static Letter from_signed(int value);

  int generator() const noexcept { return value_ < 0 ? -value_ : value_; }
  int sign() const noexcept { return value_ < 0 ? -1 : 1; }
  int value() const noexcept { return value_; }
  Letter inverse() const noexcept { return Letter(-value_, Raw{}); }

  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter, Letter) = default;

 private:
  struct Raw {};
  constexpr Letter(int value, Raw) noexcept : value_(value) {}

  int value_;
};

/// Element of the free group F_rank, always stored freely reduced.
class FreeWord {
 public:
  /// The identity of F_rank.
  explicit FreeWord(int rank);

  /// Freely reduces `letters`; throws MalformedInput on an index > rank.
  static FreeWord reduce(std::span<const Letter> letters, int rank);
  static FreeWord generator(int index, int rank);

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  FreeWord inverse() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  friend class WordAccumulator;

  int rank_;
  std::vector<Letter> letters_;
};

/// Builds a reduced word letter by letter.  Each push cancels against the
/// current tail, so the accumulated word is reduced at every step.
class WordAccumulator {
 public:
  explicit WordAccumulator(int rank, std::size_t length_cap = SIZE_MAX);

  void push(Letter letter);
  void push(const FreeWord& word);
  void push_inverse(const FreeWord& word);

  std::size_t size() const noexcept { return letters_.size(); }
  FreeWord finish() &&;

 private:
  int rank_;
  std::size_t cap_;
  std::vector<Letter> letters_;
};

FreeWord concat(const FreeWord& lhs, const FreeWord& rhs);
FreeWord invert(const FreeWord& word);
FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs);

/// True iff the word lies in the free monoid on the generators.
bool is_positive(const FreeWord& word);

/// Signed letter counts, component k-1 for generator k.
std::vector<std::int64_t> abelianize_word(const FreeWord& word);

/// How generator names are printed.  `ab` requires an even rank and uses
/// a1..ag, b1..bg; `x` uses x1..xn and works for any rank.
enum class Alphabet { ab, x };

Alphabet default_alphabet(int rank) noexcept;

/// Whitespace-separated tokens; lowercase a3/b1/x2 is a generator and the
/// uppercase form its inverse.  The empty string is the identity.
FreeWord parse_word(std::string_view text, int rank);
std::string format_word(const FreeWord& word);
std::string format_word(const FreeWord& word, Alphabet alphabet);

}  // namespace braidsym
