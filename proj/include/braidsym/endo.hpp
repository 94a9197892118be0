#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidsym/freegroup.hpp"
#include "braidsym/matrix.hpp"

namespace braidsym {

/// Default cap on the length of any word produced by Endomorphism::apply.
inline constexpr std::size_t kDefaultLengthCap = 1'000'000;

/// Endomorphism of F_n, determined by the images of the n generators.
class Endomorphism {
 public:
  explicit Endomorphism(std::vector<FreeWord> images);
  static Endomorphism identity(int rank);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  /// Image of the 1-based generator `index`.
  const FreeWord& image(int index) const;
  std::span<const FreeWord> images() const noexcept { return images_; }

  /// Letterwise substitution followed by free reduction.  Throws
  /// ResourceLimit if the reduced result would exceed `length_cap`.
  FreeWord apply(const FreeWord& word, std::size_t length_cap = kDefaultLengthCap) const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
};

/// `outer * inner`: apply `inner` first, then `outer`.
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner,
                     std::size_t length_cap = kDefaultLengthCap);
Endomorphism power(const Endomorphism& e, unsigned k, std::size_t length_cap = kDefaultLengthCap);

/// Equality of endomorphisms; throws DimensionMismatch on different ranks.
bool equal(const Endomorphism& lhs, const Endomorphism& rhs);

/// Column k holds the abelianized image of generator k.
IntMatrix abelianization_matrix(const Endomorphism& e);

/// An endomorphism bundled with a two-sided inverse.  Only obtainable through
/// make_automorphism (checked) or through operations that preserve the
/// pairing (composition, inversion, identity).
class Automorphism {
 public:
  static Automorphism identity(int rank);

  int rank() const noexcept { return forward_.rank(); }
  const Endomorphism& forward() const noexcept { return forward_; }
  const Endomorphism& backward() const noexcept { return backward_; }

  Automorphism inverse() const { return Automorphism(backward_, forward_); }
  FreeWord apply(const FreeWord& word, std::size_t length_cap = kDefaultLengthCap) const {
    return forward_.apply(word, length_cap);
  }

  /// Equality as group elements (the forward maps decide it).
  friend bool operator==(const Automorphism& lhs, const Automorphism& rhs) {
    return lhs.forward_ == rhs.forward_;
  }

  friend Automorphism compose(const Automorphism& outer, const Automorphism& inner,
                              std::size_t length_cap);
  friend Automorphism make_automorphism(Endomorphism forward, Endomorphism backward);

 private:
  Automorphism(Endomorphism forward, Endomorphism backward)
      : forward_(std::move(forward)), backward_(std::move(backward)) {}

  Endomorphism forward_;
  Endomorphism backward_;
};

Automorphism compose(const Automorphism& outer, const Automorphism& inner,
                     std::size_t length_cap = kDefaultLengthCap);
Automorphism make_automorphism(Endomorphism forward, Endomorphism backward);

/// One `a1 -> <word>` line per generator, in basis order.
std::string format_endomorphism(const Endomorphism& e);
std::string format_endomorphism(const Endomorphism& e, Alphabet alphabet);
/// Accepts the format_endomorphism layout.  Every generator must be given
/// exactly once; blank lines are ignored.
Endomorphism parse_endomorphism(std::string_view text, int rank);

}  // namespace braidsym
