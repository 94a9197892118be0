#include "braidsym/endo.hpp"

#include <optional>

#include "braidsym/error.hpp"

namespace braidsym {

Endomorphism::Endomorphism(std::vector<FreeWord> images) : images_(std::move(images)) {
  const int n = rank();
  for (const auto& w : images_) {
    if (w.rank() != n) {
      throw DimensionMismatch("endomorphism of rank " + std::to_string(n) +
                              " has an image of rank " + std::to_string(w.rank()));
    }
  }
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int k = 1; k <= rank; ++k) {
    images.push_back(FreeWord::generator(k, rank));
  }
  return Endomorphism(std::move(images));
}

const FreeWord& Endomorphism::image(int index) const {
  if (index < 1 || index > rank()) {
    throw MalformedInput("generator index " + std::to_string(index) + " out of range 1.." +
                         std::to_string(rank()));
  }
  return images_[static_cast<std::size_t>(index - 1)];
}

FreeWord Endomorphism::apply(const FreeWord& word, std::size_t length_cap) const {
  if (word.rank() != rank()) {
    throw DimensionMismatch("applying a rank " + std::to_string(rank()) +
                            " endomorphism to a rank " + std::to_string(word.rank()) + " word");
  }
  WordAccumulator acc(rank(), length_cap);
  for (Letter l : word.letters()) {
    const FreeWord& img = images_[static_cast<std::size_t>(l.generator() - 1)];
    if (l.sign() > 0) {
      acc.push(img);
    } else {
      acc.push_inverse(img);
    }
  }
  return std::move(acc).finish();
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner,
                     std::size_t length_cap) {
  if (outer.rank() != inner.rank()) {
    throw DimensionMismatch("compose: rank " + std::to_string(outer.rank()) + " vs " +
                            std::to_string(inner.rank()));
  }
  std::vector<FreeWord> images;
  images.reserve(inner.images().size());
  for (const auto& w : inner.images()) {
    images.push_back(outer.apply(w, length_cap));
  }
  return Endomorphism(std::move(images));
}

Endomorphism power(const Endomorphism& e, unsigned k, std::size_t length_cap) {
  Endomorphism result = Endomorphism::identity(e.rank());
  for (unsigned i = 0; i < k; ++i) {
    result = compose(e, result, length_cap);
  }
  return result;
}

bool equal(const Endomorphism& lhs, const Endomorphism& rhs) {
  if (lhs.rank() != rhs.rank()) {
    throw DimensionMismatch("equal: rank " + std::to_string(lhs.rank()) + " vs " +
                            std::to_string(rhs.rank()));
  }
  return lhs == rhs;
}

IntMatrix abelianization_matrix(const Endomorphism& e) {
  const auto n = static_cast<std::size_t>(e.rank());
  IntMatrix m(n);
  for (std::size_t col = 0; col < n; ++col) {
    const auto counts = abelianize_word(e.images()[col]);
    for (std::size_t row = 0; row < n; ++row) {
      m(row, col) = counts[row];
    }
  }
  return m;
}

Automorphism Automorphism::identity(int rank) {
  auto id = Endomorphism::identity(rank);
  return Automorphism(id, id);
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner,
                     std::size_t length_cap) {
  // (outer * inner)^-1 = inner^-1 * outer^-1
  return Automorphism(compose(outer.forward_, inner.forward_, length_cap),
                      compose(inner.backward_, outer.backward_, length_cap));
}

Automorphism make_automorphism(Endomorphism forward, Endomorphism backward) {
  if (forward.rank() != backward.rank()) {
    throw DimensionMismatch("make_automorphism: rank " + std::to_string(forward.rank()) +
                            " vs " + std::to_string(backward.rank()));
  }
  const auto fb = compose(forward, backward);
  const auto bf = compose(backward, forward);
  for (int k = 1; k <= forward.rank(); ++k) {
    const auto gen = FreeWord::generator(k, forward.rank());
    if (fb.image(k) != gen || bf.image(k) != gen) {
      throw NotMutuallyInverse("maps are not mutually inverse on generator " + std::to_string(k),
                               k);
    }
  }
  return Automorphism(std::move(forward), std::move(backward));
}

std::string format_endomorphism(const Endomorphism& e) {
  return format_endomorphism(e, default_alphabet(e.rank()));
}

std::string format_endomorphism(const Endomorphism& e, Alphabet alphabet) {
  std::string out;
  for (int k = 1; k <= e.rank(); ++k) {
    out += format_word(FreeWord::generator(k, e.rank()), alphabet);
    out += " -> ";
    out += format_word(e.image(k), alphabet);
    out += '\n';
  }
  return out;
}

Endomorphism parse_endomorphism(std::string_view text, int rank) {
  std::vector<std::optional<FreeWord>> images(static_cast<std::size_t>(rank));
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) {
      line_end = text.size();
    }
    const std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
        throw ParseError("expected '<generator> -> <word>'", line_start);
      }
    } else {
      const FreeWord lhs = parse_word(line.substr(0, arrow), rank);
      if (lhs.size() != 1 || lhs.letters()[0].sign() < 0) {
        throw ParseError("left side of '->' must be a single generator", line_start);
      }
      auto& slot = images[static_cast<std::size_t>(lhs.letters()[0].generator() - 1)];
      if (slot) {
        throw ParseError("generator given twice", line_start);
      }
      slot = parse_word(line.substr(arrow + 2), rank);
    }
    line_start = line_end + 1;
  }
  std::vector<FreeWord> out;
  out.reserve(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!images[k]) {
      throw ParseError("no image given for generator " + std::to_string(k + 1), text.size());
    }
    out.push_back(std::move(*images[k]));
  }
  return Endomorphism(std::move(out));
}

}  // namespace braidsym
