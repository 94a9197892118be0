#include "braidsym/braid.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>

#include "braidsym/error.hpp"

namespace braidsym {

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 2) {
    throw MalformedInput("a braid group needs at least 2 strands, got " + std::to_string(strands));
  }
}

BraidWord::BraidWord(int strands, std::span<const int> letters) : BraidWord(strands) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    push(l);
  }
}

BraidWord BraidWord::generator(int index, int strands) {
  const int l = index;
  return BraidWord(strands, std::span<const int>(&l, 1));
}

void BraidWord::push(int letter) {
  if (letter == 0 || std::abs(letter) >= strands_) {
    throw MalformedInput("braid generator " + std::to_string(letter) + " out of range for " +
                         std::to_string(strands_) + " strands");
  }
  if (!letters_.empty() && letters_.back() == -letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(-*it);
  }
  return out;
}

BraidWord braid_concat(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.strands() != rhs.strands()) {
    throw DimensionMismatch("braid concat: " + std::to_string(lhs.strands()) + " vs " +
                            std::to_string(rhs.strands()) + " strands");
  }
  std::vector<int> letters(lhs.letters().begin(), lhs.letters().end());
  letters.insert(letters.end(), rhs.letters().begin(), rhs.letters().end());
  return BraidWord(lhs.strands(), letters);
}

BraidWord braid_invert(const BraidWord& b) { return b.inverse(); }

BraidWord braid_power(const BraidWord& b, int k) {
  const BraidWord base = k < 0 ? b.inverse() : b;
  BraidWord out(b.strands());
  for (int i = 0; i < std::abs(k); ++i) {
    out = braid_concat(out, base);
  }
  return out;
}

BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) { return braid_concat(lhs, rhs); }

namespace {

// by * w * by^-1, or by^-1 * w * by when `by_inverse` is set.
FreeWord conjugate(const FreeWord& w, const FreeWord& by, bool by_inverse, std::size_t cap) {
  WordAccumulator acc(w.rank(), cap);
  if (by_inverse) {
    acc.push_inverse(by);
    acc.push(w);
    acc.push(by);
  } else {
    acc.push(by);
    acc.push(w);
    acc.push_inverse(by);
  }
  return std::move(acc).finish();
}

// Images of one Artin generator (or its inverse) as an endomorphism.
Endomorphism artin_generator(int letter, int rank) {
  const auto id = Endomorphism::identity(rank);
  std::vector<FreeWord> out(id.images().begin(), id.images().end());
  const int i = std::abs(letter);
  const auto xi = FreeWord::generator(i, rank);
  const auto xj = FreeWord::generator(i + 1, rank);
  if (letter > 0) {
    out[static_cast<std::size_t>(i - 1)] = xi * xj * xi.inverse();
    out[static_cast<std::size_t>(i)] = xi;
  } else {
    out[static_cast<std::size_t>(i - 1)] = xj;
    out[static_cast<std::size_t>(i)] = xj.inverse() * xi * xj;
  }
  return Endomorphism(std::move(out));
}

}  // namespace

Endomorphism artin_endomorphism(const BraidWord& b, std::size_t length_cap) {
  const int n = b.strands();
  const auto id = Endomorphism::identity(n);
  std::vector<FreeWord> img(id.images().begin(), id.images().end());
  // Right-multiplying the accumulated map E by a generator only rewrites
  // two images: E*s_i sends x_i to E(x_i)E(x_{i+1})E(x_i)^-1 and x_{i+1}
  // to E(x_i).
  for (int letter : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    FreeWord& xi = img[i];
    FreeWord& xj = img[i + 1];
    if (letter > 0) {
      FreeWord next = conjugate(xj, xi, false, length_cap);
      xj = std::move(xi);
      xi = std::move(next);
    } else {
      FreeWord next = conjugate(xi, xj, true, length_cap);
      xi = std::move(xj);
      xj = std::move(next);
    }
  }
  return Endomorphism(std::move(img));
}

Automorphism artin_action(const BraidWord& b, std::size_t length_cap) {
  const int n = b.strands();
  Automorphism result = Automorphism::identity(n);
  for (int letter : b.letters()) {
    auto step = make_automorphism(artin_generator(letter, n), artin_generator(-letter, n));
    result = compose(result, step, length_cap);
  }
  return result;
}

bool braids_equal(const BraidWord& lhs, const BraidWord& rhs, std::size_t length_cap) {
  if (lhs.strands() != rhs.strands()) {
    throw DimensionMismatch("braids_equal: " + std::to_string(lhs.strands()) + " vs " +
                            std::to_string(rhs.strands()) + " strands");
  }
  if (lhs == rhs) {
    return true;
  }
  return artin_endomorphism(lhs, length_cap) == artin_endomorphism(rhs, length_cap);
}

BraidWord half_twist(int strands) {
  std::vector<int> letters;
  for (int top = strands - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) {
      letters.push_back(i);
    }
  }
  return BraidWord(strands, letters);
}

bool full_twist_center_check(int strands) {
  if (strands < 3) {
    throw MalformedInput("full_twist_center_check needs at least 3 strands");
  }
  std::vector<int> cycle;
  for (int i = 1; i < strands; ++i) {
    cycle.push_back(i);
  }
  const BraidWord twist = braid_power(BraidWord(strands, cycle), strands);
  for (int i = 1; i < strands; ++i) {
    const auto s = BraidWord::generator(i, strands);
    if (!braids_equal(twist * s, s * twist)) {
      return false;
    }
  }
  return true;
}

namespace {

std::optional<BraidWord> named_braid(std::string_view name, int strands) {
  if (name == "DELTA6") {
    return half_twist(6);
  }
  if (name == "ALPHA") {
    return BraidWord(strands, {4, 5, 4, 5, 4, 5});
  }
  if (name == "BETA") {
    return BraidWord(strands, {-3, 1, 2, 1, 2, 1, 2, 3});
  }
  if (name == "GAMMA") {
    return BraidWord(strands, {1, -3, 5});
  }
  return std::nullopt;
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  std::vector<int> letters;
  BraidWord probe(strands);  // validates the strand count even for empty input
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    std::string_view token = text.substr(start, pos - start);
    const bool negated = token.front() == '-';
    const std::string_view body = negated ? token.substr(1) : token;

    if (!body.empty() && std::isalpha(static_cast<unsigned char>(body.front()))) {
      if (strands != 6) {
        throw ParseError("named braid '" + std::string(body) + "' is only defined in B_6", start);
      }
      const auto named = named_braid(body, strands);
      if (!named) {
        throw ParseError("unknown braid name '" + std::string(body) + "'", start);
      }
      const BraidWord piece = negated ? named->inverse() : *named;
      letters.insert(letters.end(), piece.letters().begin(), piece.letters().end());
      continue;
    }

    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("invalid braid token '" + std::string(token) + "'", start);
    }
    if (value == 0 || std::abs(value) >= strands) {
      throw ParseError("braid generator " + std::string(token) + " out of range for " +
                           std::to_string(strands) + " strands",
                       start);
    }
    letters.push_back(value);
  }
  return BraidWord(strands, letters);
}

std::string format_braid(const BraidWord& b) {
  std::string out;
  for (int l : b.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(l);
  }
  return out;
}

}  // namespace braidsym
