#include "braidsym/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "braidsym/error.hpp"

namespace braidsym {

Letter::Letter(int generator, int sign) : value_(generator) {
  if (generator < 1) {
    throw MalformedInput("generator index must be >= 1, got " + std::to_string(generator));
  }
  if (sign != 1 && sign != -1) {
    throw MalformedInput("letter sign must be +1 or -1, got " + std::to_string(sign));
  }
  value_ = sign * generator;
}

Letter Letter::from_signed(int value) {
  if (value == 0) {
    throw MalformedInput("letter value 0 does not name a generator");
  }
  return Letter(value, Raw{});
}

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 0) {
    throw MalformedInput("free group rank must be non-negative");
  }
}

FreeWord FreeWord::reduce(std::span<const Letter> letters, int rank) {
  WordAccumulator acc(rank);
  for (Letter l : letters) {
    acc.push(l);
  }
  return std::move(acc).finish();
}

FreeWord FreeWord::generator(int index, int rank) {
  const Letter l(index, 1);
  return reduce(std::span<const Letter>(&l, 1), rank);
}

FreeWord FreeWord::inverse() const {
  FreeWord out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverse());
  }
  return out;
}

WordAccumulator::WordAccumulator(int rank, std::size_t length_cap)
    : rank_(rank), cap_(length_cap) {
  if (rank < 0) {
    throw MalformedInput("free group rank must be non-negative");
  }
}

void WordAccumulator::push(Letter letter) {
  if (letter.generator() > rank_) {
    throw MalformedInput("generator index " + std::to_string(letter.generator()) +
                         " exceeds rank " + std::to_string(rank_));
  }
  if (!letters_.empty() && letters_.back() == letter.inverse()) {
    letters_.pop_back();
    return;
  }
  if (letters_.size() >= cap_) {
    throw ResourceLimit("word length exceeded cap of " + std::to_string(cap_) + " letters");
  }
  letters_.push_back(letter);
}

void WordAccumulator::push(const FreeWord& word) {
  if (word.rank() != rank_) {
    throw DimensionMismatch("cannot combine words of rank " + std::to_string(word.rank()) +
                            " and " + std::to_string(rank_));
  }
  for (Letter l : word.letters()) {
    push(l);
  }
}

void WordAccumulator::push_inverse(const FreeWord& word) {
  if (word.rank() != rank_) {
    throw DimensionMismatch("cannot combine words of rank " + std::to_string(word.rank()) +
                            " and " + std::to_string(rank_));
  }
  const auto letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    push(it->inverse());
  }
}

FreeWord WordAccumulator::finish() && {
  FreeWord out(rank_);
  out.letters_ = std::move(letters_);
  return out;
}

FreeWord concat(const FreeWord& lhs, const FreeWord& rhs) {
  if (lhs.rank() != rhs.rank()) {
    throw DimensionMismatch("concat: rank " + std::to_string(lhs.rank()) + " vs " +
                            std::to_string(rhs.rank()));
  }
  WordAccumulator acc(lhs.rank());
  acc.push(lhs);
  acc.push(rhs);
  return std::move(acc).finish();
}

FreeWord invert(const FreeWord& word) { return word.inverse(); }

FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs) { return concat(lhs, rhs); }

bool is_positive(const FreeWord& word) {
  return std::ranges::all_of(word.letters(), [](Letter l) { return l.sign() > 0; });
}

std::vector<std::int64_t> abelianize_word(const FreeWord& word) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(word.rank()), 0);
  for (Letter l : word.letters()) {
    counts[static_cast<std::size_t>(l.generator() - 1)] += l.sign();
  }
  return counts;
}

Alphabet default_alphabet(int rank) noexcept { return rank % 2 == 0 ? Alphabet::ab : Alphabet::x; }

namespace {

int parse_index(std::string_view digits, std::size_t offset) {
  if (digits.empty()) {
    throw ParseError("missing generator index", offset);
  }
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) {
    throw ParseError("invalid generator index '" + std::string(digits) + "'", offset);
  }
  return value;
}

}  // namespace

FreeWord parse_word(std::string_view text, int rank) {
  WordAccumulator acc(rank);
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
    const std::string_view token = text.substr(start, pos - start);
    const char head = token.front();
    const char name = static_cast<char>(std::tolower(static_cast<unsigned char>(head)));
    const int sign = std::isupper(static_cast<unsigned char>(head)) ? -1 : 1;
    const int index = parse_index(token.substr(1), start + 1);

    int generator = 0;
    if (name == 'x') {
      generator = index;
    } else if (name == 'a' || name == 'b') {
      if (rank % 2 != 0) {
        throw ParseError("a/b letters need an even rank, rank is " + std::to_string(rank), start);
      }
      const int genus = rank / 2;
      if (index > genus) {
        throw ParseError("index in '" + std::string(token) + "' exceeds genus " +
                             std::to_string(genus),
                         start);
      }
      generator = name == 'a' ? index : genus + index;
    } else {
      throw ParseError("unknown letter '" + std::string(token) + "'", start);
    }
    if (generator > rank) {
      throw ParseError("generator '" + std::string(token) + "' exceeds rank " +
                           std::to_string(rank),
                       start);
    }
    acc.push(Letter(generator, sign));
  }
  return std::move(acc).finish();
}

std::string format_word(const FreeWord& word) {
  return format_word(word, default_alphabet(word.rank()));
}

std::string format_word(const FreeWord& word, Alphabet alphabet) {
  if (alphabet == Alphabet::ab && word.rank() % 2 != 0) {
    throw MalformedInput("a/b alphabet needs an even rank");
  }
  const int genus = word.rank() / 2;
  std::string out;
  for (Letter l : word.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    char name = 'x';
    int index = l.generator();
    if (alphabet == Alphabet::ab) {
      name = index <= genus ? 'a' : 'b';
      index = index <= genus ? index : index - genus;
    }
    out += l.sign() > 0 ? name : static_cast<char>(std::toupper(static_cast<unsigned char>(name)));
    out += std::to_string(index);
  }
  return out;
}

}  // namespace braidsym
