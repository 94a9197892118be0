#include "braidsym/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "braidsym/error.hpp"
#include "braidsym/matrix.hpp"

namespace braidsym {

bool is_omega_letter(int letter, int genus) {
  if (letter == 1 || letter == 2 * genus + 1) {
    return true;
  }
  return letter < 0 && -letter % 2 == 0 && -letter <= 2 * genus;
}

OmegaWord::OmegaWord(int genus) : genus_(genus) {
  if (genus < 1) {
    throw MalformedInput("genus must be >= 1, got " + std::to_string(genus));
  }
}

OmegaWord::OmegaWord(int genus, std::vector<int> letters)
    : OmegaWord(genus) {
  for (int l : letters) {
    if (!is_omega_letter(l, genus)) {
      throw MalformedInput("letter " + std::to_string(l) + " is not in the Omega alphabet for genus " +
                           std::to_string(genus));
    }
  }
  letters_ = std::move(letters);
}

OmegaWord parse_omega(std::string_view text, int genus) {
  std::vector<int> letters;
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
    if (token.size() < 2 || (token[0] != 'u' && token[0] != 'U')) {
      throw ParseError("invalid Omega token '" + std::string(token) + "'", start);
    }
    int index = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc{} || ptr != last || index < 1) {
      throw ParseError("invalid Omega token '" + std::string(token) + "'", start);
    }
    const int letter = token[0] == 'U' ? -index : index;
    if (!is_omega_letter(letter, genus)) {
      throw ParseError("'" + std::string(token) + "' is not an Omega letter for genus " +
                           std::to_string(genus),
                       start);
    }
    letters.push_back(letter);
  }
  return OmegaWord(genus, std::move(letters));
}

std::string format_omega(const OmegaWord& w) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += (l > 0 ? "u" : "U") + std::to_string(std::abs(l));
  }
  return out;
}

namespace {

Automorphism letter_automorphism(int letter, const GenusContext& ctx) {
  const Automorphism u = generator_automorphism(std::abs(letter), ctx);
  return letter > 0 ? u : u.inverse();
}

std::vector<int> omega_alphabet(int genus) {
  std::vector<int> out{1};
  for (int i = 1; i <= genus; ++i) {
    out.push_back(-2 * i);
  }
  out.push_back(2 * genus + 1);
  return out;
}

// Depth-first over all words of length <= max_len; the automorphism of each
// prefix is reused by its extensions.
void for_each_word(const GenusContext& ctx, int max_len,
                   const std::function<void(const std::vector<int>&, const Automorphism&)>& visit) {
  const auto alphabet = omega_alphabet(ctx.genus());
  std::vector<Automorphism> gens;
  for (int l : alphabet) {
    gens.push_back(letter_automorphism(l, ctx));
  }
  std::vector<int> word;
  std::function<void(const Automorphism&)> walk = [&](const Automorphism& current) {
    visit(word, current);
    if (static_cast<int>(word.size()) == max_len) {
      return;
    }
    for (std::size_t k = 0; k < alphabet.size(); ++k) {
      word.push_back(alphabet[k]);
      walk(compose(current, gens[k]));
      word.pop_back();
    }
  };
  walk(Automorphism::identity(ctx.rank()));
}

std::string word_text(int genus, const std::vector<int>& letters) {
  const std::string s = format_omega(OmegaWord(genus, letters));
  return s.empty() ? "(empty)" : s;
}

}  // namespace

Automorphism omega_automorphism(const OmegaWord& w, std::size_t length_cap) {
  const GenusContext ctx(w.genus());
  Automorphism result = Automorphism::identity(ctx.rank());
  for (int l : w.letters()) {
    result = compose(result, letter_automorphism(l, ctx), length_cap);
  }
  return result;
}

BraidWord omega_lift(const OmegaWord& w) {
  return BraidWord(2 * w.genus() + 2, w.letters());
}

bool preserves_positive_monoid(const Endomorphism& e) {
  for (const auto& image : e.images()) {
    if (!is_positive(image)) {
      return false;
    }
  }
  return true;
}

VerificationReport check_omega_alphabet(const GenusContext& ctx) {
  VerificationReport report;
  const int g = ctx.genus();
  const std::string prefix = "monoid.positivity.g" + std::to_string(g) + ".";
  for (int i = 1; i <= 2 * g + 1; ++i) {
    for (int sign : {1, -1}) {
      const int letter = sign * i;
      const Endomorphism e = letter_automorphism(letter, ctx).forward();
      const bool expected = is_omega_letter(letter, g);
      char id[16];
      std::snprintf(id, sizeof id, "%c%02d", sign > 0 ? 'u' : 'U', i);
      const std::string name = "u" + std::to_string(i) + (sign > 0 ? "" : "^-1");
      report.add(prefix + id,
                 name + (expected ? " preserves" : " does not preserve") + " the positive monoid",
                 preserves_positive_monoid(e) == expected, format_endomorphism(e));
    }
  }
  return report;
}

OmegaWord OmegaNormalForm::to_word() const {
  std::vector<int> letters = prefix;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    letters.insert(letters.end(), exponents[k], -2 * static_cast<int>(k + 2));
  }
  letters.insert(letters.end(), suffix.begin(), suffix.end());
  return OmegaWord(genus, std::move(letters));
}

OmegaNormalForm omega_normal_form(const OmegaWord& w) {
  const int g = w.genus();
  if (g < 2) {
    throw MalformedInput("omega_normal_form needs genus >= 2");
  }
  // Block key: 0 for u1, u2^-1; k for u_{2k}^-1 with 2 <= k <= g-1; g for
  // u_{2g}^-1, u_{2g+1}.
  const auto key = [g](int letter) {
    if (letter == 1 || letter == -2) return 0;
    if (letter == 2 * g + 1 || letter == -2 * g) return g;
    return -letter / 2;
  };
  std::vector<int> letters = w.letters();
  for (std::size_t pass = 0; pass < letters.size(); ++pass) {
    bool swapped = false;
    for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
      if (key(letters[k]) > key(letters[k + 1])) {
        if (std::abs(std::abs(letters[k]) - std::abs(letters[k + 1])) <= 1) {
          throw std::logic_error("omega_normal_form: swap of non-commuting letters");
        }
        std::swap(letters[k], letters[k + 1]);
        swapped = true;
      }
    }
    if (!swapped) {
      break;
    }
  }
  OmegaNormalForm nf;
  nf.genus = g;
  nf.exponents.assign(static_cast<std::size_t>(g - 2), 0);
  for (int l : letters) {
    const int k = key(l);
    if (k == 0) {
      nf.prefix.push_back(l);
    } else if (k == g) {
      nf.suffix.push_back(l);
    } else {
      ++nf.exponents[static_cast<std::size_t>(k - 2)];
    }
  }
  return nf;
}

VerificationReport free_monoid_oracle(int max_len, int distinct_len) {
  if (max_len < 1 || distinct_len < 1) {
    throw MalformedInput("free_monoid_oracle: bounds must be >= 1");
  }
  const IntMatrix a{{1, 1}, {0, 1}};
  const IntMatrix b{{1, 0}, {1, 1}};
  const IntMatrix id = IntMatrix::identity(2);

  std::size_t total = 0;
  std::size_t identities = 0;
  std::size_t within_bound = 0;
  std::set<IntMatrix> seen;
  std::string first_identity;
  std::string word;
  std::function<void(const IntMatrix&)> walk = [&](const IntMatrix& m) {
    if (!word.empty()) {
      ++total;
      if (m == id) {
        ++identities;
        if (first_identity.empty()) first_identity = word;
      }
      if (static_cast<int>(word.size()) <= distinct_len) {
        ++within_bound;
        seen.insert(m);
      }
    }
    if (static_cast<int>(word.size()) == max_len) {
      return;
    }
    word.push_back('A');
    walk(m * a);
    word.back() = 'B';
    walk(m * b);
    word.pop_back();
  };
  walk(id);

  VerificationReport report;
  report.add("monoid.free_oracle.nontrivial",
             "all " + std::to_string(total) + " nonempty words in A, B of length <= " +
                 std::to_string(max_len) + " differ from I",
             identities == 0, first_identity);
  report.add("monoid.free_oracle.distinct",
             "all " + std::to_string(within_bound) + " nonempty words of length <= " +
                 std::to_string(std::min(distinct_len, max_len)) + " give distinct matrices",
             seen.size() == within_bound,
             std::to_string(seen.size()) + " distinct matrices");
  return report;
}

VerificationReport verify_omega_injectivity(const GenusContext& ctx, int max_len) {
  VerificationReport report;
  std::size_t count = 0;
  std::size_t bad = 0;
  std::string first_bad;
  for_each_word(ctx, max_len, [&](const std::vector<int>& letters, const Automorphism& realized) {
    ++count;
    const BraidWord lift(ctx.strands(), letters);
    if (!(braid_action(lift, ctx) == realized)) {
      ++bad;
      if (first_bad.empty()) first_bad = word_text(ctx.genus(), letters);
    }
  });
  report.add("monoid.section.g" + std::to_string(ctx.genus()),
             "f(lift(w)) = w for all " + std::to_string(count) + " Omega words of length <= " +
                 std::to_string(max_len),
             bad == 0, first_bad);
  return report;
}

VerificationReport verify_normal_form_roundtrip(const GenusContext& ctx, int max_len) {
  VerificationReport report;
  std::size_t count = 0;
  std::size_t bad = 0;
  std::string first_bad;
  for_each_word(ctx, max_len, [&](const std::vector<int>& letters, const Automorphism& realized) {
    ++count;
    const OmegaWord w(ctx.genus(), letters);
    const OmegaWord nf = omega_normal_form(w).to_word();
    auto sorted_in = letters;
    auto sorted_out = nf.letters();
    std::sort(sorted_in.begin(), sorted_in.end());
    std::sort(sorted_out.begin(), sorted_out.end());
    if (sorted_in != sorted_out || !(omega_automorphism(nf) == realized)) {
      ++bad;
      if (first_bad.empty()) first_bad = format_omega(w) + " -> " + format_omega(nf);
    }
  });
  report.add("monoid.normal_form.roundtrip.g" + std::to_string(ctx.genus()),
             "normal form realizes the same automorphism for all " + std::to_string(count) +
                 " words of length <= " + std::to_string(max_len),
             bad == 0, first_bad);
  return report;
}

VerificationReport verify_normal_form_uniqueness(const GenusContext& ctx, int max_len) {
  using Images = std::vector<FreeWord>;
  std::map<std::vector<int>, Images> by_form;
  std::size_t same_form_bad = 0;
  std::string first_bad;
  for_each_word(ctx, max_len, [&](const std::vector<int>& letters, const Automorphism& realized) {
    const OmegaWord nf = omega_normal_form(OmegaWord(ctx.genus(), letters)).to_word();
    const auto& fwd = realized.forward().images();
    Images images(fwd.begin(), fwd.end());
    const auto [it, inserted] = by_form.emplace(nf.letters(), images);
    if (!inserted && it->second != images) {
      ++same_form_bad;
      if (first_bad.empty()) first_bad = word_text(ctx.genus(), letters);
    }
  });
  std::set<Images> distinct;
  for (const auto& [nf, images] : by_form) {
    distinct.insert(images);
  }
  VerificationReport report;
  const std::string prefix = "monoid.normal_form.unique.g" + std::to_string(ctx.genus()) + ".";
  report.add(prefix + "same_form", "words with the same normal form realize the same automorphism",
             same_form_bad == 0, first_bad);
  report.add(prefix + "distinct_forms",
             std::to_string(by_form.size()) + " distinct normal forms of length <= " +
                 std::to_string(max_len) + " realize distinct automorphisms",
             distinct.size() == by_form.size(),
             std::to_string(distinct.size()) + " distinct automorphisms");
  return report;
}

}  // namespace braidsym
