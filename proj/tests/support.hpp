#pragma once

// Random generators and naive oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "braidsym/action.hpp"
#include "braidsym/braid.hpp"
#include "braidsym/endo.hpp"
#include "braidsym/freegroup.hpp"
#include "braidsym/matrix.hpp"

namespace testsupport {

using braidsym::Automorphism;
using braidsym::BraidWord;
using braidsym::Endomorphism;
using braidsym::FreeWord;
using braidsym::IntMatrix;
using braidsym::Letter;

inline std::vector<int> random_signed(std::mt19937_64& rng, int max_index, int length) {
  std::uniform_int_distribution<int> idx(1, max_index);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> out(static_cast<std::size_t>(length));
  for (int& v : out) {
    v = neg(rng) ? -idx(rng) : idx(rng);
  }
  return out;
}

inline int random_length(std::mt19937_64& rng, int max_length) {
  return std::uniform_int_distribution<int>(0, max_length)(rng);
}

inline std::vector<Letter> to_letters(const std::vector<int>& raw) {
  std::vector<Letter> out;
  for (int v : raw) out.push_back(Letter::from_signed(v));
  return out;
}

inline FreeWord random_word(std::mt19937_64& rng, int rank, int max_length) {
  return FreeWord::reduce(to_letters(random_signed(rng, rank, random_length(rng, max_length))),
                          rank);
}

inline BraidWord random_braid(std::mt19937_64& rng, int strands, int max_length) {
  return BraidWord(strands, random_signed(rng, strands - 1, random_length(rng, max_length)));
}

// Free reduction by deleting cancelling neighbours in a random order until
// none remain; independent of the stack reduction used by the library.
inline std::vector<int> reduce_randomly(std::vector<int> w, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] == -w[k + 1]) spots.push_back(k);
    }
    if (spots.empty()) return w;
    const std::size_t k =
        spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k + 2));
  }
}

inline std::vector<int> raw(const FreeWord& w) {
  std::vector<int> out;
  for (Letter l : w.letters()) out.push_back(l.value());
  return out;
}

// Substitution without any cleverness: expand every letter, then reduce.
inline std::vector<int> substitute(const Endomorphism& e, const FreeWord& w,
                                   std::mt19937_64& rng) {
  std::vector<int> out;
  for (Letter l : w.letters()) {
    std::vector<int> img = raw(e.image(l.generator()));
    if (l.sign() < 0) {
      std::reverse(img.begin(), img.end());
      for (int& v : img) v = -v;
    }
    out.insert(out.end(), img.begin(), img.end());
  }
  return reduce_randomly(out, rng);
}

// Random product of the generator automorphisms u_i^{+-1}.
inline Automorphism random_automorphism(std::mt19937_64& rng, const braidsym::GenusContext& ctx,
                                        int max_length) {
  return braidsym::braid_action(random_braid(rng, ctx.strands(), max_length), ctx);
}

// Column k is the signed letter count of the k-th image.
inline IntMatrix count_matrix(const Endomorphism& e) {
  const auto n = static_cast<std::size_t>(e.rank());
  IntMatrix m(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (Letter l : e.image(static_cast<int>(col + 1)).letters()) {
      m(static_cast<std::size_t>(l.generator() - 1), col) += l.sign();
    }
  }
  return m;
}

}  // namespace testsupport
