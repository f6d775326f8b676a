#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "vsb/words.hpp"

namespace vsb::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024ULL;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<Kind> standard_kinds() {
  return {Kind::Sigma, Kind::SigmaInv, Kind::V, Kind::Tau};
}
inline std::vector<Kind> fusing_kinds() { return {Kind::Mu, Kind::MuInv, Kind::V, Kind::Gamma}; }
inline std::vector<Kind> generalized_kinds() { return {Kind::GMu, Kind::GMuInv, Kind::GGamma}; }
inline std::vector<Kind> all_kinds() {
  return {Kind::Sigma, Kind::SigmaInv, Kind::V,      Kind::Tau,    Kind::Mu,
          Kind::MuInv, Kind::Gamma,    Kind::GMu, Kind::GMuInv, Kind::GGamma};
}

inline bool is_pair_kind(Kind k) {
  return k == Kind::GMu || k == Kind::GMuInv || k == Kind::GGamma;
}

inline Generator random_letter(Rng& rng, int n, std::vector<Kind> const& kinds) {
  Kind const kind = kinds[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(kinds.size()) - 1))];
  if (is_pair_kind(kind)) {
    int const k = uniform(rng, 1, n);
    int l = uniform(rng, 1, n - 1);
    if (l >= k) ++l;
    return Generator::pair(kind, k, l);
  }
  return Generator::single(kind, uniform(rng, 1, n - 1));
}

inline Word random_word(Rng& rng, int n, std::size_t length, std::vector<Kind> const& kinds) {
  std::vector<Generator> letters;
  for (std::size_t i = 0; i < length; ++i) letters.push_back(random_letter(rng, n, kinds));
  return Word(n, std::move(letters));
}

// images[j-1] = pi(j), with the last letter acting first
inline std::vector<int> naive_images(Word const& w) {
  std::vector<int> img(static_cast<std::size_t>(w.strands()));
  for (int j = 1; j <= w.strands(); ++j) {
    int x = j;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      Kind const k = it->kind();
      if (k == Kind::Sigma || k == Kind::SigmaInv || k == Kind::V || k == Kind::Tau) {
        int const i = it->index();
        if (x == i) x = i + 1;
        else if (x == i + 1) x = i;
      }
    }
    img[static_cast<std::size_t>(j - 1)] = x;
  }
  return img;
}

// v-word u with pi(w u) = id, found by bubble sorting the images of pi(w)
inline Word sorting_tail(Word const& w) {
  auto img = naive_images(w);
  std::vector<Generator> tail;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < img.size(); ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        tail.push_back(Generator::v(static_cast<int>(i) + 1));
        changed = true;
      }
    }
  }
  return Word(w.strands(), std::move(tail));
}

// standard-alphabet pure word of total length <= max_length
inline Word random_pure_word(Rng& rng, int n, std::size_t max_length) {
  std::size_t const reserve = static_cast<std::size_t>(n * (n - 1) / 2);
  std::size_t const prefix = max_length > reserve
                                 ? static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_length - reserve)))
                                 : 0;
  Word const w = random_word(rng, n, prefix, standard_kinds());
  return concat(w, sorting_tail(w));
}

}  // namespace vsb::testing
