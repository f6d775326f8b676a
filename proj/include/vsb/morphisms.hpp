#pragma once

#include <span>
#include <string>
#include <vector>

#include "vsb/words.hpp"

namespace vsb {

// Composition convention, used everywhere in the library: a word
// a_1 a_2 ... a_t denotes the map a_1 o a_2 o ... o a_t, so the last letter
// acts first. pi(concat(w1, w2)) = pi(w1) o pi(w2), and the representation
// evaluates letters from the end of the word towards the front.

/// A bijection of {1..n}.
class Permutation {
 public:
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int degree, int i);  // (i, i+1)

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_.at(static_cast<std::size_t>(point - 1)); }
  std::span<int const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  // In-place right multiplication by (i, i+1): *this becomes *this o v_i.
  void compose_transposition(int i);

  std::vector<std::vector<int>> cycles() const;  // non-trivial cycles only
  std::string cycle_notation() const;            // "()" for the identity

  friend bool operator==(Permutation const&, Permutation const&) = default;

 private:
  std::vector<int> images_;
};

/// (a o b)(x) = a(b(x)).
Permutation compose(Permutation const& a, Permutation const& b);

class AlphabetError : public WordError {
 public:
  using WordError::WordError;
};

Permutation permutation_of(Word const& w);

/// F: sigma_i -> mu_i v_i, sigma_i^-1 -> v_i mu_i^-1, tau_i -> gamma_i v_i.
Word to_fusing(Word const& w);

/// G: mu_i -> sigma_i v_i, mu_i^-1 -> v_i sigma_i^-1, gamma_i -> tau_i v_i.
Word to_standard(Word const& w);

/// Rewrites every letter with index >= 2 by the detour word around its
/// subscript-1 counterpart. Generalized letters are expanded first.
Word reduce_to_subscript_one(Word const& w);

/// Replaces mu_kl, mu_kl^-1 and gamma_kl by their defining words.
Word expand_generalized(Word const& w);

enum class Alphabet { Standard, Fusing, SubscriptOne, Expanded };

Alphabet alphabet_from_name(std::string const& name);
std::string alphabet_name(Alphabet a);

/// Chains expand_generalized, F, G and the detour reduction as needed. Unlike
/// to_fusing / to_standard, letters already in the target alphabet pass.
Word normalize_to(Word const& w, Alphabet target);

/// Detour word (v_{m-1}..v_1)(v_m..v_2) x_1 (v_2..v_m)(v_1..v_{m-1}) for a
/// single-index letter x_{m+1}.
Word detour_word(Generator g, int strands);

/// Defining word of a generalized letter in the fusing alphabet.
Word generalized_word(Generator g, int strands);

}  // namespace vsb
