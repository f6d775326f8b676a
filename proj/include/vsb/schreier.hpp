#pragma once

#include <vector>

#include "vsb/morphisms.hpp"
#include "vsb/words.hpp"

namespace vsb {

class NotPureError : public WordError {
 public:
  using WordError::WordError;
};

/// Index (j_2, ..., j_n) of an element of the Schreier system Lambda_n,
/// with 1 <= j_k <= k.
class SchreierIndex {
 public:
  explicit SchreierIndex(std::vector<int> j);

  static SchreierIndex identity(int strands);

  // Number of strands n; the index holds n - 1 entries.
  int strands() const noexcept { return static_cast<int>(j_.size()) + 1; }
  // j_k for 2 <= k <= n.
  int at(int k) const { return j_.at(static_cast<std::size_t>(k - 2)); }
  std::vector<int> const& values() const noexcept { return j_; }

  friend bool operator==(SchreierIndex const&, SchreierIndex const&) = default;
  friend auto operator<=>(SchreierIndex const&, SchreierIndex const&) = default;

 private:
  std::vector<int> j_;
};

/// m_{kl} = v_{k-1} v_{k-2} ... v_l for l < k, and 1 otherwise.
Word m_word(int k, int l, int strands);

/// m_{2,j_2} m_{3,j_3} ... m_{n,j_n}.
Word lambda_word(SchreierIndex const& idx);

/// All n! indices in lexicographic order.
std::vector<SchreierIndex> schreier_system(int strands);

/// The index whose lambda word has permutation p. Peels j_n, j_{n-1}, ...
/// off p in O(n^2).
SchreierIndex schreier_index_of(Permutation const& p);

/// The representative in Lambda_n of the coset of w, as a v-only word.
Word representative_of(Word const& w);

/// Conjugation action alpha x alpha^-1 on a generalized letter: the indices
/// (k, l) become (alpha(k), alpha(l)).
Generator act(Permutation const& alpha, Generator const& g);

/// s_{lambda,a} = lambda a (bar(lambda a))^-1 for a standard letter a, as a
/// word of length <= 1 over the generalized alphabet.
Word schreier_generator(SchreierIndex const& lambda, Generator const& a);

/// Rewrites a pure word over the standard alphabet into generalized fusing
/// strings. Throws NotPureError unless pi(w) is the identity.
Word rewrite_pure(Word const& w);

struct Decomposition {
  Word pure;            // generalized alphabet, pi = id
  Word representative;  // v-only word in Lambda_n
};

/// w = pure * representative. Non-standard letters are normalized first.
Decomposition decompose(Word const& w);

}  // namespace vsb
