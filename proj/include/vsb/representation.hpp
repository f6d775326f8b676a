#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vsb/cyclotomic.hpp"
#include "vsb/presentations.hpp"
#include "vsb/words.hpp"

namespace vsb {

/// Basis vector b_{k_1} (x) ... (x) b_{k_n} of V^{(x)n}, dim V = p.
struct BasisState {
  int p;
  std::vector<int> k;  // entries in [0, p)

  BasisState(int p, std::vector<int> k);

  std::string to_string() const;  // "(1,0,1)"
  friend bool operator==(BasisState const&, BasisState const&) = default;
};

/// Image of a basis vector under a word: a scalar times one basis vector.
struct MonomialImage {
  CycInt scalar;
  BasisState state;

  friend bool operator==(MonomialImage const&, MonomialImage const&) = default;
};

/// All p^n basis states, lexicographic with k_1 most significant.
std::vector<BasisState> basis_states(int strands, int p);

/// Evaluates the word on b with the operators
///   v -> T(b_k (x) b_l) = b_l (x) b_k
///   mu -> R(b_k (x) b_l) = xi^{kl} b_k (x) b_l   (mu^-1 uses xi^{-kl})
///   gamma -> S(b_k (x) b_l) = (xi^{kl} + xi^{-kl}) b_k (x) b_l
/// Standard and generalized letters are translated to the fusing alphabet
/// first. The last letter acts first.
MonomialImage apply_word(Word const& w, BasisState const& b);

/// The image of every basis state, in basis_states order.
std::vector<MonomialImage> fingerprint(Word const& w, int p);

struct Witness {
  BasisState state;
  MonomialImage lhs;
  MonomialImage rhs;
};

/// First basis state (in basis_states order) where the two words act
/// differently, if any.
std::optional<Witness> first_difference(Word const& w1, Word const& w2, int p);

/// Exact fingerprint equality over all p^n basis states.
bool rep_equal(Word const& w1, Word const& w2, int p);

struct RelationFailure {
  Relation relation;
  Witness witness;
};

struct FamilyReport {
  std::string family;
  bool derived = false;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::optional<RelationFailure> first_failure;

  bool ok() const noexcept { return passed == instances; }
};

struct VerificationReport {
  std::string catalog;
  int strands = 0;
  int p = 0;
  std::vector<FamilyReport> families;

  bool ok() const noexcept;
  std::size_t instances() const noexcept;
};

VerificationReport verify_relations(Catalog catalog, int strands, int p, unsigned threads = 1);

/// Checks an explicit relation list; families are reported in first-seen order.
VerificationReport verify_relation_list(std::string name, std::vector<Relation> const& relations,
                                        int p, unsigned threads = 1);

struct ConditionReport {
  int number = 0;  // 1..7
  std::string statement;
  std::size_t states_checked = 0;
  bool passed = false;
  // Conditions 5 and 7 are also compared with their closed forms.
  bool closed_form_checked = false;
  bool closed_form_passed = false;
  std::optional<std::string> failure;
};

struct OperatorReport {
  int p = 0;
  std::vector<ConditionReport> conditions;

  bool ok() const noexcept;
};

/// The seven operator conditions for T, R, S on two or three tensor factors.
OperatorReport verify_operator_conditions(int p);

}  // namespace vsb
