#include "vsb/schreier.hpp"

#include <optional>

namespace vsb {

SchreierIndex::SchreierIndex(std::vector<int> j) : j_(std::move(j)) {
  if (j_.empty()) throw std::invalid_argument("Schreier index needs at least two strands");
  for (std::size_t pos = 0; pos < j_.size(); ++pos) {
    int const k = static_cast<int>(pos) + 2;
    if (j_[pos] < 1 || j_[pos] > k) {
      throw std::out_of_range("Schreier index entry j_" + std::to_string(k) + " = " +
                              std::to_string(j_[pos]) + " outside [1, " + std::to_string(k) +
                              "]");
    }
  }
}

SchreierIndex SchreierIndex::identity(int strands) {
  std::vector<int> j;
  for (int k = 2; k <= strands; ++k) j.push_back(k);
  return SchreierIndex(std::move(j));
}

Word m_word(int k, int l, int strands) {
  std::vector<Generator> out;
  for (int i = k - 1; i >= l; --i) out.push_back(Generator::v(i));
  return Word(strands, std::move(out));
}

Word lambda_word(SchreierIndex const& idx) {
  int const n = idx.strands();
  std::vector<Generator> out;
  for (int k = 2; k <= n; ++k) {
    for (auto const& g : m_word(k, idx.at(k), n)) out.push_back(g);
  }
  return Word(n, std::move(out));
}

std::vector<SchreierIndex> schreier_system(int strands) {
  if (strands < 2) throw WordError("strand count must be at least 2");
  std::vector<SchreierIndex> out;
  std::vector<int> j(static_cast<std::size_t>(strands - 1), 1);
  while (true) {
    out.emplace_back(j);
    // Odometer over j_k in [1, k], last entry fastest.
    int pos = strands - 2;
    while (pos >= 0 && j[static_cast<std::size_t>(pos)] == pos + 2) {
      j[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++j[static_cast<std::size_t>(pos)];
  }
  return out;
}

SchreierIndex schreier_index_of(Permutation const& p) {
  // pi(lambda) = m_2 o m_3 o ... o m_n. Only m_n moves the point n, and it
  // sends j_n to n, so j_n = p^-1(n). Strip m_n and recurse on n - 1.
  int const n = p.degree();
  std::vector<int> j(static_cast<std::size_t>(n - 1));
  Permutation rest = p;
  for (int k = n; k >= 2; --k) {
    int jk = 1;
    while (rest(jk) != k) ++jk;
    j[static_cast<std::size_t>(k - 2)] = jk;
    // rest o m_{k,jk}^-1 with m_{k,jk}^-1 = v_{jk} o ... o v_{k-1}.
    for (int i = jk; i <= k - 1; ++i) rest.compose_transposition(i);
  }
  return SchreierIndex(std::move(j));
}

Word representative_of(Word const& w) {
  return lambda_word(schreier_index_of(permutation_of(w)));
}

Generator act(Permutation const& alpha, Generator const& g) {
  if (!g.generalized()) throw AlphabetError("index action applies to generalized letters");
  return Generator::pair(g.kind(), alpha(g.first()), alpha(g.second()));
}

namespace {

// s_{lambda,a} for the coset whose representative has permutation alpha.
// For a = sigma_i^-1 this is the factor s_{lambda',sigma_i}^-1 with
// lambda' = bar(lambda sigma_i^-1), whose permutation is alpha o v_i.
std::optional<Generator> schreier_letter(Permutation const& alpha, Generator const& a) {
  int const i = a.index();
  switch (a.kind()) {
    case Kind::V: return std::nullopt;
    case Kind::Sigma: return Generator::gmu(alpha(i), alpha(i + 1));
    case Kind::Tau: return Generator::ggamma(alpha(i), alpha(i + 1));
    case Kind::SigmaInv: return Generator::gmu_inv(alpha(i + 1), alpha(i));
    default: throw AlphabetError("Schreier generators need a standard letter, got " + a.token());
  }
}

}  // namespace

Word schreier_generator(SchreierIndex const& lambda, Generator const& a) {
  int const n = lambda.strands();
  if (!a.fits(n)) throw IndexRangeError("letter " + a.token() + " out of range");
  auto letter = schreier_letter(permutation_of(lambda_word(lambda)), a);
  if (!letter) return Word(n);
  return Word(n, {*letter});
}

Word rewrite_pure(Word const& w) {
  for (auto const& g : w) {
    if (!is_standard(g.kind())) {
      throw AlphabetError("rewrite_pure needs a standard-alphabet word, got " + g.token());
    }
  }
  Permutation prefix(w.strands());
  std::vector<Generator> out;
  for (auto const& g : w) {
    if (auto s = schreier_letter(prefix, g)) out.push_back(*s);
    prefix.compose_transposition(g.index());
  }
  if (!prefix.is_identity()) {
    throw NotPureError("word is not pure: permutation " + prefix.cycle_notation());
  }
  return Word(w.strands(), std::move(out));
}

Decomposition decompose(Word const& w) {
  Word standard = normalize_to(w, Alphabet::Standard);
  Word rep = representative_of(standard);
  Word pure = rewrite_pure(concat(standard, reversed(rep)));
  return {std::move(pure), std::move(rep)};
}

}  // namespace vsb
