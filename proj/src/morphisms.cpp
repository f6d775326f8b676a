#include "vsb/morphisms.hpp"

#include <algorithm>
#include <numeric>

namespace vsb {

Permutation::Permutation(int degree) : images_(static_cast<std::size_t>(std::max(degree, 0))) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > degree() || seen[static_cast<std::size_t>(x - 1)]) {
      throw std::invalid_argument("images do not form a permutation");
    }
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

Permutation Permutation::transposition(int degree, int i) {
  Permutation p(degree);
  p.compose_transposition(i);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    inv[static_cast<std::size_t>(images_[x] - 1)] = static_cast<int>(x) + 1;
  }
  return Permutation(std::move(inv));
}

void Permutation::compose_transposition(int i) {
  if (i < 1 || i >= degree()) {
    throw std::out_of_range("transposition index out of range");
  }
  std::swap(images_[static_cast<std::size_t>(i - 1)], images_[static_cast<std::size_t>(i)]);
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycle_notation() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (auto const& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

Permutation compose(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x) {
    images[static_cast<std::size_t>(x - 1)] = a(b(x));
  }
  return Permutation(std::move(images));
}

Permutation permutation_of(Word const& w) {
  Permutation p(w.strands());
  for (auto const& g : w) {
    switch (g.kind()) {
      case Kind::Sigma:
      case Kind::SigmaInv:
      case Kind::Tau:
      case Kind::V: p.compose_transposition(g.index()); break;
      default: break;  // fusing strings are pure
    }
  }
  return p;
}

namespace {

void append(std::vector<Generator>& out, Word const& w) {
  out.insert(out.end(), w.begin(), w.end());
}

std::string foreign(Generator const& g, char const* target) {
  return "letter " + g.token() + " is not in the " + target + " alphabet";
}

}  // namespace

Word to_fusing(Word const& w) {
  std::vector<Generator> out;
  out.reserve(2 * w.size());
  for (auto const& g : w) {
    int const i = g.index();
    switch (g.kind()) {
      case Kind::V: out.push_back(g); break;
      case Kind::Sigma: out.insert(out.end(), {Generator::mu(i), Generator::v(i)}); break;
      case Kind::SigmaInv: out.insert(out.end(), {Generator::v(i), Generator::mu_inv(i)}); break;
      case Kind::Tau: out.insert(out.end(), {Generator::gamma(i), Generator::v(i)}); break;
      default: throw AlphabetError(foreign(g, "standard"));
    }
  }
  return Word(w.strands(), std::move(out));
}

Word to_standard(Word const& w) {
  std::vector<Generator> out;
  out.reserve(2 * w.size());
  for (auto const& g : w) {
    int const i = g.index();
    switch (g.kind()) {
      case Kind::V: out.push_back(g); break;
      case Kind::Mu: out.insert(out.end(), {Generator::sigma(i), Generator::v(i)}); break;
      case Kind::MuInv: out.insert(out.end(), {Generator::v(i), Generator::sigma_inv(i)}); break;
      case Kind::Gamma: out.insert(out.end(), {Generator::tau(i), Generator::v(i)}); break;
      default: throw AlphabetError(foreign(g, "fusing"));
    }
  }
  return Word(w.strands(), std::move(out));
}

Word detour_word(Generator g, int strands) {
  if (g.generalized()) throw AlphabetError("detour applies to single-index letters only");
  int const m = g.index() - 1;  // g = x_{m+1}
  std::vector<Generator> out;
  if (m == 0) {
    out.push_back(g);
    return Word(strands, std::move(out));
  }
  for (int k = m; k >= 1; --k) out.push_back(Generator::v(k));
  for (int k = m + 1; k >= 2; --k) out.push_back(Generator::v(k));
  out.push_back(Generator::single(g.kind(), 1));
  for (int k = 2; k <= m + 1; ++k) out.push_back(Generator::v(k));
  for (int k = 1; k <= m; ++k) out.push_back(Generator::v(k));
  return Word(strands, std::move(out));
}

Word generalized_word(Generator g, int strands) {
  if (!g.generalized()) throw AlphabetError("not a generalized letter: " + g.token());
  int const i = std::min(g.first(), g.second());
  int const j = std::max(g.first(), g.second());
  bool const ascending = g.first() < g.second();

  Generator core = g.kind() == Kind::GMu      ? Generator::mu(i)
                   : g.kind() == Kind::GMuInv ? Generator::mu_inv(i)
                                              : Generator::gamma(i);
  std::vector<Generator> out;
  for (int k = j - 1; k >= i + 1; --k) out.push_back(Generator::v(k));
  if (!ascending) out.push_back(Generator::v(i));
  out.push_back(core);
  if (!ascending) out.push_back(Generator::v(i));
  for (int k = i + 1; k <= j - 1; ++k) out.push_back(Generator::v(k));
  return Word(strands, std::move(out));
}

Word expand_generalized(Word const& w) {
  std::vector<Generator> out;
  out.reserve(w.size());
  for (auto const& g : w) {
    if (g.generalized()) {
      append(out, generalized_word(g, w.strands()));
    } else {
      out.push_back(g);
    }
  }
  return Word(w.strands(), std::move(out));
}

Word reduce_to_subscript_one(Word const& w) {
  std::vector<Generator> out;
  out.reserve(w.size());
  for (auto const& g : expand_generalized(w)) {
    if (g.kind() == Kind::V || g.index() == 1) {
      out.push_back(g);
    } else {
      append(out, detour_word(g, w.strands()));
    }
  }
  return Word(w.strands(), std::move(out));
}

Alphabet alphabet_from_name(std::string const& name) {
  if (name == "standard") return Alphabet::Standard;
  if (name == "fusing") return Alphabet::Fusing;
  if (name == "subscript-one") return Alphabet::SubscriptOne;
  if (name == "expanded") return Alphabet::Expanded;
  throw std::invalid_argument("unknown alphabet '" + name + "'");
}

std::string alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::Standard: return "standard";
    case Alphabet::Fusing: return "fusing";
    case Alphabet::SubscriptOne: return "subscript-one";
    case Alphabet::Expanded: return "expanded";
  }
  return "?";
}

Word normalize_to(Word const& w, Alphabet target) {
  switch (target) {
    case Alphabet::Expanded: return expand_generalized(w);
    case Alphabet::SubscriptOne: return reduce_to_subscript_one(w);
    case Alphabet::Fusing:
    case Alphabet::Standard: break;
  }
  bool const to_fusing_side = target == Alphabet::Fusing;
  std::vector<Generator> out;
  for (auto const& g : expand_generalized(w)) {
    Word single(w.strands(), {g});
    if (g.kind() == Kind::V) {
      out.push_back(g);
    } else if (to_fusing_side && is_standard(g.kind())) {
      append(out, to_fusing(single));
    } else if (!to_fusing_side && is_fusing(g.kind())) {
      append(out, to_standard(single));
    } else {
      out.push_back(g);
    }
  }
  return Word(w.strands(), std::move(out));
}

}  // namespace vsb
