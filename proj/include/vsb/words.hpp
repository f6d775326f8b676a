#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vsb {

// Letter kinds. Single-index kinds carry i with 1 <= i <= n-1; the
// generalized kinds (GMu, GMuInv, GGamma) carry an ordered pair (k, l),
// 1 <= k != l <= n.
enum class Kind : std::uint8_t {
  Sigma,
  SigmaInv,
  V,
  Tau,
  Mu,
  MuInv,
  Gamma,
  GMu,
  GMuInv,
  GGamma,
};

class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public WordError {
 public:
  ParseError(std::string const& message, std::size_t token_index, std::string token);

  std::size_t token_index() const noexcept { return token_index_; }
  std::string const& token() const noexcept { return token_; }

 private:
  std::size_t token_index_;
  std::string token_;
};

class IndexRangeError : public WordError {
 public:
  using WordError::WordError;
};

class StrandMismatchError : public WordError {
 public:
  using WordError::WordError;
};

// Raised when an inverse is requested for tau / gamma letters.
class NotInvertibleError : public WordError {
 public:
  using WordError::WordError;
};

/// One letter of a braid word.
class Generator {
 public:
  constexpr Generator() = default;

  static Generator sigma(int i) { return single(Kind::Sigma, i); }
  static Generator sigma_inv(int i) { return single(Kind::SigmaInv, i); }
  static Generator v(int i) { return single(Kind::V, i); }
  static Generator tau(int i) { return single(Kind::Tau, i); }
  static Generator mu(int i) { return single(Kind::Mu, i); }
  static Generator mu_inv(int i) { return single(Kind::MuInv, i); }
  static Generator gamma(int i) { return single(Kind::Gamma, i); }
  static Generator gmu(int k, int l) { return pair(Kind::GMu, k, l); }
  static Generator gmu_inv(int k, int l) { return pair(Kind::GMuInv, k, l); }
  static Generator ggamma(int k, int l) { return pair(Kind::GGamma, k, l); }

  static Generator single(Kind kind, int i);
  static Generator pair(Kind kind, int k, int l);

  constexpr Kind kind() const noexcept { return kind_; }
  // Single-index kinds.
  constexpr int index() const noexcept { return first_; }
  // Generalized kinds.
  constexpr int first() const noexcept { return first_; }
  constexpr int second() const noexcept { return second_; }

  constexpr bool generalized() const noexcept {
    return kind_ == Kind::GMu || kind_ == Kind::GMuInv || kind_ == Kind::GGamma;
  }
  constexpr bool invertible() const noexcept {
    return kind_ != Kind::Tau && kind_ != Kind::Gamma && kind_ != Kind::GGamma;
  }

  // Throws NotInvertibleError for tau, gamma and generalized gamma.
  Generator inverse() const;

  // True iff the letter's indices are legal for strand count n.
  bool fits(int n) const noexcept;

  std::string token() const;

  friend constexpr bool operator==(Generator const&, Generator const&) = default;
  friend constexpr std::strong_ordering operator<=>(Generator const&,
                                                    Generator const&) = default;

 private:
  constexpr Generator(Kind kind, int first, int second)
      : kind_(kind), first_(first), second_(second) {}

  Kind kind_ = Kind::V;
  int first_ = 1;
  int second_ = 0;
};

bool is_standard(Kind kind) noexcept;
bool is_fusing(Kind kind) noexcept;

/// A strand count together with a finite letter sequence. The empty word is
/// the identity 1_n. The first letter is the top of the braid.
class Word {
 public:
  explicit Word(int strands);
  Word(int strands, std::vector<Generator> letters);
  Word(int strands, std::initializer_list<Generator> letters);

  static Word identity(int strands) { return Word(strands); }

  int strands() const noexcept { return strands_; }
  std::span<Generator const> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Generator const& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(Word const&, Word const&) = default;

  // Shortlex order: strand count, then length, then letters.
  friend std::strong_ordering operator<=>(Word const& a, Word const& b);

 private:
  int strands_;
  std::vector<Generator> letters_;
};

Word parse_word(std::string_view text, int strands);
std::string format_word(Word const& w);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(Word const& w);

/// Like free_reduce, but also reports the offset of every cancelled pair at
/// the moment it was removed, in removal order.
Word free_reduce_traced(Word const& w, std::vector<std::size_t>& cancelled_at);

bool cancels(Generator const& a, Generator const& b) noexcept;

Word concat(Word const& top, Word const& bottom);
Word embed(Word const& w, int strands);
Word reversed(Word const& w);
Word inverse(Word const& w);

std::string kind_name(Kind kind);

}  // namespace vsb

template <>
struct std::hash<vsb::Generator> {
  std::size_t operator()(vsb::Generator const& g) const noexcept {
    auto h = static_cast<std::size_t>(g.kind());
    h = h * 131 + static_cast<std::size_t>(g.first());
    h = h * 131 + static_cast<std::size_t>(g.second());
    return h;
  }
};

template <>
struct std::hash<vsb::Word> {
  std::size_t operator()(vsb::Word const& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.strands());
    for (auto const& g : w) {
      h ^= std::hash<vsb::Generator>{}(g) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
