#include "vsb/words.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace vsb {

ParseError::ParseError(std::string const& message, std::size_t token_index, std::string token)
    : WordError(message), token_index_(token_index), token_(std::move(token)) {}

Generator Generator::single(Kind kind, int i) {
  Generator g(kind, i, 0);
  if (g.generalized()) {
    throw WordError("generalized letter needs an index pair");
  }
  if (i < 1) {
    throw IndexRangeError("letter index must be positive: " + g.token());
  }
  return g;
}

Generator Generator::pair(Kind kind, int k, int l) {
  Generator g(kind, k, l);
  if (!g.generalized()) {
    throw WordError("single-index letter cannot carry a pair");
  }
  if (k < 1 || l < 1 || k == l) {
    throw IndexRangeError("generalized letter needs distinct positive indices: " + g.token());
  }
  return g;
}

Generator Generator::inverse() const {
  switch (kind_) {
    case Kind::Sigma: return {Kind::SigmaInv, first_, second_};
    case Kind::SigmaInv: return {Kind::Sigma, first_, second_};
    case Kind::V: return *this;
    case Kind::Mu: return {Kind::MuInv, first_, second_};
    case Kind::MuInv: return {Kind::Mu, first_, second_};
    case Kind::GMu: return {Kind::GMuInv, first_, second_};
    case Kind::GMuInv: return {Kind::GMu, first_, second_};
    case Kind::Tau:
    case Kind::Gamma:
    case Kind::GGamma: break;
  }
  throw NotInvertibleError("letter has no inverse: " + token());
}

bool Generator::fits(int n) const noexcept {
  if (generalized()) {
    return first_ >= 1 && first_ <= n && second_ >= 1 && second_ <= n && first_ != second_;
  }
  return first_ >= 1 && first_ <= n - 1;
}

std::string Generator::token() const {
  auto const single_token = [this](char c) { return c + std::to_string(first_); };
  auto const pair_token = [this](char c) {
    return std::string(1, c) + "[" + std::to_string(first_) + "," + std::to_string(second_) + "]";
  };
  switch (kind_) {
    case Kind::Sigma: return single_token('s');
    case Kind::SigmaInv: return single_token('S');
    case Kind::V: return single_token('v');
    case Kind::Tau: return single_token('t');
    case Kind::Mu: return single_token('u');
    case Kind::MuInv: return single_token('U');
    case Kind::Gamma: return single_token('g');
    case Kind::GMu: return pair_token('u');
    case Kind::GMuInv: return pair_token('U');
    case Kind::GGamma: return pair_token('g');
  }
  return "?";
}

bool is_standard(Kind kind) noexcept {
  return kind == Kind::Sigma || kind == Kind::SigmaInv || kind == Kind::V || kind == Kind::Tau;
}

bool is_fusing(Kind kind) noexcept {
  return kind == Kind::Mu || kind == Kind::MuInv || kind == Kind::Gamma || kind == Kind::V;
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::Sigma: return "sigma";
    case Kind::SigmaInv: return "sigma^-1";
    case Kind::V: return "v";
    case Kind::Tau: return "tau";
    case Kind::Mu: return "mu";
    case Kind::MuInv: return "mu^-1";
    case Kind::Gamma: return "gamma";
    case Kind::GMu: return "mu_kl";
    case Kind::GMuInv: return "mu_kl^-1";
    case Kind::GGamma: return "gamma_kl";
  }
  return "?";
}

namespace {

void check_strands(int strands) {
  if (strands < 2) {
    throw WordError("strand count must be at least 2, got " + std::to_string(strands));
  }
}

void check_letters(int strands, std::span<Generator const> letters) {
  for (auto const& g : letters) {
    if (!g.fits(strands)) {
      throw IndexRangeError("letter " + g.token() + " out of range for n = " +
                            std::to_string(strands));
    }
  }
}

// Decimal without leading zeros. Returns nullopt on malformed input.
std::optional<int> parse_index(std::string_view digits) {
  if (digits.empty() || digits.size() > 9) return std::nullopt;
  if (digits.size() > 1 && digits.front() == '0') return std::nullopt;
  int value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

std::optional<Kind> single_kind(char c) {
  switch (c) {
    case 's': return Kind::Sigma;
    case 'S': return Kind::SigmaInv;
    case 'v': return Kind::V;
    case 't': return Kind::Tau;
    case 'u': return Kind::Mu;
    case 'U': return Kind::MuInv;
    case 'g': return Kind::Gamma;
    default: return std::nullopt;
  }
}

std::optional<Kind> pair_kind(char c) {
  switch (c) {
    case 'u': return Kind::GMu;
    case 'U': return Kind::GMuInv;
    case 'g': return Kind::GGamma;
    default: return std::nullopt;
  }
}

Generator parse_token(std::string const& token, std::size_t position, int strands) {
  auto fail = [&](std::string const& why) -> ParseError {
    return {"token " + std::to_string(position) + " '" + token + "': " + why, position, token};
  };
  if (token.size() < 2) throw fail("too short");
  std::string_view rest(token);
  rest.remove_prefix(1);

  Generator g;
  if (rest.front() == '[') {
    auto kind = pair_kind(token.front());
    if (!kind) throw fail("unknown generalized letter");
    if (rest.back() != ']') throw fail("missing ']'");
    auto body = rest.substr(1, rest.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) throw fail("missing ','");
    auto k = parse_index(body.substr(0, comma));
    auto l = parse_index(body.substr(comma + 1));
    if (!k || !l) throw fail("malformed index");
    if (*k == *l || *k < 1 || *l < 1 || *k > strands || *l > strands) {
      throw IndexRangeError("token " + std::to_string(position) + " '" + token +
                            "': index pair out of range for n = " + std::to_string(strands));
    }
    g = Generator::pair(*kind, *k, *l);
  } else {
    auto kind = single_kind(token.front());
    if (!kind) throw fail("unknown letter");
    auto i = parse_index(rest);
    if (!i) throw fail("malformed index");
    if (*i < 1 || *i > strands - 1) {
      throw IndexRangeError("token " + std::to_string(position) + " '" + token +
                            "': index out of range for n = " + std::to_string(strands));
    }
    g = Generator::single(*kind, *i);
  }
  return g;
}

}  // namespace

Word::Word(int strands) : strands_(strands) { check_strands(strands); }

Word::Word(int strands, std::vector<Generator> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  check_letters(strands, letters_);
}

Word::Word(int strands, std::initializer_list<Generator> letters)
    : Word(strands, std::vector<Generator>(letters)) {}

std::strong_ordering operator<=>(Word const& a, Word const& b) {
  if (auto c = a.strands_ <=> b.strands_; c != 0) return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word parse_word(std::string_view text, int strands) {
  check_strands(strands);
  std::istringstream in{std::string(text)};
  std::vector<Generator> letters;
  std::string token;
  while (in >> token) {
    letters.push_back(parse_token(token, letters.size(), strands));
  }
  return Word(strands, std::move(letters));
}

std::string format_word(Word const& w) {
  std::string out;
  for (auto const& g : w) {
    if (!out.empty()) out += ' ';
    out += g.token();
  }
  return out;
}

bool cancels(Generator const& a, Generator const& b) noexcept {
  if (!a.invertible() || !b.invertible()) return false;
  switch (a.kind()) {
    case Kind::V: return b == a;
    case Kind::Sigma:
    case Kind::SigmaInv:
    case Kind::Mu:
    case Kind::MuInv:
    case Kind::GMu:
    case Kind::GMuInv: return b == a.inverse();
    default: return false;
  }
}

Word free_reduce(Word const& w) {
  std::vector<Generator> stack;
  stack.reserve(w.size());
  for (auto const& g : w) {
    if (!stack.empty() && cancels(stack.back(), g)) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return Word(w.strands(), std::move(stack));
}

Word free_reduce_traced(Word const& w, std::vector<std::size_t>& cancelled_at) {
  // The stack holds the already-reduced prefix; a pair cancelled at the top
  // sits at offset stack.size() - 1 in the current word.
  std::vector<Generator> stack;
  stack.reserve(w.size());
  for (auto const& g : w) {
    if (!stack.empty() && cancels(stack.back(), g)) {
      cancelled_at.push_back(stack.size() - 1);
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return Word(w.strands(), std::move(stack));
}

Word concat(Word const& top, Word const& bottom) {
  if (top.strands() != bottom.strands()) {
    throw StrandMismatchError("cannot concatenate words on " + std::to_string(top.strands()) +
                              " and " + std::to_string(bottom.strands()) + " strands");
  }
  std::vector<Generator> letters(top.begin(), top.end());
  letters.insert(letters.end(), bottom.begin(), bottom.end());
  return Word(top.strands(), std::move(letters));
}

Word embed(Word const& w, int strands) {
  if (strands < w.strands()) {
    throw StrandMismatchError("cannot embed a word on " + std::to_string(w.strands()) +
                              " strands into " + std::to_string(strands));
  }
  return Word(strands, std::vector<Generator>(w.begin(), w.end()));
}

Word reversed(Word const& w) {
  return Word(w.strands(), std::vector<Generator>(w.letters().rbegin(), w.letters().rend()));
}

Word inverse(Word const& w) {
  std::vector<Generator> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return Word(w.strands(), std::move(letters));
}

}  // namespace vsb
