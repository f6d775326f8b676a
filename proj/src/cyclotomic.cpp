#include "vsb/cyclotomic.hpp"

namespace vsb {

bool is_prime(int p) noexcept {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

int require_prime(int p) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  return p;
}

std::size_t residue(long long e, int p) {
  long long r = e % p;
  if (r < 0) r += p;
  return static_cast<std::size_t>(r);
}

}  // namespace

CycInt::CycInt(int p) : p_(require_prime(p)), c_(static_cast<std::size_t>(p - 1)) {}

CycInt::CycInt(int p, std::vector<Integer> coefficients)
    : p_(require_prime(p)), c_(std::move(coefficients)) {
  if (c_.size() != static_cast<std::size_t>(p - 1)) {
    throw std::invalid_argument("expected " + std::to_string(p - 1) + " coefficients");
  }
}

CycInt CycInt::from_integer(int p, Integer value) {
  CycInt out(p);
  out.c_[0] = std::move(value);
  return out;
}

CycInt CycInt::from_power(int p, long long exponent) {
  std::vector<Integer> full(static_cast<std::size_t>(require_prime(p)));
  full[residue(exponent, p)] = 1;
  return CycInt(p, reduce(std::move(full)));
}

std::vector<Integer> CycInt::reduce(std::vector<Integer> full) {
  Integer const top = full.back();
  full.pop_back();
  if (top != 0) {
    for (auto& c : full) c -= top;
  }
  return full;
}

bool CycInt::is_zero() const noexcept {
  for (auto const& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

CycInt CycInt::times_xi_power(long long exponent) const {
  std::size_t const shift = residue(exponent, p_);
  if (shift == 0) return *this;
  auto const p = static_cast<std::size_t>(p_);
  std::vector<Integer> full(p);
  for (std::size_t e = 0; e + 1 < p; ++e) full[(e + shift) % p] = c_[e];
  return CycInt(p_, reduce(std::move(full)));
}

void CycInt::check_same_ring(CycInt const& o) const {
  if (p_ != o.p_) {
    throw std::invalid_argument("cyclotomic rings differ: p = " + std::to_string(p_) + " vs " +
                                std::to_string(o.p_));
  }
}

CycInt& CycInt::operator+=(CycInt const& o) {
  check_same_ring(o);
  for (std::size_t e = 0; e < c_.size(); ++e) c_[e] += o.c_[e];
  return *this;
}

CycInt& CycInt::operator-=(CycInt const& o) {
  check_same_ring(o);
  for (std::size_t e = 0; e < c_.size(); ++e) c_[e] -= o.c_[e];
  return *this;
}

CycInt& CycInt::operator*=(CycInt const& o) {
  check_same_ring(o);
  auto const p = static_cast<std::size_t>(p_);
  // Multiply modulo x^p - 1, then fold x^(p-1).
  std::vector<Integer> full(p);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) {
      if (o.c_[b] == 0) continue;
      full[(a + b) % p] += c_[a] * o.c_[b];
    }
  }
  c_ = reduce(std::move(full));
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

std::string CycInt::to_string() const {
  std::string out;
  for (std::size_t e = c_.size(); e-- > 0;) {
    Integer const& c = c_[e];
    if (c == 0) continue;
    Integer const mag = c < 0 ? Integer(-c) : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0 || mag != 1) out += mag.str();
    if (e >= 1) out += 'x';
    if (e >= 2) out += '^' + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

CyclotomicRing::CyclotomicRing(int p) : p_(require_prime(p)) {}

}  // namespace vsb
