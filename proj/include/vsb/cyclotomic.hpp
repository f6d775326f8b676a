#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsb {

using Integer = boost::multiprecision::cpp_int;

class NotPrimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(int p) noexcept;

/// An element of Z[xi] / Phi_p(xi), xi a primitive p-th root of unity, in the
/// basis 1, xi, ..., xi^(p-2). xi^(p-1) is always eliminated via
/// xi^(p-1) = -(1 + xi + ... + xi^(p-2)), so equality is coefficient-wise.
class CycInt {
 public:
  explicit CycInt(int p);  // zero
  CycInt(int p, std::vector<Integer> coefficients);

  static CycInt from_integer(int p, Integer value);
  static CycInt from_power(int p, long long exponent);  // xi^(e mod p)

  int prime() const noexcept { return p_; }
  std::vector<Integer> const& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept;

  CycInt times_xi_power(long long exponent) const;

  CycInt& operator+=(CycInt const& o);
  CycInt& operator-=(CycInt const& o);
  CycInt& operator*=(CycInt const& o);

  friend CycInt operator+(CycInt a, CycInt const& b) { return a += b; }
  friend CycInt operator-(CycInt a, CycInt const& b) { return a -= b; }
  friend CycInt operator*(CycInt a, CycInt const& b) { return a *= b; }
  CycInt operator-() const;

  friend bool operator==(CycInt const&, CycInt const&) = default;

  // Polynomial in x = xi, highest power first, e.g. "-x - 1" or "x^2 + 3".
  std::string to_string() const;

 private:
  void check_same_ring(CycInt const& o) const;
  // Folds a length-p vector (exponents 0..p-1) into canonical form.
  static std::vector<Integer> reduce(std::vector<Integer> full);

  int p_;
  std::vector<Integer> c_;
};

/// Arithmetic in Z[xi]/Phi_p for one fixed prime.
class CyclotomicRing {
 public:
  explicit CyclotomicRing(int p);

  int prime() const noexcept { return p_; }
  CycInt zero() const { return CycInt(p_); }
  CycInt one() const { return CycInt::from_integer(p_, 1); }
  CycInt from_power(long long e) const { return CycInt::from_power(p_, e); }
  CycInt add(CycInt const& a, CycInt const& b) const { return a + b; }
  CycInt mul(CycInt const& a, CycInt const& b) const { return a * b; }
  CycInt negate(CycInt const& a) const { return -a; }
  bool equal(CycInt const& a, CycInt const& b) const { return a == b; }

 private:
  int p_;
};

}  // namespace vsb
