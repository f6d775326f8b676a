#pragma once

// Dense matrices over Z[x]/(x^p - 1). Two entries name the same cyclotomic
// integer iff their difference is a multiple of 1 + x + ... + x^{p-1}.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "vsb/morphisms.hpp"
#include "vsb/words.hpp"

namespace vsb::oracle {

using Elem = std::vector<std::int64_t>;  // length p

class Dense {
 public:
  Dense(int n, int p) : n_(n), p_(p), dim_(1) {
    for (int i = 0; i < n; ++i) dim_ *= p;
    a_.assign(dim_ * dim_, Elem(static_cast<std::size_t>(p), 0));
  }

  static Dense identity(int n, int p) {
    Dense d(n, p);
    for (std::size_t i = 0; i < d.dim_; ++i) d.at(i, i)[0] = 1;
    return d;
  }

  std::size_t dim() const { return dim_; }
  Elem& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  Elem const& at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  Dense operator*(Dense const& o) const {
    Dense out(n_, p_);
    auto const p = static_cast<std::size_t>(p_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t m = 0; m < dim_; ++m) {
        Elem const& x = at(r, m);
        bool nz = false;
        for (auto c : x) nz = nz || c != 0;
        if (!nz) continue;
        for (std::size_t c = 0; c < dim_; ++c) {
          Elem const& y = o.at(m, c);
          Elem& z = out.at(r, c);
          for (std::size_t i = 0; i < p; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) z[(i + j) % p] += x[i] * y[j];
          }
        }
      }
    return out;
  }

  // shift every entry so its last coefficient is zero
  std::vector<std::int64_t> canonical() const {
    std::vector<std::int64_t> out;
    out.reserve(a_.size() * static_cast<std::size_t>(p_));
    for (auto const& e : a_)
      for (auto c : e) out.push_back(c - e.back());
    return out;
  }

  bool equals(Dense const& o) const { return canonical() == o.canonical(); }

 private:
  int n_;
  int p_;
  std::size_t dim_;
  std::vector<Elem> a_;
};

// digits of a basis index, k_1 most significant
inline std::vector<int> digits(std::size_t idx, int n, int p) {
  std::vector<int> k(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    k[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(p));
    idx /= static_cast<std::size_t>(p);
  }
  return k;
}

inline std::size_t index_of(std::vector<int> const& k, int p) {
  std::size_t idx = 0;
  for (int d : k) idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(d);
  return idx;
}

inline void add_power(Elem& e, long long power, int p, std::int64_t coeff = 1) {
  long long r = power % p;
  if (r < 0) r += p;
  e[static_cast<std::size_t>(r)] += coeff;
}

// column b holds the image of basis state b
inline Dense letter_matrix(Generator g, int n, int p) {
  Dense d(n, p);
  int const i = g.index();
  for (std::size_t b = 0; b < d.dim(); ++b) {
    auto k = digits(b, n, p);
    long long const kl = static_cast<long long>(k[static_cast<std::size_t>(i - 1)]) *
                         k[static_cast<std::size_t>(i)];
    auto swapped = k;
    std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
    switch (g.kind()) {
      case Kind::V: add_power(d.at(index_of(swapped, p), b), 0, p); break;
      case Kind::Mu: add_power(d.at(b, b), kl, p); break;
      case Kind::MuInv: add_power(d.at(b, b), -kl, p); break;
      case Kind::Gamma:
        add_power(d.at(b, b), kl, p);
        add_power(d.at(b, b), -kl, p);
        break;
      case Kind::Sigma: add_power(d.at(index_of(swapped, p), b), kl, p); break;
      case Kind::SigmaInv: add_power(d.at(index_of(swapped, p), b), -kl, p); break;
      case Kind::Tau:
        add_power(d.at(index_of(swapped, p), b), kl, p);
        add_power(d.at(index_of(swapped, p), b), -kl, p);
        break;
      default: throw std::invalid_argument("oracle handles elementary letters only");
    }
  }
  return d;
}

inline Dense word_matrix(Word const& w, int p) {
  Word const flat = expand_generalized(w);
  Dense m = Dense::identity(w.strands(), p);
  for (auto const& g : flat) m = m * letter_matrix(g, w.strands(), p);
  return m;
}

}  // namespace vsb::oracle
