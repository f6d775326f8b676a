#include "vsb/representation.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "vsb/morphisms.hpp"

namespace vsb {

BasisState::BasisState(int p_, std::vector<int> k_) : p(p_), k(std::move(k_)) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  for (int x : k) {
    if (x < 0 || x >= p) throw std::out_of_range("basis index outside [0, p)");
  }
}

std::string BasisState::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(k[i]);
  }
  return out + ")";
}

std::vector<BasisState> basis_states(int strands, int p) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  if (strands < 1) throw std::invalid_argument("need at least one tensor factor");
  std::vector<BasisState> out;
  std::vector<int> k(static_cast<std::size_t>(strands), 0);
  while (true) {
    out.emplace_back(p, k);
    int pos = strands - 1;
    while (pos >= 0 && k[static_cast<std::size_t>(pos)] == p - 1) {
      k[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++k[static_cast<std::size_t>(pos)];
  }
  return out;
}

namespace {

// A word translated once to the fusing alphabet, ready to evaluate on many
// basis states of one prime.
class PreparedWord {
 public:
  PreparedWord(Word const& w, int p)
      : strands_(w.strands()), p_(p), letters_(normalize_to(w, Alphabet::Fusing)) {
    if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
    gamma_.reserve(static_cast<std::size_t>(p));
    for (int a = 0; a < p; ++a) {
      gamma_.push_back(CycInt::from_power(p, a) + CycInt::from_power(p, -a));
    }
  }

  MonomialImage apply(BasisState const& b) const {
    if (b.p != p_) throw std::invalid_argument("basis state prime differs from evaluation prime");
    if (static_cast<int>(b.k.size()) != strands_) {
      throw std::invalid_argument("basis state has " + std::to_string(b.k.size()) +
                                  " factors, word has " + std::to_string(strands_) + " strands");
    }
    std::vector<int> k = b.k;
    long long exponent = 0;
    std::optional<CycInt> gammas;
    for (auto it = letters_.letters().rbegin(); it != letters_.letters().rend(); ++it) {
      auto const i = static_cast<std::size_t>(it->index() - 1);
      int const a = (k[i] * k[i + 1]) % p_;
      switch (it->kind()) {
        case Kind::V: std::swap(k[i], k[i + 1]); break;
        case Kind::Mu: exponent += a; break;
        case Kind::MuInv: exponent -= a; break;
        case Kind::Gamma:
          if (gammas) {
            *gammas *= gamma_[static_cast<std::size_t>(a)];
          } else {
            gammas = gamma_[static_cast<std::size_t>(a)];
          }
          break;
        default: throw std::logic_error("non-fusing letter after normalization");
      }
    }
    CycInt scalar =
        gammas ? gammas->times_xi_power(exponent) : CycInt::from_power(p_, exponent);
    return {std::move(scalar), BasisState(p_, std::move(k))};
  }

 private:
  int strands_;
  int p_;
  Word letters_;
  std::vector<CycInt> gamma_;
};

}  // namespace

MonomialImage apply_word(Word const& w, BasisState const& b) {
  return PreparedWord(w, b.p).apply(b);
}

std::vector<MonomialImage> fingerprint(Word const& w, int p) {
  PreparedWord const prepared(w, p);
  std::vector<MonomialImage> out;
  for (auto const& b : basis_states(w.strands(), p)) out.push_back(prepared.apply(b));
  return out;
}

std::optional<Witness> first_difference(Word const& w1, Word const& w2, int p) {
  if (w1.strands() != w2.strands()) {
    throw StrandMismatchError("cannot compare words on different strand counts");
  }
  PreparedWord const a(w1, p);
  PreparedWord const b(w2, p);
  for (auto const& state : basis_states(w1.strands(), p)) {
    auto lhs = a.apply(state);
    auto rhs = b.apply(state);
    if (!(lhs == rhs)) return Witness{state, std::move(lhs), std::move(rhs)};
  }
  return std::nullopt;
}

bool rep_equal(Word const& w1, Word const& w2, int p) {
  return !first_difference(w1, w2, p).has_value();
}

bool VerificationReport::ok() const noexcept {
  return std::all_of(families.begin(), families.end(), [](auto const& f) { return f.ok(); });
}

std::size_t VerificationReport::instances() const noexcept {
  std::size_t total = 0;
  for (auto const& f : families) total += f.instances;
  return total;
}

namespace {

std::vector<std::optional<Witness>> check_all(std::vector<Relation> const& relations, int p,
                                              unsigned threads) {
  std::vector<std::optional<Witness>> results(relations.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < relations.size(); r = next++) {
      results[r] = first_difference(relations[r].lhs, relations[r].rhs, p);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return results;
}

void tally(VerificationReport& report, std::vector<Relation> const& relations, int p,
           unsigned threads) {
  auto const results = check_all(relations, p, threads);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    auto const& rel = relations[r];
    auto fam = std::find_if(report.families.begin(), report.families.end(),
                            [&](auto const& f) { return f.family == rel.family; });
    if (fam == report.families.end()) {
      report.families.push_back(FamilyReport{rel.family, rel.derived, 0, 0, std::nullopt});
      fam = std::prev(report.families.end());
    }
    ++fam->instances;
    if (!results[r]) {
      ++fam->passed;
    } else if (!fam->first_failure) {
      fam->first_failure = RelationFailure{rel, *results[r]};
    }
  }
}

}  // namespace

VerificationReport verify_relations(Catalog catalog, int strands, int p, unsigned threads) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  VerificationReport report{catalog_name(catalog), strands, p, {}};
  for (auto const& name : family_names(catalog)) {
    report.families.push_back(FamilyReport{name, is_derived_family(name), 0, 0, std::nullopt});
  }
  tally(report, instantiate_relations(catalog, strands), p, threads);
  return report;
}

VerificationReport verify_relation_list(std::string name, std::vector<Relation> const& relations,
                                        int p, unsigned threads) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  int const strands = relations.empty() ? 0 : relations.front().lhs.strands();
  VerificationReport report{std::move(name), strands, p, {}};
  tally(report, relations, p, threads);
  return report;
}

bool OperatorReport::ok() const noexcept {
  return std::all_of(conditions.begin(), conditions.end(), [](auto const& c) {
    return c.passed && (!c.closed_form_checked || c.closed_form_passed);
  });
}

namespace {

// Local operators on V^{(x)m}, written directly from the defining formulas
// of T, R, R^-1 and S so that the conditions do not go through word
// evaluation.
struct Vec {
  CycInt scalar;
  std::vector<int> k;
  friend bool operator==(Vec const&, Vec const&) = default;
};

using Op = std::function<Vec(Vec)>;

Op twist(std::size_t at) {
  return [at](Vec x) {
    std::swap(x.k[at], x.k[at + 1]);
    return x;
  };
}

Op diagonal(std::size_t at, int p, std::function<CycInt(int)> factor) {
  return [at, p, factor = std::move(factor)](Vec x) {
    x.scalar *= factor((x.k[at] * x.k[at + 1]) % p);
    return x;
  };
}

Op r_op(std::size_t at, int p) {
  return diagonal(at, p, [p](int a) { return CycInt::from_power(p, a); });
}
Op r_inv_op(std::size_t at, int p) {
  return diagonal(at, p, [p](int a) { return CycInt::from_power(p, -a); });
}
Op s_op(std::size_t at, int p) {
  return diagonal(at, p,
                  [p](int a) { return CycInt::from_power(p, a) + CycInt::from_power(p, -a); });
}

// Operator product A B C ...: the rightmost factor acts first.
Op product(std::vector<Op> factors) {
  return [factors = std::move(factors)](Vec x) {
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) x = (*it)(std::move(x));
    return x;
  };
}

Op identity_op() {
  return [](Vec x) { return x; };
}

ConditionReport check(int number, std::string statement, int p, int factors, Op const& lhs,
                      Op const& rhs,
                      std::function<std::optional<Vec>(std::vector<int> const&)> closed = {}) {
  ConditionReport out;
  out.number = number;
  out.statement = std::move(statement);
  out.passed = true;
  out.closed_form_checked = static_cast<bool>(closed);
  out.closed_form_passed = out.closed_form_checked;
  for (auto const& b : basis_states(factors, p)) {
    Vec const start{CycInt::from_integer(p, 1), b.k};
    Vec const l = lhs(start);
    Vec const r = rhs(start);
    ++out.states_checked;
    if (!(l == r)) {
      if (out.passed) {
        out.failure = "sides differ at " + b.to_string() + ": " + l.scalar.to_string() + " vs " +
                      r.scalar.to_string();
      }
      out.passed = false;
    }
    if (closed) {
      auto const expected = closed(b.k);
      if (!expected || !(l == *expected) || !(r == *expected)) {
        if (out.closed_form_passed && !out.failure) {
          out.failure = "closed form differs at " + b.to_string();
        }
        out.closed_form_passed = false;
      }
    }
  }
  return out;
}

}  // namespace

OperatorReport verify_operator_conditions(int p) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  OperatorReport report;
  report.p = p;

  // Two factors: T, R at position 0. Three factors: X (x) id at 0, id (x) X at 1.
  Op const T = twist(0), R = r_op(0, p), Rinv = r_inv_op(0, p), S = s_op(0, p);
  Op const T1 = twist(0), T2 = twist(1);
  Op const R1 = r_op(0, p), R2 = r_op(1, p);
  Op const S1 = s_op(0, p), S2 = s_op(1, p);
  Op const R13 = product({T2, R1, T2});

  // Condition 1 is three identities on V (x) V.
  {
    auto c = check(1, "T^2 = id", p, 2, product({T, T}), identity_op());
    auto const inv_r = check(1, "R R^-1 = id", p, 2, product({R, Rinv}), identity_op());
    auto const inv_l = check(1, "R^-1 R = id", p, 2, product({Rinv, R}), identity_op());
    c.statement = "T and R invertible, T^2 = id";
    c.states_checked += inv_r.states_checked + inv_l.states_checked;
    c.passed = c.passed && inv_r.passed && inv_l.passed;
    if (!c.failure) c.failure = inv_r.failure ? inv_r.failure : inv_l.failure;
    report.conditions.push_back(std::move(c));
  }
  report.conditions.push_back(check(2, "(T x 1)(1 x T)(T x 1) = (1 x T)(T x 1)(1 x T)", p, 3,
                                    product({T1, T2, T1}), product({T2, T1, T2})));
  report.conditions.push_back(check(3, "(T x 1)(1 x R)(T x 1) = (1 x T)(R x 1)(1 x T)", p, 3,
                                    product({T1, R2, T1}), product({T2, R1, T2})));
  report.conditions.push_back(check(4, "(T x 1)(1 x S)(T x 1) = (1 x T)(S x 1)(1 x T)", p, 3,
                                    product({T1, S2, T1}), product({T2, S1, T2})));
  report.conditions.push_back(check(
      5, "R_23 R_13 R_12 = R_12 R_13 R_23", p, 3, product({R2, R13, R1}), product({R1, R13, R2}),
      [p](std::vector<int> const& k) -> std::optional<Vec> {
        int const e = k[0] * k[1] + k[0] * k[2] + k[1] * k[2];
        return Vec{CycInt::from_power(p, e), k};
      }));
  report.conditions.push_back(check(6, "R_23 R_13 S_12 = S_12 R_13 R_23", p, 3,
                                    product({R2, R13, S1}), product({S1, R13, R2})));
  report.conditions.push_back(check(
      7, "R T S = S T R", p, 2, product({R, T, S}), product({S, T, R}),
      [p](std::vector<int> const& k) -> std::optional<Vec> {
        int const a = k[0] * k[1];
        CycInt scalar =
            CycInt::from_power(p, a) * (CycInt::from_power(p, a) + CycInt::from_power(p, -a));
        return Vec{std::move(scalar), {k[1], k[0]}};
      }));
  return report;
}

}  // namespace vsb
