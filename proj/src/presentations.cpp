#include "vsb/presentations.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

namespace vsb {

Catalog catalog_from_name(std::string const& name) {
  if (name == "standard") return Catalog::Standard;
  if (name == "reduced-standard") return Catalog::ReducedStandard;
  if (name == "fusing") return Catalog::Fusing;
  if (name == "reduced-fusing") return Catalog::ReducedFusing;
  if (name == "pure") return Catalog::Pure;
  throw std::invalid_argument("unknown catalog '" + name + "'");
}

std::string catalog_name(Catalog c) {
  switch (c) {
    case Catalog::Standard: return "standard";
    case Catalog::ReducedStandard: return "reduced-standard";
    case Catalog::Fusing: return "fusing";
    case Catalog::ReducedFusing: return "reduced-fusing";
    case Catalog::Pure: return "pure";
  }
  return "?";
}

std::vector<Catalog> all_catalogs() {
  return {Catalog::Standard, Catalog::ReducedStandard, Catalog::Fusing, Catalog::ReducedFusing,
          Catalog::Pure};
}

bool in_alphabet(Catalog c, Generator const& g) {
  Kind const k = g.kind();
  switch (c) {
    case Catalog::Standard: return is_standard(k);
    case Catalog::ReducedStandard: return is_standard(k) && (k == Kind::V || g.index() == 1);
    case Catalog::Fusing: return is_fusing(k);
    case Catalog::ReducedFusing: return is_fusing(k) && (k == Kind::V || g.index() == 1);
    case Catalog::Pure: return g.generalized();
  }
  return false;
}

bool in_alphabet(Catalog c, Word const& w) {
  for (auto const& g : w) {
    if (!in_alphabet(c, g)) return false;
  }
  return true;
}

std::string Relation::describe() const {
  std::string out = family;
  if (!params.empty()) {
    out += " (";
    for (std::size_t k = 0; k < params.size(); ++k) {
      if (k) out += ", ";
      out += params[k].first + "=" + std::to_string(params[k].second);
    }
    out += ")";
  }
  out += ": " + (lhs.empty() ? std::string("1") : format_word(lhs)) + " = " +
         (rhs.empty() ? std::string("1") : format_word(rhs));
  return out;
}

namespace {

using G = Generator;
using Letters = std::vector<Generator>;

// Words are assembled from segments, so "v_1 v_2 x v_2 v_1" reads like the
// printed relation.
Letters cat(std::initializer_list<Letters> parts) {
  Letters out;
  for (auto const& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

class Builder {
 public:
  explicit Builder(int n) : n_(n) {}

  void add(std::string family, RelationParams params, Letters lhs, Letters rhs,
           bool derived = false) {
    out_.push_back(Relation{std::move(family), std::move(params), Word(n_, std::move(lhs)),
                            Word(n_, std::move(rhs)), derived});
  }

  int n() const { return n_; }
  std::vector<Relation> take() { return std::move(out_); }

 private:
  int n_;
  std::vector<Relation> out_;
};

// Ordered pairs (i, j) of letter indices in [1, n-1] with |i - j| == 1.
std::vector<std::pair<int, int>> adjacent_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) == 1) out.emplace_back(i, j);
    }
  }
  return out;
}

// Ordered pairs with |i - j| > 1.
std::vector<std::pair<int, int>> distant_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) > 1) out.emplace_back(i, j);
    }
  }
  return out;
}

RelationParams ij(int i, int j) { return {{"i", i}, {"j", j}}; }

// Commuting family g_i h_j = h_j g_i over ordered kind pairs; `derived_kind`
// marks the kind whose pairs are added beyond the printed statement.
void commuting(Builder& b, std::string const& family, std::vector<Kind> const& kinds,
               Kind derived_kind) {
  std::vector<Kind> extended = kinds;
  extended.push_back(derived_kind);
  for (auto [i, j] : distant_pairs(b.n())) {
    for (std::size_t gk = 0; gk < extended.size(); ++gk) {
      for (std::size_t hk = 0; hk < extended.size(); ++hk) {
        bool const derived = gk == kinds.size() || hk == kinds.size();
        G g = G::single(extended[gk], i);
        G h = G::single(extended[hk], j);
        b.add(derived ? family + "-inv" : family, ij(i, j), {g, h}, {h, g}, derived);
      }
    }
  }
}

void standard(Builder& b) {
  int const n = b.n();
  for (int i = 1; i <= n - 1; ++i) {
    b.add("R2", {{"i", i}, {"form", 1}}, {G::sigma(i), G::sigma_inv(i)}, {});
    b.add("R2", {{"i", i}, {"form", 2}}, {G::sigma_inv(i), G::sigma(i)}, {});
  }
  for (int i = 1; i <= n - 1; ++i) b.add("V2", {{"i", i}}, {G::v(i), G::v(i)}, {});
  auto const adj = adjacent_pairs(n);
  for (auto [i, j] : adj) {
    b.add("R3", ij(i, j), {G::sigma(i), G::sigma(j), G::sigma(i)},
          {G::sigma(j), G::sigma(i), G::sigma(j)});
  }
  for (auto [i, j] : adj) {
    b.add("V3", ij(i, j), {G::v(i), G::v(j), G::v(i)}, {G::v(j), G::v(i), G::v(j)});
  }
  for (auto [i, j] : adj) {
    b.add("VR3", ij(i, j), {G::v(i), G::sigma(j), G::v(i)}, {G::v(j), G::sigma(i), G::v(j)});
  }
  for (auto [i, j] : adj) {
    b.add("VS3", ij(i, j), {G::v(i), G::tau(j), G::v(i)}, {G::v(j), G::tau(i), G::v(j)});
  }
  for (auto [i, j] : adj) {
    b.add("RS3", ij(i, j), {G::sigma(i), G::sigma(j), G::tau(i)},
          {G::tau(j), G::sigma(i), G::sigma(j)});
  }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("RS1", {{"i", i}}, {G::sigma(i), G::tau(i)}, {G::tau(i), G::sigma(i)});
  }
  commuting(b, "C", {Kind::Sigma, Kind::Tau, Kind::V}, Kind::SigmaInv);
}

void reduced_standard(Builder& b) {
  int const n = b.n();
  G const s = G::sigma(1), S = G::sigma_inv(1), t = G::tau(1);
  for (int i = 1; i <= n - 1; ++i) b.add("red-1", {{"i", i}}, {G::v(i), G::v(i)}, {});
  b.add("red-2", {{"form", 1}}, {s, S}, {});
  b.add("red-2", {{"form", 2}}, {S, s}, {});
  b.add("red-3", {}, {s, t}, {t, s});
  for (auto [i, j] : adjacent_pairs(n)) {
    b.add("red-4", ij(i, j), {G::v(i), G::v(j), G::v(i)}, {G::v(j), G::v(i), G::v(j)});
  }
  if (n >= 3) {
    // sigma_2 = v_1 v_2 sigma_1 v_2 v_1
    auto const around12 = [](G x) { return Letters{G::v(1), G::v(2), x, G::v(2), G::v(1)}; };
    b.add("red-5", {}, cat({{s}, around12(s), {s}}), cat({around12(s), {s}, around12(s)}));
    b.add("red-6", {}, cat({{t}, around12(s), {s}}), cat({around12(s), {s}, around12(t)}));
  }
  for (int i = 3; i <= n - 1; ++i) {
    b.add("red-7", {{"i", i}, {"form", 1}}, {t, G::v(i)}, {G::v(i), t});
    b.add("red-7", {{"i", i}, {"form", 2}}, {s, G::v(i)}, {G::v(i), s});
  }
  for (auto [i, j] : distant_pairs(n)) {
    b.add("red-8", ij(i, j), {G::v(i), G::v(j)}, {G::v(j), G::v(i)});
  }
  if (n >= 4) {
    // x_3 = v_2 v_1 v_3 v_2 x_1 v_2 v_3 v_1 v_2
    auto const around3 = [](G x) {
      return Letters{G::v(2), G::v(1), G::v(3), G::v(2), x, G::v(2), G::v(3), G::v(1), G::v(2)};
    };
    b.add("red-9", {}, cat({{t}, around3(t)}), cat({around3(t), {t}}));
    b.add("red-10", {}, cat({{t}, around3(s)}), cat({around3(s), {t}}));
    b.add("red-11", {}, cat({{s}, around3(s)}), cat({around3(s), {s}}));
  }
}

void fusing(Builder& b) {
  int const n = b.n();
  for (int i = 1; i <= n - 1; ++i) {
    b.add("mn-id", {{"i", i}, {"form", 1}}, {G::v(i), G::v(i)}, {});
    b.add("mn-id", {{"i", i}, {"form", 2}}, {G::mu(i), G::mu_inv(i)}, {});
    b.add("mn-id", {{"i", i}, {"form", 3}}, {G::mu_inv(i), G::mu(i)}, {});
  }
  auto const adj = adjacent_pairs(n);
  for (auto [i, j] : adj) {
    b.add("mn-v3", ij(i, j), {G::v(i), G::v(j), G::v(i)}, {G::v(j), G::v(i), G::v(j)});
  }
  for (auto [i, j] : adj) {
    b.add("mn-vr3", ij(i, j), {G::v(i), G::mu(j), G::v(i)}, {G::v(j), G::mu(i), G::v(j)});
  }
  for (auto [i, j] : adj) {
    b.add("mn-vs3", ij(i, j), {G::v(i), G::gamma(j), G::v(i)}, {G::v(j), G::gamma(i), G::v(j)});
  }
  for (auto [i, j] : adj) {
    Letters const mid{G::v(j), G::mu(i), G::v(j)};
    b.add("mn-r3", ij(i, j), cat({{G::mu(j)}, mid, {G::mu(i)}}),
          cat({{G::mu(i)}, mid, {G::mu(j)}}));
  }
  for (auto [i, j] : adj) {
    Letters const mid{G::v(j), G::mu(i), G::v(j)};
    b.add("mn-rs3", ij(i, j), cat({{G::mu(j)}, mid, {G::gamma(i)}}),
          cat({{G::gamma(i)}, mid, {G::mu(j)}}));
  }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("mn-r1", {{"i", i}}, {G::mu(i), G::v(i), G::gamma(i)},
          {G::gamma(i), G::v(i), G::mu(i)});
  }
  commuting(b, "mn-c", {Kind::Mu, Kind::Gamma, Kind::V}, Kind::MuInv);
}

void reduced_fusing(Builder& b) {
  int const n = b.n();
  G const u = G::mu(1), U = G::mu_inv(1), g = G::gamma(1);
  for (int i = 1; i <= n - 1; ++i) b.add("rmn-1", {{"i", i}}, {G::v(i), G::v(i)}, {});
  b.add("rmn-1", {{"form", 1}}, {u, U}, {});
  b.add("rmn-1", {{"form", 2}}, {U, u}, {});
  for (auto [i, j] : adjacent_pairs(n)) {
    b.add("rmn-2", ij(i, j), {G::v(i), G::v(j), G::v(i)}, {G::v(j), G::v(i), G::v(j)});
  }
  if (n >= 3) {
    Letters const mu2{G::v(1), G::v(2), u, G::v(2), G::v(1)};
    Letters const mu13{G::v(2), u, G::v(2)};
    b.add("rmn-3", {}, cat({mu2, mu13, {u}}), cat({{u}, mu13, mu2}));
    b.add("rmn-4", {}, cat({mu2, mu13, {g}}), cat({{g}, mu13, mu2}));
  }
  b.add("rmn-5", {}, {u, G::v(1), g}, {g, G::v(1), u});
  for (auto [i, j] : distant_pairs(n)) {
    b.add("rmn-6", ij(i, j), {G::v(i), G::v(j)}, {G::v(j), G::v(i)});
  }
  for (int i = 3; i <= n - 1; ++i) {
    b.add("rmn-7", {{"i", i}, {"form", 1}}, {u, G::v(i)}, {G::v(i), u});
    b.add("rmn-7", {{"i", i}, {"form", 2}}, {g, G::v(i)}, {G::v(i), g});
  }
  if (n >= 4) {
    auto const around3 = [](G x) {
      return Letters{G::v(2), G::v(1), G::v(3), G::v(2), x, G::v(2), G::v(3), G::v(1), G::v(2)};
    };
    b.add("rmn-8", {}, cat({{g}, around3(g)}), cat({around3(g), {g}}));
    b.add("rmn-9", {}, cat({{g}, around3(u)}), cat({around3(u), {g}}));
    b.add("rmn-10", {}, cat({{u}, around3(u)}), cat({around3(u), {u}}));
  }
}

void pure(Builder& b) {
  int const n = b.n();
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      if (k == l) continue;
      b.add("pure-inv", {{"k", k}, {"l", l}, {"form", 1}}, {G::gmu(k, l), G::gmu_inv(k, l)}, {});
      b.add("pure-inv", {{"k", k}, {"l", l}, {"form", 2}}, {G::gmu_inv(k, l), G::gmu(k, l)}, {});
    }
  }
  std::vector<std::array<int, 3>> triples;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (i != j && j != k && i != k) triples.push_back({i, j, k});
      }
    }
  }
  auto const ijk = [](auto const& t) -> RelationParams {
    return {{"i", t[0]}, {"j", t[1]}, {"k", t[2]}};
  };
  for (auto const& t : triples) {
    auto [i, j, k] = t;
    b.add("pure-YB", ijk(t), {G::gmu(i, j), G::gmu(i, k), G::gmu(j, k)},
          {G::gmu(j, k), G::gmu(i, k), G::gmu(i, j)});
  }
  for (auto const& t : triples) {
    auto [i, j, k] = t;
    b.add("pure-YB-mixed", ijk(t), {G::gmu(i, j), G::gmu(i, k), G::ggamma(j, k)},
          {G::ggamma(j, k), G::gmu(i, k), G::gmu(i, j)});
  }
  for (auto const& t : triples) {
    auto [i, j, k] = t;
    b.add("pure-YB-mixed-2", ijk(t), {G::ggamma(i, j), G::gmu(i, k), G::gmu(j, k)},
          {G::gmu(j, k), G::gmu(i, k), G::ggamma(i, j)});
  }
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      if (k == l) continue;
      b.add("pure-twist", {{"k", k}, {"l", l}}, {G::gmu(k, l), G::ggamma(l, k)},
            {G::ggamma(k, l), G::gmu(l, k)});
    }
  }
  std::vector<std::array<int, 4>> quads;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          if (i != j && i != k && i != l && j != k && j != l && k != l) {
            quads.push_back({i, j, k, l});
          }
        }
      }
    }
  }
  auto const ijkl = [](auto const& q) -> RelationParams {
    return {{"i", q[0]}, {"j", q[1]}, {"k", q[2]}, {"l", q[3]}};
  };
  for (auto const& q : quads) {
    auto [i, j, k, l] = q;
    b.add("pure-comm-mu", ijkl(q), {G::gmu(i, j), G::gmu(k, l)}, {G::gmu(k, l), G::gmu(i, j)});
  }
  for (auto const& q : quads) {
    auto [i, j, k, l] = q;
    b.add("pure-comm-gamma", ijkl(q), {G::ggamma(i, j), G::ggamma(k, l)},
          {G::ggamma(k, l), G::ggamma(i, j)});
  }
  for (auto const& q : quads) {
    auto [i, j, k, l] = q;
    b.add("pure-comm-mixed", ijkl(q), {G::gmu(i, j), G::ggamma(k, l)},
          {G::ggamma(k, l), G::gmu(i, j)});
  }
}

}  // namespace

bool is_derived_family(std::string const& family) {
  return family == "C-inv" || family == "mn-c-inv";
}

std::vector<std::string> family_names(Catalog c) {
  switch (c) {
    case Catalog::Standard:
      return {"R2", "V2", "R3", "V3", "VR3", "VS3", "RS3", "RS1", "C", "C-inv"};
    case Catalog::ReducedStandard:
      return {"red-1", "red-2", "red-3", "red-4", "red-5", "red-6",
              "red-7", "red-8", "red-9", "red-10", "red-11"};
    case Catalog::Fusing:
      return {"mn-id", "mn-v3", "mn-vr3", "mn-vs3", "mn-r3", "mn-rs3", "mn-r1", "mn-c", "mn-c-inv"};
    case Catalog::ReducedFusing:
      return {"rmn-1", "rmn-2", "rmn-3", "rmn-4", "rmn-5",
              "rmn-6", "rmn-7", "rmn-8", "rmn-9", "rmn-10"};
    case Catalog::Pure:
      return {"pure-inv",    "pure-YB",      "pure-YB-mixed",   "pure-YB-mixed-2",
              "pure-twist",  "pure-comm-mu", "pure-comm-gamma", "pure-comm-mixed"};
  }
  return {};
}

std::vector<Relation> instantiate_relations(Catalog c, int strands) {
  if (strands < 2) throw WordError("strand count must be at least 2");
  Builder b(strands);
  switch (c) {
    case Catalog::Standard: standard(b); break;
    case Catalog::ReducedStandard: reduced_standard(b); break;
    case Catalog::Fusing: fusing(b); break;
    case Catalog::ReducedFusing: reduced_fusing(b); break;
    case Catalog::Pure: pure(b); break;
  }
  auto relations = b.take();
  // The commuting families interleave base and derived instances while
  // enumerating kind pairs; regroup so families appear in family_names order.
  std::vector<Relation> ordered;
  ordered.reserve(relations.size());
  for (auto const& name : family_names(c)) {
    for (auto& r : relations) {
      if (r.family == name) ordered.push_back(std::move(r));
    }
  }
  return ordered;
}

Relation parse_relation(std::string const& text, int strands, std::string family) {
  auto const eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos) {
    throw WordError("relation must contain exactly one '=': " + text);
  }
  auto side = [&](std::string s) {
    auto const first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return Word(strands);
    s = s.substr(first);
    if (s == "1" || s.rfind("1 ", 0) == 0) {
      if (s.find_first_not_of(" \t", 1) != std::string::npos) {
        throw WordError("identity side must be exactly '1'");
      }
      return Word(strands);
    }
    return parse_word(s, strands);
  };
  return Relation{std::move(family), {}, side(text.substr(0, eq)), side(text.substr(eq + 1)),
                  false};
}

}  // namespace vsb
