// Acceptance suite: one PASS/FAIL line per criterion.

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "support/generators.hpp"
#include "vsb/cli.hpp"
#include "vsb/equivalence.hpp"
#include "vsb/morphisms.hpp"
#include "vsb/presentations.hpp"
#include "vsb/representation.hpp"
#include "vsb/schreier.hpp"

using namespace vsb;
using G = Generator;

namespace {

struct Check {
  bool ok = true;
  std::string first_problem;

  void expect(bool cond, std::string const& what) {
    if (!cond && ok) first_problem = what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Check relation_verification() {
  Check c;
  for (Catalog cat : all_catalogs()) {
    for (int n : {3, 4}) {
      for (int p : {3, 5}) {
        std::string const tag = catalog_name(cat) + " n=" + std::to_string(n) + " p=" + std::to_string(p);
        auto const t0 = Clock::now();
        auto const report = verify_relations(cat, n, p);
        c.expect(report.ok(), "verify " + tag);
        c.expect(report.instances() > 0, "no instances for " + tag);
        for (auto const& r : instantiate_relations(cat, n)) {
          c.expect(rep_equal(normalize_to(r.lhs, Alphabet::Standard), normalize_to(r.rhs, Alphabet::Standard), p),
                   r.describe() + " " + tag);
        }
        c.expect(seconds_since(t0) < 10.0, "slow: " + tag);
      }
    }
  }
  return c;
}

Check operator_conditions() {
  Check c;
  auto const t0 = Clock::now();
  for (int p : {2, 3, 5, 7}) {
    auto const report = verify_operator_conditions(p);
    c.expect(report.ok(), "p=" + std::to_string(p));
    c.expect(report.conditions.size() == 7, "condition count");
    for (auto const& cond : report.conditions) {
      if (cond.number == 5 || cond.number == 7) {
        c.expect(cond.closed_form_checked && cond.closed_form_passed,
                 "closed form of condition " + std::to_string(cond.number));
      }
    }
  }
  c.expect(seconds_since(t0) < 5.0, "slow");
  return c;
}

Check translation_round_trip() {
  Check c;
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      for (Kind k : testing::standard_kinds()) {
        Word const x(n, {G::single(k, i)});
        c.expect(free_reduce(to_standard(to_fusing(x))) == x, "G(F(" + format_word(x) + "))");
      }
      for (Kind k : testing::fusing_kinds()) {
        Word const y(n, {G::single(k, i)});
        c.expect(free_reduce(to_fusing(to_standard(y))) == y, "F(G(" + format_word(y) + "))");
      }
    }
  }
  return c;
}

// the coset representative is a v-word, whose Schreier generators are trivial
Word rewrite(Word const& w) { return decompose(w).pure; }

Check rewrite_table() {
  Check c;
  for (int n : {3, 4}) {
    auto word = [n](std::string const& s) { return parse_word(s, n); };
    for (int i = 1; i < n; ++i) {
      std::string const a = std::to_string(i), b = std::to_string(i + 1);
      std::string const ab = a + "," + b, ba = b + "," + a;
      auto expect = [&](std::string const& in, std::string const& out) {
        Word const got = rewrite(word(in));
        c.expect(got == word(out), "n=" + std::to_string(n) + " R(" + in + ") = " + format_word(got));
      };
      expect("s" + a + " S" + a, "u[" + ab + "] U[" + ab + "]");
      c.expect(rewrite_pure(word("s" + a + " S" + a)) == word("u[" + ab + "] U[" + ab + "]"), "rewrite_pure R2");
      expect("s" + a + " t" + a, "u[" + ab + "] g[" + ba + "]");
      if (i + 2 <= n) {
        std::string const d = std::to_string(i + 2);
        std::string const ac = a + "," + d, bc = b + "," + d;
        expect("s" + a + " s" + b + " s" + a, "u[" + ab + "] u[" + ac + "] u[" + bc + "]");
        expect("s" + b + " s" + a + " s" + b, "u[" + bc + "] u[" + ac + "] u[" + ab + "]");
        expect("s" + a + " s" + b + " t" + a, "u[" + ab + "] u[" + ac + "] g[" + bc + "]");
        expect("v" + a + " t" + b + " v" + a, "g[" + ac + "]");
        expect("v" + b + " t" + a + " v" + b, "g[" + ac + "]");
      }
    }
  }
  return c;
}

Check rewriting_soundness(std::uint64_t seed) {
  Check c;
  auto const t0 = Clock::now();
  testing::Rng rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    int const n = testing::uniform(rng, 2, 4);
    Word const w = testing::random_pure_word(rng, n, 12);
    c.expect(w.size() <= 12, "generator length");
    Word const r = rewrite_pure(w);
    c.expect(rep_equal(w, to_standard(expand_generalized(r)), 3), "R(" + format_word(w) + ")");
  }
  c.expect(seconds_since(t0) < 30.0, "slow");
  return c;
}

Check semidirect(std::uint64_t seed) {
  Check c;
  testing::Rng rng(seed + 1);
  for (int trial = 0; trial < 200; ++trial) {
    int const n = testing::uniform(rng, 2, 4);
    auto const len = static_cast<std::size_t>(testing::uniform(rng, 0, 12));
    Word const w = testing::random_word(rng, n, len, testing::standard_kinds());
    auto const d = decompose(w);
    std::string const tag = format_word(w);
    c.expect(rep_equal(w, concat(to_standard(expand_generalized(d.pure)), d.representative), 3), "rep " + tag);
    c.expect(permutation_of(expand_generalized(d.pure)).is_identity(), "pure part " + tag);
    c.expect(permutation_of(d.representative) == permutation_of(w), "representative " + tag);
  }
  return c;
}

Check conjugation_action() {
  Check c;
  int const n = 4;
  auto conj_holds = [&](int i, G g, G expected) {
    Word const lhs = to_standard(expand_generalized(Word(n, {G::v(i), g, G::v(i)})));
    Word const rhs = to_standard(expand_generalized(Word(n, {expected})));
    std::string const tag = "v" + std::to_string(i) + " " + g.token() + " v" + std::to_string(i) + " = " + expected.token();
    c.expect(rep_equal(lhs, rhs, 3), tag);
    c.expect(act(Permutation::transposition(n, i), g) == expected, "act: " + tag);
  };
  using Maker = G (*)(int, int);
  for (Maker make : {static_cast<Maker>(&G::gmu), static_cast<Maker>(&G::ggamma)}) {
    for (int i = 1; i < n; ++i) {
      // far indices are fixed
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          if (k != l && std::abs(k - i) > 1 && std::abs(l - i) > 1) conj_holds(i, make(k, l), make(k, l));
      if (i >= 2) {
        conj_holds(i - 1, make(i, i + 1), make(i - 1, i + 1));
        conj_holds(i - 1, make(i + 1, i), make(i + 1, i - 1));
      }
      conj_holds(i, make(i, i + 1), make(i + 1, i));
      conj_holds(i, make(i + 1, i), make(i, i + 1));
      if (i + 1 < n) {
        conj_holds(i + 1, make(i, i + 1), make(i, i + 2));
        conj_holds(i + 1, make(i + 1, i), make(i + 2, i));
      }
    }
  }
  // memoized action against expansion then conjugation, every generator and transposition
  for (int i = 1; i < n; ++i) {
    Permutation const t = Permutation::transposition(n, i);
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        if (k == l) continue;
        for (Kind kind : testing::generalized_kinds()) {
          G const g = G::pair(kind, k, l);
          G const moved = act(t, g);
          Word const conj = concat(concat(Word(n, {G::v(i)}), expand_generalized(Word(n, {g}))), Word(n, {G::v(i)}));
          c.expect(rep_equal(conj, expand_generalized(Word(n, {moved})), 3) &&
                       rep_equal(conj, expand_generalized(Word(n, {moved})), 5),
                   "act v" + std::to_string(i) + " on " + g.token());
          c.expect(moved.kind() == kind && moved.first() == t(k) && moved.second() == t(l),
                   "indices of " + g.token());
        }
      }
  }
  return c;
}

Check schreier() {
  Check c;
  for (int n = 2; n <= 6; ++n) {
    auto const system = schreier_system(n);
    std::size_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= static_cast<std::size_t>(k);
    c.expect(system.size() == factorial, "|Lambda_" + std::to_string(n) + "|");
    std::set<std::vector<int>> perms;
    std::set<Word> words;
    for (auto const& idx : system) {
      Word const w = lambda_word(idx);
      words.insert(w);
      auto const p = permutation_of(w);
      perms.emplace(p.images().begin(), p.images().end());
      c.expect(schreier_index_of(p) == idx, "index round trip");
    }
    c.expect(perms.size() == factorial, "pi not bijective at n=" + std::to_string(n));
    for (auto const& w : words) {
      std::vector<G> prefix;
      c.expect(words.count(Word(n)) == 1, "empty prefix");
      for (auto const& g : w) {
        prefix.push_back(g);
        c.expect(words.count(Word(n, prefix)) == 1, "prefix of " + format_word(w));
      }
    }
  }
  return c;
}

Check equivalence_engine() {
  Check c;
  auto const t0 = Clock::now();
  {
    std::ostringstream out, err;
    int const code = cli::run({"equal", "--catalog", "standard", "-n", "2", "--depth", "1", "s1 t1", "t1 s1"}, out, err);
    c.expect(code == 0, "cli equal exit code");
    auto const j = nlohmann::json::parse(out.str());
    c.expect(j["verdict"] == "equivalent" && j["trace"].size() == 1 && j["trace"][0]["family"] == "RS1",
             "cli equal trace");
  }
  SearchBudget depth1;
  depth1.max_depth = 1;
  Word const st = parse_word("s1 t1", 2), ts = parse_word("t1 s1", 2);
  auto v = search_equivalent(st, ts, Catalog::Standard, depth1);
  c.expect(v.outcome == Outcome::Equivalent && replay(st, v.trace) == ts, "s1 t1 ~ t1 s1");

  SearchBudget depth3;
  depth3.max_depth = 3;
  for (int n : {2, 3, 4}) {
    for (int i = 1; i < n; ++i) {
      std::string const a = std::to_string(i);
      Word const w1 = to_standard(parse_word("u" + a + " v" + a + " g" + a, n));
      Word const w2 = to_standard(parse_word("g" + a + " v" + a + " u" + a, n));
      v = search_equivalent(w1, w2, Catalog::Standard, depth3);
      c.expect(v.outcome == Outcome::Equivalent, "G-image of twist relation i=" + a);
      c.expect(v.relation_steps <= 3, "depth");
      c.expect(replay(w1, v.trace) == w2, "replay twist i=" + a);
    }
  }
  for (auto const& [x, y] : std::vector<std::pair<std::string, std::string>>{
           {"s1 s2 s1", "s2 s1 s2"}, {"s1 v2 v1", "v2 v1 s2"}, {"t1 s2 s1", "s2 s1 t2"}, {"s1 S1 v2", "v2"}}) {
    Word const w1 = parse_word(x, 3), w2 = parse_word(y, 3);
    v = search_equivalent(w1, w2, Catalog::Standard);
    c.expect(v.outcome == Outcome::Equivalent && replay(w1, v.trace) == w2, x + " ~ " + y);
  }
  c.expect(!rep_equal(parse_word("s1", 2), parse_word("t1", 2), 3), "s1 vs t1");
  c.expect(!rep_equal(parse_word("s1", 2), parse_word("v1", 2), 3), "s1 vs v1");
  c.expect(seconds_since(t0) < 60.0, "slow");
  return c;
}

Check mutation() {
  Check c;
  Relation const bad = parse_relation("v1 u2 v1 = u1", 3, "corrupted");
  auto const report = verify_relation_list("corrupted", {bad}, 3);
  c.expect(!report.ok(), "corrupted relation passed");
  if (!report.families.empty() && report.families[0].first_failure) {
    auto const& w = report.families[0].first_failure->witness;
    c.expect(w.state.k == std::vector<int>{1, 0, 1}, "witness state " + w.state.to_string());
    c.expect(w.lhs.scalar == CycInt::from_power(3, 1) && w.rhs.scalar == CycInt::from_integer(3, 1),
             "witness scalars");
  } else {
    c.expect(false, "no witness");
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::uint64_t seed = testing::kDefaultSeed;
  app.add_option("--seed", seed, "seed for the randomized criteria (default 0x5eed2024)");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::pair<std::string, std::function<Check()>>> const criteria = {
      {"relation verification", relation_verification},
      {"operator conditions", operator_conditions},
      {"F/G round trip", translation_round_trip},
      {"rewrite table", rewrite_table},
      {"rewriting soundness", [seed] { return rewriting_soundness(seed); }},
      {"semidirect decomposition", [seed] { return semidirect(seed); }},
      {"conjugation action", conjugation_action},
      {"Schreier system", schreier},
      {"equivalence engine", equivalence_engine},
      {"mutation sensitivity", mutation},
  };

  std::cout << "seed " << seed << "\n";
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const t0 = Clock::now();
    Check result;
    try {
      result = criteria[i].second();
    } catch (std::exception const& e) {
      result.ok = false;
      result.first_problem = std::string("exception: ") + e.what();
    }
    std::cout << (result.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " ("
              << seconds_since(t0) << " s)";
    if (!result.ok) std::cout << "  " << result.first_problem;
    std::cout << std::endl;
    failures += result.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
