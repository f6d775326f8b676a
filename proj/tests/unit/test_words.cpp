#include <doctest.h>

#include "support/generators.hpp"
#include "vsb/words.hpp"

using namespace vsb;
using G = Generator;

TEST_CASE("parse_word maps tokens") {
  CHECK(parse_word("s1 v2 t1", 3) == Word(3, {G::sigma(1), G::v(2), G::tau(1)}));
  CHECK(parse_word("", 2) == Word::identity(2));
  CHECK(parse_word("u[2,1]", 3) == Word(3, {G::gmu(2, 1)}));
  CHECK(parse_word("  S2\tU1  g2 ", 3) == Word(3, {G::sigma_inv(2), G::mu_inv(1), G::gamma(2)}));
  CHECK(parse_word("U[3,1] g[1,3]", 3) == Word(3, {G::gmu_inv(3, 1), G::ggamma(1, 3)}));
}

TEST_CASE("parse_word rejects malformed input") {
  CHECK_THROWS_AS(parse_word("s3", 3), WordError);
  CHECK_THROWS_AS(parse_word("s0", 3), WordError);
  CHECK_THROWS_AS(parse_word("x1", 3), WordError);
  CHECK_THROWS_AS(parse_word("s01", 3), WordError);
  CHECK_THROWS_AS(parse_word("u[1,1]", 3), WordError);
  CHECK_THROWS_AS(parse_word("u[1,4]", 3), WordError);
  CHECK_THROWS_AS(parse_word("u[1 2]", 3), WordError);
  CHECK_THROWS_AS(parse_word("s1", 1), WordError);
  try {
    parse_word("s1 v9", 3);
    FAIL("expected a throw");
  } catch (ParseError const& e) {
    CHECK(e.token_index() == 1);
    CHECK(e.token() == "v9");
  } catch (WordError const&) {
  }
}

TEST_CASE("free_reduce cancels inverse pairs") {
  CHECK(free_reduce(Word(2, {G::sigma(1), G::sigma_inv(1)})).empty());
  CHECK(free_reduce(Word(3, {G::v(1), G::v(1), G::v(2)})) == Word(3, {G::v(2)}));
  CHECK(free_reduce(Word(2, {G::mu(1), G::v(1), G::v(1), G::mu_inv(1)})).empty());
  // singular letters never cancel
  Word const tt(2, {G::tau(1), G::tau(1)});
  CHECK(free_reduce(tt) == tt);
  CHECK(free_reduce(Word(3, {G::gmu(1, 3), G::gmu_inv(1, 3)})).empty());
  Word const mixed(3, {G::gmu(1, 3), G::gmu_inv(3, 1)});
  CHECK(free_reduce(mixed) == mixed);
}

TEST_CASE("concat and embed") {
  Word const w(2, {G::sigma(1), G::tau(1)});
  CHECK(concat(Word::identity(2), w) == w);
  CHECK(concat(Word(2, {G::sigma(1)}), Word(2, {G::v(1)})) == Word(2, {G::sigma(1), G::v(1)}));
  CHECK(concat(Word(2, {G::mu(1)}), Word(2, {G::mu_inv(1)})).size() == 2);
  CHECK_THROWS_AS(concat(Word(2), Word(3)), StrandMismatchError);
  CHECK(embed(Word(2, {G::sigma(1)}), 3) == Word(3, {G::sigma(1)}));
  CHECK(embed(Word::identity(2), 5) == Word::identity(5));
  Word const v2(3, {G::v(2)});
  CHECK(embed(v2, 3) == v2);
  CHECK_THROWS_AS(embed(v2, 2), WordError);
}

TEST_CASE("inverse rejects singular letters") {
  CHECK(inverse(Word(3, {G::sigma(1), G::mu(2)})) == Word(3, {G::mu_inv(2), G::sigma_inv(1)}));
  CHECK_THROWS_AS(inverse(Word(2, {G::tau(1)})), NotInvertibleError);
}

TEST_CASE("property: format then parse round trips") {
  testing::Rng rng(testing::kDefaultSeed);
  for (int trial = 0; trial < 500; ++trial) {
    int const n = testing::uniform(rng, 2, 12);
    auto const len = static_cast<std::size_t>(testing::uniform(rng, 0, 20));
    Word const w = testing::random_word(rng, n, len, testing::all_kinds());
    CHECK(parse_word(format_word(w), n) == w);
  }
}

TEST_CASE("property: free_reduce is idempotent and leaves no cancelling neighbours") {
  testing::Rng rng(testing::kDefaultSeed + 1);
  for (int trial = 0; trial < 500; ++trial) {
    int const n = testing::uniform(rng, 2, 4);
    auto const len = static_cast<std::size_t>(testing::uniform(rng, 0, 24));
    Word const w = testing::random_word(rng, n, len, testing::all_kinds());
    Word const r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK_FALSE(cancels(r[i], r[i + 1]));
    CHECK(r.size() <= w.size());
    CHECK((w.size() - r.size()) % 2 == 0);
  }
}

TEST_CASE("property: inverse words reduce to the identity") {
  testing::Rng rng(testing::kDefaultSeed + 2);
  for (int trial = 0; trial < 300; ++trial) {
    int const n = testing::uniform(rng, 2, 5);
    auto const len = static_cast<std::size_t>(testing::uniform(rng, 0, 16));
    Word const w = testing::random_word(rng, n, len, {Kind::Sigma, Kind::SigmaInv, Kind::V,
                                                      Kind::Mu, Kind::MuInv, Kind::GMu, Kind::GMuInv});
    CHECK(free_reduce(concat(w, inverse(w))).empty());
    CHECK(free_reduce(concat(inverse(w), w)).empty());
  }
}
