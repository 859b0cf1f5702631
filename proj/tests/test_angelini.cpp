#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "seqlab/angelini.hpp"
#include "seqlab/errors.hpp"
#include "seqlab/harness.hpp"

using namespace seqlab;
using angelini::LanguageTable;

namespace {

// Independent check of the self-describing property: spell every term,
// concatenate, and re-derive the differences letter by letter.
bool self_describing_by_respelling(const std::vector<int>& terms,
                                   const LanguageTable& table) {
  // terms[i] is the difference of letter pair i, the seed included.
  std::string letters;
  for (int t : terms) letters += table.name(t);
  size_t pairs = letters.size() - 1;
  if (pairs > terms.size()) pairs = terms.size();
  for (size_t i = 0; i < pairs; ++i) {
    const int diff =
        std::abs(table.rank(letters[i + 1]) - table.rank(letters[i]));
    if (diff != terms[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("english table: ranks and names") {
  const auto& table = LanguageTable::english();
  CHECK(table.rank('a') == 1);
  CHECK(table.rank('e') == 5);
  CHECK(table.rank('z') == 26);
  CHECK(table.alphabet_size() == 26);
  CHECK(table.name(0) == "zero");
  CHECK(table.name(9) == "nine");
  CHECK(table.name(14) == "fourteen");
  CHECK(table.name(21) == "twentyone");
  CHECK(table.name(26) == "twentysix");
  CHECK_THROWS_AS(table.name(27), DomainError);
  CHECK_THROWS_AS(table.rank('!'), DomainError);

  std::vector<int> domain(27);
  std::iota(domain.begin(), domain.end(), 0);
  CHECK(table.name_domain() == domain);
}

TEST_CASE("generated prefix matches the fixture") {
  const auto& fixture = harness::bundled_fixture("A131744");
  const auto terms =
      angelini::generate(1, fixture.terms.size(), LanguageTable::english());
  REQUIRE(terms.size() == fixture.terms.size());
  for (size_t i = 0; i < terms.size(); ++i) {
    CHECK(mpz_class(terms[i]) == fixture.terms[i]);
  }
}

TEST_CASE("incremental generation is consistent") {
  const auto& table = LanguageTable::english();
  const auto big = angelini::generate(1, 500, table);
  for (size_t k : {size_t{1}, size_t{2}, size_t{29}, size_t{100}}) {
    const auto small = angelini::generate(1, k, table);
    CHECK(std::equal(small.begin(), small.end(), big.begin()));
  }

  angelini::SelfSequence seq(1, table);
  seq.extend_to(50);
  seq.extend_to(200);
  seq.extend_to(200);
  CHECK(seq.terms().size() >= 200);
  CHECK(std::equal(seq.terms().begin(), seq.terms().begin() + 200,
                   big.begin()));
}

TEST_CASE("self-description holds and perturbations break it") {
  const auto& table = LanguageTable::english();
  auto terms = angelini::generate(1, 10'000, table);
  CHECK(angelini::verify_self_describing(terms, table));
  CHECK(self_describing_by_respelling(terms, table));

  auto broken = terms;
  broken[50] = broken[50] == 9 ? 5 : 9;
  CHECK_FALSE(angelini::verify_self_describing(broken, table));
  CHECK_FALSE(self_describing_by_respelling(broken, table));
}

TEST_CASE("terms stay within rank-difference range and zero occurs") {
  const auto terms = angelini::generate(1, 100'000, LanguageTable::english());
  int low = terms[0];
  int high = terms[0];
  bool zero = false;
  for (int t : terms) {
    low = std::min(low, t);
    high = std::max(high, t);
    if (t == 0) zero = true;
  }
  // Adjacent-letter rank differences; doubled letters (as in "three") give 0.
  CHECK(low == 0);
  CHECK(high <= 25);
  CHECK(zero);
}

TEST_CASE("one is the only admissible seed") {
  const auto& table = LanguageTable::english();
  const auto seeds = angelini::admissible_seeds(table);
  CHECK(seeds == std::vector<int>{1});
  // Mini-oracle: a seed must equal the rank difference of the first two
  // letters of its own name.
  for (int v : table.name_domain()) {
    const std::string& name = table.name(v);
    REQUIRE(name.size() >= 2);
    const int diff = std::abs(table.rank(name[1]) - table.rank(name[0]));
    const bool admissible =
        std::find(seeds.begin(), seeds.end(), v) != seeds.end();
    CHECK(admissible == (diff == v));
  }

  CHECK_THROWS_AS(angelini::generate(0, 10, table), DomainError);
  CHECK_THROWS_AS(angelini::generate(2, 10, table), DomainError);
  CHECK_THROWS_AS(angelini::generate(27, 10, table), DomainError);
}

TEST_CASE("frequencies") {
  const std::vector<int> tiny = {1, 1, 2};
  const auto freq = angelini::frequencies(tiny);
  CHECK(freq.at(1) == doctest::Approx(2.0 / 3.0));
  CHECK(freq.at(2) == doctest::Approx(1.0 / 3.0));

  const auto terms =
      angelini::generate(1, 10'000, LanguageTable::english());
  double total = 0.0;
  for (const auto& [value, f] : angelini::frequencies(terms)) {
    CHECK(f > 0.0);
    total += f;
  }
  CHECK(total == doctest::Approx(1.0));

  CHECK_THROWS_AS(angelini::frequencies(std::vector<int>{}), DomainError);
}

TEST_CASE("table parsing") {
  const auto& builtin = LanguageTable::english();
  const auto from_file = LanguageTable::from_file("data/english.table");
  CHECK(angelini::generate(1, 300, from_file) ==
        angelini::generate(1, 300, builtin));

  const auto custom = LanguageTable::from_text(
      "# two-letter toy alphabet\n"
      "rank a 1\n"
      "rank b 2\n"
      "name 0 aa\n"
      "name 1 ab\n"
      "name 2 ba\n");
  CHECK(custom.rank('b') == 2);
  CHECK(custom.name(1) == "ab");
  CHECK(custom.alphabet_size() == 2);

  CHECK_THROWS_AS(LanguageTable::from_text("rank aa 1\nname 0 aa\n"),
                  ParseError);
  CHECK_THROWS_AS(LanguageTable::from_text("bogus a 1\n"), ParseError);
  CHECK_THROWS_AS(LanguageTable::from_text("rank a x\n"), ParseError);
  // Name spelled with a letter that has no rank.
  CHECK_THROWS_AS(LanguageTable::from_text("rank a 1\nname 0 ab\n"),
                  ParseError);
  // Ranks must stay injective.
  CHECK_THROWS_AS(
      LanguageTable::from_text("rank a 1\nrank b 1\nname 0 ab\n"), ParseError);
  CHECK_THROWS_AS(LanguageTable::from_file("data/no-such.table"), ParseError);
}
