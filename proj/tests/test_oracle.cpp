#include <doctest.h>

#include "geogrowth/evencox.hpp"
#include "geogrowth/oracle.hpp"
#include "geogrowth/racg.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace geogrowth;
using namespace geogrowth::oracle;
using geotest::corpus;
using geotest::ints;

namespace {

Word w(const CoxeterGraph& g, std::string_view text) { return coxgraph::parse_word(g, text); }

}  // namespace

TEST_CASE("braid closure") {
  const auto d = corpus("dihedral4");
  CHECK_FALSE(oracle_is_geodesic(d, w(d, "ststs")));
  CHECK(oracle_is_geodesic(d, w(d, "stst")));
  CHECK(braid_neighbors(d, w(d, "ststs")) == std::vector<Word>{w(d, "tstss"), w(d, "sstst")});
  const auto cls = braid_class(d, w(d, "stst"));
  CHECK(cls.members == std::vector<Word>{w(d, "stst"), w(d, "tsts")});
  CHECK_FALSE(cls.reducible);
  CHECK(oracle_reduce(d, w(d, "ststs")) == w(d, "tst"));
  CHECK(right_descents(d, w(d, "stst")) == std::vector<bool>{true, true});

  const auto c6 = corpus("c6");
  // a and b are adjacent in the hexagon.
  CHECK_FALSE(oracle_is_geodesic(c6, w(c6, "a b a")));
  const auto free3 = corpus("edgeless3");
  CHECK(oracle_is_geodesic(free3, w(free3, "a b c")));
  CHECK(parity_vector(c6, w(c6, "a b a c")) == std::vector<int>{0, 1, 1, 0, 0, 0});
  CHECK_THROWS_AS(oracle_is_geodesic(c6, Word{9}), std::out_of_range);
}

TEST_CASE("budget exhaustion is distinct from a negative answer") {
  const auto sq = corpus("squares44");
  std::mt19937 rng(5);
  const Word long_word = geotest::random_geodesic(rng, sq, 12);
  CHECK_THROWS_AS(oracle_is_geodesic(sq, w(sq, "a b a b"), 1), BudgetExhausted);
  CHECK_THROWS_AS(braid_class(sq, w(sq, "a b a b"), 1), BudgetExhausted);
  CHECK_THROWS_AS(oracle_counts(sq, 6, {1, true, true}), BudgetExhausted);
  CHECK(oracle_is_geodesic(sq, long_word));
}

TEST_CASE("exhaustive counts") {
  CHECK(oracle_counts(corpus("dihedral4"), 5) == ints({1, 2, 2, 2, 2, 0}));
  CHECK(oracle_counts(corpus("c6"), 3) == ints({1, 6, 30, 138}));
  CHECK(oracle_counts(corpus("infinite_dihedral"), 4) == ints({1, 2, 2, 2, 2}));
  CHECK(oracle_counts_raag(corpus("single"), 3) == ints({1, 2, 2, 2}));
  CHECK(oracle_counts_raag(corpus("k2"), 2) == ints({1, 4, 12}));
  CHECK(oracle_counts_raag(corpus("k2"), 4) == ints({1, 4, 12, 28, 60}));
  CHECK_THROWS_AS(oracle_counts_raag(corpus("dihedral4"), 2), std::invalid_argument);

  const auto k2 = corpus("k2");
  CHECK(raag_is_geodesic(k2, {raag_letter(0, false), raag_letter(1, false), raag_letter(0, true)}) == false);
  CHECK(raag_is_geodesic(k2, {raag_letter(0, false), raag_letter(1, true), raag_letter(0, false)}));
}

TEST_CASE("fast path and symmetry reduction agree with plain braid closure") {
  for (const auto* name : {"c6", "p3", "cube", "k3k3", "dihedral4", "squares24", "octagon42"}) {
    CAPTURE(name);
    const auto g = corpus(name);
    const auto plain = oracle_counts(g, 6, {default_budget, false, false});
    CHECK(oracle_counts(g, 6, {default_budget, true, false}) == plain);
    CHECK(oracle_counts(g, 6, {default_budget, false, true}) == plain);
    CHECK(oracle_counts(g, 6) == plain);
  }
  for (const auto* name : {"k2", "p3", "c4"}) {
    CAPTURE(name);
    const auto g = corpus(name);
    const auto plain = oracle_counts_raag(g, 5, {default_budget, false, false});
    CHECK(oracle_counts_raag(g, 5) == plain);
    CHECK(oracle_counts_raag(g, 5, {default_budget, true, false}) == plain);
  }
}

TEST_CASE("oracle agrees with the automata") {
  for (const auto& name : geotest::racg_trianglefree) {
    CAPTURE(name);
    const auto g = corpus(name);
    CHECK(oracle_counts(g, 7) == racg::growth_counts_racg(g, 7));
  }
  for (const auto& name : geotest::even_only) {
    CAPTURE(name);
    const auto g = corpus(name);
    CHECK(oracle_counts(g, 7) == evencox::count_geodesics_even(evencox::EvenSystem(g), 7));
  }
  CHECK(oracle_counts(corpus("k3k3"), 7) == racg::growth_counts_racg(corpus("k3k3"), 7));
  for (const auto* name : {"single", "k2", "p3", "c4", "hexagon"}) {
    CAPTURE(name);
    const auto g = corpus(name);
    CHECK(oracle_counts_raag(g, 6) == racg::growth_counts_raag(g, 6));
  }
}

TEST_CASE("randomized properties") {
  const auto check = [](const std::string& what, const geotest::PropertyResult& r) {
    CAPTURE(what);
    CAPTURE(r.example);
    CHECK(r.ok(1000));
  };
  check("braid moves", geotest::braid_moves_preserve_length_and_parity(1, 1000));
  check("plus or minus one", geotest::length_changes_by_one(2, 1000));
  check("centralizer words", geotest::centralizer_words_are_geodesic(3, 1000));
  check("prefix closure", geotest::prefixes_of_geodesics(4, 1000));
  check("deletion law", geotest::deletion_law(5, 1000));
}
