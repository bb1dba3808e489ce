#include <doctest.h>

#include <set>

#include "geogrowth/evencox.hpp"
#include "geogrowth/oracle.hpp"
#include "geogrowth/racg.hpp"
#include "support.hpp"

using namespace geogrowth;
using namespace geogrowth::evencox;
using algebra::IntPolynomial;
using algebra::RationalSeries;
using geotest::corpus;
using geotest::ints;

namespace {

Word w(const EvenSystem& sys, std::string_view text) { return coxgraph::parse_word(sys.graph(), text); }

/// Calls f on every word of length <= n over `letters` letters.
template <typename F>
void for_each_word(std::size_t letters, std::size_t n, F&& f) {
  Word x;
  std::function<void()> rec = [&] {
    f(x);
    if (x.size() == n) return;
    for (Vertex v = 0; v < letters; ++v) {
      x.push_back(v);
      rec();
      x.pop_back();
    }
  };
  rec();
}

CoxeterGraph path_4_6() {
  CoxeterGraph::Builder b;
  b.add_vertex("a");
  b.add_vertex("b");
  b.add_vertex("c");
  b.add_edge("a", "b", 4);
  b.add_edge("b", "c", 6);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("dihedral group of order 8") {
  const EvenSystem sys(corpus("dihedral4"));
  CHECK(a_word(sys, 1, 0) == w(sys, "tst"));
  CHECK(count_geodesics_even(sys, 8) == ints({1, 2, 2, 2, 2, 0, 0, 0, 0}));
  CHECK(growth_series_even(sys) == RationalSeries::polynomial(IntPolynomial{1, 2, 2, 2, 2}));
  const std::vector<Word> forbidden{w(sys, "ss"), w(sys, "tt"), w(sys, "ststs"), w(sys, "tstst")};
  CHECK(forbidden_words(sys, 12) == forbidden);

  // Minimal words the scanner rejects: rejected, with both maximal proper factors accepted.
  std::set<Word> minimal;
  for_each_word(2, 9, [&](const Word& x) {
    if (x.empty() || is_geodesic(sys, x)) return;
    if (is_geodesic(sys, Word(x.begin() + 1, x.end())) && is_geodesic(sys, Word(x.begin(), x.end() - 1)))
      minimal.insert(x);
  });
  CHECK(minimal == std::set<Word>(forbidden.begin(), forbidden.end()));
  CHECK_THROWS_AS(is_geodesic(sys, Word{0, 5}), std::out_of_range);
}

TEST_CASE("triangles are rejected") {
  CHECK_THROWS_AS(EvenSystem(corpus("k3k3")), std::invalid_argument);
  CHECK(geodesic_counts(corpus("k3k3"), 5) == racg::growth_counts_racg(corpus("k3k3"), 5));
  CoxeterGraph::Builder b;
  for (const auto* v : {"a", "b", "c"}) b.add_vertex(v);
  b.add_edge("a", "b", 4);
  b.add_edge("b", "c");
  b.add_edge("a", "c");
  CHECK_THROWS_AS(geodesic_counts(std::move(b).build(), 3), std::invalid_argument);
}

TEST_CASE("forbidden words parse uniquely") {
  for (const auto& name : geotest::even_only) {
    CAPTURE(name);
    const EvenSystem sys(corpus(name));
    const auto words = forbidden_words(sys, 11);
    for (const auto& u : words) {
      const auto shape = classify_forbidden(sys, u);
      REQUIRE(shape);
      CHECK(spell(sys, *shape) == u);
      CHECK_FALSE(is_geodesic(sys, u));
      for (std::size_t k = 1; k < shape->blocks.size(); ++k) CHECK(shape->blocks[k] != shape->blocks[k - 1]);
    }
    CHECK(std::is_sorted(words.begin(), words.end(), [](const Word& x, const Word& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    }));
  }
  const EvenSystem d(corpus("dihedral4"));
  CHECK_FALSE(classify_forbidden(d, w(d, "stst")));
  CHECK_FALSE(classify_forbidden(d, w(d, "s")));
}

TEST_CASE("amalgamation and R conditions") {
  const EvenSystem d(corpus("dihedral4"));
  CHECK(amalgamate(w(d, "sts"), w(d, "s"), w(d, "st")) == w(d, "stst"));
  CHECK(amalgamate(w(d, "ss"), w(d, "s"), w(d, "ss")) == w(d, "sss"));
  CHECK(amalgamate(w(d, "stst"), w(d, "stst"), w(d, "stst")) == w(d, "stst"));
  CHECK_THROWS_AS(amalgamate(w(d, "sts"), w(d, "t"), w(d, "ts")), std::invalid_argument);

  CHECK(check_R_conditions(d, {w(d, "ss"), w(d, "ss")}));
  CHECK(check_R_conditions(d, {w(d, "ststs"), w(d, "tstst")}));
  CHECK_FALSE(check_R_conditions(d, {w(d, "ststs"), w(d, "ststs")}));
  CHECK_THROWS_AS(check_R_conditions(d, {w(d, "stst")}), std::invalid_argument);

  const auto c1 = chain_from_sequence(d, {w(d, "ss"), w(d, "ss")});
  CHECK(c1.word == w(d, "sss"));
  CHECK(c1.rank() == 2);
  const auto c2 = chain_from_sequence(d, {w(d, "ss"), w(d, "ststs")});
  CHECK(c2.word == w(d, "sststs"));
  CHECK(c2.length() == 6);
  const auto c3 = chain_from_sequence(d, {w(d, "ststs"), w(d, "tstst")});
  CHECK(c3.word == w(d, "ststst"));
  CHECK(c3.overlaps.front() == w(d, "tsts"));
  CHECK(is_rigid_chain(d, c3));
  CHECK_THROWS_AS(chain_from_sequence(d, {w(d, "ststs"), w(d, "ststs")}), std::invalid_argument);
}

TEST_CASE("chain tables") {
  const EvenSystem d(corpus("dihedral4"));
  const auto t = enumerate_rigid_chains(d, 6, 2);
  CHECK(t.at(1, 2) == 2);
  CHECK(t.at(1, 5) == 2);
  CHECK(t.at(2, 3) == 2);
  // (ss, ststs), (ststs, ss), (ststs, tstst) and their mirror images.
  CHECK(t.at(2, 6) == 6);
  for (std::size_t n = 0; n <= 5; ++n)
    if (n != 2 && n != 5) CHECK(t.at(1, n) == 0);

  const EvenSystem free3(corpus("edgeless3"));
  const auto f = enumerate_rigid_chains(free3, 9, 7);
  for (std::size_t m = 1; m <= 7; ++m)
    for (std::size_t n = 0; n <= 9; ++n) CHECK(f.at(m, n) == (n == m + 1 ? 3 : 0));
}

TEST_CASE("rigid chains by definition versus R-valid sequences") {
  for (const auto* name : {"dihedral4", "squares24", "octagon44", "c6", "infinite_dihedral"}) {
    CAPTURE(name);
    const EvenSystem sys(corpus(name));
    const auto chains = rigid_chains_by_definition(sys, 10, 10);
    std::vector<Chain> valid;
    for (const auto& c : chains) {
      CHECK(is_rigid_chain(sys, c));
      if (check_R_conditions(sys, c.forbidden)) valid.push_back(c);
    }
    // Each R-valid sequence has exactly one chain, and it is the one rebuilt from the sequence.
    CHECK(tabulate(valid, 10, 10) == enumerate_rigid_chains(sys, 10, 10));
    for (const auto& c : valid) {
      const auto rebuilt = chain_from_sequence(sys, c.forbidden);
      CHECK(rebuilt.word == c.word);
      CHECK(rebuilt.overlaps == c.overlaps);
    }
    CHECK(tabulate(chains, 10, 10) == recount_rigid_chains(sys, 10, 10));
  }

  // Rigid, yet the same generator meets twice without an (s, s) member.
  const EvenSystem sq(corpus("squares24"));
  const Chain loose{w(sq, "abadada"), {w(sq, "aba"), w(sq, "adada")}, {w(sq, "a")}};
  CHECK(is_rigid_chain(sq, loose));
  CHECK_FALSE(check_R_conditions(sq, loose.forbidden));
  // Rank three in the dihedral group with overlaps tsts and t.
  const EvenSystem d(corpus("dihedral4"));
  const Chain three{w(d, "ststststst"), {w(d, "ststs"), w(d, "tstst"), w(d, "tstst")}, {w(d, "tsts"), w(d, "t")}};
  CHECK(is_rigid_chain(d, three));
  CHECK_FALSE(check_R_conditions(d, three.forbidden));
}

TEST_CASE("chain counts determine the geodesic counts") {
  for (const auto& name : {"dihedral4", "squares24", "octagon24", "squares44", "octagon44", "c6", "c8",
                           "infinite_dihedral", "edgeless3"}) {
    CAPTURE(name);
    const EvenSystem sys(corpus(name));
    const auto table = recount_rigid_chains(sys, 10, 10);
    CHECK(counts_from_chains(table, sys.generator_count(), 10) == count_geodesics_even(sys, 10));
  }
  // The R-valid table alone undercounts the clusters.
  const EvenSystem c6(corpus("c6"));
  const auto partial = counts_from_chains(enumerate_rigid_chains(c6, 10, 10), 6, 10);
  CHECK(partial[5] == 2862);
  CHECK(count_geodesics_even(c6, 5)[5] == 2874);
  CHECK_THROWS_AS(counts_from_chains(enumerate_rigid_chains(c6, 6, 3), 6, 6), std::invalid_argument);
}

TEST_CASE("scanner agrees with braid closure") {
  SUBCASE("every word up to length 10") {
    for (const auto& g : {corpus("dihedral4"), corpus("infinite_dihedral"), path_4_6()}) {
      const EvenSystem sys(g);
      const std::size_t n = g.vertex_count() == 2 ? 10 : 9;
      std::size_t checked = 0;
      for_each_word(g.vertex_count(), n, [&](const Word& x) {
        ++checked;
        CHECK(is_geodesic(sys, x) == oracle::oracle_is_geodesic(g, x));
      });
      CHECK(checked > 1000);
    }
  }
  SUBCASE("geodesics and their one-letter extensions") {
    for (const auto& name : geotest::even_only) {
      CAPTURE(name);
      const auto g = corpus(name);
      const EvenSystem sys(g);
      for_each_word(g.vertex_count(), 4, [&](const Word& x) { CHECK(is_geodesic(sys, x) == oracle::oracle_is_geodesic(g, x)); });
      // Geodesics of length <= 6 from the oracle, then every extension.
      std::function<void(Word&)> grow = [&](Word& x) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          x.push_back(v);
          const bool geo = oracle::oracle_is_geodesic(g, x);
          CHECK(is_geodesic(sys, x) == geo);
          if (geo && x.size() < 7) grow(x);
          x.pop_back();
        }
      };
      Word x{0};
      grow(x);
    }
  }
}

TEST_CASE("right-angled graphs give the same counts through both pipelines") {
  for (const auto& name : geotest::racg_trianglefree) {
    CAPTURE(name);
    const auto g = corpus(name);
    CHECK(count_geodesics_even(EvenSystem(g), 14) == racg::growth_counts_racg(g, 14));
    CHECK(growth_series_even(EvenSystem(g)) == racg::growth_series_racg(g));
  }
}

TEST_CASE("system comparison") {
  for (const auto& [x, y] : {std::pair{"squares24", "octagon24"}, std::pair{"squares44", "octagon44"},
                             std::pair{"squares24", "octagon42"}}) {
    CAPTURE(x);
    const auto r = compare_systems(corpus(x), corpus(y), 12, 12, 4);
    CHECK(r.hypotheses_hold);
    CHECK(r.counts_equal);
    CHECK(r.series_equal);
    CHECK_FALSE(r.first_difference);
    CHECK(r.chain_tables_equal == true);
    CHECK(r.definition_tables_equal == true);
  }
  const auto r = compare_systems(corpus("c6"), corpus("k3k3"), 6);
  CHECK_FALSE(r.hypotheses_hold);
  CHECK_FALSE(r.stars_isomorphic);
  CHECK(r.first_difference == 5u);
  CHECK(r.a.counts[5] == 2874);
  CHECK(r.b.counts[5] == 2898);
  CHECK_FALSE(r.series_equal);
  CHECK_FALSE(r.chain_tables_equal);

  // Same star, different counts of generators.
  const auto s = compare_systems(corpus("c6"), corpus("c8"), 6);
  CHECK(s.stars_isomorphic);
  CHECK_FALSE(s.same_generator_count);
  CHECK_FALSE(s.hypotheses_hold);
}
