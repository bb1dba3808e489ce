#pragma once

// Randomized checks of the braid-move oracle, shared by the unit tests and
// the acceptance runner. Each returns how many cases were exercised and the
// first failure, if any.

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "geogrowth/coxgraph.hpp"
#include "geogrowth/oracle.hpp"
#include "support.hpp"

namespace geotest {

using geogrowth::coxgraph::Vertex;
using geogrowth::coxgraph::Word;
namespace oracle = geogrowth::oracle;

struct PropertyResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string example;

  bool ok(std::size_t min_cases) const { return failures == 0 && cases >= min_cases; }
  void fail(const std::string& what) {
    if (failures++ == 0) example = what;
  }
};

inline const std::vector<std::string> property_systems{"dihedral4", "squares24", "squares44", "octagon44",
                                                       "octagon42", "c6",        "cube",      "infinite_dihedral"};

inline std::vector<CoxeterGraph> load_property_systems() {
  std::vector<CoxeterGraph> out;
  for (const auto& n : property_systems) out.push_back(corpus(n));
  return out;
}

inline std::string show(const CoxeterGraph& g, const Word& w) {
  return "'" + geogrowth::coxgraph::format_word(g, w) + "'";
}

inline Word random_word(std::mt19937& rng, const CoxeterGraph& g, std::size_t len) {
  Word w(len);
  for (auto& x : w) x = uniform(rng, 0, g.vertex_count() - 1);
  return w;
}

/// A geodesic grown letter by letter, each candidate letter tested by the oracle.
inline Word random_geodesic(std::mt19937& rng, const CoxeterGraph& g, std::size_t len) {
  Word w;
  for (std::size_t tries = 0; w.size() < len && tries < 20 * len; ++tries) {
    w.push_back(uniform(rng, 0, g.vertex_count() - 1));
    if (!oracle::oracle_is_geodesic(g, w)) w.pop_back();
  }
  return w;
}

/// Braid moves and deletions of an adjacent equal pair keep the length (for
/// moves) and the letter parities.
inline PropertyResult braid_moves_preserve_length_and_parity(std::uint32_t seed, std::size_t cases) {
  const auto systems = load_property_systems();
  std::mt19937 rng(seed);
  PropertyResult r;
  while (r.cases < cases) {
    const auto& g = systems[uniform(rng, 0, systems.size() - 1)];
    // Geodesics carry more braid moves than uniform words.
    const Word w = uniform(rng, 0, 1) ? random_geodesic(rng, g, uniform(rng, 2, 12)) : random_word(rng, g, uniform(rng, 2, 12));
    const auto parity = oracle::parity_vector(g, w);
    bool any = false;
    for (const auto& v : oracle::braid_neighbors(g, w)) {
      any = true;
      if (v.size() != w.size() || oracle::parity_vector(g, v) != parity) r.fail(show(g, w) + " -> " + show(g, v));
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == w[i + 1]) {
        any = true;
        Word v = w;
        v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i + 2));
        if (oracle::parity_vector(g, v) != parity) r.fail(show(g, w) + " deletes to " + show(g, v));
      }
    if (any) ++r.cases;
  }
  return r;
}

/// For geodesic w and any generator s, |ws| = |w| + 1 exactly when ws is
/// geodesic, and |w| - 1 otherwise.
inline PropertyResult length_changes_by_one(std::uint32_t seed, std::size_t cases) {
  const auto systems = load_property_systems();
  std::mt19937 rng(seed);
  PropertyResult r;
  for (; r.cases < cases; ++r.cases) {
    const auto& g = systems[uniform(rng, 0, systems.size() - 1)];
    Word w = random_geodesic(rng, g, uniform(rng, 0, 9));
    const std::size_t len = w.size();
    w.push_back(uniform(rng, 0, g.vertex_count() - 1));
    const bool geodesic = oracle::oracle_is_geodesic(g, w);
    const std::size_t reduced = oracle::oracle_reduce(g, w).size();
    const bool ok = geodesic ? reduced == len + 1 : reduced + 1 == len;
    if (!ok) r.fail(show(g, w) + " reduces to length " + std::to_string(reduced));
  }
  return r;
}

/// Words over s and a_t = (t s t ... t) of length m_{s,t} - 1 for t in the
/// link of s, with s used at most once and no two equal a-letters in a row
/// once s is dropped, spell geodesics over the generators.
inline PropertyResult centralizer_words_are_geodesic(std::uint32_t seed, std::size_t cases) {
  const auto systems = load_property_systems();
  std::mt19937 rng(seed);
  PropertyResult r;
  while (r.cases < cases) {
    const auto& g = systems[uniform(rng, 0, systems.size() - 1)];
    const Vertex s = uniform(rng, 0, g.vertex_count() - 1);
    const auto& link = g.neighbors(s);
    if (link.empty()) continue;
    std::vector<Vertex> letters;  // link positions
    const std::size_t k = uniform(rng, 1, 6);
    while (letters.size() < k) {
      const Vertex t = uniform(rng, 0, link.size() - 1);
      if (!letters.empty() && letters.back() == t) {
        if (link.size() == 1) break;
        continue;
      }
      letters.push_back(t);
    }
    const std::size_t s_at = uniform(rng, 0, 1) ? uniform(rng, 0, letters.size()) : letters.size() + 1;
    Word spelled;
    for (std::size_t i = 0; i <= letters.size(); ++i) {
      if (i == s_at) spelled.push_back(s);
      if (i == letters.size()) break;
      const Vertex t = link[letters[i]];
      const auto m = static_cast<std::size_t>(g.label(s, t));
      for (std::size_t j = 0; j + 1 < m; ++j) spelled.push_back(j % 2 == 0 ? t : s);
    }
    ++r.cases;
    if (!oracle::oracle_is_geodesic(g, spelled)) r.fail(show(g, spelled) + " is not geodesic");
  }
  return r;
}

/// Every prefix of a geodesic is geodesic.
inline PropertyResult prefixes_of_geodesics(std::uint32_t seed, std::size_t cases) {
  const auto systems = load_property_systems();
  std::mt19937 rng(seed);
  PropertyResult r;
  while (r.cases < cases) {
    const auto& g = systems[uniform(rng, 0, systems.size() - 1)];
    const Word w = random_word(rng, g, uniform(rng, 1, 10));
    if (!oracle::oracle_is_geodesic(g, w)) continue;
    ++r.cases;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (!oracle::oracle_is_geodesic(g, Word(w.begin(), w.begin() + static_cast<long>(k))))
        r.fail(show(g, w) + " has a non-geodesic prefix of length " + std::to_string(k));
  }
  return r;
}

/// If s w and w t are geodesic but s w t is not, then s = t and s w t
/// represents the same element as w. Words of length at most 8.
inline PropertyResult deletion_law(std::uint32_t seed, std::size_t cases) {
  const auto systems = load_property_systems();
  std::mt19937 rng(seed);
  PropertyResult r;
  while (r.cases < cases) {
    const auto& g = systems[uniform(rng, 0, systems.size() - 1)];
    const Word w = random_geodesic(rng, g, uniform(rng, 0, 6));
    const Vertex s = uniform(rng, 0, g.vertex_count() - 1);
    // Half the draws take t = s, where the antecedent is most often met.
    const Vertex t = uniform(rng, 0, 1) ? s : uniform(rng, 0, g.vertex_count() - 1);
    Word sw{s}, wt = w, swt{s};
    sw.insert(sw.end(), w.begin(), w.end());
    wt.push_back(t);
    swt.insert(swt.end(), w.begin(), w.end());
    swt.push_back(t);
    if (!oracle::oracle_is_geodesic(g, sw) || !oracle::oracle_is_geodesic(g, wt) || oracle::oracle_is_geodesic(g, swt))
      continue;
    ++r.cases;
    if (s != t) {
      r.fail(show(g, swt) + " with s != t");
      continue;
    }
    // Reduced words of one element are braid-equivalent.
    const auto reduced = oracle::oracle_reduce(g, swt);
    const auto cls = oracle::braid_class(g, w);
    if (!std::binary_search(cls.members.begin(), cls.members.end(), reduced))
      r.fail(show(g, swt) + " reduces to " + show(g, reduced) + ", not to " + show(g, w));
  }
  return r;
}

}  // namespace geotest
