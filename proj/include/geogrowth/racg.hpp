#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "geogrowth/coxgraph.hpp"
#include "geogrowth/geodesic_dfa.hpp"
#include "geogrowth/series.hpp"

namespace geogrowth::racg {

using algebra::BigInt;
using coxgraph::Clique;
using coxgraph::CoxeterGraph;

/// Clique automaton of a right-angled Coxeter group. State 0 is the empty
/// clique (start), then every clique in enumerate_cliques order, then the
/// fail state. Letters are vertex indices.
struct RacgAutomaton {
  GeodesicDfa dfa;
  /// Clique labelling each state; the fail state carries an empty clique.
  std::vector<Clique> cliques;

  std::size_t fail() const { return *dfa.fail; }
};

/// sigma --v--> {v} u (Star(v) n sigma) when v is not in sigma, fail otherwise.
/// Throws std::invalid_argument for graphs with labels other than 2.
RacgAutomaton build_dfa(const CoxeterGraph& g);

/// |Link_j(sigma)|: vertices outside sigma whose star meets sigma in exactly j vertices.
std::size_t deg_j(const CoxeterGraph& g, const Clique& sigma, std::size_t j);
/// |Link_tau(sigma)|: vertices outside sigma whose star meets sigma exactly in tau.
/// Throws std::invalid_argument unless tau is a subset of sigma.
std::size_t deg_tau(const CoxeterGraph& g, const Clique& sigma, const Clique& tau);

/// table[i][m]: number of length-m geodesics whose automaton run ends in a
/// state labelled by an i-clique.
struct SizeProfile {
  std::vector<std::vector<BigInt>> table;

  std::vector<BigInt> totals() const;
  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;
};

/// Propagates per-state counts through the automaton for lengths 0..n.
SizeProfile count_by_state_size(const RacgAutomaton& a, std::size_t n);

/// beta[i][j]: number of letters taking a j-state to an i-state, when this
/// number is the same for every j-state; nullopt otherwise.
std::optional<std::vector<std::vector<BigInt>>> beta_matrix(const RacgAutomaton& a);

/// B_i(m) = sum_j beta[i][j] B_j(m-1) with B_0 = 1 at m = 0. nullopt when
/// beta_matrix does.
std::optional<SizeProfile> recursion_profile(const RacgAutomaton& a, std::size_t n);

std::vector<BigInt> growth_counts_racg(const CoxeterGraph& g, std::size_t n);
algebra::RationalSeries growth_series_racg(const CoxeterGraph& g);

/// (1 - (l-3)z + 2z^2) / (1 + (3-n-l)z + (2-2n+nl)z^2), for n >= 4.
algebra::RationalSeries formula_regular_trianglefree(std::size_t n, std::size_t l);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  /// First failing degree, when not passed.
  std::optional<std::size_t> first_mismatch;
};

/// Series of geodesics classified by their last letters, up to degree n,
/// and the identities relating them for l-regular triangle-free graphs.
struct SuffixReport {
  std::size_t vertices = 0;
  std::size_t degree = 0;
  std::vector<BigInt> growth;
  /// sum over u of E_u: words of length >= 1.
  std::vector<BigInt> last_one;
  /// sum over (u, v) of E_uv.
  std::vector<BigInt> last_two;
  /// sum over oriented edges e = (u, v) of E_uv.
  std::vector<BigInt> last_edge;
  /// sum over (u, v, t) of E_uvt.
  std::vector<BigInt> last_three;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
};

/// Throws std::invalid_argument unless g is right-angled, triangle-free,
/// regular and has at least 4 vertices.
SuffixReport suffix_series_check(const CoxeterGraph& g, std::size_t n);

/// Artin group growth, computed on the double.
std::vector<BigInt> growth_counts_raag(const CoxeterGraph& g, std::size_t n);
algebra::RationalSeries growth_series_raag(const CoxeterGraph& g);

}  // namespace geogrowth::racg
