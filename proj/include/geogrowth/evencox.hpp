#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geogrowth/coxgraph.hpp"
#include "geogrowth/geodesic_dfa.hpp"
#include "geogrowth/series.hpp"

namespace geogrowth::evencox {

using algebra::BigInt;
using coxgraph::CoxeterGraph;
using coxgraph::Vertex;
using coxgraph::Word;

/// Triangle-free even Coxeter system together with its geodesic scanner.
class EvenSystem {
 public:
  /// Throws std::invalid_argument when the graph has a triangle.
  explicit EvenSystem(CoxeterGraph graph);

  const CoxeterGraph& graph() const { return graph_; }
  std::size_t generator_count() const { return graph_.vertex_count(); }

  /// Minimized scanner: accepts exactly the geodesic words.
  const racg::GeodesicDfa& scanner() const { return scanner_; }

 private:
  CoxeterGraph graph_;
  racg::GeodesicDfa scanner_;
};

/// (t, s, t, ..., t) of length m_{s,t} - 1. Throws std::invalid_argument
/// when s and t are not joined.
Word a_word(const EvenSystem& sys, Vertex t, Vertex s);

/// Subset construction over the per-generator pattern automata, before
/// minimization. Rejects every word containing s a_{t1,s} ... a_{tk,s} s
/// with t_i != t_{i+1}.
racg::GeodesicDfa build_scanner(const EvenSystem& sys);

/// Throws std::out_of_range on letters outside the generating set.
bool is_geodesic(const EvenSystem& sys, const Word& w);

std::vector<BigInt> count_geodesics_even(const EvenSystem& sys, std::size_t n);
algebra::RationalSeries growth_series_even(const EvenSystem& sys);

/// A forbidden word s a_{t1,s} ... a_{tk,s} s.
struct ForbiddenShape {
  Vertex s = 0;
  std::vector<Vertex> blocks;

  friend bool operator==(const ForbiddenShape&, const ForbiddenShape&) = default;
};

/// The (unique) parse of w as a forbidden word, if it is one.
std::optional<ForbiddenShape> classify_forbidden(const EvenSystem& sys, const Word& w);
Word spell(const EvenSystem& sys, const ForbiddenShape& shape);

/// All forbidden words of length <= max_len, ordered by length then letters.
std::vector<Word> forbidden_words(const EvenSystem& sys, std::size_t max_len);

/// w1 without its suffix z, then w2. Throws std::invalid_argument unless z
/// is a suffix of w1 and a prefix of w2.
Word amalgamate(const Word& w1, const Word& z, const Word& w2);

/// Throws std::invalid_argument if some element is not a forbidden word.
bool check_R_conditions(const EvenSystem& sys, const std::vector<Word>& seq);

struct Chain {
  Word word;
  std::vector<Word> forbidden;
  std::vector<Word> overlaps;

  std::size_t rank() const { return forbidden.size(); }
  std::size_t length() const { return word.size(); }
};

/// The unique chain of an R-valid sequence. Throws std::invalid_argument
/// when the sequence violates R1-R3 and std::logic_error when the forced
/// overlaps break a chain condition.
Chain chain_from_sequence(const EvenSystem& sys, const std::vector<Word>& seq);

/// Occurrences (start, length) of forbidden factors of w.
std::vector<std::pair<std::size_t, std::size_t>> forbidden_occurrences(const EvenSystem& sys, const Word& w);

/// Rigidity checked from the definition by scanning forbidden factors.
/// Requires a well-formed chain.
bool is_rigid_chain(const EvenSystem& sys, const Chain& chain);

/// q[m][n] for 1 <= m <= max_rank, 0 <= n <= max_len (row 0 unused).
struct ChainTable {
  std::size_t max_len = 0;
  std::size_t max_rank = 0;
  std::vector<std::vector<BigInt>> q;

  ChainTable() = default;
  ChainTable(std::size_t max_len, std::size_t max_rank);
  const BigInt& at(std::size_t rank, std::size_t length) const { return q.at(rank).at(length); }
  friend bool operator==(const ChainTable&, const ChainTable&) = default;
};

/// Counts R-valid sequences by chain length: depth-first extension with
/// overlaps forced by R1/R2.
ChainTable enumerate_rigid_chains(const EvenSystem& sys, std::size_t max_len, std::size_t max_rank);

/// Every chain with any admissible overlaps whose rigidity holds by factor
/// scanning, in depth-first order. This is a superset of the chains of
/// R-valid sequences: a pair such as (a b a, a d a d a) over the overlap (a)
/// is rigid but violates R1.
std::vector<Chain> rigid_chains_by_definition(const EvenSystem& sys, std::size_t max_len, std::size_t max_rank);

ChainTable tabulate(const std::vector<Chain>& chains, std::size_t max_len, std::size_t max_rank);

/// tabulate(rigid_chains_by_definition(...)).
ChainTable recount_rigid_chains(const EvenSystem& sys, std::size_t max_len, std::size_t max_rank);

/// Word counts of the forbidden-factor language from chain counts:
/// 1 / (1 - |S| z - sum_m (-1)^m Q^(m)(z)), truncated at z^n. Needs
/// max_len >= n and max_rank >= n - 1.
std::vector<BigInt> counts_from_chains(const ChainTable& table, std::size_t generators, std::size_t n);

struct SystemSummary {
  std::size_t generators = 0;
  bool triangle_free = false;
  bool star_regular = false;
  std::optional<std::pair<Vertex, Vertex>> star_witness;
  std::vector<BigInt> counts;
  algebra::RationalSeries series = algebra::RationalSeries::polynomial(algebra::IntPolynomial{1});
  /// Only for triangle-free systems: R-valid sequences, and rigid chains by definition.
  std::optional<ChainTable> chains;
  std::optional<ChainTable> rigid_chains;
};

struct ComparisonReport {
  SystemSummary a;
  SystemSummary b;
  bool same_generator_count = false;
  /// Labelled isomorphism between the stars of the first vertices.
  bool stars_isomorphic = false;
  /// Triangle-free, star-regular, equal |S| and isomorphic stars.
  bool hypotheses_hold = false;
  bool counts_equal = false;
  std::optional<std::size_t> first_difference;
  bool series_equal = false;
  std::optional<bool> chain_tables_equal;
  /// Same comparison for the tables of rigid chains by definition.
  std::optional<bool> definition_tables_equal;
};

/// Geodesic counts of any supported graph: the scanner for triangle-free
/// graphs, the clique automaton for right-angled graphs with triangles.
/// Throws std::invalid_argument otherwise.
std::vector<BigInt> geodesic_counts(const CoxeterGraph& g, std::size_t n);
algebra::RationalSeries geodesic_series(const CoxeterGraph& g);

ComparisonReport compare_systems(const CoxeterGraph& a, const CoxeterGraph& b, std::size_t n,
                                 std::size_t chain_max_len = 12, std::size_t chain_max_rank = 4);

}  // namespace geogrowth::evencox
