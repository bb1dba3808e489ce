#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geogrowth/polynomial.hpp"

namespace geogrowth::coxgraph {

/// Index of a vertex in declaration order.
using Vertex = std::size_t;

/// Sorted vertex indices spanning a complete subgraph. The empty clique only
/// appears as the start state of the geodesic automaton.
using Clique = std::vector<Vertex>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Finite simplicial graph with even edge labels m >= 2. A missing edge
/// means m = 0 (no relation); no zero label is ever stored.
class CoxeterGraph {
 public:
  /// Incremental validating constructor used by the parser and by graph
  /// transformations. Errors are std::invalid_argument.
  class Builder {
   public:
    Vertex add_vertex(std::string name);
    void add_edge(Vertex u, Vertex v, int label = 2);
    void add_edge(std::string_view u, std::string_view v, int label = 2);
    std::optional<Vertex> find(std::string_view name) const;
    CoxeterGraph build() &&;

   private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::map<std::pair<Vertex, Vertex>, int> edges_;
  };

  CoxeterGraph() = default;

  /// Line-based format: `vertex <name>`, `edge <u> <v> [m]`, '#' comments.
  /// Throws ParseError carrying the offending line number.
  static CoxeterGraph parse(std::string_view text);
  static CoxeterGraph load(const std::string& path);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(std::string_view name) const;
  /// Like find, but throws std::invalid_argument on unknown names.
  Vertex vertex(std::string_view name) const;

  /// Edge label m_{u,v}; 0 when u and v are not joined (including u == v).
  int label(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  /// Sorted neighbours of v.
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(v); }
  /// Edges keyed by (u, v) with u < v.
  const std::map<std::pair<Vertex, Vertex>, int>& edges() const { return edges_; }

  bool is_right_angled() const;

  /// Serializes back to the text format (round-trips through parse).
  std::string to_text() const;

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::map<std::pair<Vertex, Vertex>, int> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
};

CoxeterGraph parse_graph(std::string_view text);

bool is_clique(const CoxeterGraph& g, std::span<const Vertex> vertices);

/// All nonempty cliques; result[k] lists the cliques of size k in
/// lexicographic order (result[0] is empty).
std::vector<std::vector<Clique>> enumerate_cliques(const CoxeterGraph& g);

/// Vertices outside sigma joined to every member of sigma. Throws
/// std::invalid_argument when sigma is not a clique.
std::vector<Vertex> link(const CoxeterGraph& g, std::span<const Vertex> sigma);
/// link(sigma) together with sigma itself.
std::vector<Vertex> star(const CoxeterGraph& g, std::span<const Vertex> sigma);

/// 1 + f_0 t + f_1 t^2 + ..., f_i = number of (i+1)-cliques.
algebra::IntPolynomial f_polynomial(const CoxeterGraph& g);

bool is_triangle_free(const CoxeterGraph& g);

/// The graph is l-regular for the returned l.
std::optional<std::size_t> regular_degree(const CoxeterGraph& g);

struct RegularityReport {
  bool is_link_regular = false;
  /// clique size -> |Link| for every size at which the link size is constant.
  std::map<std::size_t, std::size_t> link_sizes;
  /// Two cliques of equal size with different link sizes.
  std::optional<std::pair<Clique, Clique>> witness;
};

RegularityReport link_regularity(const CoxeterGraph& g);

struct StarRegularity {
  bool is_star_regular = false;
  std::optional<std::pair<Vertex, Vertex>> witness;
};

StarRegularity star_regularity(const CoxeterGraph& g);

/// Induced subgraph on `vertices`, keeping names, labels and the given order.
CoxeterGraph induced_subgraph(const CoxeterGraph& g, std::span<const Vertex> vertices);

/// Calls `visit` with every label-preserving bijection from the induced
/// subgraph a[va] to b[vb] (as a map from positions in va to vertices of b)
/// until it returns false. Brute-force backtracking, pruned on degree and
/// incident-label multisets.
void for_each_labelled_isomorphism(const CoxeterGraph& a, std::span<const Vertex> va,
                                   const CoxeterGraph& b, std::span<const Vertex> vb,
                                   const std::function<bool(const std::vector<Vertex>&)>& visit);

bool labelled_isomorphic(const CoxeterGraph& a, std::span<const Vertex> va, const CoxeterGraph& b,
                         std::span<const Vertex> vb);

/// Label-preserving automorphisms as vertex permutations; identity first.
/// Returns only the identity if there are more than `limit` of them.
std::vector<std::vector<Vertex>> automorphisms(const CoxeterGraph& g, std::size_t limit = 100000);

/// The double: vertices v^1, v^2 per vertex v; v^i ~ u^j iff v ~ u.
/// Requires a right-angled graph.
CoxeterGraph double_graph(const CoxeterGraph& g);

/// clique size -> distinct f-polynomials of the K-links of cliques of that size.
std::map<std::size_t, std::set<algebra::IntPolynomial>> klink_f_polynomials(const CoxeterGraph& g);

/// A word over the vertex set.
using Word = std::vector<Vertex>;

/// Reads letters separated by spaces or commas. A single token that is not a
/// vertex name is split into characters when every vertex name is a single
/// character, so "stst" works for the dihedral graph. Throws
/// std::invalid_argument on unknown letters.
Word parse_word(const CoxeterGraph& g, std::string_view text);
/// Letters joined by spaces, or concatenated when all names are single characters.
std::string format_word(const CoxeterGraph& g, const Word& w);

/// One representative of each isomorphism class of trees on n vertices,
/// vertices named 0..n-1.
std::vector<CoxeterGraph> nonisomorphic_trees(std::size_t n);

}  // namespace geogrowth::coxgraph
