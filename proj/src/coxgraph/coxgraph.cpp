#include "geogrowth/coxgraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace geogrowth::coxgraph {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Vertex CoxeterGraph::Builder::add_vertex(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty vertex name");
  if (index_.contains(name)) throw std::invalid_argument("duplicate vertex '" + name + "'");
  const Vertex v = names_.size();
  index_.emplace(name, v);
  names_.push_back(std::move(name));
  return v;
}

void CoxeterGraph::Builder::add_edge(Vertex u, Vertex v, int label) {
  if (u >= names_.size() || v >= names_.size()) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop at '" + names_[u] + "'");
  if (label < 2) throw std::invalid_argument("label " + std::to_string(label) + " is below 2");
  if (label % 2 != 0) throw std::invalid_argument("odd label " + std::to_string(label));
  const auto key = std::minmax(u, v);
  if (!edges_.emplace(std::pair{key.first, key.second}, label).second)
    throw std::invalid_argument("duplicate edge " + names_[u] + " " + names_[v]);
}

void CoxeterGraph::Builder::add_edge(std::string_view u, std::string_view v, int label) {
  const auto a = find(u);
  if (!a) throw std::invalid_argument("unknown vertex '" + std::string(u) + "'");
  const auto b = find(v);
  if (!b) throw std::invalid_argument("unknown vertex '" + std::string(v) + "'");
  add_edge(*a, *b, label);
}

std::optional<Vertex> CoxeterGraph::Builder::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CoxeterGraph CoxeterGraph::Builder::build() && {
  CoxeterGraph g;
  g.names_ = std::move(names_);
  g.index_ = std::move(index_);
  g.edges_ = std::move(edges_);
  g.neighbors_.resize(g.names_.size());
  for (const auto& [e, m] : g.edges_) {
    g.neighbors_[e.first].push_back(e.second);
    g.neighbors_[e.second].push_back(e.first);
  }
  for (auto& n : g.neighbors_) std::sort(n.begin(), n.end());
  return g;
}

CoxeterGraph CoxeterGraph::parse(std::string_view text) {
  Builder builder;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    try {
      if (tokens[0] == "vertex") {
        if (tokens.size() != 2) throw std::invalid_argument("expected: vertex <name>");
        builder.add_vertex(tokens[1]);
      } else if (tokens[0] == "edge") {
        if (tokens.size() != 3 && tokens.size() != 4)
          throw std::invalid_argument("expected: edge <u> <v> [m]");
        int label = 2;
        if (tokens.size() == 4) {
          std::size_t used = 0;
          try {
            label = std::stoi(tokens[3], &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used != tokens[3].size()) throw std::invalid_argument("malformed label '" + tokens[3] + "'");
        }
        builder.add_edge(tokens[1], tokens[2], label);
      } else {
        throw std::invalid_argument("unknown directive '" + tokens[0] + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_number, e.what());
    }
  }
  return std::move(builder).build();
}

CoxeterGraph CoxeterGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

CoxeterGraph parse_graph(std::string_view text) { return CoxeterGraph::parse(text); }

std::optional<Vertex> CoxeterGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex CoxeterGraph::vertex(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

int CoxeterGraph::label(Vertex u, Vertex v) const {
  if (u == v) return 0;
  const auto key = std::minmax(u, v);
  auto it = edges_.find({key.first, key.second});
  return it == edges_.end() ? 0 : it->second;
}

bool CoxeterGraph::adjacent(Vertex u, Vertex v) const {
  const auto& n = neighbors_.at(u);
  return std::binary_search(n.begin(), n.end(), v);
}

bool CoxeterGraph::is_right_angled() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.second == 2; });
}

std::string CoxeterGraph::to_text() const {
  std::ostringstream out;
  for (const auto& n : names_) out << "vertex " << n << "\n";
  for (const auto& [e, m] : edges_) {
    out << "edge " << names_[e.first] << " " << names_[e.second];
    if (m != 2) out << " " << m;
    out << "\n";
  }
  return out.str();
}

bool is_clique(const CoxeterGraph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  }
  return true;
}

namespace {

void extend_cliques(const CoxeterGraph& g, Clique& current, std::vector<std::vector<Clique>>& out) {
  if (out.size() <= current.size()) out.resize(current.size() + 1);
  out[current.size()].push_back(current);
  for (Vertex v : g.neighbors(current.back())) {
    if (v <= current.back()) continue;
    bool joined = true;
    for (Vertex u : current)
      if (!g.adjacent(u, v)) {
        joined = false;
        break;
      }
    if (!joined) continue;
    current.push_back(v);
    extend_cliques(g, current, out);
    current.pop_back();
  }
}

void require_clique(const CoxeterGraph& g, std::span<const Vertex> sigma) {
  if (!is_clique(g, sigma)) throw std::invalid_argument("vertex set is not a clique");
}

}  // namespace

std::vector<std::vector<Clique>> enumerate_cliques(const CoxeterGraph& g) {
  std::vector<std::vector<Clique>> out(1);
  Clique current;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    current.assign(1, v);
    extend_cliques(g, current, out);
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<Vertex> link(const CoxeterGraph& g, std::span<const Vertex> sigma) {
  require_clique(g, sigma);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (std::find(sigma.begin(), sigma.end(), v) != sigma.end()) continue;
    if (std::all_of(sigma.begin(), sigma.end(), [&](Vertex u) { return g.adjacent(u, v); })) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> star(const CoxeterGraph& g, std::span<const Vertex> sigma) {
  std::vector<Vertex> out = link(g, sigma);
  out.insert(out.end(), sigma.begin(), sigma.end());
  std::sort(out.begin(), out.end());
  return out;
}

algebra::IntPolynomial f_polynomial(const CoxeterGraph& g) {
  const auto cliques = enumerate_cliques(g);
  std::vector<algebra::BigInt> c{1};
  for (std::size_t k = 1; k < cliques.size(); ++k) c.emplace_back(cliques[k].size());
  return algebra::IntPolynomial(std::move(c));
}

bool is_triangle_free(const CoxeterGraph& g) {
  for (const auto& [e, m] : g.edges())
    for (Vertex w : g.neighbors(e.first))
      if (w != e.second && g.adjacent(w, e.second)) return false;
  return true;
}

std::optional<std::size_t> regular_degree(const CoxeterGraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const std::size_t d = g.neighbors(0).size();
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.neighbors(v).size() != d) return std::nullopt;
  return d;
}

RegularityReport link_regularity(const CoxeterGraph& g) {
  RegularityReport report;
  const auto cliques = enumerate_cliques(g);
  for (std::size_t k = 1; k < cliques.size(); ++k) {
    const auto& level = cliques[k];
    const std::size_t first = link(g, level.front()).size();
    bool constant = true;
    for (const auto& sigma : level) {
      if (link(g, sigma).size() != first) {
        constant = false;
        if (!report.witness) report.witness = std::pair{level.front(), sigma};
        break;
      }
    }
    if (constant) report.link_sizes[k] = first;
  }
  report.is_link_regular = !report.witness.has_value();
  return report;
}

StarRegularity star_regularity(const CoxeterGraph& g) {
  StarRegularity result{true, std::nullopt};
  if (g.vertex_count() == 0) return result;
  const Clique first{0};
  const auto reference = star(g, first);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    const Clique single{v};
    const auto s = star(g, single);
    if (!labelled_isomorphic(g, reference, g, s)) {
      result.is_star_regular = false;
      result.witness = std::pair<Vertex, Vertex>{0, v};
      break;
    }
  }
  return result;
}

CoxeterGraph induced_subgraph(const CoxeterGraph& g, std::span<const Vertex> vertices) {
  CoxeterGraph::Builder b;
  for (Vertex v : vertices) b.add_vertex(g.name(v));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (int m = g.label(vertices[i], vertices[j]); m != 0) b.add_edge(i, j, m);
  return std::move(b).build();
}

namespace {

/// Sorted labels from x to the other members of `within`; its size is the
/// degree inside the induced subgraph.
std::vector<int> incident_labels(const CoxeterGraph& g, Vertex x, std::span<const Vertex> within) {
  std::vector<int> labels;
  for (Vertex y : within)
    if (int m = g.label(x, y); m != 0) labels.push_back(m);
  std::sort(labels.begin(), labels.end());
  return labels;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const CoxeterGraph& a, std::span<const Vertex> va, const CoxeterGraph& b,
                    std::span<const Vertex> vb, const std::function<bool(const std::vector<Vertex>&)>& visit)
      : a_(a), va_(va), b_(b), vb_(vb), visit_(visit) {}

  void run() {
    if (va_.size() != vb_.size()) return;
    const std::size_t n = va_.size();
    for (Vertex x : va_) invariant_a_.push_back(incident_labels(a_, x, va_));
    for (Vertex y : vb_) invariant_b_.push_back(incident_labels(b_, y, vb_));
    {
      auto sa = invariant_a_, sb = invariant_b_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return;
    }
    // Assign positions connected to earlier ones first for early pruning.
    std::vector<bool> placed(n, false);
    while (order_.size() < n) {
      std::size_t best = n;
      std::size_t best_links = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (placed[i]) continue;
        std::size_t links = 0;
        for (std::size_t j : order_)
          if (a_.label(va_[i], va_[j]) != 0) ++links;
        if (best == n || links > best_links ||
            (links == best_links && invariant_a_[i].size() > invariant_a_[best].size())) {
          best = i;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
    image_.assign(n, 0);
    used_.assign(n, false);
    extend(0);
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      std::vector<Vertex> mapping(order_.size());
      for (std::size_t i = 0; i < order_.size(); ++i) mapping[i] = vb_[image_[i]];
      return visit_(mapping);
    }
    const std::size_t i = order_[depth];
    for (std::size_t c = 0; c < vb_.size(); ++c) {
      if (used_[c] || invariant_b_[c] != invariant_a_[i]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const std::size_t j = order_[d];
        consistent = a_.label(va_[i], va_[j]) == b_.label(vb_[c], vb_[image_[j]]);
      }
      if (!consistent) continue;
      used_[c] = true;
      image_[i] = c;
      const bool keep_going = extend(depth + 1);
      used_[c] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  const CoxeterGraph& a_;
  std::span<const Vertex> va_;
  const CoxeterGraph& b_;
  std::span<const Vertex> vb_;
  const std::function<bool(const std::vector<Vertex>&)>& visit_;
  std::vector<std::vector<int>> invariant_a_, invariant_b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

void for_each_labelled_isomorphism(const CoxeterGraph& a, std::span<const Vertex> va,
                                   const CoxeterGraph& b, std::span<const Vertex> vb,
                                   const std::function<bool(const std::vector<Vertex>&)>& visit) {
  IsomorphismSearch(a, va, b, vb, visit).run();
}

bool labelled_isomorphic(const CoxeterGraph& a, std::span<const Vertex> va, const CoxeterGraph& b,
                         std::span<const Vertex> vb) {
  bool found = false;
  for_each_labelled_isomorphism(a, va, b, vb, [&](const std::vector<Vertex>&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<std::vector<Vertex>> automorphisms(const CoxeterGraph& g, std::size_t limit) {
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  std::vector<std::vector<Vertex>> out;
  bool overflow = false;
  for_each_labelled_isomorphism(g, all, g, all, [&](const std::vector<Vertex>& p) {
    if (out.size() >= limit) {
      overflow = true;
      return false;
    }
    out.push_back(p);
    return true;
  });
  if (overflow) return {all};
  std::sort(out.begin(), out.end());
  return out;
}

CoxeterGraph double_graph(const CoxeterGraph& g) {
  if (!g.is_right_angled()) throw std::invalid_argument("the double is only defined for right-angled graphs");
  CoxeterGraph::Builder b;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    b.add_vertex(g.name(v) + "^1");
    b.add_vertex(g.name(v) + "^2");
  }
  for (const auto& [e, m] : g.edges())
    for (Vertex i = 0; i < 2; ++i)
      for (Vertex j = 0; j < 2; ++j) b.add_edge(2 * e.first + i, 2 * e.second + j, 2);
  return std::move(b).build();
}

std::map<std::size_t, std::set<algebra::IntPolynomial>> klink_f_polynomials(const CoxeterGraph& g) {
  std::map<std::size_t, std::set<algebra::IntPolynomial>> out;
  const auto cliques = enumerate_cliques(g);
  for (std::size_t k = 1; k < cliques.size(); ++k)
    for (const auto& sigma : cliques[k]) {
      const auto l = link(g, sigma);
      out[k].insert(f_polynomial(induced_subgraph(g, l)));
    }
  return out;
}

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

std::string rooted_code(const Adjacency& adj, std::size_t root, std::size_t parent) {
  std::vector<std::string> children;
  for (std::size_t c : adj[root])
    if (c != parent) children.push_back(rooted_code(adj, c, root));
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  return code + ")";
}

std::string tree_code(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) return std::to_string(n);
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) leaves.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= leaves.size();
    std::vector<std::size_t> next;
    for (std::size_t leaf : leaves)
      for (std::size_t u : adj[leaf])
        if (--degree[u] == 1) next.push_back(u);
    leaves = std::move(next);
  }
  std::string best;
  for (std::size_t center : leaves) {
    std::string code = rooted_code(adj, center, n);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

std::vector<CoxeterGraph> nonisomorphic_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<Adjacency> level{Adjacency(1)};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Adjacency> seen;
    for (const auto& tree : level)
      for (std::size_t v = 0; v < tree.size(); ++v) {
        Adjacency grown = tree;
        grown.emplace_back();
        grown[v].push_back(size - 1);
        grown[size - 1].push_back(v);
        seen.emplace(tree_code(grown), std::move(grown));
      }
    level.clear();
    for (auto& [code, tree] : seen) level.push_back(std::move(tree));
  }
  std::vector<CoxeterGraph> out;
  for (const auto& tree : level) {
    CoxeterGraph::Builder b;
    for (std::size_t v = 0; v < tree.size(); ++v) b.add_vertex("v" + std::to_string(v));
    for (std::size_t v = 0; v < tree.size(); ++v)
      for (std::size_t u : tree[v])
        if (v < u) b.add_edge(v, u, 2);
    out.push_back(std::move(b).build());
  }
  return out;
}

namespace {

bool single_character_names(const CoxeterGraph& g) {
  return std::all_of(g.names().begin(), g.names().end(), [](const std::string& n) { return n.size() == 1; });
}

}  // namespace

Word parse_word(const CoxeterGraph& g, std::string_view text) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  Word w;
  if (tokens.size() == 1 && !g.find(tokens[0]) && single_character_names(g)) {
    for (char c : tokens[0]) w.push_back(g.vertex(std::string(1, c)));
    return w;
  }
  for (const auto& t : tokens) w.push_back(g.vertex(t));
  return w;
}

std::string format_word(const CoxeterGraph& g, const Word& w) {
  const bool compact = single_character_names(g);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !compact) out += ' ';
    out += g.name(w[i]);
  }
  return out;
}

}  // namespace geogrowth::coxgraph
