#include "geogrowth/evencox.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "geogrowth/racg.hpp"

namespace geogrowth::evencox {

namespace {

std::size_t label_of(const CoxeterGraph& g, Vertex s, Vertex t) {
  return static_cast<std::size_t>(g.label(s, t));
}

}  // namespace

EvenSystem::EvenSystem(CoxeterGraph graph) : graph_(std::move(graph)) {
  if (!coxgraph::is_triangle_free(graph_))
    throw std::invalid_argument("even Coxeter systems are only supported on triangle-free graphs");
  scanner_ = build_scanner(*this).minimized();
}

Word a_word(const EvenSystem& sys, Vertex t, Vertex s) {
  const std::size_t m = label_of(sys.graph(), s, t);
  if (m == 0) throw std::invalid_argument("a_word needs joined generators");
  Word w;
  for (std::size_t i = 0; i + 1 < m; ++i) w.push_back(i % 2 == 0 ? t : s);
  return w;
}

racg::GeodesicDfa build_scanner(const EvenSystem& sys) {
  const CoxeterGraph& g = sys.graph();
  const std::size_t n = g.vertex_count();

  // Pattern states: 0 waits anywhere, 1 has seen a forbidden word, 2 + s has
  // read the opening s, and (s, t, pos) has read pos letters of a block a_{t,s}.
  constexpr std::size_t waiting = 0;
  constexpr std::size_t matched = 1;
  std::map<std::tuple<Vertex, Vertex, std::size_t>, std::size_t> block_state;
  std::size_t count = 2 + n;
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t : g.neighbors(s))
      for (std::size_t pos = 1; pos < label_of(g, s, t); ++pos) block_state[{s, t, pos}] = count++;

  std::vector<std::vector<std::vector<std::size_t>>> delta(count, std::vector<std::vector<std::size_t>>(n));
  for (Vertex x = 0; x < n; ++x) {
    delta[waiting][x] = {waiting, 2 + x};
    delta[2 + x][x].push_back(matched);
  }
  for (const auto& [key, id] : block_state) {
    const auto [s, t, pos] = key;
    const std::size_t m = label_of(g, s, t);
    if (pos == 1) delta[2 + s][t].push_back(id);
    if (pos + 1 < m) {
      // Letter pos+1 (1-based) of t s t ... t is t when pos+1 is odd.
      const Vertex expected = (pos + 1) % 2 == 1 ? t : s;
      delta[id][expected].push_back(block_state.at({s, t, pos + 1}));
    } else {
      delta[id][s].push_back(matched);
      for (Vertex u : g.neighbors(s))
        if (u != t) delta[id][u].push_back(block_state.at({s, u, 1}));
    }
  }

  racg::GeodesicDfa dfa;
  dfa.alphabet_size = n;
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::vector<std::size_t>> subsets;
  const std::vector<std::size_t> dead{matched};
  auto intern = [&](std::vector<std::size_t> subset) {
    if (std::binary_search(subset.begin(), subset.end(), matched)) subset = dead;
    auto [it, inserted] = index.emplace(subset, subsets.size());
    if (inserted) subsets.push_back(std::move(subset));
    return it->second;
  };
  dfa.start = intern({waiting});
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Vertex x = 0; x < n; ++x) {
      std::vector<std::size_t> target;
      if (subsets[i] == dead) {
        target = dead;
      } else {
        for (std::size_t q : subsets[i]) target.insert(target.end(), delta[q][x].begin(), delta[q][x].end());
        std::sort(target.begin(), target.end());
        target.erase(std::unique(target.begin(), target.end()), target.end());
      }
      const std::size_t j = intern(std::move(target));
      if (dfa.transitions.size() < (i + 1) * n) dfa.transitions.resize((i + 1) * n);
      dfa.transitions[i * n + x] = j;
    }
  }
  dfa.state_count = subsets.size();
  dfa.transitions.resize(dfa.state_count * n);
  dfa.accepting.assign(dfa.state_count, true);
  if (auto it = index.find(dead); it != index.end()) {
    dfa.fail = it->second;
    dfa.accepting[it->second] = false;
  }
  return dfa;
}

bool is_geodesic(const EvenSystem& sys, const Word& w) { return sys.scanner().accepts(w); }

std::vector<BigInt> count_geodesics_even(const EvenSystem& sys, std::size_t n) {
  return sys.scanner().count_words(n);
}

algebra::RationalSeries growth_series_even(const EvenSystem& sys) { return racg::language_series(sys.scanner()); }

std::optional<ForbiddenShape> classify_forbidden(const EvenSystem& sys, const Word& w) {
  const CoxeterGraph& g = sys.graph();
  if (w.size() < 2 || w.front() != w.back()) return std::nullopt;
  ForbiddenShape shape{w.front(), {}};
  std::size_t p = 1;
  const std::size_t end = w.size() - 1;
  while (p < end) {
    const Vertex t = w[p];
    if (!g.adjacent(shape.s, t)) return std::nullopt;
    if (!shape.blocks.empty() && shape.blocks.back() == t) return std::nullopt;
    const std::size_t len = label_of(g, shape.s, t) - 1;
    if (p + len > end) return std::nullopt;
    for (std::size_t i = 0; i < len; ++i)
      if (w[p + i] != (i % 2 == 0 ? t : shape.s)) return std::nullopt;
    shape.blocks.push_back(t);
    p += len;
  }
  return shape;
}

Word spell(const EvenSystem& sys, const ForbiddenShape& shape) {
  Word w{shape.s};
  for (Vertex t : shape.blocks) {
    const Word a = a_word(sys, t, shape.s);
    w.insert(w.end(), a.begin(), a.end());
  }
  w.push_back(shape.s);
  return w;
}

std::vector<Word> forbidden_words(const EvenSystem& sys, std::size_t max_len) {
  const CoxeterGraph& g = sys.graph();
  std::vector<Word> out;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    // Depth-first over block sequences with no two equal neighbours.
    std::vector<std::pair<ForbiddenShape, std::size_t>> stack{{ForbiddenShape{s, {}}, 2}};
    while (!stack.empty()) {
      auto [shape, length] = std::move(stack.back());
      stack.pop_back();
      if (length > max_len) continue;
      out.push_back(spell(sys, shape));
      for (Vertex t : g.neighbors(s)) {
        if (!shape.blocks.empty() && shape.blocks.back() == t) continue;
        ForbiddenShape longer = shape;
        longer.blocks.push_back(t);
        stack.emplace_back(std::move(longer), length + label_of(g, s, t) - 1);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Word amalgamate(const Word& w1, const Word& z, const Word& w2) {
  if (z.size() > w1.size() || z.size() > w2.size() || !std::equal(z.begin(), z.end(), w1.end() - static_cast<long>(z.size())) ||
      !std::equal(z.begin(), z.end(), w2.begin()))
    throw std::invalid_argument("overlap is not a suffix of the first word and a prefix of the second");
  Word out(w1);
  out.insert(out.end(), w2.begin() + static_cast<long>(z.size()), w2.end());
  return out;
}

namespace {

std::vector<ForbiddenShape> shapes_of(const EvenSystem& sys, const std::vector<Word>& seq) {
  std::vector<ForbiddenShape> shapes;
  for (const auto& u : seq) {
    auto shape = classify_forbidden(sys, u);
    if (!shape) throw std::invalid_argument("sequence element is not a forbidden word");
    shapes.push_back(std::move(*shape));
  }
  return shapes;
}

/// R1 and R2 for a consecutive pair.
bool pair_condition(const ForbiddenShape& a, const ForbiddenShape& b) {
  if (a.s == b.s) return a.blocks.empty() || b.blocks.empty();
  return !a.blocks.empty() && a.blocks.back() == b.s && !b.blocks.empty() && b.blocks.front() == a.s;
}

/// R3 for three consecutive words.
bool triple_condition(const CoxeterGraph& g, const ForbiddenShape& a, const ForbiddenShape& b,
                      const ForbiddenShape& c, std::size_t middle_length) {
  if (a.s != c.s || a.s == b.s) return true;
  return middle_length > 2 * label_of(g, a.s, b.s);
}

/// The overlap forced for an R-valid pair: (s), or (t, a_{s,t}) for u = s..s, v = t..t.
Word forced_overlap(const EvenSystem& sys, const ForbiddenShape& a, const ForbiddenShape& b) {
  if (a.s == b.s) return {a.s};
  Word z{b.s};
  const Word tail = a_word(sys, a.s, b.s);
  z.insert(z.end(), tail.begin(), tail.end());
  return z;
}

}  // namespace

bool check_R_conditions(const EvenSystem& sys, const std::vector<Word>& seq) {
  const auto shapes = shapes_of(sys, seq);
  for (std::size_t i = 0; i + 1 < shapes.size(); ++i)
    if (!pair_condition(shapes[i], shapes[i + 1])) return false;
  for (std::size_t i = 1; i + 1 < shapes.size(); ++i)
    if (!triple_condition(sys.graph(), shapes[i - 1], shapes[i], shapes[i + 1], seq[i].size())) return false;
  return true;
}

namespace {

void require_chain_conditions(const Chain& c) {
  for (std::size_t i = 0; i < c.overlaps.size(); ++i) {
    const Word& z = c.overlaps[i];
    const Word& u = c.forbidden[i];
    const Word& v = c.forbidden[i + 1];
    if (z.empty() || z.size() > u.size() || z.size() > v.size() ||
        !std::equal(z.begin(), z.end(), u.end() - static_cast<long>(z.size())) ||
        !std::equal(z.begin(), z.end(), v.begin()))
      throw std::logic_error("overlap is not a common suffix/prefix");
    if (i == 0 && z == u) throw std::logic_error("first overlap equals the first forbidden word");
    if (i + 1 < c.overlaps.size() && z.size() + c.overlaps[i + 1].size() > v.size())
      throw std::logic_error("consecutive overlaps do not fit in a forbidden word");
  }
}

std::vector<std::size_t> start_positions(const Chain& c) {
  std::vector<std::size_t> p{0};
  for (std::size_t i = 0; i + 1 < c.forbidden.size(); ++i)
    p.push_back(p.back() + c.forbidden[i].size() - c.overlaps[i].size());
  return p;
}

}  // namespace

Chain chain_from_sequence(const EvenSystem& sys, const std::vector<Word>& seq) {
  if (seq.empty()) throw std::invalid_argument("empty sequence of forbidden words");
  if (!check_R_conditions(sys, seq)) throw std::invalid_argument("sequence violates R1-R3");
  const auto shapes = shapes_of(sys, seq);
  Chain c;
  c.forbidden = seq;
  c.word = seq.front();
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    c.overlaps.push_back(forced_overlap(sys, shapes[i], shapes[i + 1]));
    c.word = amalgamate(c.word, c.overlaps.back(), seq[i + 1]);
  }
  require_chain_conditions(c);
  if (!is_rigid_chain(sys, c)) throw std::logic_error("chain of an R-valid sequence is not rigid");
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> forbidden_occurrences(const EvenSystem& sys, const Word& w) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 2; j <= w.size(); ++j)
      if (w[j - 1] == w[i] && classify_forbidden(sys, Word(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j))))
        out.emplace_back(i, j - i);
  return out;
}

bool is_rigid_chain(const EvenSystem& sys, const Chain& chain) {
  const std::size_t m = chain.rank();
  if (m == 0) return false;
  const auto p = start_positions(chain);
  for (std::size_t r = 1; r <= m; ++r) {
    // Prefix chain of rank r.
    const std::size_t end = p[r - 1] + chain.forbidden[r - 1].size();
    const Word prefix(chain.word.begin(), chain.word.begin() + static_cast<long>(end));
    const auto occ = forbidden_occurrences(sys, prefix);
    std::set<std::pair<std::size_t, std::size_t>> found;
    std::set<std::pair<std::size_t, std::size_t>> allowed;
    if (r <= 2) {
      found.insert(occ.begin(), occ.end());
      for (std::size_t i = 0; i < r; ++i) allowed.emplace(p[i], chain.forbidden[i].size());
    } else {
      const std::size_t after = p[r - 3] + chain.forbidden[r - 3].size();
      for (const auto& o : occ)
        if (o.first >= after) found.insert(o);
      allowed.emplace(p[r - 1], chain.forbidden[r - 1].size());
    }
    if (found != allowed) return false;
  }
  return true;
}

ChainTable::ChainTable(std::size_t max_len, std::size_t max_rank)
    : max_len(max_len), max_rank(max_rank), q(max_rank + 1, std::vector<BigInt>(max_len + 1)) {}

namespace {

struct Candidate {
  Word word;
  ForbiddenShape shape;
};

std::vector<Candidate> candidates(const EvenSystem& sys, std::size_t max_len) {
  std::vector<Candidate> out;
  for (auto& w : forbidden_words(sys, max_len)) {
    auto shape = *classify_forbidden(sys, w);
    out.push_back({std::move(w), std::move(shape)});
  }
  return out;
}

class SequenceSearch {
 public:
  SequenceSearch(const EvenSystem& sys, std::size_t max_len, std::size_t max_rank)
      : sys_(sys), table_(max_len, max_rank), pool_(candidates(sys, max_len)) {}

  ChainTable run() {
    if (table_.max_rank == 0) return table_;
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      path_.assign(1, i);
      overlap_.clear();
      table_.q[1][pool_[i].word.size()] += 1;
      extend(pool_[i].word.size());
    }
    return table_;
  }

 private:
  void extend(std::size_t length) {
    if (path_.size() == table_.max_rank) return;
    const Candidate& last = pool_[path_.back()];
    for (std::size_t j = 0; j < pool_.size(); ++j) {
      const Candidate& next = pool_[j];
      if (!pair_condition(last.shape, next.shape)) continue;
      if (path_.size() >= 2 &&
          !triple_condition(sys_.graph(), pool_[path_[path_.size() - 2]].shape, last.shape, next.shape,
                            last.word.size()))
        continue;
      const std::size_t z = forced_overlap(sys_, last.shape, next.shape).size();
      const std::size_t new_length = length + next.word.size() - z;
      if (new_length > table_.max_len) continue;
      if (!overlap_.empty() && overlap_.back() + z > last.word.size())
        throw std::logic_error("R-valid sequence with overlapping overlaps");
      path_.push_back(j);
      overlap_.push_back(z);
      table_.q[path_.size()][new_length] += 1;
      extend(new_length);
      path_.pop_back();
      overlap_.pop_back();
    }
  }

  const EvenSystem& sys_;
  ChainTable table_;
  std::vector<Candidate> pool_;
  std::vector<std::size_t> path_;
  std::vector<std::size_t> overlap_;
};

class DefinitionSearch {
 public:
  DefinitionSearch(const EvenSystem& sys, std::size_t max_len, std::size_t max_rank)
      : sys_(sys), max_len_(max_len), max_rank_(max_rank), pool_(forbidden_words(sys, max_len)) {}

  std::vector<Chain> run() {
    if (max_rank_ == 0) return {};
    for (const auto& u : pool_) {
      chain_ = Chain{u, {u}, {}};
      found_.push_back(chain_);
      extend();
    }
    return std::move(found_);
  }

 private:
  void extend() {
    if (chain_.rank() == max_rank_) return;
    const Word last = chain_.forbidden.back();
    const std::size_t previous_overlap = chain_.overlaps.empty() ? 0 : chain_.overlaps.back().size();
    // z_1 != u_1; later overlaps must fit beside the previous one.
    const std::size_t limit = chain_.overlaps.empty() ? last.size() - 1 : last.size() - previous_overlap;
    for (const auto& next : pool_) {
      for (std::size_t k = 1; k <= std::min(limit, next.size()); ++k) {
        if (chain_.word.size() + next.size() - k > max_len_) continue;
        const Word z(next.begin(), next.begin() + static_cast<long>(k));
        if (!std::equal(z.begin(), z.end(), last.end() - static_cast<long>(k))) continue;
        Chain saved = chain_;
        chain_.word = amalgamate(chain_.word, z, next);
        chain_.forbidden.push_back(next);
        chain_.overlaps.push_back(z);
        if (is_rigid_chain(sys_, chain_)) {
          found_.push_back(chain_);
          extend();
        }
        chain_ = std::move(saved);
      }
    }
  }

  const EvenSystem& sys_;
  std::size_t max_len_;
  std::size_t max_rank_;
  std::vector<Word> pool_;
  Chain chain_;
  std::vector<Chain> found_;
};

}  // namespace

ChainTable enumerate_rigid_chains(const EvenSystem& sys, std::size_t max_len, std::size_t max_rank) {
  return SequenceSearch(sys, max_len, max_rank).run();
}

std::vector<Chain> rigid_chains_by_definition(const EvenSystem& sys, std::size_t max_len, std::size_t max_rank) {
  return DefinitionSearch(sys, max_len, max_rank).run();
}

ChainTable tabulate(const std::vector<Chain>& chains, std::size_t max_len, std::size_t max_rank) {
  ChainTable t(max_len, max_rank);
  for (const auto& c : chains)
    if (c.rank() <= max_rank && c.length() <= max_len) t.q[c.rank()][c.length()] += 1;
  return t;
}

ChainTable recount_rigid_chains(const EvenSystem& sys, std::size_t max_len, std::size_t max_rank) {
  return tabulate(rigid_chains_by_definition(sys, max_len, max_rank), max_len, max_rank);
}

std::vector<BigInt> counts_from_chains(const ChainTable& table, std::size_t generators, std::size_t n) {
  if (n > table.max_len || (n > 0 && n - 1 > table.max_rank))
    throw std::invalid_argument("chain table too small for the requested number of terms");
  // f = 1 / (1 - |S| z - sum_m (-1)^m Q^(m)(z))
  std::vector<BigInt> d(n + 1);
  d[0] = 1;
  if (n >= 1) d[1] -= generators;
  for (std::size_t m = 1; m <= table.max_rank; ++m)
    for (std::size_t k = 0; k <= n; ++k) {
      if (m % 2 == 1)
        d[k] += table.at(m, k);
      else
        d[k] -= table.at(m, k);
    }
  std::vector<BigInt> f(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt acc = k == 0 ? 1 : 0;
    for (std::size_t j = 1; j <= k; ++j) acc -= d[j] * f[k - j];
    f[k] = acc;
  }
  return f;
}

std::vector<BigInt> geodesic_counts(const CoxeterGraph& g, std::size_t n) {
  if (coxgraph::is_triangle_free(g)) return count_geodesics_even(EvenSystem(g), n);
  if (g.is_right_angled()) return racg::build_dfa(g).dfa.count_words(n);
  throw std::invalid_argument("graphs with triangles are only supported when all labels are 2");
}

algebra::RationalSeries geodesic_series(const CoxeterGraph& g) {
  if (coxgraph::is_triangle_free(g)) return growth_series_even(EvenSystem(g));
  if (g.is_right_angled()) return racg::growth_series_racg(g);
  throw std::invalid_argument("graphs with triangles are only supported when all labels are 2");
}

namespace {

SystemSummary summarize(const CoxeterGraph& g, std::size_t n, std::size_t max_len, std::size_t max_rank) {
  SystemSummary s;
  s.generators = g.vertex_count();
  s.triangle_free = coxgraph::is_triangle_free(g);
  const auto star = coxgraph::star_regularity(g);
  s.star_regular = star.is_star_regular;
  s.star_witness = star.witness;
  s.counts = geodesic_counts(g, n);
  s.series = geodesic_series(g);
  if (s.triangle_free) {
    const EvenSystem sys(g);
    s.chains = enumerate_rigid_chains(sys, max_len, max_rank);
    s.rigid_chains = recount_rigid_chains(sys, max_len, max_rank);
  }
  return s;
}

bool first_stars_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b) {
  if (a.vertex_count() == 0 || b.vertex_count() == 0) return a.vertex_count() == b.vertex_count();
  const coxgraph::Clique first{0};
  return coxgraph::labelled_isomorphic(a, coxgraph::star(a, first), b, coxgraph::star(b, first));
}

}  // namespace

ComparisonReport compare_systems(const CoxeterGraph& a, const CoxeterGraph& b, std::size_t n,
                                 std::size_t chain_max_len, std::size_t chain_max_rank) {
  ComparisonReport r;
  r.a = summarize(a, n, chain_max_len, chain_max_rank);
  r.b = summarize(b, n, chain_max_len, chain_max_rank);
  r.same_generator_count = r.a.generators == r.b.generators;
  r.stars_isomorphic = first_stars_isomorphic(a, b);
  r.hypotheses_hold = r.a.triangle_free && r.b.triangle_free && r.a.star_regular && r.b.star_regular &&
                      r.same_generator_count && r.stars_isomorphic;
  r.counts_equal = r.a.counts == r.b.counts;
  for (std::size_t k = 0; k <= n; ++k)
    if (r.a.counts[k] != r.b.counts[k]) {
      r.first_difference = k;
      break;
    }
  r.series_equal = r.a.series == r.b.series;
  if (r.a.chains && r.b.chains) {
    r.chain_tables_equal = *r.a.chains == *r.b.chains;
    r.definition_tables_equal = *r.a.rigid_chains == *r.b.rigid_chains;
  }
  return r;
}

}  // namespace geogrowth::evencox
