#include "geogrowth/racg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace geogrowth::racg {

using coxgraph::Vertex;

RacgAutomaton build_dfa(const CoxeterGraph& g) {
  if (!g.is_right_angled()) throw std::invalid_argument("clique automaton needs all labels equal to 2");
  RacgAutomaton a;
  a.cliques.push_back({});
  for (const auto& level : coxgraph::enumerate_cliques(g))
    for (const auto& c : level) a.cliques.push_back(c);
  const std::size_t fail = a.cliques.size();
  a.cliques.push_back({});

  std::map<Clique, std::size_t> index;
  for (std::size_t s = 1; s < fail; ++s) index.emplace(a.cliques[s], s);

  const std::size_t n = g.vertex_count();
  auto& dfa = a.dfa;
  dfa.alphabet_size = n;
  dfa.state_count = a.cliques.size();
  dfa.start = 0;
  dfa.fail = fail;
  dfa.accepting.assign(dfa.state_count, true);
  dfa.accepting[fail] = false;
  dfa.transitions.assign(dfa.state_count * n, fail);
  for (std::size_t s = 0; s < fail; ++s) {
    const Clique& sigma = a.cliques[s];
    for (Vertex v = 0; v < n; ++v) {
      if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
      Clique target{v};
      for (Vertex u : sigma)
        if (g.adjacent(u, v)) target.push_back(u);
      std::sort(target.begin(), target.end());
      dfa.transitions[s * n + v] = index.at(target);
    }
  }
  return a;
}

namespace {

std::size_t star_meet(const CoxeterGraph& g, Vertex v, const Clique& sigma) {
  // v is outside sigma here, so Star(v) n sigma = Link(v) n sigma.
  return static_cast<std::size_t>(
      std::count_if(sigma.begin(), sigma.end(), [&](Vertex u) { return g.adjacent(u, v); }));
}

}  // namespace

std::size_t deg_j(const CoxeterGraph& g, const Clique& sigma, std::size_t j) {
  if (!coxgraph::is_clique(g, sigma)) throw std::invalid_argument("sigma is not a clique");
  std::size_t count = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!std::binary_search(sigma.begin(), sigma.end(), v) && star_meet(g, v, sigma) == j) ++count;
  return count;
}

std::size_t deg_tau(const CoxeterGraph& g, const Clique& sigma, const Clique& tau) {
  if (!coxgraph::is_clique(g, sigma)) throw std::invalid_argument("sigma is not a clique");
  if (!std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end()))
    throw std::invalid_argument("tau is not a subset of sigma");
  std::size_t count = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
    Clique meet;
    for (Vertex u : sigma)
      if (g.adjacent(u, v)) meet.push_back(u);
    if (meet == tau) ++count;
  }
  return count;
}

std::vector<BigInt> SizeProfile::totals() const {
  std::vector<BigInt> out;
  for (const auto& row : table) {
    if (out.size() < row.size()) out.resize(row.size());
    for (std::size_t m = 0; m < row.size(); ++m) out[m] += row[m];
  }
  return out;
}

namespace {

std::size_t max_clique_size(const RacgAutomaton& a) {
  std::size_t d = 0;
  for (const auto& c : a.cliques) d = std::max(d, c.size());
  return d;
}

}  // namespace

SizeProfile count_by_state_size(const RacgAutomaton& a, std::size_t n) {
  const auto& dfa = a.dfa;
  SizeProfile profile;
  profile.table.assign(max_clique_size(a) + 1, std::vector<BigInt>(n + 1));
  std::vector<BigInt> current(dfa.state_count), next(dfa.state_count);
  current[dfa.start] = 1;
  for (std::size_t m = 0;; ++m) {
    for (std::size_t s = 0; s < dfa.state_count; ++s)
      if (s != a.fail() && current[s] != 0) profile.table[a.cliques[s].size()][m] += current[s];
    if (m == n) break;
    for (auto& x : next) x = 0;
    for (std::size_t s = 0; s < dfa.state_count; ++s) {
      if (s == a.fail() || current[s] == 0) continue;
      for (Letter v = 0; v < dfa.alphabet_size; ++v) next[dfa.next(s, v)] += current[s];
    }
    std::swap(current, next);
  }
  return profile;
}

std::optional<std::vector<std::vector<BigInt>>> beta_matrix(const RacgAutomaton& a) {
  const std::size_t d = max_clique_size(a);
  std::vector<std::vector<BigInt>> beta(d + 1, std::vector<BigInt>(d + 1));
  std::vector<bool> seen(d + 1, false);
  for (std::size_t s = 0; s < a.dfa.state_count; ++s) {
    if (s == a.fail()) continue;
    const std::size_t j = a.cliques[s].size();
    std::vector<BigInt> column(d + 1);
    for (Letter v = 0; v < a.dfa.alphabet_size; ++v)
      if (std::size_t t = a.dfa.next(s, v); t != a.fail()) column[a.cliques[t].size()] += 1;
    if (!seen[j]) {
      seen[j] = true;
      for (std::size_t i = 0; i <= d; ++i) beta[i][j] = column[i];
    } else {
      for (std::size_t i = 0; i <= d; ++i)
        if (beta[i][j] != column[i]) return std::nullopt;
    }
  }
  return beta;
}

std::optional<SizeProfile> recursion_profile(const RacgAutomaton& a, std::size_t n) {
  const auto beta = beta_matrix(a);
  if (!beta) return std::nullopt;
  const std::size_t d = beta->size() - 1;
  SizeProfile profile;
  profile.table.assign(d + 1, std::vector<BigInt>(n + 1));
  profile.table[0][0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t i = 0; i <= d; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j <= d; ++j) acc += (*beta)[i][j] * profile.table[j][m - 1];
      profile.table[i][m] = acc;
    }
  return profile;
}

std::vector<BigInt> growth_counts_racg(const CoxeterGraph& g, std::size_t n) {
  return build_dfa(g).dfa.count_words(n);
}

algebra::RationalSeries growth_series_racg(const CoxeterGraph& g) {
  return language_series(build_dfa(g).dfa);
}

algebra::RationalSeries formula_regular_trianglefree(std::size_t n, std::size_t l) {
  if (n < 4) throw std::invalid_argument("the closed formula needs at least 4 vertices");
  const long long nn = static_cast<long long>(n);
  const long long ll = static_cast<long long>(l);
  return algebra::RationalSeries(algebra::IntPolynomial{1, -(ll - 3), 2},
                                 algebra::IntPolynomial{1, 3 - nn - ll, 2 - 2 * nn + nn * ll});
}

bool SuffixReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

namespace {

IdentityCheck compare_sequences(std::string name, const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs) {
  IdentityCheck check{std::move(name), true, std::nullopt};
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (lhs[k] != rhs[k]) {
      check.passed = false;
      check.first_mismatch = k;
      break;
    }
  return check;
}

BigInt at(const std::vector<BigInt>& v, long long k) {
  return k < 0 || static_cast<std::size_t>(k) >= v.size() ? BigInt(0) : v[static_cast<std::size_t>(k)];
}

}  // namespace

SuffixReport suffix_series_check(const CoxeterGraph& g, std::size_t n) {
  if (!g.is_right_angled()) throw std::invalid_argument("suffix identities need a right-angled graph");
  if (!coxgraph::is_triangle_free(g)) throw std::invalid_argument("suffix identities need a triangle-free graph");
  const auto degree = coxgraph::regular_degree(g);
  if (!degree) throw std::invalid_argument("suffix identities need a regular graph");
  if (g.vertex_count() < 4) throw std::invalid_argument("suffix identities need at least 4 vertices");

  const RacgAutomaton a = build_dfa(g);
  const std::size_t v_count = g.vertex_count();
  const std::size_t none = v_count;  // marks "no letter yet"
  const std::size_t slots = v_count + 1;
  auto key = [&](std::size_t state, std::size_t x, std::size_t y) { return (state * slots + x) * slots + y; };

  SuffixReport report;
  report.vertices = v_count;
  report.degree = *degree;
  for (auto* seq : {&report.growth, &report.last_one, &report.last_two, &report.last_edge, &report.last_three})
    seq->assign(n + 1, 0);

  // counts[key(state, x, y)]: geodesics with run ending in state whose last
  // two letters are x, y (none when shorter).
  std::vector<BigInt> counts(a.dfa.state_count * slots * slots), next(counts.size());
  counts[key(a.dfa.start, none, none)] = 1;
  report.growth[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& c : next) c = 0;
    for (std::size_t s = 0; s < a.dfa.state_count; ++s) {
      if (s == a.fail()) continue;
      for (std::size_t x = 0; x < slots; ++x)
        for (std::size_t y = 0; y < slots; ++y) {
          const BigInt& c = counts[key(s, x, y)];
          if (c == 0) continue;
          for (Vertex t = 0; t < v_count; ++t) {
            const std::size_t target = a.dfa.next(s, t);
            if (target == a.fail()) continue;
            next[key(target, y, t)] += c;
            report.growth[k] += c;
            report.last_one[k] += c;
            if (y != none) {
              report.last_two[k] += c;
              if (g.adjacent(y, t)) report.last_edge[k] += c;
            }
            if (x != none) report.last_three[k] += c;
          }
        }
    }
    std::swap(counts, next);
  }

  const long long nn = static_cast<long long>(v_count);
  const long long ll = static_cast<long long>(*degree);
  std::vector<BigInt> rhs(n + 1);

  for (std::size_t k = 0; k <= n; ++k) rhs[k] = (k == 0 ? 1 : 0) + report.last_one[k];
  report.checks.push_back(compare_sequences("growth = 1 + sum E_u", report.growth, rhs));

  for (std::size_t k = 0; k <= n; ++k)
    rhs[k] = (k == 0 ? 1 : 0) + (k == 1 ? nn : 0) + report.last_two[k];
  report.checks.push_back(compare_sequences("growth = 1 + nz + sum E_uv", report.growth, rhs));

  for (std::size_t k = 0; k <= n; ++k)
    rhs[k] = (k == 0 ? 1 : 0) + (k == 1 ? nn : 0) + (k == 2 ? nn * (nn - 1) : 0) + report.last_three[k];
  report.checks.push_back(compare_sequences("growth = 1 + nz + n(n-1)z^2 + sum E_uvt", report.growth, rhs));

  for (std::size_t k = 0; k <= n; ++k) {
    const long long kk = static_cast<long long>(k);
    rhs[k] = report.growth[k] - (nn - ll - 1) * at(report.growth, kk - 1) - (k == 0 ? 1 : 0) -
             (k == 1 ? ll + 1 : 0);
  }
  report.checks.push_back(
      compare_sequences("sum E_e = growth (1 - (n-l-1)z) - 1 - (l+1)z", report.last_edge, rhs));

  const long long c = -ll * ll + 2 * ll + nn * nn - 2 * nn - nn * ll + 1;
  for (std::size_t k = 0; k <= n; ++k) {
    const long long kk = static_cast<long long>(k);
    rhs[k] = (nn + ll - 3) * at(report.last_edge, kk - 1) + c * at(report.last_one, kk - 2);
  }
  report.checks.push_back(compare_sequences(
      "sum E_uvt = (n+l-3) z sum E_e + (-l^2+2l+n^2-2n-nl+1) z^2 sum E_u", report.last_three, rhs));

  report.checks.push_back(compare_sequences(
      "growth = closed formula", report.growth, formula_regular_trianglefree(v_count, *degree).expand(n)));
  return report;
}

std::vector<BigInt> growth_counts_raag(const CoxeterGraph& g, std::size_t n) {
  return growth_counts_racg(coxgraph::double_graph(g), n);
}

algebra::RationalSeries growth_series_raag(const CoxeterGraph& g) {
  return growth_series_racg(coxgraph::double_graph(g));
}

}  // namespace geogrowth::racg
