#include "geogrowth/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>

namespace geogrowth::oracle {

namespace {

std::string key_of(const Word& w) {
  std::string k(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i) k[i] = static_cast<char>(w[i]);
  return k;
}

bool has_adjacent_pair(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return true;
  return false;
}

/// Breadth-first closure of seed under `moves`. `visit` sees every member
/// and may stop the walk by returning false.
void closure(const Word& seed, std::size_t budget, const std::function<std::vector<Word>(const Word&)>& moves,
             const std::function<bool(const Word&)>& visit) {
  std::unordered_set<std::string> seen{key_of(seed)};
  std::deque<Word> queue{seed};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (!visit(w)) return;
    for (auto& next : moves(w))
      if (seen.insert(key_of(next)).second) {
        if (seen.size() > budget)
          throw BudgetExhausted("braid class exceeds the budget of " + std::to_string(budget) + " words");
        queue.push_back(std::move(next));
      }
  }
}

}  // namespace

std::vector<Word> braid_neighbors(const CoxeterGraph& g, const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Vertex s = w[i], t = w[i + 1];
    if (s == t) continue;
    const std::size_t m = static_cast<std::size_t>(g.label(s, t));
    if (m == 0 || i + m > w.size()) continue;
    bool alternating = true;
    for (std::size_t j = 2; j < m && alternating; ++j) alternating = w[i + j] == w[i + j - 2];
    if (!alternating) continue;
    Word next = w;
    for (std::size_t j = 0; j < m; ++j) next[i + j] = j % 2 == 0 ? t : s;
    out.push_back(std::move(next));
  }
  return out;
}

BraidClass braid_class(const CoxeterGraph& g, const Word& w, std::size_t budget) {
  BraidClass c{w, {}, false};
  closure(
      w, budget, [&](const Word& x) { return braid_neighbors(g, x); },
      [&](const Word& x) {
        c.reducible = c.reducible || has_adjacent_pair(x);
        c.members.push_back(x);
        return true;
      });
  std::sort(c.members.begin(), c.members.end());
  return c;
}

bool oracle_is_geodesic(const CoxeterGraph& g, const Word& w, std::size_t budget) {
  for (Vertex x : w)
    if (x >= g.vertex_count()) throw std::out_of_range("letter outside the generating set");
  bool reduced = true;
  closure(
      w, budget, [&](const Word& x) { return braid_neighbors(g, x); },
      [&](const Word& x) {
        reduced = !has_adjacent_pair(x);
        return reduced;
      });
  return reduced;
}

Word oracle_reduce(const CoxeterGraph& g, const Word& w, std::size_t budget) {
  Word current = w;
  while (true) {
    std::optional<Word> shorter;
    closure(
        current, budget, [&](const Word& x) { return braid_neighbors(g, x); },
        [&](const Word& x) {
          for (std::size_t i = 0; i + 1 < x.size(); ++i)
            if (x[i] == x[i + 1]) {
              Word y(x.begin(), x.begin() + static_cast<long>(i));
              y.insert(y.end(), x.begin() + static_cast<long>(i + 2), x.end());
              shorter = std::move(y);
              return false;
            }
          return true;
        });
    if (!shorter) return current;
    current = std::move(*shorter);
  }
}

std::vector<bool> right_descents(const CoxeterGraph& g, const Word& w, std::size_t budget) {
  std::vector<bool> d(g.vertex_count(), false);
  closure(
      w, budget, [&](const Word& x) { return braid_neighbors(g, x); },
      [&](const Word& x) {
        if (!x.empty()) d[x.back()] = true;
        return true;
      });
  return d;
}

std::vector<int> parity_vector(const CoxeterGraph& g, const Word& w) {
  std::vector<int> p(g.vertex_count(), 0);
  for (Vertex x : w) p.at(x) ^= 1;
  return p;
}

namespace {

using Blocked = std::function<std::vector<bool>(const Word&)>;
using Permutation = std::vector<std::size_t>;

/// Depth-first count of words whose every extension is checked against the
/// letters blocked after the current geodesic.
class GeodesicCounter {
 public:
  GeodesicCounter(std::size_t alphabet, Blocked blocked, std::vector<Permutation> symmetries)
      : alphabet_(alphabet), blocked_(std::move(blocked)), symmetries_(std::move(symmetries)) {}

  std::vector<BigInt> run(std::size_t n) {
    std::vector<BigInt> counts(n + 1);
    const std::size_t split = std::min<std::size_t>(3, n);
    // Short words, and the prefixes of length `split`, without symmetry.
    std::vector<Word> prefixes;
    Word w;
    std::function<void()> collect = [&] {
      counts[w.size()] += 1;
      if (w.size() == split) {
        prefixes.push_back(w);
        return;
      }
      const auto blocked = blocked_(w);
      for (std::size_t x = 0; x < alphabet_; ++x) {
        if (blocked[x]) continue;
        w.push_back(x);
        collect();
        w.pop_back();
      }
    };
    collect();
    counts[split] = 0;

    std::vector<std::uint64_t> local(n + 1);
    for (const Word& p : prefixes) {
      std::set<Word> orbit;
      bool representative = true;
      for (const auto& perm : symmetries_) {
        Word image(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) image[i] = perm[p[i]];
        if (image < p) {
          representative = false;
          break;
        }
        orbit.insert(std::move(image));
      }
      if (!representative) continue;
      std::fill(local.begin(), local.end(), 0);
      w = p;
      extend(w, n, local);
      for (std::size_t k = split; k <= n; ++k) counts[k] += BigInt(local[k]) * orbit.size();
    }
    return counts;
  }

 private:
  void extend(Word& w, std::size_t n, std::vector<std::uint64_t>& local) {
    local[w.size()] += 1;
    if (w.size() == n) return;
    const auto blocked = blocked_(w);
    if (w.size() + 1 == n) {
      local[n] += static_cast<std::uint64_t>(std::count(blocked.begin(), blocked.end(), false));
      return;
    }
    for (std::size_t x = 0; x < alphabet_; ++x) {
      if (blocked[x]) continue;
      w.push_back(x);
      extend(w, n, local);
      w.pop_back();
    }
  }

  std::size_t alphabet_;
  Blocked blocked_;
  std::vector<Permutation> symmetries_;
};

std::vector<Permutation> identity_only(std::size_t n) {
  Permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return {id};
}

}  // namespace

std::vector<BigInt> oracle_counts(const CoxeterGraph& g, std::size_t n, const CountOptions& options) {
  const std::size_t letters = g.vertex_count();
  Blocked blocked;
  if (options.fast_path && g.is_right_angled()) {
    // x can be moved to the end iff every later letter commutes with it.
    blocked = [&g, letters](const Word& w) {
      std::vector<bool> d(letters, false);
      for (std::size_t i = w.size(); i-- > 0;) {
        bool movable = true;
        for (std::size_t j = i + 1; j < w.size() && movable; ++j) movable = g.adjacent(w[i], w[j]);
        if (movable) d[w[i]] = true;
      }
      return d;
    };
  } else {
    blocked = [&g, budget = options.budget](const Word& w) { return right_descents(g, w, budget); };
  }
  auto symmetries = options.symmetry ? coxgraph::automorphisms(g) : identity_only(letters);
  return GeodesicCounter(letters, std::move(blocked), std::move(symmetries)).run(n);
}

namespace {

bool raag_commute(const CoxeterGraph& g, std::size_t a, std::size_t b) {
  return a / 2 != b / 2 && g.adjacent(a / 2, b / 2);
}

std::vector<Word> commutation_neighbors(const CoxeterGraph& g, const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (raag_commute(g, w[i], w[i + 1])) {
      Word next = w;
      std::swap(next[i], next[i + 1]);
      out.push_back(std::move(next));
    }
  return out;
}

bool has_cancellation(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if ((w[i] ^ 1) == w[i + 1]) return true;
  return false;
}

}  // namespace

bool raag_is_geodesic(const CoxeterGraph& g, const Word& w, std::size_t budget) {
  for (auto x : w)
    if (x >= 2 * g.vertex_count()) throw std::out_of_range("letter outside the Artin alphabet");
  bool reduced = true;
  closure(
      w, budget, [&](const Word& x) { return commutation_neighbors(g, x); },
      [&](const Word& x) {
        reduced = !has_cancellation(x);
        return reduced;
      });
  return reduced;
}

std::vector<BigInt> oracle_counts_raag(const CoxeterGraph& g, std::size_t n, const CountOptions& options) {
  if (!g.is_right_angled()) throw std::invalid_argument("Artin group oracle needs a right-angled graph");
  const std::size_t letters = 2 * g.vertex_count();
  Blocked blocked;
  if (options.fast_path) {
    // The inverse of any letter that can be moved to the end is blocked.
    blocked = [&g, letters](const Word& w) {
      std::vector<bool> d(letters, false);
      for (std::size_t i = w.size(); i-- > 0;) {
        bool movable = true;
        for (std::size_t j = i + 1; j < w.size() && movable; ++j)
          movable = w[j] == w[i] || raag_commute(g, w[i], w[j]);
        if (movable) d[w[i] ^ 1] = true;
      }
      return d;
    };
  } else {
    blocked = [&g, letters, budget = options.budget](const Word& w) {
      std::vector<bool> d(letters, false);
      // Same-letter swaps are trivial, so the class is taken up to commutation.
      closure(
          w, budget, [&](const Word& x) { return commutation_neighbors(g, x); },
          [&](const Word& x) {
            if (!x.empty()) d[x.back() ^ 1] = true;
            return true;
          });
      return d;
    };
  }

  std::vector<Permutation> symmetries = identity_only(letters);
  if (options.symmetry) {
    const auto autos = coxgraph::automorphisms(g);
    const std::size_t vertices = g.vertex_count();
    const std::size_t flips = vertices < 20 ? (std::size_t{1} << vertices) : 1;
    if (autos.size() * flips <= 100000) {
      symmetries.clear();
      for (const auto& a : autos)
        for (std::size_t mask = 0; mask < flips; ++mask) {
          Permutation p(letters);
          for (std::size_t v = 0; v < vertices; ++v)
            for (std::size_t e = 0; e < 2; ++e) p[2 * v + e] = 2 * a[v] + (e ^ ((mask >> v) & 1));
          symmetries.push_back(std::move(p));
        }
    }
  }
  return GeodesicCounter(letters, std::move(blocked), std::move(symmetries)).run(n);
}

}  // namespace geogrowth::oracle
