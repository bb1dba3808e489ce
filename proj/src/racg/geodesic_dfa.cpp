#include "geogrowth/geodesic_dfa.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace geogrowth::racg {

std::size_t GeodesicDfa::run(std::span<const Letter> word) const {
  std::size_t state = start;
  for (Letter a : word) {
    if (a >= alphabet_size) throw std::out_of_range("letter outside the alphabet");
    state = next(state, a);
  }
  return state;
}

void GeodesicDfa::validate() const {
  if (transitions.size() != state_count * alphabet_size || accepting.size() != state_count ||
      start >= state_count)
    throw std::logic_error("automaton table has inconsistent dimensions");
  for (std::size_t t : transitions)
    if (t >= state_count) throw std::logic_error("transition to a nonexistent state");
  if (fail) {
    if (accepting[*fail]) throw std::logic_error("fail state is accepting");
    for (Letter a = 0; a < alphabet_size; ++a)
      if (next(*fail, a) != *fail) throw std::logic_error("fail state is not absorbing");
  }
}

std::vector<bool> GeodesicDfa::useful_states() const {
  std::vector<bool> reachable(state_count, false);
  std::deque<std::size_t> queue{start};
  reachable[start] = true;
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < alphabet_size; ++a)
      if (std::size_t t = next(s, a); !reachable[t]) {
        reachable[t] = true;
        queue.push_back(t);
      }
  }
  std::vector<std::vector<std::size_t>> reverse(state_count);
  for (std::size_t s = 0; s < state_count; ++s)
    for (Letter a = 0; a < alphabet_size; ++a) reverse[next(s, a)].push_back(s);
  std::vector<bool> live(state_count, false);
  for (std::size_t s = 0; s < state_count; ++s)
    if (accepting[s]) {
      live[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (std::size_t p : reverse[s])
      if (!live[p]) {
        live[p] = true;
        queue.push_back(p);
      }
  }
  std::vector<bool> useful(state_count);
  for (std::size_t s = 0; s < state_count; ++s) useful[s] = reachable[s] && live[s];
  return useful;
}

algebra::CountMatrix GeodesicDfa::count_matrix() const {
  const auto useful = useful_states();
  std::vector<std::size_t> index(state_count, state_count);
  std::size_t size = 0;
  for (std::size_t s = 0; s < state_count; ++s)
    if (useful[s]) index[s] = size++;
  algebra::CountMatrix m;
  m.matrix.assign(size, std::vector<algebra::BigInt>(size));
  m.initial.assign(size, 0);
  m.accepting.assign(size, 0);
  for (std::size_t s = 0; s < state_count; ++s) {
    if (!useful[s]) continue;
    if (accepting[s]) m.accepting[index[s]] = 1;
    for (Letter a = 0; a < alphabet_size; ++a)
      if (std::size_t t = next(s, a); useful[t]) m.matrix[index[s]][index[t]] += 1;
  }
  if (useful[start]) m.initial[index[start]] = 1;
  return m;
}

std::vector<algebra::BigInt> GeodesicDfa::count_words(std::size_t n) const {
  const auto m = count_matrix();
  if (m.size() == 0) return std::vector<algebra::BigInt>(n + 1, 0);
  return algebra::transfer_count(m, n);
}

GeodesicDfa GeodesicDfa::minimized() const {
  // Reachable states in breadth-first order.
  std::vector<std::size_t> order;
  std::vector<std::size_t> position(state_count, state_count);
  order.push_back(start);
  position[start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter a = 0; a < alphabet_size; ++a)
      if (std::size_t t = next(order[i], a); position[t] == state_count) {
        position[t] = order.size();
        order.push_back(t);
      }

  const std::size_t n = order.size();
  std::vector<std::size_t> block(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = accepting[order[i]] ? 1 : 0;
  std::size_t block_count = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    std::vector<std::size_t> refined(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> sig{block[i]};
      for (Letter a = 0; a < alphabet_size; ++a) sig.push_back(block[position[next(order[i], a)]]);
      refined[i] = signatures.emplace(std::move(sig), signatures.size()).first->second;
    }
    const bool stable = signatures.size() == block_count;
    block_count = signatures.size();
    block = std::move(refined);
    if (stable) break;
  }

  // Renumber blocks by first appearance in breadth-first order.
  std::vector<std::size_t> renumber(block_count, block_count);
  std::size_t next_id = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (renumber[block[i]] == block_count) renumber[block[i]] = next_id++;

  GeodesicDfa out;
  out.alphabet_size = alphabet_size;
  out.state_count = block_count;
  out.start = renumber[block[0]];
  out.transitions.assign(block_count * alphabet_size, 0);
  out.accepting.assign(block_count, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t b = renumber[block[i]];
    out.accepting[b] = accepting[order[i]];
    for (Letter a = 0; a < alphabet_size; ++a)
      out.transitions[b * alphabet_size + a] = renumber[block[position[next(order[i], a)]]];
  }
  for (std::size_t b = 0; b < block_count; ++b) {
    if (out.accepting[b]) continue;
    bool absorbing = true;
    for (Letter a = 0; a < alphabet_size; ++a) absorbing = absorbing && out.next(b, a) == b;
    if (absorbing) out.fail = b;
  }
  return out;
}

bool equivalent(const GeodesicDfa& a, const GeodesicDfa& b) {
  if (a.alphabet_size != b.alphabet_size) return false;
  std::set<std::pair<std::size_t, std::size_t>> seen{{a.start, b.start}};
  std::deque<std::pair<std::size_t, std::size_t>> queue{{a.start, b.start}};
  while (!queue.empty()) {
    const auto [x, y] = queue.front();
    queue.pop_front();
    if (a.accepting[x] != b.accepting[y]) return false;
    for (Letter l = 0; l < a.alphabet_size; ++l) {
      std::pair p{a.next(x, l), b.next(y, l)};
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return true;
}

algebra::RationalSeries language_series(const GeodesicDfa& dfa) {
  const auto m = dfa.count_matrix();
  const std::size_t bound = m.size();
  if (bound == 0) return algebra::RationalSeries::polynomial({});
  const auto counts = algebra::transfer_count(m, 4 * bound);
  return algebra::fit_recurrence(counts, bound);
}

}  // namespace geogrowth::racg
