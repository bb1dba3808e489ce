#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "geogrowth/counting.hpp"

namespace geogrowth::racg {

using Letter = std::size_t;

/// Complete deterministic automaton over letters 0..alphabet_size-1.
struct GeodesicDfa {
  std::size_t alphabet_size = 0;
  std::size_t state_count = 0;
  std::size_t start = 0;
  /// Absorbing rejecting state, if the automaton has one.
  std::optional<std::size_t> fail;
  /// transitions[state * alphabet_size + letter]
  std::vector<std::size_t> transitions;
  std::vector<bool> accepting;

  std::size_t next(std::size_t state, Letter letter) const {
    return transitions[state * alphabet_size + letter];
  }
  std::size_t run(std::span<const Letter> word) const;
  bool accepts(std::span<const Letter> word) const { return accepting[run(word)]; }

  /// States reachable from start that can still reach an accepting state.
  std::vector<bool> useful_states() const;

  /// Transfer matrix restricted to useful states.
  algebra::CountMatrix count_matrix() const;
  std::vector<algebra::BigInt> count_words(std::size_t n) const;

  /// Reachable part, Moore partition refinement. Keeps a fail state if some
  /// reachable state is dead.
  GeodesicDfa minimized() const;

  /// Throws std::logic_error on a malformed table or a non-absorbing fail state.
  void validate() const;
};

/// Same language, decided by a breadth-first walk of the product automaton.
bool equivalent(const GeodesicDfa& a, const GeodesicDfa& b);

/// Generating function of the accepted language. With k useful states the
/// counts satisfy a recurrence of order <= k, so 2k+1 terms determine it;
/// 2k further terms are checked on top.
algebra::RationalSeries language_series(const GeodesicDfa& dfa);

}  // namespace geogrowth::racg
