#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "geogrowth/coxgraph.hpp"
#include "geogrowth/polynomial.hpp"

namespace geogrowth::oracle {

using algebra::BigInt;
using coxgraph::CoxeterGraph;
using coxgraph::Vertex;
using coxgraph::Word;

/// The explored part of a braid class outgrew its budget; the answer is
/// unknown rather than false.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_budget = 1'000'000;

struct BraidClass {
  Word seed;
  /// Sorted; includes seed.
  std::vector<Word> members;
  bool reducible = false;
};

/// Words obtained from w by one braid move: an alternating factor
/// s t s ... of length m_{s,t} replaced by t s t ....
std::vector<Word> braid_neighbors(const CoxeterGraph& g, const Word& w);

/// Full closure under braid moves.
BraidClass braid_class(const CoxeterGraph& g, const Word& w, std::size_t budget = default_budget);

/// Tits: w is reduced iff no word braid-equivalent to it has two equal
/// adjacent letters.
bool oracle_is_geodesic(const CoxeterGraph& g, const Word& w, std::size_t budget = default_budget);

/// A reduced word for the element of w, by repeated braid closure and
/// deletion of an adjacent equal pair.
Word oracle_reduce(const CoxeterGraph& g, const Word& w, std::size_t budget = default_budget);

/// Letters x with |w x| < |w|, for reduced w: the last letters over the braid class.
std::vector<bool> right_descents(const CoxeterGraph& g, const Word& w, std::size_t budget = default_budget);

/// Letter counts mod 2 (the image in the abelianization).
std::vector<int> parity_vector(const CoxeterGraph& g, const Word& w);

struct CountOptions {
  std::size_t budget = default_budget;
  /// Commutation-only descent scan for right-angled inputs instead of braid closure.
  bool fast_path = true;
  /// Count one prefix per orbit of the labelled automorphism group.
  bool symmetry = true;
};

/// Geodesic counts for lengths 0..n by depth-first extension of geodesics.
std::vector<BigInt> oracle_counts(const CoxeterGraph& g, std::size_t n, const CountOptions& options = {});

/// Artin group words: letter 2v is v, letter 2v+1 is v^-1.
inline Word::value_type raag_letter(Vertex v, bool inverse) { return 2 * v + (inverse ? 1 : 0); }

/// Free reduction up to commutation: geodesic iff no commutation sequence
/// brings a letter next to its inverse.
bool raag_is_geodesic(const CoxeterGraph& g, const Word& w, std::size_t budget = default_budget);

std::vector<BigInt> oracle_counts_raag(const CoxeterGraph& g, std::size_t n, const CountOptions& options = {});

}  // namespace geogrowth::oracle
