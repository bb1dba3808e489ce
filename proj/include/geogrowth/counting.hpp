#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "geogrowth/polynomial.hpp"
#include "geogrowth/series.hpp"

namespace geogrowth::algebra {

/// Transfer matrix of an automaton: matrix[i][j] is the number of letters
/// leading from state i to state j.
struct CountMatrix {
  std::vector<std::vector<BigInt>> matrix;
  std::vector<BigInt> initial;
  std::vector<BigInt> accepting;

  std::size_t size() const { return matrix.size(); }
};

/// Entry k is initial * M^k * accepting for k = 0..n.
std::vector<BigInt> transfer_count(const CountMatrix& m, std::size_t n);

class NoFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimal-order linear recurrence with rational coefficients fitting every
/// term of `sequence`, returned as the generating function.
///
/// The order is the linear complexity: the smallest L such that
/// a_k = c_1 a_{k-1} + ... + c_L a_{k-L} for all L <= k < size. Requires
/// size >= 2*bound + 1, which makes the fitted recurrence unique whenever
/// the true order is at most `bound`. Throws NoFitError if L > bound.
RationalSeries fit_recurrence(std::span<const BigInt> sequence, std::size_t bound);

}  // namespace geogrowth::algebra
