#pragma once

#include <random>
#include <string>
#include <vector>

#include "geogrowth/coxgraph.hpp"

namespace geotest {

using geogrowth::algebra::BigInt;
using geogrowth::coxgraph::CoxeterGraph;

inline CoxeterGraph corpus(const std::string& name) {
  return CoxeterGraph::load(std::string(GEOGROWTH_CORPUS_DIR) + "/" + name + ".graph");
}

inline std::vector<BigInt> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

/// Right-angled triangle-free corpus graphs.
inline const std::vector<std::string> racg_trianglefree{"single", "k2", "p3", "c4", "c6", "c8", "two_c4", "hexagon",
                                                        "edgeless3", "infinite_dihedral", "petersen", "cube",
                                                        "k33", "hexagon_double"};
/// Triangle-free corpus graphs with a label above 2.
inline const std::vector<std::string> even_only{"dihedral4", "squares24", "octagon24", "octagon42", "squares44",
                                                "octagon44"};

inline std::size_t uniform(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace geotest
