#pragma once

#include "json.hpp"
#include <vector>

#include "geogrowth/coxgraph.hpp"
#include "geogrowth/evencox.hpp"
#include "geogrowth/racg.hpp"
#include "geogrowth/series.hpp"

namespace geogrowth::io {

using nlohmann::json;

/// A number when it fits in 64 bits, otherwise its decimal string.
json to_json(const algebra::BigInt& x);
json to_json(const std::vector<algebra::BigInt>& xs);
/// Coefficients, constant term first.
json to_json(const algebra::IntPolynomial& p);
json to_json(const algebra::RationalSeries& s);

json to_json(const coxgraph::CoxeterGraph& g, const coxgraph::RegularityReport& r);
json to_json(const racg::SizeProfile& p);
json to_json(const racg::SuffixReport& r);
/// Rows 1..max_rank of q.
json to_json(const evencox::ChainTable& t);
json to_json(const coxgraph::CoxeterGraph& g, const evencox::SystemSummary& s);
json to_json(const coxgraph::CoxeterGraph& a, const coxgraph::CoxeterGraph& b, const evencox::ComparisonReport& r);

}  // namespace geogrowth::io
