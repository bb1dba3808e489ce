#include "geogrowth/report_json.hpp"

#include <cstdint>
#include <limits>

namespace geogrowth::io {

json to_json(const algebra::BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

json to_json(const std::vector<algebra::BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

json to_json(const algebra::IntPolynomial& p) { return to_json(p.coefficients()); }

json to_json(const algebra::RationalSeries& s) {
  return {{"num", to_json(s.numerator())}, {"den", to_json(s.denominator())}, {"text", s.to_string()}};
}

namespace {

json names_of(const coxgraph::CoxeterGraph& g, const std::vector<coxgraph::Vertex>& vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(g.name(v));
  return out;
}

}  // namespace

json to_json(const coxgraph::CoxeterGraph& g, const coxgraph::RegularityReport& r) {
  json sizes = json::object();
  for (const auto& [k, l] : r.link_sizes) sizes[std::to_string(k)] = l;
  json out{{"link_regular", r.is_link_regular}, {"link_sizes", sizes}};
  if (r.witness) out["witness"] = {names_of(g, r.witness->first), names_of(g, r.witness->second)};
  return out;
}

json to_json(const racg::SizeProfile& p) {
  json out = json::array();
  for (const auto& row : p.table) out.push_back(to_json(row));
  return out;
}

json to_json(const racg::SuffixReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item{{"name", c.name}, {"passed", c.passed}};
    if (c.first_mismatch) item["first_mismatch"] = *c.first_mismatch;
    checks.push_back(item);
  }
  return {{"vertices", r.vertices},         {"degree", r.degree},
          {"growth", to_json(r.growth)},    {"last_one", to_json(r.last_one)},
          {"last_two", to_json(r.last_two)}, {"last_edge", to_json(r.last_edge)},
          {"last_three", to_json(r.last_three)}, {"checks", checks}};
}

json to_json(const evencox::ChainTable& t) {
  json rows = json::array();
  for (std::size_t m = 1; m <= t.max_rank; ++m) rows.push_back(to_json(t.q[m]));
  return {{"max_len", t.max_len}, {"max_rank", t.max_rank}, {"q", rows}};
}

json to_json(const coxgraph::CoxeterGraph& g, const evencox::SystemSummary& s) {
  json out{{"generators", s.generators},
           {"triangle_free", s.triangle_free},
           {"star_regular", s.star_regular},
           {"counts", to_json(s.counts)},
           {"series", to_json(s.series)}};
  if (s.star_witness) out["star_witness"] = {g.name(s.star_witness->first), g.name(s.star_witness->second)};
  if (s.chains) out["chains"] = to_json(*s.chains);
  if (s.rigid_chains) out["rigid_chains"] = to_json(*s.rigid_chains);
  return out;
}

json to_json(const coxgraph::CoxeterGraph& a, const coxgraph::CoxeterGraph& b, const evencox::ComparisonReport& r) {
  json out{{"a", to_json(a, r.a)},
           {"b", to_json(b, r.b)},
           {"same_generator_count", r.same_generator_count},
           {"stars_isomorphic", r.stars_isomorphic},
           {"hypotheses_hold", r.hypotheses_hold},
           {"counts_equal", r.counts_equal},
           {"series_equal", r.series_equal}};
  out["first_difference"] = r.first_difference ? json(*r.first_difference) : json(nullptr);
  if (r.chain_tables_equal) out["chain_tables_equal"] = *r.chain_tables_equal;
  if (r.definition_tables_equal) out["rigid_chain_tables_equal"] = *r.definition_tables_equal;
  return out;
}

}  // namespace geogrowth::io
