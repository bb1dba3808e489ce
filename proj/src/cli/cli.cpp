#include "geogrowth/cli.hpp"

#include <CLI11.hpp>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "geogrowth/coxgraph.hpp"
#include "geogrowth/evencox.hpp"
#include "geogrowth/oracle.hpp"
#include "geogrowth/racg.hpp"
#include "geogrowth/report_json.hpp"

namespace geogrowth::cli {

namespace {

using algebra::BigInt;
using algebra::RationalSeries;
using coxgraph::CoxeterGraph;
using io::json;

enum class Exit { ok = 0, usage = 1, mismatch = 2, budget = 3 };

/// Bad input that is not a parse error: wrong kind for the labels, etc.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string path;
  std::string path_b;
  std::string kind = "racg";
  std::string format = "text";
  std::size_t terms = 10;
  std::size_t max_len = 12;
  std::size_t max_rank = 4;
  std::size_t budget = oracle::default_budget;
  bool no_fast_path = false;
  bool no_symmetry = false;
  std::size_t formula_n = 0;
  std::size_t formula_l = 0;
  std::size_t max_vertices = 9;
};

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += xs[i].str();
  }
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string clique_names(const CoxeterGraph& g, const coxgraph::Clique& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + g.name(c[i]);
  return s + "}";
}

CoxeterGraph load_graph(const std::string& path) {
  try {
    return CoxeterGraph::load(path);
  } catch (const coxgraph::ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void check_kind(const CoxeterGraph& g, const std::string& kind) {
  if ((kind == "racg" || kind == "raag") && !g.is_right_angled())
    throw InputError("kind " + kind + " needs every label to be 2");
  if (kind == "even" && !coxgraph::is_triangle_free(g))
    throw InputError("kind even needs a triangle-free graph");
}

void write_counts_csv(std::ostream& out, const std::vector<BigInt>& counts) {
  out << "n,count\n";
  for (std::size_t i = 0; i < counts.size(); ++i) out << i << ',' << counts[i] << '\n';
}

Exit cmd_analyze(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.path);
  const auto f = coxgraph::f_polynomial(g);
  const bool triangle_free = coxgraph::is_triangle_free(g);
  const auto reg = coxgraph::link_regularity(g);
  const auto star = coxgraph::star_regularity(g);
  const auto degree = coxgraph::regular_degree(g);
  const auto klinks = g.is_right_angled() ? coxgraph::klink_f_polynomials(g)
                                          : std::map<std::size_t, std::set<algebra::IntPolynomial>>{};

  if (o.format == "json") {
    json j{{"vertices", g.vertex_count()},
           {"edges", g.edge_count()},
           {"right_angled", g.is_right_angled()},
           {"f_polynomial", io::to_json(f)},
           {"triangle_free", triangle_free},
           {"link_regularity", io::to_json(g, reg)},
           {"star_regular", star.is_star_regular}};
    j["regular_degree"] = degree ? json(*degree) : json(nullptr);
    if (star.witness) j["star_witness"] = {g.name(star.witness->first), g.name(star.witness->second)};
    json kl = json::object();
    for (const auto& [size, polys] : klinks) {
      json list = json::array();
      for (const auto& p : polys) list.push_back(io::to_json(p));
      kl[std::to_string(size)] = list;
    }
    if (g.is_right_angled()) j["klink_f_polynomials"] = kl;
    out << j.dump(2) << '\n';
    return Exit::ok;
  }

  out << "vertices: " << g.vertex_count() << '\n';
  out << "edges: " << g.edge_count() << '\n';
  out << "right-angled: " << yes_no(g.is_right_angled()) << '\n';
  out << "f-polynomial: " << f.to_string("t") << '\n';
  out << "triangle-free: " << yes_no(triangle_free) << '\n';
  out << "regular: " << (degree ? "yes, degree " + std::to_string(*degree) : std::string("no")) << '\n';
  out << "link-regular: " << yes_no(reg.is_link_regular);
  if (reg.witness)
    out << " (witness " << clique_names(g, reg.witness->first) << " vs " << clique_names(g, reg.witness->second)
        << ")";
  out << '\n';
  for (const auto& [size, l] : reg.link_sizes) out << "  |link| of " << size << "-cliques: " << l << '\n';
  out << "star-regular: " << yes_no(star.is_star_regular);
  if (star.witness) out << " (witness " << g.name(star.witness->first) << " vs " << g.name(star.witness->second) << ")";
  out << '\n';
  if (g.is_right_angled()) {
    out << "K-link f-polynomials:\n";
    for (const auto& [size, polys] : klinks) {
      out << "  size " << size << ':';
      for (const auto& p : polys) out << "  " << p.to_string("t");
      out << '\n';
    }
  }
  return Exit::ok;
}

Exit cmd_growth(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.path);
  check_kind(g, o.kind);
  std::vector<BigInt> counts;
  RationalSeries series = RationalSeries::polynomial(algebra::IntPolynomial{1});
  if (o.kind == "racg") {
    counts = racg::growth_counts_racg(g, o.terms);
    series = racg::growth_series_racg(g);
  } else if (o.kind == "raag") {
    counts = racg::growth_counts_raag(g, o.terms);
    series = racg::growth_series_raag(g);
  } else {
    const evencox::EvenSystem sys(g);
    counts = evencox::count_geodesics_even(sys, o.terms);
    series = evencox::growth_series_even(sys);
  }

  std::optional<RationalSeries> formula;
  const auto degree = coxgraph::regular_degree(g);
  if (o.kind == "racg" && degree && coxgraph::is_triangle_free(g) && g.vertex_count() >= 4)
    formula = racg::formula_regular_trianglefree(g.vertex_count(), *degree);

  if (o.format == "csv") {
    write_counts_csv(out, counts);
    return Exit::ok;
  }
  if (o.format == "json") {
    json j{{"kind", o.kind}, {"terms", o.terms}, {"counts", io::to_json(counts)}, {"series", io::to_json(series)}};
    if (formula) j["formula"] = {{"series", io::to_json(*formula)}, {"match", *formula == series}};
    out << j.dump(2) << '\n';
    return Exit::ok;
  }
  out << "counts: " << join(counts) << '\n';
  out << "series: " << series.to_string() << '\n';
  if (formula)
    out << "formula (n=" << g.vertex_count() << ", l=" << *degree << "): " << formula->to_string() << '\n'
        << "formula check: " << (*formula == series ? "MATCH" : "MISMATCH") << '\n';
  return Exit::ok;
}

void print_table(std::ostream& out, const evencox::ChainTable& t) {
  for (std::size_t m = 1; m <= t.max_rank; ++m)
    for (std::size_t n = 0; n <= t.max_len; ++n)
      if (t.at(m, n) != 0) out << "Q[" << m << "][" << n << "]=" << t.at(m, n) << '\n';
}

Exit cmd_compare(const Options& o, std::ostream& out) {
  const auto a = load_graph(o.path);
  const auto b = load_graph(o.path_b);
  for (const auto* g : {&a, &b})
    if (!g->is_right_angled() && !coxgraph::is_triangle_free(*g))
      throw InputError("compare needs triangle-free or right-angled graphs");
  const auto r = evencox::compare_systems(a, b, o.terms, o.max_len, o.max_rank);
  const Exit code = r.series_equal ? Exit::ok : Exit::mismatch;

  if (o.format == "json") {
    out << io::to_json(a, b, r).dump(2) << '\n';
    return code;
  }
  const auto describe = [&](const char* tag, const std::string& path, const evencox::SystemSummary& s) {
    out << tag << ": " << path << "  generators " << s.generators << ", triangle-free " << yes_no(s.triangle_free)
        << ", star-regular " << yes_no(s.star_regular) << '\n';
    out << "  counts: " << join(s.counts) << '\n';
    out << "  series: " << s.series.to_string() << '\n';
  };
  describe("A", o.path, r.a);
  describe("B", o.path_b, r.b);
  out << "same |S|: " << yes_no(r.same_generator_count) << '\n';
  out << "stars isomorphic: " << yes_no(r.stars_isomorphic) << '\n';
  out << "hypotheses: " << (r.hypotheses_hold ? "hold" : "fail") << '\n';
  if (r.chain_tables_equal)
    out << "chain tables, R-valid sequences (len " << o.max_len << ", rank " << o.max_rank
        << "): " << (*r.chain_tables_equal ? "equal" : "differ") << '\n';
  if (r.definition_tables_equal)
    out << "chain tables, rigid by definition: " << (*r.definition_tables_equal ? "equal" : "differ") << '\n';
  out << "counts to n=" << o.terms << ": " << (r.counts_equal ? "equal" : "differ") << '\n';
  if (r.series_equal) {
    out << "EQUAL\n";
  } else if (r.first_difference) {
    const auto k = *r.first_difference;
    out << "DIFFER at n=" << k << " (" << r.a.counts[k] << " vs " << r.b.counts[k] << ")\n";
  } else {
    out << "DIFFER (series)\n";
  }
  return code;
}

Exit cmd_chains(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.path);
  check_kind(g, "even");
  const evencox::EvenSystem sys(g);
  const auto valid = evencox::enumerate_rigid_chains(sys, o.max_len, o.max_rank);
  const auto rigid = evencox::recount_rigid_chains(sys, o.max_len, o.max_rank);
  // The inversion is exact up to n when max_len >= n and max_rank >= n - 1.
  const std::size_t reach = std::min(o.max_len, o.max_rank + 1);
  const auto from_chains = evencox::counts_from_chains(rigid, sys.generator_count(), reach);
  const auto scanned = evencox::count_geodesics_even(sys, reach);

  if (o.format == "json") {
    json j{{"r_valid", io::to_json(valid)},
           {"rigid", io::to_json(rigid)},
           {"counts_from_rigid_chains", io::to_json(from_chains)},
           {"scanner_counts", io::to_json(scanned)},
           {"match", from_chains == scanned}};
    out << j.dump(2) << '\n';
    return Exit::ok;
  }
  out << "R-valid sequences:\n";
  print_table(out, valid);
  out << "rigid chains by definition:\n";
  print_table(out, rigid);
  out << "counts from rigid chains: " << join(from_chains) << '\n';
  out << "scanner counts:           " << join(scanned) << '\n';
  out << "chain inversion: " << (from_chains == scanned ? "MATCH" : "MISMATCH") << '\n';
  return Exit::ok;
}

Exit cmd_oracle(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.path);
  check_kind(g, o.kind);
  oracle::CountOptions options{o.budget, !o.no_fast_path, !o.no_symmetry};
  std::vector<BigInt> automaton, truth;
  if (o.kind == "racg") {
    automaton = racg::growth_counts_racg(g, o.terms);
    truth = oracle::oracle_counts(g, o.terms, options);
  } else if (o.kind == "raag") {
    automaton = racg::growth_counts_raag(g, o.terms);
    truth = oracle::oracle_counts_raag(g, o.terms, options);
  } else {
    automaton = evencox::count_geodesics_even(evencox::EvenSystem(g), o.terms);
    truth = oracle::oracle_counts(g, o.terms, options);
  }
  const bool match = automaton == truth;
  if (o.format == "json") {
    out << json{{"kind", o.kind}, {"automaton", io::to_json(automaton)}, {"oracle", io::to_json(truth)}, {"match", match}}
               .dump(2)
        << '\n';
  } else {
    out << "automaton: " << join(automaton) << '\n';
    out << "oracle:    " << join(truth) << '\n';
    out << (match ? "MATCH" : "MISMATCH") << '\n';
  }
  return match ? Exit::ok : Exit::mismatch;
}

Exit cmd_formula(const Options& o, std::ostream& out) {
  const auto s = racg::formula_regular_trianglefree(o.formula_n, o.formula_l);
  const auto counts = s.expand(o.terms);
  if (o.format == "csv") {
    write_counts_csv(out, counts);
  } else if (o.format == "json") {
    out << json{{"n", o.formula_n}, {"l", o.formula_l}, {"series", io::to_json(s)}, {"counts", io::to_json(counts)}}
               .dump(2)
        << '\n';
  } else {
    out << "series: " << s.to_string() << '\n';
    out << "counts: " << join(counts) << '\n';
  }
  return Exit::ok;
}

std::string edge_list(const CoxeterGraph& g) {
  std::string s;
  for (const auto& [e, m] : g.edges()) s += (s.empty() ? "" : " ") + g.name(e.first) + '-' + g.name(e.second);
  return s;
}

/// Groups the trees on each vertex count by geodesic growth series.
Exit cmd_trees(const Options& o, std::ostream& out) {
  json rows = json::array();
  for (std::size_t n = 1; n <= o.max_vertices; ++n) {
    const auto trees = coxgraph::nonisomorphic_trees(n);
    std::map<std::string, std::vector<std::size_t>> by_series;
    std::vector<std::string> series;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      series.push_back(racg::growth_series_racg(trees[i]).to_string());
      by_series[series.back()].push_back(i);
    }
    json collisions = json::array();
    for (const auto& [s, members] : by_series)
      if (members.size() > 1) {
        json group = json::array();
        for (auto i : members) group.push_back(edge_list(trees[i]));
        collisions.push_back({{"series", s}, {"trees", group}});
      }
    if (o.format == "json") {
      rows.push_back({{"vertices", n}, {"trees", trees.size()}, {"distinct_series", by_series.size()},
                      {"collisions", collisions}});
      continue;
    }
    out << "n=" << n << " trees=" << trees.size() << " distinct series=" << by_series.size() << '\n';
    for (const auto& c : collisions) {
      out << "  shared " << c["series"].get<std::string>() << '\n';
      for (const auto& t : c["trees"]) out << "    " << t.get<std::string>() << '\n';
    }
  }
  if (o.format == "json") out << rows.dump(2) << '\n';
  return Exit::ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geodesic growth of right-angled and even Coxeter groups", "geogrowth"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"text", "json", "csv"};
  const std::vector<std::string> kinds{"racg", "raag", "even"};

  auto add_format = [&](CLI::App* c) { c->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember(formats)); };
  auto add_kind = [&](CLI::App* c) { c->add_option("--kind", o.kind, "racg, raag or even")->check(CLI::IsMember(kinds)); };

  auto* analyze = app.add_subcommand("analyze", "Clique, link and star structure of a graph");
  analyze->add_option("graph", o.path)->required();
  add_format(analyze);

  auto* growth = app.add_subcommand("growth", "Geodesic counts and growth series");
  growth->add_option("graph", o.path)->required();
  add_kind(growth);
  growth->add_option("--terms", o.terms, "highest length counted");
  add_format(growth);

  auto* compare = app.add_subcommand("compare", "Compare two systems; exit 2 when the series differ");
  compare->add_option("graph_a", o.path)->required();
  compare->add_option("graph_b", o.path_b)->required();
  compare->add_option("--terms", o.terms);
  compare->add_option("--max-len", o.max_len);
  compare->add_option("--max-rank", o.max_rank);
  add_format(compare);

  auto* chains = app.add_subcommand("chains", "Rigid chain counts Q[rank][length]");
  chains->add_option("graph", o.path)->required();
  chains->add_option("--max-len", o.max_len);
  chains->add_option("--max-rank", o.max_rank);
  add_format(chains);

  auto* orc = app.add_subcommand("oracle", "Check automaton counts against braid-move enumeration");
  orc->add_option("graph", o.path)->required();
  add_kind(orc);
  orc->add_option("--terms", o.terms);
  orc->add_option("--budget", o.budget, "largest braid class explored");
  orc->add_flag("--no-fast-path", o.no_fast_path, "use braid closure even for right-angled graphs");
  orc->add_flag("--no-symmetry", o.no_symmetry, "do not reduce by graph automorphisms");
  add_format(orc);

  auto* formula = app.add_subcommand("formula", "Growth series of an l-regular triangle-free graph on n vertices");
  formula->add_option("--n", o.formula_n)->required();
  formula->add_option("--l", o.formula_l)->required();
  formula->add_option("--terms", o.terms);
  add_format(formula);

  auto* trees = app.add_subcommand("trees", "Group trees by the growth series of their right-angled groups");
  trees->add_option("--max-vertices", o.max_vertices);
  add_format(trees);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(Exit::usage);
  }

  try {
    Exit code = Exit::ok;
    if (*analyze) code = cmd_analyze(o, out);
    else if (*growth) code = cmd_growth(o, out);
    else if (*compare) code = cmd_compare(o, out);
    else if (*chains) code = cmd_chains(o, out);
    else if (*orc) code = cmd_oracle(o, out);
    else if (*formula) code = cmd_formula(o, out);
    else if (*trees) code = cmd_trees(o, out);
    return static_cast<int>(code);
  } catch (const oracle::BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return static_cast<int>(Exit::budget);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return static_cast<int>(Exit::usage);
}

}  // namespace geogrowth::cli
