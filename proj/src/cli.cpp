#include "chromhom/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "chromhom/broken_circuits.hpp"
#include "chromhom/homology.hpp"
#include "chromhom/oracles.hpp"
#include "chromhom/symfun.hpp"

namespace chromhom::cli {

using nlohmann::json;

ModelChoice parse_model_choice(const std::string& name) {
  if (name == "full") return ModelChoice::full;
  if (name == "nbc") return ModelChoice::nbc;
  if (name == "both") return ModelChoice::both;
  throw std::invalid_argument("unknown model '" + name + "' (expected full, nbc or both)");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "tsv") return OutputFormat::tsv;
  throw std::invalid_argument("unknown format '" + name + "' (expected json or tsv)");
}

VerifyLevel parse_verify_level(const std::string& name) {
  if (name == "fast") return VerifyLevel::fast;
  if (name == "paranoid") return VerifyLevel::paranoid;
  throw std::invalid_argument("unknown verification level '" + name + "' (expected fast or paranoid)");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<Model> models_of(ModelChoice choice) {
  switch (choice) {
    case ModelChoice::full:
      return {Model::full};
    case ModelChoice::nbc:
      return {Model::nbc};
    case ModelChoice::both:
      break;
  }
  return {Model::full, Model::nbc};
}

json subset_list(const std::vector<EdgeSubset>& sets) {
  json out = json::array();
  for (const EdgeSubset& s : sets) out.push_back(s.members());
  return out;
}

std::uint64_t full_state_count(const Graph& g) { return std::uint64_t{1} << g.edge_count(); }

bool is_connected(const Graph& g) { return component_count(g, g.full_subset()) == 1; }

}  // namespace

// ---------------------------------------------------------------------------

std::vector<PropertyResult> run_verification(const Graph& g, const GradedAlgebra& a, const VerifyOptions& options) {
  std::vector<PropertyResult> results;
  auto record = [&](std::string name, bool passed, std::string witness = {}) {
    results.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
  };
  const bool exhaustive = g.edge_count() <= max_exhaustive_edges;

  if (exhaustive) {
    auto diamond = find_unbalanced_diamond(g, options.sign);
    record("balanced-coloring", !diamond, diamond ? "even number of -1 labels on " + diamond->to_string() : "");
    auto noncommuting = find_noncommuting_diamond(g, a);
    record("diamond-commutativity", !noncommuting, noncommuting ? "maps differ on " + noncommuting->to_string() : "");

    Matching m = build_matching(g);
    MatchingReport mr = check_matching(g, m);
    record("matching-perfect", mr.perfect && mr.covers_only, mr.witness);
    record("matching-partition", mr.partition_preserving, mr.witness);
    record("matching-acyclic", verify_acyclic(g, m), "the reversed cover digraph on BC has a directed cycle");
    try {
      linear_extension(g, m);
      record("linear-extension", true);
    } catch (const LinearExtensionError& e) {
      record("linear-extension", false, e.what());
    }
    MorseReport morse = verify_morse_hypothesis(g, a, m);
    record("morse-hypothesis", morse.ok(), morse.witness);

    ChromaticPolynomial bc_chi = bc_chromatic_sum(g);
    record("whitney-cancellation-chromatic", bc_chi.is_zero(), "BC sum is " + bc_chi.to_string());
    PSymFun bc_csf = bc_csf_sum(g);
    record("whitney-cancellation-csf", bc_csf.is_zero(), "BC sum is " + bc_csf.to_string());
    CancellationReport pairwise = check_pairwise_cancellation(g, m);
    record("whitney-cancellation-pairwise", pairwise.ok, pairwise.witness);

    ChromaticPolynomial statesum = chromatic_statesum(g);
    ChromaticPolynomial nbc = chromatic_nbc(g);
    ChromaticPolynomial delcon = chromatic_delcon(g);
    record("chromatic-three-way", statesum == nbc && nbc == delcon,
           "statesum " + statesum.to_string() + ", nbc " + nbc.to_string() + ", delcon " + delcon.to_string());
    record("csf-nbc", csf_statesum(g) == csf_nbc(g), "state sum and NBC sum differ");
  }

  if (options.level == VerifyLevel::paranoid && g.edge_count() <= max_paranoid_edges) {
    std::vector<EdgeSubset> cycles = oracle::enumerate_cycles(g);
    std::string witness;
    const std::uint64_t total = full_state_count(g);
    for (std::uint64_t bits = 0; bits < total && witness.empty(); ++bits) {
      EdgeSubset s(g.edge_count(), bits);
      if (pivot_edge(g, s) != oracle::pivot_by_cycles(g, s, cycles)) witness = "pivot differs at " + s.to_string();
    }
    record("nbc-cycle-oracle", witness.empty(), witness);

    ChromaticPolynomial chi = chromatic_delcon(g);
    witness.clear();
    for (unsigned k = 0; k <= 5 && witness.empty(); ++k)
      if (chi.evaluate(k) != count_colorings(g, k)) witness = "chi(" + std::to_string(k) + ") != coloring count";
    record("coloring-counts", witness.empty(), witness);
  }

  std::vector<Model> models = exhaustive ? std::vector<Model>{Model::full, Model::nbc} : std::vector<Model>{Model::nbc};
  std::vector<HomologySummary> summaries;
  const LaurentPolynomial expected_euler = substitute_qrank(chromatic_delcon(g), qrank(a));
  for (Model model : models) {
    BasedComplex c = build_complex(g, a, model);
    auto bad = find_nonzero_square(c);
    record("d-squared-zero-" + to_string(model), !bad,
           bad ? "bigrade (" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ")" : "");
    if (bad) continue;
    HomologySummary h = homology(c, options.threads);
    LaurentPolynomial chi_c = graded_euler_characteristic(c);
    LaurentPolynomial chi_h = euler_characteristic(h);
    record("euler-" + to_string(model), chi_c == chi_h && chi_h == expected_euler,
           "complex " + chi_c.to_string() + ", homology " + chi_h.to_string() + ", chi(qrank) " +
               expected_euler.to_string());
    if (is_connected(g)) {
      auto s = support(h);
      bool bounded = !s || (s->i_min >= 0 && s->i_max <= static_cast<int>(g.vertex_count()) - 1);
      record("support-bound-" + to_string(model), bounded,
             s ? "homology in degree " + std::to_string(s->i_max) : "");
    }
    summaries.push_back(std::move(h));
  }
  if (summaries.size() == 2) {
    std::vector<std::string> diff = diff_summaries(summaries[0], summaries[1]);
    record("homology-full-equals-nbc", diff.empty(), diff.empty() ? "" : diff.front());
  }
  return results;
}

// ---------------------------------------------------------------------------

CommandResult cmd_info(const RunConfig& cfg) {
  Graph g = load_edge_list(cfg.graph);
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  const std::size_t nbc = nbc_count(g);
  const std::size_t k = component_count(g, g.full_subset());
  if (cfg.format == OutputFormat::tsv) {
    std::ostringstream out;
    out << "vertices\t" << g.vertex_count() << "\nedges\t" << g.edge_count() << "\ncomponents\t" << k
        << "\nstates_full\t" << full_state_count(g) << "\nstates_nbc\t" << nbc << '\n';
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      out << "edge\t" << i << '\t' << g.edge(i).u << '\t' << g.edge(i).v << '\n';
    return {0, out.str()};
  }
  return {0, dump({{"vertices", g.vertex_count()},
                   {"edges", edges},
                   {"components", k},
                   {"states_full", full_state_count(g)},
                   {"states_nbc", nbc}})};
}

CommandResult cmd_nbc(const RunConfig& cfg) {
  Graph g = load_edge_list(cfg.graph);
  std::vector<EdgeSubset> sets = nbc_sets(g);
  if (cfg.format == OutputFormat::tsv) {
    std::ostringstream out;
    out << "index\tedges\tsize\tcomponents\n";
    for (std::size_t i = 0; i < sets.size(); ++i)
      out << i << '\t' << sets[i].to_string() << '\t' << sets[i].count() << '\t' << component_count(g, sets[i])
          << '\n';
    out << "# nbc " << sets.size() << " of " << full_state_count(g) << '\n';
    return {0, out.str()};
  }
  return {0, dump({{"count", sets.size()}, {"total", full_state_count(g)}, {"states", subset_list(sets)}})};
}

CommandResult cmd_matching(const RunConfig& cfg) {
  Graph g = load_edge_list(cfg.graph);
  Matching m = build_matching(g);
  std::vector<EdgeSubset> order;
  std::string failure;
  try {
    order = linear_extension(g, m);
  } catch (const LinearExtensionError& e) {
    failure = e.what();
  }
  const bool acyclic = verify_acyclic(g, m);
  const int code = failure.empty() && acyclic ? 0 : 1;
  if (cfg.format == OutputFormat::tsv) {
    std::ostringstream out;
    out << "lower\tupper\tedge\n";
    for (const MatchedPair& p : m.pairs) out << p.lower.to_string() << '\t' << p.upper.to_string() << '\t' << p.edge << '\n';
    out << "# linear extension";
    for (const EdgeSubset& s : order) out << ' ' << s.to_string();
    out << "\n# acyclic " << (acyclic ? "yes" : "no") << '\n';
    if (!failure.empty()) out << "# " << failure << '\n';
    return {code, out.str()};
  }
  json pairs = json::array();
  for (const MatchedPair& p : m.pairs)
    pairs.push_back({{"lower", p.lower.members()}, {"upper", p.upper.members()}, {"edge", p.edge}});
  json out = {{"pairs", pairs}, {"linear_extension", subset_list(order)}, {"acyclic", acyclic}};
  if (!failure.empty()) out["error"] = failure;
  return {code, dump(out)};
}

CommandResult cmd_homology(const RunConfig& cfg) {
  Graph g = load_edge_list(cfg.graph);
  GradedAlgebra a = resolve_algebra(cfg.algebra);
  json models = json::object();
  std::vector<HomologySummary> summaries;
  std::ostringstream tsv;
  json dumps = json::object();
  for (Model model : models_of(cfg.model)) {
    auto start = Clock::now();
    BasedComplex c = build_complex(g, a, model);
    double build_seconds = seconds_since(start);
    start = Clock::now();
    HomologySummary h = homology(c, cfg.threads);
    double snf_seconds = seconds_since(start);

    json entry = homology_to_json(h);
    entry["states"] = c.states().size();
    if (cfg.timing) entry["seconds"] = build_seconds + snf_seconds;
    models[to_string(model)] = entry;
    if (!cfg.dump_complex.empty()) dumps[to_string(model)] = complex_to_json(c);

    tsv << "# model " << to_string(model) << " states " << c.states().size() << '\n' << homology_to_tsv(h);
    summaries.push_back(std::move(h));
  }
  if (!cfg.dump_complex.empty()) {
    std::ofstream out(cfg.dump_complex);
    if (!out) throw std::runtime_error("cannot write " + cfg.dump_complex.string());
    out << dump(dumps);
  }

  std::vector<std::string> diff;
  if (summaries.size() == 2) diff = diff_summaries(summaries[0], summaries[1]);
  const int code = diff.empty() ? 0 : 1;
  if (cfg.format == OutputFormat::tsv) {
    for (const std::string& line : diff) tsv << "# diff " << line << '\n';
    return {code, tsv.str()};
  }
  json out = {{"algebra", a.name()}, {"models", models}};
  if (summaries.size() == 2) out["diff"] = diff;
  return {code, dump(out)};
}

CommandResult cmd_chromatic(const RunConfig& cfg) {
  Graph g = load_edge_list(cfg.graph);
  ChromaticPolynomial statesum = chromatic_statesum(g);
  ChromaticPolynomial nbc = chromatic_nbc(g);
  ChromaticPolynomial delcon = chromatic_delcon(g);
  const bool agree = statesum == nbc && nbc == delcon;
  if (cfg.format == OutputFormat::tsv) {
    std::ostringstream out;
    out << "route\tpolynomial\n";
    out << "statesum\t" << statesum.to_string() << "\nnbc\t" << nbc.to_string() << "\ndelcon\t" << delcon.to_string()
        << '\n';
    return {agree ? 0 : 1, out.str()};
  }
  return {agree ? 0 : 1, dump({{"polynomial", statesum.to_string()},
                               {"statesum", polynomial_to_json(statesum)},
                               {"nbc", polynomial_to_json(nbc)},
                               {"delcon", polynomial_to_json(delcon)},
                               {"agree", agree}})};
}

CommandResult cmd_csf(const RunConfig& cfg) {
  Graph g = load_edge_list(cfg.graph);
  PSymFun statesum = csf_statesum(g);
  PSymFun nbc = csf_nbc(g);
  const bool agree = statesum == nbc;
  if (cfg.format == OutputFormat::tsv) {
    std::ostringstream out;
    out << "partition\tstatesum\tnbc\n";
    for (const auto& [lambda, c] : statesum.terms())
      out << lambda.to_string() << '\t' << c.get_str() << '\t' << nbc.coefficient(lambda).get_str() << '\n';
    return {agree ? 0 : 1, out.str()};
  }
  return {agree ? 0 : 1, dump({{"expression", statesum.to_string()},
                               {"statesum", psymfun_to_json(statesum)},
                               {"nbc", psymfun_to_json(nbc)},
                               {"agree", agree}})};
}

CommandResult cmd_verify(const RunConfig& cfg) {
  Graph g = load_edge_list(cfg.graph);
  GradedAlgebra a = resolve_algebra(cfg.algebra);
  VerifyOptions options;
  options.level = cfg.verify;
  options.threads = cfg.threads;
  std::vector<PropertyResult> results = run_verification(g, a, options);
  bool all = true;
  for (const PropertyResult& r : results) all = all && r.passed;
  if (cfg.format == OutputFormat::json) {
    json list = json::array();
    for (const PropertyResult& r : results) {
      json item = {{"property", r.name}, {"passed", r.passed}};
      if (!r.passed) item["witness"] = r.witness;
      list.push_back(item);
    }
    return {all ? 0 : 1, dump({{"algebra", a.name()}, {"passed", all}, {"properties", list}})};
  }
  std::ostringstream out;
  for (const PropertyResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) out << ": " << r.witness;
    out << '\n';
  }
  return {all ? 0 : 1, out.str()};
}

CommandResult cmd_bench(const RunConfig& cfg) {
  Graph g = load_edge_list(cfg.graph);
  GradedAlgebra a = resolve_algebra(cfg.algebra);
  struct Row {
    Model model;
    std::size_t states;
    std::size_t dimension;
    std::size_t max_rows;
    std::size_t max_cols;
    double build_seconds;
    double snf_seconds;
  };
  std::vector<Row> rows;
  for (Model model : {Model::full, Model::nbc}) {
    auto start = Clock::now();
    BasedComplex c = build_complex(g, a, model);
    double build = seconds_since(start);
    start = Clock::now();
    homology(c, cfg.threads);
    double snf = seconds_since(start);
    std::size_t max_rows = 0, max_cols = 0;
    for (const auto& [bigrade, d] : c.differentials())
      if (d.rows() * d.cols() > max_rows * max_cols) {
        max_rows = d.rows();
        max_cols = d.cols();
      }
    rows.push_back({model, c.states().size(), c.total_dimension(), max_rows, max_cols, build, snf});
  }
  const double full_time = rows[0].build_seconds + rows[0].snf_seconds;
  const double nbc_time = rows[1].build_seconds + rows[1].snf_seconds;
  const double speedup = nbc_time > 0 ? full_time / nbc_time : 0.0;

  if (cfg.format == OutputFormat::tsv) {
    std::ostringstream out;
    out << "model\tstates\tdimension\tlargest_matrix";
    if (cfg.timing) out << "\tbuild_s\tsnf_s";
    out << '\n';
    for (const Row& r : rows) {
      out << to_string(r.model) << '\t' << r.states << '\t' << r.dimension << '\t' << r.max_rows << 'x' << r.max_cols;
      if (cfg.timing) out << '\t' << r.build_seconds << '\t' << r.snf_seconds;
      out << '\n';
    }
    if (cfg.timing) out << "# speedup " << speedup << '\n';
    return {0, out.str()};
  }
  json models = json::object();
  for (const Row& r : rows) {
    json entry = {{"states", r.states}, {"dimension", r.dimension}, {"largest_matrix", {r.max_rows, r.max_cols}}};
    if (cfg.timing) {
      entry["build_seconds"] = r.build_seconds;
      entry["snf_seconds"] = r.snf_seconds;
    }
    models[to_string(r.model)] = entry;
  }
  json out = {{"algebra", a.name()}, {"models", models}};
  if (cfg.timing) out["speedup"] = speedup;
  return {0, dump(out)};
}

CommandResult run(const RunConfig& cfg) {
  if (cfg.command == "info") return cmd_info(cfg);
  if (cfg.command == "nbc") return cmd_nbc(cfg);
  if (cfg.command == "matching") return cmd_matching(cfg);
  if (cfg.command == "homology") return cmd_homology(cfg);
  if (cfg.command == "chromatic") return cmd_chromatic(cfg);
  if (cfg.command == "csf") return cmd_csf(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "bench") return cmd_bench(cfg);
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

}  // namespace chromhom::cli
