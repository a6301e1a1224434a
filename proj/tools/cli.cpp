#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "drfwl/counting.hpp"
#include "drfwl/error.hpp"
#include "drfwl/graph.hpp"
#include "drfwl/oracle.hpp"
#include "drfwl/parallel.hpp"
#include "drfwl/refinement.hpp"
#include "drfwl/tuple_index.hpp"
#include "json.hpp"

namespace drfwl::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::vector<std::string> inputs;
  int d = 2;
  std::string method = "drfwl";
  std::string mask;
  std::string motifs;
  std::string output;
  int threads = 0;
  std::uint64_t seed = 0;
  std::string format;  // empty: subcommand default

  // gen
  std::string family;
  std::vector<std::string> gen_args;
  std::string out_prefix;

  // bench
  std::string bench_family = "regular";
  std::string bench_n = "1000,2000,4000";
  std::string bench_r = "4";

  std::size_t dense_cap = 256;
  std::size_t oracle_cap = 512;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

template <class T>
T parse_number(const std::string& text, const char* what) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (!in || !in.eof()) throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
  return value;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + cfg.output + "'");
  file << text;
}

std::string counts_report(std::size_t n, const std::vector<std::string>& names,
                          const std::vector<std::vector<std::int64_t>>& per_node,
                          const std::vector<std::int64_t>& totals, const std::string& format) {
  if (format == "text") {
    std::ostringstream text;
    text << "n " << n << '\n';
    for (std::size_t i = 0; i < names.size(); ++i) {
      text << names[i] << " total=" << totals[i] << " per_node=";
      for (std::size_t u = 0; u < per_node[i].size(); ++u) text << (u ? "," : "") << per_node[i][u];
      text << '\n';
    }
    return text.str();
  }
  json report;
  report["n"] = n;
  report["substructures"] = json::object();
  for (std::size_t i = 0; i < names.size(); ++i)
    report["substructures"][names[i]] = {{"per_node", per_node[i]}, {"graph_level", totals[i]}};
  return report.dump() + "\n";
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  if (cfg.d < 1) throw std::invalid_argument("--d must be >= 1");
  std::vector<Substructure> wanted;
  if (cfg.motifs.empty()) {
    for (auto s : substructure_catalog())
      if (required_distance(s) <= cfg.d) wanted.push_back(s);
  } else {
    for (const auto& name : split_list(cfg.motifs)) {
      if (name == "clique4") throw CapabilityError("clique4 has no closed form; use the oracle subcommand");
      auto s = parse_substructure(name);
      if (!s) throw std::invalid_argument("unknown motif '" + name + "'");
      if (required_distance(*s) > cfg.d)
        throw CapabilityError(name + " needs d >= " + std::to_string(required_distance(*s)));
      wanted.push_back(*s);
    }
  }
  const Graph g = read_edge_list_file(cfg.inputs.at(0));
  const ExecPolicy exec{resolve_threads(cfg.threads)};
  const CountResult result = count_substructures(g, cfg.d, exec);

  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> per_node;
  std::vector<std::int64_t> totals;
  for (auto s : wanted) {
    names.emplace_back(substructure_name(s));
    per_node.push_back(result.nodes.of(s));
    totals.push_back(graph_level(result.nodes, s));
  }
  emit(cfg, counts_report(g.num_nodes(), names, per_node, totals, cfg.format), out);
  return kSuccess;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  std::vector<oracle::MotifSpec> wanted;
  const std::string list = cfg.motifs.empty()
                               ? "cycle3,cycle4,cycle5,cycle6,cycle7,path2,path3,path4,tailed_triangle,"
                                 "chordal_cycle_cc1,chordal_cycle_cc2,tr1,tr2,tr3"
                               : cfg.motifs;
  for (const auto& name : split_list(list)) {
    auto spec = oracle::MotifSpec::parse(name);
    if (!spec) throw std::invalid_argument("unknown motif '" + name + "'");
    wanted.push_back(*spec);
  }
  const Graph g = read_edge_list_file(cfg.inputs.at(0));
  const oracle::OracleOptions opts{cfg.oracle_cap};

  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> per_node;
  std::vector<std::int64_t> totals;
  for (const auto& spec : wanted) {
    names.push_back(spec.name());
    per_node.push_back(oracle::node_counts(g, spec, opts));
    totals.push_back(oracle::graph_count(g, spec, opts));
  }
  emit(cfg, counts_report(g.num_nodes(), names, per_node, totals, cfg.format), out);
  return kSuccess;
}

int cmd_distinguish(const RunConfig& cfg, std::ostream& out) {
  DistinguishParams params;
  params.method = parse_method(cfg.method);
  params.d = cfg.d;
  if (params.method == Method::DRFWL && cfg.d < 1) throw std::invalid_argument("--d must be >= 1");
  if (!cfg.mask.empty()) {
    if (params.method != Method::DRFWL) throw std::invalid_argument("--mask applies to drfwl only");
    params.mask = parse_mask(cfg.mask);
  }
  params.opts.exec = ExecPolicy{resolve_threads(cfg.threads)};
  params.opts.dense_cap = cfg.dense_cap;

  const Graph g1 = read_edge_list_file(cfg.inputs.at(0));
  const Graph g2 = read_edge_list_file(cfg.inputs.at(1));
  const DistinguishResult r = distinguish(g1, g2, params);
  const char* verdict = r.distinguished ? "DISTINGUISHED" : "INDISTINGUISHABLE";

  std::ostringstream text;
  if (cfg.format == "json") {
    json report = {{"verdict", verdict},
                   {"method", std::string(method_name(params.method))},
                   {"iterations", r.iterations},
                   {"certificates", {r.first.serialize(), r.second.serialize()}}};
    if (params.method == Method::DRFWL) report["d"] = params.d;
    text << report.dump() << '\n';
  } else {
    text << verdict << '\n';
    text << "method: " << method_name(params.method);
    if (params.method == Method::DRFWL) text << " d=" << params.d;
    text << '\n' << "iterations: " << r.iterations << '\n';
  }
  emit(cfg, text.str(), out);
  return kSuccess;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  const auto& a = cfg.gen_args;
  auto arg = [&](std::size_t i, const char* what) -> const std::string& {
    if (i >= a.size()) throw std::invalid_argument(std::string("gen ") + cfg.family + ": missing " + what);
    return a[i];
  };
  auto node_arg = [&](std::size_t i, const char* what) { return parse_number<NodeId>(arg(i, what), what); };

  if (cfg.family == "separation") {
    auto [union_graph, cycle_graph] = gen_separation_pair(cfg.d);
    const std::string prefix = cfg.out_prefix.empty() ? "separation_d" + std::to_string(cfg.d) : cfg.out_prefix;
    const std::string first = prefix + "_union.el", second = prefix + "_cycle.el";
    for (const auto& [path, graph] : {std::pair{first, &union_graph}, std::pair{second, &cycle_graph}}) {
      std::ofstream file(path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write '" + path + "'");
      write_edge_list(file, *graph);
    }
    out << first << '\n' << second << '\n';
    return kSuccess;
  }

  Graph g;
  if (cfg.family == "cycle") {
    g = gen_cycle(node_arg(0, "n"));
  } else if (cfg.family == "path") {
    g = gen_path(node_arg(0, "n"));
  } else if (cfg.family == "complete") {
    g = gen_complete(node_arg(0, "n"));
  } else if (cfg.family == "star") {
    g = gen_star(node_arg(0, "leaves"));
  } else if (cfg.family == "petersen") {
    g = gen_petersen();
  } else if (cfg.family == "er") {
    g = gen_erdos_renyi(node_arg(0, "n"), parse_number<double>(arg(1, "p"), "p"), cfg.seed);
  } else if (cfg.family == "regular") {
    g = gen_random_regular(node_arg(0, "n"), node_arg(1, "r"), cfg.seed);
  } else {
    throw std::invalid_argument("unknown family '" + cfg.family + "'");
  }
  emit(cfg, to_edge_list(g), out);
  return kSuccess;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  const ExecPolicy exec{resolve_threads(cfg.threads)};
  std::ostringstream csv;
  csv << "n,deg,tuple_count,build_ms,iter_ms\n";
  for (const auto& r_text : split_list(cfg.bench_r)) {
    for (const auto& n_text : split_list(cfg.bench_n)) {
      const auto n = parse_number<NodeId>(n_text, "n");
      const auto r = parse_number<NodeId>(r_text, "r");
      const Graph g = cfg.bench_family == "cycle" ? gen_cycle(n) : gen_random_regular(n, r, cfg.seed);

      const auto t0 = Clock::now();
      const TupleIndex idx = TupleIndex::build(g, cfg.d);
      const auto t1 = Clock::now();
      RefineOptions opts;
      opts.exec = exec;
      const Coloring c = drfwl_refine(idx, std::nullopt, opts);
      const auto t2 = Clock::now();

      const double build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      const double rounds = c.iterations + 1;
      const double iter_ms = std::chrono::duration<double, std::milli>(t2 - t1).count() / rounds;
      csv << n << ',' << g.max_degree() << ',' << idx.size() << ',' << build_ms << ',' << iter_ms << '\n';
    }
  }
  emit(cfg, csv.str(), out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-restricted FWL(2) refinement and substructure counting"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads (default: $DRFWL_THREADS or all cores)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* count = app.add_subcommand("count", "Closed-form node-level substructure counts");
  count->add_option("--motifs", cfg.motifs, "Comma-separated motif names (default: all available at d)");
  count->add_option("--d", cfg.d, "Distance cap");
  count->add_option("-o,--output", cfg.output, "Write the report to a file");
  count->add_option("input", cfg.inputs, "Edge-list file")->required()->expected(1);
  add_threads(count);

  auto* orc = app.add_subcommand("oracle", "Brute-force node-level substructure counts");
  orc->add_option("--motifs", cfg.motifs, "Comma-separated motif names");
  orc->add_option("--max-nodes", cfg.oracle_cap, "Refuse graphs larger than this");
  orc->add_option("-o,--output", cfg.output, "Write the report to a file");
  orc->add_option("input", cfg.inputs, "Edge-list file")->required()->expected(1);

  auto* dist = app.add_subcommand("distinguish", "Compare two graphs under a refinement test");
  dist->add_option("--method", cfg.method, "wl1 | fwl2 | drfwl")->check(CLI::IsMember({"wl1", "fwl2", "drfwl"}));
  dist->add_option("--d", cfg.d, "Distance cap for drfwl");
  dist->add_option("--mask", cfg.mask, "Allowed (i,j,k) triples, e.g. \"0,1,1;1,1,1\"");
  dist->add_option("--dense-cap", cfg.dense_cap, "Largest union size accepted by fwl2");
  dist->add_option("-o,--output", cfg.output, "Write the verdict to a file");
  dist->add_option("inputs", cfg.inputs, "Two edge-list files")->required()->expected(2);
  add_threads(dist);

  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  gen->add_option("family,--family", cfg.family,
                  "cycle | path | complete | star | petersen | er | regular | separation");
  gen->add_option("args", cfg.gen_args, "Family parameters");
  gen->add_option("--seed", cfg.seed, "Random seed");
  gen->add_option("--d", cfg.d, "Distance parameter for the separation family");
  gen->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
  gen->add_option("--out-prefix", cfg.out_prefix, "File prefix for the separation pair");

  auto* bench = app.add_subcommand("bench", "Tuple counts and refinement timings on generated graphs");
  bench->add_option("--family", cfg.bench_family, "regular | cycle")->check(CLI::IsMember({"regular", "cycle"}));
  bench->add_option("--n", cfg.bench_n, "Comma-separated node counts");
  bench->add_option("--r", cfg.bench_r, "Comma-separated degrees");
  bench->add_option("--d", cfg.d, "Distance cap");
  bench->add_option("--seed", cfg.seed, "Random seed");
  bench->add_option("-o,--output", cfg.output, "Write the CSV to a file");
  add_threads(bench);

  add_format(count);
  add_format(orc);
  add_format(dist);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  if (cfg.format.empty()) cfg.format = dist->parsed() ? "text" : "json";

  try {
    if (count->parsed()) return cmd_count(cfg, out);
    if (orc->parsed()) return cmd_oracle(cfg, out);
    if (dist->parsed()) return cmd_distinguish(cfg, out);
    if (gen->parsed()) {
      if (cfg.family.empty()) throw std::invalid_argument("gen: missing family");
      return cmd_gen(cfg, out);
    }
    if (bench->parsed()) return cmd_bench(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << '\n';
    return kCapabilityError;
  } catch (const SizeError& e) {
    err << "size error: " << e.what() << '\n';
    return kCapabilityError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace drfwl::cli
