#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tribook/bipartite.hpp"
#include "tribook/canonical.hpp"
#include "tribook/census.hpp"
#include "tribook/constructions.hpp"
#include "tribook/graph.hpp"
#include "tribook/graph6.hpp"
#include "tribook/search.hpp"
#include "tribook/surgery.hpp"

namespace {

using nlohmann::json;
using namespace tribook;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;
constexpr int kExitUsage = 64;

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_stream(std::cin);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open input file: " + path);
  return read_stream(file);
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << payload;
}

std::vector<std::string> graph6_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  std::vector<Graph> graphs;
  if (format == "json") {
    graphs.push_back(Graph::from_json_text(text));
  } else {
    for (const auto& line : graph6_lines(text)) graphs.push_back(decode_graph6(line));
  }
  return graphs;
}

Graph read_single_graph(const std::string& path, const std::string& format) {
  auto graphs = read_graphs(path, format);
  if (graphs.size() != 1)
    throw std::runtime_error("expected exactly one input graph, got " +
                             std::to_string(graphs.size()));
  return graphs.front();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

json rational_json(const Rational& r) { return r.str(); }

json cut_json(const CutResult& cut) {
  return json{{"pivot", cut.pivot},
              {"side_n", cut.side_n},
              {"side_rest", cut.side_rest},
              {"deleted_edges", cut.deleted_edges},
              {"bound", rational_json(cut.bound)}};
}

json extraction_json(const ExtractionResult& r) {
  return json{{"a0", r.a0},
              {"b0", r.b0},
              {"a", r.a},
              {"b", r.b},
              {"removed", r.removed},
              {"c", rational_json(r.c)},
              {"b_cap", r.b_cap},
              {"guarantee_applies", r.guarantee_applies},
              {"removed_bound", rational_json(r.removed_bound)}};
}

std::string move_kind_name(SurgeryMove::Kind kind) {
  switch (kind) {
    case SurgeryMove::Kind::add_ab: return "add_ab";
    case SurgeryMove::Kind::delete_cross: return "delete_cross";
    case SurgeryMove::Kind::delete_c: return "delete_c";
    default: return "add_cross";
  }
}

json report_json(const SurgeryReport& r) {
  json moves = json::array();
  for (const auto& m : r.moves)
    moves.push_back(json{{"kind", move_kind_name(m.kind)}, {"x", m.x}, {"y", m.y}});
  return json{{"s", r.s},
              {"moved_c_edges", r.moved_c_edges},
              {"d_max", r.d_max},
              {"d_min", r.d_min},
              {"t_by_type", {r.t_by_type.t0, r.t_by_type.t1, r.t_by_type.t2, r.t_by_type.t3}},
              {"t_prime", r.t_prime},
              {"bar_b", r.bar_b_defined ? rational_json(r.bar_b_value) : json(nullptr)},
              {"tilde_t_doubled", r.tilde_t_doubled},
              {"moves", moves}};
}

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct ConstructArgs {
  long long b = 0;
  long long n = 0;
  std::string sizes;
  std::string out;
};

void emit_construct(const Graph& g, json sidecar, const std::string& out) {
  const std::string line = encode_graph6(g) + "\n";
  if (out.empty() || out == "-") {
    std::cout << line << sidecar.dump(2) << "\n";
  } else {
    write_output(out, line);
    write_output(out + ".json", sidecar.dump(2) + "\n");
  }
}

int run_verify_like(const Certificate& cert, const std::string& out) {
  write_output(out, certificate_to_json(cert) + "\n");
  const bool violation = cert.in_range && cert.min_triangles_found &&
                         *cert.min_triangles_found < cert.conjectured_bound;
  return violation ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact triangle/book-number census, prism blow-up constructions, and "
               "exhaustive minimum-triangle verification"};
  app.require_subcommand(1);

  std::string in_path, out_path, format = "graph6";
  auto add_io = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--in", in_path, "input file (default: stdin)");
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    if (with_format)
      cmd->add_option("--input-format", format, "graph6 or json edge list")
          ->check(CLI::IsMember({"graph6", "json"}));
  };

  // construct
  auto* construct = app.add_subcommand("construct", "build a graph family member");
  construct->require_subcommand(1);
  ConstructArgs cons;
  auto* sgraph_cmd = construct->add_subcommand("s-graph", "prism blow-up S_{b,n}");
  sgraph_cmd->add_option("--b", cons.b)->required();
  sgraph_cmd->add_option("--n", cons.n)->required();
  sgraph_cmd->add_option("--out", cons.out, "graph6 file; sidecar goes to <out>.json");
  auto* prism_cmd = construct->add_subcommand("prism", "3-prism blow-up with given part sizes");
  prism_cmd->add_option("--sizes", cons.sizes, "six part sizes, comma separated")->required();
  prism_cmd->add_option("--out", cons.out);
  auto* mubayi_cmd =
      construct->add_subcommand("mubayi-upper", "upper-bound construction for book cap b+1");
  mubayi_cmd->add_option("--b", cons.b)->required();
  mubayi_cmd->add_option("--n", cons.n)->required();
  mubayi_cmd->add_option("--out", cons.out);

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "census of each input graph (JSON lines)");
  add_io(stats_cmd);

  // cut
  auto* cut_cmd = app.add_subcommand("cut", "neighborhood max-cut with deletion bound");
  add_io(cut_cmd);

  // extract
  auto* extract_cmd = app.add_subcommand("extract", "induced bipartite extraction");
  std::string c_text = "1/4";
  long long extract_b_cap = 0;
  extract_cmd->add_option("--c", c_text, "parameter c as a fraction, 0 < c < 1/2");
  extract_cmd->add_option("--b-cap", extract_b_cap, "book-number cap used by the filter")
      ->required();
  add_io(extract_cmd);

  // surgery
  auto* surgery_cmd = app.add_subcommand("surgery", "A/B/C edge surgeries");
  std::string partition_path, stage = "both";
  long long surgery_b_cap = 0;
  surgery_cmd->add_option("--partition", partition_path, "JSON file with A, B, C vertex lists")
      ->required();
  surgery_cmd->add_option("--b-cap", surgery_b_cap)->required();
  surgery_cmd->add_option("--stage", stage)->check(CLI::IsMember({"g1", "g2", "both"}));
  add_io(surgery_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive minimum-triangle verification");
  SearchParams verify_params;
  verify_params.exclude_balanced_bipartite = true;
  verify_params.workers = default_workers();
  std::string threshold = "floor";
  bool include_bipartite = false;
  bool force = false;
  verify_cmd->add_option("--n", verify_params.n)->required();
  verify_cmd->add_option("--b", verify_params.b_cap, "book-number cap")->required();
  verify_cmd->add_option("--threshold", threshold)->check(CLI::IsMember({"floor", "strict"}));
  verify_cmd->add_flag("--include-balanced-bipartite", include_bipartite,
                       "do not exclude the balanced complete bipartite graph");
  verify_cmd->add_option("--workers", verify_params.workers);
  verify_cmd->add_option("--seed", verify_params.seed);
  verify_cmd->add_flag("--force", force, "override the n <= 10 guard rail");
  verify_cmd->add_option("--out", out_path);

  // stress
  auto* stress_cmd = app.add_subcommand("stress", "seeded hill-descent counterexample hunt");
  SearchParams stress_params;
  stress_params.mode = SearchMode::stress;
  stress_params.exclude_balanced_bipartite = true;
  stress_cmd->add_option("--n", stress_params.n)->required();
  stress_cmd->add_option("--b", stress_params.b_cap)->required();
  stress_cmd->add_option("--iters", stress_params.stress_iterations)->required();
  stress_cmd->add_option("--seed", stress_params.seed);
  stress_cmd->add_option("--threshold", threshold)->check(CLI::IsMember({"floor", "strict"}));
  stress_cmd->add_option("--out", out_path);

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "Rademacher/Edwards exhaustive property suite");
  int n_max = 6;
  int suite_workers = default_workers();
  suite_cmd->add_option("--n-max", n_max)->required();
  suite_cmd->add_option("--workers", suite_workers);
  suite_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (sgraph_cmd->parsed()) {
      const SGraphResult r = s_graph(cons.b, cons.n);
      emit_construct(r.graph,
                     json{{"kind", "s_graph"},
                          {"b", cons.b},
                          {"n", cons.n},
                          {"part_sizes", r.spec.part_sizes},
                          {"edges", r.expected_edges},
                          {"triangles", r.expected_triangles},
                          {"book", r.expected_book_number}},
                     cons.out);
      return kExitOk;
    }
    if (prism_cmd->parsed()) {
      PrismSpec spec;
      std::istringstream sizes(cons.sizes);
      std::string piece;
      size_t index = 0;
      while (std::getline(sizes, piece, ',')) {
        if (index >= 6) throw std::runtime_error("prism: expected exactly six part sizes");
        spec.part_sizes[index++] = std::stoll(piece);
      }
      if (index != 6) throw std::runtime_error("prism: expected exactly six part sizes");
      const Graph g = prism_blowup(spec);
      emit_construct(g,
                     json{{"kind", "prism"},
                          {"part_sizes", spec.part_sizes},
                          {"edges", g.edge_count()},
                          {"triangles", prism_expected_triangles(spec)}},
                     cons.out);
      return kExitOk;
    }
    if (mubayi_cmd->parsed()) {
      const MubayiUpperResult r = mubayi_upper(cons.b, cons.n);
      json deleted = json::array();
      for (const auto& [u, v] : r.deleted_edges) deleted.push_back({u, v});
      emit_construct(r.graph,
                     json{{"kind", "mubayi_upper"},
                          {"b", cons.b},
                          {"n", cons.n},
                          {"part_sizes", r.spec.part_sizes},
                          {"edges", r.expected_edges},
                          {"triangles", r.expected_triangles},
                          {"book_cap", r.book_number_cap},
                          {"deleted_edges", deleted},
                          {"notes", r.notes}},
                     cons.out);
      return kExitOk;
    }
    if (stats_cmd->parsed()) {
      std::string out;
      for (const Graph& g : read_graphs(in_path, format)) {
        const BookProfile p = book_profile(g);
        const BnCheck bn = bn_inequality_check(g);
        out += json{{"n", g.vertex_count()},
                    {"m", g.edge_count()},
                    {"triangles", p.triangle_count},
                    {"book_number", p.book_number},
                    {"degree_square_sum", p.degree_square_sum},
                    {"bn_lhs", bn.lhs},
                    {"bn_rhs", bn.rhs}}
                   .dump();
        out += "\n";
      }
      write_output(out_path, out);
      return kExitOk;
    }
    if (cut_cmd->parsed()) {
      const Graph g = read_single_graph(in_path, format);
      write_output(out_path, cut_json(lemma1_cut(g)).dump(2) + "\n");
      return kExitOk;
    }
    if (extract_cmd->parsed()) {
      const Graph g = read_single_graph(in_path, format);
      const ExtractionResult r = lemma2_extract(g, parse_rational(c_text), extract_b_cap);
      write_output(out_path, extraction_json(r).dump(2) + "\n");
      return kExitOk;
    }
    if (surgery_cmd->parsed()) {
      const Graph g = read_single_graph(in_path, format);
      json pj = json::parse(read_input(partition_path));
      const TriPartition p =
          TriPartition::of(g, pj.at("A").get<std::vector<int>>(),
                           pj.at("B").get<std::vector<int>>(), pj.at("C").get<std::vector<int>>());
      json out;
      out["input"] = report_json(partition_report(g, p));
      Graph current = g;
      if (stage == "g1" || stage == "both") {
        SurgeryOutcome g1 = to_g1(current, p, surgery_b_cap);
        out["g1"] = json{{"graph6", encode_graph6(g1.graph)}, {"report", report_json(g1.report)}};
        current = std::move(g1.graph);
      }
      if (stage == "g2" || stage == "both") {
        SurgeryOutcome g2 = to_g2(current, p, surgery_b_cap);
        out["g2"] = json{{"graph6", encode_graph6(g2.graph)}, {"report", report_json(g2.report)}};
      }
      write_output(out_path, out.dump(2) + "\n");
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      verify_params.edge_threshold_mode = threshold == "floor" ? EdgeThresholdMode::floor_quarter
                                                               : EdgeThresholdMode::strict_quarter;
      verify_params.exclude_balanced_bipartite = !include_bipartite;
      verify_params.allow_large = force;
      return run_verify_like(verify_conjecture(verify_params), out_path);
    }
    if (stress_cmd->parsed()) {
      stress_params.edge_threshold_mode = threshold == "floor" ? EdgeThresholdMode::floor_quarter
                                                               : EdgeThresholdMode::strict_quarter;
      return run_verify_like(stress_search(stress_params), out_path);
    }
    if (suite_cmd->parsed()) {
      const auto results = classical_suite(n_max, suite_workers);
      json out = json::object();
      for (const auto& [name, outcome] : results)
        out[name] = json{{"pass", outcome.pass},
                         {"graphs_examined", outcome.graphs_examined},
                         {"witnesses", outcome.witnesses}};
      write_output(out_path, out.dump(2) + "\n");
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}
