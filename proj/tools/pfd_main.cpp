#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfd.h"

namespace {

class timer {
 public:
  timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

const char* status_text(pfd_status st) {
  switch (st) {
    case PFD_OK:
      return "ok";
    case PFD_ERR_ARGUMENT:
      return "invalid argument";
    case PFD_ERR_VERTEX:
      return "invalid vertex";
    case PFD_ERR_PRECONDITION:
      return "precondition violated";
    case PFD_ERR_PARSE:
      return "parse error";
    case PFD_ERR_TOO_LARGE:
      return "input too large";
    case PFD_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown error";
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

// Exits 2 on unreadable or malformed input.
pfd_instance* load_instance(const std::string& path) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    std::exit(2);
  }
  pfd_instance* inst = nullptr;
  char errbuf[512];
  pfd_status st = pfd_instance_parse(text.c_str(), &inst, errbuf, sizeof errbuf);
  if (st != PFD_OK) {
    std::cerr << "error: " << (errbuf[0] != '\0' ? errbuf : status_text(st))
              << '\n';
    std::exit(2);
  }
  return inst;
}

void append_solution(std::ostringstream& out, const pfd_result* res) {
  out << "solution";
  const uint32_t* data = pfd_result_solution_data(res);
  for (size_t i = 0; i < pfd_result_solution_size(res); ++i)
    out << ' ' << data[i] + 1;
  out << '\n';
}

void append_rule_firings(std::ostringstream& out, const pfd_result* res) {
  out << "rule_firings";
  for (int rule = 1; rule <= 6; ++rule)
    out << ' ' << pfd_result_rule_firings(res, rule);
  out << '\n';
}

void append_stats(std::ostringstream& out, const pfd_result* res,
                  uint64_t node_bound) {
  out << "branch_nodes " << pfd_result_branch_nodes(res) << '\n'
      << "fallback_calls " << pfd_result_fallback_calls(res) << '\n'
      << "peak_depth " << pfd_result_peak_depth(res) << '\n'
      << "node_bound " << node_bound << '\n';
}

void finish_report(std::ostringstream& out, double ms) {
  out << "wall_time_ms " << std::fixed << std::setprecision(3) << ms << '\n';
  std::cout << out.str();
}

int run_decide(const std::string& path, unsigned threads, bool stats) {
  pfd_instance* inst = load_instance(path);
  const pfd_graph* g = pfd_instance_graph(inst);
  timer t;
  pfd_result* res = nullptr;
  pfd_status st = pfd_solve_decision(inst, threads, &res);
  if (st != PFD_OK) {
    std::cerr << "error: " << status_text(st) << '\n';
    pfd_instance_free(inst);
    return 2;
  }
  double ms = t.ms();
  bool yes = pfd_result_answer(res) != 0;
  std::ostringstream out;
  out << "report pfd/1\ncommand decide\n"
      << "n " << pfd_graph_vertex_count(g) << '\n'
      << "m " << pfd_graph_edge_count(g) << '\n'
      << "r " << pfd_instance_r(inst) << '\n'
      << "k " << pfd_instance_k(inst) << '\n'
      << "answer " << (yes ? "yes" : "no") << '\n';
  if (yes) {
    out << "k_used " << pfd_result_solution_size(res) << '\n';
    append_solution(out, res);
  }
  append_rule_firings(out, res);
  if (stats) append_stats(out, res, pfd_node_bound(pfd_instance_k(inst)));
  finish_report(out, ms);
  if (yes)
    std::cerr << "yes: deleting " << pfd_result_solution_size(res)
              << " vertex(es) leaves an r-pseudoforest ("
              << std::fixed << std::setprecision(1) << ms << " ms)\n";
  else
    std::cerr << "no: no deletion set of size at most " << pfd_instance_k(inst)
              << " exists (" << std::fixed << std::setprecision(1) << ms
              << " ms)\n";
  pfd_result_free(res);
  pfd_instance_free(inst);
  return yes ? 0 : 1;
}

int run_minimize(const std::string& path, int64_t kmax, unsigned threads,
                 bool stats) {
  pfd_instance* inst = load_instance(path);
  const pfd_graph* g = pfd_instance_graph(inst);
  uint32_t r = pfd_instance_r(inst);
  timer t;
  pfd_result* res = nullptr;
  pfd_status st = pfd_solve_minimize(g, r, kmax, threads, &res);
  if (st != PFD_OK) {
    std::cerr << "error: " << status_text(st) << '\n';
    pfd_instance_free(inst);
    return 2;
  }
  double ms = t.ms();
  bool yes = pfd_result_answer(res) != 0;
  std::ostringstream out;
  out << "report pfd/1\ncommand minimize\n"
      << "n " << pfd_graph_vertex_count(g) << '\n'
      << "m " << pfd_graph_edge_count(g) << '\n'
      << "r " << r << '\n'
      << "kmax " << kmax << '\n'
      << "answer " << (yes ? "yes" : "no") << '\n';
  if (yes) {
    out << "opt " << pfd_result_opt(res) << '\n'
        << "k_used " << pfd_result_solution_size(res) << '\n';
    append_solution(out, res);
  }
  append_rule_firings(out, res);
  if (stats)
    append_stats(out, res,
                 pfd_node_bound(yes ? pfd_result_opt(res) : kmax));
  finish_report(out, ms);
  if (yes)
    std::cerr << "optimum " << pfd_result_opt(res) << " within kmax " << kmax
              << " (" << std::fixed << std::setprecision(1) << ms << " ms)\n";
  else
    std::cerr << "no solution within kmax " << kmax << " ("
              << std::fixed << std::setprecision(1) << ms << " ms)\n";
  pfd_result_free(res);
  pfd_instance_free(inst);
  return yes ? 0 : 1;
}

int run_oracle(const std::string& path, int64_t cap) {
  pfd_instance* inst = load_instance(path);
  const pfd_graph* g = pfd_instance_graph(inst);
  uint32_t r = pfd_instance_r(inst);
  timer t;
  pfd_result* res = nullptr;
  pfd_status st = pfd_oracle_min(g, r, cap, &res);
  if (st != PFD_OK) {
    std::cerr << "error: " << status_text(st) << '\n';
    pfd_instance_free(inst);
    return 2;
  }
  double ms = t.ms();
  bool yes = pfd_result_answer(res) != 0;
  std::ostringstream out;
  out << "report pfd/1\ncommand oracle\n"
      << "n " << pfd_graph_vertex_count(g) << '\n'
      << "m " << pfd_graph_edge_count(g) << '\n'
      << "r " << r << '\n'
      << "cap " << cap << '\n'
      << "answer " << (yes ? "yes" : "no") << '\n';
  if (yes) {
    out << "opt " << pfd_result_opt(res) << '\n'
        << "k_used " << pfd_result_solution_size(res) << '\n';
    append_solution(out, res);
  }
  finish_report(out, ms);
  if (yes)
    std::cerr << "oracle optimum " << pfd_result_opt(res) << " ("
              << std::fixed << std::setprecision(1) << ms << " ms)\n";
  else
    std::cerr << "oracle found nothing within cap " << cap << " ("
              << std::fixed << std::setprecision(1) << ms << " ms)\n";
  pfd_result_free(res);
  pfd_instance_free(inst);
  return yes ? 0 : 1;
}

int run_reduce(const std::string& path) {
  pfd_instance* inst = load_instance(path);
  pfd_instance* reduced = nullptr;
  char* trace_text = nullptr;
  int definite_no = 0;
  pfd_status st = pfd_reduce(inst, &reduced, &trace_text, &definite_no);
  if (st != PFD_OK) {
    std::cerr << "error: " << status_text(st) << '\n';
    pfd_instance_free(inst);
    return 2;
  }
  std::ostringstream out;
  size_t firings = 0;
  {
    std::istringstream lines(trace_text != nullptr ? trace_text : "");
    std::string line;
    while (std::getline(lines, line)) {
      out << "c trace " << line << '\n';
      ++firings;
    }
  }
  int code = 0;
  if (definite_no != 0) {
    out << "c status definite-no\n";
    std::cerr << "budget exhausted during reduction: definite no\n";
    code = 1;
  } else {
    char* body = nullptr;
    st = pfd_instance_render(reduced, &body);
    if (st != PFD_OK) {
      std::cerr << "error: " << status_text(st) << '\n';
      pfd_text_free(trace_text);
      pfd_instance_free(reduced);
      pfd_instance_free(inst);
      return 2;
    }
    out << body;
    pfd_text_free(body);
    std::cerr << "reduced to n=" << pfd_graph_vertex_count(pfd_instance_graph(reduced))
              << " m=" << pfd_graph_edge_count(pfd_instance_graph(reduced))
              << " k=" << pfd_instance_k(reduced) << " after " << firings
              << " rule firing(s)\n";
  }
  std::cout << out.str();
  pfd_text_free(trace_text);
  pfd_instance_free(reduced);
  pfd_instance_free(inst);
  return code;
}

int run_gen(const pfd_gen_spec& spec, bool planted, int64_t header_k) {
  pfd_graph* g = nullptr;
  std::vector<uint32_t> planted_ids(spec.planted_k, 0);
  pfd_status st =
      planted ? pfd_gen_planted(&spec, &g,
                                planted_ids.empty() ? nullptr
                                                    : planted_ids.data())
              : pfd_gen_random(&spec, &g);
  if (st != PFD_OK) {
    std::cerr << "error: " << status_text(st) << '\n';
    return 2;
  }
  int64_t k = planted ? static_cast<int64_t>(spec.planted_k) : header_k;
  pfd_instance* inst = nullptr;
  st = pfd_instance_new(g, spec.r, k, &inst);
  if (st != PFD_OK) {
    std::cerr << "error: " << status_text(st) << '\n';
    pfd_graph_free(g);
    return 2;
  }
  char* body = nullptr;
  st = pfd_instance_render(inst, &body);
  if (st != PFD_OK) {
    std::cerr << "error: " << status_text(st) << '\n';
    pfd_instance_free(inst);
    pfd_graph_free(g);
    return 2;
  }
  std::ostringstream out;
  out << "c gen mode=" << (planted ? "planted" : "random")
      << " seed=" << spec.seed << " n=" << spec.n;
  if (!planted) out << " edges=" << spec.edges;
  out << " loop_rate=" << spec.loop_rate << " multi_rate=" << spec.multi_rate
      << " r=" << spec.r;
  if (planted)
    out << " planted_k=" << spec.planted_k;
  else
    out << " k=" << header_k;
  out << '\n';
  if (planted && !planted_ids.empty()) {
    out << "c planted";
    for (uint32_t v : planted_ids) out << ' ' << v + 1;
    out << '\n';
  }
  out << body;
  std::cout << out.str();
  std::cerr << "generated n=" << pfd_graph_vertex_count(g)
            << " m=" << pfd_graph_edge_count(g) << '\n';
  pfd_text_free(body);
  pfd_instance_free(inst);
  pfd_graph_free(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for r-pseudoforest deletion"};
  app.require_subcommand(1);

  std::string input = "-";
  unsigned threads = 1;
  bool stats = false;
  int64_t kmax = 0;
  int64_t cap = -1;

  pfd_gen_spec spec{};
  spec.seed = 1;
  spec.n = 20;
  spec.edges = 30;
  spec.loop_rate = 0.0;
  spec.multi_rate = 0.0;
  spec.r = 1;
  spec.planted_k = 2;
  bool planted = false;
  int64_t header_k = 0;

  auto* decide =
      app.add_subcommand("decide", "decide with the header budget k");
  decide->add_option("file", input, "instance file, or - for stdin");
  decide->add_option("--threads", threads, "parallel root branches");
  decide->add_flag("--stats", stats, "include search statistics");

  auto* minimize =
      app.add_subcommand("minimize", "smallest deletion set within --kmax");
  minimize->add_option("file", input, "instance file, or - for stdin");
  minimize->add_option("--kmax", kmax, "largest budget to try")->required();
  minimize->add_option("--threads", threads, "parallel root branches");
  minimize->add_flag("--stats", stats, "include search statistics");

  auto* reduce = app.add_subcommand(
      "reduce", "print the reduced instance and the rule trace");
  reduce->add_option("file", input, "instance file, or - for stdin");

  auto* oracle = app.add_subcommand(
      "oracle", "brute-force reference answer (small inputs only)");
  oracle->add_option("file", input, "instance file, or - for stdin");
  oracle->add_option("--oracle-cap", cap, "largest deletion size to try");

  auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
  gen->add_option("--seed", spec.seed, "generator seed");
  gen->add_option("--n", spec.n, "vertex count");
  gen->add_option("--edges", spec.edges, "edge instances (random mode)");
  gen->add_option("--loop-rate", spec.loop_rate, "probability of a loop");
  gen->add_option("--multi-rate", spec.multi_rate,
                  "probability of duplicating an edge");
  gen->add_option("--r", spec.r, "per-component edge-deletion budget");
  gen->add_option("--k", header_k, "header budget (random mode)");
  gen->add_flag("--planted", planted, "plant a known solution");
  gen->add_option("--planted-k", spec.planted_k, "planted vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (decide->parsed()) return run_decide(input, threads, stats);
  if (minimize->parsed()) return run_minimize(input, kmax, threads, stats);
  if (reduce->parsed()) return run_reduce(input);
  if (oracle->parsed()) return run_oracle(input, cap);
  if (gen->parsed()) return run_gen(spec, planted, header_k);
  return 2;
}
