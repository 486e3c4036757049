#include "pfd.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "error.hpp"
#include "generator.hpp"
#include "instance_io.hpp"
#include "multigraph.hpp"
#include "oracle.hpp"
#include "recognition.hpp"
#include "reduction.hpp"
#include "solver.hpp"

struct pfd_graph {
  pfd::multigraph g;
};

struct pfd_instance {
  pfd_graph graph;
  uint32_t r = 1;
  int64_t k = 0;
};

struct pfd_result {
  int answer = 0;
  int64_t opt = -1;
  std::vector<uint32_t> solution;
  pfd::solver_stats stats;
};

namespace {

pfd_status to_status(pfd::errc code) {
  switch (code) {
    case pfd::errc::invalid_argument:
      return PFD_ERR_ARGUMENT;
    case pfd::errc::invalid_vertex:
      return PFD_ERR_VERTEX;
    case pfd::errc::precondition:
      return PFD_ERR_PRECONDITION;
    case pfd::errc::parse:
      return PFD_ERR_PARSE;
    case pfd::errc::too_large:
      return PFD_ERR_TOO_LARGE;
    case pfd::errc::internal:
      return PFD_ERR_INTERNAL;
  }
  return PFD_ERR_INTERNAL;
}

// Exceptions never cross the library boundary.
template <typename F>
pfd_status guarded(F&& f) noexcept {
  try {
    f();
    return PFD_OK;
  } catch (const pfd::error& e) {
    return to_status(e.code());
  } catch (...) {
    return PFD_ERR_INTERNAL;
  }
}

char* dup_text(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pfd_result* make_result(bool answer, int64_t opt,
                        const std::vector<pfd::vertex>& solution,
                        const pfd::solver_stats& stats) {
  auto* res = new pfd_result;
  res->answer = answer ? 1 : 0;
  res->opt = opt;
  res->solution.assign(solution.begin(), solution.end());
  res->stats = stats;
  return res;
}

pfd::instance to_instance(const pfd_instance& inst) {
  return pfd::instance{inst.graph.g, inst.r, inst.k};
}

pfd_instance* wrap_instance(pfd::instance inst) {
  return new pfd_instance{pfd_graph{std::move(inst.graph)}, inst.r, inst.k};
}

pfd::gen_spec to_gen_spec(const pfd_gen_spec& spec) {
  pfd::gen_spec out;
  out.seed = spec.seed;
  out.n = spec.n;
  out.edges = spec.edges;
  out.loop_rate = spec.loop_rate;
  out.multi_rate = spec.multi_rate;
  out.r = spec.r;
  out.planted_k = spec.planted_k;
  return out;
}

}  // namespace

extern "C" {

pfd_graph* pfd_graph_new(void) {
  try {
    return new pfd_graph;
  } catch (...) {
    return nullptr;
  }
}

pfd_graph* pfd_graph_copy(const pfd_graph* g) {
  if (g == nullptr) return nullptr;
  try {
    return new pfd_graph{g->g};
  } catch (...) {
    return nullptr;
  }
}

void pfd_graph_free(pfd_graph* g) { delete g; }

uint32_t pfd_graph_add_vertex(pfd_graph* g) { return g->g.add_vertex(); }

pfd_status pfd_graph_add_edge(pfd_graph* g, uint32_t u, uint32_t v,
                              uint32_t count) {
  if (g == nullptr) return PFD_ERR_ARGUMENT;
  return guarded([&] { g->g.add_edge(u, v, count); });
}

pfd_status pfd_graph_delete_vertex(pfd_graph* g, uint32_t v) {
  if (g == nullptr) return PFD_ERR_ARGUMENT;
  return guarded([&] { g->g.delete_vertex(v); });
}

pfd_status pfd_graph_bypass(pfd_graph* g, uint32_t v) {
  if (g == nullptr) return PFD_ERR_ARGUMENT;
  return guarded([&] { g->g.bypass(v); });
}

uint32_t pfd_graph_vertex_count(const pfd_graph* g) {
  return g == nullptr ? 0 : g->g.n();
}

uint64_t pfd_graph_edge_count(const pfd_graph* g) {
  return g == nullptr ? 0 : g->g.m();
}

pfd_status pfd_graph_degree(const pfd_graph* g, uint32_t v, uint64_t* out) {
  if (g == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  return guarded([&] { *out = g->g.degree(v); });
}

pfd_status pfd_graph_loops_at(const pfd_graph* g, uint32_t v, uint32_t* out) {
  if (g == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  return guarded([&] { *out = g->g.loops_at(v); });
}

pfd_status pfd_graph_multiplicity(const pfd_graph* g, uint32_t u, uint32_t v,
                                  uint32_t* out) {
  if (g == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  return guarded([&] { *out = g->g.multiplicity(u, v); });
}

pfd_status pfd_is_r_pseudoforest(const pfd_graph* g, uint32_t r, int* out) {
  if (g == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  return guarded([&] { *out = pfd::is_r_pseudoforest(g->g, r) ? 1 : 0; });
}

pfd_status pfd_instance_new(const pfd_graph* g, uint32_t r, int64_t k,
                            pfd_instance** out) {
  if (g == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  if (r < 1 || k < 0) return PFD_ERR_ARGUMENT;
  return guarded([&] { *out = new pfd_instance{pfd_graph{g->g}, r, k}; });
}

pfd_status pfd_instance_parse(const char* text, pfd_instance** out,
                              char* errbuf, size_t errbuf_size) {
  if (text == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  if (errbuf != nullptr && errbuf_size > 0) errbuf[0] = '\0';
  try {
    *out = wrap_instance(pfd::parse_instance(text));
    return PFD_OK;
  } catch (const pfd::error& e) {
    if (errbuf != nullptr && errbuf_size > 0) {
      std::strncpy(errbuf, e.what(), errbuf_size - 1);
      errbuf[errbuf_size - 1] = '\0';
    }
    return to_status(e.code());
  } catch (...) {
    return PFD_ERR_INTERNAL;
  }
}

pfd_status pfd_instance_render(const pfd_instance* inst, char** out) {
  if (inst == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  return guarded(
      [&] { *out = dup_text(pfd::render_instance(to_instance(*inst))); });
}

const pfd_graph* pfd_instance_graph(const pfd_instance* inst) {
  return inst == nullptr ? nullptr : &inst->graph;
}

uint32_t pfd_instance_r(const pfd_instance* inst) {
  return inst == nullptr ? 0 : inst->r;
}

int64_t pfd_instance_k(const pfd_instance* inst) {
  return inst == nullptr ? -1 : inst->k;
}

void pfd_instance_free(pfd_instance* inst) { delete inst; }

pfd_status pfd_solve_decision(const pfd_instance* inst, unsigned threads,
                              pfd_result** out) {
  if (inst == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  return guarded([&] {
    pfd::decision_result d = pfd::solve_decision(to_instance(*inst), threads);
    *out = make_result(d.answer,
                       d.answer ? static_cast<int64_t>(d.solution.size()) : -1,
                       d.solution, d.stats);
  });
}

pfd_status pfd_solve_minimize(const pfd_graph* g, uint32_t r, int64_t kmax,
                              unsigned threads, pfd_result** out) {
  if (g == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  return guarded([&] {
    pfd::minimize_result m = pfd::solve_minimize(g->g, r, kmax, threads);
    *out = make_result(m.found, m.opt, m.solution, m.stats);
  });
}

pfd_status pfd_oracle_min(const pfd_graph* g, uint32_t r, int64_t k_cap,
                          pfd_result** out) {
  if (g == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  return guarded([&] {
    pfd::oracle_result o = pfd::oracle_min_deletion(g->g, r, k_cap);
    *out = make_result(o.found, o.opt, o.solution, pfd::solver_stats{});
  });
}

pfd_status pfd_reduce(const pfd_instance* inst, pfd_instance** reduced,
                      char** trace_text, int* definite_no) {
  if (inst == nullptr || reduced == nullptr || trace_text == nullptr ||
      definite_no == nullptr)
    return PFD_ERR_ARGUMENT;
  *reduced = nullptr;
  return guarded([&] {
    pfd::reduce_result red = pfd::reduce(to_instance(*inst));
    std::string text;
    for (const auto& line : pfd::trace_lines(red.trace)) {
      text += line;
      text += '\n';
    }
    *trace_text = dup_text(text);
    *definite_no = red.definite_no ? 1 : 0;
    if (!red.definite_no) *reduced = wrap_instance(std::move(red.reduced));
  });
}

pfd_status pfd_gen_random(const pfd_gen_spec* spec, pfd_graph** out) {
  if (spec == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  return guarded(
      [&] { *out = new pfd_graph{pfd::random_multigraph(to_gen_spec(*spec))}; });
}

pfd_status pfd_gen_planted(const pfd_gen_spec* spec, pfd_graph** out,
                           uint32_t* planted_buf) {
  if (spec == nullptr || out == nullptr) return PFD_ERR_ARGUMENT;
  return guarded([&] {
    pfd::planted_result p = pfd::planted_instance(to_gen_spec(*spec));
    if (planted_buf != nullptr)
      for (size_t i = 0; i < p.planted.size(); ++i)
        planted_buf[i] = p.planted[i];
    *out = new pfd_graph{std::move(p.graph)};
  });
}

int pfd_result_answer(const pfd_result* res) {
  return res == nullptr ? 0 : res->answer;
}

int64_t pfd_result_opt(const pfd_result* res) {
  return res == nullptr ? -1 : res->opt;
}

size_t pfd_result_solution_size(const pfd_result* res) {
  return res == nullptr ? 0 : res->solution.size();
}

const uint32_t* pfd_result_solution_data(const pfd_result* res) {
  return res == nullptr ? nullptr : res->solution.data();
}

uint64_t pfd_result_branch_nodes(const pfd_result* res) {
  return res == nullptr ? 0 : res->stats.branch_nodes;
}

uint64_t pfd_result_fallback_calls(const pfd_result* res) {
  return res == nullptr ? 0 : res->stats.fallback_calls;
}

uint32_t pfd_result_peak_depth(const pfd_result* res) {
  return res == nullptr ? 0 : res->stats.peak_depth;
}

uint64_t pfd_result_rule_firings(const pfd_result* res, int rule) {
  if (res == nullptr || rule < 1 || rule > 6) return 0;
  return res->stats.rule_firings[rule - 1];
}

void pfd_result_free(pfd_result* res) { delete res; }

uint64_t pfd_node_bound(int64_t k) { return pfd::node_bound(k); }

void pfd_text_free(char* text) { std::free(text); }

}  // extern "C"
