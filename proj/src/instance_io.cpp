#include "instance_io.hpp"

#include <charconv>
#include <sstream>
#include <string_view>

#include "error.hpp"

namespace pfd {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw error(errc::parse, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no,
                       const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(line_no, std::string("expected an integer ") + what + ", got '" +
                      std::string(tok) + "'");
  return value;
}

}  // namespace

instance parse_instance(const std::string& text) {
  instance inst;
  bool have_header = false;
  std::int64_t n = 0, m = 0, edges_seen = 0;
  std::size_t line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = split_tokens(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) fail(line_no, "duplicate header");
      if (toks.size() != 6 || toks[1] != "pfd")
        fail(line_no, "header must read 'p pfd <n> <m> <r> <k>'");
      n = parse_int(toks[2], line_no, "for n");
      m = parse_int(toks[3], line_no, "for m");
      std::int64_t r = parse_int(toks[4], line_no, "for r");
      std::int64_t k = parse_int(toks[5], line_no, "for k");
      if (n < 0) fail(line_no, "n must be nonnegative");
      if (m < 0) fail(line_no, "m must be nonnegative");
      if (n > 10'000'000) fail(line_no, "n is implausibly large");
      if (r < 1 || r > UINT32_MAX) fail(line_no, "r must be a positive integer");
      if (k < 0) fail(line_no, "k must be nonnegative");
      inst.r = static_cast<std::uint32_t>(r);
      inst.k = k;
      for (std::int64_t i = 0; i < n; ++i) inst.graph.add_vertex();
      have_header = true;
      continue;
    }
    if (toks[0] == "e") {
      if (!have_header) fail(line_no, "edge line before header");
      if (toks.size() != 3) fail(line_no, "edge line must read 'e <u> <v>'");
      std::int64_t u = parse_int(toks[1], line_no, "for u");
      std::int64_t v = parse_int(toks[2], line_no, "for v");
      if (u < 1 || u > n || v < 1 || v > n)
        fail(line_no, "vertex out of range 1.." + std::to_string(n));
      if (edges_seen == m) fail(line_no, "more edge lines than the header's m");
      inst.graph.add_edge(static_cast<vertex>(u - 1),
                          static_cast<vertex>(v - 1), 1);
      ++edges_seen;
      continue;
    }
    fail(line_no, "unknown line type '" + std::string(toks[0]) + "'");
  }
  if (!have_header) fail(line_no + 1, "missing header");
  if (edges_seen != m)
    fail(line_no + 1, "header promised " + std::to_string(m) +
                          " edges, found " + std::to_string(edges_seen));
  return inst;
}

std::string render_instance(const instance& inst) {
  if (inst.k < 0)
    throw error(errc::invalid_argument,
                "cannot render an instance with a negative budget");
  const multigraph& g = inst.graph;
  std::vector<vertex> vs = g.vertices();
  std::vector<std::uint32_t> label(g.id_limit(), 0);  // 1-based
  bool identity = true;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    label[vs[i]] = static_cast<std::uint32_t>(i + 1);
    if (vs[i] != i) identity = false;
  }
  std::ostringstream out;
  if (!identity)
    for (std::size_t i = 0; i < vs.size(); ++i)
      out << "c map " << i + 1 << ' ' << vs[i] + 1 << '\n';
  out << "p pfd " << g.n() << ' ' << g.m() << ' ' << inst.r << ' ' << inst.k
      << '\n';
  for (const auto& e : g.edge_list())
    for (std::uint32_t i = 0; i < e.mult; ++i)
      out << "e " << label[e.u] << ' ' << label[e.v] << '\n';
  for (const auto& [v, count] : g.loop_list())
    for (std::uint32_t i = 0; i < count; ++i)
      out << "e " << label[v] << ' ' << label[v] << '\n';
  return out.str();
}

std::vector<std::string> trace_lines(const reduction_trace& trace) {
  std::vector<std::string> out;
  for (const auto& ev : trace) {
    std::ostringstream line;
    std::visit(
        [&line](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, component_removed>) {
            line << "RULE1 component";
            for (vertex v : e.vertices) line << ' ' << v + 1;
          } else if constexpr (std::is_same_v<T, forced_vertex>) {
            line << "RULE2 force " << e.v + 1;
          } else if constexpr (std::is_same_v<T, multiplicity_capped>) {
            line << "RULE3 cap " << e.u + 1 << ' ' << e.v + 1 << ' '
                 << e.old_mult << ' ' << e.new_mult;
          } else if constexpr (std::is_same_v<T, low_degree_removed>) {
            line << "RULE4 prune " << e.v + 1;
          } else {
            line << "RULE5 bypass " << e.v + 1 << ' ' << e.u + 1 << ' '
                 << e.w + 1;
          }
        },
        ev);
    out.push_back(line.str());
  }
  return out;
}

}  // namespace pfd
