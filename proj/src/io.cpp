#include "lpa/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lpa/error.hpp"

namespace lpa::io {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_string()) parse_fail(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

template <typename Int>
Int parse_int(std::string_view s, const char* what) {
  Int n{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    parse_fail(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return n;
}

// Items "label" or "label:n" separated by commas.
template <typename Int, typename F>
void parse_counted_list(std::string_view text, const char* what, F&& sink) {
  text = trim(text);
  if (text.empty()) return;
  for (auto item : split(text, ',')) {
    item = trim(item);
    if (item.empty()) parse_fail(std::string("empty item in ") + what);
    const auto colon = item.rfind(':');
    if (colon == std::string_view::npos) {
      sink(std::string(item), Int{1});
    } else {
      const auto label = trim(item.substr(0, colon));
      if (label.empty()) parse_fail(std::string("missing label in ") + what);
      sink(std::string(label), parse_int<Int>(trim(item.substr(colon + 1)), what));
    }
  }
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("graph must be a JSON object");
  const Json& vs = field(j, "vertices");
  const Json& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) parse_fail("\"vertices\" and \"edges\" must be arrays");
  std::vector<VertexId> vertices;
  for (const auto& v : vs) {
    if (!v.is_string()) parse_fail("vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (const auto& e : es) {
    if (!e.is_object()) parse_fail("edges must be objects");
    edges.push_back({string_field(e, "id"), string_field(e, "src"), string_field(e, "dst")});
  }
  return Graph(std::move(vertices), std::move(edges));
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back(v);
  j["edges"] = Json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
  return j;
}

Graph parse_graph(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  for (const auto& v : g.vertices()) out << "  " << dot_quote(v) << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << dot_quote(e.src) << " -> " << dot_quote(e.dst) << " [label=" << dot_quote(e.id) << "];\n";
  }
  out << "}\n";
  return out.str();
}

MonoidElement parse_multiset(std::string_view text) {
  MonoidElement m;
  parse_counted_list<std::uint64_t>(text, "multiset", [&](std::string label, std::uint64_t n) {
    if (n) m.add(label, n);
  });
  return m;
}

std::string format_multiset(const MonoidElement& m) {
  std::string out;
  for (const auto& [v, n] : m.coeffs()) {
    if (!out.empty()) out += ',';
    out += v + ':' + std::to_string(n);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  Partition p;
  for (auto block : split(trim(text), '|')) {
    std::vector<EdgeId> ids;
    for (auto id : split(block, ',')) {
      id = trim(id);
      if (id.empty()) parse_fail("empty edge id in partition '" + std::string(text) + "'");
      ids.emplace_back(id);
    }
    p.blocks.push_back(std::move(ids));
  }
  return p;
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
      if (i) out += ',';
      out += p.blocks[b][i];
    }
  }
  return out;
}

HairSpec parse_hair_spec(std::string_view text) {
  HairSpec spec;
  parse_counted_list<int>(text, "hair spec", [&](std::string label, int n) {
    if (!spec.lengths.emplace(std::move(label), n).second) parse_fail("repeated vertex in hair spec");
  });
  return spec;
}

Json multiset_to_json(const MonoidElement& m) {
  Json j = Json::object();
  for (const auto& [v, n] : m.coeffs()) j[v] = n;
  return j;
}

Json move_to_json(const MoveRecord& m) {
  return {{"kind", std::string(to_string(m.kind))}, {"vertex", m.vertex}, {"detail", m.detail}};
}

Json normalized_to_json(const NormalizedClass& n) {
  Json j;
  j["T"] = Json::array();
  for (const auto& v : n.T) j["T"].push_back(v);
  j["mults"] = Json::object();
  for (const auto& [v, k] : n.mults) j["mults"][v] = k;
  return j;
}

Json decomposition_to_json(const DecompositionReport& r) {
  Json j;
  j["k"] = r.k;
  j["removed_sinks"] = r.removed_sinks;
  j["F"] = graph_to_json(r.F);
  j["trace"] = Json::array();
  for (const auto& m : r.trace) j["trace"].push_back(move_to_json(m));
  return j;
}

Json corner_to_json(const CornerReport& r) {
  Json j;
  j["line_sizes"] = r.line_sizes;
  if (r.T) {
    j["T"] = Json::array();
    for (const auto& v : *r.T) j["T"].push_back(v);
  } else {
    j["T"] = nullptr;
  }
  j["G"] = r.G ? graph_to_json(*r.G) : Json(nullptr);
  j["normalized"] = r.normalized ? normalized_to_json(*r.normalized) : Json(nullptr);
  j["output"] = graph_to_json(r.output);
  j["k"] = r.k;
  j["F"] = graph_to_json(r.F);
  j["initial_class"] = multiset_to_json(r.initial_class);
  j["residual_class"] = multiset_to_json(r.residual_class);
  j["trace"] = Json::array();
  for (const auto& s : r.trace) {
    Json step = move_to_json(s.move);
    step["class"] = multiset_to_json(s.class_after);
    j["trace"].push_back(std::move(step));
  }
  return j;
}

std::string format_trace(const std::vector<MoveRecord>& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << i + 1 << ". " << to_string(trace[i].kind) << ' ' << trace[i].vertex << ": " << trace[i].detail << '\n';
  }
  return out.str();
}

std::string format_trace(const std::vector<TraceStep>& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& m = trace[i].move;
    out << i + 1 << ". " << to_string(m.kind) << ' ' << m.vertex << ": " << m.detail << "  class = {"
        << format_multiset(trace[i].class_after) << "}\n";
  }
  return out.str();
}

}  // namespace lpa::io
