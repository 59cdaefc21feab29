#include "lpa/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lpa/algebra.hpp"
#include "lpa/error.hpp"
#include "lpa/io.hpp"
#include "lpa/monoid.hpp"
#include "lpa/moves.hpp"
#include "lpa/pipeline.hpp"

namespace lpa::cli {

namespace {

// Failure while reading an input file; always exit status 2.
struct BadInput {
  std::string message;
};

Graph load(const std::string& path) {
  try {
    return io::read_graph_file(path);
  } catch (const Error& e) {
    throw BadInput{path + ": " + e.what()};
  }
}

std::string flags(const VertexClass& c) {
  std::string s;
  auto put = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ',';
    s += name;
  };
  put(c.sink, "sink");
  put(c.source, "source");
  put(c.isolated, "isolated");
  put(c.regular, "regular");
  put(c.base_of_loop, "base_of_loop");
  return s.empty() ? "-" : s;
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leavitt path algebra graph moves and corner computations", "lpa"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string out_path;
  std::string result;
  std::function<void()> action;

  auto with_graph = [&](CLI::App* sub) {
    sub->add_option("graph,--graph", graph_path, "Graph JSON file")->required();
    sub->add_option("--out", out_path, "Write the result here instead of stdout");
  };

  // info
  auto* info = app.add_subcommand("info", "Vertex classification and global flags");
  with_graph(info);
  info->callback([&] {
    action = [&] {
      const Graph g = load(graph_path);
      std::ostringstream s;
      s << "vertices: " << g.num_vertices() << "\nedges: " << g.num_edges() << '\n';
      for (const auto& v : g.vertices()) s << v << ": " << flags(classify_vertex(g, v)) << '\n';
      s << "totally_looped: " << (is_totally_looped(g) ? "true" : "false") << '\n';
      s << "acyclic: " << (is_acyclic(g) ? "true" : "false") << '\n';
      result = s.str();
    };
  });

  // move
  std::string move_kind;
  std::string vertex;
  std::string partition;
  std::string lengths;
  auto* move = app.add_subcommand("move", "Apply one graph move and print the result graph");
  move->add_option("kind", move_kind, "collapse|source-elim|move-r|in-split|out-split|hair")
      ->required()
      ->check(CLI::IsMember({"collapse", "source-elim", "move-r", "in-split", "out-split", "hair"}));
  with_graph(move);
  move->add_option("--vertex,-v", vertex, "Vertex the move acts on");
  move->add_option("--partition,-p", partition, "Edge partition, e.g. \"e1,e2|e3\"");
  move->add_option("--lengths,-l", lengths, "Hair strand lengths, e.g. \"v1:3,v2:2\"");
  move->callback([&] {
    action = [&] {
      const Graph g = load(graph_path);
      auto need_vertex = [&] {
        if (vertex.empty()) throw Error(ErrorKind::ParseError, "move " + move_kind + " needs --vertex");
      };
      Graph r;
      if (move_kind == "hair") {
        r = hair_extend(g, io::parse_hair_spec(lengths));
      } else if (move_kind == "in-split" || move_kind == "out-split") {
        need_vertex();
        const Partition p = io::parse_partition(partition);
        r = move_kind == "in-split" ? in_split(g, vertex, p) : out_split(g, vertex, p);
      } else {
        need_vertex();
        if (move_kind == "collapse") r = collapse(g, vertex);
        else if (move_kind == "source-elim") r = source_eliminate(g, vertex);
        else r = move_r(g, vertex);
      }
      result = dump(io::graph_to_json(r));
    };
  });

  // sf
  auto* sf = app.add_subcommand("sf", "Source-free reduction");
  with_graph(sf);
  sf->callback([&] {
    action = [&] {
      const SourceFreeResult r = sf_reduce(load(graph_path));
      io::Json j;
      j["sf"] = io::graph_to_json(r.sf);
      j["removed_isolated"] = r.removed_isolated;
      j["trace"] = io::Json::array();
      for (const auto& m : r.trace) j["trace"].push_back(io::move_to_json(m));
      result = dump(j);
    };
  });

  // decompose
  bool log = false;
  auto* dec = app.add_subcommand("decompose", "Reduce to a totally looped graph");
  with_graph(dec);
  dec->add_flag("--log", log, "Print the move log instead of JSON");
  dec->callback([&] {
    action = [&] {
      const DecompositionReport r = decompose(load(graph_path));
      result = log ? io::format_trace(r.trace) : dump(io::decomposition_to_json(r));
    };
  });

  // corner
  std::string class_text;
  bool dot = false;
  auto* corner = app.add_subcommand("corner", "Graph of the corner by an idempotent class");
  with_graph(corner);
  corner->add_option("--class,-c", class_text, "Class, e.g. \"v1:2,v2:1\"")->required();
  corner->add_flag("--log", log, "Print the move log with class snapshots instead of JSON");
  corner->add_flag("--dot", dot, "Print only the output graph, as DOT");
  corner->callback([&] {
    action = [&] {
      const Graph g = load(graph_path);
      const CornerReport r = corner_graph(g, io::parse_multiset(class_text));
      if (dot) result = io::to_dot(r.output, "corner");
      else if (log) result = io::format_trace(r.trace);
      else result = dump(io::corner_to_json(r));
    };
  });

  // monoid-eq
  std::string a_text;
  std::string b_text;
  std::size_t max_states = 100000;
  auto* meq = app.add_subcommand("monoid-eq", "Decide a ~ b in the graph monoid within a state budget");
  with_graph(meq);
  meq->add_option("--a", a_text, "First element")->required();
  meq->add_option("--b", b_text, "Second element")->required();
  meq->add_option("--max-states", max_states, "Search budget")->check(CLI::PositiveNumber);
  meq->callback([&] {
    action = [&] {
      const Graph g = load(graph_path);
      const CongruenceVerdict v =
          congruent_within(g, io::parse_multiset(a_text), io::parse_multiset(b_text), max_states);
      std::ostringstream s;
      s << to_string(v.status) << '\n';
      s << "states: " << v.states_visited << '\n';
      if (v.witness) {
        for (const auto& m : *v.witness) s << "  {" << io::format_multiset(m) << "}\n";
      }
      result = s.str();
    };
  });

  // algebra-eval
  std::string expr;
  std::uint64_t prime = 0;
  auto* alg = app.add_subcommand("algebra-eval", "Normal form of an element of the Leavitt path algebra");
  with_graph(alg);
  alg->add_option("--expr,-e", expr, "Element, e.g. \"2*[e1.e2|f1] + [v]\"")->required();
  alg->add_option("--prime", prime, "Work over GF(p) instead of the rationals");
  alg->callback([&] {
    action = [&] {
      const Graph g = load(graph_path);
      const Field f = prime ? Field::gf(prime) : Field::rationals();
      result = format_element(g, normal_form(g, parse_element(g, f, expr))) + "\n";
    };
  });

  // emit-dot
  auto* edot = app.add_subcommand("emit-dot", "Render a graph file as DOT");
  with_graph(edot);
  edot->callback([&] { action = [&] { result = io::to_dot(load(graph_path)); }; });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    action();
  } catch (const BadInput& e) {
    err << "error: " << e.message << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kBadInput : kModuleError;
  }

  if (out_path.empty()) {
    out << result;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return kModuleError;
    }
    f << result;
  }
  return kOk;
}

}  // namespace lpa::cli
