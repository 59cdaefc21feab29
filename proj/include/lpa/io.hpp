#ifndef LPA_IO_HPP
#define LPA_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lpa/graph.hpp"
#include "lpa/monoid.hpp"
#include "lpa/moves.hpp"
#include "lpa/pipeline.hpp"
#include "lpa/projective.hpp"

namespace lpa::io {

using Json = nlohmann::ordered_json;

/// {"vertices":[...],"edges":[{"id":..,"src":..,"dst":..}]}.
/// Shape errors throw ParseError; label errors come from the Graph constructor.
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
Graph read_graph_file(const std::string& path);
Graph parse_graph(std::string_view text);

/// Edge labels are edge ids; vertices and edges in stored order.
std::string to_dot(const Graph& g, std::string_view name = "G");

/// "v1:2,v2:1"; a bare label means coefficient 1, repeats add up, "" is zero.
MonoidElement parse_multiset(std::string_view text);
std::string format_multiset(const MonoidElement& m);

/// "e1,e2|e3".
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

/// "v1:3,v2:2".
HairSpec parse_hair_spec(std::string_view text);

Json multiset_to_json(const MonoidElement& m);
Json move_to_json(const MoveRecord& m);
Json normalized_to_json(const NormalizedClass& n);
Json decomposition_to_json(const DecompositionReport& r);
Json corner_to_json(const CornerReport& r);

/// One line per move: "<n>. <Kind> <vertex>: <detail>", plus the class when
/// given.
std::string format_trace(const std::vector<MoveRecord>& trace);
std::string format_trace(const std::vector<TraceStep>& trace);

}  // namespace lpa::io

#endif  // LPA_IO_HPP
