#include "lpa/monoid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "lpa/error.hpp"

namespace lpa {

MonoidElement::MonoidElement(const std::map<VertexId, std::uint64_t>& coeffs) {
  for (const auto& [v, n] : coeffs) {
    if (n) coeffs_[v] = n;
  }
}

std::uint64_t MonoidElement::operator[](const VertexId& v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? 0 : it->second;
}

void MonoidElement::add(const VertexId& v, std::uint64_t n) {
  if (n) coeffs_[v] += n;
}

void MonoidElement::remove(const VertexId& v, std::uint64_t n) {
  auto it = coeffs_.find(v);
  if (n == 0) return;
  if (it == coeffs_.end() || it->second < n) {
    throw std::invalid_argument("monoid element does not contain the removed copies");
  }
  it->second -= n;
  if (it->second == 0) coeffs_.erase(it);
}

std::uint64_t MonoidElement::mass() const {
  std::uint64_t total = 0;
  for (const auto& [v, n] : coeffs_) total += n;
  return total;
}

bool MonoidElement::contains(const MonoidElement& other) const {
  return std::all_of(other.coeffs_.begin(), other.coeffs_.end(),
                     [&](const auto& kv) { return (*this)[kv.first] >= kv.second; });
}

MonoidElement& MonoidElement::operator+=(const MonoidElement& other) {
  for (const auto& [v, n] : other.coeffs_) coeffs_[v] += n;
  return *this;
}

MonoidElement operator*(std::uint64_t k, const MonoidElement& a) {
  MonoidElement out;
  for (const auto& [v, n] : a.coeffs_) out.add(v, k * n);
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::Inequivalent: return "Inequivalent";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

MonoidElement amp_relation(const Graph& g, const VertexId& v) {
  const std::size_t i = g.vertex_index(v);
  if (g.is_sink(i)) throw Error(ErrorKind::SinkVertex, "'" + v + "' is a sink");
  MonoidElement out;
  for (std::size_t e : g.out_edges(i)) out.add(g.vertex(g.dst(e)));
  return out;
}

namespace monoid_kernels {

RelationTable::RelationTable(const Graph& g)
    : regular(g.num_vertices(), 0), rhs(g.num_vertices(), Counts(g.num_vertices(), 0)) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    regular[v] = !g.is_sink(v);
    for (std::size_t e : g.out_edges(v)) ++rhs[v][g.dst(e)];
  }
}

Counts to_counts(const Graph& g, const MonoidElement& m) {
  Counts c(g.num_vertices(), 0);
  for (const auto& [v, n] : m.coeffs()) c[g.vertex_index(v)] = static_cast<std::uint32_t>(n);
  return c;
}

MonoidElement from_counts(const Graph& g, const Counts& c) {
  MonoidElement m;
  for (std::size_t v = 0; v < c.size(); ++v) m.add(g.vertex(v), c[v]);
  return m;
}

namespace {

std::vector<Counts> neighbors_of(const RelationTable& t, const Counts& x) {
  const std::size_t n = x.size();
  std::vector<Counts> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!t.regular[v]) continue;
    const Counts& r = t.rhs[v];
    if (x[v] > 0) {
      Counts y = x;
      --y[v];
      for (std::size_t w = 0; w < n; ++w) y[w] += r[w];
      if (y != x) out.push_back(std::move(y));
    }
    bool fits = true;
    for (std::size_t w = 0; w < n && fits; ++w) fits = x[w] >= r[w];
    if (fits) {
      Counts y = x;
      for (std::size_t w = 0; w < n; ++w) y[w] -= r[w];
      ++y[v];
      if (y != x) out.push_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<Counts>> expand_frontier_serial(const RelationTable& t,
                                                        const std::vector<Counts>& frontier) {
  std::vector<std::vector<Counts>> out(frontier.size());
  for (std::size_t i = 0; i < frontier.size(); ++i) out[i] = neighbors_of(t, frontier[i]);
  return out;
}

std::vector<std::vector<Counts>> expand_frontier(const RelationTable& t,
                                                 const std::vector<Counts>& frontier) {
  std::vector<std::vector<Counts>> out(frontier.size());
  const auto n = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 16) if (n > 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = neighbors_of(t, frontier[i]);
  return out;
}

}  // namespace monoid_kernels

std::set<MonoidElement> step_neighbors(const Graph& g, const MonoidElement& m) {
  using namespace monoid_kernels;
  const RelationTable table(g);
  std::set<MonoidElement> out;
  const auto layers = expand_frontier_serial(table, {to_counts(g, m)});
  for (const auto& c : layers.front()) {
    out.insert(from_counts(g, c));
  }
  return out;
}

namespace {

using monoid_kernels::Counts;

struct CountsHash {
  std::size_t operator()(const Counts& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : c) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

using ParentMap = std::unordered_map<Counts, Counts, CountsHash>;

std::vector<Counts> trace_back(const ParentMap& parents, Counts x, const Counts& root) {
  std::vector<Counts> chain{x};
  while (x != root) {
    x = parents.at(x);
    chain.push_back(x);
  }
  return chain;
}

}  // namespace

CongruenceVerdict congruent_within(const Graph& g, const MonoidElement& a, const MonoidElement& b,
                                   std::size_t max_states) {
  using namespace monoid_kernels;
  CongruenceVerdict verdict;
  const Counts ca = to_counts(g, a);
  const Counts cb = to_counts(g, b);
  if (ca == cb) {
    verdict.status = Verdict::Equivalent;
    verdict.witness = std::vector<MonoidElement>{a};
    verdict.states_visited = 1;
    return verdict;
  }
  const RelationTable table(g);

  struct Side {
    ParentMap parents;
    std::vector<Counts> frontier;
    Counts root;
  };
  Side side[2];
  side[0].root = ca;
  side[1].root = cb;
  side[0].parents.emplace(ca, ca);
  side[1].parents.emplace(cb, cb);
  side[0].frontier.push_back(ca);
  side[1].frontier.push_back(cb);

  auto total = [&] { return side[0].parents.size() + side[1].parents.size(); };
  auto finish = [&](std::size_t from, const Counts& x, const Counts& y) {
    // x was reached from side `from`, y == neighbor lying on the other side.
    auto mine = trace_back(side[from].parents, x, side[from].root);
    auto theirs = trace_back(side[1 - from].parents, y, side[1 - from].root);
    std::reverse(mine.begin(), mine.end());
    mine.insert(mine.end(), theirs.begin(), theirs.end());
    if (from == 1) std::reverse(mine.begin(), mine.end());
    std::vector<MonoidElement> chain;
    chain.reserve(mine.size());
    for (const auto& c : mine) chain.push_back(from_counts(g, c));
    verdict.status = Verdict::Equivalent;
    verdict.witness = std::move(chain);
    verdict.states_visited = total();
    return verdict;
  };

  if (total() > max_states) {
    verdict.states_visited = total();
    return verdict;
  }
  for (;;) {
    if (side[0].frontier.empty() || side[1].frontier.empty()) {
      verdict.status = Verdict::Inequivalent;
      verdict.states_visited = total();
      return verdict;
    }
    // The side that has seen less goes next, so a finite class on either
    // side is exhausted within about twice its size.
    const auto key = [&](std::size_t i) { return std::make_pair(side[i].parents.size(), side[i].frontier.size()); };
    const std::size_t s = key(0) <= key(1) ? 0 : 1;
    Side& me = side[s];
    const Side& other = side[1 - s];
    const auto expanded = expand_frontier(table, me.frontier);
    std::vector<Counts> next;
    for (std::size_t i = 0; i < me.frontier.size(); ++i) {
      for (const Counts& y : expanded[i]) {
        if (other.parents.count(y)) return finish(s, me.frontier[i], y);
        if (me.parents.emplace(y, me.frontier[i]).second) {
          next.push_back(y);
          if (total() > max_states) {
            verdict.status = Verdict::Unknown;
            verdict.states_visited = total();
            return verdict;
          }
        }
      }
    }
    me.frontier = std::move(next);
  }
}

MonoidElement class_map_under_move(const MoveRecord& move, const Graph& g_before,
                                   const MonoidElement& m) {
  const std::size_t vi = g_before.vertex_index(move.vertex);
  MonoidElement out = m;
  const std::uint64_t n = m[move.vertex];
  out.erase(move.vertex);
  switch (move.kind) {
    case MoveKind::IsolatedRemoval:
      return out;
    case MoveKind::SourceElim:
      if (g_before.is_sink(vi)) return out;
      [[fallthrough]];
    case MoveKind::Collapse:
      if (n) out += n * amp_relation(g_before, move.vertex);
      return out;
    default:
      throw Error(ErrorKind::UnsupportedMoveKind,
                  "no class map for " + std::string(to_string(move.kind)));
  }
}

}  // namespace lpa
