#ifndef LPA_TESTS_MONOID_ORACLE_HPP
#define LPA_TESTS_MONOID_ORACLE_HPP

#include <map>
#include <numeric>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/monoid.hpp"

namespace lpa::testing {

// Union-find closure of the one-step relation on all multisets of mass <= bound.
// Written against the edge list only, independent of the library's rewriting.
class MonoidClosure {
 public:
  using Counts = std::vector<int>;

  MonoidClosure(const Graph& g, int bound) : g_(g), bound_(bound) {
    const int n = static_cast<int>(g.num_vertices());
    Counts c(n, 0);
    enumerate(c, 0, 0);
    parent_.resize(states_.size());
    std::iota(parent_.begin(), parent_.end(), 0);
    escapes_.assign(states_.size(), false);
    for (std::size_t i = 0; i < states_.size(); ++i) {
      for (int v = 0; v < n; ++v) {
        if (states_[i][v] == 0 || g.is_sink(v)) continue;
        Counts next = states_[i];
        --next[v];
        for (const auto& e : g.edges()) {
          if (e.src == g.vertex(v)) ++next[g.vertex_index(e.dst)];
        }
        auto it = index_.find(next);
        if (it == index_.end()) {
          escapes_[i] = true;
        } else {
          unite(i, it->second);
        }
      }
    }
    closed_.assign(states_.size(), true);
    for (std::size_t i = 0; i < states_.size(); ++i) {
      if (escapes_[i]) closed_[find(i)] = false;
    }
  }

  enum class Answer { Equivalent, Inequivalent, Unknown };

  Answer query(const MonoidElement& a, const MonoidElement& b) {
    const std::size_t ia = index_.at(counts(a));
    const std::size_t ib = index_.at(counts(b));
    const std::size_t ra = find(ia), rb = find(ib);
    if (ra == rb) return Answer::Equivalent;
    if (closed_[ra] || closed_[rb]) return Answer::Inequivalent;
    return Answer::Unknown;
  }

  const std::vector<Counts>& states() const { return states_; }

  MonoidElement element(const Counts& c) const {
    MonoidElement m;
    for (std::size_t v = 0; v < c.size(); ++v) {
      if (c[v]) m.add(g_.vertex(v), static_cast<std::uint64_t>(c[v]));
    }
    return m;
  }

 private:
  void enumerate(Counts& c, std::size_t pos, int mass) {
    if (pos == c.size()) {
      index_.emplace(c, states_.size());
      states_.push_back(c);
      return;
    }
    for (int k = 0; mass + k <= bound_; ++k) {
      c[pos] = k;
      enumerate(c, pos + 1, mass + k);
    }
    c[pos] = 0;
  }

  Counts counts(const MonoidElement& m) const {
    Counts c(g_.num_vertices(), 0);
    for (const auto& [v, n] : m.coeffs()) c[g_.vertex_index(v)] = static_cast<int>(n);
    return c;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  const Graph& g_;
  int bound_;
  std::vector<Counts> states_;
  std::map<Counts, std::size_t> index_;
  std::vector<std::size_t> parent_;
  std::vector<bool> escapes_;
  std::vector<bool> closed_;
};

}  // namespace lpa::testing

#endif  // LPA_TESTS_MONOID_ORACLE_HPP
