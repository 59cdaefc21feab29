#include <gtest/gtest.h>

#include "lpa/error.hpp"
#include "lpa/generator_map.hpp"
#include "support/fixtures.hpp"
#include "support/instances.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

const Field Q = Field::rationals();

AlgebraElement el(const Graph& g, std::string_view text) { return parse_element(g, Q, text); }

}  // namespace

TEST(MoveRPsi, LineGraph) {
  const Graph a3 = line_graph(3);
  const Graph g = move_r(a3, "v1");
  const GeneratorMap psi = move_r_psi(a3, "v1");
  EXPECT_EQ(psi.on_edges.at("[e2e1]"), el(a3, "[e2.e1]"));
  EXPECT_EQ(psi.on_ghost_edges.at("[e2e1]"), el(a3, "[v0|e2.e1]"));
  EXPECT_EQ(psi.on_vertices.at("v0"), el(a3, "[v0]"));
  EXPECT_EQ(psi.on_vertices.size(), 2u);
  EXPECT_TRUE(verify_generator_map(g, a3, psi).ok);
}

TEST(MoveRPsi, SourceCase) {
  const Graph a2 = line_graph(2);
  const GeneratorMap psi = move_r_psi(a2, "v1");
  EXPECT_TRUE(psi.on_edges.empty());
  EXPECT_TRUE(verify_generator_map(move_r(a2, "v1"), a2, psi).ok);
}

TEST(MoveRPsi, NotApplicable) {
  try {
    move_r_psi(rose(1), "v");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MoveRNotApplicable);
  }
}

TEST(MoveRPsi, KillsRelationsAndLandsInCorner) {
  Rng rng(51);
  int checked = 0, sources = 0;
  for (int t = 0; t < 400 && checked < 40; ++t) {
    const Graph e = random_graph(rng, 5, 7);
    for (const auto& w : move_r_sites(e)) {
      const Graph g = move_r(e, w);
      if (g.empty()) continue;
      const GeneratorMap psi = move_r_psi(e, w);
      const auto r = verify_generator_map(g, e, psi);
      ASSERT_TRUE(r.ok) << r.failures.front().relation << ": " << r.failures.front().residual;
      if (e.is_source(e.vertex_index(w))) ++sources;

      AlgebraElement eps(Q);
      for (const auto& u : e.vertices()) {
        if (u != w) eps += AlgebraElement::vertex(e, Q, u);
      }
      for (int k = 0; k < 10; ++k) {
        const AlgebraElement m = AlgebraElement::of(Q, random_monomial(rng, g, 3));
        const AlgebraElement image = apply_map(g, e, psi, m);
        ASSERT_EQ(multiply(e, multiply(e, eps, image), eps), image);
      }
      ++checked;
    }
  }
  EXPECT_GE(checked, 20);
  EXPECT_GT(sources, 0);
}

// For acyclic graphs both sides are finite-dimensional: the corner by the
// vertices other than w has the reduced monomials not touching w at either
// end as a basis, and must match the dimension of L(G).
TEST(MoveRPsi, CornerDimensionMatches) {
  Rng rng(52);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 30; ++t) {
    const Graph e = random_acyclic_graph(rng, 5, 7);
    for (const auto& w : move_r_sites(e)) {
      const Graph g = move_r(e, w);
      if (g.empty()) continue;
      const std::uint32_t wi = static_cast<std::uint32_t>(e.vertex_index(w));
      auto count = [](const Graph& h, std::optional<std::uint32_t> skip) {
        const auto paths = all_paths(h, static_cast<int>(h.num_vertices()));
        std::size_t n = 0;
        for (const auto& p : paths) {
          for (const auto& q : paths) {
            if (skip && (p.start == *skip || q.start == *skip)) continue;
            if (path_range(h, p) == path_range(h, q) && is_reduced(h, Monomial{p, q})) ++n;
          }
        }
        return n;
      };
      EXPECT_EQ(count(e, wi), count(g, std::nullopt));
      ++checked;
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(InSplitPi, Examples) {
  const Graph r2 = rose(2);
  const Partition p{{{"e"}, {"f"}}};
  const Graph is = in_split(r2, "v", p);
  const GeneratorMap pi = in_split_pi(r2, "v", p);
  EXPECT_EQ(pi.on_vertices.at("v"), AlgebraElement::vertex(is, Q, "v_1"));
  EXPECT_EQ(pi.on_edges.at("e"), el(is, "[e#1.e#1|e#1] + [e#1.f#1|f#1]"));
  EXPECT_EQ(pi.on_edges.at("f"), el(is, "[f#1.e#2|e#1] + [f#1.f#2|f#1]"));
  EXPECT_TRUE(verify_generator_map(r2, is, pi).ok);

  const Graph g = collapse_example();
  const Partition q{{{"e2"}, {"f2"}}};
  const GeneratorMap pi2 = in_split_pi(g, "v1", q);
  const Graph is2 = in_split(g, "v1", q);
  EXPECT_EQ(pi2.on_edges.at("f"), AlgebraElement::edge(is2, Q, "f#1"));
  EXPECT_TRUE(verify_generator_map(g, is2, pi2).ok);
  // The sink-target case: r^{-1}(v4) = {f} and v4 emits nothing.
  const Graph is3 = in_split(g, "v4", Partition{{{"f"}}});
  const GeneratorMap pi3 = in_split_pi(g, "v4", Partition{{{"f"}}});
  EXPECT_EQ(pi3.on_edges.at("f"), AlgebraElement::edge(is3, Q, "f"));
  EXPECT_TRUE(verify_generator_map(g, is3, pi3).ok);
}

TEST(InSplitPi, SourceVertex) {
  try {
    in_split_pi(line_graph(2), "v1", Partition{{{"e1"}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SourceVertex);
  }
}

TEST(InSplitPi, KillsRelations) {
  for (Field f : {Field::rationals(), Field::gf(7)}) {
    Rng rng(53);
    int checked = 0, with_loops = 0;
    for (int t = 0; t < 300 && checked < 40; ++t) {
      const Graph e = random_graph(rng, 4, 7);
      for (std::size_t v = 0; v < e.num_vertices(); ++v) {
        if (e.is_source(v)) continue;
        const Partition p = random_in_partition(rng, e, v);
        if (e.is_sink(v) && p.blocks.size() > 1) continue;
        const Graph is = in_split(e, e.vertex(v), p);
        const auto r = verify_generator_map(e, is, in_split_pi(e, e.vertex(v), p, f));
        ASSERT_TRUE(r.ok) << r.failures.front().relation << ": " << r.failures.front().residual;
        if (e.has_loop_at(v)) ++with_loops;
        ++checked;
      }
    }
    EXPECT_GE(checked, 20);
    EXPECT_GT(with_loops, 0);
  }
}

// Splitting a sink into two blocks: L(E) = M_3(K) but L(E_is) = M_2(K) + M_2(K),
// so no injective map exists and the formula breaks relation (2) on the
// second block.
TEST(InSplitPi, MultiBlockSinkIsNotAHomomorphism) {
  const Graph e({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}});
  const Partition p{{{"a"}, {"b"}}};
  const Graph is = in_split(e, "v", p);
  const auto r = verify_generator_map(e, is, in_split_pi(e, "v", p));
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.failures.front().relation, "(2) b.r(b)");
  EXPECT_TRUE(verify_generator_map(e, in_split(e, "v", Partition{{{"a", "b"}}}),
                                   in_split_pi(e, "v", Partition{{{"a", "b"}}}))
                  .ok);
}

TEST(VerifyGeneratorMap, IdentityAndBroken) {
  const Graph g = collapse_example();
  EXPECT_TRUE(verify_generator_map(g, g, identity_map(g)).ok);
  GeneratorMap broken = identity_map(g);
  broken.on_vertices.at("v2") = AlgebraElement(Q);
  const auto r = verify_generator_map(g, g, broken);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(std::any_of(r.failures.begin(), r.failures.end(),
                          [](const VerificationFailure& f) { return f.relation == "(2) e1.r(e1)"; }));
  GeneratorMap scaled = identity_map(g);
  scaled.on_vertices.at("v4") = Scalar(Q, 2L) * AlgebraElement::vertex(g, Q, "v4");
  const auto s = verify_generator_map(g, g, scaled);
  EXPECT_FALSE(s.ok);
  EXPECT_TRUE(std::any_of(s.failures.begin(), s.failures.end(),
                          [](const VerificationFailure& f) { return f.relation == "(1) v4.v4"; }));
}
