#include <gtest/gtest.h>

#include "lpa/algebra.hpp"
#include "lpa/error.hpp"
#include "lpa/generator_map.hpp"
#include "support/fixtures.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

const Field Q = Field::rationals();

AlgebraElement el(const Graph& g, std::string_view text, Field f = Q) { return parse_element(g, f, text); }

}  // namespace

TEST(Multiply, Examples) {
  const Graph a2 = line_graph(2);
  EXPECT_TRUE(equal(a2, multiply(a2, el(a2, "[v0|e1]"), el(a2, "[e1]")), el(a2, "[v0]")));
  EXPECT_TRUE(equal(a2, multiply(a2, el(a2, "[e1]"), el(a2, "[v0|e1]")), el(a2, "[v1]")));
  const Graph r2 = rose(2);
  EXPECT_TRUE(multiply(r2, el(r2, "[v|e]"), el(r2, "[f]")).is_zero());
  EXPECT_TRUE(equal(r2, multiply(r2, el(r2, "[v|e]"), el(r2, "[e]")), el(r2, "[v]")));
  // Both prefix cases of (pq^*)(st^*), and a non-prefix pair.
  EXPECT_TRUE(equal(r2, multiply(r2, el(r2, "[e.f|v]"), el(r2, "[v|f]")), el(r2, "[e.f|f]")));
  EXPECT_TRUE(equal(r2, multiply(r2, el(r2, "[e|e.f]"), el(r2, "[e.f.e]")), el(r2, "[e.e]")));
  EXPECT_TRUE(equal(r2, multiply(r2, el(r2, "[f|e.f.e]"), el(r2, "[e.f]")), el(r2, "[f|e]")));
  EXPECT_TRUE(multiply(r2, el(r2, "[e|e.f]"), el(r2, "[f.e]")).is_zero());
  EXPECT_TRUE(multiply(r2, el(r2, "[v|e.f]"), el(r2, "[e.e]")).is_zero());
}

TEST(Multiply, VertexIdempotentsOrthogonal) {
  const Graph g = collapse_example();
  for (const auto& v : g.vertices()) {
    for (const auto& w : g.vertices()) {
      const auto p = multiply(g, AlgebraElement::vertex(g, Q, v), AlgebraElement::vertex(g, Q, w));
      if (v == w) EXPECT_TRUE(equal(g, p, AlgebraElement::vertex(g, Q, v)));
      else EXPECT_TRUE(p.is_zero());
    }
  }
}

TEST(NormalForm, Examples) {
  const Graph a2 = line_graph(2);
  EXPECT_EQ(normal_form(a2, el(a2, "[e1|e1]")), el(a2, "[v1]"));
  const Graph r2 = rose(2);
  EXPECT_EQ(normal_form(r2, el(r2, "[e|e]")), el(r2, "[v] - [f|f]"));
  EXPECT_EQ(normal_form(r2, el(r2, "[v]")), el(r2, "[v]"));
  EXPECT_EQ(normal_form(r2, el(r2, "[e.e|f.e]")), el(r2, "[e|f] - [e.f|f.f]"));
  EXPECT_TRUE(normal_form(r2, el(r2, "[e|e] + [f|f] - [v]")).is_zero());
}

TEST(NormalForm, IdempotentLinearReduced) {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_graph(rng, 4, 6);
    const AlgebraElement a = random_element(rng, g, Q, 4, 3);
    const AlgebraElement b = random_element(rng, g, Q, 4, 3);
    const AlgebraElement na = normal_form(g, a);
    EXPECT_EQ(normal_form(g, na), na);
    for (const auto& [m, c] : na.terms()) EXPECT_TRUE(is_reduced(g, m));
    const Scalar c = random_scalar(rng, Q);
    EXPECT_EQ(normal_form(g, c * a + b), c * na + normal_form(g, b));
  }
}

TEST(NormalForm, RejectsForeignMonomials) {
  const Graph r2 = rose(2);
  AlgebraElement bad(Q);
  bad.add_term(Monomial{PathTerm{0, {0, 7}}, PathTerm{0, {}}}, Scalar::one(Q));
  try {
    normal_form(r2, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GraphMismatch);
  }
  AlgebraElement mismatched(Q);
  // e1 ends at v0 while the length-0 path sits at v1.
  const Graph a2 = line_graph(2);
  mismatched.add_term(Monomial{PathTerm{0, {0}}, PathTerm{0, {}}}, Scalar::one(Q));
  EXPECT_THROW(validate(a2, mismatched), Error);
}

TEST(Multiply, Associative) {
  for (Field f : {Field::rationals(), Field::gf(7)}) {
    Rng rng(42);
    for (int t = 0; t < 150; ++t) {
      const Graph g = random_graph(rng, 4, 6);
      const auto a = random_element(rng, g, f, 4, 3);
      const auto b = random_element(rng, g, f, 4, 3);
      const auto c = random_element(rng, g, f, 4, 3);
      ASSERT_EQ(multiply(g, multiply(g, a, b), c), multiply(g, a, multiply(g, b, c)));
    }
  }
}

TEST(Multiply, Bilinear) {
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(rng, 4, 6);
    const auto a = random_element(rng, g, Q, 3, 3);
    const auto b = random_element(rng, g, Q, 3, 3);
    const auto c = random_element(rng, g, Q, 3, 3);
    EXPECT_EQ(multiply(g, a + b, c), normal_form(g, multiply(g, a, c) + multiply(g, b, c)));
    EXPECT_EQ(multiply(g, c, a + b), normal_form(g, multiply(g, c, a) + multiply(g, c, b)));
  }
}

TEST(Star, AntiHomomorphism) {
  for (Field f : {Field::rationals(), Field::gf(7)}) {
    Rng rng(44);
    for (int t = 0; t < 150; ++t) {
      const Graph g = random_graph(rng, 4, 6);
      const auto a = random_element(rng, g, f, 4, 3);
      const auto b = random_element(rng, g, f, 4, 3);
      ASSERT_TRUE(equal(g, star(multiply(g, a, b)), multiply(g, star(b), star(a))));
      ASSERT_EQ(star(star(a)), a);
    }
  }
}

TEST(DegreeSplit, Examples) {
  const Graph r2 = rose(2);
  const auto d1 = degree_split(r2, el(r2, "[e.f|e]"));
  ASSERT_EQ(d1.size(), 1u);
  EXPECT_EQ(d1.begin()->first, 1);
  const auto d0 = degree_split(r2, el(r2, "[v]"));
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_EQ(d0.begin()->first, 0);
  const auto d = degree_split(r2, el(r2, "[e] + [v|f]"));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.at(1), el(r2, "[e]"));
  EXPECT_EQ(d.at(-1), el(r2, "[v|f]"));
}

TEST(DegreeSplit, GradingIsAdditive) {
  for (Field f : {Field::rationals(), Field::gf(7)}) {
    Rng rng(45);
    for (int t = 0; t < 150; ++t) {
      const Graph g = random_graph(rng, 4, 6);
      const auto a = random_element(rng, g, f, 4, 3);
      const auto b = random_element(rng, g, f, 4, 3);
      const auto da = degree_split(g, a);
      const auto db = degree_split(g, b);
      AlgebraElement sum(f);
      for (const auto& [n, part] : da) sum += part;
      ASSERT_EQ(sum, a);
      const auto dab = degree_split(g, multiply(g, a, b));
      std::map<int, AlgebraElement> expected;
      for (const auto& [n1, x] : da) {
        for (const auto& [n2, y] : db) {
          auto it = expected.try_emplace(n1 + n2, f).first;
          it->second += multiply(g, x, y);
        }
      }
      for (auto& [n, x] : expected) {
        const auto it = dab.find(n);
        const AlgebraElement got = it == dab.end() ? AlgebraElement(f) : it->second;
        ASSERT_TRUE(equal(g, got, x)) << "degree " << n;
      }
      for (const auto& [n, x] : dab) ASSERT_TRUE(expected.count(n));
    }
  }
}

TEST(DefiningRelations, Examples) {
  const auto triv = defining_relations(trivial_graph());
  ASSERT_EQ(triv.size(), 1u);
  EXPECT_EQ(triv[0].label.substr(0, 3), "(1)");
  EXPECT_TRUE(evaluate(trivial_graph(), triv[0]).is_zero());

  auto has = [](const std::vector<Relation>& rs, const std::string& label) {
    return std::any_of(rs.begin(), rs.end(), [&](const Relation& r) { return r.label == label; });
  };
  EXPECT_TRUE(has(defining_relations(line_graph(2)), "(4) v1"));
  EXPECT_TRUE(has(defining_relations(rose(2)), "(3) e*.f"));
}

TEST(DefiningRelations, AllVanish) {
  for (Field f : {Field::rationals(), Field::gf(7)}) {
    Rng rng(46);
    for (int t = 0; t < 60; ++t) {
      const Graph g = random_graph(rng, 4, 6);
      for (const auto& r : defining_relations(g, f)) {
        ASSERT_TRUE(evaluate(g, r, f).is_zero()) << r.label;
      }
    }
    for (const Graph& g : {collapse_example(), iso_base(), hair_example_total(), rose(3)}) {
      for (const auto& r : defining_relations(g, f)) ASSERT_TRUE(evaluate(g, r, f).is_zero()) << r.label;
    }
  }
}

TEST(ElementText, RoundTrip) {
  Rng rng(47);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_graph(rng, 4, 6);
    const auto a = random_element(rng, g, Q, 4, 3);
    ASSERT_EQ(parse_element(g, Q, format_element(g, a)), a) << format_element(g, a);
  }
  const Graph u = disjoint_union({rose(2), line_graph(2)});
  const auto a = el(u, "2*[0.e.0.f|0.e] - 1/2*[1.e1]");
  EXPECT_EQ(parse_element(u, Q, format_element(u, a)), a);
  EXPECT_EQ(format_element(u, AlgebraElement(Q)), "0");
}

TEST(ElementText, Errors) {
  const Graph r2 = rose(2);
  EXPECT_THROW(el(r2, "[x]"), Error);
  EXPECT_THROW(el(r2, "2*[e"), Error);
  EXPECT_THROW(el(r2, "[e|]x"), Error);
  const Graph a2 = line_graph(2);
  EXPECT_THROW(el(a2, "[e1|v1]"), Error);
}

TEST(Transport, RelabelsAcrossGraphs) {
  const Graph small = restriction(iso_base(), {"v1", "v2", "v3"});
  const Graph big = iso_base();
  const auto a = el(small, "3*[b.h|h] + [a|a]");
  const auto moved = transport(small, big, a);
  EXPECT_EQ(format_element(big, moved), format_element(small, a));
  EXPECT_THROW(transport(big, small, el(big, "[k]")), Error);
}

// Reduced monomials form a basis; for acyclic graphs their number is
// sum over sinks w of (paths ending at w)^2.
TEST(NormalForm, ReducedMonomialsCountDimension) {
  Rng rng(48);
  for (int t = 0; t < 80; ++t) {
    const Graph g = random_acyclic_graph(rng, 5, 7);
    const auto paths = all_paths(g, static_cast<int>(g.num_vertices()));
    std::size_t reduced = 0;
    std::map<std::uint32_t, std::size_t> ending;
    for (const auto& p : paths) ++ending[path_range(g, p)];
    for (const auto& p : paths) {
      for (const auto& q : paths) {
        if (path_range(g, p) != path_range(g, q)) continue;
        if (is_reduced(g, Monomial{p, q})) ++reduced;
      }
    }
    std::size_t dim = 0;
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
      if (g.is_sink(v)) dim += ending[v] * ending[v];
    }
    EXPECT_EQ(reduced, dim);
  }
}
