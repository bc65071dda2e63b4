#include <gtest/gtest.h>

#include "generators.hpp"
#include "lexfirst/embedding.hpp"
#include "lexfirst/errors.hpp"
#include "lexfirst/graph.hpp"
#include "lexfirst/graph_io.hpp"
#include "lexfirst/strings.hpp"
#include "oracles.hpp"

using namespace lexfirst;

TEST(LexCompare, Examples) {
  EXPECT_EQ(lex_compare(Coloring::parse("012", 3), Coloring::parse("012", 3)), std::strong_ordering::equal);
  EXPECT_EQ(lex_compare(TFAssignment::parse("1"), TFAssignment::parse("2")), std::strong_ordering::less);
  EXPECT_EQ(lex_compare(Coloring::parse("0122", 4), Coloring::parse("0123", 4)), std::strong_ordering::less);
}

TEST(LexCompare, MismatchIsUsageError) {
  EXPECT_THROW(lex_compare(Coloring::parse("01", 3), Coloring::parse("012", 3)), UsageError);
  EXPECT_THROW(lex_compare(Coloring::parse("01", 3), Coloring::parse("01", 4)), UsageError);
  EXPECT_THROW(lex_compare(TFAssignment::parse("1"), TFAssignment::parse("12")), UsageError);
}

TEST(ShortlexCompare, Examples) {
  EXPECT_EQ(shortlex_compare(BitString("", "01"), BitString("0", "01")), std::strong_ordering::less);
  EXPECT_EQ(shortlex_compare(BitString("10", "01"), BitString("100", "01")), std::strong_ordering::less);
  EXPECT_EQ(shortlex_compare(BitString("01", "01"), BitString("10", "01")), std::strong_ordering::less);
  EXPECT_THROW(shortlex_compare(BitString("1", "01"), BitString("1", "12")), UsageError);
  EXPECT_THROW(BitString("3", "12"), UsageError);
}

TEST(ShortlexCompare, AgreesWithLexOnEqualLengths) {
  for (int k = 2; k <= 3; ++k) {
    const std::string alphabet = oracle::digits(k);
    for (std::size_t len = 0; len <= 6; ++len) {
      std::vector<std::string> all;
      oracle::each_string(len, alphabet, [&](const std::string& s) {
        all.push_back(s);
        return false;
      });
      for (std::size_t i = 0; i < all.size(); i += 7) {
        for (std::size_t j = 0; j < all.size(); j += 5) {
          const auto sl = shortlex_compare(BitString(all[i], alphabet), BitString(all[j], alphabet));
          if (len == 0) {
            EXPECT_EQ(sl, std::strong_ordering::equal);
            continue;
          }
          const auto lx = lex_compare(Coloring::parse(all[i], k), Coloring::parse(all[j], k));
          ASSERT_EQ(sl, lx) << all[i] << " vs " << all[j];
          ASSERT_EQ(sl, i <=> j);
        }
      }
    }
  }
}

TEST(ShortlexCompare, TotalOrderOnRandomTriples) {
  gen::Engine rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    std::string s[3];
    for (auto& x : s) x = gen::string_over(rng, "012", gen::uniform(rng, 0, 4));
    const auto ab = shortlex_compare(s[0], s[1]);
    const auto ba = shortlex_compare(s[1], s[0]);
    ASSERT_EQ(ab == 0, s[0] == s[1]);
    ASSERT_EQ(ab < 0, ba > 0);
    if (ab <= 0 && shortlex_compare(s[1], s[2]) <= 0) {
      ASSERT_TRUE(shortlex_compare(s[0], s[2]) <= 0) << s[0] << " " << s[1] << " " << s[2];
    }
  }
}

TEST(Sentinel, ExceedsEveryShorterOrEqualString) {
  gen::Engine rng(5);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::size_t p = gen::uniform(rng, 0, 6);
    const std::string y = gen::string_over(rng, "012", gen::uniform(rng, 0, p));
    ASSERT_EQ(shortlex_compare(y, power_of_two_string(p)), std::strong_ordering::less) << y << " p=" << p;
  }
  EXPECT_EQ(power_of_two_string(0), "1");
  EXPECT_EQ(power_of_two_string(3), "1000");
}

TEST(Parity, LastSymbolValue) {
  EXPECT_FALSE(is_odd(""));
  EXPECT_TRUE(is_odd("21"));
  EXPECT_FALSE(is_odd("12"));
  EXPECT_FALSE(is_odd("100"));
  EXPECT_TRUE(is_odd("0001"));
}

TEST(PolynomialBound, EvaluatesAndIsMonotone) {
  const PolynomialBound p{1, 0, 2};
  EXPECT_EQ(p(0), 1u);
  EXPECT_EQ(p(3), 19u);
  EXPECT_EQ(PolynomialBound::identity_plus(1)(5), 6u);
  EXPECT_EQ(p.plus(1)(3), 20u);
  for (std::uint64_t s = 0; s < 50; ++s) EXPECT_LE(p(s), p(s + 1));
}

TEST(OrderedGraph, RejectsMalformedInput) {
  EXPECT_THROW(OrderedGraph(2, {{0, 2}}), UsageError);
  EXPECT_THROW(OrderedGraph(2, {{1, 1}}), UsageError);
  EXPECT_THROW(OrderedGraph(2, {{0, 1}, {1, 0}}), UsageError);
  EXPECT_THROW(OrderedGraph(2, {{0, 1}}, {}, Rotation{{1}, {}}), UsageError);
}

TEST(OrderedGraph, VertexOrderIsPartOfIdentity) {
  const OrderedGraph p = named::path(3);
  const OrderedGraph q = p.permuted({1, 0, 2});
  EXPECT_EQ(p.edge_count(), q.edge_count());
  EXPECT_NE(p, q);
  EXPECT_TRUE(q.has_edge(1, 0));
  EXPECT_TRUE(q.has_edge(0, 2));
}

TEST(Embedding, NamedGraphs) {
  const auto tri = verify_embedding(named::triangle());
  ASSERT_TRUE(tri);
  EXPECT_TRUE(tri->planar);
  EXPECT_EQ(tri->faces, 2u);
  const auto k4 = verify_embedding(named::k4());
  ASSERT_TRUE(k4);
  EXPECT_TRUE(k4->planar);
  EXPECT_EQ(k4->faces, 4u);
  const auto k5 = verify_embedding(named::k5());
  ASSERT_TRUE(k5);
  EXPECT_FALSE(k5->planar);
  EXPECT_GE(k5->genus, 1u);
  EXPECT_FALSE(verify_embedding(named::triangle().without_rotation()));
}

TEST(Embedding, K5IsNeverPlanarUnderSampledRotations) {
  const OrderedGraph k5 = named::k5();
  gen::Engine rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    Rotation rot;
    for (Vertex v = 0; v < 5; ++v) {
      auto around = k5.neighbors(v);
      std::shuffle(around.begin(), around.end(), rng);
      rot.push_back(around);
    }
    const auto report = verify_embedding(k5.with_rotation(rot));
    ASSERT_TRUE(report);
    ASSERT_GE(report->genus, 1u);
  }
}

TEST(Embedding, MalformedRotationIsUsageError) {
  // A rotation that misses a neighbor is rejected at construction.
  EXPECT_THROW(named::triangle().with_rotation({{1}, {0, 2}, {0, 1}}), UsageError);
}

TEST(AttachPendant, Examples) {
  const OrderedGraph t = attach_pendant_in_rotation(named::triangle(), 0, "p");
  EXPECT_EQ(t.vertex_count(), 4u);
  EXPECT_EQ(t.degree(0), 3u);
  const OrderedGraph k2 = attach_pendant_in_rotation(named::k1(), 0, "p");
  EXPECT_EQ(k2.vertex_count(), 2u);
  EXPECT_EQ(k2.edge_count(), 1u);
  const OrderedGraph k4 = attach_pendant_in_rotation(named::k4(), 2, "p");
  EXPECT_EQ(k4.vertex_count(), 5u);
  EXPECT_TRUE(verify_embedding(k4)->planar);
  EXPECT_THROW(attach_pendant_in_rotation(named::triangle(), 3, "p"), UsageError);
}

TEST(AttachPendant, PreservesGenus) {
  const OrderedGraph k5 = named::k5();
  for (Vertex v = 0; v < 5; ++v) {
    EXPECT_EQ(verify_embedding(attach_pendant_in_rotation(k5, v, "p"))->genus, verify_embedding(k5)->genus);
  }
  for (const OrderedGraph& g : {named::triangle(), named::k4(), named::cycle(5)}) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      EXPECT_EQ(verify_embedding(attach_pendant_in_rotation(g, v, "p"))->genus, 0u);
    }
  }
}

TEST(GraphJson, RoundTrip) {
  const OrderedGraph g = named::k4().with_roles({{0, VertexRole::old}, {3, VertexRole::new_pendant}});
  const auto doc = parse_graph(dump_graph(g, nlohmann::json{{"note", "x"}}));
  EXPECT_EQ(doc.graph, g);
  EXPECT_EQ(doc.meta["note"], "x");
  const auto plain = parse_graph(R"({"n": 3, "edges": [[0, 1], [1, 2]]})");
  EXPECT_EQ(plain.graph.vertex_count(), 3u);
  EXPECT_FALSE(plain.graph.has_rotation());
}

TEST(GraphJson, Errors) {
  EXPECT_THROW(parse_graph("[1,2]"), ParseError);
  EXPECT_THROW(parse_graph(R"({"n": 2, "edges": [[0]]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"n": 2, "edges": [[0, 1]], "roles": {"0": "bogus"}})"), ParseError);
  EXPECT_THROW(parse_graph("{"), ParseError);
}
