#include <gtest/gtest.h>

#include "brute.hpp"
#include "pcode/enumerator.hpp"
#include "pcode/oracle.hpp"
#include "pcode/survey.hpp"

using namespace pcode;

namespace {

CayleyGraph make(const char* group, const char* set) {
  auto g = DihedralGroup::parse(group);
  return build_graph(parse_connection_set(g, set));
}

PerfectCode code_of(const CayleyGraph& graph, const char* text) {
  std::vector<Vertex> vs;
  for (const auto& x : graph.group().parse_set(text)) vs.push_back(graph.vertex(x));
  return PerfectCode(vs);
}

std::vector<PerfectCode> reference_codes_with_t(const CayleyGraph& graph) {
  const long n = graph.group().abelian().moduli()[0];
  std::vector<brute::D> s;
  for (const auto& x : graph.connection_set().elements())
    s.push_back({static_cast<long>(x.apart.exponents[0]), x.flip ? 1 : 0});
  std::vector<PerfectCode> out;
  for (const auto& c : brute::quartic_codes(brute::dihedral_cayley(n, s)))
    if (std::count(c.begin(), c.end(), 1u)) out.emplace_back(std::vector<Vertex>(c.begin(), c.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Enumerator, TwoReflectionExample) {
  auto graph = make("Z5", "(1),(4),t,(4)t");
  auto codes = codes_containing_t(graph, classify(graph.connection_set()));
  ASSERT_EQ(codes.size(), 1u);
  EXPECT_EQ(codes[0], code_of(graph, "t,(3)"));
  EXPECT_EQ(all_perfect_codes(graph, codes).size(), 5u);
}

TEST(Enumerator, FourReflectionExample) {
  auto graph = make("Z5", "t,(4)t,(2)t,(1)t");
  auto codes = codes_containing_t(graph, classify(graph.connection_set()));
  ASSERT_EQ(codes.size(), 1u);
  EXPECT_EQ(codes[0], code_of(graph, "t,(2)"));
  auto orbit = all_perfect_codes(graph, codes);
  EXPECT_EQ(orbit.size(), 5u);
  for (const auto& c : orbit) EXPECT_TRUE(is_perfect_code(graph, c));
}

TEST(Enumerator, SignOfTwoReflectionFamily) {
  auto graph = make("Z5xZ2", "(1,1),(4,1),t,(4,0)t");
  auto codes = codes_containing_t(graph, classify(graph.connection_set()));
  ASSERT_EQ(codes.size(), 1u);
  EXPECT_EQ(codes[0], code_of(graph, "t,(0,1)t,(3,0),(3,1)"));
  EXPECT_FALSE(is_perfect_code(graph, code_of(graph, "t,(0,1)t,(2,0),(2,1)")));
}

TEST(Enumerator, VerdictKinds) {
  auto graph = make("Z5", "t,(4)t,(2)t,(1)t");
  EXPECT_EQ(is_perfect_code(graph, code_of(graph, "t,(2)")).kind, Verdict::Kind::Perfect);
  auto missing = is_perfect_code(graph, code_of(graph, "t"));
  EXPECT_EQ(missing.kind, Verdict::Kind::Undominated);
  ASSERT_TRUE(missing.witness);
  auto twice = is_perfect_code(graph, code_of(graph, "t,(1)"));
  EXPECT_EQ(twice.kind, Verdict::Kind::DoublyDominated);
  EXPECT_EQ(is_perfect_code(graph, PerfectCode({0, 99})).kind, Verdict::Kind::BadVertex);
  EXPECT_FALSE(is_perfect_code(graph, PerfectCode{}));
}

TEST(Enumerator, TranslatesAreCodes) {
  auto graph = make("Z10xZ2", "t,(1,0)t,(2,0)t,(3,1)t");
  const auto& g = graph.group();
  auto codes = find_all_codes(graph);
  ASSERT_FALSE(codes.empty());
  for (Vertex z = 0; z < g.order(); ++z) EXPECT_TRUE(is_perfect_code(graph, translate(g, codes[0], g.element(z))));
  EXPECT_EQ(all_perfect_codes(graph, codes), codes);
}

TEST(Enumerator, ClosedFormsMatchSubsetSearch) {
  for (long n : {5L, 10L}) {
    auto g = DihedralGroup::parse("Z" + std::to_string(n));
    for (const auto& cs : all_connection_sets(g)) {
      auto graph = build_graph(cs);
      auto res = classify(cs);
      auto expect = reference_codes_with_t(graph);
      auto got = res.admits ? codes_containing_t(graph, res) : std::vector<PerfectCode>{};
      EXPECT_EQ(got, expect) << cs.to_string();
      for (const auto& c : got) EXPECT_EQ(c.size(), graph.vertex_count() / 5);
    }
  }
}

TEST(Enumerator, RejectsInconsistentWitnesses) {
  auto graph = make("Z5", "t,(4)t,(2)t,(1)t");
  auto res = classify(graph.connection_set());
  auto w = res.case2.front();
  w.a += 1;
  EXPECT_THROW(codes_containing_t_case2(graph, w), UsageError);
  auto two = make("Z5", "(1),(4),t,(4)t");
  EXPECT_THROW(codes_containing_t_case1(graph, classify(two.connection_set()).case1.front()), UsageError);
}

TEST(Enumerator, GridCycleReduction) {
  std::size_t instances = 0;
  for (auto lit : {"Z10", "Z15", "Z5xZ2", "Z20"}) {
    auto g = DihedralGroup::parse(lit);
    for (const auto& cs : all_connection_sets(g)) {
      if (cs.reflection_count() != 2) continue;
      auto rots = cs.rotations();
      const auto& a = g.abelian();
      if (a.op(rots[0].apart, rots[1].apart) != a.identity() || a.order_of(rots[0].apart) <= 2) continue;
      auto red = reduce_case1(build_graph(cs));
      EXPECT_TRUE(red.certified()) << cs.to_string();
      EXPECT_EQ(red.alpha_order, 2 * red.n);
      EXPECT_EQ(red.beta_order, a.order_of(red.s1));
      for (std::uint64_t p = 0; p < red.model.size(); ++p) {
        auto [x, y] = red.model.point(p);
        EXPECT_EQ(g.index(red.phi(g, x, y)), red.sigma_inverse[p]);
      }
      ++instances;
    }
  }
  EXPECT_GT(instances, 20u);
  EXPECT_THROW(reduce_case1(make("Z5", "t,(4)t,(2)t,(1)t")), UsageError);
}

TEST(Enumerator, StructureOfFourReflectionCodes) {
  for (auto lit : {"Z5", "Z10", "Z5xZ2"}) {
    auto g = DihedralGroup::parse(lit);
    for (const auto& cs : all_connection_sets(g)) {
      if (cs.reflection_count() != 4) continue;
      auto graph = build_graph(cs);
      for (const auto& code : find_all_codes(graph)) {
        auto failures = check_structure(graph, code);
        EXPECT_TRUE(failures.empty()) << cs.to_string() << ": " << failures.front();
      }
    }
  }
}

TEST(Enumerator, StructureChecksCatchNonCodes) {
  auto graph = make("Z5", "t,(4)t,(2)t,(1)t");
  EXPECT_FALSE(check_structure(graph, code_of(graph, "t,(1)")).empty());
}
