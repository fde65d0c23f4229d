#include <gtest/gtest.h>

#include "brute.hpp"
#include "pcode/classifier.hpp"
#include "pcode/survey.hpp"

using namespace pcode;

namespace {

ClassificationResult classify_literal(const char* group, const char* set) {
  auto g = DihedralGroup::parse(group);
  return classify(parse_connection_set(g, set));
}

brute::Adjacency reference_graph(const ConnectionSet& cs) {
  const long n = cs.group().abelian().moduli()[0];
  std::vector<brute::D> s;
  for (const auto& x : cs.elements()) s.push_back({static_cast<long>(x.apart.exponents[0]), x.flip ? 1 : 0});
  return brute::dihedral_cayley(n, s);
}

}  // namespace

TEST(Classifier, TwoReflectionExample) {
  auto res = classify_literal("Z5", "(1),(4),t,(4)t");
  EXPECT_TRUE(res.admits);
  EXPECT_EQ(res.code_case, CodeCase::Case1);
  EXPECT_EQ(res.reflections, 2u);
  ASSERT_FALSE(res.case1.empty());
  const auto& w = res.case1.front();
  EXPECT_EQ(w.n, 5u);
  EXPECT_EQ(w.m, 1u);
  EXPECT_EQ(w.h, 1u);
}

TEST(Classifier, FourReflectionExample) {
  auto res = classify_literal("Z5", "t,(4)t,(2)t,(1)t");
  EXPECT_TRUE(res.admits);
  EXPECT_EQ(res.code_case, CodeCase::Case2);
  EXPECT_TRUE(std::any_of(res.case2.begin(), res.case2.end(), [](const Case2Witness& w) { return w.v == 2; }));
  for (const auto& w : res.case2) {
    EXPECT_GE(w.v, 2);
    EXPECT_LE(w.v, 4);
    EXPECT_EQ(w.a + w.b, w.v + 1);
  }
}

TEST(Classifier, Rejections) {
  EXPECT_EQ(classify_literal("Z6", "(1),(5),t,(4)t").rejection, NoCodeReason::NotDivisibleBy5);
  EXPECT_EQ(classify_literal("Z3", "(1),(2),t,(1)t").rejection, NoCodeReason::NotDivisibleBy5);
  EXPECT_EQ(classify_literal("Z10", "(1),(9),(5),t").rejection, NoCodeReason::SingleReflection);
  EXPECT_EQ(classify_literal("Z10", "(5),t,(1)t,(3)t").rejection, NoCodeReason::ThreeReflections);
  EXPECT_EQ(classify_literal("Z10xZ2", "(5,0),(0,1),t,(1,0)t").rejection, NoCodeReason::InvolutionPair);
  auto res = classify_literal("Z5", "(1),(4),t,(2)t");
  EXPECT_EQ(res.rejection, NoCodeReason::CongruenceFail);
  EXPECT_FALSE(res.admits);
  EXPECT_EQ(res.code_case, CodeCase::NoCode);
}

TEST(Classifier, CongruenceExamples) {
  EXPECT_EQ(case1_congruence(1, 1, 5), (std::vector<std::pair<std::uint64_t, int>>{{0, +1}}));
  EXPECT_TRUE(case1_congruence(2, 1, 5).empty());
  EXPECT_THROW(case1_congruence(1, 1, 6), UsageError);
  EXPECT_THROW(case1_congruence(0, 0, 0), UsageError);
}

// h = 5u/2 +- m (mod n) over even u in range has a solution exactly when 5 divides h - m or h + m.
TEST(Classifier, CongruenceShortcut) {
  for (std::uint64_t n = 5; n <= 200; n += 5)
    for (std::uint64_t h = 0; h < n; ++h)
      for (std::uint64_t m = 1; m <= n; ++m) {
        bool expect = (h + n * 5 - m) % 5 == 0 || (h + m) % 5 == 0;
        ASSERT_EQ(!case1_congruence(h, m, n).empty(), expect) << n << " " << h << " " << m;
      }
}

TEST(Classifier, NormalizationRebuildsReflections) {
  auto g = DihedralGroup::parse("Z10xZ2");
  auto cs = parse_connection_set(g, "t,(1,0)t,(2,1)t,(5,0)t");
  auto refl = cs.reflections();
  for (std::size_t tc = 0; tc < refl.size(); ++tc) {
    auto norm = normalize(cs, tc);
    EXPECT_EQ(norm.t, refl[tc]);
    std::size_t k = 0;
    for (std::size_t i = 0; i < refl.size(); ++i)
      if (i != tc) EXPECT_EQ(g.mul(norm.t, g.rotation(norm.parts[k++])), refl[i]);
  }
  EXPECT_THROW(normalize(cs, 4), UsageError);
}

TEST(Classifier, InvariantUnderReflectionAutomorphism) {
  for (auto lit : {"Z10", "Z5xZ2", "Z15"}) {
    auto g = DihedralGroup::parse(lit);
    for (const auto& cs : all_connection_sets(g)) {
      auto base = classify(cs);
      for (const auto& tp : cs.reflections()) {
        auto image = apply_reflection_automorphism(cs, tp);
        auto res = classify(image);
        EXPECT_EQ(res.admits, base.admits) << cs.to_string();
        EXPECT_EQ(res.code_case, base.code_case);
        EXPECT_EQ(res.rejection, base.rejection);
        EXPECT_EQ(canonical_form(image), canonical_form(cs));
      }
    }
  }
}

TEST(Classifier, AgreesWithSubsetSearch) {
  for (long n : {5L, 10L}) {
    auto g = DihedralGroup::parse("Z" + std::to_string(n));
    for (const auto& cs : all_connection_sets(g)) {
      bool has_code = !brute::quartic_codes(reference_graph(cs)).empty();
      EXPECT_EQ(classify(cs).admits, has_code) << cs.to_string();
    }
  }
}
