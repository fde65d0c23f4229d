#include <gtest/gtest.h>

#include "pcode/survey.hpp"

using namespace pcode;

TEST(Survey, AbelianGroupsByInvariantFactors) {
  auto groups = abelian_groups_up_to(16);
  EXPECT_EQ(groups.size(), 24u);
  std::vector<std::string> of16;
  for (const auto& a : groups)
    if (a.order() == 16) of16.push_back(a.to_string());
  std::sort(of16.begin(), of16.end());
  EXPECT_EQ(of16, (std::vector<std::string>{"Z16", "Z2xZ2xZ2xZ2", "Z2xZ2xZ4", "Z2xZ8", "Z4xZ4"}));
}

TEST(Survey, CandidateBlocks) {
  auto g = DihedralGroup::parse("Z10");
  auto blocks = inverse_closed_blocks(g);
  // 10 reflections, the involution (5), and 4 pairs {a, -a}.
  EXPECT_EQ(blocks.size(), 15u);
}

TEST(Survey, DedupKeepsOneSetPerForm) {
  auto g = DihedralGroup::parse("Z10");
  auto raw = all_connection_sets(g);
  auto dedup = dedup_by_normalization(raw);
  EXPECT_LT(dedup.size(), raw.size());
  std::set<std::vector<Vertex>> forms;
  for (const auto& cs : raw) forms.insert(canonical_form(cs));
  EXPECT_EQ(dedup.size(), forms.size());
}

TEST(Survey, RowsAgreeWithOracle) {
  SurveyOptions opts;
  opts.oracle_check = true;
  opts.raw = true;
  auto rows = run_survey({AbelianSpec::parse("Z5"), AbelianSpec::parse("Z5xZ2")}, opts);
  EXPECT_EQ(rows.size(), 25u + 500u);
  for (const auto& r : rows) EXPECT_EQ(r.oracle_agree, "ok") << r.group << " " << r.set;

  opts.threads = 3;
  auto threaded = run_survey({AbelianSpec::parse("Z5"), AbelianSpec::parse("Z5xZ2")}, opts);
  EXPECT_EQ(format_csv(threaded), format_csv(rows));
}

TEST(Survey, CsvLayout) {
  SurveyOptions opts;
  auto csv = format_csv(run_survey({AbelianSpec::parse("Z5")}, opts));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kSurveyHeader);
  EXPECT_NE(csv.find("Z5,\"t,(1),(1)t,(4)\",2,true,Case1,5,1,,,,,1,5,-"), std::string::npos);
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("plain"), "plain");
}
