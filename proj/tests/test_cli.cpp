#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(PCODE_CLI) + " " + args + " 2>/dev/null";
  Run r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (auto n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_path(const char* name) { return std::string(PCODE_TMP) + "/" + name; }

}  // namespace

TEST(Cli, ClassifyJson) {
  auto r = run("classify --group Z5 --set '(1),(4),t,(4)t' --format json");
  EXPECT_EQ(r.status, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["admits"].get<bool>());
  EXPECT_EQ(doc["case"], "Case1");
  EXPECT_TRUE(doc["rejection"].is_null());
  EXPECT_EQ(doc["witnesses"][0]["h"], 1);
}

TEST(Cli, ClassifyExitCodes) {
  EXPECT_EQ(run("classify --group Z10 --set '(1),(9),(5),t'").status, 1);
  auto bad = run("classify --group Z5 --set '(1),(2),t,(4)t'");
  EXPECT_EQ(bad.status, 2);
  EXPECT_EQ(run("classify --group Q5 --set 't'").status, 2);
  EXPECT_EQ(run("classify --group Z5").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Cli, EnumerateWithCheck) {
  auto r = run("enumerate --group Z5 --set 't,(4)t,(2)t,(1)t' --check");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{t,(2)} verified\n");
  auto all = run("enumerate --group Z5 --set 't,(4)t,(2)t,(1)t' --all-translates --format json");
  EXPECT_EQ(nlohmann::json::parse(all.out)["count"], 5);
  EXPECT_EQ(run("enumerate --group Z5 --set '(1),(4),t,(2)t'").status, 1);
}

TEST(Cli, SearchAndBudget) {
  auto r = run("search --group Z5 --set '(1),(4),t,(4)t'");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("5 perfect codes"), std::string::npos);
  EXPECT_EQ(run("search --group Z10 --set '(1),(9),(5),t'").status, 1);
  EXPECT_EQ(run("search --group Z100 --set '(1),(99),t,(1)t' --budget 3").status, 3);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run("verify --group Z5 --set 't,(4)t,(2)t,(1)t' --code 't,(2)'").out, "true\n");
  auto r = run("verify --group Z5 --set 't,(4)t,(2)t,(1)t' --code 't,(1)'");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.rfind("false", 0), 0u);
}

TEST(Cli, ExportAndSearchGraphFile) {
  auto path = temp_path("cli_graph.json");
  EXPECT_EQ(run("export --group Z5 --set 't,(4)t,(2)t,(1)t' --format json --out " + path).status, 0);
  auto r = run("search --graph " + path + " --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 5);
  auto dot = run("export --group Z5 --set 't,(4)t,(2)t,(1)t' --format dot");
  EXPECT_EQ(dot.out.rfind("graph cayley {", 0), 0u);
}

TEST(Cli, JobFile) {
  auto path = temp_path("cli_job.json");
  std::ofstream(path) << R"({"group": "Z5", "set": ["t", "(4)t", "(2)t", "(1)t"], "format": "json"})";
  auto r = run("classify --job " + path);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["case"], "Case2");
  auto text = run("classify --job " + path + " --format text");
  EXPECT_NE(text.out.find("case         Case2"), std::string::npos);
}

TEST(Cli, Survey) {
  auto r = run("survey --groups Z5,Z6 --oracle-check --raw");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("group,set,reflections"), 0u);
  EXPECT_EQ(r.out.find("mismatch"), std::string::npos);
  auto capped = run("survey --groups Z5,Z20 --max-order 10");
  EXPECT_EQ(capped.out.find("Z20"), std::string::npos);
  EXPECT_EQ(run("survey").status, 2);
}
