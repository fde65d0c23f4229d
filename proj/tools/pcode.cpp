// pcode: perfect codes in quartic Cayley graphs on generalized dihedral groups.
//
// Exit codes: 0 yes / success, 1 no, 2 invalid input, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcode/classifier.hpp"
#include "pcode/enumerator.hpp"
#include "pcode/oracle.hpp"
#include "pcode/serialize.hpp"
#include "pcode/survey.hpp"

namespace {

using namespace pcode;
using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

struct Job {
  std::string group;
  std::string set;
  std::string code;
  std::string graph_path;
  std::string format = "text";
  std::string out;
  std::string job_path;
  bool all_translates = false;
  bool check = false;
  std::uint64_t budget = OracleOptions{}.budget;
  unsigned threads = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Fill fields not given on the command line from a JSON job file.
void apply_job_file(Job& job, const CLI::App& cmd) {
  if (job.job_path.empty()) return;
  json doc;
  try {
    doc = json::parse(read_file(job.job_path));
  } catch (const json::exception& e) {
    throw ParseError(std::string("job file: ") + e.what());
  }
  auto given = [&](const char* flag) {
    try {
      return cmd.get_option(flag)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
      return true;
    }
  };
  auto str_or_list = [](const json& v) {
    if (v.is_array()) {
      std::string s;
      for (const auto& e : v) s += (s.empty() ? "" : ",") + e.get<std::string>();
      return s;
    }
    return v.get<std::string>();
  };
  try {
    if (doc.contains("group") && !given("--group")) job.group = doc["group"].get<std::string>();
    if (doc.contains("set") && !given("--set")) job.set = str_or_list(doc["set"]);
    if (doc.contains("code") && !given("--code")) job.code = str_or_list(doc["code"]);
    if (doc.contains("format") && !given("--format")) job.format = doc["format"].get<std::string>();
    if (doc.contains("budget") && !given("--budget")) job.budget = doc["budget"].get<std::uint64_t>();
    if (doc.contains("all_translates") && !given("--all-translates")) job.all_translates = doc["all_translates"].get<bool>();
    if (doc.contains("check") && !given("--check")) job.check = doc["check"].get<bool>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("job file: ") + e.what());
  }
}

void emit(const Job& job, const std::string& text) {
  if (job.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(job.out);
  if (!out) throw UsageError("cannot write " + job.out);
  out << text;
}

ConnectionSet load_instance(const Job& job) {
  if (job.group.empty()) throw ParseError("missing --group");
  if (job.set.empty()) throw ParseError("missing --set");
  auto g = DihedralGroup::parse(job.group);
  return parse_connection_set(g, job.set);
}

std::string brace(const std::vector<std::string>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
  return s + "}";
}

int cmd_classify(const Job& job) {
  auto cs = load_instance(job);
  const auto& g = cs.group();
  auto res = classify(cs);
  if (job.format == "json") {
    emit(job, to_json(g, res).dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "group        " << g.to_string() << "\n"
        << "set          {" << cs.to_string() << "}\n"
        << "reflections  " << res.reflections << "\n"
        << "admits       " << (res.admits ? "yes" : "no") << "\n"
        << "case         " << to_string(res.code_case) << "\n";
    if (!res.admits) out << "rejection    " << to_string(res.rejection) << "\n";
    out << "witnesses    " << res.case1.size() + res.case2.size() << "\n";
    const auto& a = g.abelian();
    for (const auto& w : res.case1)
      out << "  t=" << g.format(w.t) << " s0=" << a.format(w.s0) << " s1=" << a.format(w.s1) << " n=" << w.n
          << " m=" << w.m << " h=" << w.h << " u=" << w.u << " sign=" << (w.sign > 0 ? '+' : '-') << "\n";
    for (const auto& w : res.case2)
      out << "  t=" << g.format(w.roles.t) << " s0=" << a.format(w.roles.s0) << " s1=" << a.format(w.roles.s1)
          << " s2=" << a.format(w.roles.s2) << " n=" << w.n << " m=" << w.m << " l=" << w.l << " v=" << w.v
          << " a=" << w.a << " b=" << w.b << " alpha1=" << w.alpha1 << " alpha2=" << w.alpha2 << " j=" << w.j
          << "\n";
    emit(job, out.str());
  }
  return res.admits ? kYes : kNo;
}

int cmd_enumerate(const Job& job) {
  auto cs = load_instance(job);
  const auto& g = cs.group();
  auto res = classify(cs);
  if (!res.admits) {
    std::cerr << "no perfect code: " << to_string(res.rejection) << "\n";
    return kNo;
  }
  auto graph = build_graph(cs);
  auto codes = codes_containing_t(graph, res);
  if (job.all_translates) codes = all_perfect_codes(graph, codes);

  std::vector<std::string> status(codes.size(), "");
  bool all_ok = true;
  if (job.check) {
    auto oracle = find_all_codes(graph, {job.budget, job.threads});
    if (!job.all_translates) oracle = codes_containing(oracle, graph.vertex(g.t()));
    for (std::size_t i = 0; i < codes.size(); ++i) {
      bool ok = static_cast<bool>(is_perfect_code(graph, codes[i])) &&
                std::binary_search(oracle.begin(), oracle.end(), codes[i]);
      status[i] = ok ? "verified" : "FAILED";
      all_ok = all_ok && ok;
    }
    if (oracle != codes) {
      all_ok = false;
      std::cerr << "oracle finds " << oracle.size() << " codes, closed form gives " << codes.size() << "\n";
    }
  }

  if (job.format == "json") {
    json doc{{"codes", codes_json(g, codes)}, {"count", codes.size()}};
    if (job.check) doc["verified"] = all_ok;
    emit(job, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      out << brace(format_code(g, codes[i]));
      if (job.check) out << " " << status[i];
      out << "\n";
    }
    emit(job, out.str());
  }
  return all_ok ? kYes : kNo;
}

int cmd_search(const Job& job) {
  Graph graph;
  if (!job.graph_path.empty()) graph = import_json(std::string_view(read_file(job.graph_path)));
  else graph = build_graph(load_instance(job)).to_graph();
  auto codes = find_all_codes(graph, {job.budget, job.threads});
  auto labels = [&](const PerfectCode& c) {
    std::vector<std::string> out;
    for (auto v : c.members) out.push_back(v < graph.labels.size() ? graph.labels[v] : std::to_string(v));
    return out;
  };
  if (job.format == "json") {
    json arr = json::array();
    for (const auto& c : codes) arr.push_back(labels(c));
    emit(job, json{{"codes", arr}, {"count", codes.size()}}.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& c : codes) out << brace(labels(c)) << "\n";
    out << codes.size() << " perfect code" << (codes.size() == 1 ? "" : "s") << "\n";
    emit(job, out.str());
  }
  return codes.empty() ? kNo : kYes;
}

int cmd_verify(const Job& job) {
  auto cs = load_instance(job);
  const auto& g = cs.group();
  auto graph = build_graph(cs);
  std::vector<Vertex> members;
  for (const auto& x : g.parse_set(job.code)) members.push_back(g.index(x));
  auto verdict = is_perfect_code(graph, PerfectCode(members));
  if (job.format == "json") {
    json doc{{"perfect", static_cast<bool>(verdict)}, {"reason", to_string(verdict.kind)}};
    doc["witness"] = verdict.witness ? json(g.format(g.element(*verdict.witness))) : json(nullptr);
    emit(job, doc.dump(2) + "\n");
  } else if (verdict) {
    emit(job, "true\n");
  } else {
    std::string where = verdict.witness ? " at " + g.format(g.element(*verdict.witness)) : "";
    emit(job, std::string("false: ") + to_string(verdict.kind) + where + "\n");
  }
  return verdict ? kYes : kNo;
}

int cmd_export(const Job& job) {
  auto graph = build_graph(load_instance(job)).to_graph();
  if (job.format == "json") emit(job, export_json(graph));
  else if (job.format == "dot" || job.format == "text") emit(job, export_dot(graph));
  else throw UsageError("export supports --format dot|json");
  return kYes;
}

int cmd_survey(const Job& job, const std::vector<std::string>& group_literals, std::uint64_t max_order,
               bool oracle_check, bool raw) {
  std::vector<AbelianSpec> groups;
  if (group_literals.empty()) {
    if (max_order == 0) throw UsageError("survey needs --groups or --max-order");
    groups = abelian_groups_up_to(max_order);
  } else {
    for (const auto& lit : group_literals) {
      auto a = AbelianSpec::parse(lit);
      if (max_order == 0 || a.order() <= max_order) groups.push_back(std::move(a));
    }
  }
  SurveyOptions opts;
  opts.oracle_check = oracle_check;
  opts.raw = raw;
  opts.threads = job.threads;
  opts.oracle.budget = job.budget;
  emit(job, format_csv(run_survey(groups, opts)));
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect codes in quartic Cayley graphs on generalized dihedral groups"};
  app.require_subcommand(1);
  Job job;

  auto instance_options = [&](CLI::App* cmd) {
    cmd->add_option("--group", job.group, "abelian group, e.g. Z5 or Z10xZ2");
    cmd->add_option("--set", job.set, "connection set, e.g. \"t,(1)t,(3)t,(4)t\"");
    cmd->add_option("--job", job.job_path, "JSON job file supplying group/set/options");
    cmd->add_option("--out", job.out, "write output to this file");
  };

  auto* classify_cmd = app.add_subcommand("classify", "decide whether the graph admits a perfect code");
  instance_options(classify_cmd);
  classify_cmd->add_option("--format", job.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list perfect codes from the closed forms");
  instance_options(enumerate_cmd);
  enumerate_cmd->add_option("--format", job.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  enumerate_cmd->add_flag("--all-translates", job.all_translates, "all codes, not only those containing t");
  enumerate_cmd->add_flag("--check", job.check, "re-verify each code and compare with the exact-cover search");
  enumerate_cmd->add_option("--budget", job.budget, "search node budget for --check");
  enumerate_cmd->add_option("--threads", job.threads, "search threads");

  auto* search_cmd = app.add_subcommand("search", "all perfect codes by exact-cover search");
  instance_options(search_cmd);
  search_cmd->add_option("--graph", job.graph_path, "search a graph given in the JSON export format instead");
  search_cmd->add_option("--format", job.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  search_cmd->add_option("--budget", job.budget, "search node budget");
  search_cmd->add_option("--threads", job.threads, "search threads");

  auto* verify_cmd = app.add_subcommand("verify", "check whether a vertex set is a perfect code");
  instance_options(verify_cmd);
  verify_cmd->add_option("--code", job.code, "vertex set, e.g. \"t,(2)\"");
  verify_cmd->add_option("--format", job.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* export_cmd = app.add_subcommand("export", "write the Cayley graph as DOT or JSON");
  instance_options(export_cmd);
  export_cmd->add_option("--format", job.format, "dot|json")->check(CLI::IsMember({"dot", "json", "text"}));

  std::vector<std::string> survey_groups;
  std::uint64_t max_order = 0;
  bool oracle_check = false, raw = false;
  auto* survey_cmd = app.add_subcommand("survey", "CSV over every connection set of the given groups");
  survey_cmd->add_option("--groups", survey_groups, "abelian groups, comma separated")->delimiter(',');
  survey_cmd->add_option("--max-order", max_order, "skip groups with |A| above this; alone, survey every A up to it");
  survey_cmd->add_flag("--oracle-check", oracle_check, "compare each row with the exact-cover search");
  survey_cmd->add_flag("--raw", raw, "keep sets that differ only by the choice of t");
  survey_cmd->add_option("--threads", job.threads, "worker threads");
  survey_cmd->add_option("--budget", job.budget, "search node budget per instance");
  survey_cmd->add_option("--out", job.out, "write CSV to this file");
  survey_cmd->add_option("--format", job.format, "csv")->check(CLI::IsMember({"csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    auto code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    for (auto* cmd : app.get_subcommands()) apply_job_file(job, *cmd);
    if (*classify_cmd) return cmd_classify(job);
    if (*enumerate_cmd) return cmd_enumerate(job);
    if (*search_cmd) return cmd_search(job);
    if (*verify_cmd) return cmd_verify(job);
    if (*export_cmd) return cmd_export(job);
    if (*survey_cmd) return cmd_survey(job, survey_groups, max_order, oracle_check, raw);
  } catch (const ValidationError& e) {
    std::cerr << "invalid connection set: " << e.what() << "\n";
    return kInvalid;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
