#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "cli_util.hpp"

using cliutil::run_cli;
using cliutil::RunResult;
using json = nlohmann::json;

namespace {

std::vector<json> json_lines(const std::string &text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty())
      out.push_back(json::parse(line));
  return out;
}

} // namespace

TEST_CASE("table text output") {
  RunResult r = run_cli("table C2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order 2") != std::string::npos);
  CHECK(r.out.find("irreducibles:") != std::string::npos);

  RunResult s3 = run_cli("table S3");
  CHECK(s3.exit_code == 0);
  CHECK(s3.out.find("order 6  classes 3  exponent 6") != std::string::npos);
  CHECK(s3.out.find("degree 2  cod 3") != std::string::npos);

  RunResult p = run_cli("table 'perm:3:[(1 2)]'");
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("order 2") != std::string::npos);
}

TEST_CASE("table json output agrees with the text output") {
  RunResult text = run_cli("table S3");
  RunResult r = run_cli("table S3 --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("group") == "S3");
  CHECK(j.at("order") == 6);
  CHECK(j.at("exponent") == 6);
  REQUIRE(j.at("classes").size() == 3);
  REQUIRE(j.at("irreducibles").size() == 3);
  std::vector<int> degrees, cods;
  for (const json &row : j.at("irreducibles")) {
    degrees.push_back(row.at("degree").get<int>());
    cods.push_back(row.at("codegree").get<int>());
  }
  CHECK(degrees == std::vector<int>{1, 1, 2});
  CHECK(cods == std::vector<int>{1, 2, 3});
  // every numeric row fact in the JSON shows up in the text rendering
  for (const json &row : j.at("irreducibles")) {
    std::ostringstream line;
    line << "degree " << row.at("degree").get<int>() << "  cod "
         << row.at("codegree").get<int>() << "  det " << row.at("det_order").get<int>()
         << "  ker " << row.at("kernel_order").get<int>();
    CHECK(text.out.find(line.str()) != std::string::npos);
  }
  // exact values: the degree-2 row is (2, -1, 0) on classes (1, 3-cycles, 2-cycles)
  const json &std_row = j.at("irreducibles").at(2);
  CHECK(std_row.at("values").at(0).at("mult") == json::array({2}));
}

TEST_CASE("codegrees over the derived subgroup") {
  RunResult r = run_cli("codegrees S3 --over-derived");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("N order 3") != std::string::npos);
  CHECK(r.out.find("selector 3:0") != std::string::npos);
  CHECK(r.out.find("cod(G|N) = {3}") != std::string::npos);

  RunResult by_sel = run_cli("codegrees S3 --normal 3:0");
  CHECK(by_sel.exit_code == 0);
  CHECK(by_sel.out == r.out);

  RunResult js = run_cli("codegrees S3 --over-derived --json");
  REQUIRE(js.exit_code == 0);
  json j = json::parse(js.out);
  CHECK(j.at("n_order") == 3);
  CHECK(j.at("n_selector") == "3:0");
  CHECK(j.at("n_classes") == json::array({0, 2}));
  CHECK(j.at("cod") == json::array({3}));
  REQUIRE(j.at("rows").size() == 1);
  CHECK(j.at("rows").at(0).at("degree") == 2);
}

TEST_CASE("codegrees selector errors") {
  RunResult missing = run_cli("codegrees S3");
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.find("--over-derived or --normal") != std::string::npos);

  RunResult none = run_cli("codegrees S3 --normal 5:0");
  CHECK(none.exit_code == 2);
  CHECK(none.err.find("available:") != std::string::npos);
  CHECK(none.err.find("1:0") != std::string::npos);
  CHECK(none.err.find("3:0") != std::string::npos);
  CHECK(none.err.find("6:0") != std::string::npos);

  RunResult malformed = run_cli("codegrees S3 --normal nope");
  CHECK(malformed.exit_code == 2);

  RunResult both = run_cli("codegrees S3 --over-derived --normal 3:0");
  CHECK(both.exit_code == 2);

  RunResult trivial = run_cli("codegrees S3 --normal 1:0");
  CHECK(trivial.exit_code == 0);
  CHECK(trivial.out.find("N is trivial") != std::string::npos);

  RunResult q8 = run_cli("codegrees Q8 --normal 4:1");
  CHECK(q8.exit_code == 0);
  CHECK(q8.out.find("N order 4") != std::string::npos);
}

TEST_CASE("verify on a small corpus file") {
  std::string corpus = cliutil::temp_path("corpus.txt");
  cliutil::spit(corpus, "S3\nQ8\n");

  RunResult r = run_cli("verify --corpus " + corpus);
  CHECK(r.exit_code == 0);
  auto lines = json_lines(r.out);
  CHECK(!lines.empty());
  for (const json &line : lines) {
    CHECK(line.at("record") == "report");
    CHECK(line.contains("verdict"));
    CHECK_FALSE(line.contains("timing_ms"));
  }
  // summary goes to stderr, not stdout
  json summary = json::parse(r.err);
  CHECK(summary.at("triples") == 12);
  CHECK(summary.at("counterexamples") == 0);
  CHECK(summary.at("confirmed").get<int>() > 0);

  RunResult again = run_cli("verify --corpus " + corpus);
  CHECK(again.out == r.out);

  RunResult filtered = run_cli("verify --corpus " + corpus + " --theorem A");
  CHECK(filtered.exit_code == 0);
  auto filtered_lines = json_lines(filtered.out);
  CHECK(filtered_lines.size() == 12);
  for (const json &line : filtered_lines)
    CHECK(line.at("theorem") == "A");

  RunResult timed = run_cli("verify --corpus " + corpus + " --timings");
  for (const json &line : json_lines(timed.out))
    CHECK(line.contains("timing_ms"));

  RunResult traced = run_cli("verify --corpus " + corpus + " --trace");
  bool saw_trace = false;
  for (const json &line : json_lines(traced.out))
    if (line.at("record") == "trace") {
      saw_trace = true;
      CHECK(line.at("steps").size() == 8);
    }
  CHECK(saw_trace);

  std::remove(corpus.c_str());
}

TEST_CASE("verify on an empty corpus") {
  std::string corpus = cliutil::temp_path("empty.txt");
  cliutil::spit(corpus, "# nothing here\n");
  RunResult r = run_cli("verify --corpus " + corpus);
  std::remove(corpus.c_str());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  json summary = json::parse(r.err);
  CHECK(summary.at("triples") == 0);
}

TEST_CASE("input errors exit 2") {
  RunResult bad_group = run_cli("table D7");
  CHECK(bad_group.exit_code == 2);
  CHECK(bad_group.err.find("error:") != std::string::npos);

  RunResult bad_corpus = run_cli("verify --corpus /no/such/file.txt");
  CHECK(bad_corpus.exit_code == 2);

  RunResult bad_flag = run_cli("table S3 --frobenius");
  CHECK(bad_flag.exit_code == 2);

  RunResult no_sub = run_cli("");
  CHECK(no_sub.exit_code == 2);

  RunResult bad_theorem = run_cli("verify --theorem fermat");
  CHECK(bad_theorem.exit_code == 2);
}

TEST_CASE("resource caps exit 3") {
  RunResult flagged = run_cli("table S6 --max-order 100");
  CHECK(flagged.exit_code == 3);
  CHECK(flagged.err.find("resource limit:") != std::string::npos);

  RunResult via_env = run_cli("table S6", "CTLAB_MAX_ORDER=100 ");
  CHECK(via_env.exit_code == 3);

  RunResult degree_cap = run_cli("table S6 --max-degree 4");
  CHECK(degree_cap.exit_code == 3);

  RunResult fits = run_cli("table S4 --max-order 100");
  CHECK(fits.exit_code == 0);
}
