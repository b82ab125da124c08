#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "prymlat/cli.hpp"
#include "prymlat/cover_io.hpp"
#include "prymlat/errors.hpp"

using prymlat::cli::run;

namespace {

const std::string covers_dir = PRYMLAT_COVERS_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string current;
  while (std::getline(in, current))
    if (current == line) return true;
  return false;
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("prymlat_test_" + std::to_string(++counter) + ".json"))
                .string();
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("genus command") {
  auto r = invoke({"genus", "--input", covers_dir + "/z2_6pts.json"});
  CHECK(r.code == 0);
  CHECK(contains_line(r.out, "genus 2"));
  CHECK(r.err.empty());
}

TEST_CASE("prym command reports rank and dimension") {
  auto r = invoke({"prym", "--input", covers_dir + "/z2_6pts.json"});
  CHECK(r.code == 0);
  CHECK(contains_line(r.out, "Prym rank 4, dimension 2"));
  CHECK(contains_line(r.out, "fixed rank 0"));
}

TEST_CASE("rank-bound command reproduces the closing inequality") {
  auto r = invoke(
      {"rank-bound", "--input", covers_dir + "/z3_111.json", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(contains_line(r.out, "bound >= 8"));

  auto r2 = invoke(
      {"rank-bound", "--input", covers_dir + "/z2_6pts.json", "--n", "5"});
  CHECK(r2.code == 0);
  CHECK(contains_line(r2.out, "bound >= 5"));
}

TEST_CASE("rank-bound override validation maps to exit 1") {
  auto r = invoke({"rank-bound", "--input", covers_dir + "/z3_111.json",
                   "--n", "4", "--end-rank", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("below the certified lower bound") != std::string::npos);

  auto r2 = invoke({"rank-bound", "--input", covers_dir + "/z3_111.json",
                    "--n", "4", "--end-rank", "5"});
  CHECK(r2.code == 0);
  CHECK(contains_line(r2.out, "bound >= 20"));
}

TEST_CASE("validate accepts the corpus and flags bad input") {
  auto ok = invoke({"validate", "--input", covers_dir + "/v4_abc.json"});
  CHECK(ok.code == 0);
  CHECK(contains_line(ok.out, "valid"));

  TempFile bad(R"({"group": {"invariant_factors": [3]},
                   "branch_points": [{"monodromy": [1]},
                                     {"monodromy": [1]}]})");
  auto r = invoke({"validate", "--input", bad.path()});
  CHECK(r.code == 1);
  CHECK(r.out.find("SumNotZero") != std::string::npos);
  CHECK(contains_line(r.out, "invalid"));
}

TEST_CASE("malformed documents point at the offending field") {
  TempFile missing(R"({"group": {}, "branch_points": []})");
  auto r = invoke({"genus", "--input", missing.path()});
  CHECK(r.code == 1);
  CHECK(r.err.find("group.invariant_factors") != std::string::npos);

  TempFile ragged(R"({"group": {"invariant_factors": [2, 2]},
                      "branch_points": [{"monodromy": [1]}]})");
  auto r2 = invoke({"genus", "--input", ragged.path()});
  CHECK(r2.code == 1);
  CHECK(r2.err.find("branch_points[0].monodromy") != std::string::npos);

  TempFile garbage("{not json");
  auto r3 = invoke({"genus", "--input", garbage.path()});
  CHECK(r3.code == 1);
  CHECK(r3.err.find("invalid JSON") != std::string::npos);

  auto r4 = invoke({"genus", "--input", "/nonexistent/nowhere.json"});
  CHECK(r4.code == 1);
}

TEST_CASE("missing input is an input error") {
  auto r = invoke({"genus"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--input or --dir") != std::string::npos);
  auto r2 = invoke({"bogus-command"});
  CHECK(r2.code == 1);
}

TEST_CASE("json output is machine-readable and deterministic") {
  std::vector<std::string> args = {"genus", "--input",
                                   covers_dir + "/z6_114.json", "--json"};
  auto r1 = invoke(args);
  auto r2 = invoke(args);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);

  auto doc = nlohmann::json::parse(r1.out);
  CHECK(doc["command"] == "genus");
  CHECK(doc["status"] == "ok");
  CHECK(doc["exit_code"] == 0);
  CHECK(doc["violations"].is_array());
  CHECK(doc["result"]["genus"] == 2);
  CHECK(doc["input"]["group"]["invariant_factors"][0] == 6);
}

TEST_CASE("every command round-trips through the json schema") {
  for (const std::string& command :
       {"validate", "genus", "eigenspaces", "homology", "prym", "verify"}) {
    CAPTURE(command);
    std::vector<std::string> args = {command, "--input",
                                     covers_dir + "/z3_111.json", "--json"};
    auto r = invoke(args);
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);  // throws on malformed output
    CHECK(doc["command"] == command);
    CHECK(doc["status"] == "ok");
    CHECK(doc["result"].is_object());
    auto echo = prymlat::parse_cover_document(doc["input"]);
    CHECK(echo.invariant_factors == std::vector<long long>{3});
    CHECK(echo.branch_points.size() == 3);
  }
  for (const std::string& command : {"product", "rank-bound"}) {
    CAPTURE(command);
    auto r = invoke({command, "--input", covers_dir + "/z3_111.json", "--n",
                     "2", "--json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["status"] == "ok");
  }
}

TEST_CASE("action matrices appear only under homology --json") {
  auto human = invoke({"homology", "--input", covers_dir + "/z3_111.json"});
  CHECK(human.code == 0);
  CHECK(contains_line(human.out, "H1 rank 2 (genus 1)"));
  CHECK(human.out.find("generator_action") == std::string::npos);

  auto machine =
      invoke({"homology", "--input", covers_dir + "/z3_111.json", "--json"});
  auto doc = nlohmann::json::parse(machine.out);
  auto action = doc["result"]["generator_action"];
  REQUIRE(action.is_array());
  REQUIRE(action.size() == 1);
  CHECK(action[0].size() == 2);  // 2 x 2 matrix rows
}

TEST_CASE("verify and product commands certify the corpus examples") {
  auto v = invoke({"verify", "--input", covers_dir + "/z2z4_abc.json"});
  CHECK(v.code == 0);
  CHECK(contains_line(v.out, "decomposition: PASS"));

  auto p = invoke({"product", "--input", covers_dir + "/z2_6pts.json", "--n",
                   "3"});
  CHECK(p.code == 0);
  CHECK(contains_line(p.out, "product: PASS"));
}

TEST_CASE("eigenspaces table lists every character") {
  auto r = invoke({"eigenspaces", "--input", covers_dir + "/z3_111.json"});
  CHECK(r.code == 0);
  CHECK(contains_line(r.out, "chi=(0): d=0"));
  CHECK(contains_line(r.out, "chi=(1): d=0"));
  CHECK(contains_line(r.out, "chi=(2): d=1"));
  CHECK(contains_line(r.out, "total 1 (genus 1)"));
}

TEST_CASE("quiet mode trims the output to results") {
  auto loud = invoke({"genus", "--input", covers_dir + "/z2_6pts.json"});
  auto quiet =
      invoke({"genus", "--input", covers_dir + "/z2_6pts.json", "--quiet"});
  CHECK(quiet.code == 0);
  CHECK(contains_line(quiet.out, "genus 2"));
  CHECK(quiet.out.size() < loud.out.size());
  CHECK(quiet.out.find("cover") == std::string::npos);
}

TEST_CASE("batch mode walks the directory in filename order") {
  auto r = invoke({"genus", "--dir", covers_dir, "--json"});
  CHECK(r.code == 0);
  auto docs = nlohmann::json::parse(r.out);
  REQUIRE(docs.is_array());
  CHECK(docs.size() == 31);
  std::string prev;
  for (const auto& doc : docs) {
    std::string file = doc["file"];
    CHECK(prev < file);
    prev = file;
    CHECK(doc["status"] == "ok");
  }

  auto again = invoke({"genus", "--dir", covers_dir, "--json"});
  CHECK(again.out == r.out);

  auto human = invoke({"genus", "--dir", covers_dir});
  CHECK(human.code == 0);
  CHECK(contains_line(human.out, "== z2_6pts.json =="));
}

TEST_CASE("batch mode aggregates the worst exit code") {
  auto missing = invoke({"genus", "--dir", "/nonexistent-dir"});
  CHECK(missing.code == 1);

  TempFile unused("{}");  // a directory with no json is exit 1
  auto empty_dir =
      std::filesystem::temp_directory_path() / "prymlat_empty_dir";
  std::filesystem::create_directory(empty_dir);
  auto r = invoke({"genus", "--dir", empty_dir.string()});
  CHECK(r.code == 1);
  std::filesystem::remove(empty_dir);
}

TEST_CASE("internal certificate failures map to exit 2") {
  // A cover document cannot produce a failing certificate (the theory rules
  // it out), so exit 2 is reserved for invariant violations; simulate one by
  // checking the classifier through a forged lattice in-library instead.
  // Here, only assert that a passing verify run exits 0 and labels itself.
  auto r =
      invoke({"verify", "--input", covers_dir + "/z6_114.json", "--json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["result"]["passed"] == true);
  CHECK(doc["result"]["torsion_exponent"] == 1);
}

TEST_CASE("help is available") {
  auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rank-bound") != std::string::npos);
}
