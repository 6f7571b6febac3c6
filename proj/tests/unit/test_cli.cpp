#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dpcolor/bounds.hpp"
#include "dpcolor/cli.hpp"
#include "dpcolor/report_json.hpp"

using namespace dpcolor;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  std::vector<Json> records() const {
    std::vector<Json> r;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) r.push_back(Json::parse(line));
    }
    return r;
  }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("count prints one JSON record") {
  const Run r = run({"count", "--g6", "Cl", "--k", "3", "--mode", "dp"});
  CHECK(r.code == cli::kOk);
  const auto recs = r.records();
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["command"] == "count");
  CHECK(recs[0]["value"] == 15);  // (k-1)^4 - 1 for the even cycle
  CHECK(recs[0]["partial"] == false);
  CHECK(recs[0]["witness"]["arcs"].size() == 4);

  const Run classical = run({"count", "--g6", "Cl", "--k", "3", "--mode", "classical"});
  CHECK(classical.records()[0]["value"] == 18);
  const Run fixed = run({"count", "--edges", "0-1,1-2,0-2", "--k", "3", "--labeling", "0 1 : 120"});
  CHECK(fixed.code == cli::kOk);
  CHECK(fixed.records()[0]["value"] == 9);
}

TEST_CASE("bound examples and exit codes") {
  const Run r = run({"bound", "--theorem", "main-ii", "--n", "5", "--m", "6", "--k", "3"});
  CHECK(r.code == cli::kOk);
  const auto rec = r.records().at(0);
  CHECK(rec["floor"] == 9);
  CHECK(rec["exponent"]["num"] == 2);
  CHECK(rec["exponent"]["den"] == 1);
  CHECK(rec["applicable"] == true);

  const Run over = run({"bound", "--theorem", "main-ii", "--n", "5", "--m", "12", "--k", "3"});
  CHECK(over.code == cli::kAssertionFailed);
  CHECK(over.records().at(0)["applicable"] == false);

  // K4 is not DP-3-colorable; the brute-force check marks the hypothesis violated.
  const Run k4 = run({"bound", "--theorem", "main-ii", "--g6", "C~", "--k", "3"});
  CHECK(k4.code == cli::kAssertionFailed);
  CHECK(k4.records().at(0)["hypotheses"][0]["status"] == "violated");
  const Run c4 = run({"bound", "--theorem", "main-ii", "--g6", "Cl", "--k", "3"});
  CHECK(c4.code == cli::kOk);
  CHECK(c4.records().at(0)["hypotheses"][0]["status"] == "verified");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"count", "--k", "3"}).code == cli::kUsage);
  CHECK(run({"count", "--g6", "Cl", "--k", "6", "--mode", "linear"}).code == cli::kUsage);
  CHECK(run({"count", "--g6", "Cl", "--k", "3", "--mode", "bogus"}).code == cli::kUsage);
  CHECK(run({"bound", "--n", "5", "--m", "6", "--k", "3"}).code == cli::kUsage);
  CHECK(run({"nosuch"}).code == cli::kUsage);
  CHECK(run({"count", "--g6", "Cl?", "--k", "3"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("budgets exit with 3") {
  const Run r = run({"count", "--g6", "Cl", "--k", "3", "--budget", "5"});
  CHECK(r.code == cli::kBudgetExceeded);
  CHECK(r.records().at(0)["partial"] == true);
  const Run cover = run({"cover", "--g6", "Cl", "--k", "3", "--budget", "10"});
  CHECK(cover.code == cli::kBudgetExceeded);
}

TEST_CASE("search-degree") {
  const Run r = run({"search-degree", "--k", "5", "--anchored"});
  CHECK(r.code == cli::kOk);
  const auto recs = r.records();
  REQUIRE(!recs.empty());
  CHECK(recs.back()["max_degree"] == 3);
  for (std::size_t i = 0; i + 1 < recs.size(); ++i) CHECK(recs[i]["witness_valid"] == true);

  const Run swap = run({"search-degree", "--k", "7", "--swap-family"});
  CHECK(swap.records().at(0)["degree"] == 5);
  const Run perm = run({"search-degree", "--k", "5", "--perm", "10234", "--anchor", "0,0"});
  CHECK(perm.records().at(0)["degree"] == 3);
  const Run identity = run({"search-degree", "--k", "5", "--perm", "01234"});
  CHECK(identity.records().at(0)["degree"] == 1);
  CHECK(run({"search-degree", "--k", "5", "--perm", "10234", "--anchor", "0,1"}).code == cli::kUsage);
}

TEST_CASE("cover reports degrees and nonzero counts") {
  const Run r = run({"cover", "--g6", "Cl", "--k", "3", "--labeling", "0 1 : 012; 1 2 : 012; 2 3 : 012; 0 3 : 102",
                     "--anchored", "--coloring", "0,1,0,2"});
  CHECK(r.code == cli::kOk);
  const auto rec = r.records().at(0);
  CHECK(rec["degree"] == rec["expected_degree"]);
  CHECK(rec["nonzero_at_coloring"] == true);
  CHECK(rec["nonzeros"].get<int>() <= rec["proper_colorings"].get<int>());
  CHECK(rec["nonzeros"].get<int>() >= rec["alon_furedi_exact"].get<int>());
  CHECK(run({"cover", "--g6", "Cl", "--k", "3", "--anchored"}).code == cli::kUsage);
}

TEST_CASE("family listing and tables") {
  const Run list = run({"family"});
  CHECK(list.records().size() == family_catalog().size());
  const Run table = run({"family", "--family", "girth5-genus", "--n", "60", "--n-max", "120", "--n-step", "30", "--k", "3"});
  CHECK(table.code == cli::kOk);
  const auto recs = table.records();
  REQUIRE(recs.size() == 3);
  CHECK(recs[2]["exponent"]["num"] == 20);
  CHECK(recs[2]["corollary"] == "3^{n/6} (planar case g = 0)");
  const Run tf = run({"family", "--family", "triangle-free-planar-dp", "--n", "10", "--c", "1/2"});
  CHECK(tf.records().at(0)["exponent"]["num"] == 19);
  CHECK(tf.records().at(0)["exponent"]["den"] == 3);
}

TEST_CASE("output formats") {
  const Run csv = run({"--format", "csv", "bound", "--theorem", "linear", "--n", "4", "--m", "3", "--k", "4"});
  std::istringstream in(csv.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header.rfind("command,", 0) == 0);
  CHECK(header.find("exponent.num") != std::string::npos);
  CHECK(row.rfind("bound,", 0) == 0);
  const Run table = run({"--format", "table", "bound", "--theorem", "linear", "--n", "4", "--m", "3", "--k", "4"});
  CHECK(table.out.find("floor") != std::string::npos);
  CHECK(table.out.find("64") != std::string::npos);
}

TEST_CASE("verify is deterministic across job counts") {
  const Run one = run({"verify", "--what", "conjecture", "--k", "3", "--n-max", "4", "--jobs", "1"});
  const Run four = run({"verify", "--what", "conjecture", "--k", "3", "--n-max", "4", "--jobs", "4"});
  CHECK(one.code == cli::kOk);
  CHECK(one.out == four.out);
  const auto recs = one.records();
  CHECK(recs.back()["failures"].empty());
  CHECK(recs.back()["ok"] == true);

  const Run sound = run({"verify", "--what", "soundness", "--theorem", "main-ii", "--k", "3", "--n-max", "4"});
  CHECK(sound.code == cli::kOk);
  const Run degrees = run({"verify", "--what", "degrees", "--max-prime", "5"});
  CHECK(degrees.code == cli::kOk);

  const auto path = std::filesystem::temp_directory_path() / "dpcolor_verify_test.jsonl";
  const Run file = run({"verify", "--what", "conjecture", "--k", "3", "--n-max", "3", "--output", path.string()});
  CHECK(file.code == cli::kOk);
  std::ifstream saved(path);
  std::string first;
  std::getline(saved, first);
  CHECK(Json::parse(first)["status"] == "equal");
  std::filesystem::remove(path);
}

TEST_CASE("count is identical across job counts") {
  const Run a = run({"count", "--g6", "C~", "--k", "4", "--jobs", "1"});
  const Run b = run({"count", "--g6", "C~", "--k", "4", "--jobs", "3"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
}
