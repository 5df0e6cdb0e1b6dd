#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "golden_util.hpp"
#include "morsecob/cli.hpp"
#include "morsecob/handles.hpp"

using namespace morsecob;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "morsecob");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("decide: exit codes and messages") {
  const auto no = run({"decide", "O1", "RP2+RP2"});
  CHECK(no.code == cli::kExitNo);
  CHECK(no.out.find("condition (2) fails: P_o(F_b) = 2 > P(F_a) = 0") != std::string::npos);

  const auto yes = run({"decide", "N2", "RP2+RP2"});
  CHECK(yes.code == cli::kExitYes);
  CHECK(yes.out.find("class: B") != std::string::npos);

  const auto odd = run({"decide", "RP2", "RP2+RP2"});
  CHECK(odd.code == cli::kExitNo);
  CHECK(odd.out.find("condition (1) fails") != std::string::npos);

  const auto bad = run({"decide", "N0", "S2"});
  CHECK(bad.code == cli::kExitInputError);
  CHECK(bad.err.find("at byte 0") != std::string::npos);

  CHECK(run({"decide", "S2"}).code == cli::kExitInputError);
  CHECK(run({}).code == cli::kExitInputError);
  CHECK(run({"frobnicate"}).code == cli::kExitInputError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("decide --json golden") {
  const auto no = run({"decide", "O1", "RP2+RP2", "--json"});
  CHECK(no.code == cli::kExitNo);
  CHECK(no.out == testing::read_golden("decide_torus_two_rp2.json"));

  const auto yes = run({"decide", "K2", "RP2 + RP2", "--json"});
  CHECK(yes.code == cli::kExitYes);
  CHECK(yes.out == testing::read_golden("decide_klein_two_rp2.json"));
  const auto doc = nlohmann::json::parse(yes.out);
  CHECK(doc["abc"] == "B");
  CHECK(doc["cond1"] == true);
}

TEST_CASE("witness") {
  const auto sphere = run({"witness", "S2", "S2"});
  CHECK(sphere.code == cli::kExitYes);
  CHECK(sphere.out == "2H split #0 -> O0 + O0\n1H join #0 #1\n");

  // The printed text replays to a valid witness.
  const auto moves = parse_moves(sphere.out);
  CHECK(validate(make_witness(Surface({SurfaceComponent::sphere()}), moves)));

  const auto rejected = run({"witness", "T2", "RP2+RP2"});
  CHECK(rejected.code == cli::kExitNo);
  CHECK(rejected.out.find("condition (2)") != std::string::npos);

  const auto exhausted = run({"witness", "S2", "S2", "--max-moves", "1"});
  CHECK(exhausted.code == cli::kExitBudgetExhausted);
  CHECK(exhausted.out == "no witness within budget of 1 moves\n");

  const auto json = run({"witness", "K2 + K2", "RP2 + RP2", "--json"});
  CHECK(json.code == cli::kExitYes);
  CHECK(json.out == testing::read_golden("witness_two_klein_two_rp2.json"));

  CHECK(run({"witness", "S2", "S2", "--max-moves", "0"}).code == cli::kExitInputError);
}

TEST_CASE("invariants") {
  const auto r = run({"invariants", "N2 + N3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "surface: N2 + N3\n"
        "P = 5\n"
        "P_o = 1\n"
        "chi = -1\n"
        "components:\n"
        "  #0 N2: P = 2, P' = 2, r = -2, r' = 2, chi = 0\n"
        "  #1 N3: P = 3, P' = 2, r = -3, r' = 2, chi = -1\n");
}

TEST_CASE("reeb to stdout and file") {
  const auto r = run({"reeb", "S2", "S2"});
  CHECK(r.code == 0);
  CHECK(r.out == testing::read_golden("reeb_sphere.dot"));

  const auto path = std::filesystem::temp_directory_path() / "morsecob_reeb_test.dot";
  const auto f = run({"reeb", "K2", "RP2+RP2", "--out", path.string()});
  CHECK(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == testing::read_golden("reeb_klein_two_rp2.dot"));
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--max-components", "1", "--max-p", "2", "--max-genus", "1",
                      "--threads", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("checked pairs: 16") != std::string::npos);
  CHECK(r.out.find("result: no mismatches") != std::string::npos);

  const auto j = run({"verify", "--max-components", "1", "--max-p", "0", "--max-genus", "0",
                      "--json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["checked_pairs"] == 1);
  CHECK(doc["mismatches"] == 0);
  CHECK(doc["pairs"][0]["fa"] == "O0");
  CHECK(doc["pairs"][0]["status"] == "found");
  CHECK(doc["pairs"][0]["witness_length"] == 2);
}
