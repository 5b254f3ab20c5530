#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(CMA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buf;
  while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const json& j) {
  std::string path = std::string("cli_") + name + ".json";
  std::ofstream out(path);
  out << j.dump();
  return path;
}

json matrix_doc(const json& field, const std::vector<std::vector<long long>>& m) {
  return {{"field", field}, {"matrix", m}};
}

// J_3(0) + J_1(0) + J_1(1) and J_3(1) + J_2(1)
const std::vector<std::vector<long long>> kC = {{0, 1, 0, 0, 0},
                                                {0, 0, 1, 0, 0},
                                                {0, 0, 0, 0, 0},
                                                {0, 0, 0, 0, 0},
                                                {0, 0, 0, 0, 1}};
const std::vector<std::vector<long long>> kD = {{1, 1, 0, 0, 0},
                                                {0, 1, 1, 0, 0},
                                                {0, 0, 1, 0, 0},
                                                {0, 0, 0, 1, 1},
                                                {0, 0, 0, 0, 1}};

} // namespace

TEST_CASE("eldiv command") {
  std::string path = write_temp("c", matrix_doc({{"type", "Q"}}, kC));
  auto r = run_cli("eldiv --in " + path);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[1]["irr"] == "x");
  CHECK(j[1]["exps"] == json({3, 1}));
}

TEST_CASE("sequiv exit codes and verdicts") {
  std::string a = write_temp("a", matrix_doc({{"type", "Q"}}, kC));
  std::string b = write_temp("b", matrix_doc({{"type", "Q"}}, kD));
  auto r = run_cli("sequiv --a " + a + " --b " + b);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["equivalent"].get<bool>());
  CHECK(j["certificate"][0]["mode"] == "JTransform");

  auto rs = run_cli("sequiv --a " + a + " --b " + b + " --strict");
  CHECK(rs.exit_code == 1);
  CHECK(!json::parse(rs.out)["equivalent"].get<bool>());

  auto re = run_cli("sequiv --a " + a + " --b missing.json");
  CHECK(re.exit_code == 2);
  CHECK(json::parse(re.out).contains("error"));
}

TEST_CASE("sequiv batch keeps input order") {
  std::string a = write_temp("ba", matrix_doc({{"type", "Q"}}, kC));
  json pairs = json::array();
  pairs.push_back({{"a", matrix_doc({{"type", "Q"}}, kC)}, {"b", matrix_doc({{"type", "Q"}}, kD)}});
  pairs.push_back({{"a", matrix_doc({{"type", "Q"}}, kC)},
                   {"b", matrix_doc({{"type", "Q"}}, {{0, 0}, {0, 0}})}});
  std::ofstream("cli_pairs.json") << pairs.dump();
  auto r = run_cli("sequiv --pairs cli_pairs.json");
  CHECK(r.exit_code == 0);
  json out = json::parse(r.out);
  REQUIRE(out.size() == 2);
  CHECK(out[0]["equivalent"].get<bool>());
  CHECK(!out[1]["equivalent"].get<bool>());
}

TEST_CASE("report with oracle over a prime field") {
  std::string path = write_temp("r", matrix_doc({{"type", "Fp"}, {"p", 5}}, kC));
  auto r = run_cli("report --in " + path + " --oracle");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["total_dim"] == 7);
  CHECK(j["oracle_match"].get<bool>());
  CHECK(j["num_nonproj_simples"] == 2);
}

TEST_CASE("perm pipeline matches the worked example") {
  auto r = run_cli("perm --pair --p 3 --a 6,2 --b 6,1");
  CHECK(r.exit_code == 1);
  auto rs = run_cli("perm --pair --p 3 --a 6,2 --b 6,1 --singular");
  CHECK(rs.exit_code == 0);
  json j = json::parse(rs.out);
  CHECK(j["equivalent"].get<bool>());
  CHECK(j["a"]["singular_part_type"] == json({6, 1, 1}));

  std::string path = write_temp("p", json{{"cycles", {{1, 2, 3}, {4, 5}}}, {"n", 6}});
  auto rp = run_cli("perm --in " + path + " --p 3");
  CHECK(rp.exit_code == 0);
  CHECK(json::parse(rp.out)["cycle_type"] == json({3, 2, 1}));
}

TEST_CASE("homdim on a block descriptor and on a matrix") {
  auto r = run_cli("homdim --block 2,1,3,1:2");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["gl_dim"]["kind"] == "Finite");
  CHECK(j["gl_dim"]["value"] == 2);
  CHECK(j["dom_dim"]["value"] == 2);

  std::string path = write_temp("h", matrix_doc({{"type", "Fp"}, {"p", 5}}, kC));
  auto rm = run_cli("homdim --in " + path);
  CHECK(rm.exit_code == 0);
  json jm = json::parse(rm.out);
  CHECK(jm["blocks"].size() == 2);
}

TEST_CASE("oracle command reports zero failures") {
  auto r = run_cli("oracle --trials 25 --seed 7");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["fail"] == 0);
  CHECK(j["pass"].get<int>() > 0);
}

TEST_CASE("identical inputs and seeds give identical output") {
  std::string a = write_temp("da", matrix_doc({{"type", "Fp"}, {"p", 3}}, kC));
  auto r1 = run_cli("eldiv --in " + a + " --seed 11");
  auto r2 = run_cli("eldiv --in " + a + " --seed 11");
  CHECK(r1.out == r2.out);
}
