#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(LPACKET_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify by partition") {
  RunResult r = run_cli("classify --partition 1+1+3 --form sp11");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "D8"));
  CHECK(contains(r.output, "size 1"));

  RunResult sp4 = run_cli("classify --partition 1+1+1+2 --form sp4");
  CHECK(sp4.exit_code == 0);
  CHECK(contains(sp4.output, "Pauli16"));
  CHECK(contains(sp4.output, "size 8"));
}

TEST_CASE("classify by case id") {
  RunResult r = run_cli("classify --case III-a --form sp11");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "C2"));
  CHECK(contains(r.output, "size 1"));

  RunResult ii = run_cli("classify --case II --no-dihedral --form sp11");
  CHECK(ii.exit_code == 0);
  CHECK(contains(ii.output, "size 1"));
}

TEST_CASE("classify usage errors exit 2") {
  CHECK(run_cli("classify --form sp11").exit_code == 2);
  CHECK(run_cli("classify --case I-a --form sp11").exit_code == 2);
  CHECK(run_cli("classify --case III-a --partition 1+4 --form sp11")
            .exit_code == 2);
  CHECK(run_cli("classify --case II --partition 5 --form sp11").exit_code ==
        2);
  CHECK(run_cli("classify --partition nonsense --form sp11").exit_code == 2);
  CHECK(run_cli("classify --partition 1+1+2 --form sp11").exit_code == 2);
  CHECK(run_cli("classify --partition 1+1+3 --form sp5").exit_code == 2);
  CHECK(run_cli("classify --case IV --form sp11").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("text and json renderings agree on field values") {
  RunResult text = run_cli("classify --partition 1+1+1+1+1 --form sp11");
  RunResult json = run_cli(
      "classify --partition 1+1+1+1+1 --form sp11 --format json");
  CHECK(text.exit_code == 0);
  CHECK(json.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(json.output);
  CHECK(j["schema"] == 1);
  CHECK(j["case"] == "I-b");
  CHECK(j["partition"] == "1+1+1+1+1");
  CHECK(j["groups"]["s_phi_sc"] == "D8castQ8");
  CHECK(j["packet_size"] == 1);
  CHECK(j["dim_rho"] == 4);
  CHECK(j["mult_per_lift"] == 2);
  CHECK(j["mult_packet_total"] == 4);
  CHECK(j["i_tilde"] == 8);
  CHECK(contains(text.output, "D8castQ8"));
  CHECK(contains(text.output, "size 1"));
  CHECK(contains(text.output, "per-lift 2"));
  CHECK(contains(text.output, "packet-total 4"));
  CHECK(contains(text.output, "i_tilde 8"));
  for (auto& [name, value] : j["checks"].items()) {
    CHECK(value == "pass");
  }
}

TEST_CASE("classify-all is byte-stable across runs and jobs") {
  RunResult a = run_cli("classify-all --jobs 1");
  RunResult b = run_cli("classify-all --jobs 1");
  RunResult c = run_cli("classify-all --jobs 4");
  RunResult d = run_cli("classify-all --jobs 4 --format json");
  RunResult e = run_cli("classify-all --jobs 1 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output == c.output);
  CHECK(d.exit_code == 0);
  CHECK(d.output == e.output);
  nlohmann::json j = nlohmann::json::parse(d.output);
  CHECK(j["reports"].size() == 42);
}

TEST_CASE("chartab command") {
  RunResult d8 = run_cli("chartab --group D8");
  CHECK(d8.exit_code == 0);
  CHECK(contains(d8.output, "5 classes"));

  RunResult big = run_cli("chartab --partition 1+1+1+1+1");
  CHECK(big.exit_code == 0);
  CHECK(contains(big.output, "17 classes"));

  RunResult c2 = run_cli("chartab --group C2 --format json");
  CHECK(c2.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(c2.output);
  CHECK(j["rows"].size() == 2);
  CHECK(j["classes"].size() == 2);

  CHECK(run_cli("chartab --group NotAGroup").exit_code == 2);
  CHECK(run_cli("chartab --group C8").exit_code == 2);  // exponent above 4
  CHECK(run_cli("chartab").exit_code == 2);
}

TEST_CASE("verify against the shipped fixture") {
  RunResult r = run_cli(std::string("verify --fixtures ") +
                        LPACKET_FIXTURES_PATH + " --jobs 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "42/42 fixture rows match"));
}

TEST_CASE("verify flags an injected fault on exactly one row") {
  // Perturb one census count in a copy of the shipped fixture.
  std::ifstream in(LPACKET_FIXTURES_PATH);
  nlohmann::json fixture;
  in >> fixture;
  bool perturbed = false;
  for (auto& row : fixture["rows"]) {
    if (row["case"] == "I-b" && row["partition"] == "1+1+3" &&
        row["form"] == "sp11") {
      row["expect"]["census"]["4"] = 3;
      perturbed = true;
    }
  }
  REQUIRE(perturbed);
  std::string path = "/tmp/lpacket_fixture_perturbed.json";
  std::ofstream out(path);
  out << fixture.dump(1);
  out.close();

  RunResult r = run_cli("verify --fixtures " + path);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "41/42 fixture rows match"));
  CHECK(contains(r.output, "FAIL I-b 1+1+3 sp11"));
  // Only that row fails.
  std::size_t fails = 0;
  for (std::size_t pos = 0; (pos = r.output.find("FAIL", pos)) != std::string::npos;
       ++pos) {
    ++fails;
  }
  CHECK(fails == 1);
}

TEST_CASE("verify accepts a bare row array") {
  std::ifstream in(LPACKET_FIXTURES_PATH);
  nlohmann::json fixture;
  in >> fixture;
  std::string path = "/tmp/lpacket_fixture_array.json";
  {
    std::ofstream out(path);
    out << fixture["rows"].dump();
  }
  RunResult r = run_cli("verify --fixtures " + path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "42/42 fixture rows match"));
}

TEST_CASE("verify of an empty fixture warns and passes") {
  std::string path = "/tmp/lpacket_fixture_empty.json";
  {
    std::ofstream out(path);
    out << "{\"schema\": 1, \"rows\": []}";
  }
  RunResult r = run_cli("verify --fixtures " + path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "warning"));
}

TEST_CASE("verify of malformed input exits 2") {
  std::string path = "/tmp/lpacket_fixture_broken.json";
  {
    std::ofstream out(path);
    out << "{\"rows\": [{\"case\": \"I-a\"}]}";
  }
  CHECK(run_cli("verify --fixtures " + path).exit_code == 2);
  CHECK(run_cli("verify --fixtures /nonexistent/path.json").exit_code == 2);
}
