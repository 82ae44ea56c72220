// Drives the built `jacquat` binary end to end. The binary path arrives in
// the JACQUAT_CLI_BIN environment variable (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

std::string cli_path() {
  const char* env = std::getenv("JACQUAT_CLI_BIN");
  REQUIRE_MESSAGE(env != nullptr, "JACQUAT_CLI_BIN must point at the jacquat binary");
  return env;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string command = env_prefix + cli_path() + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("seq: closed-form values") {
  auto r = run("seq J3 0..7 --mode closed");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0 1 1 2 5 9 18 37\n");
  r = run("seq V3 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "-3\n");
  r = run("seq J3 -2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/2\n");
}

TEST_CASE("seq: modes agree and validate") {
  const auto closed = run("seq JL3 0..40 --mode closed");
  const auto recur = run("seq JL3 0..40 --mode recurrence");
  const auto binet = run("seq JL3 0..40 --mode binet");
  CHECK(closed.exit_code == 0);
  CHECK(closed.output == recur.output);
  CHECK(closed.output == binet.output);
  CHECK(run("seq BAD 3").exit_code == 2);
  CHECK(run("seq J3 xyz").exit_code == 2);
  CHECK(run("seq J3 5..1").exit_code == 2);
  CHECK(run("seq J3 -1 --mode recurrence").exit_code == 2);
  CHECK(run("seq U3 0 --mode binet").exit_code == 2);
}

TEST_CASE("seq: json and csv formats") {
  const auto json = run("seq J3 0..2 --format json");
  CHECK(json.exit_code == 0);
  const auto parsed = nlohmann::json::parse(json.output);
  CHECK(parsed["kind"] == "J3");
  CHECK(parsed["values"][2]["value"] == "1");
  const auto csv = run("seq J3 0..2 --format csv");
  CHECK(csv.output == "n,value\n0,0\n1,1\n2,1\n");
}

TEST_CASE("quat: components and norms") {
  auto r = run("quat JQ 0 --preset real --norm");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("(0, 1, 1, 2)") != std::string::npos);
  CHECK(r.output.find("N = 6") != std::string::npos);
  CHECK(r.output.find("Nr = 6") != std::string::npos);

  r = run("quat VQ 1 --preset split");
  CHECK(r.output.find("(-3, 1, 2, -3)") != std::string::npos);

  r = run("quat JQ 0 --preset quarter --norm");
  CHECK(r.output.find("N = 0") != std::string::npos);
  CHECK(r.output.find("Nr = 0") != std::string::npos);

  r = run("quat jQ 2 --alpha 2/3 --beta -1 --format json");
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.output);
  CHECK(parsed["alpha"] == "2/3");
  CHECK(parsed["components"][0] == "5");

  r = run("quat JQ -1 --preset real");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("negative-index extension") != std::string::npos);

  // UQ_0 reaches back to jQ_{-1}
  r = run("quat UQ 0 --preset real");
  CHECK(r.output.find("(0, 1, -1, 0)") != std::string::npos);
  CHECK(r.output.find("negative-index extension") != std::string::npos);

  CHECK(run("quat JQ 0").exit_code == 2);
  CHECK(run("quat JQ 0 --preset octonion").exit_code == 2);
  CHECK(run("quat JQ 0 --preset real --alpha 1 --beta 1").exit_code == 2);
  CHECK(run("quat XQ 0 --preset real").exit_code == 2);
}

TEST_CASE("verify: default run classifies the documented errata and exits 0") {
  const auto out = temp_file("jacquat_cli_verify.json");
  const auto r = run("verify --n-max 6 --m-max 3 --random-params 2 --format json --out " +
                     out.string());
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(slurp(out));
  bool printed_failed = false, corrected_passed = false;
  for (const auto& o : parsed["outcomes"]) {
    if (o["id"] == "eq3.as_printed" && o["alpha"] == "1" && o["beta"] == "1") {
      printed_failed = o["status"] == "fail" && o["erratum_candidate"] == true;
      CHECK(o["counterexample"]["lhs"] == "(-144, 6, 14, 28)");
      CHECK(o["counterexample"]["rhs"] == "(-992/7, 6, 14, 28)");
    }
    if (o["id"] == "eq3.corrected" && o["alpha"] == "1" && o["beta"] == "1")
      corrected_passed = o["status"] == "pass";
  }
  CHECK(printed_failed);
  CHECK(corrected_passed);
  std::filesystem::remove(out);
}

TEST_CASE("verify: usage errors exit 2 and write nothing") {
  const auto out = temp_file("jacquat_cli_verify_bad.json");
  std::filesystem::remove(out);
  CHECK(run("verify --n-max 0 --m-max -1 --out " + out.string()).exit_code == 2);
  CHECK_FALSE(std::filesystem::exists(out));
  CHECK(run("verify --preset octonion").exit_code == 2);
  CHECK(run("verify --format yaml").exit_code == 2);
  CHECK(run("verify --errata /no/such/file").exit_code == 2);
}

TEST_CASE("verify: undocumented failures exit 1") {
  // With an empty errata list the known printed-text failures count as
  // unexpected.
  const auto empty = temp_file("jacquat_cli_empty_errata.txt");
  std::ofstream(empty).close();
  const auto r = run("verify --n-max 2 --m-max 1 --random-params 0 --errata " +
                     empty.string());
  CHECK(r.exit_code == 1);
  std::filesystem::remove(empty);
}

TEST_CASE("verify: byte-identical reports across parallelism") {
  const auto out1 = temp_file("jacquat_cli_t1.json");
  const auto out4 = temp_file("jacquat_cli_t4.json");
  const std::string args = "verify --n-max 6 --m-max 3 --random-params 2 --format json";
  CHECK(run(args + " --out " + out1.string(), "JACQUAT_THREADS=1 ").exit_code == 0);
  CHECK(run(args + " --out " + out4.string(), "JACQUAT_THREADS=4 ").exit_code == 0);
  const std::string a = slurp(out1), b = slurp(out4);
  CHECK_FALSE(a.empty());
  CHECK(a == b);
  std::filesystem::remove(out1);
  std::filesystem::remove(out4);
}

TEST_CASE("verify: json report round-trips byte-identically") {
  const auto out = temp_file("jacquat_cli_rt.json");
  CHECK(run("verify --preset real --n-max 4 --m-max 2 --random-params 0 "
            "--format json --out " +
            out.string())
            .exit_code == 0);
  const std::string text = slurp(out);
  const auto parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);
  std::filesystem::remove(out);
}

TEST_CASE("verify: subset reports are deterministic") {
  const auto a = run("verify --preset real --n-max 8 --random-params 0 --format csv");
  const auto b = run("verify --preset real --n-max 8 --random-params 0 --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("t1,") != std::string::npos);
}

TEST_CASE("identities list") {
  const auto r = run("identities list");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("e4") != std::string::npos);
  CHECK(r.output.find("p10") != std::string::npos);
  CHECK(r.output.find("eq3.corrected") != std::string::npos);
  const auto json = run("identities list --format json");
  const auto parsed = nlohmann::json::parse(json.output);
  CHECK(parsed["identities"].size() >= 40);
}

TEST_CASE("bench: strategies agree") {
  const auto r = run("bench --kinds J3,JL3 --n 2048 --reps 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("ok") != std::string::npos);
  CHECK(run("bench --n 0 --reps 1").exit_code == 0);
  CHECK(run("bench --n -3").exit_code == 2);
  CHECK(run("bench --kinds nope --n 10").exit_code == 2);
  CHECK(run("bench --n 10 --reps 0").exit_code == 2);
}

TEST_CASE("misc usage") {
  CHECK(run("").exit_code == 2);
  CHECK(run("unknown-subcommand").exit_code == 2);
  CHECK(run("--version").exit_code == 0);
}
