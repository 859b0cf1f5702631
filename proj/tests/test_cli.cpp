#include <doctest.h>
#include <nlohmann/json.hpp>
#include <stdlib.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "seqlab/cli.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"seqlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult result;
  result.code = seqlab::cli::run(static_cast<int>(argv.size()), argv.data(),
                                 out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::vector<std::string> with_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  return args;
}

}  // namespace

TEST_CASE("text output: worked examples") {
  const auto gijswijt = run_cli({"gijswijt", "--count", "9"});
  CHECK(gijswijt.code == 0);
  CHECK(gijswijt.out == "1 1 2 1 1 2 2 2 3\n");

  const auto beastly = run_cli({"beastly", "--count", "3"});
  CHECK(beastly.code == 0);
  CHECK(beastly.out == "666\n1666\n2666\n");

  const auto lychrel = run_cli({"lychrel", "19"});
  CHECK(lychrel.code == 0);
  CHECK(lychrel.out == "19\n110\n121\nstatus Resolved steps 2\n");

  const auto capped = run_cli({"lychrel", "196", "--cap", "5"});
  CHECK(capped.code == 0);
  CHECK(capped.out.find("status CapReached steps 5") != std::string::npos);

  const auto trajectory = run_cli({"trajectory196", "--steps", "3"});
  CHECK(trajectory.code == 0);
  CHECK(trajectory.out == "196\n887\n1675\n7436\n");

  const auto angelini = run_cli({"angelini", "--seed", "1", "--count", "10"});
  CHECK(angelini.code == 0);
  CHECK(angelini.out == "1 9 9 5 5 9 9 5 5 9\n");

  const auto persistence = run_cli({"persistence", "277777788888899"});
  CHECK(persistence.code == 0);
  CHECK(persistence.out == "11\n");

  const auto smallest = run_cli({"persistence", "--smallest", "4"});
  CHECK(smallest.code == 0);
  CHECK(smallest.out == "77\n");

  const auto powertrain = run_cli({"powertrain", "39"});
  CHECK(powertrain.code == 0);
  CHECK(powertrain.out == "19683\n");

  const auto fixed = run_cli({"powertrain", "--fixed-points", "3000"});
  CHECK(fixed.code == 0);
  CHECK(fixed.out == "0\n1\n2\n3\n4\n5\n6\n7\n8\n9\n2592\n");

  const auto dup = run_cli({"dup123", "--max-len", "6"});
  CHECK(dup.code == 0);
  CHECK(dup.out == "3 1\n4 3\n5 8\n6 21\n");

  const auto seeded = run_cli({"dup123", "--seed", "12", "--max-len", "6"});
  CHECK(seeded.code == 0);
  CHECK(seeded.out == "2 1\n3 2\n4 4\n5 8\n6 16\n");

  const auto curling = run_cli({"curling", "2232"});
  CHECK(curling.code == 0);
  CHECK(curling.out == "1\n");

  const auto comma = run_cli({"curling", "2,2,3,2"});
  CHECK(comma.code == 0);
  CHECK(comma.out == curling.out);

  const auto tail = run_cli({"best-tail", "6"});
  CHECK(tail.code == 0);
  CHECK(tail.out == "tail_length 14\nwitness 222322\n");

  const auto quet = run_cli({"quet", "--count", "6"});
  CHECK(quet.code == 0);
  CHECK(quet.out == "2\n3\n5\n7\n13\n17\n");

  const auto small = run_cli({"quet", "--small-indices", "300"});
  CHECK(small.code == 0);
  CHECK(small.out == "12\n201\n");

  const auto lagarias = run_cli({"lagarias", "--count", "5"});
  CHECK(lagarias.code == 0);
  CHECK(lagarias.out == "0\n0\n1\n0\n4\n");

  const auto scan = run_cli({"lagarias", "--check", "60"});
  CHECK(scan.code == 0);
  CHECK(scan.out == "first_violation none\nmax_precision_bits 128\n");

  const auto verify = run_cli({"verify", "A003001", "--count", "8"});
  CHECK(verify.code == 0);
  CHECK(verify.out == "A003001 compared 8 pass\n");
}

TEST_CASE("every bundled sequence verifies offline") {
  for (const std::string a_number :
       {"A051003", "A033865", "A006960", "A131744", "A003001", "A135385",
        "A135473", "A090822", "A094004", "A134204", "A133242", "A057641"}) {
    const auto result = run_cli({"verify", a_number});
    CHECK_MESSAGE(result.code == 0, a_number << ": " << result.out);
    CHECK(result.out.find(" pass\n") != std::string::npos);
  }
}

TEST_CASE("json envelopes parse and carry the command") {
  const std::vector<std::vector<std::string>> battery = {
      {"beastly", "--count", "4"},
      {"lychrel", "19"},
      {"trajectory196", "--steps", "4"},
      {"angelini", "--seed", "1", "--count", "12"},
      {"persistence", "77"},
      {"persistence", "--smallest", "3"},
      {"powertrain", "2592"},
      {"powertrain", "--fixed-points", "3000"},
      {"dup123", "--max-len", "8"},
      {"gijswijt", "--count", "20"},
      {"curling", "222"},
      {"best-tail", "5"},
      {"quet", "--count", "12"},
      {"quet", "--small-indices", "250"},
      {"tsp", "--n", "3", "--trials", "64"},
      {"lagarias", "--count", "6"},
      {"lagarias", "--check", "40"},
      {"verify", "A090822"},
  };
  for (const auto& args : battery) {
    const auto result = run_cli(with_json(args));
    CHECK_MESSAGE(result.code == 0, args[0] << ": " << result.err);
    const json envelope = json::parse(result.out);
    CHECK(envelope.at("command") == args[0]);
    CHECK(envelope.contains("parameters"));
    CHECK(envelope.contains("result"));
    CHECK_FALSE(envelope.at("parameters").contains("format"));
    CHECK_FALSE(envelope.at("parameters").contains("threads"));
  }

  // Big integers ride as decimal strings.
  const auto giant = run_cli(with_json({"persistence", "--smallest", "11"}));
  const json parsed = json::parse(giant.out);
  CHECK(parsed.at("result").at("value") == "277777788888899");

  const auto tsp = run_cli(with_json(
      {"tsp", "--n", "4", "--trials", "500", "--rng-seed", "42"}));
  const json estimate = json::parse(tsp.out);
  CHECK(estimate.at("result").at("n") == 4);
  CHECK(estimate.at("result").at("trials") == 500);
  CHECK(estimate.at("result").at("seed") == 42);
  CHECK(estimate.at("result").at("mean_eels").is_number_float());
  CHECK(estimate.at("result").at("std_error_eels").is_number_float());
}

TEST_CASE("exit codes: usage, verification failure, runtime errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"gijswijt", "--nope"}).code == 2);
  CHECK(run_cli({"gijswijt", "--count", "abc"}).code == 2);
  CHECK(run_cli({"beastly", "--count", "5", "--format", "yaml"}).code == 2);
  CHECK(run_cli({"persistence"}).code == 2);
  CHECK(run_cli({"persistence", "77", "--smallest", "3"}).code == 2);
  CHECK(run_cli({"verify", "NotAnA"}).code == 2);
  CHECK(run_cli({"curling", "12x"}).code == 2);

  // Inadmissible seed surfaces as a runtime error.
  const auto runtime = run_cli({"angelini", "--seed", "3", "--count", "5"});
  CHECK(runtime.code == 3);
  CHECK(runtime.err.find("error:") != std::string::npos);
  CHECK(runtime.out.empty());

  // Regenerating more fixed points than the search bound allows errors out.
  CHECK(run_cli({"verify", "A135385", "--count", "12"}).code == 3);

  // Help is not an error.
  const auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
  CHECK(run_cli({"tsp", "--help"}).code == 0);
}

TEST_CASE("verification failures exit 1 and name the first divergence") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("seqlab-cli-cache-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "b051003.txt");
    out << "1 666\n2 1667\n";
  }
  ::setenv("SEQLAB_CACHE_DIR", dir.string().c_str(), 1);

  const auto result =
      run_cli({"verify", "A051003", "--fetch", "--count", "2"});
  CHECK(result.code == 1);
  CHECK(result.out ==
        "A051003 compared 2 fail\nmismatch index 2 expected 1667 actual "
        "1666\n");

  const auto as_json = run_cli(
      with_json({"verify", "A051003", "--fetch", "--count", "2"}));
  CHECK(as_json.code == 1);
  const json envelope = json::parse(as_json.out);
  CHECK(envelope.at("result").at("status") == "fail");
  CHECK(envelope.at("result").at("mismatch").at("index") == 2);
  CHECK(envelope.at("result").at("mismatch").at("expected") == "1667");
  CHECK(envelope.at("result").at("mismatch").at("actual") == "1666");

  ::unsetenv("SEQLAB_CACHE_DIR");
  std::filesystem::remove_all(dir);
}

TEST_CASE("stdout is reproducible; timing goes to stderr") {
  const std::vector<std::string> args = {"tsp",       "--n",      "4",
                                         "--trials",  "1000",     "--rng-seed",
                                         "42",        "--format", "json"};
  auto one = args;
  one.push_back("--threads");
  one.push_back("1");
  auto eight = args;
  eight.push_back("--threads");
  eight.push_back("8");

  const auto first = run_cli(one);
  const auto second = run_cli(eight);
  const auto third = run_cli(one);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == third.out);

  CHECK(first.err.find("elapsed_ms") != std::string::npos);
  CHECK(first.out.find("elapsed_ms") == std::string::npos);

  // Same argv, same bytes, for non-randomized commands too.
  for (const std::vector<std::string>& argv :
       {std::vector<std::string>{"gijswijt", "--count", "500"},
        std::vector<std::string>{"verify", "A090822", "--count", "33"},
        std::vector<std::string>{"best-tail", "8", "--format", "json"}}) {
    const auto a = run_cli(argv);
    const auto b = run_cli(argv);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("language table file matches the builtin table") {
  const auto builtin = run_cli({"angelini", "--seed", "1", "--count", "40"});
  const auto from_file = run_cli({"angelini", "--seed", "1", "--count", "40",
                                  "--table", "data/english.table"});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == builtin.out);
}
