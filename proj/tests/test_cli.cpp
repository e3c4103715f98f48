#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "deaic");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliResult result;
  result.code = deaic_cli::run(static_cast<int>(argv.size()), argv.data(), out,
                               err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

fs::path temp_file(const std::string& stem) {
  static int counter = 0;
  return fs::temp_directory_path() /
         ("deaic_test_" + std::to_string(::getpid()) + "_" + stem + "_" +
          std::to_string(counter++));
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& stem) : path(temp_file(stem)) {}
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
};

}  // namespace

TEST_CASE("efficiency command on the builtin dataset") {
  CliResult r = run_cli({"efficiency", "--builtin"});
  REQUIRE(r.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(r.out);
  REQUIRE(parsed["producers"].size() == 8);
  CHECK(parsed["producers"][0]["id"] == "P1");
  CHECK(parsed["producers"][0]["efficiency_index"] == 1);
  double p2 = parsed["producers"][1]["efficiency_index"];
  CHECK(p2 == doctest::Approx(0.83914).epsilon(5e-4));
  CHECK(parsed["dataset"]["source"] == "builtin");

  CliResult csv = run_cli({"efficiency", "--builtin", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("id,z,efficiency_index\n", 0) == 0);
  CHECK(csv.out.find("\nP6,") != std::string::npos);
}

TEST_CASE("efficiency command input errors exit with 2") {
  CHECK(run_cli({"efficiency"}).code == 2);
  CliResult missing = run_cli({"efficiency", "--dataset", "/no/such/file.csv"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot read") != std::string::npos);
  CHECK(run_cli({"efficiency", "--builtin", "--dataset", "x.csv"}).code == 2);

  TempFile bad("bad.csv");
  spit(bad.path, "id,electricity_mwh\nP1,1\n");
  CliResult parse = run_cli({"efficiency", "--dataset", bad.path.string()});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("expected header") != std::string::npos);
}

TEST_CASE("usage surface") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("estimate-cost") != std::string::npos);
  CliResult version = run_cli({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("estimate-cost writes identical reports for identical seeds") {
  TempFile a("report_a.json");
  TempFile b("report_b.json");
  std::vector<std::string> base = {"estimate-cost", "--builtin", "--samples",
                                   "40",            "--seed",    "9"};
  std::vector<std::string> first = base;
  first.insert(first.end(), {"--out", a.path.string()});
  std::vector<std::string> second = base;
  second.insert(second.end(), {"--out", b.path.string()});

  CliResult ra = run_cli(first);
  REQUIRE(ra.code == 0);
  CHECK(ra.out.empty());
  CHECK(ra.err.find("mean ic") != std::string::npos);
  CHECK(ra.err.find("note: P8") != std::string::npos);
  REQUIRE(run_cli(second).code == 0);

  std::string bytes_a = slurp(a.path);
  std::string bytes_b = slurp(b.path);
  REQUIRE(!bytes_a.empty());
  CHECK(bytes_a == bytes_b);

  nlohmann::json parsed = nlohmann::json::parse(bytes_a);
  CHECK(parsed["seed"] == 9);
  CHECK(parsed["samples_requested"] == 40);
  CHECK(parsed["dataset"]["digest"].get<std::string>().rfind("fnv1a64:", 0) ==
        0);
  REQUIRE(parsed["producers"].size() == 8);
  CHECK(parsed["producers"][5]["samples"].size() == 40);
}

TEST_CASE("estimate-cost option validation") {
  CHECK(run_cli({"estimate-cost", "--builtin", "--samples", "0"}).code == 2);
  CHECK(run_cli({"estimate-cost", "--builtin", "--samples", "-3"}).code == 2);
  CHECK(run_cli({"estimate-cost", "--builtin", "--distributions", "d.csv"})
            .code == 2);
  CHECK(run_cli({"estimate-cost", "--dataset", "x.csv"}).code == 2);
}

TEST_CASE("estimate-cost from explicit files and outage records") {
  TempFile data("producers.csv");
  spit(data.path,
       "id,electricity_mwh,raw_materials_e10_rial,labor_hours_e6,sales_e10_rial\n"
       "small,100,1,2,10\n"
       "big,300,2,5,40\n");

  TempFile outages("outages.csv");
  spit(outages.path,
       "producer_id,duration_h,demand_mw\n"
       "small,2,5\n");

  CliResult r = run_cli({"estimate-cost", "--dataset", data.path.string(),
                         "--outages", outages.path.string(), "--samples", "30",
                         "--seed", "4"});
  REQUIRE(r.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(r.out);
  REQUIRE(parsed["producers"].size() == 2);
  CHECK(parsed["producers"][0]["mean_mwh"] == 110.0);
  CHECK(parsed["producers"][0]["std_mwh"] == 2.5);
  CHECK(parsed["producers"][0]["base_mwh"] == 100.0);
  // No outage records for the second producer, so nothing to price.
  CHECK(parsed["producers"][1]["samples_used"] == 0);
  CHECK(parsed["producers"][1]["note"].get<std::string>().find(
            "no usable samples") != std::string::npos);

  TempFile dists("dists.csv");
  spit(dists.path,
       "producer_id,mean_mwh,std_mwh\n"
       "small,110,2.5\n");
  CliResult rd = run_cli({"estimate-cost", "--dataset", data.path.string(),
                          "--distributions", dists.path.string(), "--samples",
                          "30", "--seed", "4", "--format", "csv"});
  REQUIRE(rd.code == 0);
  CHECK(rd.out.rfind("producer_id,sample_index,e0_mwh,beta,ic_rial_per_kwh\n",
                     0) == 0);
  CHECK(rd.out.find("\nsmall,0,") != std::string::npos);
}

TEST_CASE("what-if command") {
  CliResult r = run_cli({"what-if", "P6", "162403", "--builtin"});
  REQUIRE(r.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["producer_id"] == "P6");
  CHECK(parsed["beta"].get<double>() ==
        doctest::Approx(969.290525828).epsilon(1e-6));
  CHECK(parsed["ic_rial_per_kwh"].get<double>() ==
        doctest::Approx(11643.384246).epsilon(1e-6));
  CHECK(r.err.find("beta") != std::string::npos);

  CliResult at_base = run_cli({"what-if", "P6", "161913", "--builtin"});
  REQUIRE(at_base.code == 0);
  nlohmann::json base = nlohmann::json::parse(at_base.out);
  CHECK(base["ic_rial_per_kwh"].is_null());
  CHECK(at_base.err.find("n/a") != std::string::npos);

  CliResult csv =
      run_cli({"what-if", "P6", "161913", "--builtin", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find(",n/a\n") != std::string::npos);

  CHECK(run_cli({"what-if", "P6", "100", "--builtin"}).code == 2);
  CHECK(run_cli({"what-if", "QQ", "100", "--builtin"}).code == 2);
  CHECK(run_cli({"what-if", "P6", "--builtin"}).code == 2);
}

TEST_CASE("output file failures are reported") {
  CliResult r = run_cli({"efficiency", "--builtin", "--out",
                         "/no/such/dir/report.json"});
  CHECK(r.code == 2);
  CHECK(r.err.find("cannot write") != std::string::npos);
}
