#include <string>
#include <vector>

#include "deaic/errors.hpp"
#include "deaic/io.hpp"
#include "deaic/reference.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace deaic;

TEST_CASE("producer csv parses the builtin table") {
  Dataset data = parse_producers(reference::producers_csv());
  REQUIRE(data.size() == 8);
  CHECK(data.at(0).id == "P1");
  CHECK(data.at(0).electricity_mwh == 3174.0);
  CHECK(data.at(0).raw_materials == 6.55);
  CHECK(data.at(0).labor_hours == 3.76);
  CHECK(data.at(0).sales_value == 14.4);
  CHECK(data.at(5).electricity_mwh == 161913.0);
  CHECK(data.at(7).id == "P8");
  CHECK(data.at(7).sales_value == 22.45);
}

TEST_CASE("producer csv tolerates crlf, blank lines and spaces") {
  std::string text =
      "id,electricity_mwh,raw_materials_e10_rial,labor_hours_e6,sales_e10_rial\r\n"
      "\r\n"
      " a , 10 , 1 , 2 , 3 \r\n"
      "b,20,2,4,6\n";
  Dataset data = parse_producers(text);
  REQUIRE(data.size() == 2);
  CHECK(data.at(0).id == "a");
  CHECK(data.at(0).electricity_mwh == 10.0);
  CHECK(data.at(1).labor_hours == 4.0);
}

TEST_CASE("producer csv error reporting carries line numbers") {
  const std::string header =
      "id,electricity_mwh,raw_materials_e10_rial,labor_hours_e6,sales_e10_rial\n";

  CHECK_THROWS_AS(parse_producers(""), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_producers("id,foo\n"),
                       doctest::Contains("expected header"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_producers(header), doctest::Contains("no producers"),
                       InvalidInput);
  CHECK_THROWS_WITH_AS(parse_producers(header + "a,1,1,1\n"),
                       doctest::Contains("line 2"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_producers(header + "a,1,x,1,1\n"),
                       doctest::Contains("not a number"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_producers(header + "a,1,1e999,1,1\n"),
                       doctest::Contains("out of range"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_producers(header + "a,nan,1,1,1\n"),
                       doctest::Contains("out of range"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_producers(header + "a,1,1,1,1\n" + header),
                       doctest::Contains("duplicate header"), InvalidInput);
  CHECK_THROWS_WITH_AS(
      parse_producers(header + "a,1,1,1,1\nb,1,1,1,1\na,2,2,2,2\n"),
      doctest::Contains("line 4"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_producers(header + "a,-1,1,1,1\n"),
                       doctest::Contains("non-negative"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_producers(header + "a,1,1,1,0\n"),
                       doctest::Contains("positive"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_producers(header + "a,0,0,0,1\n"),
                       doctest::Contains("all inputs are zero"), InvalidInput);
}

TEST_CASE("outage csv") {
  std::vector<OutageRecord> records = parse_outages(
      "producer_id,duration_h,demand_mw\n"
      "P1,2.5,4\n"
      "P1,1,\n");
  REQUIRE(records.size() == 2);
  CHECK(records[0].producer_id == "P1");
  CHECK(records[0].duration_h == 2.5);
  CHECK(records[0].demand_mw == 4.0);
  CHECK(!records[1].demand_mw);

  CHECK(parse_outages("producer_id,duration_h,demand_mw\n").empty());
  CHECK_THROWS_WITH_AS(
      parse_outages("producer_id,duration_h,demand_mw\nP1,-2,\n"),
      doctest::Contains("duration_h must be positive"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_outages("producer_id,duration_h,demand_mw\nP1,2\n"),
                       doctest::Contains("expected 3 fields"), InvalidInput);
  CHECK_THROWS_WITH_AS(
      parse_outages("producer_id,duration_h,demand_mw\nP1,2,0\n"),
      doctest::Contains("demand_mw must be positive"), InvalidInput);
}

TEST_CASE("distribution csv joins base consumption from the dataset") {
  Dataset data = reference::dataset();
  std::vector<EnergyDistribution> dists =
      parse_distributions(reference::distributions_csv(), data);
  REQUIRE(dists.size() == 8);
  CHECK(dists[4].producer_id == "P5");
  CHECK(dists[4].mean_mwh == 11086.0);
  CHECK(dists[4].std_mwh == 55.0);
  CHECK(dists[4].base_mwh == 10866.0);

  std::vector<EnergyDistribution> zero =
      parse_distributions("producer_id,mean_mwh,std_mwh\nP1,3174,0\n", data);
  CHECK(zero[0].std_mwh == 0.0);

  CHECK_THROWS_WITH_AS(
      parse_distributions("producer_id,mean_mwh,std_mwh\nnobody,1,1\n", data),
      doctest::Contains("unknown producer id"), InvalidInput);
  CHECK_THROWS_WITH_AS(
      parse_distributions(
          "producer_id,mean_mwh,std_mwh\nP1,3186,3\nP1,3186,3\n", data),
      doctest::Contains("duplicate"), InvalidInput);
  CHECK_THROWS_WITH_AS(
      parse_distributions("producer_id,mean_mwh,std_mwh\nP1,3186,-3\n", data),
      doctest::Contains("non-negative"), InvalidInput);
}

TEST_CASE("writers are canonical and round-trip") {
  CHECK(write_producers(reference::dataset()) == reference::producers_csv());
  CHECK(write_distributions(reference::distributions()) ==
        reference::distributions_csv());

  // Awkward values keep their exact bits through a write/parse cycle.
  Dataset gnarly(
      {{"tiny", 1e-17, 0.1, 0.30000000000000004, 1234567.25},
       {"wide", 98765432109876.5, 2.2250738585072014e-308, 1.0, 42.0}});
  Dataset reparsed = parse_producers(write_producers(gnarly));
  for (std::size_t i = 0; i < gnarly.size(); ++i) {
    CHECK(reparsed.at(i).electricity_mwh == gnarly.at(i).electricity_mwh);
    CHECK(reparsed.at(i).raw_materials == gnarly.at(i).raw_materials);
    CHECK(reparsed.at(i).labor_hours == gnarly.at(i).labor_hours);
    CHECK(reparsed.at(i).sales_value == gnarly.at(i).sales_value);
  }
  CHECK(write_producers(reparsed) == write_producers(gnarly));
}

TEST_CASE("number formatting") {
  CHECK(format_sig9(1.0) == "1");
  CHECK(format_sig9(0.25) == "0.25");
  CHECK(format_sig9(1e10) == "1e+10");
  CHECK(format_sig9(11702.0) == "11702");
  CHECK(format_sig9(0.838916) == "0.838916");
  CHECK(format_exact(3174.0) == "3174");
  CHECK(format_exact(6.55) == "6.55");
  CHECK_THROWS_AS(format_sig9(std::numeric_limits<double>::infinity()),
                  InvalidInput);
}

TEST_CASE("digest pins the fnv-1a reference vectors") {
  CHECK(fnv1a64_hex("") == "fnv1a64:cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "fnv1a64:af63dc4c8601ec8c");
  CHECK(fnv1a64_hex("foobar") == "fnv1a64:85944171f73967e8");
}

TEST_CASE("json string escaping") {
  CHECK(json_quote("plain") == "\"plain\"");
  CHECK(json_quote("a\"b\\c") == "\"a\\\"b\\\\c\"");
  CHECK(json_quote("line\nbreak\ttab") == "\"line\\nbreak\\ttab\"");
  CHECK(json_quote(std::string(1, '\x01')) == "\"\\u0001\"");
}

namespace {

Report tiny_report() {
  Report report;
  report.tool_version = "0.1.0";
  report.seed = 42;
  report.samples_requested = 2;
  report.dataset_source = "builtin";
  report.dataset_digest = fnv1a64_hex(reference::producers_csv());
  report.distributions_source = "builtin";
  report.distributions_digest = fnv1a64_hex(reference::distributions_csv());
  report.notes.push_back("run level note");

  ProducerReport a;
  a.producer_id = "P1";
  a.efficiency_index = 1.0;
  a.z = 1.0;
  a.mean_mwh = 3186;
  a.std_mwh = 3;
  a.base_mwh = 3174;
  a.mean_ic = 6704.5;
  a.std_ic = 12.25;
  a.n_requested = 2;
  a.n_used = 2;
  a.samples = {{0, 3186.5, 14.41, 6704.0}, {1, 3187.5, 14.42, 6705.0}};

  ProducerReport b;
  b.producer_id = "P8";
  b.efficiency_index = 1.0;
  b.z = 1.0;
  b.mean_mwh = 14455;
  b.std_mwh = 27.2;
  b.base_mwh = 14346;
  b.n_requested = 2;
  b.n_used = 0;
  b.note = "no usable samples";

  report.producers = {a, b};
  return report;
}

}  // namespace

TEST_CASE("report serialization is deterministic and well formed") {
  Report report = tiny_report();
  std::string json = write_report(report, ReportFormat::Json);
  CHECK(json == write_report(report, ReportFormat::Json));

  nlohmann::json parsed = nlohmann::json::parse(json);
  CHECK(parsed["tool_version"] == "0.1.0");
  CHECK(parsed["seed"] == 42);
  CHECK(parsed["dataset"]["source"] == "builtin");
  CHECK(parsed["notes"][0] == "run level note");
  REQUIRE(parsed["producers"].size() == 2);
  CHECK(parsed["producers"][0]["id"] == "P1");
  CHECK(parsed["producers"][0]["samples"].size() == 2);
  CHECK(parsed["producers"][0]["samples"][1]["e0_mwh"] == 3187.5);
  CHECK(parsed["producers"][0].contains("note") == false);
  CHECK(parsed["producers"][1]["note"] == "no usable samples");
  CHECK(parsed["producers"][1]["samples"].empty());
  CHECK(parsed["producers"][1]["samples_used"] == 0);

  std::string csv = write_report(report, ReportFormat::Csv);
  CHECK(csv ==
        "producer_id,sample_index,e0_mwh,beta,ic_rial_per_kwh\n"
        "P1,0,3186.5,14.41,6704\n"
        "P1,1,3187.5,14.42,6705\n");

  Report empty;
  empty.tool_version = "0.1.0";
  CHECK(write_report(empty, ReportFormat::Csv) ==
        "producer_id,sample_index,e0_mwh,beta,ic_rial_per_kwh\n");
}
