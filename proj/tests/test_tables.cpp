#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gmchar/render.hpp"
#include "gmchar/report.hpp"
#include "gmchar/tables.hpp"

using namespace gmchar;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GMCHAR_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("attached table matches the golden csv") {
  const auto rows = emit_table_characters(3);
  CHECK(rows.size() == 19);
  CHECK(render_table("table", {}, rows, Format::Csv) == slurp("table_characters_k3.csv"));
}

TEST_CASE("dangling table matches the golden csv") {
  const auto rows = emit_table_dangling(3);
  CHECK(rows.size() == 33);
  CHECK(render_table("table", {}, rows, Format::Csv) == slurp("table_dangling_k3.csv"));
}

TEST_CASE("prediction table matches the golden csv") {
  const auto rows = emit_predictions();
  CHECK(rows.size() == 17);
  CHECK(render_table("table", {}, rows, Format::Csv) == slurp("predictions.csv"));
}

TEST_CASE("rendering is deterministic") {
  const auto rows = emit_table_dangling(4);
  const Params params = {{"table", "dangling"}, {"k-max", "4"}};
  for (Format f : {Format::Text, Format::Csv, Format::Json}) {
    const std::string once = render_table("table", params, rows, f);
    const std::string twice = render_table("table", params, emit_table_dangling(4), f);
    CHECK(once == twice);
    CHECK(!once.empty());
    CHECK(once.back() == '\n');
  }
}

TEST_CASE("json shape") {
  const auto rows = emit_table_characters(1);
  const Params params = {{"table", "characters"}, {"k-max", "1"}};
  const auto j = nlohmann::json::parse(render_table("table", params, rows, Format::Json));
  CHECK(j["command"] == "table");
  CHECK(j["params"]["k-max"] == "1");
  REQUIRE(j["rows"].is_array());
  CHECK(j["rows"].size() == 11);
  CHECK(j["rows"][0]["label"] == "A_{2k} k=1");
  CHECK(j["rows"][0]["columns"]["alpha"] == "9/11");      // rationals as strings
  CHECK(j["rows"][0]["columns"]["lambda"] == "1");
  const auto& ribbon = j["rows"][10];
  CHECK(ribbon["label"] == "ribbon(g=4,l=1)");
  CHECK(ribbon["columns"]["delta"] == "-18");

  Record rec;
  rec.command = "semigroup";
  rec.params = {{"p", "3"}, {"q", "4"}};
  rec.fields = {{"gaps", "1 2 5"}, {"frobenius", "5"}};
  const auto jr = nlohmann::json::parse(render_record(rec, Format::Json));
  CHECK(jr["command"] == "semigroup");
  CHECK(jr["fields"]["frobenius"] == "5");
}

TEST_CASE("text output aligns and annotates") {
  const std::string text = render_table("table", {}, emit_predictions(), Format::Text);
  CHECK(text.find("A_{5/6}") != std::string::npos);
  CHECK(text.find("# WARN: predicted 5/9, chain closed form gives 32/55") != std::string::npos);
  const std::string csv = render_table("table", {}, emit_predictions(), Format::Csv);
  CHECK(csv.find("\"WARN: predicted 5/9, chain closed form gives 32/55\"") != std::string::npos);
}

TEST_CASE("consistency suite passes with exactly the two known warnings") {
  const Report r = run_crosscheck_suite();
  for (const auto& c : r.checks) {
    CAPTURE(c.description);
    CAPTURE(c.actual);
    CHECK((c.pass || c.warn));
  }
  CHECK(r.all_pass);
  CHECK(r.failures() == 0);
  CHECK(r.warnings() == 2);
  CHECK(r.checks.size() >= 15);

  const std::string text = render_report(r, Format::Text);
  CHECK(text.find("all checks passed") != std::string::npos);
  CHECK(text.find("WARN") != std::string::npos);
  CHECK(render_report(r, Format::Csv).find("PASS,") != std::string::npos);
  const auto j = nlohmann::json::parse(render_report(r, Format::Json));
  CHECK(j["report"]["all_pass"] == true);
}

TEST_CASE("k_max validation") {
  CHECK_THROWS(emit_table_characters(0));
  CHECK_THROWS(emit_table_dangling(-1));
}
