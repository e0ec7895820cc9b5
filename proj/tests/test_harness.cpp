#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uu/harness.hpp"
#include "uu/render.hpp"
#include "uu/verify.hpp"

using namespace uu;

TEST_CASE("verify suites pass at the default parameters") {
  const VerifyReport unit = verify_unit(8, 4);
  if (!unit.overall()) MESSAGE(report_text(unit));
  CHECK(unit.overall());
  CHECK(unit.checks.size() >= 21);

  const VerifyReport real = verify_real(6, 3, 2);
  if (!real.overall()) MESSAGE(report_text(real));
  CHECK(real.overall());
  CHECK(real.checks.size() >= 11);

  bool has_fixture = false;
  for (const CheckResult& c : real.checks) has_fixture |= c.name == "v0_v1_v2_fixture";
  CHECK(has_fixture);
}

TEST_CASE("report rendering carries one line per check") {
  const VerifyReport report = verify_real(4, 1, 0);
  const std::string text = report_text(report);
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == report.checks.size() + 1);

  const Json j = report_json(report);
  CHECK(j["overall"].get<bool>() == report.overall());
  CHECK(j["checks"].size() == report.checks.size());
}

TEST_CASE("query outputs are deterministic") {
  CHECK(query_row(Space::Unit, 2, 8, 0, 0).dump() == query_row(Space::Unit, 2, 8, 0, 0).dump());
  CHECK(query_row(Space::Real, 2, 8, 3, 2).dump() == query_row(Space::Real, 2, 8, 3, 2).dump());
  CHECK(query_decode(Space::Real, Rational(-1, 3), 5, 1, 0).dump() ==
        query_decode(Space::Real, Rational(-1, 3), 5, 1, 0).dump());
  CHECK(query_schedule(Space::Unit, 12).dump() == query_schedule(Space::Unit, 12).dump());
  CHECK(report_json(verify_real(4, 2, 1)).dump() == report_json(verify_real(4, 2, 1)).dump());
}

TEST_CASE("query fixtures") {
  CHECK(query_decode(Space::Unit, Rational(1, 2), 5, 0, 0).dump() == "[0,2,3,4]");
  CHECK(query_encode(SeqSpec({0, 0}, {1})).get<std::string>() == "empty");
  CHECK(query_encode(SeqSpec({1, 0}, {1})).get<std::string>() == "1/2");

  const Json sched = query_schedule(Space::Real, 3);
  REQUIRE(sched.size() == 4);  // step 1 patches two rows
  CHECK(sched[0]["point"] == "-1/3");
  CHECK(sched[0]["row"] == 0);
  CHECK(sched[1]["point"] == "-1/4");
  CHECK(sched[2]["point"] == "-1/4");
  CHECK(sched[3]["point"] == "1/3");
  CHECK(sched[3]["row"] == 1);
}

TEST_CASE("json encodings round-trip interval sets") {
  const IntervalSet s = IntervalSet::from_parts(
      {Interval{Rational(-5, 12), false, Rational(1, 3), true}, Interval::point(Rational(2, 3))});
  const auto back = interval_set_from_json(to_json(s));
  REQUIRE(back.has_value());
  CHECK(*back == s);
  CHECK(to_json(Rational(-5, 12)).get<std::string>() == "-5/12");
  CHECK(!interval_from_json(Json{{"lo", "1/2"}}).has_value());
  CHECK(!interval_set_from_json(Json("nope")).has_value());
}

TEST_CASE("json encodings of cells, blocks, and schedule steps") {
  const Cell c = cell(*Label::parse("0010"));
  const Json cj = to_json(c);
  CHECK(cj["label"] == "0010");
  CHECK(cj["position"] == 6);
  CHECK(cj["interval"]["lo"] == "3/8");

  const Json bj = to_json(block(Side::Pos, 1));
  CHECK(bj["side"] == "POS");
  CHECK(bj["index"] == 1);
  CHECK(bj["base_row"] == 3);
  CHECK(bj["copy_row_offset"] == 4);
  CHECK(bj["map"]["c"] == "1/2");
  CHECK(bj["map"]["s"] == "-1/6");
  CHECK(bj["base"]["lo"] == "1/3");

  const auto steps = real_schedule_steps(2);
  const Json sj = to_json(steps[1]);
  CHECK(sj["endpoint_index"] == 4);
  CHECK(sj["point"] == "-1/4");
  CHECK(sj["rows"] == Json::array({2, 3}));
  CHECK(sj["target"] == "00;1");
  CHECK(sj["lost"] == "0000;1");
}

TEST_CASE("svg output is deterministic and well-formed") {
  const std::string a = render_unit_svg(6, 2);
  const std::string b = render_unit_svg(6, 2);
  CHECK(a == b);
  CHECK(a.find("<svg") == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("n=5") != std::string::npos);
  // Patch events render as dots.
  CHECK(a.find("#bb3344") != std::string::npos);

  // Depth 1 draws the single base strip.
  const std::string one = render_unit_svg(1, 0);
  CHECK(one.find("n=0") != std::string::npos);
  CHECK(one.find("n=1") == std::string::npos);
  CHECK(one.find("<rect x=\"500.00\"") != std::string::npos);  // bar starts at 1/2

  const std::string r1 = render_real_svg(6, 3, 1);
  const std::string r2 = render_real_svg(6, 3, 1);
  CHECK(r1 == r2);
  CHECK(r1.find("</svg>") != std::string::npos);
  // No floating point formatting: never a digit followed by an exponent.
  bool has_exponent = false;
  for (std::size_t i = 0; i + 2 < r1.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(r1[i])) && r1[i + 1] == 'e' &&
        (r1[i + 2] == '-' || r1[i + 2] == '+' ||
         std::isdigit(static_cast<unsigned char>(r1[i + 2]))))
      has_exponent = true;
  }
  CHECK(!has_exponent);
  CHECK(r1.find("nan") == std::string::npos);
}
