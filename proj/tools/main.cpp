#include "uu/harness.hpp"
#include "uu/render.hpp"
#include "uu/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace uu;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Space parse_space(const std::string& name) {
  if (name == "unit") return Space::Unit;
  if (name == "real") return Space::Real;
  throw std::invalid_argument("unknown space: " + name);
}

Rational require_rational(const std::string& text) {
  const auto r = parse_rational(text);
  if (!r) throw std::invalid_argument("malformed rational: " + text);
  return *r;
}

SeqSpec require_spec(const std::string& text) {
  const auto s = SeqSpec::parse(text);
  if (!s) throw std::invalid_argument("malformed sequence spec: " + text);
  return *s;
}

int run(int argc, char** argv) {
  CLI::App app{"finite-depth uniquely universal set constructions with exact rationals"};
  app.require_subcommand(1);

  std::string space_name = "unit";
  unsigned depth = 8;
  std::size_t stage = 0;
  std::size_t copy_stage = 0;
  bool as_json = false;
  std::string point_text, spec_text, output_path;
  std::uint64_t row_index = 0;
  std::size_t steps = 3;

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--space", space_name)->check(CLI::IsMember({"unit", "real"}));
  verify->add_option("--depth", depth)->check(CLI::Range(1u, 16u));
  verify->add_option("--stage", stage);
  verify->add_option("--copy-stage", copy_stage);
  verify->add_flag("--json", as_json);

  auto* query = app.add_subcommand("query", "inspect rows, sections, codes, schedules");
  query->require_subcommand(1);

  auto* q_row = query->add_subcommand("row", "staged row as an interval set");
  q_row->add_option("--space", space_name)->check(CLI::IsMember({"unit", "real"}));
  q_row->add_option("--n", row_index)->required()->check(CLI::Range(0u, 16u));
  q_row->add_option("--depth", depth)->check(CLI::Range(1u, 16u));
  q_row->add_option("--stage", stage);
  q_row->add_option("--copy-stage", copy_stage);

  auto* q_decode = query->add_subcommand("decode", "section rows of a point");
  q_decode->add_option("--space", space_name)->check(CLI::IsMember({"unit", "real"}));
  q_decode->add_option("--point", point_text)->required();
  q_decode->add_option("--depth", depth)->check(CLI::Range(1u, 16u));
  q_decode->add_option("--stage", stage);
  q_decode->add_option("--copy-stage", copy_stage);

  auto* q_encode = query->add_subcommand("encode", "limit point of a sequence spec");
  q_encode->add_option("--spec", spec_text)->required();

  auto* q_schedule = query->add_subcommand("schedule", "patch events");
  q_schedule->add_option("--space", space_name)->check(CLI::IsMember({"unit", "real"}));
  q_schedule->add_option("--steps", steps)->check(CLI::Range(0u, 2000u));

  auto* render = app.add_subcommand("render", "write an SVG row diagram");
  render->add_option("--space", space_name)->check(CLI::IsMember({"unit", "real"}));
  render->add_option("--depth", depth)->check(CLI::Range(1u, 16u));
  render->add_option("--stage", stage);
  render->add_option("--copy-stage", copy_stage);
  render->add_option("-o,--output", output_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const Space space = parse_space(space_name);

  if (verify->parsed()) {
    const VerifyReport report =
        space == Space::Unit ? verify_unit(depth, stage) : verify_real(depth, stage, copy_stage);
    if (as_json)
      std::cout << report_json(report).dump(2) << "\n";
    else
      std::cout << report_text(report);
    return report.overall() ? 0 : kExitFail;
  }

  if (query->parsed()) {
    Json out;
    if (q_row->parsed()) out = query_row(space, row_index, depth, stage, copy_stage);
    if (q_decode->parsed())
      out = query_decode(space, require_rational(point_text), depth, stage, copy_stage);
    if (q_encode->parsed()) out = query_encode(require_spec(spec_text));
    if (q_schedule->parsed()) out = query_schedule(space, steps);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (render->parsed()) {
    const std::string svg = space == Space::Unit
                                ? render_unit_svg(depth, stage)
                                : render_real_svg(depth, stage, copy_stage);
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output path: " + output_path);
    out << svg;
    if (!out.good()) throw std::invalid_argument("failed writing: " + output_path);
    return 0;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}
