#include "uu/render.hpp"

#include "uu/real.hpp"
#include "uu/unit.hpp"

#include <sstream>

namespace uu {

namespace {

constexpr int kWidth = 960;
constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 42;
constexpr int kRowHeight = 26;
constexpr int kBarHalf = 4;
constexpr int kDotRadius = 3;

// Exact fixed-point decimal with two digits; no floating point involved.
std::string px(const Rational& v) {
  const BigInt scaled = floor_of(v * 100 + Rational(1, 2));
  const bool neg = scaled < 0;
  const BigInt mag = neg ? BigInt(-scaled) : scaled;
  const BigInt whole = mag / 100;
  const BigInt frac = mag % 100;
  std::string out = neg ? "-" : "";
  out += whole.str();
  out += '.';
  const std::string f = frac.str();
  out += f.size() == 1 ? "0" + f : f;
  return out;
}

struct Frame {
  Rational lo, hi;
  int rows;

  Rational x(const Rational& p) const {
    return kMarginLeft + (p - lo) / (hi - lo) * (kWidth - kMarginLeft - kMarginRight);
  }
  int y(int row) const {  // row 0 at the bottom
    return kMarginTop + (rows - 1 - row) * kRowHeight + kRowHeight / 2;
  }
  int height() const { return kMarginTop + rows * kRowHeight + 16; }
};

void emit_header(std::ostringstream& svg, const Frame& f, const std::string& title) {
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << f.height() << "\" viewBox=\"0 0 " << kWidth << " " << f.height() << "\">\n";
  svg << "  <rect width=\"" << kWidth << "\" height=\"" << f.height()
      << "\" fill=\"#ffffff\"/>\n";
  svg << "  <text x=\"" << kMarginLeft << "\" y=\"24\" font-family=\"monospace\" "
      << "font-size=\"14\" fill=\"#222222\">" << title << "</text>\n";
}

void emit_endpoint(std::ostringstream& svg, const Rational& x, int y, bool closed) {
  svg << "    <circle cx=\"" << px(x) << "\" cy=\"" << y << "\" r=\"" << kDotRadius
      << "\" fill=\"" << (closed ? "#223355" : "#ffffff") << "\" stroke=\"#223355\" "
      << "stroke-width=\"1\"/>\n";
}

void emit_row(std::ostringstream& svg, const Frame& f, int row, const IntervalSet& set,
              const std::vector<Rational>& patch_points) {
  const int y = f.y(row);
  svg << "  <g>\n";
  svg << "    <text x=\"8\" y=\"" << y + 4 << "\" font-family=\"monospace\" font-size=\"12\" "
      << "fill=\"#555555\">n=" << row << "</text>\n";
  svg << "    <line x1=\"" << px(f.x(f.lo)) << "\" y1=\"" << y << "\" x2=\"" << px(f.x(f.hi))
      << "\" y2=\"" << y << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  for (const Interval& part : set.parts()) {
    if (part.is_point()) {
      svg << "    <circle cx=\"" << px(f.x(part.lo)) << "\" cy=\"" << y << "\" r=\""
          << kDotRadius << "\" fill=\"#bb3344\"/>\n";
      continue;
    }
    svg << "    <rect x=\"" << px(f.x(part.lo)) << "\" y=\"" << y - kBarHalf << "\" width=\""
        << px(f.x(part.hi) - f.x(part.lo)) << "\" height=\"" << 2 * kBarHalf
        << "\" fill=\"#4477aa\"/>\n";
    emit_endpoint(svg, f.x(part.lo), y, part.lo_closed);
    emit_endpoint(svg, f.x(part.hi), y, part.hi_closed);
  }
  for (const Rational& p : patch_points)
    svg << "    <circle cx=\"" << px(f.x(p)) << "\" cy=\"" << y << "\" r=\"" << kDotRadius
        << "\" fill=\"#bb3344\"/>\n";
  svg << "  </g>\n";
}

}  // namespace

std::string render_unit_svg(unsigned depth, std::size_t stage) {
  const Frame f{Rational(0), Rational(1), static_cast<int>(depth)};
  std::ostringstream svg;
  std::ostringstream title;
  title << "unit rows 0.." << depth - 1 << " stage " << stage;
  emit_header(svg, f, title.str());
  const auto events = unit_schedule(stage);
  for (unsigned n = 0; n < depth; ++n)
    emit_row(svg, f, static_cast<int>(n), staged_row(n, events), {});
  svg << "</svg>\n";
  return svg.str();
}

std::string render_real_svg(unsigned depth, std::size_t stage, std::size_t copy_stage) {
  const Frame f{Rational(-1), Rational(1), static_cast<int>(depth)};
  std::ostringstream svg;
  std::ostringstream title;
  title << "real rows 0.." << depth - 1 << " stage " << stage << " copy-stage " << copy_stage;
  emit_header(svg, f, title.str());
  const auto steps = real_schedule_steps(stage);
  for (unsigned r = 0; r < depth; ++r) {
    std::vector<Rational> patches;
    for (const RealStep& s : steps)
      for (std::uint64_t row : s.rows)
        if (row == r) patches.push_back(s.point);
    emit_row(svg, f, static_cast<int>(r), a_row(r, depth, copy_stage), patches);
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace uu
