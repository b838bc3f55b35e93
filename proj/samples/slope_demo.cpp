// Monte Carlo check of the piecewise-linear predictions at finite power:
// draw channels, measure log-det slopes between two operating points, and
// compare against the exact right-hand sides.

#include <gdof/slope_check.hpp>

#include <cstdio>
#include <vector>

namespace {

void print_table(const char* title,
                 const std::vector<gdof::verify::SlopeReport>& reports) {
  std::printf("%s\n", title);
  std::printf("  %-16s %10s %10s %10s  %s\n", "check", "predicted", "measured",
              "error", "verdict");
  for (const auto& r : reports) {
    std::printf("  %-16s %10.4f %10.4f %10.5f  %s\n", r.label.c_str(), r.predicted,
                r.estimated, r.abs_error, r.pass ? "ok" : "MISS");
  }
  std::printf("\n");
}

}  // namespace

int main() {
  gdof::verify::VerifyOptions opt;  // rho 1e6 to 1e9, five draws, seed 1

  print_table("Two signal groups sharing an 8-antenna receive space:",
              gdof::verify::verify_two_term_bound(8, {gdof::Rational(1, 2), 3},
                                                  {gdof::Rational(1), 4}, opt));

  print_table("Three groups into 10 receive antennas:",
              gdof::verify::verify_three_term_bound(
                  10, {gdof::Rational(1, 2), 3}, {gdof::Rational(1), 4},
                  {gdof::Rational(6, 5), 2}, opt));

  const gdof::AntennaConfig cfg{3, 3, 2, 2};
  const gdof::ExponentProfile exp{1, gdof::Rational(3, 5), gdof::Rational(3, 5), 1};
  print_table("All seven region bounds of the 3x3 / 2x2 channel at alpha 3/5:",
              gdof::verify::verify_region_bounds(cfg, exp, opt));

  std::printf("Slopes are finite differences of exact log-det values, so small\n");
  std::printf("deviations are expected; the tolerance is %.2f.\n", opt.tolerance);
  return 0;
}
