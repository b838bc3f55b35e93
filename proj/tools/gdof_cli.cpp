// Command-line front end: exact GDoF regions, rate-split systems, symmetric
// curves, closed-form specializations, and Monte Carlo slope verification.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <gdof/json_io.hpp>
#include <gdof/region.hpp>
#include <gdof/slope_check.hpp>
#include <gdof/special.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using gdof::Rational;
using nlohmann::json;

struct CliState {
  std::string antennas;
  std::string alpha;
  std::string point;
  std::string sweep;
  std::string suite = "theorem1";
  std::string format = "json";
  std::string config_path;
  std::uint64_t seed = 1;
  double rho_lo = 1e6;
  double rho_hi = 1e9;
  int trials = 5;
  double tolerance = 0.05;
  bool alt_triple_sum = false;
  bool raw = false;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_ints(const std::string& text, size_t expected, const char* what) {
  const auto parts = split_list(text);
  if (parts.size() != expected)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                " comma-separated values, got '" + text + "'");
  std::vector<int> out;
  for (const auto& p : parts) {
    const Rational r = gdof::parse_rational(p);
    if (denominator(r) != 1 || r < 0)
      throw std::invalid_argument(std::string(what) + ": '" + p + "' is not a nonnegative integer");
    out.push_back(static_cast<int>(numerator(r).convert_to<long>()));
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text, size_t expected, const char* what) {
  const auto parts = split_list(text);
  if (expected != 0 && parts.size() != expected)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                " comma-separated values, got '" + text + "'");
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(gdof::parse_rational(p));
  return out;
}

gdof::AntennaConfig antenna_config(const CliState& st) {
  if (st.antennas.empty())
    throw std::invalid_argument("--antennas is required (M1,N1,M2,N2)");
  const auto v = parse_ints(st.antennas, 4, "--antennas");
  return {v[0], v[1], v[2], v[3]};
}

gdof::ExponentProfile exponent_profile(const CliState& st) {
  if (st.alpha.empty())
    throw std::invalid_argument("--alpha is required (a11,a12,a21,a22)");
  const auto v = parse_rationals(st.alpha, 4, "--alpha");
  return {v[0], v[1], v[2], v[3]};
}

// Config-file values fill in wherever the flag was not given on the command
// line; flags win, and GDOF_SEED in the environment wins over both.
void apply_config(CLI::App* cmd, CliState& st) {
  if (!st.config_path.empty()) {
    std::ifstream in(st.config_path);
    if (!in) throw std::invalid_argument("cannot open config file '" + st.config_path + "'");
    json cfg;
    try {
      in >> cfg;
    } catch (const json::exception& e) {
      throw std::invalid_argument("config file '" + st.config_path + "': " + e.what());
    }
    const auto absent = [&](const char* flag) {
      const CLI::Option* opt = cmd->get_option_no_throw(flag);
      return opt == nullptr || opt->count() == 0;
    };
    const auto join = [](const json& arr) {
      std::string out;
      for (const auto& item : arr) {
        if (!out.empty()) out += ',';
        out += item.is_string() ? item.get<std::string>() : item.dump();
      }
      return out;
    };
    if (cfg.contains("antennas") && absent("--antennas")) st.antennas = join(cfg["antennas"]);
    if (cfg.contains("alpha") && absent("--alpha")) st.alpha = join(cfg["alpha"]);
    if (cfg.contains("point") && absent("--point")) st.point = join(cfg["point"]);
    if (cfg.contains("sweep") && absent("--sweep")) st.sweep = join(cfg["sweep"]);
    if (cfg.contains("suite") && absent("--suite")) st.suite = cfg["suite"].get<std::string>();
    if (cfg.contains("format") && absent("--format")) st.format = cfg["format"].get<std::string>();
    if (cfg.contains("seed") && absent("--seed")) st.seed = cfg["seed"].get<std::uint64_t>();
    if (cfg.contains("rho_lo") && absent("--rho-lo")) st.rho_lo = cfg["rho_lo"].get<double>();
    if (cfg.contains("rho_hi") && absent("--rho-hi")) st.rho_hi = cfg["rho_hi"].get<double>();
    if (cfg.contains("trials") && absent("--trials")) st.trials = cfg["trials"].get<int>();
    if (cfg.contains("tolerance") && absent("--tolerance"))
      st.tolerance = cfg["tolerance"].get<double>();
  }
  if (const char* env = std::getenv("GDOF_SEED")) {
    const Rational r = gdof::parse_rational(env);
    if (denominator(r) != 1 || r < 0)
      throw std::invalid_argument("GDOF_SEED must be a nonnegative integer");
    st.seed = numerator(r).convert_to<std::uint64_t>();
  }
  if (st.format != "json" && st.format != "csv")
    throw std::invalid_argument("--format must be json or csv");
}

void emit_region(const gdof::poly::Region2& region, const CliState& st) {
  if (st.format == "csv")
    std::cout << gdof::io::region_to_csv(region);
  else
    std::cout << gdof::io::to_json(region).dump(2) << "\n";
}

int run_region(CLI::App* cmd, CliState& st) {
  apply_config(cmd, st);
  gdof::RegionOptions opt;
  opt.alt_triple_sum_first_term = st.alt_triple_sum;
  emit_region(gdof::gdof_region(antenna_config(st), exponent_profile(st), opt), st);
  return 0;
}

int run_split(CLI::App* cmd, CliState& st) {
  apply_config(cmd, st);
  if (st.format == "csv") throw std::invalid_argument("split output is json only");
  const auto cfg = antenna_config(st);
  const auto exp = exponent_profile(st);
  const auto split = gdof::split_region(cfg, exp);
  json out = gdof::io::to_json(split);
  out["projection"] = gdof::io::to_json(gdof::poly::project_split_region(split));
  if (!st.point.empty()) {
    const auto p = parse_rationals(st.point, 2, "--point");
    out["point"] = json::array({gdof::io::to_json(p[0]), gdof::io::to_json(p[1])});
    const auto witness = gdof::poly::find_split(split, {p[0], p[1]});
    out["feasible"] = witness.has_value();
    if (witness) {
      out["witness"] = json{{"d1p", gdof::io::to_json(witness->d1p)},
                            {"d1c", gdof::io::to_json(witness->d1c)},
                            {"d2p", gdof::io::to_json(witness->d2p)},
                            {"d2c", gdof::io::to_json(witness->d2c)}};
    } else {
      out["witness"] = nullptr;
    }
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_curve(CLI::App* cmd, CliState& st) {
  apply_config(cmd, st);
  const auto cfg = antenna_config(st);
  std::vector<Rational> sweep;
  if (st.sweep.empty()) {
    for (int k = 0; k <= 32; ++k) sweep.push_back(Rational(k, 16));
  } else {
    sweep = parse_rationals(st.sweep, 0, "--sweep");
  }
  const auto curve = gdof::symmetric_curve(cfg, sweep);
  if (st.format == "csv") {
    std::cout << gdof::io::curve_to_csv(curve);
  } else {
    json points = json::array();
    for (const auto& p : curve)
      points.push_back(json{{"alpha", gdof::io::to_json(p.alpha)},
                            {"d_s", gdof::io::to_json(p.value)}});
    std::cout << json{{"curve", points}}.dump(2) << "\n";
  }
  return 0;
}

int run_dof(CLI::App* cmd, CliState& st) {
  apply_config(cmd, st);
  const auto cfg = antenna_config(st);
  emit_region(st.raw ? gdof::dof_region_raw(cfg) : gdof::dof_region(cfg), st);
  return 0;
}

int run_siso(CLI::App* cmd, CliState& st) {
  apply_config(cmd, st);
  emit_region(gdof::siso_region(exponent_profile(st)), st);
  return 0;
}

int run_mac(CLI::App* cmd, CliState& st) {
  apply_config(cmd, st);
  if (st.antennas.empty())
    throw std::invalid_argument("--antennas is required (M1,M2,N)");
  const auto v = parse_ints(st.antennas, 3, "--antennas");
  if (st.alpha.empty()) throw std::invalid_argument("--alpha is required (one exponent)");
  const auto a = parse_rationals(st.alpha, 1, "--alpha");
  emit_region(gdof::mac_gdof_region({v[0], v[1], v[2]}, a[0]), st);
  return 0;
}

int run_tin(CLI::App* cmd, CliState& st) {
  apply_config(cmd, st);
  if (st.antennas.empty())
    throw std::invalid_argument("--antennas is required (M,N)");
  const auto v = parse_ints(st.antennas, 2, "--antennas");
  if (st.alpha.empty()) throw std::invalid_argument("--alpha is required (one exponent)");
  const auto a = parse_rationals(st.alpha, 1, "--alpha");
  emit_region(gdof::tin_gdof_region(v[0], v[1], a[0]), st);
  return 0;
}

int run_verify(CLI::App* cmd, CliState& st) {
  apply_config(cmd, st);
  if (st.format == "csv") throw std::invalid_argument("verify output is json only");
  gdof::verify::VerifyOptions opt;
  opt.rho_lo = st.rho_lo;
  opt.rho_hi = st.rho_hi;
  opt.trials = st.trials;
  opt.tolerance = st.tolerance;
  opt.seed = st.seed;
  if (opt.trials < 1) throw std::invalid_argument("--trials must be at least 1");
  if (!(1 < opt.rho_lo && opt.rho_lo < opt.rho_hi))
    throw std::invalid_argument("need 1 < rho_lo < rho_hi");

  std::vector<gdof::verify::SlopeReport> reports;
  if (st.suite == "lemma4") {
    reports = gdof::verify::verify_two_term_bound(8, {Rational(1, 2), 3}, {Rational(1), 4}, opt);
  } else if (st.suite == "lemma5") {
    reports = gdof::verify::verify_three_term_bound(10, {Rational(1, 2), 3}, {Rational(1), 4},
                                                    {Rational(6, 5), 2}, opt);
  } else if (st.suite == "theorem1") {
    gdof::AntennaConfig cfg{3, 3, 2, 2};
    gdof::ExponentProfile exp{1, Rational(3, 5), Rational(3, 5), 1};
    if (!st.antennas.empty()) cfg = antenna_config(st);
    if (!st.alpha.empty()) exp = exponent_profile(st);
    gdof::RegionOptions region_opt;
    region_opt.alt_triple_sum_first_term = st.alt_triple_sum;
    reports = gdof::verify::verify_region_bounds(cfg, exp, opt, region_opt);
  } else {
    throw std::invalid_argument("unknown suite '" + st.suite +
                                "' (choose lemma4, lemma5 or theorem1)");
  }
  const json out = gdof::io::verify_to_json(st.suite, reports);
  std::cout << out.dump(2) << "\n";
  return out["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact GDoF regions of the two-user MIMO interference channel"};
  app.require_subcommand(1);
  CliState st;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", st.config_path, "JSON config file; flags take precedence");
    cmd->add_option("--format", st.format, "output format: json or csv");
    return cmd;
  };
  const auto add_channel = [&](CLI::App* cmd) {
    cmd->add_option("--antennas", st.antennas, "antenna counts M1,N1,M2,N2");
    cmd->add_option("--alpha", st.alpha, "exponents a11,a12,a21,a22 as exact fractions");
    return cmd;
  };

  auto* region = add_channel(add_common(app.add_subcommand(
      "region", "GDoF region: half-spaces and vertices")));
  region->add_flag("--alt-triple-sum", st.alt_triple_sum,
                   "use the alternative first term of the d1+2*a22*d2 bound");

  auto* split = add_channel(add_common(app.add_subcommand(
      "split", "private/common rate-split system, its projection, and witnesses")));
  split->add_option("--point", st.point, "target GDoF pair d1,d2 for a split witness");

  auto* curve = add_common(app.add_subcommand(
      "curve", "symmetric GDoF versus the cross-link exponent"));
  curve->add_option("--antennas", st.antennas, "antenna counts M1,N1,M2,N2");
  curve->add_option("--sweep", st.sweep, "exponent grid as comma-separated fractions");

  auto* dof = add_common(app.add_subcommand(
      "dof", "classical DoF region (all exponents equal)"));
  dof->add_option("--antennas", st.antennas, "antenna counts M1,N1,M2,N2");
  dof->add_flag("--raw", st.raw, "emit all seven bounds before redundancy removal");

  auto* siso = add_common(app.add_subcommand(
      "siso", "single-antenna GDoF region"));
  siso->add_option("--alpha", st.alpha, "exponents a11,a12,a21,a22 as exact fractions");

  auto* mac = add_common(app.add_subcommand(
      "mac", "multiple-access GDoF region for two transmitters"));
  mac->add_option("--antennas", st.antennas, "antenna counts M1,M2,N");
  mac->add_option("--alpha", st.alpha, "second transmitter's SNR exponent");

  auto* tin = add_common(app.add_subcommand(
      "tin", "treat-interference-as-noise GDoF box for a symmetric channel"));
  tin->add_option("--antennas", st.antennas, "antenna counts M,N");
  tin->add_option("--alpha", st.alpha, "cross-link exponent");

  auto* verify = add_channel(add_common(app.add_subcommand(
      "verify", "Monte Carlo slope checks of the piecewise-linear predictions")));
  verify->add_option("--suite", st.suite,
                     "lemma4 (two-term fill), lemma5 (three-term fill), "
                     "theorem1 (all seven region bounds)");
  verify->add_option("--seed", st.seed, "base RNG seed (env GDOF_SEED overrides)");
  verify->add_option("--trials", st.trials, "channel draws per check");
  verify->add_option("--rho-lo", st.rho_lo, "lower SNR of the finite-difference pair");
  verify->add_option("--rho-hi", st.rho_hi, "upper SNR of the finite-difference pair");
  verify->add_option("--tolerance", st.tolerance, "allowed |predicted - estimated|");
  verify->add_flag("--alt-triple-sum", st.alt_triple_sum,
                   "use the alternative first term of the d1+2*a22*d2 bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (region->parsed()) return run_region(region, st);
    if (split->parsed()) return run_split(split, st);
    if (curve->parsed()) return run_curve(curve, st);
    if (dof->parsed()) return run_dof(dof, st);
    if (siso->parsed()) return run_siso(siso, st);
    if (mac->parsed()) return run_mac(mac, st);
    if (tin->parsed()) return run_tin(tin, st);
    if (verify->parsed()) return run_verify(verify, st);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
